import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.integrals as integrals

import enum
import numpy as np


# Stencil used when an operator is applied to a field that is itself a finite difference
NESTED_ORDER = 4


class Convention(enum.Enum):
    """ Which reading of the fractal vector operators is in force """

    # Components carry mu x^(mu-1), i.e. classical partials in physical coordinates
    PAPER_LITERAL = 'paper'
    # Bare Chen partials, i.e. classical operators in mapped coordinates
    MAPPED_CONSISTENT = 'mapped'

    @classmethod
    def parse(cls, value):
        """ Accepts a Convention, 'paper'/'mapped' or the long names """

        if isinstance(value, Convention):
            return value
        aliases = {'paper_literal': 'paper', 'mapped_consistent': 'mapped'}
        return cls(aliases.get(str(value).lower(), str(value).lower()))

    @property
    def label(self):
        """ Gets the long name used in reports """

        return {Convention.PAPER_LITERAL: 'paper_literal', Convention.MAPPED_CONSISTENT: 'mapped_consistent'}[self]


class LaplacianForm(enum.Enum):
    """ Laplace-Chen operator variants """

    COMPOSED = 'composed'
    PAPER_SECOND_ORDER = 'paper_second_order'


def gradient_component(f, axis, point, mu, convention=Convention.MAPPED_CONSISTENT, step=None, order=2):
    """ One component of the gradient under the convention """

    mu = core.as_dimension(mu)
    axis = fields.Axis.parse(axis).index
    value = fields.chen_partial(f, axis, point, mu, step, order)
    if Convention.parse(convention) is Convention.PAPER_LITERAL:
        value = value * mu.density(np.asarray(point[axis], dtype=float))
    return value


def gradient(f, point, mu, convention=Convention.MAPPED_CONSISTENT, step=None, order=2):
    """ Chen gradient; the leading axis of the result indexes the component """

    return np.array([gradient_component(f, axis, point, mu, convention, step, order) for axis in range(3)])


def divergence(W, point, mu, convention=Convention.MAPPED_CONSISTENT, step=None, order=2):
    """ Hausdorff divergence """

    W = fields.as_vector_field(W)
    return sum(gradient_component(W.component(axis), axis, point, mu, convention, step, order) for axis in range(3))


def curl_component(W, axis, point, mu, convention=Convention.MAPPED_CONSISTENT, step=None, order=2):
    """ One component of the Hausdorff curl """

    W = fields.as_vector_field(W)
    i = fields.Axis.parse(axis).index
    j, k = (i + 1) % 3, (i + 2) % 3
    return gradient_component(W.component(k), j, point, mu, convention, step, order) - \
        gradient_component(W.component(j), k, point, mu, convention, step, order)


def curl(W, point, mu, convention=Convention.MAPPED_CONSISTENT, step=None, order=2):
    """ Hausdorff curl """

    return np.array([curl_component(W, axis, point, mu, convention, step, order) for axis in range(3)])


def laplace_chen(f, point, mu, form=LaplacianForm.COMPOSED, convention=Convention.MAPPED_CONSISTENT,
                 step=None, order=2):
    """
    Laplace-Chen operator. `composed` is the divergence of the gradient, expanded with the product
    rule: under the literal convention each axis contributes
    mu^2 x^(2mu-2) f_uu + mu (mu - 1) x^(mu-2) f_u. `paper_second_order` keeps only the
    second-order part mu^2 x^(2mu-2) f_uu. Under the mapped convention both are sum f_uu.
    """

    mu = core.as_dimension(mu)
    form = LaplacianForm(form)
    convention = Convention.parse(convention)

    total = 0.0
    for axis in range(3):
        second = fields.chen_second_partial(f, axis, point, mu, step, order)
        if convention is Convention.MAPPED_CONSISTENT:
            total = total + second
            continue

        x = np.asarray(point[axis], dtype=float)
        total = total + mu.density(x) ** 2 * second
        if form is LaplacianForm.COMPOSED and not mu.classical:
            first = fields.chen_partial(f, axis, point, mu, None, order)
            total = total + mu.mu * (mu.mu - 1.0) * np.power(x, mu.mu - 2.0) * first
    return total


def directional_derivative(f, point, n, mu, convention=Convention.MAPPED_CONSISTENT, step=None):
    """ Hausdorff directional derivative along the unit vector n """

    n = np.asarray(n, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise errors.HausdorffException('normal not normalized')
    return float(np.dot(gradient(f, point, mu, convention, step), n))


def gradient_field(f, mu, convention=Convention.MAPPED_CONSISTENT, order=NESTED_ORDER):
    """ The gradient as a VectorField3D (for fluxes and nested operators) """

    return fields.VectorField3D([
        (lambda axis: lambda x, y, z: gradient_component(f, axis, (x, y, z), mu, convention, order=order))(axis)
        for axis in range(3)
    ])


def curl_field(W, mu, convention=Convention.MAPPED_CONSISTENT, order=NESTED_ORDER):
    """ The curl as a VectorField3D """

    return fields.VectorField3D([
        (lambda axis: lambda x, y, z: curl_component(W, axis, (x, y, z), mu, convention, order=order))(axis)
        for axis in range(3)
    ])


def product_identity_residuals(psi, theta, mu, convention, sample_points):
    """
    Residuals of grad(psi theta) = psi grad theta + theta grad psi and
    div(theta grad psi) = theta lap psi + grad psi . grad theta over the samples
    """

    psi = fields.as_scalar_field(psi)
    theta = fields.as_scalar_field(theta)
    convention = Convention.parse(convention)
    product = fields.ScalarField3D(lambda x, y, z: psi(x, y, z) * theta(x, y, z))
    flux = fields.VectorField3D([
        (lambda axis: lambda x, y, z: theta(x, y, z) *
         gradient_component(psi, axis, (x, y, z), mu, convention, order=NESTED_ORDER))(axis)
        for axis in range(3)
    ])

    gradient_product = 0.0
    divergence_product = 0.0
    for point in sample_points:
        lhs = gradient(product, point, mu, convention)
        rhs = psi(*point) * gradient(theta, point, mu, convention) + \
            theta(*point) * gradient(psi, point, mu, convention)
        gradient_product = max(gradient_product, float(np.max(np.abs(lhs - rhs))))

        lhs = divergence(flux, point, mu, convention, order=NESTED_ORDER)
        rhs = theta(*point) * laplace_chen(psi, point, mu, LaplacianForm.COMPOSED, convention, order=NESTED_ORDER) + \
            np.dot(gradient(psi, point, mu, convention, order=NESTED_ORDER),
                   gradient(theta, point, mu, convention, order=NESTED_ORDER))
        divergence_product = max(divergence_product, abs(float(lhs - rhs)))
    return {'gradient_product': gradient_product, 'divergence_product': divergence_product}


def product_identities_check(psi, theta, mu, convention, sample_points):
    """ Largest residual of both product identities """

    return max(product_identity_residuals(psi, theta, mu, convention, sample_points).values())


def conservative_check(f, path, mu, quad=None):
    """ Circulation of the mapped gradient of f around a closed path (zero for conservative fields) """

    field = gradient_field(f, mu, Convention.MAPPED_CONSISTENT)
    return abs(integrals.line_integral(field, path, mu, quad))

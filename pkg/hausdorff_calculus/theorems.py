import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.helper as helper
import hausdorff_calculus.integrals as integrals
import hausdorff_calculus.vecops as vecops

import dataclasses
import logging
import numpy as np
import pytools.convergence


logger = logging.getLogger(__name__)

POLYNOMIAL_TOLERANCE = 1e-8
TRANSCENDENTAL_TOLERANCE = 1e-6
IDENTITY_TOLERANCE = 1e-7


@dataclasses.dataclass(frozen=True)
class TheoremReport:
    """ Both sides of one identity instance, its residuals and its verdict """

    identity: str
    convention: str
    mu: float
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    asserted: bool
    passed: bool
    convergence_order: float = None
    notes: tuple = ()

    @classmethod
    def build(cls, identity, convention, mu, lhs, rhs, tolerance, asserted=None, convergence_order=None, notes=()):
        """
        Creates a report. An identity passes when |lhs - rhs| <= tolerance * max(1, |lhs|, |rhs|), so
        identities whose sides both vanish are judged absolutely. Rows are asserted under the mapped
        convention, at mu = 1 and for convention-free identities unless told otherwise.
        """

        mu = core.as_dimension(mu)
        if convention is not None:
            convention = vecops.Convention.parse(convention)
        lhs, rhs = float(lhs), float(rhs)
        abs_residual = abs(lhs - rhs)
        rel_residual = abs_residual / max(abs(lhs), abs(rhs), 1e-300)
        passed = bool(abs_residual <= tolerance * max(1.0, abs(lhs), abs(rhs)))
        if asserted is None:
            asserted = convention is not vecops.Convention.PAPER_LITERAL or mu.classical
        return cls(identity=identity, convention=convention.label if convention is not None else 'none',
                   mu=mu.mu, lhs=lhs, rhs=rhs, abs_residual=abs_residual, rel_residual=rel_residual,
                   tolerance=tolerance, asserted=bool(asserted), passed=passed,
                   convergence_order=convergence_order, notes=tuple(notes))

    @classmethod
    def at_least(cls, identity, convention, mu, value, bound, asserted=None, notes=()):
        """ Creates a report that passes when `value` reaches `bound`; the residual is the shortfall """

        mu = core.as_dimension(mu)
        convention = vecops.Convention.parse(convention)
        if value is None:
            value, notes = 0.0, tuple(notes) + ('no measurable value',)
        value = float(value)
        shortfall = max(0.0, float(bound) - value)
        if asserted is None:
            asserted = convention is not vecops.Convention.PAPER_LITERAL or mu.classical
        return cls(identity=identity, convention=convention.label, mu=mu.mu, lhs=value, rhs=float(bound),
                   abs_residual=shortfall, rel_residual=shortfall / max(abs(float(bound)), 1e-300), tolerance=0.0,
                   asserted=bool(asserted), passed=value >= bound, notes=tuple(notes))

    @property
    def failed(self):
        """ Gets whether this row is asserted and did not pass """

        return self.asserted and not self.passed

    @property
    def sort_key(self):
        """ Gets the order-stable sort key (identity, mu, convention) """

        return (self.identity, self.mu, self.convention)

    def to_dict(self):
        """ Gets the report as a plain dictionary """

        data = dataclasses.asdict(self)
        data['notes'] = list(self.notes)
        return data


def tolerance_for(*fields_):
    """ Gets the pass tolerance for identities built from the given fields """

    if all(getattr(f, 'polynomial', False) for f in fields_):
        return POLYNOMIAL_TOLERANCE
    return TRANSCENDENTAL_TOLERANCE


def _levels(quad, refine):
    quad = quad or integrals.DEFAULT_QUADRATURE
    if not refine:
        return [quad]
    return [quad, quad.refined(2), quad.refined(4)]


def evaluate(identity, convention, mu, sides, quad=None, refine=False, tolerance=POLYNOMIAL_TOLERANCE, asserted=None,
             notes=()):
    """ Evaluates `sides(quad)` on one or three levels and builds the report from the base level """

    results = [sides(level) for level in _levels(quad, refine)]
    order = None
    if refine:
        order = helper.richardson_order([lhs - rhs for lhs, rhs in results])
    lhs, rhs = results[0]
    report = TheoremReport.build(identity, convention, mu, lhs, rhs, tolerance, asserted, order, notes)
    logger.debug('%s [%s, mu=%s]: lhs=%r rhs=%r', identity, report.convention, report.mu, lhs, rhs)
    return report


def _scalar(func):
    return fields.ScalarField3D(func)


def gauss_like(W, box, mu=None, convention=vecops.Convention.MAPPED_CONSISTENT, quad=None, refine=False,
               tolerance=None):
    """ Volume integral of the divergence against the outward flux through the box boundary """

    W = fields.as_vector_field(W)
    mu = core.as_dimension(mu if mu is not None else box.mu)
    convention = vecops.Convention.parse(convention)
    divergence = _scalar(lambda x, y, z: vecops.divergence(W, (x, y, z), mu, convention, order=vecops.NESTED_ORDER))

    def sides(level):
        return integrals.volume_integral(divergence, box, mu, level), integrals.flux_closed(W, box, mu, level)

    return evaluate('gauss_like', convention, mu, sides, quad, refine, tolerance or tolerance_for(W))


def _curl_flux(W, region, mu, convention, level):
    normal = _scalar(lambda x, y, z: vecops.curl_component(W, region.normal_axis, (x, y, z), mu, convention,
                                                            order=vecops.NESTED_ORDER))
    return region.orientation * integrals.double_integral(normal, region, mu, level)


def stokes_like(W, surface, mu=None, convention=vecops.Convention.MAPPED_CONSISTENT, quad=None, refine=False,
                tolerance=None):
    """ Flux of the curl through a rectangle against the circulation around its boundary """

    W = fields.as_vector_field(W)
    mu = core.as_dimension(mu if mu is not None else surface.mu)
    convention = vecops.Convention.parse(convention)
    surface = dataclasses.replace(surface, mu=mu)

    def sides(level):
        return _curl_flux(W, surface, mu, convention, level), \
            integrals.line_integral(W, surface.boundary(), mu, level)

    return evaluate('stokes_like', convention, mu, sides, quad, refine, tolerance or tolerance_for(W))


def green_like(T, region, mu=None, convention=vecops.Convention.MAPPED_CONSISTENT, quad=None, refine=False,
               tolerance=None):
    """ Contour integral around an xy-rectangle against the area integral of the planar curl """

    T = fields.as_vector_field(T)
    if fields.Plane(region.plane) is not fields.Plane.XY:
        raise errors.HausdorffException('green-like form needs a rectangle in the xy-plane')
    mu = core.as_dimension(mu if mu is not None else region.mu)
    convention = vecops.Convention.parse(convention)
    region = dataclasses.replace(region, mu=mu)

    # The field must be planar on the region
    (a1, b1), (a2, b2) = region.first, region.second
    samples = region.point(np.linspace(a1, b1, 5), np.linspace(a2, b2, 5))
    if np.any(np.asarray(T.component(2)(*samples)) != 0.0):
        raise errors.HausdorffException('green-like form needs a field with zero z-component')

    def sides(level):
        return integrals.line_integral(T, region.boundary(), mu, level), \
            _curl_flux(T, region, mu, convention, level)

    return evaluate('green_like', convention, mu, sides, quad, refine, tolerance or tolerance_for(T))


def green_identity(kind, psi, theta, box, mu=None, convention=vecops.Convention.MAPPED_CONSISTENT, quad=None,
                   refine=False, tolerance=None):
    """
    Green-like identities over a box. first: int (theta lap psi + grad psi . grad theta) dV against
    the flux of theta grad psi; first_swapped exchanges psi and theta; second: int (theta lap psi -
    psi lap theta) dV against the flux of theta grad psi - psi grad theta. The Laplacian is composed.
    """

    if kind not in ('first', 'first_swapped', 'second'):
        raise errors.HausdorffException('unknown Green identity {}'.format(kind))
    psi = fields.as_scalar_field(psi)
    theta = fields.as_scalar_field(theta)
    if kind == 'first_swapped':
        psi, theta = theta, psi
    mu = core.as_dimension(mu if mu is not None else box.mu)
    convention = vecops.Convention.parse(convention)
    order = vecops.NESTED_ORDER

    def laplacian(f, point):
        return vecops.laplace_chen(f, point, mu, vecops.LaplacianForm.COMPOSED, convention, order=order)

    def grad(f, axis, point):
        return vecops.gradient_component(f, axis, point, mu, convention, order=order)

    def cross_term(x, y, z):
        point = (x, y, z)
        return sum(grad(psi, axis, point) * grad(theta, axis, point) for axis in range(3))

    if kind == 'second':
        volume = _scalar(lambda x, y, z: theta(x, y, z) * laplacian(psi, (x, y, z)) -
                         psi(x, y, z) * laplacian(theta, (x, y, z)))
        flux = fields.VectorField3D([
            (lambda axis: lambda x, y, z: theta(x, y, z) * grad(psi, axis, (x, y, z)) -
             psi(x, y, z) * grad(theta, axis, (x, y, z)))(axis)
            for axis in range(3)
        ])
    else:
        volume = _scalar(lambda x, y, z: theta(x, y, z) * laplacian(psi, (x, y, z)) + cross_term(x, y, z))
        flux = fields.VectorField3D([
            (lambda axis: lambda x, y, z: theta(x, y, z) * grad(psi, axis, (x, y, z)))(axis)
            for axis in range(3)
        ])

    def sides(level):
        return integrals.volume_integral(volume, box, mu, level), integrals.flux_closed(flux, box, mu, level)

    if tolerance is None:
        tolerance = IDENTITY_TOLERANCE if psi.polynomial and theta.polynomial else TRANSCENDENTAL_TOLERANCE
    return evaluate('green_identity_{}'.format(kind), convention, mu, sides, quad, refine, tolerance)


def _shrinking_boxes(point, mu, halfwidths):
    mu = core.as_dimension(mu)
    center = [float(mu.map(c)) for c in point]
    for delta in halfwidths:
        if min(center) - delta <= 0.0:
            raise errors.HausdorffException('box leaves the positive orthant')
        yield delta, fields.BoxDomain.from_mapped([(c - delta, c + delta) for c in center], mu)


def divergence_flux_quotient(W, point, mu, box_halfwidths, quad=None):
    """ Outward flux per unit fractal volume over boxes of the given mapped half-widths """

    W = fields.as_vector_field(W)
    quad = quad or integrals.QuadratureSpec(8, 1)
    return [integrals.flux_closed(W, box, box.mu, quad) / box.measure
            for _, box in _shrinking_boxes(point, mu, box_halfwidths)]


def quotient_order(estimates, halfwidths, target):
    """ Observed order at which quotient estimates approach `target` as the half-width shrinks """

    recorder = pytools.convergence.EOCRecorder()
    errors_ = [abs(float(estimate) - float(target)) for estimate in estimates]
    for delta, error in zip(halfwidths, errors_):
        recorder.add_data_point(delta, error)
    # Exact estimates have no measurable order
    if len(errors_) < 2 or min(errors_) <= 0.0:
        return None
    return float(recorder.order_estimate())


def curl_flux_quotient(W, point, mu, box_halfwidths, quad=None):
    """ Closed-surface integral of n x W per unit fractal volume; each estimate is a 3-vector """

    W = fields.as_vector_field(W)
    quad = quad or integrals.QuadratureSpec(8, 1)
    estimates = []
    for _, box in _shrinking_boxes(point, mu, box_halfwidths):
        total = np.zeros(3)
        for face in box.faces():
            k = face.normal_axis
            j, i = (k + 1) % 3, (k + 2) % 3
            # e_k x W = W_j e_i - W_i e_j for the cyclic triple (k, j, i)
            total[i] += face.orientation * integrals.double_integral(W.component(j), face, box.mu, quad)
            total[j] -= face.orientation * integrals.double_integral(W.component(i), face, box.mu, quad)
        estimates.append(total / box.measure)
    return estimates


def curl_circulation_quotient(W, point, mu, halfwidths, axis='z', quad=None):
    """ Circulation per unit fractal area around squares normal to `axis` """

    W = fields.as_vector_field(W)
    mu = core.as_dimension(mu)
    quad = quad or integrals.QuadratureSpec(8, 1)
    normal = fields.Axis.parse(axis).index
    plane = fields.Plane.normal_to(normal)
    center = [float(mu.map(c)) for c in point]

    estimates = []
    for delta in halfwidths:
        if min(center[i] for i in plane.axes) - delta <= 0.0:
            raise errors.HausdorffException('square leaves the positive orthant')
        first, second = ((float(mu.unmap(center[i] - delta)), float(mu.unmap(center[i] + delta)))
                         for i in plane.axes)
        square = fields.RectangleRegion(plane, first, second, point[normal], 1, mu)
        estimates.append(integrals.line_integral(W, square.boundary(), mu, quad) / square.area)
    return estimates

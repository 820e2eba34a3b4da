import hausdorff_calculus.core as core
import hausdorff_calculus.field_factory as field_factory
import hausdorff_calculus.fields as fields
import hausdorff_calculus.flowpde as flowpde
import hausdorff_calculus.theorems as theorems
import hausdorff_calculus.vecops as vecops

import abc
import dataclasses
import numpy as np
import zlib


CORPUS_SIZE = 20
CORPUS_FAMILIES = ('polynomial', 'trigonometric', 'exponential')
FIELD_FAMILIES = ('polynomial', 'trigonometric')

# Mapped-coordinate geometry shared by the theorem entries
MAPPED_BOX = ((1.0, 4.0), (1.0, 4.0), (1.0, 4.0))
MAPPED_RECTANGLE = ((1.0, 2.0), (1.0, 3.0))
QUOTIENT_HALFWIDTHS = (0.2, 0.1, 0.05)
# Spans a decade so the fitted order of the quotient is meaningful
ORDER_HALFWIDTHS = (0.4, 0.2, 0.1, 0.04)
MIN_QUOTIENT_ORDER = 1.0


def _mapped_power(axis, mu, power=1):
    """ The mapped coordinate (x_axis^mu)^power as a polynomial field """

    def value(x, y, z):
        return mu.map(np.asarray((x, y, z)[axis], dtype=float)) ** power

    return fields.ScalarField3D(value, polynomial=True)


def _zero():
    return fields.ScalarField3D(lambda x, y, z: 0.0, polynomial=True)


def _box(mu):
    return fields.BoxDomain.from_mapped(MAPPED_BOX, mu)


def _rectangle(mu, plane=fields.Plane.XY):
    (a1, b1), (a2, b2) = MAPPED_RECTANGLE
    return fields.RectangleRegion(plane, (float(mu.unmap(a1)), float(mu.unmap(b1))),
                                  (float(mu.unmap(a2)), float(mu.unmap(b2))), 1.0, 1, mu)


def _renamed(report, identity):
    return dataclasses.replace(report, identity=identity)


class _AbstractSuiteEntry(abc.ABC):
    """ Defines an abstract verification suite entry """

    # Entries without a convention run once per fractal dimension
    uses_convention = True

    def __init__(self, identity, seed=0):
        self.__identity = identity
        self.__seed = seed

    @property
    def identity(self):
        """ Gets the identity id of the entry """

        return self.__identity

    def rng(self, mu):
        """ Gets the generator of this entry's fields; independent of execution order """

        return np.random.default_rng([self.__seed, zlib.crc32(self.__identity.encode()), int(mu.mu * 1e6)])

    @abc.abstractmethod
    def run(self, mu, convention, quad):
        """ Runs the entry and returns its reports """

        pass

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.__identity)


class AlgebraicRuleEntry(_AbstractSuiteEntry):
    """ Sum, constant multiple, product, quotient, chain and parts rules over a sample set """

    uses_convention = False

    def __init__(self, rule, seed=0):
        super(AlgebraicRuleEntry, self).__init__('rule_{}'.format(core.Rule(rule).value), seed)
        self.__rule = core.Rule(rule)

    def run(self, mu, convention, quad):
        rng = self.rng(mu)
        samples = np.sort(rng.uniform(0.5, 1.5, size=10))
        if self.__rule is core.Rule.CHAIN:
            f1 = core.AnalyticFunction1D(np.sin, np.cos, name='sin')
        else:
            f1 = field_factory.get_field_factory('trigonometric').function(rng, mu)
        # Exponentials never vanish, which keeps the quotient rule defined
        f2 = field_factory.get_field_factory('exponential').function(rng, mu)
        lhs, rhs = core.rule_sides(self.__rule, f1, f2, mu, samples)
        worst = int(np.argmax(np.abs(lhs - rhs)))
        return [theorems.TheoremReport.build(self.identity, None, mu, lhs[worst], rhs[worst],
                                             theorems.POLYNOMIAL_TOLERANCE,
                                             notes=('worst of {} samples'.format(len(lhs)),))]


class FundamentalTheoremEntry(_AbstractSuiteEntry):
    """ Both fundamental theorems over the seeded function corpus; the worst function is reported """

    uses_convention = False

    def __init__(self, seed=0, size=CORPUS_SIZE):
        super(FundamentalTheoremEntry, self).__init__('fundamental_theorem', seed)
        self.__size = size

    def run(self, mu, convention, quad):
        rng = self.rng(mu)
        worst = [None, None]
        for index in range(self.__size):
            family = CORPUS_FAMILIES[index % len(CORPUS_FAMILIES)]
            f = field_factory.get_field_factory(family).function(rng, mu)
            a, t = np.sort(rng.uniform(0.5, 1.5, size=2))
            for which, (lhs, rhs) in enumerate(core.fundamental_theorem_sides(f, mu, a, t)):
                if worst[which] is None or abs(lhs - rhs) > abs(worst[which][0] - worst[which][1]):
                    worst[which] = (lhs, rhs)

        notes = ('worst of {} functions'.format(self.__size),)
        return [theorems.TheoremReport.build('{}_{}'.format(self.identity, name), None, mu, lhs, rhs,
                                             theorems.POLYNOMIAL_TOLERANCE, notes=notes)
                for name, (lhs, rhs) in zip(('first', 'second'), worst)]


class ProductIdentityEntry(_AbstractSuiteEntry):
    """ Gradient and divergence product identities at seeded points; the sides are residual and zero """

    def __init__(self, family, seed=0):
        super(ProductIdentityEntry, self).__init__('product_identity:{}'.format(family), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        rng = self.rng(mu)
        factory = field_factory.get_field_factory(self.__family)
        psi, theta = factory.scalar(rng, mu), factory.scalar(rng, mu)
        points = [tuple(mu.unmap(rng.uniform(1.0, 2.0, size=3))) for _ in range(5)]
        residuals = vecops.product_identity_residuals(psi, theta, mu, convention, points)
        tolerance = theorems.TRANSCENDENTAL_TOLERANCE
        return [theorems.TheoremReport.build('{}_{}'.format(name, self.__family), convention, mu, residual, 0.0,
                                             tolerance, asserted=True, notes=('max over 5 points',))
                for name, residual in sorted(residuals.items())]


class GaussEntry(_AbstractSuiteEntry):
    """ Gauss-like theorem; the anchor field (x^mu, y^mu, z^mu) has volume and flux 81 """

    def __init__(self, family=None, seed=0):
        super(GaussEntry, self).__init__('gauss_like:{}'.format(family or 'anchor'), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        if self.__family is None:
            W = fields.VectorField3D([_mapped_power(axis, mu) for axis in range(3)])
        else:
            W = field_factory.get_field_factory(self.__family).vector(self.rng(mu), mu)
        return [_renamed(theorems.gauss_like(W, _box(mu), mu, convention, quad), self.identity)]


class StokesEntry(_AbstractSuiteEntry):
    """ Stokes-like theorem on coordinate rectangles; the anchor field is (0, x^mu, 0) """

    def __init__(self, family=None, seed=0):
        super(StokesEntry, self).__init__('stokes_like:{}'.format(family or 'anchor'), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        if self.__family is None:
            W = fields.VectorField3D([_zero(), _mapped_power(0, mu), _zero()])
            planes = [fields.Plane.XY]
        else:
            W = field_factory.get_field_factory(self.__family).vector(self.rng(mu), mu)
            planes = [fields.Plane.XY, fields.Plane.YZ]
        return [_renamed(theorems.stokes_like(W, _rectangle(mu, plane), mu, convention, quad),
                         '{}:{}'.format(self.identity, plane.value))
                for plane in planes]


class GreenEntry(_AbstractSuiteEntry):
    """ Green-like theorem in the xy-plane; the anchor field is (0, x^mu, 0) """

    def __init__(self, family=None, seed=0):
        super(GreenEntry, self).__init__('green_like:{}'.format(family or 'anchor'), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        if self.__family is None:
            T = fields.VectorField3D([_zero(), _mapped_power(0, mu), _zero()])
        else:
            factory = field_factory.get_field_factory(self.__family)
            rng = self.rng(mu)
            T = fields.VectorField3D([factory.scalar(rng, mu), factory.scalar(rng, mu), _zero()])
        return [_renamed(theorems.green_like(T, _rectangle(mu), mu, convention, quad), self.identity)]


class GreenIdentityEntry(_AbstractSuiteEntry):
    """ Both Green-like identities; the anchor pair is psi = x^mu, theta = y^mu """

    KINDS = ('first', 'first_swapped', 'second')

    def __init__(self, family=None, seed=0):
        super(GreenIdentityEntry, self).__init__('green_identity:{}'.format(family or 'anchor'), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        if self.__family is None:
            psi, theta = _mapped_power(0, mu), _mapped_power(1, mu)
        else:
            factory = field_factory.get_field_factory(self.__family)
            rng = self.rng(mu)
            psi, theta = factory.scalar(rng, mu), factory.scalar(rng, mu)
        return [_renamed(theorems.green_identity(kind, psi, theta, _box(mu), mu, convention, quad),
                         '{}:{}'.format(self.identity, kind))
                for kind in self.KINDS]


class TransportEntry(_AbstractSuiteEntry):
    """ Transport kernel with a divergence-free velocity; the anchor velocity is (y^mu, 0, 0) """

    def __init__(self, family=None, seed=0):
        super(TransportEntry, self).__init__('transport_kernel:{}'.format(family or 'anchor'), seed)
        self.__family = family

    def run(self, mu, convention, quad):
        rng = self.rng(mu)
        factory = field_factory.get_field_factory(self.__family or 'polynomial')
        G = factory.scalar(rng, mu)
        if self.__family is None:
            upsilon = fields.VectorField3D([_mapped_power(1, mu), _zero(), _zero()])
        else:
            upsilon = factory.solenoidal(rng, mu)
        return [_renamed(flowpde.transport_identity_check(G, upsilon, _box(mu), mu, convention, quad),
                         self.identity)]


class FluxQuotientEntry(_AbstractSuiteEntry):
    """
    Flux per unit fractal volume around (4, 4, 4) against the divergence: exact for (x^mu, y^mu, z^mu),
    and converging at an observed order of at least one for the cubic field (x^3mu, y^3mu, z^3mu)
    """

    POINT = (4.0, 4.0, 4.0)

    def __init__(self, seed=0):
        super(FluxQuotientEntry, self).__init__('divergence_flux_quotient', seed)

    def run(self, mu, convention, quad):
        point = self.POINT
        W = fields.VectorField3D([_mapped_power(axis, mu) for axis in range(3)])
        estimates = theorems.divergence_flux_quotient(W, point, mu, QUOTIENT_HALFWIDTHS)
        divergence = vecops.divergence(W, point, mu, convention)
        exact = theorems.TheoremReport.build(self.identity, convention, mu, estimates[-1], divergence,
                                             theorems.POLYNOMIAL_TOLERANCE,
                                             notes=('estimates {}'.format(
                                                 ', '.join('{:.12g}'.format(e) for e in estimates)),))

        cubic = fields.VectorField3D([_mapped_power(axis, mu, 3) for axis in range(3)])
        estimates = theorems.divergence_flux_quotient(cubic, point, mu, ORDER_HALFWIDTHS)
        divergence = vecops.divergence(cubic, point, mu, convention)
        order = theorems.quotient_order(estimates, ORDER_HALFWIDTHS, divergence)
        converging = theorems.TheoremReport.at_least(self.identity + '_order', convention, mu, order,
                                                     MIN_QUOTIENT_ORDER,
                                                     notes=('estimates {}'.format(
                                                         ', '.join('{:.12g}'.format(e) for e in estimates)),))
        return [exact, converging]


def build_suite(seed=0):
    """ Assembles the seeded verification suite """

    entries = [AlgebraicRuleEntry(rule, seed) for rule in core.Rule]
    entries.append(FundamentalTheoremEntry(seed))
    for family in FIELD_FAMILIES:
        entries.append(ProductIdentityEntry(family, seed))
    for family in (None,) + FIELD_FAMILIES:
        entries.append(GaussEntry(family, seed))
        entries.append(StokesEntry(family, seed))
        entries.append(GreenEntry(family, seed))
        entries.append(GreenIdentityEntry(family, seed))
    entries.append(TransportEntry(None, seed))
    entries.append(TransportEntry('polynomial', seed))
    entries.append(FluxQuotientEntry(seed))
    return entries

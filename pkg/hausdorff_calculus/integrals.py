import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.helper as helper

import dataclasses
import logging
import numpy as np


logger = logging.getLogger(__name__)

_SUPPORTED_POINTS = (4, 8, 16, 32)


@dataclasses.dataclass(frozen=True)
class QuadratureSpec:
    """ Composite Gauss-Legendre rule per axis and the evaluation budget it must respect """

    points: int = core.DEFAULT_POINTS
    panels: int = core.DEFAULT_PANELS
    budget: int = 10 ** 8

    def __post_init__(self):
        if self.points not in _SUPPORTED_POINTS:
            raise errors.HausdorffException('points per panel must be one of {}, got {}'.format(
                _SUPPORTED_POINTS, self.points))
        if self.panels < 1:
            raise errors.HausdorffException('at least one panel is required, got {}'.format(self.panels))

    @classmethod
    def parse(cls, text, budget=10 ** 8):
        """ Parses '<points>x<panels>' """

        try:
            points, panels = (int(part) for part in str(text).lower().split('x'))
        except ValueError:
            raise errors.HausdorffException('quadrature must look like <points>x<panels>, got {}'.format(text))
        return cls(points, panels, budget)

    @property
    def label(self):
        """ Gets the '<points>x<panels>' form """

        return '{}x{}'.format(self.points, self.panels)

    def refined(self, factor=2):
        """ Gets the spec with `factor` times as many panels """

        return dataclasses.replace(self, panels=self.panels * factor)

    def evaluations(self, dimension):
        """ Gets the number of integrand evaluations in `dimension` dimensions """

        return (self.points * self.panels) ** dimension

    def check_budget(self, dimension):
        """ Raises when a `dimension`-D rule would exceed the budget """

        count = self.evaluations(dimension)
        if count > self.budget:
            raise errors.HausdorffException('quadrature budget exceeded ({} evaluations attempted)'.format(count))
        logger.debug('%d-D quadrature with %d evaluations', dimension, count)

    def rule(self, a, b):
        """ Gets nodes and weights on [a, b] """

        return helper.composite_rule(a, b, self.points, self.panels)


DEFAULT_QUADRATURE = QuadratureSpec()


def _mu(mu, geometry):
    if mu is not None:
        return core.as_dimension(mu)
    return geometry.mu


def _curve_integral(T, curve, mu, quad):
    nodes, weights = quad.rule(*curve.interval)
    position = curve.position(nodes)
    element = fields.line_element(mu, position, curve.velocity(nodes))
    with np.errstate(invalid='ignore'):
        integrand = np.sum(T(*position) * element, axis=0)
    if not np.all(np.isfinite(integrand)):
        raise errors.HausdorffException('singular curve point')
    return float(np.dot(weights, integrand))


def line_integral(T, curve, mu=None, quad=None):
    """
    Line Hausdorff integral mu int T_x x^(mu-1) dx + T_y y^(mu-1) dy + T_z z^(mu-1) dz along a curve
    or along a sequence of curves forming a path
    """

    T = fields.as_vector_field(T)
    quad = quad or DEFAULT_QUADRATURE
    quad.check_budget(1)
    if isinstance(curve, fields.ParametricCurve):
        return _curve_integral(T, curve, _mu(mu, curve), quad)
    return float(sum(_curve_integral(T, piece, _mu(mu, piece), quad) for piece in curve))


def _ordering(ordering, letters):
    ordering = ordering or letters
    if sorted(ordering) != sorted(letters):
        raise errors.HausdorffException('ordering {} must be a permutation of {}'.format(ordering, letters))
    return [letters.index(letter) for letter in ordering]


def double_integral(M, region, mu=None, quad=None, ordering=None):
    """
    Double Hausdorff integral of a scalar field over a rectangle, mu^2 int int M a^(mu-1) b^(mu-1),
    computed over the mapped rectangle; `ordering` names the in-plane axis summed first
    """

    M = fields.as_scalar_field(M)
    mu = _mu(mu, region)
    quad = quad or DEFAULT_QUADRATURE
    quad.check_budget(2)
    region = dataclasses.replace(region, mu=mu)

    (a1, b1), (a2, b2) = region.mapped_bounds
    nodes1, weights1 = quad.rule(a1, b1)
    nodes2, weights2 = quad.rule(a2, b2)
    first, second = np.meshgrid(mu.unmap(nodes1), mu.unmap(nodes2), indexing='ij')
    values = np.asarray(M(*region.point(first, second)), dtype=float)
    return helper.ordered_sum(values, [weights1, weights2], _ordering(ordering, region.plane.value))


def volume_integral(N, box, mu=None, quad=None, ordering=None):
    """ Volume Hausdorff integral over a box, computed over the mapped box in the given axis order """

    N = fields.as_scalar_field(N)
    mu = _mu(mu, box)
    quad = quad or DEFAULT_QUADRATURE
    quad.check_budget(3)

    rules = [quad.rule(float(mu.map(a)), float(mu.map(b))) for a, b in box.bounds]
    grids = np.meshgrid(*[mu.unmap(nodes) for nodes, _ in rules], indexing='ij')
    values = np.asarray(N(*grids), dtype=float)
    return helper.ordered_sum(values, [weights for _, weights in rules], _ordering(ordering, 'xyz'))


def surface_integral(W, surface, mu=None, quad=None):
    """ Surface Hausdorff integral of W . dS over a rectangle, or outward over a box boundary """

    if isinstance(surface, fields.BoxDomain):
        return flux_closed(W, surface, mu, quad)

    W = fields.as_vector_field(W)
    normal = W.component(surface.normal_axis)
    return surface.orientation * double_integral(normal, surface, mu, quad)


def flux_closed(W, box, mu=None, quad=None):
    """ Outward flux through the six faces of a box """

    mu = _mu(mu, box)
    return float(sum(surface_integral(W, face, mu, quad) for face in box.faces()))

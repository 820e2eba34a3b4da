import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.helper as helper

import dataclasses
import enum
import math
import numbers
import numpy as np


class Axis(enum.Enum):
    """ Cartesian axis """

    X = 'x'
    Y = 'y'
    Z = 'z'

    @property
    def index(self):
        """ Gets the axis index (0, 1, 2) """

        return 'xyz'.index(self.value)

    @classmethod
    def parse(cls, axis):
        """ Accepts an Axis, a letter or an index """

        if isinstance(axis, Axis):
            return axis
        if isinstance(axis, (int, np.integer)):
            return list(cls)[int(axis)]
        return cls(str(axis).lower())


class Plane(enum.Enum):
    """ Coordinate plane holding a rectangle """

    XY = 'xy'
    YZ = 'yz'
    XZ = 'xz'

    @property
    def axes(self):
        """ Gets the in-plane axis indices in name order """

        return tuple('xyz'.index(letter) for letter in self.value)

    @property
    def normal_axis(self):
        """ Gets the index of the axis normal to the plane """

        return ({0, 1, 2} - set(self.axes)).pop()

    @property
    def right_handed_axes(self):
        """ Gets the in-plane axes (p, q) ordered so that e_p x e_q is the positive normal """

        return {Plane.XY: (0, 1), Plane.YZ: (1, 2), Plane.XZ: (2, 0)}[self]

    @classmethod
    def normal_to(cls, axis):
        """ Gets the plane whose normal is `axis` """

        return {0: Plane.YZ, 1: Plane.XZ, 2: Plane.XY}[Axis.parse(axis).index]


def _coordinates(point):
    coords = [np.asarray(c, dtype=float) for c in point]
    if len(coords) != 3:
        raise errors.HausdorffException('a point needs three coordinates, got {}'.format(len(coords)))
    return coords


def _as_result(value):
    value = np.asarray(value, dtype=float)
    if value.ndim == 0:
        return float(value)
    return value


class ScalarField3D(object):
    """ Scalar field of (x, y, z) with optional exact classical partial derivatives """

    def __init__(self, func, partials=None, domain=None, name=None, polynomial=False):
        """ Creates a new scalar field; `domain` is ((ax, bx), (ay, by), (az, bz)) or None """

        super(ScalarField3D, self).__init__()

        if partials is not None and len(partials) != 3:
            raise errors.HausdorffException('exact partials need three components')

        self.__func = func
        self.__partials = tuple(partials) if partials is not None else None
        self.__domain = tuple((float(a), float(b)) for a, b in domain) if domain is not None else None
        self.__name = name
        self.__polynomial = polynomial

    def __call__(self, x, y, z):
        """ Evaluates the field (numpy broadcasting over the coordinates) """

        return helper.broadcast_value(self.__func(x, y, z), x, y, z)

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    @property
    def domain(self):
        """ Gets the declared domain bounds or None for the whole positive orthant """

        return self.__domain

    @property
    def polynomial(self):
        """ Gets whether the field is polynomial in mapped coordinates """

        return self.__polynomial

    @property
    def has_partials(self):
        """ Gets whether exact classical partials are available """

        return self.__partials is not None

    def partial(self, axis):
        """ Gets the exact classical partial along `axis` as a callable, or None """

        if self.__partials is None:
            return None
        return self.__partials[Axis.parse(axis).index]

    def contains(self, coords):
        """ Gets whether every point lies in the declared domain """

        if self.__domain is None:
            return True
        return all(np.all((c >= a) & (c <= b)) for c, (a, b) in zip(coords, self.__domain))

    def __add__(self, other):
        return ScalarField3D(lambda x, y, z: self(x, y, z) + other(x, y, z),
                             polynomial=self.polynomial and getattr(other, 'polynomial', False))

    def __mul__(self, other):
        return ScalarField3D(lambda x, y, z: self(x, y, z) * other(x, y, z),
                             polynomial=self.polynomial and getattr(other, 'polynomial', False))


def as_scalar_field(f):
    """ Wraps a plain callable of (x, y, z), or a constant, into a ScalarField3D """

    if isinstance(f, ScalarField3D):
        return f
    if isinstance(f, numbers.Real):
        value = float(f)
        return ScalarField3D(lambda x, y, z: value, name='{:g}'.format(value), polynomial=True)
    return ScalarField3D(f)


class VectorField3D(object):
    """ Vector field with three scalar components """

    def __init__(self, components, name=None):
        """ Creates a new vector field from three callables or scalar fields """

        super(VectorField3D, self).__init__()

        if len(components) != 3:
            raise errors.HausdorffException('a vector field needs three components')
        self.__components = tuple(as_scalar_field(c) for c in components)
        self.__name = name

    def __call__(self, x, y, z):
        """ Evaluates all components; the leading axis indexes the component """

        return np.stack([np.asarray(c(x, y, z), dtype=float) for c in self.__components])

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    @property
    def components(self):
        """ Gets the component fields """

        return self.__components

    @property
    def polynomial(self):
        """ Gets whether every component is polynomial in mapped coordinates """

        return all(c.polynomial for c in self.__components)

    def component(self, axis):
        """ Gets one component as a scalar field """

        return self.__components[Axis.parse(axis).index]


def as_vector_field(field):
    """ Wraps a triple of callables into a VectorField3D """

    if isinstance(field, VectorField3D):
        return field
    return VectorField3D(field)


class SpaceTimeScalarField(object):
    """ Scalar field of (t, x, y, z); the time derivative is the classical one """

    def __init__(self, func, name=None, polynomial=False):
        """ Creates a new space-time scalar field """

        super(SpaceTimeScalarField, self).__init__()

        self.__func = func
        self.__name = name
        self.__polynomial = polynomial

    def __call__(self, t, x, y, z):
        """ Evaluates the field """

        return helper.broadcast_value(self.__func(t, x, y, z), t, x, y, z)

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    def at(self, time):
        """ Gets the snapshot at `time` as a ScalarField3D """

        return ScalarField3D(lambda x, y, z: self(time, x, y, z), name=self.__name, polynomial=self.__polynomial)

    def time_derivative(self, point, time, step=None):
        """ Central difference of the field in time """

        x, y, z = _coordinates(point)
        h = step if step is not None else 1e-5 * max(1.0, abs(time))
        return _as_result(helper.central_difference(lambda s: self(s, x, y, z), time, h))

    @classmethod
    def steady(cls, field):
        """ Lifts a ScalarField3D (or callable) to a time-independent space-time field """

        field = as_scalar_field(field)
        return cls(lambda t, x, y, z: field(x, y, z), name=field.name, polynomial=field.polynomial)


class SpaceTimeVectorField(object):
    """ Vector field of (t, x, y, z) """

    def __init__(self, components, name=None):
        """ Creates a new space-time vector field from three callables of (t, x, y, z) """

        super(SpaceTimeVectorField, self).__init__()

        if len(components) != 3:
            raise errors.HausdorffException('a vector field needs three components')
        self.__components = tuple(c if isinstance(c, SpaceTimeScalarField) else SpaceTimeScalarField(c)
                                  for c in components)
        self.__name = name

    def __call__(self, t, x, y, z):
        """ Evaluates all components """

        return np.stack([np.asarray(c(t, x, y, z), dtype=float) for c in self.__components])

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    def component(self, axis):
        """ Gets one component """

        return self.__components[Axis.parse(axis).index]

    def at(self, time):
        """ Gets the snapshot at `time` as a VectorField3D """

        return VectorField3D([c.at(time) for c in self.__components], name=self.__name)

    def time_derivative(self, point, time, step=None):
        """ Central difference of every component in time """

        return np.array([c.time_derivative(point, time, step) for c in self.__components])

    @classmethod
    def steady(cls, field):
        """ Lifts a VectorField3D to a time-independent space-time field """

        field = as_vector_field(field)
        return cls([SpaceTimeScalarField.steady(c) for c in field.components], name=field.name)


def at_time(field, time):
    """ Snapshot of a space-time field; steady fields are returned unchanged """

    if isinstance(field, (SpaceTimeScalarField, SpaceTimeVectorField)):
        return field.at(time)
    return field


def _ordered_pair(pair, what):
    a, b = float(pair[0]), float(pair[1])
    if not a < b:
        raise errors.HausdorffException('{} bounds must be ordered, got [{}, {}]'.format(what, a, b))
    if a < 0.0:
        raise errors.HausdorffException('negative abscissa')
    return (a, b)


@dataclasses.dataclass(frozen=True)
class BoxDomain:
    """ Axis-aligned box [ax, bx] x [ay, by] x [az, bz] carrying dV = mu^3 x^(mu-1) y^(mu-1) z^(mu-1) dxdydz """

    bounds: tuple
    mu: core.FractalDimension

    def __post_init__(self):
        if len(self.bounds) != 3:
            raise errors.HausdorffException('a box needs bounds on three axes')
        object.__setattr__(self, 'bounds', tuple(_ordered_pair(pair, 'box') for pair in self.bounds))
        object.__setattr__(self, 'mu', core.as_dimension(self.mu))
        for a, b in self.mapped_bounds:
            if not a < b:
                raise errors.HausdorffException('mapped box bounds collapse')

    @classmethod
    def from_mapped(cls, mapped_bounds, mu):
        """ Creates the box whose mapped-coordinate bounds are `mapped_bounds` """

        mu = core.as_dimension(mu)
        return cls(tuple((float(mu.unmap(a)), float(mu.unmap(b))) for a, b in mapped_bounds), mu)

    @property
    def mapped_bounds(self):
        """ Gets the bounds in mapped coordinates """

        return tuple((float(self.mu.map(a)), float(self.mu.map(b))) for a, b in self.bounds)

    @property
    def measure(self):
        """ Gets the fractal volume, i.e. the mapped-coordinate volume """

        return math.prod(b - a for a, b in self.mapped_bounds)

    def contains(self, point):
        """ Gets whether the point lies in the closed box """

        return all(a <= c <= b for c, (a, b) in zip(point, self.bounds))

    def faces(self):
        """ Gets the six boundary rectangles with outward orientation """

        faces = []
        for axis in range(3):
            plane = Plane.normal_to(axis)
            first, second = (self.bounds[i] for i in plane.axes)
            a, b = self.bounds[axis]
            faces.append(RectangleRegion(plane, first, second, a, -1, self.mu))
            faces.append(RectangleRegion(plane, first, second, b, 1, self.mu))
        return faces

    def split(self, axis, at):
        """ Splits the box in two at physical coordinate `at` along `axis` """

        axis = Axis.parse(axis).index
        a, b = self.bounds[axis]
        if not a < at < b:
            raise errors.HausdorffException('split point {} is not inside [{}, {}]'.format(at, a, b))
        lower, upper = list(self.bounds), list(self.bounds)
        lower[axis] = (a, at)
        upper[axis] = (at, b)
        return BoxDomain(tuple(lower), self.mu), BoxDomain(tuple(upper), self.mu)


@dataclasses.dataclass(frozen=True)
class RectangleRegion:
    """
    Axis-aligned rectangle in a coordinate plane. `first` and `second` bound the in-plane axes in
    the order of the plane name, `level` is the fixed coordinate and `orientation` the sign of the
    normal.
    """

    plane: Plane
    first: tuple
    second: tuple
    level: float
    orientation: int
    mu: core.FractalDimension

    def __post_init__(self):
        object.__setattr__(self, 'plane', Plane(self.plane))
        object.__setattr__(self, 'first', _ordered_pair(self.first, 'rectangle'))
        object.__setattr__(self, 'second', _ordered_pair(self.second, 'rectangle'))
        object.__setattr__(self, 'level', float(self.level))
        object.__setattr__(self, 'mu', core.as_dimension(self.mu))
        if self.level < 0.0:
            raise errors.HausdorffException('negative abscissa')
        if self.orientation not in (1, -1):
            raise errors.HausdorffException('orientation must be +1 or -1, got {}'.format(self.orientation))

    @property
    def axes(self):
        """ Gets the in-plane axis indices """

        return self.plane.axes

    @property
    def normal_axis(self):
        """ Gets the normal axis index """

        return self.plane.normal_axis

    @property
    def normal(self):
        """ Gets the oriented unit normal """

        normal = np.zeros(3)
        normal[self.normal_axis] = float(self.orientation)
        return normal

    @property
    def mapped_bounds(self):
        """ Gets the in-plane bounds in mapped coordinates """

        return tuple((float(self.mu.map(a)), float(self.mu.map(b))) for a, b in (self.first, self.second))

    @property
    def area(self):
        """ Gets the fractal area, i.e. the mapped-coordinate area """

        (a1, b1), (a2, b2) = self.mapped_bounds
        return (b1 - a1) * (b2 - a2)

    def flipped(self):
        """ Gets the same rectangle with the opposite orientation """

        return dataclasses.replace(self, orientation=-self.orientation)

    def point(self, first, second):
        """ Builds the 3-D point for in-plane coordinates (scalars or arrays) """

        coords = [None, None, None]
        coords[self.axes[0]] = first
        coords[self.axes[1]] = second
        coords[self.normal_axis] = np.full(np.shape(first), self.level) if np.ndim(first) else self.level
        return tuple(coords)

    def boundary(self):
        """ Gets the four boundary segments, counterclockwise about the oriented normal """

        bounds = {self.axes[0]: self.first, self.axes[1]: self.second}
        p, q = self.plane.right_handed_axes
        (pa, pb), (qa, qb) = bounds[p], bounds[q]
        corners = [(pa, qa), (pb, qa), (pb, qb), (pa, qb)]
        if self.orientation < 0:
            corners.reverse()

        points = []
        for cp, cq in corners:
            coords = [0.0, 0.0, 0.0]
            coords[p] = cp
            coords[q] = cq
            coords[self.normal_axis] = self.level
            points.append(tuple(coords))
        return tuple(ParametricCurve.mapped_segment(points[i], points[(i + 1) % 4], self.mu) for i in range(4))


class ParametricCurve(object):
    """ Parametric curve t -> (x(t), y(t), z(t)) on [t0, t1] with classical derivatives """

    def __init__(self, components, derivatives, interval, closed=False, mu=None):
        """ Creates a new parametric curve """

        super(ParametricCurve, self).__init__()

        if len(components) != 3 or len(derivatives) != 3:
            raise errors.HausdorffException('a curve needs three components and three derivatives')
        t0, t1 = float(interval[0]), float(interval[1])
        if not t0 < t1:
            raise errors.HausdorffException('empty or reversed interval')

        self.__components = tuple(components)
        self.__derivatives = tuple(derivatives)
        self.__interval = (t0, t1)
        self.__closed = closed
        self.__mu = core.as_dimension(mu) if mu is not None else None

        if closed and np.max(np.abs(self.position(t0) - self.position(t1))) > 1e-12:
            raise errors.HausdorffException('closed curve endpoints do not coincide')

    @property
    def interval(self):
        """ Gets the parameter interval """

        return self.__interval

    @property
    def closed(self):
        """ Gets whether the curve is closed """

        return self.__closed

    @property
    def mu(self):
        """ Gets the fractal dimension the curve was built for, if any """

        return self.__mu

    def position(self, t):
        """ Gets the position(s); the leading axis indexes the coordinate """

        return np.stack([np.asarray(helper.broadcast_value(c(t), t), dtype=float) for c in self.__components])

    def velocity(self, t):
        """ Gets the classical derivative(s) with respect to the parameter """

        return np.stack([np.asarray(helper.broadcast_value(d(t), t), dtype=float) for d in self.__derivatives])

    def reversed(self):
        """ Gets the same curve traversed backwards """

        t0, t1 = self.__interval
        components = [(lambda c: lambda t: c(t0 + t1 - t))(c) for c in self.__components]
        derivatives = [(lambda d: lambda t: -np.asarray(d(t0 + t1 - t), dtype=float))(d) for d in self.__derivatives]
        return ParametricCurve(components, derivatives, self.__interval, self.__closed, self.__mu)

    @classmethod
    def mapped_segment(cls, start, end, mu):
        """ Segment from `start` to `end` that is straight in mapped coordinates, parameter in [0, 1] """

        mu = core.as_dimension(mu)
        components = []
        derivatives = []
        for a, b in zip(start, end):
            ua, ub = float(mu.map(a)), float(mu.map(b))
            if ua == ub:
                components.append((lambda value: lambda t: value)(float(a)))
                derivatives.append(lambda t: 0.0)
            else:
                components.append((lambda ua, ub: lambda t: mu.unmap(ua + t * (ub - ua)))(ua, ub))
                derivatives.append((lambda ua, ub: lambda t: (ub - ua) / mu.mu *
                                    np.power(ua + t * (ub - ua), 1.0 / mu.mu - 1.0))(ua, ub))
        return cls(components, derivatives, (0.0, 1.0), False, mu)


def line_element(mu, position, velocity):
    """ Components mu x_i^(mu-1) dx_i/dt of the fractal line element; zero where a coordinate is frozen """

    with np.errstate(divide='ignore', invalid='ignore'):
        element = mu.mu * np.power(position, mu.mu - 1.0) * velocity
    return np.where(velocity == 0.0, 0.0, element)


def chen_partial(f, axis, point, mu, step=None, order=2, exact=False):
    """ Chen partial derivative df/d(axis^mu) by a central stencil in the mapped coordinate """

    f = as_scalar_field(f)
    mu = core.as_dimension(mu)
    axis = Axis.parse(axis).index
    coords = _coordinates(point)
    if not f.contains(coords):
        raise errors.HausdorffException('point outside domain')
    base = coords[axis]
    if not mu.classical and np.any(base <= 0.0):
        raise errors.HausdorffException('singular prefactor at origin')

    if exact and f.has_partials:
        return _as_result(helper.broadcast_value(f.partial(axis)(*coords), *coords) * mu.prefactor(base))

    w = mu.map(base)
    h = step if step is not None else helper.default_step(w, 1, order)
    if not mu.classical:
        # Keep the stencil on the positive half-axis
        h = np.minimum(h, w / (2.0 * helper.STENCIL_REACH[order]))

    def g(value):
        shifted = list(coords)
        shifted[axis] = mu.unmap(value)
        return f(*shifted)

    return _as_result(helper.central_difference(g, w, h, order))


def chen_second_partial(f, axis, point, mu, step=None, order=2):
    """ Second Chen partial d^2 f / d(axis^mu)^2 """

    f = as_scalar_field(f)
    mu = core.as_dimension(mu)
    axis = Axis.parse(axis).index
    coords = _coordinates(point)
    if not f.contains(coords):
        raise errors.HausdorffException('point outside domain')
    base = coords[axis]
    if not mu.classical and np.any(base <= 0.0):
        raise errors.HausdorffException('singular prefactor at origin')

    w = mu.map(base)
    h = step if step is not None else helper.default_step(w, 2, order)
    if not mu.classical:
        h = np.minimum(h, w / (2.0 * helper.STENCIL_REACH[order]))

    def g(value):
        shifted = list(coords)
        shifted[axis] = mu.unmap(value)
        return f(*shifted)

    return _as_result(helper.second_difference(g, w, h, order))


def arc_length(curve, mu=None, panels=core.DEFAULT_PANELS, points=core.DEFAULT_POINTS):
    """ Hausdorff arc length, the integral of |dl| with dl_i = mu x_i^(mu-1) dx_i """

    mu = core.as_dimension(mu if mu is not None else curve.mu)
    nodes, weights = helper.composite_rule(curve.interval[0], curve.interval[1], points, panels)
    element = line_element(mu, curve.position(nodes), curve.velocity(nodes))
    speed = np.sqrt(np.sum(element ** 2, axis=0))
    if not np.all(np.isfinite(speed)):
        raise errors.HausdorffException('singular curve point')
    return float(np.dot(weights, speed))


def _densities(mu, coords):
    coords = np.asarray(coords, dtype=float)
    if not mu.classical and np.any(coords <= 0.0):
        raise errors.HausdorffException('singular measure density')
    return mu.density(coords)


def measure_elements(domain, point):
    """
    Density of the fractal measure relative to the classical one: dV/dxdydz for boxes, dS/dAdB
    for rectangles (point given in-plane or in 3-D) and |dl|/|dx| for curves (point = parameter)
    """

    if isinstance(domain, BoxDomain):
        if not domain.contains(point):
            raise errors.HausdorffException('point outside domain')
        return float(np.prod(_densities(domain.mu, point)))

    if isinstance(domain, RectangleRegion):
        if len(point) == 3:
            point = tuple(point[i] for i in domain.axes)
        inside = domain.first[0] <= point[0] <= domain.first[1] and domain.second[0] <= point[1] <= domain.second[1]
        if not inside:
            raise errors.HausdorffException('point outside domain')
        return float(np.prod(_densities(domain.mu, point)))

    if isinstance(domain, ParametricCurve):
        t0, t1 = domain.interval
        if not t0 <= point <= t1:
            raise errors.HausdorffException('point outside domain')
        if domain.mu is None:
            raise errors.HausdorffException('curve carries no fractal dimension')
        position = domain.position(point)
        velocity = domain.velocity(point)
        moving = velocity != 0.0
        _densities(domain.mu, position[moving])
        classical = math.sqrt(float(np.sum(velocity ** 2)))
        if classical == 0.0:
            raise errors.HausdorffException('singular curve point')
        fractal = math.sqrt(float(np.sum(line_element(domain.mu, position, velocity) ** 2)))
        return fractal / classical

    raise errors.HausdorffException('unsupported domain type {}'.format(type(domain).__name__))


def total_differential(f, point, displacement, mu, step=None):
    """ Total differential sum_i (df/d x_i^mu) d(x_i^mu) for a mapped displacement """

    return float(sum(chen_partial(f, axis, point, mu, step) * displacement[axis] for axis in range(3)))


def path_derivative(f, curve, t, mu=None):
    """ d f(curve(t)) / dt from the Chen partials and the fractal line element """

    mu = core.as_dimension(mu if mu is not None else curve.mu)
    position = curve.position(t)
    velocity = curve.velocity(t)
    element = line_element(mu, position, velocity)
    total = 0.0
    for axis in range(3):
        if element[axis] != 0.0:
            total += element[axis] * chen_partial(f, axis, tuple(position), mu)
    return float(total)

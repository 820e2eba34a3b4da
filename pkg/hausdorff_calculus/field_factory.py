import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.flowpde as flowpde

import abc
import dataclasses
import math
import numpy as np


def _mapped(mu, x, y, z):
    return mu.map(np.asarray(x, dtype=float)), mu.map(np.asarray(y, dtype=float)), mu.map(np.asarray(z, dtype=float))


def _monomials(degree):
    return [(i, j, k) for i in range(degree + 1) for j in range(degree + 1 - i) for k in range(degree + 1 - i - j)]


class _AbstractFieldFactory(abc.ABC):
    """ Declare an interface for operations that create seeded test fields """

    polynomial = False

    @abc.abstractmethod
    def scalar(self, rng, mu, name=None):
        """ Build a scalar field of the mapped coordinates """

        pass

    @abc.abstractmethod
    def function(self, rng, mu, name=None):
        """ Build a function of one variable of the mapped coordinate """

        pass

    def vector(self, rng, mu, name=None):
        """ Build a vector field from three independent scalar fields """

        return fields.VectorField3D([self.scalar(rng, mu) for _ in range(3)], name=name)

    def solenoidal(self, rng, mu, name=None):
        """ Build a divergence-free vector field; component i does not depend on coordinate i """

        components = []
        for axis in range(3):
            scalar = self.scalar(rng, mu)

            def frozen(x, y, z, scalar=scalar, axis=axis):
                coords = [np.asarray(x, dtype=float), np.asarray(y, dtype=float), np.asarray(z, dtype=float)]
                coords[axis] = np.ones(np.broadcast(*coords).shape)
                return scalar(*coords)

            components.append(fields.ScalarField3D(frozen, polynomial=self.polynomial))
        return fields.VectorField3D(components, name=name)


class _PolynomialFieldFactory(_AbstractFieldFactory):
    """ Implement the operations to build polynomials of degree <= 3 in mapped coordinates """

    polynomial = True

    def scalar(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        terms = list(zip(rng.uniform(-1.0, 1.0, size=len(_monomials(3))), _monomials(3)))

        def value(x, y, z):
            u = _mapped(mu, x, y, z)
            return sum(c * u[0] ** i * u[1] ** j * u[2] ** k for c, (i, j, k) in terms)

        def partial(axis):
            def derivative(x, y, z):
                u = _mapped(mu, x, y, z)
                total = 0.0
                for c, exponents in terms:
                    if exponents[axis] == 0:
                        continue
                    term = c * exponents[axis]
                    for other in range(3):
                        power = exponents[other] - (1 if other == axis else 0)
                        term = term * u[other] ** power
                    total = total + term
                return total * mu.density((x, y, z)[axis])
            return derivative

        return fields.ScalarField3D(value, [partial(axis) for axis in range(3)], name=name, polynomial=True)

    def function(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        c = rng.uniform(-1.0, 1.0, size=4)
        return core.AnalyticFunction1D(
            lambda t: np.polynomial.polynomial.polyval(mu.map(t), c),
            lambda t: np.polynomial.polynomial.polyval(mu.map(t), np.polynomial.polynomial.polyder(c)) *
            mu.density(t),
            name=name)


class _TrigonometricFieldFactory(_AbstractFieldFactory):
    """ Implement the operations to build products of sines and cosines of mapped coordinates """

    def scalar(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        amplitude = rng.uniform(0.5, 1.5)
        k = rng.uniform(0.5, 1.5, size=3)
        phase = rng.uniform(0.0, math.pi, size=3)

        def value(x, y, z):
            u = _mapped(mu, x, y, z)
            return amplitude * np.sin(k[0] * u[0] + phase[0]) * np.cos(k[1] * u[1] + phase[1]) * \
                np.sin(k[2] * u[2] + phase[2])

        return fields.ScalarField3D(value, name=name)

    def function(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        amplitude, k, phase = rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5), rng.uniform(0.0, math.pi)
        return core.AnalyticFunction1D(
            lambda t: amplitude * np.sin(k * mu.map(t) + phase),
            lambda t: amplitude * k * np.cos(k * mu.map(t) + phase) * mu.density(t),
            name=name)


class _ExponentialFieldFactory(_AbstractFieldFactory):
    """ Implement the operations to build exponentials of linear forms in mapped coordinates """

    def scalar(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        amplitude = rng.uniform(0.5, 1.5)
        rate = rng.uniform(-0.5, 0.5, size=3)

        def value(x, y, z):
            u = _mapped(mu, x, y, z)
            return amplitude * np.exp(rate[0] * u[0] + rate[1] * u[1] + rate[2] * u[2])

        return fields.ScalarField3D(value, name=name)

    def function(self, rng, mu, name=None):
        mu = core.as_dimension(mu)
        amplitude, rate = rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0)
        return core.AnalyticFunction1D(
            lambda t: amplitude * np.exp(rate * mu.map(t)),
            lambda t: amplitude * rate * np.exp(rate * mu.map(t)) * mu.density(t),
            name=name)


FIELD_FAMILIES = {
    'polynomial': _PolynomialFieldFactory(),
    'trigonometric': _TrigonometricFieldFactory(),
    'exponential': _ExponentialFieldFactory(),
}


def get_field_factory(family):
    """ Gets the factory of a builtin field family """

    try:
        return FIELD_FAMILIES[family]
    except KeyError:
        raise errors.HausdorffException('unknown field family {}'.format(family))


@dataclasses.dataclass(frozen=True)
class Problem:
    """ Initial data, boundary treatment, optional source and optional exact solution of a 1-D run """

    name: str
    interval: tuple
    initial: core.AnalyticFunction1D
    boundary: object
    source: object = None
    exact: object = None


class _AbstractProblemFactory(abc.ABC):
    """ Declare an interface for operations that create 1-D solver problems """

    default_interval = (0.1, 1.0)

    def interval(self, mu, interval=None):
        """ Gets the requested interval, or the default one for `mu` """

        if interval is not None:
            return (float(interval[0]), float(interval[1]))
        if core.as_dimension(mu).classical:
            return (0.0, 1.0)
        return self.default_interval

    @abc.abstractmethod
    def build(self, equation, mu, theta, interval=None):
        """ Build the problem """

        pass


class _HeatModeProblemFactory(_AbstractProblemFactory):
    """ First sine mode of the mapped interval with zero end values """

    def build(self, equation, mu, theta, interval=None):
        mu = core.as_dimension(mu)
        a, b = self.interval(mu, interval)
        ua, ub = float(mu.map(a)), float(mu.map(b))
        wavenumber = math.pi / (ub - ua)

        def initial(x):
            return np.sin(wavenumber * (mu.map(x) - ua))

        exact = None
        if mu.classical and flowpde.Equation(equation) is flowpde.Equation.DIFFUSION:
            def exact(t, x):
                return math.exp(-theta * wavenumber ** 2 * t) * initial(x)

        return Problem('heat_mode', (a, b), core.AnalyticFunction1D(initial), flowpde.DirichletBoundary(0.0, 0.0),
                       exact=exact)


class _ConstantProblemFactory(_AbstractProblemFactory):
    """ Uniform state with matching end values """

    value = 1.0

    def build(self, equation, mu, theta, interval=None):
        value = self.value
        return Problem('constant', self.interval(mu, interval),
                       core.AnalyticFunction1D(lambda x: np.full(np.shape(x), value)),
                       flowpde.DirichletBoundary(value, value), exact=lambda t, x: np.full(np.shape(x), value))


class _ManufacturedProblemFactory(_AbstractProblemFactory):
    """ Manufactured solution exp(-t) sin(x^mu) with the source that closes the equation """

    default_interval = (1.0, 4.0)

    def interval(self, mu, interval=None):
        if interval is not None:
            return super(_ManufacturedProblemFactory, self).interval(mu, interval)
        return self.default_interval

    def build(self, equation, mu, theta, interval=None):
        mu = core.as_dimension(mu)
        equation = flowpde.Equation(equation)
        a, b = self.interval(mu, interval)

        def exact(t, x):
            return math.exp(-t) * np.sin(mu.map(x))

        def source(t, x):
            u = mu.map(x)
            coefficient = theta * mu.mu ** 2 * np.power(x, 2.0 * mu.mu - 2.0)
            value = -math.exp(-t) * np.sin(u) + coefficient * math.exp(-t) * np.sin(u)
            if equation is flowpde.Equation.BURGERS:
                value = value + exact(t, x) * mu.density(x) * math.exp(-t) * np.cos(u)
            return value

        boundary = flowpde.DirichletBoundary(lambda t: exact(t, a), lambda t: exact(t, b))
        return Problem('mms', (a, b), core.AnalyticFunction1D(lambda x: exact(0.0, x)), boundary, source, exact)


class _PulseProblemFactory(_AbstractProblemFactory):
    """ Gaussian pulse in the mapped coordinate between reflective ends """

    def build(self, equation, mu, theta, interval=None):
        mu = core.as_dimension(mu)
        a, b = self.interval(mu, interval)
        ua, ub = float(mu.map(a)), float(mu.map(b))
        center, width = 0.5 * (ua + ub), 0.1 * (ub - ua)

        def initial(x):
            return np.exp(-0.5 * ((mu.map(x) - center) / width) ** 2)

        return Problem('pulse', (a, b), core.AnalyticFunction1D(initial), flowpde.ReflectiveBoundary())


PROBLEMS = {
    'heat_mode': _HeatModeProblemFactory(),
    'constant': _ConstantProblemFactory(),
    'mms': _ManufacturedProblemFactory(),
    'pulse': _PulseProblemFactory(),
}


def build_problem(name, equation, mu, theta, interval=None):
    """ Builds a builtin 1-D problem by name """

    try:
        factory = PROBLEMS[name]
    except KeyError:
        raise errors.HausdorffException('unknown problem {}'.format(name))
    return factory.build(equation, mu, theta, interval)

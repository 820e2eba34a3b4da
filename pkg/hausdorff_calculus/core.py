import hausdorff_calculus.errors as errors
import hausdorff_calculus.helper as helper

import dataclasses
import enum
import logging
import math
import numpy as np
import scipy.optimize


logger = logging.getLogger(__name__)

DEFAULT_POINTS = 16
DEFAULT_PANELS = 8

# Largest |beta * t^mu| the stretched exponential is evaluated for
_KWW_LIMIT = 700.0


@dataclasses.dataclass(frozen=True)
class FractalDimension:
    """ Fractal dimension mu in (0, 1] together with the mapped coordinate w = t^mu """

    mu: float

    def __post_init__(self):
        mu = float(self.mu)
        if not math.isfinite(mu) or mu <= 0.0 or mu > 1.0:
            raise errors.HausdorffException('fractal dimension must lie in (0, 1], got {}'.format(self.mu))
        object.__setattr__(self, 'mu', mu)

    @property
    def classical(self):
        """ Gets whether this dimension reduces to classical calculus """

        return self.mu == 1.0

    def map(self, t):
        """ Maps a physical abscissa to the mapped coordinate t^mu """

        return np.power(t, self.mu)

    def unmap(self, w):
        """ Maps a mapped coordinate back to the physical abscissa w^(1/mu) """

        return np.power(w, 1.0 / self.mu)

    def density(self, t):
        """ Gets the fractal measure density mu * t^(mu - 1) """

        with np.errstate(divide='ignore'):
            return self.mu * np.power(t, self.mu - 1.0)

    def prefactor(self, t):
        """ Gets the Chen derivative prefactor t^(1 - mu) / mu """

        return np.power(t, 1.0 - self.mu) / self.mu


def as_dimension(mu):
    """ Coerces a float (or a FractalDimension) to a FractalDimension """

    if isinstance(mu, FractalDimension):
        return mu
    return FractalDimension(mu)


def _as_result(value):
    value = np.asarray(value, dtype=float)
    if value.ndim == 0:
        return float(value)
    return value


class AnalyticFunction1D(object):
    """ Function of one nonnegative variable with an optional exact classical derivative """

    def __init__(self, func, derivative=None, domain=(0.0, math.inf), name=None, vectorized=True):
        """ Creates a new one-dimensional function on `domain` """

        super(AnalyticFunction1D, self).__init__()

        a, b = float(domain[0]), float(domain[1])
        if a < 0.0 or not a < b:
            raise errors.HausdorffException('invalid domain [{}, {}]'.format(a, b))

        # Scalar-only callables get numpy broadcasting
        if not vectorized:
            func = np.vectorize(func, otypes=[float])
            if derivative is not None:
                derivative = np.vectorize(derivative, otypes=[float])

        self.__func = func
        self.__derivative = derivative
        self.__domain = (a, b)
        self.__name = name

    def __call__(self, t):
        """ Evaluates the function """

        return helper.broadcast_value(self.__func(t), t)

    @property
    def domain(self):
        """ Gets the closed domain interval (a, b) """

        return self.__domain

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    @property
    def has_exact_derivative(self):
        """ Gets whether an exact classical derivative was supplied """

        return self.__derivative is not None

    def classical_derivative(self, t):
        """ Gets f'(t), exactly when available and by central difference otherwise """

        if self.__derivative is not None:
            return helper.broadcast_value(self.__derivative(t), t)
        return _as_result(helper.central_difference(self, t, helper.default_step(t)))

    def restricted(self, domain):
        """ Returns the same function on a narrower domain """

        return AnalyticFunction1D(self.__func, self.__derivative, domain, self.__name)


def as_function(f):
    """ Wraps a plain callable into an AnalyticFunction1D on [0, inf) """

    if isinstance(f, AnalyticFunction1D):
        return f
    return AnalyticFunction1D(f)


def _common_domain(*functions):
    a = max(f.domain[0] for f in functions)
    b = min(f.domain[1] for f in functions)
    return (a, b)


class DerivativeMethod(enum.Enum):
    """ How the Chen derivative is discretized """

    MAPPED_STENCIL = 'mapped_stencil'
    DIRECT_FORMULA = 'direct_formula'


class KwwMode(enum.Enum):
    """ Evaluation mode of the stretched exponential """

    CLOSED_FORM = 'closed_form'
    SERIES = 'series'


def chen_derivative(f, mu, t, method=DerivativeMethod.MAPPED_STENCIL, step=None):
    """
    Chen Hausdorff derivative (t^(1 - mu) / mu) f'(t). The mapped stencil differentiates
    g(w) = f(w^(1/mu)) at w = t^mu, the direct formula differentiates f and applies the prefactor.
    Accepts scalar or array abscissae.
    """

    f = as_function(f)
    mu = as_dimension(mu)
    method = DerivativeMethod(method)
    t = np.asarray(t, dtype=float)
    if step is not None and not step > 0.0:
        raise errors.HausdorffException('step must be positive, got {}'.format(step))
    if np.any(t < 0.0):
        raise errors.HausdorffException('point outside domain')

    a, b = f.domain
    if method is DerivativeMethod.MAPPED_STENCIL:
        w = mu.map(t)
        h = step if step is not None else helper.default_step(w)
        if np.any(w - h < mu.map(a)) or np.any(w + h > mu.map(b)):
            raise errors.HausdorffException('point outside domain')
        value = helper.central_difference(lambda v: f(mu.unmap(v)), w, h)
    else:
        if not mu.classical and np.any(t == 0.0):
            raise errors.HausdorffException('singular prefactor at origin')
        h = step if step is not None else helper.default_step(t)
        if np.any(t - h < a) or np.any(t + h > b):
            raise errors.HausdorffException('point outside domain')
        value = mu.prefactor(t) * helper.central_difference(f, t, h)
    return _as_result(value)


def chen_integral(f, mu, a, b, panels=DEFAULT_PANELS, points=DEFAULT_POINTS):
    """
    Chen Hausdorff integral mu * int_a^b f(t) t^(mu - 1) dt, evaluated as int f(w^(1/mu)) dw
    over [a^mu, b^mu] with composite Gauss-Legendre panels
    """

    f = as_function(f)
    mu = as_dimension(mu)
    if not a < b:
        raise errors.HausdorffException('empty or reversed interval')
    if a < 0.0:
        raise errors.HausdorffException('negative abscissa')
    if panels < 1:
        raise errors.HausdorffException('at least one panel is required, got {}'.format(panels))
    if a < f.domain[0] or b > f.domain[1]:
        raise errors.HausdorffException('point outside domain')

    nodes, weights = helper.composite_rule(mu.map(a), mu.map(b), points, panels)
    return float(np.dot(weights, f(mu.unmap(nodes))))


def indefinite_integral(f, mu, a):
    """ Returns the antiderivative t -> chen_integral(f, mu, a, t) as a function on [a, b_f] """

    f = as_function(f)
    mu = as_dimension(mu)

    def antiderivative(t):
        if t == a:
            return 0.0
        return chen_integral(f, mu, a, t)

    return AnalyticFunction1D(antiderivative, domain=(a, f.domain[1]), vectorized=False)


def kww(beta, mu, t, mode=KwwMode.CLOSED_FORM, nterms=None):
    """ Kohlrausch-Williams-Watts (stretched exponential) function e^(beta t^mu) """

    mu = as_dimension(mu)
    mode = KwwMode(mode)
    if t < 0.0:
        raise errors.HausdorffException('negative abscissa')
    x = beta * float(mu.map(t))

    if mode is KwwMode.CLOSED_FORM:
        if x > _KWW_LIMIT:
            raise errors.HausdorffException('magnitude overflow')
        return math.exp(x)

    if abs(x) > _KWW_LIMIT:
        raise errors.HausdorffException('magnitude overflow')
    if nterms is not None and nterms < 1:
        raise errors.HausdorffException('series needs at least one term, got {}'.format(nterms))
    if x < 0.0:
        # Alternating terms cancel catastrophically; invert the all-positive series instead
        return 1.0 / _exp_series(-x, nterms)
    return _exp_series(x, nterms)


def _exp_series(x, nterms):
    # Sum terms until the count is reached or they drop below the partial sum's resolution
    terms = [1.0]
    term = 1.0
    partial = 1.0
    n = 1
    while nterms is None or n < nterms:
        term *= x / n
        terms.append(term)
        partial += term
        if nterms is None and abs(term) < 1e-16 * abs(partial):
            break
        n += 1
    return math.fsum(terms)


class Rule(enum.Enum):
    """ Algebraic rules of the Chen derivative and integral """

    SUM = 'sum'
    CONST_MUL = 'const_mul'
    PRODUCT = 'product'
    QUOTIENT = 'quotient'
    CHAIN = 'chain'
    PARTS = 'parts'


def rule_sides(rule_id, f1, f2, mu, sample_points, alpha=2.0):
    """ Evaluates both sides of an algebraic rule; returns (lhs, rhs) arrays """

    rule_id = Rule(rule_id)
    f1 = as_function(f1)
    f2 = as_function(f2)
    mu = as_dimension(mu)
    samples = np.asarray(sample_points, dtype=float)

    if rule_id is Rule.CHAIN:
        # f1 is the outer function applied to the values of f2
        domain = f2.domain
    else:
        domain = _common_domain(f1, f2)
    if samples.size == 0 or np.any(samples <= domain[0]) or np.any(samples >= domain[1]):
        raise errors.HausdorffException('point outside domain')

    def combined(func):
        return AnalyticFunction1D(func, domain=domain)

    def derivative(f, t):
        return chen_derivative(f, mu, t)

    if rule_id is Rule.SUM:
        lhs = derivative(combined(lambda t: f1(t) + f2(t)), samples)
        rhs = derivative(f1, samples) + derivative(f2, samples)
    elif rule_id is Rule.CONST_MUL:
        lhs = derivative(combined(lambda t: alpha * f1(t)), samples)
        rhs = alpha * derivative(f1, samples)
    elif rule_id is Rule.PRODUCT:
        lhs = derivative(combined(lambda t: f1(t) * f2(t)), samples)
        rhs = f2(samples) * derivative(f1, samples) + f1(samples) * derivative(f2, samples)
    elif rule_id is Rule.QUOTIENT:
        denominator = f2(samples)
        if np.any(np.abs(denominator) < 1e-12):
            raise errors.HausdorffException('division by near-zero')
        lhs = derivative(combined(lambda t: f1(t) / f2(t)), samples)
        rhs = (denominator * derivative(f1, samples) - f1(samples) * derivative(f2, samples)) / denominator ** 2
    elif rule_id is Rule.CHAIN:
        lhs = derivative(combined(lambda t: f1(f2(t))), samples)
        rhs = f1.classical_derivative(f2(samples)) * derivative(f2, samples)
    else:
        # Integration by parts over the span of the samples
        a, b = float(samples.min()), float(samples.max())
        lhs = chen_integral(combined(lambda t: f2(t) * derivative(f1, t)), mu, a, b)
        rhs = f1(b) * f2(b) - f1(a) * f2(a) - \
            chen_integral(combined(lambda t: f1(t) * derivative(f2, t)), mu, a, b)
    return np.atleast_1d(np.asarray(lhs, dtype=float)), np.atleast_1d(np.asarray(rhs, dtype=float))


def check_rule(rule_id, f1, f2, mu, sample_points, alpha=2.0):
    """ Maximum absolute residual of an algebraic rule over the samples """

    lhs, rhs = rule_sides(rule_id, f1, f2, mu, sample_points, alpha)
    return float(np.max(np.abs(lhs - rhs)))


def _first_fundamental(f, mu, a, t):
    derivative = AnalyticFunction1D(lambda s: chen_derivative(f, mu, s), domain=f.domain)
    return float(f(t) - f(a)), chen_integral(derivative, mu, a, t)


def _check_span(a, t):
    if a < 0.0:
        raise errors.HausdorffException('negative abscissa')
    if not a < t:
        raise errors.HausdorffException('empty or reversed interval')


def fundamental_theorem_sides(f, mu, a, t):
    """
    Both sides of both fundamental theorems: ((f(t) - f(a), I(D f)), (f(t), D(I f)(t))), the
    integrals taken from `a`
    """

    f = as_function(f)
    mu = as_dimension(mu)
    _check_span(a, t)

    first = _first_fundamental(f, mu, a, t)

    # Keep the stencil of the outer derivative to the right of a
    antiderivative = indefinite_integral(f, mu, a)
    w = float(mu.map(t))
    step = min(float(helper.default_step(w)), 0.5 * (w - float(mu.map(a))))
    second = (float(f(t)), float(chen_derivative(antiderivative, mu, t, step=step)))
    return first, second


def fundamental_theorem_residuals(f, mu, a, t):
    """
    Residuals of both fundamental theorems: first = |f(t) - f(a) - I(D f)|, second =
    |f(t) - D(I f)(t)| with the integral taken from `a`
    """

    (lhs1, rhs1), (lhs2, rhs2) = fundamental_theorem_sides(f, mu, a, t)
    return abs(lhs1 - rhs1), abs(lhs2 - rhs2)


def net_change_residual(f, mu, a, b):
    """ Residual of the net change theorem, f(b) - f(a) = I(D f) over [a, b] """

    f = as_function(f)
    mu = as_dimension(mu)
    _check_span(a, b)
    lhs, rhs = _first_fundamental(f, mu, a, b)
    return abs(lhs - rhs)


def mean_value_point(f, mu, a, t):
    """ Finds l in (a, t] with I(f) over [a, t] = f(l) (t^mu - a^mu); f must be monotone """

    f = as_function(f)
    mu = as_dimension(mu)
    _check_span(a, t)

    target = chen_integral(f, mu, a, t) / (mu.map(t) - mu.map(a))

    def residual(point):
        return float(f(point)) - target

    at_end = residual(t)
    if abs(at_end) <= 1e-14 * max(1.0, abs(target)):
        return float(t)
    at_start = residual(a)
    if at_start * at_end > 0.0:
        logger.warning('Mean value residual keeps its sign on [%s, %s]', a, t)
        raise errors.HausdorffException('mean value point not bracketed')
    return float(scipy.optimize.bisect(residual, a, t, xtol=1e-14, maxiter=200))


class TableIdentity(enum.Enum):
    """ Closed-form entries of the derivative (d_) and integral (i_) tables """

    D_CONSTANT = 'd_constant'
    D_POWER = 'd_power'
    D_POWER_N = 'd_power_n'
    D_STRETCHED_EXPONENTIAL = 'd_stretched_exponential'
    D_LOG_POWER = 'd_log_power'
    D_EXPONENTIAL_BASE = 'd_exponential_base'
    D_LOG_BASE = 'd_log_base'
    D_COMPOSITE_EXPONENTIAL = 'd_composite_exponential'
    D_COMPOSITE_LOG_BASE = 'd_composite_log_base'
    D_COMPOSITE_LOG = 'd_composite_log'
    D_COMPOSITE_EXPONENTIAL_BASE = 'd_composite_exponential_base'
    I_UNIT = 'i_unit'
    I_POWER_N = 'i_power_n'
    I_COMPOSITE_LOG_BASE = 'i_composite_log_base'
    I_RECIPROCAL = 'i_reciprocal'
    I_RECIPROCAL_BASE = 'i_reciprocal_base'
    I_EXPONENTIAL_BASE = 'i_exponential_base'
    I_COMPOSITE_EXPONENTIAL = 'i_composite_exponential'
    I_COMPOSITE_ABS = 'i_composite_abs'
    I_COMPOSITE_LOG = 'i_composite_log'
    I_STRETCHED_EXPONENTIAL = 'i_stretched_exponential'
    I_COMPOSITE_EXPONENTIAL_BASE = 'i_composite_exponential_base'

    @property
    def is_derivative(self):
        """ Gets whether this is a derivative-table entry """

        return self.value.startswith('d_')


# Background function of the mapped coordinate used by the composite entries, and its derivative
def _background(w):
    return 1.0 + 0.5 * w + 0.125 * w * w


def _background_rate(w):
    return 0.5 + 0.25 * w


_USES_BASE = {
    TableIdentity.D_EXPONENTIAL_BASE, TableIdentity.D_LOG_BASE, TableIdentity.D_COMPOSITE_LOG_BASE,
    TableIdentity.D_COMPOSITE_EXPONENTIAL_BASE, TableIdentity.I_COMPOSITE_LOG_BASE,
    TableIdentity.I_RECIPROCAL_BASE, TableIdentity.I_EXPONENTIAL_BASE, TableIdentity.I_COMPOSITE_EXPONENTIAL_BASE,
}


@dataclasses.dataclass(frozen=True)
class ClosedFormCase:
    """
    One closed-form table entry. For derivative entries `primary` is differentiated and compared
    with `target`; for integral entries `primary` is the stated antiderivative and `target` the
    integrand. Both are functions of the mapped coordinate w = t^mu.
    """

    identity: TableIdentity
    beta: float = 2.0
    s: float = 3.0
    n: int = 3
    literal: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'identity', TableIdentity(self.identity))
        if self.identity in _USES_BASE and (self.s <= 0.0 or self.s == 1.0):
            raise errors.HausdorffException('invalid case parameters')
        if self.identity is TableIdentity.I_STRETCHED_EXPONENTIAL and self.beta == 0.0:
            raise errors.HausdorffException('invalid case parameters')
        if self.n < 1:
            raise errors.HausdorffException('invalid case parameters')
        if self.literal and self.identity is not TableIdentity.I_STRETCHED_EXPONENTIAL:
            raise errors.HausdorffException('only the stretched-exponential antiderivative has a literal form')

    @property
    def row_id(self):
        """ Gets the row identifier used in table reports """

        if self.literal:
            return '{}_literal'.format(self.identity.value)
        return self.identity.value

    def primary(self, w):
        """ Gets the function that is differentiated """

        beta, s, n = self.beta, self.s, self.n
        xi = _background(w)
        table = {
            TableIdentity.D_CONSTANT: lambda: np.full_like(w, 3.0),
            TableIdentity.D_POWER: lambda: w,
            TableIdentity.D_POWER_N: lambda: w ** n,
            TableIdentity.D_STRETCHED_EXPONENTIAL: lambda: np.exp(beta * w),
            TableIdentity.D_LOG_POWER: lambda: np.log(w),
            TableIdentity.D_EXPONENTIAL_BASE: lambda: s ** w,
            TableIdentity.D_LOG_BASE: lambda: np.log(w) / math.log(s),
            TableIdentity.D_COMPOSITE_EXPONENTIAL: lambda: np.exp(xi),
            TableIdentity.D_COMPOSITE_LOG_BASE: lambda: np.log(xi) / math.log(s),
            TableIdentity.D_COMPOSITE_LOG: lambda: np.log(xi),
            TableIdentity.D_COMPOSITE_EXPONENTIAL_BASE: lambda: s ** xi,
            TableIdentity.I_UNIT: lambda: w,
            TableIdentity.I_POWER_N: lambda: w ** n,
            TableIdentity.I_COMPOSITE_LOG_BASE: lambda: np.log(xi) / math.log(s),
            TableIdentity.I_RECIPROCAL: lambda: np.log(w),
            TableIdentity.I_RECIPROCAL_BASE: lambda: np.log(w) / math.log(s),
            TableIdentity.I_EXPONENTIAL_BASE: lambda: s ** w,
            TableIdentity.I_COMPOSITE_EXPONENTIAL: lambda: np.exp(xi),
            TableIdentity.I_COMPOSITE_ABS: lambda: np.abs(-xi),
            TableIdentity.I_COMPOSITE_LOG: lambda: np.log(xi),
            TableIdentity.I_STRETCHED_EXPONENTIAL: lambda: self.__stretched_antiderivative(w),
            TableIdentity.I_COMPOSITE_EXPONENTIAL_BASE: lambda: s ** xi,
        }
        return table[self.identity]()

    def target(self, w):
        """ Gets the stated derivative (derivative entries) or integrand (integral entries) """

        beta, s, n = self.beta, self.s, self.n
        xi = _background(w)
        rate = _background_rate(w)
        log_s = math.log(s)
        table = {
            TableIdentity.D_CONSTANT: lambda: np.zeros_like(w),
            TableIdentity.D_POWER: lambda: np.ones_like(w),
            TableIdentity.D_POWER_N: lambda: n * w ** (n - 1),
            TableIdentity.D_STRETCHED_EXPONENTIAL: lambda: beta * np.exp(beta * w),
            TableIdentity.D_LOG_POWER: lambda: 1.0 / w,
            TableIdentity.D_EXPONENTIAL_BASE: lambda: log_s * s ** w,
            TableIdentity.D_LOG_BASE: lambda: 1.0 / (w * log_s),
            TableIdentity.D_COMPOSITE_EXPONENTIAL: lambda: np.exp(xi) * rate,
            TableIdentity.D_COMPOSITE_LOG_BASE: lambda: rate / (xi * log_s),
            TableIdentity.D_COMPOSITE_LOG: lambda: rate / xi,
            TableIdentity.D_COMPOSITE_EXPONENTIAL_BASE: lambda: log_s * s ** xi * rate,
            TableIdentity.I_UNIT: lambda: np.ones_like(w),
            TableIdentity.I_POWER_N: lambda: n * w ** (n - 1),
            TableIdentity.I_COMPOSITE_LOG_BASE: lambda: rate / (xi * log_s),
            TableIdentity.I_RECIPROCAL: lambda: 1.0 / w,
            TableIdentity.I_RECIPROCAL_BASE: lambda: 1.0 / (w * log_s),
            TableIdentity.I_EXPONENTIAL_BASE: lambda: log_s * s ** w,
            TableIdentity.I_COMPOSITE_EXPONENTIAL: lambda: np.exp(xi) * rate,
            # sign(-xi) times the rate of -xi
            TableIdentity.I_COMPOSITE_ABS: lambda: (-xi / np.abs(-xi)) * -rate,
            TableIdentity.I_COMPOSITE_LOG: lambda: rate / xi,
            TableIdentity.I_STRETCHED_EXPONENTIAL: lambda: np.exp(beta * w),
            TableIdentity.I_COMPOSITE_EXPONENTIAL_BASE: lambda: log_s * s ** xi * rate,
        }
        return table[self.identity]()

    def __stretched_antiderivative(self, w):
        if self.literal:
            return self.beta * np.exp(self.beta * w)
        return np.exp(self.beta * w) / self.beta


def closed_form_table_check(case, mu, sample_points):
    """
    Maximum residual of a table entry over positive samples. The literal stretched-exponential
    antiderivative is measured by its gap to the corrected antiderivative.
    """

    mu = as_dimension(mu)
    samples = np.asarray(sample_points, dtype=float)
    if samples.size == 0 or np.any(samples <= 0.0):
        raise errors.HausdorffException('point outside domain')
    w = mu.map(samples)

    if case.literal:
        corrected = dataclasses.replace(case, literal=False)
        return float(np.max(np.abs(case.primary(w) - corrected.primary(w))))

    primary = AnalyticFunction1D(lambda t: case.primary(mu.map(t)))
    residual = chen_derivative(primary, mu, samples) - case.target(w)
    return float(np.max(np.abs(residual)))

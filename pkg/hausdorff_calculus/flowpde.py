import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.integrals as integrals
import hausdorff_calculus.theorems as theorems
import hausdorff_calculus.vecops as vecops

import abc
import dataclasses
import enum
import logging
import math
import numbers
import numpy as np
import pytools.convergence
import scipy.integrate


logger = logging.getLogger(__name__)

CFL_SAFETY = 0.4
OVERFLOW_LIMIT = 1e6
DIVERGENCE_FREE_TOLERANCE = 1e-6
CONTINUITY_TOLERANCE = 1e-8


def _space_time_scalar(field):
    if isinstance(field, fields.SpaceTimeScalarField):
        return field
    if isinstance(field, fields.ScalarField3D):
        return fields.SpaceTimeScalarField.steady(field)
    if isinstance(field, numbers.Real):
        value = float(field)
        return fields.SpaceTimeScalarField(lambda t, x, y, z: value, polynomial=True)
    return fields.SpaceTimeScalarField(field)


def _is_constant_vector(field):
    return isinstance(field, (tuple, list, np.ndarray)) and len(field) == 3 and \
        all(isinstance(c, numbers.Real) for c in field)


def _space_time_vector(field):
    if isinstance(field, fields.SpaceTimeVectorField):
        return field
    if isinstance(field, fields.VectorField3D):
        return fields.SpaceTimeVectorField.steady(field)
    if _is_constant_vector(field):
        return fields.SpaceTimeVectorField([_space_time_scalar(float(c)) for c in field])
    return fields.SpaceTimeVectorField([_space_time_scalar(c) for c in field])


@dataclasses.dataclass(frozen=True)
class FlowState:
    """ Density, velocity, pressure and body force of a fractal power-law fluid """

    density: fields.SpaceTimeScalarField
    velocity: fields.SpaceTimeVectorField
    pressure: fields.SpaceTimeScalarField
    body_force: fields.SpaceTimeVectorField
    epsilon: float
    reference_density: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'density', _space_time_scalar(self.density))
        object.__setattr__(self, 'velocity', _space_time_vector(self.velocity))
        object.__setattr__(self, 'pressure', _space_time_scalar(self.pressure))
        object.__setattr__(self, 'body_force', _space_time_vector(self.body_force))
        if not self.epsilon >= 0.0:
            raise errors.HausdorffException('shear modulus must be nonnegative, got {}'.format(self.epsilon))
        if not self.reference_density > 0.0:
            raise errors.HausdorffException('reference density must be positive, got {}'.format(
                self.reference_density))

    @property
    def kinematic_diffusivity(self):
        """ Gets epsilon / reference density """

        return self.epsilon / self.reference_density

    def with_reference_density(self, reference_density):
        """ Gets the same state with another reference density """

        return dataclasses.replace(self, reference_density=float(reference_density))

    def with_body_force(self, body_force):
        """ Gets the same state with another body force """

        return dataclasses.replace(self, body_force=body_force)

    def check_density(self, points, time=0.0):
        """ Raises unless the density is positive at every sampled point """

        for point in points:
            if not self.density(time, *point) > 0.0:
                raise errors.HausdorffException('nonpositive density at {}'.format(tuple(point)))


class TensorField3x3(object):
    """ Rank-2 tensor field; component (i, j) is a scalar field of (x, y, z) """

    def __init__(self, components, symmetric=False, name=None):
        """ Creates a new tensor field from a 3x3 nested sequence of callables """

        super(TensorField3x3, self).__init__()

        if len(components) != 3 or any(len(row) != 3 for row in components):
            raise errors.HausdorffException('a tensor field needs 3x3 components')
        self.__components = tuple(tuple(fields.as_scalar_field(c) for c in row) for row in components)
        self.__symmetric = symmetric
        self.__name = name

    def __call__(self, x, y, z):
        """ Evaluates all nine components; the two leading axes index the component """

        return np.array([[np.asarray(c(x, y, z), dtype=float) for c in row] for row in self.__components])

    @property
    def name(self):
        """ Gets the display name """

        return self.__name

    @property
    def symmetric(self):
        """ Gets whether the tensor was built symmetric """

        return self.__symmetric

    def component(self, i, j):
        """ Gets component (i, j) """

        return self.__components[fields.Axis.parse(i).index][fields.Axis.parse(j).index]

    def row(self, i):
        """ Gets row i as a vector field """

        return fields.VectorField3D(self.__components[fields.Axis.parse(i).index])

    def transpose(self):
        """ Gets the transposed tensor field """

        return TensorField3x3([[self.__components[j][i] for j in range(3)] for i in range(3)], self.__symmetric)

    def asymmetry(self, points):
        """ Gets max |T_ij - T_ji| over the sample points """

        worst = 0.0
        for point in points:
            value = self(*point)
            worst = max(worst, float(np.max(np.abs(value - value.T))))
        return worst

    def divergence(self, point, mu, convention=vecops.Convention.MAPPED_CONSISTENT):
        """ Row-wise divergence (div T)_i = sum_j d_j T_ij """

        return np.array([vecops.divergence(self.row(i), point, mu, convention, order=vecops.NESTED_ORDER)
                         for i in range(3)])


def _velocity_gradient_component(upsilon, i, j, mu, convention):
    component = upsilon.component(i)
    return lambda x, y, z: vecops.gradient_component(component, j, (x, y, z), mu, convention,
                                                     order=vecops.NESTED_ORDER)


def strain_tensor_field(upsilon, mu, convention=vecops.Convention.MAPPED_CONSISTENT):
    """ Strain rate (grad v + grad v^T) / 2; (i, j) and (j, i) share one evaluator """

    upsilon = fields.as_vector_field(upsilon)
    mu = core.as_dimension(mu)
    convention = vecops.Convention.parse(convention)

    entries = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            forward = _velocity_gradient_component(upsilon, i, j, mu, convention)
            backward = _velocity_gradient_component(upsilon, j, i, mu, convention)
            entry = (lambda f, b: lambda x, y, z: 0.5 * (f(x, y, z) + b(x, y, z)))(forward, backward)
            entries[i][j] = entries[j][i] = entry
    return TensorField3x3(entries, symmetric=True, name='strain')


def stress_tensor_field(upsilon, p, epsilon, mu, convention=vecops.Convention.MAPPED_CONSISTENT):
    """ Stress field H = -p I + 2 epsilon strain """

    strain = strain_tensor_field(upsilon, mu, convention)
    p = fields.as_scalar_field(p)
    entries = []
    for i in range(3):
        row = []
        for j in range(3):
            eta = strain.component(i, j)
            if i == j:
                row.append((lambda eta: lambda x, y, z: -p(x, y, z) + 2.0 * epsilon * eta(x, y, z))(eta))
            else:
                row.append((lambda eta: lambda x, y, z: 2.0 * epsilon * eta(x, y, z))(eta))
        entries.append(row)
    return TensorField3x3(entries, symmetric=True, name='stress')


def stress_tensor(upsilon, p, epsilon, point, mu, convention=vecops.Convention.MAPPED_CONSISTENT, time=0.0):
    """ Stress tensor -p I + 2 epsilon (S + S^T) / 2 at a point, S being the velocity gradient """

    upsilon = fields.as_vector_field(fields.at_time(upsilon, time))
    p = fields.as_scalar_field(fields.at_time(p, time))
    mu = core.as_dimension(mu)
    convention = vecops.Convention.parse(convention)

    gradient = np.array([[vecops.gradient_component(upsilon.component(i), j, point, mu, convention)
                          for j in range(3)] for i in range(3)])
    strain = 0.5 * (gradient + gradient.T)
    return -p(*point) * np.eye(3) + 2.0 * epsilon * strain


def stress_divergence_residual(upsilon, p, epsilon, point, mu):
    """ max |div H - (-grad p + epsilon lap v)| for a divergence-free velocity in mapped operators """

    upsilon = fields.as_vector_field(upsilon)
    p = fields.as_scalar_field(p)
    convention = vecops.Convention.MAPPED_CONSISTENT
    stress = stress_tensor_field(upsilon, p, epsilon, mu, convention)
    lhs = stress.divergence(point, mu, convention)
    rhs = -vecops.gradient(p, point, mu, convention, order=vecops.NESTED_ORDER) + epsilon * np.array([
        vecops.laplace_chen(upsilon.component(i), point, mu, vecops.LaplacianForm.COMPOSED, convention,
                            order=vecops.NESTED_ORDER)
        for i in range(3)
    ])
    return float(np.max(np.abs(lhs - rhs)))


def material_derivative(phi, upsilon, point, time, mu, convention=vecops.Convention.PAPER_LITERAL):
    """ Material Hausdorff derivative d_t phi + v . grad phi """

    phi = _space_time_scalar(phi)
    upsilon = _space_time_vector(upsilon)
    velocity = np.asarray(upsilon(time, *point), dtype=float)
    gradient = vecops.gradient(phi.at(time), point, mu, convention)
    return float(phi.time_derivative(point, time) + np.dot(velocity, gradient))


def continuity_residual(rho, upsilon, point, time, mu, convention=vecops.Convention.PAPER_LITERAL):
    """
    Mass conservation residual d_t rho + v . grad rho. A constant velocity (three numbers) also
    evaluates the divergence form d_t rho + div(rho v), which must agree.
    """

    residual = material_derivative(rho, upsilon, point, time, mu, convention)
    if not _is_constant_vector(upsilon):
        return residual

    rho = _space_time_scalar(rho)
    snapshot = rho.at(time)
    flux = fields.VectorField3D([
        (lambda c: lambda x, y, z: c * snapshot(x, y, z))(float(c)) for c in upsilon
    ])
    conservative = rho.time_derivative(point, time) + vecops.divergence(flux, point, mu, convention)
    if abs(conservative - residual) > CONTINUITY_TOLERANCE * max(1.0, abs(residual)):
        raise errors.HausdorffException('advective and divergence forms of continuity disagree ({} vs {})'.format(
            residual, conservative))
    return residual


def transport_identity_check(G, upsilon, box, mu=None, convention=vecops.Convention.MAPPED_CONSISTENT, quad=None,
                             refine=False, time=0.0):
    """
    Transport kernel: int v . grad G dV against the flux of G v. The identity needs a
    divergence-free velocity; otherwise the row is noted and not asserted.
    """

    G = fields.at_time(G, time)
    G = fields.as_scalar_field(G)
    upsilon = fields.at_time(upsilon, time)
    upsilon = fields.as_vector_field(upsilon)
    mu = core.as_dimension(mu if mu is not None else box.mu)
    convention = vecops.Convention.parse(convention)

    notes = []
    asserted = None
    samples = [np.linspace(a, b, 5)[1:-1] for a, b in box.mapped_bounds]
    worst = max(abs(vecops.divergence(upsilon, (mu.unmap(u), mu.unmap(v), mu.unmap(w)), mu, convention))
                for u in samples[0] for v in samples[1] for w in samples[2])
    if worst > DIVERGENCE_FREE_TOLERANCE:
        logger.warning('Transport velocity is not divergence-free (max |div| = %g)', worst)
        notes.append('velocity is not divergence-free (max |div| = {:.3g})'.format(worst))
        asserted = False

    advection = fields.ScalarField3D(lambda x, y, z: sum(
        upsilon.component(i)(x, y, z) * vecops.gradient_component(G, i, (x, y, z), mu, convention,
                                                                  order=vecops.NESTED_ORDER)
        for i in range(3)
    ))
    flux = fields.VectorField3D([
        (lambda c: lambda x, y, z: G(x, y, z) * c(x, y, z))(c) for c in upsilon.components
    ])

    def sides(level):
        return integrals.volume_integral(advection, box, mu, level), integrals.flux_closed(flux, box, mu, level)

    return theorems.evaluate('transport_kernel', convention, mu, sides, quad, refine, theorems.IDENTITY_TOLERANCE,
                             asserted, notes)


@dataclasses.dataclass(frozen=True)
class MomentumResidual:
    """ Componentwise momentum residual and the incompressibility residual div v """

    momentum: np.ndarray
    incompressibility: float

    @property
    def max_abs(self):
        """ Gets the largest absolute momentum component """

        return float(np.max(np.abs(self.momentum)))


def _momentum_terms(state, point, time, mu, convention, laplacian_form):
    """ rho (d_t v + v . grad v) + grad p - epsilon lap v, without the body force """

    order = vecops.NESTED_ORDER
    velocity = state.velocity.at(time)
    here = np.asarray(velocity(*point), dtype=float)
    inertia = state.velocity.time_derivative(point, time) + np.array([
        np.dot(here, vecops.gradient(velocity.component(i), point, mu, convention, order=order)) for i in range(3)
    ])
    pressure = vecops.gradient(state.pressure.at(time), point, mu, convention, order=order)
    viscous = np.array([
        vecops.laplace_chen(velocity.component(i), point, mu, laplacian_form, convention, order=order)
        for i in range(3)
    ])
    return state.density(time, *point) * inertia + pressure - state.epsilon * viscous


def momentum_residual(state, point, time, mu, convention=vecops.Convention.MAPPED_CONSISTENT,
                      laplacian_form=vecops.LaplacianForm.COMPOSED):
    """ Residual of the power-law flow momentum balance and of incompressibility at one point """

    mu = core.as_dimension(mu)
    convention = vecops.Convention.parse(convention)
    laplacian_form = vecops.LaplacianForm(laplacian_form)
    momentum = _momentum_terms(state, point, time, mu, convention, laplacian_form) - \
        np.asarray(state.body_force(time, *point), dtype=float)
    incompressibility = float(vecops.divergence(state.velocity.at(time), point, mu, convention,
                                                order=vecops.NESTED_ORDER))
    return MomentumResidual(momentum, incompressibility)


def manufactured_body_force(state, mu, convention=vecops.Convention.MAPPED_CONSISTENT,
                            laplacian_form=vecops.LaplacianForm.COMPOSED):
    """ Body force that makes the state satisfy the momentum balance exactly """

    mu = core.as_dimension(mu)
    convention = vecops.Convention.parse(convention)
    laplacian_form = vecops.LaplacianForm(laplacian_form)

    def component(i):
        return lambda t, x, y, z: _momentum_terms(state, (x, y, z), t, mu, convention, laplacian_form)[i]

    return fields.SpaceTimeVectorField([component(i) for i in range(3)], name='manufactured_body_force')


class Equation(enum.Enum):
    """ One-dimensional model equations """

    DIFFUSION = 'diffusion'
    BURGERS = 'burgers'


class _AbstractBoundary(abc.ABC):
    """ Declare the interface of boundary treatments for the 1-D solvers """

    @property
    @abc.abstractmethod
    def holds_values(self):
        """ Gets whether the end nodes carry imposed values """

        pass

    @abc.abstractmethod
    def impose(self, values, time):
        """ Writes imposed end values into `values` in place """

        pass

    @abc.abstractmethod
    def pad(self, values):
        """ Gets `values` extended by one ghost node on either side """

        pass


class DirichletBoundary(_AbstractBoundary):
    """ Prescribed end values; each may be a number or a function of time """

    def __init__(self, left, right):
        self.__left = left
        self.__right = right

    @property
    def holds_values(self):
        return True

    def value(self, side, time):
        """ Gets the value at the 'left' or 'right' end at `time` """

        value = self.__left if side == 'left' else self.__right
        return float(value(time)) if callable(value) else float(value)

    def impose(self, values, time):
        values[0] = self.value('left', time)
        values[-1] = self.value('right', time)

    def pad(self, values):
        return np.pad(values, 1, mode='edge')


class ReflectiveBoundary(_AbstractBoundary):
    """ Zero-flux ends, mirrored through ghost nodes """

    @property
    def holds_values(self):
        return False

    def impose(self, values, time):
        pass

    def pad(self, values):
        return np.pad(values, 1, mode='reflect')


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """ Grid and time-stepping parameters; dt None selects the automatic CFL step """

    interval: tuple
    nodes: int
    t_end: float
    dt: float = None
    snapshot_times: tuple = ()
    safety: float = CFL_SAFETY

    def __post_init__(self):
        a, b = float(self.interval[0]), float(self.interval[1])
        if a < 0.0 or not a < b:
            raise errors.HausdorffException('invalid solver interval [{}, {}]'.format(a, b))
        if self.nodes < 5:
            raise errors.HausdorffException('at least 5 nodes are required, got {}'.format(self.nodes))
        if not self.t_end > 0.0:
            raise errors.HausdorffException('final time must be positive, got {}'.format(self.t_end))
        if self.dt is not None and not self.dt > 0.0:
            raise errors.HausdorffException('time step must be positive, got {}'.format(self.dt))
        object.__setattr__(self, 'interval', (a, b))

    @property
    def times(self):
        """ Gets the sorted output times, always starting at 0 and ending at t_end """

        times = {0.0, float(self.t_end)}
        for t in self.snapshot_times:
            if not 0.0 <= t <= self.t_end:
                raise errors.HausdorffException('snapshot time {} is outside [0, {}]'.format(t, self.t_end))
            times.add(float(t))
        return tuple(sorted(times))


@dataclasses.dataclass(frozen=True)
class Grid1DSolution:
    """ Snapshots of a 1-D solve on a grid uniform in u = x^mu, with its CFL certificate """

    equation: str
    mu: float
    interval: tuple
    nodes: int
    dt: float
    cfl_bound: float
    steps: int
    mapped: np.ndarray
    x: np.ndarray
    times: tuple
    snapshots: tuple

    @property
    def spacing(self):
        """ Gets the mapped grid spacing """

        return float(self.mapped[1] - self.mapped[0])

    def snapshot(self, index=-1):
        """ Gets the solution values of one snapshot """

        return self.snapshots[index]

    def l2_error(self, exact, index=-1):
        """ L2 error in u of a snapshot against exact(t, x) """

        error = self.snapshots[index] - np.asarray(exact(self.times[index], self.x), dtype=float)
        return math.sqrt(float(scipy.integrate.trapezoid(error ** 2, self.mapped)))

    def l2_difference(self, other, index=-1):
        """ L2 difference in u against a finer solution sharing the coarse nodes """

        ratio = (other.nodes - 1) // (self.nodes - 1)
        if ratio < 1 or (self.nodes - 1) * ratio != other.nodes - 1:
            raise errors.HausdorffException('reference grid does not nest the coarse grid')
        error = self.snapshots[index] - other.snapshots[index][::ratio]
        return math.sqrt(float(scipy.integrate.trapezoid(error ** 2, self.mapped)))

    @property
    def certificate(self):
        """ Gets the stored CFL certificate """

        return {'dt': self.dt, 'bound': self.cfl_bound, 'safety': CFL_SAFETY, 'steps': self.steps,
                'spacing': self.spacing}

    def rows(self):
        """ Gets (t, x, u, value) rows of every snapshot """

        for time, values in zip(self.times, self.snapshots):
            for x, u, value in zip(self.x, self.mapped, values):
                yield float(time), float(x), float(u), float(value)


def fractal_mass(solution, index=-1):
    """ mu int v x^(mu-1) dx, i.e. the trapezoid integral of v over u """

    return float(scipy.integrate.trapezoid(solution.snapshots[index], solution.mapped))


def diffusion_invariant(solution, index=-1):
    """ Trapezoid integral of v / (mu^2 x^(2mu-2)) over u, conserved by reflective diffusion """

    mu = core.as_dimension(solution.mu)
    weight = mu.mu ** 2 * np.power(solution.x, 2.0 * mu.mu - 2.0)
    return float(scipy.integrate.trapezoid(solution.snapshots[index] / weight, solution.mapped))


def _first_difference(padded, velocity, spacing):
    """ d/du on the interior of a ghost-padded array; second-order upwind away from the ends """

    central = (padded[2:] - padded[:-2]) / (2.0 * spacing)
    n = len(velocity)
    derivative = central.copy()
    values = padded[1:-1]
    backward = np.zeros(n)
    forward = np.zeros(n)
    backward[2:] = (3.0 * values[2:] - 4.0 * values[1:-1] + values[:-2]) / (2.0 * spacing)
    forward[:-2] = (-3.0 * values[:-2] + 4.0 * values[1:-1] - values[2:]) / (2.0 * spacing)
    index = np.arange(n)
    use_backward = (velocity > 0.0) & (index >= 2)
    use_forward = (velocity < 0.0) & (index <= n - 3)
    derivative[use_backward] = backward[use_backward]
    derivative[use_forward] = forward[use_forward]
    return derivative


def _solve(equation, initial, boundary, theta, mu, grid, source):
    equation = Equation(equation)
    mu = core.as_dimension(mu)
    a, b = grid.interval
    if a == 0.0 and not mu.classical:
        raise errors.HausdorffException('singular diffusion coefficient at origin')
    if not theta > 0.0:
        raise errors.HausdorffException('diffusivity must be positive, got {}'.format(theta))
    initial = core.as_function(initial)

    mapped = np.linspace(float(mu.map(a)), float(mu.map(b)), grid.nodes)
    x = mu.unmap(mapped)
    x[0], x[-1] = a, b
    spacing = mapped[1] - mapped[0]
    coefficient = theta * mu.mu ** 2 * np.power(x, 2.0 * mu.mu - 2.0)
    # mu x^(mu-1) converts d/du into d/dx
    stretch = mu.density(x)

    values = np.asarray(initial(x), dtype=float).copy()
    boundary.impose(values, 0.0)

    diffusive_bound = spacing ** 2 / (2.0 * np.max(coefficient))

    def stability_bound(state):
        # The advective limit follows the current speed, which sources and boundaries may raise
        bound = diffusive_bound
        if equation is Equation.BURGERS:
            speed = np.max(np.abs(state * stretch))
            if speed > 0.0:
                bound = min(bound, spacing / speed)
        return bound * grid.safety

    def check_step(dt, bound, time):
        if dt > bound * (1.0 + 1e-12):
            raise errors.HausdorffException('time step exceeds stability bound ({:.6g} > {:.6g} at t={:.6g})'.format(
                dt, bound, time))

    bound = stability_bound(values)
    if grid.dt is not None:
        check_step(grid.dt, bound, 0.0)
    logger.debug('%s solve: %d nodes, du=%g, CFL bound %g', equation.value, grid.nodes, spacing, bound)

    def rhs(time, state):
        padded = boundary.pad(state)
        derivative = coefficient * (padded[2:] - 2.0 * padded[1:-1] + padded[:-2]) / spacing ** 2
        if equation is Equation.BURGERS:
            derivative -= state * stretch * _first_difference(padded, state, spacing)
        if source is not None:
            derivative += np.asarray(source(time, x), dtype=float)
        if boundary.holds_values:
            derivative[0] = derivative[-1] = 0.0
        return derivative

    def stage(time, state):
        boundary.impose(state, time)
        return rhs(time, state)

    def step(time, state, dt):
        k1 = stage(time, state.copy())
        k2 = stage(time + 0.5 * dt, state + 0.5 * dt * k1)
        k3 = stage(time + 0.5 * dt, state + 0.5 * dt * k2)
        k4 = stage(time + dt, state + dt * k3)
        result = state + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        boundary.impose(result, time + dt)
        if not np.all(np.isfinite(result)) or np.max(np.abs(result)) > OVERFLOW_LIMIT:
            raise errors.HausdorffException('solution magnitude overflow')
        return result

    times = grid.times
    snapshots = [values.copy()]
    steps = 0
    # The certificate is the step closest to its own bound
    certified = (0.0, bound)
    time = 0.0
    for target in times[1:]:
        while target - time > 1e-12 * max(1.0, target):
            remaining = target - time
            bound = stability_bound(values)
            if grid.dt is None:
                dt = min(bound, remaining / max(1, math.ceil(remaining / bound - 1e-9)))
            else:
                dt = min(grid.dt, remaining)
                check_step(dt, bound, time)
            values = step(time, values, dt)
            time += dt
            steps += 1
            if dt / bound > certified[0] / certified[1]:
                certified = (dt, bound)
        time = target
        snapshots.append(values.copy())

    return Grid1DSolution(equation=equation.value, mu=mu.mu, interval=(a, b), nodes=grid.nodes,
                          dt=certified[0], cfl_bound=certified[1], steps=steps, mapped=mapped, x=x, times=times,
                          snapshots=tuple(snapshots))


def solve_anomalous_diffusion(initial, boundary, theta, mu, grid, source=None):
    """ Integrates d_t v = theta mu^2 x^(2mu-2) d^2 v / d(x^mu)^2 + source with RK4 """

    return _solve(Equation.DIFFUSION, initial, boundary, theta, mu, grid, source)


def solve_fractal_burgers(initial, boundary, theta, mu, grid, source=None):
    """ Integrates d_t v + v mu x^(mu-1) dv/d(x^mu) = theta mu^2 x^(2mu-2) d^2 v / d(x^mu)^2 + source """

    return _solve(Equation.BURGERS, initial, boundary, theta, mu, grid, source)


def refinement_study(run, node_counts):
    """
    Runs `run(nodes) -> (solution, error)` on successively finer grids and estimates the observed
    order of the error in the mapped spacing
    """

    recorder = pytools.convergence.EOCRecorder()
    errors_ = []
    for nodes in node_counts:
        solution, error = run(nodes)
        recorder.add_data_point(solution.spacing, error)
        errors_.append(error)
        logger.info('%d nodes: error %.6g', nodes, error)
    # Exact runs (constant states) have no measurable order
    order = None
    if len(errors_) > 1 and min(errors_) > 0.0:
        order = float(recorder.order_estimate())
    return errors_, order

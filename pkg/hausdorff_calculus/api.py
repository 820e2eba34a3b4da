import hausdorff_calculus.core as core
import hausdorff_calculus.errata as errata
import hausdorff_calculus.field_factory as field_factory
import hausdorff_calculus.flowpde as flowpde
import hausdorff_calculus.suite as suite
import hausdorff_calculus.theorems as theorems

import hausdorff_calculus

import concurrent.futures
import dataclasses
import logging
import math
import numpy as np
import time
import traceback


logger = logging.getLogger(__name__)

TABLE_SAMPLES = 10
TABLE_TOLERANCE = 1e-6


@dataclasses.dataclass(frozen=True)
class SolveRun:
    """ The solutions of one solver run over its refinement levels, with their errors and timing """

    problem: str
    mu: float
    solutions: tuple
    errors: tuple
    observed_order: float
    exact: bool
    elapsed_seconds: float

    @property
    def finest(self):
        """ Gets the solution on the finest grid """

        return self.solutions[-1]

    def manifest(self):
        """ Gets the grid, CFL certificate, timing and error data of the run """

        finest = self.finest
        return {
            'problem': self.problem,
            'equation': finest.equation,
            'mu': self.mu,
            'grid': {'interval': list(finest.interval), 'nodes': [s.nodes for s in self.solutions],
                     'spacing': [s.spacing for s in self.solutions]},
            'cfl': [s.certificate for s in self.solutions],
            'snapshot_times': list(finest.times),
            'fractal_mass': [flowpde.fractal_mass(finest, 0), flowpde.fractal_mass(finest, -1)],
            'error_kind': 'exact' if self.exact else 'self_convergence',
            'l2_errors': list(self.errors),
            'observed_order': self.observed_order,
            'elapsed_seconds': self.elapsed_seconds,
        }


class Harness(object):
    """ Runs verification suites, closed-form tables, the errata ledger and the 1-D solvers for a RunConfig """

    def __init__(self, config):
        """ Creates a new harness for `config` """

        super(Harness, self).__init__()

        self.__config = config

        # Events
        self.on_report = self.__empty_report_handler
        self.on_solution = self.__empty_solution_handler
        self.on_error = self.__empty_error_event_handler

    @property
    def config(self):
        """ Gets the run configuration """

        return self.__config

    def manifest(self):
        """ Gets the reproducibility manifest of this harness' runs """

        return self.__config.manifest(hausdorff_calculus.__version__)

    def __empty_report_handler(self, harness, report):
        """ Empty event handler that should be overwritten by the client """

        pass

    def __empty_solution_handler(self, harness, solution):
        """ Empty event handler that should be overwritten by the client """

        pass

    def __empty_error_event_handler(self, harness, entry, message, exception):
        """ Empty error event handler that should be overwritten by the client """

        pass

    def __dispatch(self, func, tasks):
        """ Maps `func` over `tasks`, on a thread pool when more than one job is configured; keeps task order """

        if self.__config.jobs > 1 and len(tasks) > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=self.__config.jobs) as executor:
                return list(executor.map(func, tasks))
        return [func(task) for task in tasks]

    def __run_entry(self, task):
        entry, mu, convention = task
        try:
            return entry.run(core.as_dimension(mu), convention, self.__config.quad)
        except Exception as e:
            self.on_error(self, entry, 'Unable to run {} at mu={}'.format(entry.identity, mu), traceback.format_exc())
            label = convention.label if convention is not None else 'none'
            return [theorems.TheoremReport(identity=entry.identity, convention=label, mu=float(mu), lhs=0.0, rhs=0.0,
                                           abs_residual=0.0, rel_residual=0.0, tolerance=0.0, asserted=True,
                                           passed=False, notes=('error: {}'.format(e),))]

    def verify(self, entries=None):
        """
        Runs the suite entries (by default the seeded suite) for every configured fractal dimension and
        convention. Will raise events of type `on_report` for every report, in (identity, mu, convention) order.
        """

        if entries is None:
            entries = suite.build_suite(self.__config.seed)
        tasks = []
        for entry in entries:
            conventions = self.__config.conventions if entry.uses_convention else (None,)
            for mu in self.__config.mus:
                for convention in conventions:
                    tasks.append((entry, mu, convention))
        logger.info('Running %d suite tasks with %d job(s)', len(tasks), self.__config.jobs)

        reports = sorted((report for batch in self.__dispatch(self.__run_entry, tasks) for report in batch),
                         key=lambda report: report.sort_key)
        for report in reports:
            self.on_report(self, report)
        failed = [report for report in reports if report.failed]
        if failed:
            logger.warning('%d of %d asserted rows failed', len(failed), sum(r.asserted for r in reports))
        return reports

    def table_samples(self):
        """ Gets the seeded sample points of the closed-form tables """

        return np.random.default_rng(self.__config.seed).uniform(0.5, 1.5, size=TABLE_SAMPLES)

    def table(self):
        """ Gets one row per closed-form table entry and fractal dimension, plus the literal KWW row """

        samples = self.table_samples()
        cases = [core.ClosedFormCase(identity) for identity in core.TableIdentity]
        cases.append(core.ClosedFormCase(core.TableIdentity.I_STRETCHED_EXPONENTIAL, literal=True))
        rows = []
        for mu in self.__config.mus:
            for case in cases:
                residual = core.closed_form_table_check(case, mu, samples)
                if case.literal:
                    flag = 'errata'
                elif case.identity is core.TableIdentity.I_STRETCHED_EXPONENTIAL:
                    flag = 'corrected'
                else:
                    flag = ''
                rows.append({'identity': case.row_id, 'mu': float(mu), 'max_residual': residual,
                             'tolerance': TABLE_TOLERANCE, 'asserted': not case.literal,
                             'passed': residual <= TABLE_TOLERANCE, 'flag': flag})
        return sorted(rows, key=lambda row: (row['identity'], row['mu']))

    def errata(self):
        """ Gets the errata ledger items of every configured fractal dimension """

        rows = []
        for mu in self.__config.mus:
            for item in errata.build_ledger(mu, self.__config.quad, self.__config.seed):
                row = {'mu': float(mu)}
                row.update(item.to_dict())
                rows.append(row)
        return rows

    def __problem(self, mu):
        settings = self.__config.solver
        problem = field_factory.build_problem(settings.problem, settings.equation, mu, settings.theta,
                                              settings.domain)
        if settings.boundary == 'reflective' and not isinstance(problem.boundary, flowpde.ReflectiveBoundary):
            problem = dataclasses.replace(problem, boundary=flowpde.ReflectiveBoundary(), exact=None)
        elif settings.boundary == 'dirichlet' and not isinstance(problem.boundary, flowpde.DirichletBoundary):
            a, b = problem.interval
            ends = problem.initial(np.array([a, b]))
            problem = dataclasses.replace(problem, boundary=flowpde.DirichletBoundary(float(ends[0]), float(ends[1])),
                                          exact=None)
        return problem

    def __solve_one(self, mu):
        settings = self.__config.solver
        mu = core.as_dimension(mu)
        problem = self.__problem(mu)
        solver = {
            'diffusion': flowpde.solve_anomalous_diffusion,
            'burgers': flowpde.solve_fractal_burgers,
        }[settings.equation]

        started = time.perf_counter()
        solutions = {}
        node_counts = [(settings.nodes - 1) * 2 ** level + 1 for level in range(settings.levels)]
        for level, nodes in enumerate(node_counts):
            # A fixed step shrinks with the squared spacing so every level keeps its CFL margin
            dt = settings.dt / 4 ** level if settings.dt is not None else None
            grid = flowpde.GridSpec(problem.interval, nodes, settings.t_end, dt, settings.snapshots)
            solutions[nodes] = solver(problem.initial, problem.boundary, settings.theta, mu, grid, problem.source)

        order = None
        if problem.exact is not None:
            errors_, order = flowpde.refinement_study(
                lambda nodes: (solutions[nodes], solutions[nodes].l2_error(problem.exact)), node_counts)
        elif len(node_counts) > 1:
            following = dict(zip(node_counts, node_counts[1:]))
            errors_, order = flowpde.refinement_study(
                lambda nodes: (solutions[nodes], solutions[nodes].l2_difference(solutions[following[nodes]])),
                node_counts[:-1])
        else:
            errors_ = []
        elapsed = time.perf_counter() - started

        run = SolveRun(problem=problem.name, mu=mu.mu, solutions=tuple(solutions[n] for n in node_counts),
                       errors=tuple(float(e) for e in errors_),
                       observed_order=order if order is not None and math.isfinite(order) else None,
                       exact=problem.exact is not None, elapsed_seconds=elapsed)
        logger.info('Solved %s at mu=%s in %.3f s', problem.name, mu.mu, elapsed)
        return run

    def solve(self):
        """ Runs the configured solver for every fractal dimension. Will raise events of type `on_solution`. """

        runs = []
        for mu in self.__config.mus:
            try:
                run = self.__solve_one(mu)
            except Exception:
                self.on_error(self, None, 'Unable to solve at mu={}'.format(mu), traceback.format_exc())
                raise
            self.on_solution(self, run)
            runs.append(run)
        return runs

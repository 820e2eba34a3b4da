#!/usr/bin/env python

"""Tests for the seeded test fields and solver problems in `hausdorff_calculus.field_factory`."""

import hausdorff_calculus.errors as errors
import hausdorff_calculus.field_factory as field_factory
import hausdorff_calculus.fields as fields
import hausdorff_calculus.flowpde as flowpde
import hausdorff_calculus.vecops as vecops

import numpy as np
import unittest


class TestFieldFactories(unittest.TestCase):
    """Tests for the field family factories."""

    def test_unknown_family(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'unknown field family'):
            field_factory.get_field_factory('rational')

    def test_same_seed_same_field(self):
        factory = field_factory.get_field_factory('trigonometric')
        first = factory.scalar(np.random.default_rng(7), 0.5)
        second = factory.scalar(np.random.default_rng(7), 0.5)
        self.assertEqual(first(1.5, 2.0, 2.5), second(1.5, 2.0, 2.5))

    def test_polynomial_exact_partials(self):
        f = field_factory.get_field_factory('polynomial').scalar(np.random.default_rng(3), 0.5)
        self.assertTrue(f.polynomial)
        point = (1.5, 2.0, 2.5)
        for axis in range(3):
            exact = fields.chen_partial(f, axis, point, 0.5, exact=True)
            numeric = fields.chen_partial(f, axis, point, 0.5)
            self.assertAlmostEqual(exact, numeric, delta=1e-7)

    def test_function_derivatives(self):
        for family in field_factory.FIELD_FAMILIES:
            f = field_factory.get_field_factory(family).function(np.random.default_rng(11), 1.0)
            t = 1.3
            numeric = (f(t + 1e-6) - f(t - 1e-6)) / 2e-6
            self.assertAlmostEqual(f.classical_derivative(t), numeric, delta=1e-6)

    def test_solenoidal(self):
        for family in ('polynomial', 'trigonometric', 'exponential'):
            W = field_factory.get_field_factory(family).solenoidal(np.random.default_rng(5), 0.5)
            for point in [(1.5, 2.0, 2.5), (3.0, 1.2, 1.7)]:
                self.assertAlmostEqual(vecops.divergence(W, point, 0.5), 0.0, delta=1e-8)


class TestProblems(unittest.TestCase):
    """Tests for the builtin solver problems."""

    def test_unknown_problem(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'unknown problem'):
            field_factory.build_problem('shock', 'burgers', 0.5, 1.0)

    def test_heat_mode_exact_only_classically(self):
        classical = field_factory.build_problem('heat_mode', 'diffusion', 1.0, 1.0)
        self.assertEqual(classical.interval, (0.0, 1.0))
        self.assertIsNotNone(classical.exact)
        fractal = field_factory.build_problem('heat_mode', 'diffusion', 0.5, 1.0)
        self.assertIsNone(fractal.exact)
        burgers = field_factory.build_problem('heat_mode', 'burgers', 1.0, 1.0)
        self.assertIsNone(burgers.exact)

    def test_heat_mode_vanishes_at_the_ends(self):
        problem = field_factory.build_problem('heat_mode', 'diffusion', 0.5, 1.0, (1.0, 4.0))
        np.testing.assert_allclose(problem.initial(np.array([1.0, 4.0])), [0.0, 0.0], atol=1e-15)

    def test_manufactured_boundaries_follow_the_solution(self):
        problem = field_factory.build_problem('mms', 'burgers', 0.5, 1.0)
        self.assertEqual(problem.interval, (1.0, 4.0))
        self.assertAlmostEqual(problem.boundary.value('right', 0.3), problem.exact(0.3, 4.0), places=15)

    def test_pulse_is_reflective(self):
        problem = field_factory.build_problem('pulse', 'diffusion', 0.5, 1.0)
        self.assertIsInstance(problem.boundary, flowpde.ReflectiveBoundary)
        self.assertIsNone(problem.exact)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python

"""Tests for the one-dimensional Chen calculus in `hausdorff_calculus.core`."""

import hausdorff_calculus.core as core
import hausdorff_calculus.errors as errors

import math
import numpy as np
import scipy.integrate
import unittest


class TestFractalDimension(unittest.TestCase):
    """Tests for `FractalDimension`."""

    def test_rejects_out_of_range(self):
        for mu in (0.0, -0.5, 1.5, float('nan')):
            with self.assertRaises(errors.HausdorffException):
                core.FractalDimension(mu)

    def test_map_round_trip(self):
        mu = core.FractalDimension(0.5)
        self.assertAlmostEqual(mu.map(4.0), 2.0, places=14)
        self.assertAlmostEqual(mu.unmap(2.0), 4.0, places=14)
        self.assertTrue(core.FractalDimension(1.0).classical)

    def test_as_dimension_keeps_instances(self):
        mu = core.FractalDimension(0.25)
        self.assertIs(core.as_dimension(mu), mu)
        self.assertEqual(core.as_dimension(0.25), mu)


class TestChenDerivative(unittest.TestCase):
    """Tests for `chen_derivative`."""

    def test_power_of_mu_is_one(self):
        self.assertAlmostEqual(core.chen_derivative(lambda t: np.sqrt(t), 0.5, 2.0), 1.0, delta=1e-8)

    def test_classical_reduction(self):
        self.assertAlmostEqual(core.chen_derivative(lambda t: t ** 2, 1.0, 3.0), 6.0, delta=1e-8)

    def test_sine(self):
        expected = 2.0 * math.cos(1.0)
        self.assertAlmostEqual(core.chen_derivative(np.sin, 0.5, 1.0), expected, delta=1e-6)
        direct = core.chen_derivative(np.sin, 0.5, 1.0, method=core.DerivativeMethod.DIRECT_FORMULA)
        self.assertAlmostEqual(direct, expected, delta=1e-6)

    def test_array_abscissae(self):
        t = np.array([1.0, 4.0, 9.0])
        np.testing.assert_allclose(core.chen_derivative(lambda s: np.sqrt(s), 0.5, t), np.ones(3), atol=1e-8)

    def test_negative_abscissa(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'point outside domain'):
            core.chen_derivative(np.sin, 0.5, -1.0)

    def test_direct_formula_at_origin(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'singular prefactor at origin'):
            core.chen_derivative(np.sin, 0.5, 0.0, method=core.DerivativeMethod.DIRECT_FORMULA)

    def test_linearity(self):
        rng = np.random.default_rng(7)
        t = np.array([0.5, 1.0, 1.7, 2.5])
        for mu in (0.3, 0.5, 0.8, 1.0):
            a, b = rng.uniform(-2.0, 2.0, size=2)
            combined = lambda s: a * np.sin(s) + b * np.exp(s)  # noqa: E731
            expected = (a * core.chen_derivative(np.sin, mu, t, step=1e-3)
                        + b * core.chen_derivative(np.exp, mu, t, step=1e-3))
            actual = core.chen_derivative(combined, mu, t, step=1e-3)
            self.assertLessEqual(np.max(np.abs(actual - expected)), 1e-10, mu)

    def test_restricted_domain(self):
        f = core.AnalyticFunction1D(np.sin, domain=(1.0, 2.0))
        with self.assertRaisesRegex(errors.HausdorffException, 'point outside domain'):
            core.chen_derivative(f, 0.5, 2.0)


class TestChenIntegral(unittest.TestCase):
    """Tests for `chen_integral` and `indefinite_integral`."""

    def test_unit_integrand(self):
        self.assertAlmostEqual(core.chen_integral(lambda t: 1.0, 0.5, 0.0, 4.0), 2.0, delta=1e-12)

    def test_classical_reduction(self):
        self.assertAlmostEqual(core.chen_integral(lambda t: t, 1.0, 0.0, 1.0), 0.5, delta=1e-12)

    def test_sine_against_adaptive_quadrature(self):
        oracle, _ = scipy.integrate.quad(lambda t: 0.5 * math.sin(t) * t ** -0.5, 1.0, 2.0, epsabs=1e-13)
        self.assertAlmostEqual(core.chen_integral(np.sin, 0.5, 1.0, 2.0), oracle, delta=1e-8)

    def test_interval_errors(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'empty or reversed interval'):
            core.chen_integral(np.sin, 0.5, 2.0, 1.0)
        with self.assertRaisesRegex(errors.HausdorffException, 'negative abscissa'):
            core.chen_integral(np.sin, 0.5, -1.0, 1.0)

    def test_linearity(self):
        rng = np.random.default_rng(11)
        for mu in (0.3, 0.5, 0.8, 1.0):
            a, b = rng.uniform(-2.0, 2.0, size=2)
            combined = lambda s: a * np.cos(s) + b * np.log1p(s)  # noqa: E731
            expected = a * core.chen_integral(np.cos, mu, 0.5, 2.0) + b * core.chen_integral(np.log1p, mu, 0.5, 2.0)
            self.assertLessEqual(abs(core.chen_integral(combined, mu, 0.5, 2.0) - expected), 1e-10, mu)

    def test_indefinite_integral(self):
        antiderivative = core.indefinite_integral(lambda t: 1.0, 0.5, 1.0)
        self.assertEqual(antiderivative(1.0), 0.0)
        self.assertAlmostEqual(antiderivative(9.0), 2.0, delta=1e-12)


class TestKww(unittest.TestCase):
    """Tests for the stretched exponential."""

    def test_closed_form(self):
        self.assertAlmostEqual(core.kww(1.0, 0.5, 4.0), math.exp(2.0), places=12)

    def test_origin(self):
        for mode in core.KwwMode:
            self.assertEqual(core.kww(-3.0, 0.3, 0.0, mode), 1.0)

    def test_series_matches_closed_form(self):
        series = core.kww(2.0, 0.5, 1.0, core.KwwMode.SERIES, nterms=50)
        self.assertLessEqual(abs(series - core.kww(2.0, 0.5, 1.0)), 1e-13)

    def test_series_decay(self):
        for beta, mu, t in ((-1.0, 1.0, 20.0), (-1.0, 1.0, 40.0), (-3.0, 0.5, 16.0), (-0.5, 0.3, 7.0),
                            (-2.0, 0.8, 150.0)):
            closed = core.kww(beta, mu, t)
            series = core.kww(beta, mu, t, core.KwwMode.SERIES)
            self.assertLessEqual(abs(series - closed), 1e-12 * closed, (beta, mu, t))

    def test_overflow(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'magnitude overflow'):
            core.kww(1.0, 1.0, 800.0)


class TestRules(unittest.TestCase):
    """Tests for the algebraic rules."""

    def test_product_rule(self):
        f = lambda t: np.sqrt(t)  # noqa: E731
        self.assertLessEqual(core.check_rule(core.Rule.PRODUCT, f, f, 0.5, [1.0, 2.0, 3.0]), 1e-6)

    def test_sum_rule_classical(self):
        self.assertLessEqual(core.check_rule(core.Rule.SUM, np.sin, np.exp, 1.0, [0.5, 1.0, 1.5]), 1e-8)

    def test_parts(self):
        f1 = lambda t: np.sqrt(t)  # noqa: E731
        f2 = lambda t: np.exp(np.sqrt(t))  # noqa: E731
        self.assertLessEqual(core.check_rule(core.Rule.PARTS, f1, f2, 0.5, [1.0, 2.0]), 1e-8)

    def test_chain_rule_uses_outer_derivative(self):
        outer = core.AnalyticFunction1D(np.sin, np.cos)
        self.assertLessEqual(core.check_rule(core.Rule.CHAIN, outer, np.exp, 0.5, [0.5, 1.0]), 1e-6)

    def test_quotient_by_zero(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'division by near-zero'):
            core.check_rule(core.Rule.QUOTIENT, np.sin, lambda t: t - 1.0, 0.5, [1.0, 2.0])


class TestFundamentalTheorems(unittest.TestCase):
    """Tests for the fundamental theorems and the mean value point."""

    def test_first_theorem(self):
        first, _ = core.fundamental_theorem_residuals(lambda t: t, 0.5, 1.0, 4.0)
        self.assertLessEqual(first, 1e-8)

    def test_second_theorem_from_origin(self):
        _, second = core.fundamental_theorem_residuals(lambda t: 1.0, 0.5, 0.0, 3.0)
        self.assertLessEqual(second, 1e-8)

    def test_classical_cosine(self):
        first, second = core.fundamental_theorem_residuals(np.cos, 1.0, 0.5, 2.0)
        self.assertLessEqual(first, 1e-8)
        self.assertLessEqual(second, 1e-8)

    def test_function_corpus(self):
        corpus = (np.sin, np.exp, np.log1p, lambda t: np.cos(t) + t ** 3, lambda t: t ** 2 * np.exp(-t))
        for mu in (0.3, 0.5, 0.8, 1.0):
            for index, f in enumerate(corpus):
                with self.subTest(mu=mu, function=index):
                    first, second = core.fundamental_theorem_residuals(f, mu, 0.5, 2.0)
                    self.assertLessEqual(first, 1e-6)
                    self.assertLessEqual(second, 1e-6)

    def test_net_change_matches_first_theorem(self):
        first, _ = core.fundamental_theorem_residuals(np.sin, 0.5, 1.0, 2.0)
        self.assertEqual(core.net_change_residual(np.sin, 0.5, 1.0, 2.0), first)

    def test_mean_value_point(self):
        self.assertAlmostEqual(core.mean_value_point(lambda t: np.sqrt(t), 0.5, 0.0, 4.0), 1.0, delta=1e-8)
        self.assertAlmostEqual(core.mean_value_point(lambda t: t, 1.0, 0.0, 2.0), 1.0, delta=1e-8)

    def test_mean_value_point_not_bracketed(self):
        bump = lambda t: (t - 1.0) ** 2  # noqa: E731
        with self.assertRaisesRegex(errors.HausdorffException, 'mean value point not bracketed'):
            core.mean_value_point(bump, 1.0, 0.0, 2.0)


class TestClosedFormTables(unittest.TestCase):
    """Tests for the closed-form derivative and integral tables."""

    def setUp(self):
        self.samples = np.random.default_rng(0).uniform(0.5, 1.5, size=10)

    def test_stretched_exponential_derivative(self):
        case = core.ClosedFormCase(core.TableIdentity.D_STRETCHED_EXPONENTIAL, beta=2.0)
        self.assertLessEqual(core.closed_form_table_check(case, 0.5, [1.0]), 1e-6)
        self.assertAlmostEqual(case.target(np.array([1.0]))[0], 2.0 * math.exp(2.0), places=12)

    def test_constant_is_exact(self):
        case = core.ClosedFormCase(core.TableIdentity.D_CONSTANT)
        self.assertEqual(core.closed_form_table_check(case, 0.5, self.samples), 0.0)

    def test_every_entry(self):
        for mu in (0.5, 1.0):
            for identity in core.TableIdentity:
                with self.subTest(identity=identity, mu=mu):
                    case = core.ClosedFormCase(identity)
                    self.assertLessEqual(core.closed_form_table_check(case, mu, self.samples), 1e-6)

    def test_literal_stretched_exponential(self):
        case = core.ClosedFormCase(core.TableIdentity.I_STRETCHED_EXPONENTIAL, beta=2.0, literal=True)
        expected = abs(2.0 - 0.5) * np.max(np.exp(2.0 * np.sqrt(self.samples)))
        self.assertAlmostEqual(core.closed_form_table_check(case, 0.5, self.samples), expected, delta=1e-9)
        self.assertEqual(case.row_id, 'i_stretched_exponential_literal')

    def test_invalid_parameters(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'invalid case parameters'):
            core.ClosedFormCase(core.TableIdentity.D_EXPONENTIAL_BASE, s=1.0)
        with self.assertRaisesRegex(errors.HausdorffException, 'invalid case parameters'):
            core.ClosedFormCase(core.TableIdentity.I_STRETCHED_EXPONENTIAL, beta=0.0)

    def test_nonpositive_samples(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'point outside domain'):
            core.closed_form_table_check(core.ClosedFormCase(core.TableIdentity.D_POWER), 0.5, [0.0, 1.0])


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python

"""Tests for the integral theorems in `hausdorff_calculus.theorems`."""

import hausdorff_calculus.errors as errors
import hausdorff_calculus.fields as fields
import hausdorff_calculus.integrals as integrals
import hausdorff_calculus.theorems as theorems
import hausdorff_calculus.vecops as vecops

import math
import numpy as np
import unittest


PAPER = vecops.Convention.PAPER_LITERAL
MAPPED = vecops.Convention.MAPPED_CONSISTENT
QUAD = integrals.QuadratureSpec(8, 2)


def _mapped_identity():
    return fields.VectorField3D([lambda x, y, z: np.sqrt(x), lambda x, y, z: np.sqrt(y), lambda x, y, z: np.sqrt(z)])


def _planar_field():
    return fields.VectorField3D([lambda x, y, z: 0.0, lambda x, y, z: np.sqrt(x), lambda x, y, z: 0.0])


def _region(mu=0.5):
    return fields.RectangleRegion(fields.Plane.XY, (1.0, 4.0), (1.0, 9.0), 1.0, 1, mu)


class TestTheoremReport(unittest.TestCase):
    """Tests for `TheoremReport.build`."""

    def test_at_least(self):
        report = theorems.TheoremReport.at_least('quotient_order', MAPPED, 0.5, 2.1, 1.0)
        self.assertTrue(report.passed)
        self.assertEqual(report.abs_residual, 0.0)
        report = theorems.TheoremReport.at_least('quotient_order', MAPPED, 0.5, 0.4, 1.0)
        self.assertTrue(report.failed)
        self.assertAlmostEqual(report.abs_residual, 0.6, places=12)
        report = theorems.TheoremReport.at_least('quotient_order', PAPER, 0.5, None, 1.0)
        self.assertEqual(report.lhs, 0.0)
        self.assertFalse(report.asserted)
        self.assertEqual(report.notes, ('no measurable value',))

    def test_paper_rows_below_one_are_not_asserted(self):
        report = theorems.TheoremReport.build('gauss_like', 'paper', 0.5, 1.0, 2.0, 1e-8)
        self.assertEqual(report.convention, 'paper_literal')
        self.assertFalse(report.asserted)
        self.assertFalse(report.passed)
        self.assertFalse(report.failed)

    def test_classical_paper_rows_are_asserted(self):
        report = theorems.TheoremReport.build('gauss_like', PAPER, 1.0, 1.0, 1.0, 1e-8)
        self.assertTrue(report.asserted)
        self.assertTrue(report.passed)

    def test_convention_free_rows(self):
        report = theorems.TheoremReport.build('ft_first', None, 0.5, 0.0, 1e-9, 1e-8)
        self.assertEqual(report.convention, 'none')
        self.assertTrue(report.asserted)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.rel_residual, 1.0)

    def test_vanishing_sides(self):
        report = theorems.TheoremReport.build('curl_of_gradient', MAPPED, 0.5, 0.0, 0.0, 1e-8)
        self.assertEqual(report.rel_residual, 0.0)
        self.assertTrue(report.passed)

    def test_relative_tolerance(self):
        report = theorems.TheoremReport.build('gauss_like', MAPPED, 0.5, 1000.0, 1000.0001, 1e-6)
        self.assertTrue(report.passed)
        report = theorems.TheoremReport.build('gauss_like', MAPPED, 0.5, 1000.0, 1000.01, 1e-6)
        self.assertTrue(report.failed)

    def test_to_dict(self):
        report = theorems.TheoremReport.build('gauss_like', MAPPED, 0.5, 1.0, 1.0, 1e-8, notes=['quad 8x2'])
        data = report.to_dict()
        self.assertEqual(data['notes'], ['quad 8x2'])
        self.assertEqual(data['convention'], 'mapped_consistent')
        self.assertEqual(report.sort_key, ('gauss_like', 0.5, 'mapped_consistent'))


class TestGaussLike(unittest.TestCase):
    """Tests for `gauss_like`."""

    def setUp(self):
        self.box = fields.BoxDomain(((1.0, 16.0), (1.0, 16.0), (1.0, 16.0)), 0.5)

    def test_mapped_identity_field(self):
        report = theorems.gauss_like(_mapped_identity(), self.box, convention=MAPPED, quad=QUAD)
        self.assertAlmostEqual(report.lhs, 81.0, delta=1e-7)
        self.assertAlmostEqual(report.rhs, 81.0, delta=1e-7)
        self.assertTrue(report.asserted)
        self.assertTrue(report.passed)

    def test_paper_literal_gap(self):
        report = theorems.gauss_like(_mapped_identity(), self.box, convention=PAPER, quad=QUAD)
        # 3 * 0.5 * ln 4 per unit mapped length over the 3 x 3 cross-section
        self.assertAlmostEqual(report.lhs, 13.5 * math.log(4.0), delta=1e-6)
        self.assertAlmostEqual(report.rhs, 81.0, delta=1e-7)
        self.assertFalse(report.asserted)
        self.assertFalse(report.passed)

    def test_classical(self):
        box = fields.BoxDomain(((0.5, 1.5), (0.5, 1.0), (1.0, 2.0)), 1.0)
        W = fields.VectorField3D([lambda x, y, z: x * y, lambda x, y, z: np.sin(z), lambda x, y, z: x * z * z])
        for convention in vecops.Convention:
            report = theorems.gauss_like(W, box, convention=convention, quad=QUAD)
            self.assertTrue(report.passed, report)


class TestStokesAndGreen(unittest.TestCase):
    """Tests for `stokes_like` and `green_like`."""

    def test_stokes_mapped(self):
        report = theorems.stokes_like(_planar_field(), _region(), convention=MAPPED, quad=QUAD)
        self.assertAlmostEqual(report.lhs, 2.0, delta=1e-8)
        self.assertAlmostEqual(report.rhs, 2.0, delta=1e-8)
        self.assertTrue(report.passed)

    def test_stokes_paper_gap(self):
        report = theorems.stokes_like(_planar_field(), _region(), convention=PAPER, quad=QUAD)
        self.assertAlmostEqual(report.lhs, math.log(2.0), delta=1e-6)
        self.assertAlmostEqual(report.rhs, 2.0, delta=1e-8)
        self.assertFalse(report.asserted)

    def test_stokes_classical_rotation(self):
        region = fields.RectangleRegion(fields.Plane.XY, (1.0, 2.0), (1.0, 2.0), 1.0, 1, 1.0)
        W = fields.VectorField3D([lambda x, y, z: -y, lambda x, y, z: x, lambda x, y, z: 0.0])
        report = theorems.stokes_like(W, region, convention=PAPER, quad=QUAD)
        self.assertAlmostEqual(report.lhs, 2.0, delta=1e-8)
        self.assertTrue(report.passed)

    def test_green_mapped(self):
        report = theorems.green_like(_planar_field(), _region(), convention=MAPPED, quad=QUAD)
        self.assertAlmostEqual(report.lhs, 2.0, delta=1e-8)
        self.assertTrue(report.passed)

    def test_green_paper_gap_is_stable(self):
        coarse = theorems.green_like(_planar_field(), _region(), convention=PAPER, quad=QUAD)
        fine = theorems.green_like(_planar_field(), _region(), convention=PAPER, quad=QUAD.refined(2))
        self.assertAlmostEqual(coarse.rhs, math.log(2.0), delta=1e-6)
        self.assertAlmostEqual(coarse.rhs, fine.rhs, delta=1e-6)

    def test_green_needs_xy_plane(self):
        region = fields.RectangleRegion(fields.Plane.XZ, (1.0, 4.0), (1.0, 9.0), 1.0, 1, 0.5)
        with self.assertRaisesRegex(errors.HausdorffException, 'xy-plane'):
            theorems.green_like(_planar_field(), region)

    def test_green_needs_planar_field(self):
        T = fields.VectorField3D([lambda x, y, z: 0.0, lambda x, y, z: np.sqrt(x), lambda x, y, z: x])
        with self.assertRaisesRegex(errors.HausdorffException, 'zero z-component'):
            theorems.green_like(T, _region())


class TestGreenIdentities(unittest.TestCase):
    """Tests for `green_identity`."""

    def setUp(self):
        self.box = fields.BoxDomain(((1.0, 4.0), (1.0, 4.0), (1.0, 4.0)), 0.5)

    def test_first_mapped(self):
        psi = fields.ScalarField3D(lambda x, y, z: x, polynomial=True)
        theta = fields.ScalarField3D(lambda x, y, z: np.sqrt(y), polynomial=True)
        report = theorems.green_identity('first', psi, theta, self.box, convention=MAPPED, quad=QUAD)
        self.assertTrue(report.passed, report)
        self.assertEqual(report.identity, 'green_identity_first')

    def test_second_with_equal_fields(self):
        psi = fields.ScalarField3D(lambda x, y, z: np.exp(np.sqrt(x)) * np.sqrt(y * z))
        report = theorems.green_identity('second', psi, psi, self.box, convention=MAPPED, quad=QUAD)
        self.assertEqual(report.lhs, 0.0)
        self.assertEqual(report.rhs, 0.0)
        self.assertTrue(report.passed)

    def test_unknown_kind(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'unknown Green identity'):
            theorems.green_identity('third', lambda x, y, z: x, lambda x, y, z: y, self.box)


class TestLimitQuotients(unittest.TestCase):
    """Tests for the flux and circulation quotients."""

    def test_divergence_quotient(self):
        for estimate in theorems.divergence_flux_quotient(_mapped_identity(), (4.0, 4.0, 4.0), 0.5, [0.5, 0.25]):
            self.assertAlmostEqual(estimate, 3.0, delta=1e-10)

    def test_divergence_quotient_order(self):
        # (u^3, v^3, w^3) in mapped coordinates: box means exceed the divergence 36 by 3 delta^2
        W = fields.VectorField3D([lambda x, y, z: x ** 1.5, lambda x, y, z: y ** 1.5, lambda x, y, z: z ** 1.5])
        point = (4.0, 4.0, 4.0)
        halfwidths = [0.4, 0.2, 0.1, 0.04]
        estimates = theorems.divergence_flux_quotient(W, point, 0.5, halfwidths)
        for delta, estimate in zip(halfwidths, estimates):
            self.assertAlmostEqual(estimate, 36.0 + 3.0 * delta ** 2, delta=1e-9)
        order = theorems.quotient_order(estimates, halfwidths, vecops.divergence(W, point, 0.5, MAPPED))
        self.assertGreaterEqual(order, 1.0)
        self.assertAlmostEqual(order, 2.0, delta=0.05)
        stalled = theorems.quotient_order(estimates, halfwidths, vecops.divergence(W, point, 0.5, PAPER))
        self.assertLess(abs(stalled), 0.1)

    def test_exact_quotients_have_no_order(self):
        self.assertIsNone(theorems.quotient_order([3.0, 3.0], [0.5, 0.25], 3.0))
        self.assertIsNone(theorems.quotient_order([3.5], [0.5], 3.0))

    def test_quotient_tracks_mapped_divergence(self):
        W = fields.VectorField3D([lambda x, y, z: x, lambda x, y, z: 0.0, lambda x, y, z: 0.0])
        point = (4.0, 4.0, 4.0)
        mapped = vecops.divergence(W, point, 0.5, MAPPED)
        paper = vecops.divergence(W, point, 0.5, PAPER)
        estimates = theorems.divergence_flux_quotient(W, point, 0.5, [0.5, 0.1])
        self.assertAlmostEqual(estimates[-1], mapped, delta=1e-6)
        self.assertGreater(abs(estimates[-1] - paper), 1.0)

    def test_circulation_quotient(self):
        W = fields.VectorField3D([lambda x, y, z: -np.sqrt(y), lambda x, y, z: np.sqrt(x), lambda x, y, z: 0.0])
        for estimate in theorems.curl_circulation_quotient(W, (4.0, 4.0, 1.0), 0.5, [0.5, 0.25]):
            self.assertAlmostEqual(estimate, 2.0, delta=1e-10)

    def test_curl_flux_quotient(self):
        W = fields.VectorField3D([lambda x, y, z: -np.sqrt(y), lambda x, y, z: np.sqrt(x), lambda x, y, z: 0.0])
        estimates = theorems.curl_flux_quotient(W, (4.0, 4.0, 4.0), 0.5, [0.5])
        np.testing.assert_allclose(estimates[0], [0.0, 0.0, 2.0], atol=1e-10)

    def test_box_leaves_orthant(self):
        with self.assertRaisesRegex(errors.HausdorffException, 'box leaves the positive orthant'):
            theorems.divergence_flux_quotient(_mapped_identity(), (1.0, 1.0, 1.0), 0.5, [1.0])


if __name__ == '__main__':
    unittest.main()

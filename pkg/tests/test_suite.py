#!/usr/bin/env python

"""Tests for the seeded verification suite in `hausdorff_calculus.suite`."""

import hausdorff_calculus.core as core
import hausdorff_calculus.integrals as integrals
import hausdorff_calculus.suite as suite
import hausdorff_calculus.vecops as vecops

import unittest


QUAD = integrals.QuadratureSpec(8, 2)


class TestSuite(unittest.TestCase):
    """Tests for `build_suite` and its entries."""

    def test_identities_are_unique(self):
        identities = [entry.identity for entry in suite.build_suite()]
        self.assertEqual(len(identities), len(set(identities)))
        self.assertIn('gauss_like:anchor', identities)
        self.assertIn('rule_quotient', identities)

    def test_rng_depends_only_on_seed_identity_and_mu(self):
        mu = core.as_dimension(0.5)
        first = suite.GaussEntry('polynomial', seed=3).rng(mu).uniform(size=4)
        second = suite.GaussEntry('polynomial', seed=3).rng(mu).uniform(size=4)
        other = suite.StokesEntry('polynomial', seed=3).rng(mu).uniform(size=4)
        self.assertEqual(list(first), list(second))
        self.assertNotEqual(list(first), list(other))

    def test_gauss_anchor(self):
        mu = core.as_dimension(0.5)
        entry = suite.GaussEntry(None)
        mapped, = entry.run(mu, vecops.Convention.MAPPED_CONSISTENT, QUAD)
        self.assertEqual(mapped.identity, 'gauss_like:anchor')
        self.assertAlmostEqual(mapped.rhs, 81.0, delta=1e-7)
        self.assertTrue(mapped.passed)
        paper, = entry.run(mu, vecops.Convention.PAPER_LITERAL, QUAD)
        self.assertFalse(paper.asserted)

    def test_flux_quotient_matches_mapped_divergence(self):
        mu = core.as_dimension(0.5)
        exact, converging = suite.FluxQuotientEntry().run(mu, vecops.Convention.MAPPED_CONSISTENT, QUAD)
        self.assertAlmostEqual(exact.lhs, 3.0, delta=1e-10)
        self.assertTrue(exact.passed)
        self.assertEqual(converging.identity, 'divergence_flux_quotient_order')
        self.assertGreaterEqual(converging.lhs, suite.MIN_QUOTIENT_ORDER)
        self.assertTrue(converging.passed)
        self.assertTrue(converging.asserted)

    def test_flux_quotient_stalls_under_paper_convention(self):
        mu = core.as_dimension(0.5)
        _, converging = suite.FluxQuotientEntry().run(mu, vecops.Convention.PAPER_LITERAL, QUAD)
        self.assertFalse(converging.passed)
        self.assertFalse(converging.asserted)

    def test_mapped_rows_pass_below_one(self):
        mu = core.as_dimension(0.5)
        entries = [suite.StokesEntry(None), suite.GreenEntry(None), suite.GreenIdentityEntry(None),
                   suite.TransportEntry(None), suite.ProductIdentityEntry('polynomial')]
        for entry in entries:
            for report in entry.run(mu, vecops.Convention.MAPPED_CONSISTENT, QUAD):
                with self.subTest(identity=report.identity):
                    self.assertTrue(report.passed, report)

    def test_every_entry_passes_classically(self):
        mu = core.as_dimension(1.0)
        for entry in suite.build_suite():
            conventions = list(vecops.Convention) if entry.uses_convention else [None]
            for convention in conventions:
                for report in entry.run(mu, convention, QUAD):
                    with self.subTest(identity=report.identity, convention=report.convention):
                        self.assertTrue(report.asserted)
                        self.assertTrue(report.passed, report)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python

"""Tests for the `hausdorff-calculus` console script."""

import hausdorff_calculus.cli as cli

import json
import os
import unittest
from click.testing import CliRunner


class TestCli(unittest.TestCase):
    """Tests for `hausdorff_calculus.cli`."""

    def setUp(self):
        """Set up test fixtures, if any."""

        self.runner = CliRunner()

    def test_help(self):
        result = self.runner.invoke(cli.main, ['--help'])
        self.assertEqual(result.exit_code, 0)
        for command in ('verify', 'solve', 'table', 'errata'):
            self.assertIn(command, result.output)

    def test_table(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli.main, ['table', '--format', 'csv', '--out', 'out'])
            self.assertEqual(result.exit_code, cli.EXIT_OK, result.output)
            self.assertTrue(os.path.exists(os.path.join('out', 'table.csv')))
            with open(os.path.join('out', 'manifest.json')) as manifest_file:
                self.assertEqual(json.load(manifest_file)['command'], 'table')

    def test_errata(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli.main, ['errata', '--mu', '0.5', '--quad', '8x2'])
            self.assertEqual(result.exit_code, cli.EXIT_OK, result.output)
            self.assertIn('laplace_chen_second_equality mu=0.5', result.output)
            with open('errata.json') as errata_file:
                payload = json.load(errata_file)
            self.assertEqual(payload['manifest']['quadrature'], '8x2')

    def test_verify_classical(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli.main, ['verify', '--mu', '1.0', '--convention', 'both', '--quad', '8x2',
                                                   '--jobs', '2'])
            self.assertEqual(result.exit_code, cli.EXIT_OK, result.output)
            self.assertIn(', 0 failed', result.output)
            with open('reports.json') as reports_file:
                payload = json.load(reports_file)
            self.assertTrue(all(report['passed'] for report in payload['reports']))
            self.assertEqual(payload['manifest']['mu'], [1.0])

    def test_verify_is_reproducible(self):
        args = ['verify', '--mu', '1.0', '--convention', 'mapped', '--quad', '8x2', '--seed', '3']
        with self.runner.isolated_filesystem():
            outputs = []
            for directory in ('first', 'second'):
                result = self.runner.invoke(cli.main, args + ['--out', directory])
                self.assertEqual(result.exit_code, cli.EXIT_OK, result.output)
                contents = []
                for name in ('reports.json', 'reports.csv'):
                    with open(os.path.join(directory, name), 'rb') as output:
                        contents.append(output.read())
                outputs.append(contents)
            self.assertEqual(outputs[0], outputs[1])
            self.assertTrue(outputs[0][1].startswith(b'identity,'))

    def test_bad_config_file(self):
        with self.runner.isolated_filesystem():
            with open('run.ini', 'w') as config_file:
                config_file.write('[run]\nmu = 0.5\nwidth = 3\n')
            result = self.runner.invoke(cli.main, ['--config', 'run.ini', 'table'])
            self.assertEqual(result.exit_code, cli.EXIT_CONFIG_ERROR)
            self.assertIn('Configuration error: [run] width line 3: unknown key', result.output)

    def test_dt_with_auto_cfl(self):
        result = self.runner.invoke(cli.main, ['solve', '--dt', '1e-5', '--auto-cfl'])
        self.assertEqual(result.exit_code, cli.EXIT_CONFIG_ERROR)
        self.assertIn('mutually exclusive', result.output)

    def test_bad_quadrature(self):
        result = self.runner.invoke(cli.main, ['verify', '--quad', 'gauss'])
        self.assertEqual(result.exit_code, cli.EXIT_CONFIG_ERROR)

    def test_solve_heat_mode(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli.main, ['solve', '--mu', '1.0', '--nodes', '51', '--snapshots', '0.05'])
            self.assertEqual(result.exit_code, cli.EXIT_OK, result.output)
            with open('manifest.json') as manifest_file:
                manifest = json.load(manifest_file)
            run, = manifest['runs']
            self.assertLessEqual(run['l2_errors'][0], 1e-3)
            self.assertEqual(run['snapshot_times'], [0.0, 0.05, 0.1])
            with open('solution_mu1.csv', newline='') as solution_file:
                lines = solution_file.read().split('\r\n')
            self.assertEqual(lines[0], 't,x,u,value')
            self.assertEqual(len(lines), 1 + 3 * 51 + 1)

    def test_solve_step_too_large(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli.main, ['solve', '--mu', '1.0', '--nodes', '51', '--dt', '0.01'])
            self.assertEqual(result.exit_code, cli.EXIT_NUMERICAL_FAILURE)
            self.assertIn('Solver failed: time step exceeds stability bound', result.output)


if __name__ == '__main__':
    unittest.main()

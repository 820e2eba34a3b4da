#!/usr/bin/env python

"""Tests for CSV and JSON rendering in `hausdorff_calculus.report`."""

import hausdorff_calculus.report as report
import hausdorff_calculus.theorems as theorems

import json
import os
import tempfile
import unittest


def _reports():
    return [
        theorems.TheoremReport.build('stokes_like', 'mapped', 0.5, 2.0, 2.0, 1e-8),
        theorems.TheoremReport.build('gauss_like', 'paper', 0.5, 18.7, 81.0, 1e-8, notes=('gap', 'quad 8x2')),
        theorems.TheoremReport.build('gauss_like', 'mapped', 0.5, 81.0, 81.0, 1e-8),
    ]


class TestFormatting(unittest.TestCase):
    """Tests for cell formatting and CSV rendering."""

    def test_format_value(self):
        self.assertEqual(report.format_value(None), '')
        self.assertEqual(report.format_value(True), 'true')
        self.assertEqual(report.format_value(0.1), '0.10000000000000001')
        self.assertEqual(report.format_value(float('nan')), 'nan')
        self.assertEqual(report.format_value(['a', 2.0]), 'a; 2')
        self.assertEqual(report.format_value(3), '3')

    def test_csv(self):
        text = report.to_csv(report.REPORT_COLUMNS, report.report_rows(_reports()))
        lines = text.split('\r\n')
        self.assertEqual(lines[0], ','.join(report.REPORT_COLUMNS))
        self.assertEqual(lines[-1], '')
        self.assertTrue(lines[1].startswith('gauss_like,mapped_consistent,0.5,81,81,0,0,'))
        self.assertIn('gap; quad 8x2', lines[2])
        self.assertTrue(lines[3].startswith('stokes_like,'))

    def test_records_csv(self):
        text = report.records_csv([{'identity': 'd_power', 'mu': 0.5}, {'identity': 'd_sine', 'mu': 1.0}])
        self.assertEqual(text, 'identity,mu\r\nd_power,0.5\r\nd_sine,1\r\n')
        self.assertEqual(report.records_csv([]), '')


class TestJson(unittest.TestCase):
    """Tests for the JSON payloads and writers."""

    def test_payload_is_sorted_and_stable(self):
        manifest = {'version': '1.0.0', 'seed': 0}
        first = report.to_json(report.reports_payload(manifest, _reports()))
        second = report.to_json(report.reports_payload(manifest, list(reversed(_reports()))))
        self.assertEqual(first, second)
        payload = json.loads(first)
        self.assertEqual([r['identity'] for r in payload['reports']], ['gauss_like', 'gauss_like', 'stokes_like'])
        self.assertEqual(list(payload), ['manifest', 'reports'])

    def test_nan_is_rejected(self):
        with self.assertRaises(ValueError):
            report.to_json({'value': float('nan')})

    def test_write_reports(self):
        with tempfile.TemporaryDirectory() as directory:
            target = os.path.join(directory, 'out')
            paths = report.write_reports(target, 'reports', {'seed': 0}, _reports())
            self.assertEqual([os.path.basename(p) for p in paths], ['reports.json', 'reports.csv'])
            with open(paths[0]) as json_file:
                payload = json.load(json_file)
            self.assertEqual(len(payload['reports']), 3)
            self.assertEqual(payload['manifest'], {'seed': 0})
            with open(paths[1], newline='') as csv_file:
                lines = csv_file.read().split('\r\n')
            self.assertEqual(lines[0], ','.join(report.REPORT_COLUMNS))
            self.assertEqual(len(lines), 1 + 3 + 1)


if __name__ == '__main__':
    unittest.main()

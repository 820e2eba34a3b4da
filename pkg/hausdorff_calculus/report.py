import csv
import io
import json
import logging
import math
import os


logger = logging.getLogger(__name__)

REPORT_COLUMNS = ('identity', 'convention', 'mu', 'lhs', 'rhs', 'abs_residual', 'rel_residual', 'tolerance',
                  'asserted', 'passed', 'convergence_order', 'notes')
SNAPSHOT_COLUMNS = ('t', 'x', 'u', 'value')


def format_value(value):
    """ Formats one CSV cell: floats with 17 significant digits, '.' as decimal separator """

    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        if math.isnan(value):
            return 'nan'
        return '{:.17g}'.format(value)
    if isinstance(value, (list, tuple)):
        return '; '.join(format_value(v) for v in value)
    return str(value)


def to_csv(header, rows):
    """ Renders a header and rows as RFC 4180 CSV text """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\r\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()


def to_json(payload):
    """ Renders a payload as stable JSON text """

    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + '\n'


def sorted_reports(reports):
    """ Gets theorem reports in (identity, mu, convention) order """

    return sorted(reports, key=lambda report: report.sort_key)


def report_rows(reports):
    """ Gets the CSV rows of theorem reports """

    for report in sorted_reports(reports):
        data = report.to_dict()
        yield [data[column] for column in REPORT_COLUMNS]


def records_csv(records):
    """ Renders dict-like records (table rows, ledger items) as CSV with the keys of the first record """

    records = [record if isinstance(record, dict) else record.to_dict() for record in records]
    if not records:
        return ''
    header = list(records[0].keys())
    return to_csv(header, ([record[key] for key in header] for record in records))


def reports_payload(manifest, reports):
    """ Gets the {manifest, reports} JSON payload """

    return {'manifest': manifest, 'reports': [report.to_dict() for report in sorted_reports(reports)]}


def _write(directory, name, text):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    with open(path, 'w', encoding='utf-8', newline='') as output:
        output.write(text)
    logger.info('Wrote %s', path)
    return path


def write_reports(directory, name, manifest, reports):
    """ Writes theorem reports as the <name>.json payload plus a <name>.csv summary """

    return [_write(directory, name + '.json', to_json(reports_payload(manifest, reports))),
            _write(directory, name + '.csv', to_csv(REPORT_COLUMNS, report_rows(reports)))]


def write_records(directory, name, manifest, records, fmt):
    """ Writes table rows or ledger items in the requested format """

    if fmt == 'json':
        payload = {'manifest': manifest, 'reports': [r if isinstance(r, dict) else r.to_dict() for r in records]}
        return [_write(directory, name + '.json', to_json(payload))]
    return [_write(directory, name + '.csv', records_csv(records)),
            _write(directory, 'manifest.json', to_json(manifest))]


def write_solution(directory, name, solution):
    """ Writes the (t, x, u, value) snapshots of a solver run """

    return _write(directory, name + '.csv', to_csv(SNAPSHOT_COLUMNS, solution.rows()))


def write_manifest(directory, manifest):
    """ Writes a run manifest """

    return _write(directory, 'manifest.json', to_json(manifest))

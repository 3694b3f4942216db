"""
Output formatting for the CLI: text for people, JSON (the API serializers
rendered by DRF) for machines, CSV for distribution tables.
"""
import csv
import io
from typing import Any, Dict, Iterable, List

from rest_framework.renderers import JSONRenderer

from apps.permutations.services import render_tuple

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'


def render_json(payload: Any) -> str:
    return JSONRenderer().render(payload, renderer_context={'indent': 2}).decode('utf-8')


def render_csv(header: List[str], rows: Iterable[Iterable[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


# ==================== Text renderers ====================

def stat_text(payload: Dict[str, Any]) -> str:
    value = payload['value']
    if payload['kind'] == 'set':
        return '{' + ','.join(str(v) for v in value) + '}'
    if payload['kind'] == 'vector':
        return ','.join(str(v) for v in value)
    return str(value)


def trace_text(payload: Dict[str, Any]) -> str:
    """
    Left column: C^j(sigma) with L and the code entry it fixes. Right column:
    H(C^j(sigma)) built from the row below.
    """
    rows = payload['rows']
    construction = payload['construction']
    width = max([len(row['reduced']) for row in rows] + [len('C^j(sigma)')])
    lines = [f"{'j':>2}  {'C^j(sigma)':<{width}}  {'L':>2}  {'s':>2}  {'H(C^j(sigma))':<{width}}"]
    for row, built in zip(rows, construction):
        lines.append(
            f"{row['j']:>2}  {row['reduced']:<{width}}  {row['last']:>2}  {row['s_entry']:>2}  {built['image']:<{width}}"
        )
    lines.append('')
    lines.append(f"L-sequence: {render_tuple(payload['l_sequence'])}")
    lines.append(f"M(sigma):   {render_tuple(payload['cyclic_major'])}")
    lines.append(f"H(sigma):   {payload['output']}")
    return '\n'.join(line.rstrip() for line in lines)


def fixed_text(payload: Dict[str, Any], predicate: str = None) -> str:
    labels = ['strong', 'partial_foata', 'foata', 'han']
    if predicate is not None:
        return 'true' if payload[predicate] else 'false'
    return '\n'.join(f"{label}: {'true' if payload[label] else 'false'}" for label in labels)


def suite_text(payload: Dict[str, Any]) -> str:
    """A summary line per suite, then one line per failed report."""
    by_suite: Dict[str, List[Dict[str, Any]]] = {}
    for report in payload['reports']:
        by_suite.setdefault(report['suite'], []).append(report)

    lines = []
    for suite, reports in by_suite.items():
        failed = [report for report in reports if not report['passed']]
        checks = len({report['check_name'] for report in reports})
        elapsed = sum(report['elapsed'] for report in reports)
        population = sum(report['population'] for report in reports)
        outcome = 'all passed' if not failed else f"{len(failed)} FAILED"
        lines.append(
            f"{suite}: {checks} checks, n=1..{payload['n']}, {population} elements, {outcome} ({elapsed:.2f}s)"
        )
    for report in payload['reports']:
        if report['passed']:
            continue
        details = ', '.join(f"{key}={value}" for key, value in (report['counterexample'] or {}).items())
        where = f" index {report['index']}" if report['index'] is not None else ''
        lines.append(f"FAIL {report['check_name']} n={report['n']}{where}: {details}")
    return '\n'.join(lines)


def table_text(payload: Dict[str, Any]) -> str:
    lines = [f"{payload['stat']} over {payload['target']} ({payload['population']} elements)"]
    lines.extend(f"{value} {count}" for value, count in enumerate(payload['coefficients']))
    return '\n'.join(lines)


def table_csv(payload: Dict[str, Any]) -> str:
    return render_csv(['value', 'count'], enumerate(payload['coefficients']))

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import csv
import io
import json
from collections.abc import Mapping
from fractions import Fraction
from numbers import Complex
from typing import List, Sequence

from spunnormal.utils import format_float, format_rational

__all__ = ['format_value', 'format_complex', 'render_records', 'render_report', 'jsonable']


def format_complex(value, digits: int = 12) -> str:
    value = complex(value)
    real, imag = format_float(value.real, digits), format_float(abs(value.imag), digits)
    if imag == '0':
        return real
    sign = '-' if value.imag < 0 else '+'
    return f'{imag}i' if real == '0' and sign == '+' else f'{real}{sign}{imag}i'


def format_value(value, digits: int = 12) -> str:
    """Compact text of a cell: rationals as ``p/q``, floats to ``digits`` digits, sequences comma joined."""
    if value is None:
        return '-'
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, float):
        return format_float(value, digits)
    if isinstance(value, Complex):
        return format_complex(value, digits)
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return '(' + ','.join(format_value(v, digits) for v in items) + ')'
    return str(value)


def jsonable(value, digits: int = 12):
    """``value`` with rationals as strings, tuples as lists and floats rounded to ``digits`` significant
    digits, ready for :func:`json.dumps`.
    """
    if isinstance(value, Mapping):
        return {str(k): jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v, digits) for v in value]
    if isinstance(value, (set, frozenset)):
        return [jsonable(v, digits) for v in sorted(value)]
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return float(format_float(value, digits))
    if isinstance(value, complex):
        return format_complex(value, digits)
    return value


def render_records(records: Sequence[Mapping], fmt: str = 'table', digits: int = 12) -> str:
    """Renders rows sharing one set of keys as an aligned table, CSV or a JSON list."""
    if fmt == 'json':
        return json.dumps(jsonable(list(records), digits), indent=2) + '\n'
    if not records:
        return ''
    columns = list(records[0].keys())
    lines = [columns] + [[format_value(r.get(c), digits) for c in columns] for r in records]
    if fmt == 'csv':
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator='\n').writerows(lines)
        return buffer.getvalue()
    assert fmt == 'table', f'unknown output format {fmt}'
    widths = [max(len(line[j]) for line in lines) for j in range(len(columns))]
    return '\n'.join(' '.join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in lines) + '\n'


def _flatten(doc: Mapping, prefix: str = '') -> List[dict]:
    rows = []
    for key, value in doc.items():
        name = f'{prefix}{key}'
        if isinstance(value, Mapping):
            rows.extend(_flatten(value, f'{name}.'))
        elif isinstance(value, list) and value and all(isinstance(v, Mapping) for v in value):
            for i, item in enumerate(value):
                rows.extend(_flatten(item, f'{name}[{i}].'))
        else:
            rows.append(dict(key=name, value=value))
    return rows


def render_report(doc: Mapping, fmt: str = 'table', digits: int = 12) -> str:
    """Renders a nested report; table and CSV output list one ``key value`` pair per leaf."""
    if fmt == 'json':
        return json.dumps(jsonable(doc, digits), indent=2) + '\n'
    rows = _flatten(doc)
    if fmt == 'csv':
        return render_records(rows, 'csv', digits)
    width = max((len(r['key']) for r in rows), default=0)
    return ''.join(f'{r["key"].ljust(width)}  {format_value(r["value"], digits)}\n' for r in rows)

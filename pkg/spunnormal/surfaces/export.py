#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import csv
import io
import json
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from spunnormal.builder import build_exporter
from spunnormal.constants import QUAD_SYMBOLS
from spunnormal.context.exceptions import MalformedDocument
from spunnormal.registry import EXPORTERS
from spunnormal.utils import format_rational, to_fraction

from .complex import PFComplex

__all__ = [
    'VertexRow', 'BaseExporter', 'TableExporter', 'CsvExporter', 'JsonExporter', 'EXPORTER_TYPES',
    'write_vertex_table', 'read_vertex_table', 'ReferenceTable', 'load_reference', 'match_reference',
    'ReferenceMatch'
]


@dataclass(frozen=True)
class VertexRow:
    id: int
    coordinate: tuple
    boundary: Optional[tuple] = None


def _header(n: int, cusps: int) -> List[str]:
    columns = ['vertex'] + [f'{QUAD_SYMBOLS[k]}_{t}' for t in range(n) for k in range(3)]
    for c in range(cusps):
        columns += [f'nu(L{c})', f'-nu(M{c})']
    return columns


def _cells(row: VertexRow) -> List[str]:
    cells = [str(row.id)] + [format_rational(v) for v in row.coordinate]
    if row.boundary is not None:
        cells += [format_rational(v) for v in row.boundary]
    return cells


class BaseExporter:
    """Renders vertex rows; subclasses are registered in :data:`spunnormal.registry.EXPORTERS`."""

    def write(self, rows: Sequence[VertexRow], **extra) -> str:
        raise NotImplementedError


@EXPORTERS.register_module
class TableExporter(BaseExporter):

    def write(self, rows: Sequence[VertexRow], **extra) -> str:
        if not rows:
            return ''
        n = len(rows[0].coordinate) // 3
        cusps = len(rows[0].boundary) // 2 if rows[0].boundary is not None else 0
        table = [_header(n, cusps)] + [_cells(row) for row in rows]
        widths = [max(len(line[j]) for line in table) for j in range(len(table[0]))]
        return '\n'.join(' '.join(cell.rjust(w) for cell, w in zip(line, widths)) for line in table) + '\n'


@EXPORTERS.register_module
class CsvExporter(BaseExporter):

    def write(self, rows: Sequence[VertexRow], **extra) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        if rows:
            n = len(rows[0].coordinate) // 3
            cusps = len(rows[0].boundary) // 2 if rows[0].boundary is not None else 0
            writer.writerow(_header(n, cusps))
        for row in rows:
            writer.writerow(_cells(row))
        return buffer.getvalue()


@EXPORTERS.register_module
class JsonExporter(BaseExporter):
    """Self-contained dump; ``matching`` rows are included when given so the dump can be re-checked."""

    def write(self, rows: Sequence[VertexRow], matching: Optional[Sequence[Sequence[int]]] = None, **extra) -> str:
        doc = {
            'num_tetrahedra': len(rows[0].coordinate) // 3 if rows else 0,
            'vertices': [{
                'id': row.id,
                'coordinate': [format_rational(v) for v in row.coordinate],
                **({
                    'boundary': [format_rational(v) for v in row.boundary]
                } if row.boundary is not None else {})
            } for row in rows],
        }
        if matching is not None:
            doc['matching'] = [list(r) for r in matching]
        return json.dumps(doc, indent=2) + '\n'


EXPORTER_TYPES = {'table': 'TableExporter', 'csv': 'CsvExporter', 'json': 'JsonExporter'}


def write_vertex_table(rows: Sequence[VertexRow], fmt: str = 'table', **extra) -> str:
    assert fmt in EXPORTER_TYPES, f'unknown output format {fmt}, expected one of {list(EXPORTER_TYPES)}'
    return build_exporter(dict(type=EXPORTER_TYPES[fmt])).write(rows, **extra)


def _rational_list(values, where: str) -> tuple:
    if not isinstance(values, list):
        raise MalformedDocument(f'{where}: expected a list')
    try:
        return tuple(to_fraction(v) for v in values)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise MalformedDocument(f'{where}: {e}') from e


class VertexDump(NamedTuple):
    n: int
    rows: List[VertexRow]
    matching: Optional[List[Tuple[int, ...]]]


def read_vertex_table(source: Union[str, Path]) -> VertexDump:
    """Reads back the output of :class:`JsonExporter`.

    :raises MalformedDocument: if the dump does not have the exported shape
    """
    text = source if isinstance(source, str) and source.lstrip().startswith('{') else Path(source).read_text(
        encoding='utf-8')
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f'vertex dump is not valid JSON: {e}') from e
    if not isinstance(doc, Mapping) or not isinstance(doc.get('vertices'), list):
        raise MalformedDocument('vertex dump needs a list of vertices')
    n = doc.get('num_tetrahedra')
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MalformedDocument('vertex dump needs num_tetrahedra')
    rows = []
    for i, entry in enumerate(doc['vertices']):
        if not isinstance(entry, Mapping) or 'id' not in entry or 'coordinate' not in entry:
            raise MalformedDocument(f'vertex {i}: needs id and coordinate')
        coordinate = _rational_list(entry['coordinate'], f'vertex {i} coordinate')
        if len(coordinate) != 3 * n:
            raise MalformedDocument(f'vertex {i}: expected {3 * n} entries, but got {len(coordinate)}')
        boundary = _rational_list(entry['boundary'], f'vertex {i} boundary') if 'boundary' in entry else None
        rows.append(VertexRow(id=entry['id'], coordinate=coordinate, boundary=boundary))
    matching = doc.get('matching')
    if matching is not None:
        if not isinstance(matching, list) or any(not isinstance(r, list) or len(r) != 3 * n for r in matching):
            raise MalformedDocument(f'matching rows must have {3 * n} entries')
        matching = [tuple(int(v) for v in r) for r in matching]
    return VertexDump(n=n, rows=rows, matching=matching)


@dataclass(frozen=True)
class ReferenceTable:
    """Published vertex numbering with classes, boundary coordinates and angle structures."""
    vertices: Tuple[dict, ...]
    angle_structures: Tuple[dict, ...]

    def coordinate(self, vertex_id: int) -> Tuple[int, ...]:
        return tuple(next(v for v in self.vertices if v['id'] == vertex_id)['coordinate'])

    def classes(self) -> dict:
        grouped = {}
        for v in self.vertices:
            grouped.setdefault(v['class'], []).append(v['id'])
        return grouped


def load_reference(source: Union[str, Path, Mapping]) -> ReferenceTable:
    if isinstance(source, Mapping):
        doc = source
    else:
        try:
            doc = json.loads(Path(source).read_text(encoding='utf-8'))
        except json.JSONDecodeError as e:
            raise MalformedDocument(f'reference table is not valid JSON: {e}') from e
    if not isinstance(doc, Mapping) or not isinstance(doc.get('vertices'), list):
        raise MalformedDocument('reference table needs a list of vertices')
    for v in doc['vertices']:
        if not isinstance(v, Mapping) or not {'id', 'coordinate'} <= set(v):
            raise MalformedDocument('every reference vertex needs id and coordinate')
    return ReferenceTable(vertices=tuple(dict(v) for v in doc['vertices']),
                          angle_structures=tuple(dict(a) for a in doc.get('angle_structures', [])))


class ReferenceMatch(NamedTuple):
    pf: PFComplex
    ids: Tuple[int, ...]
    missing: Tuple[int, ...]


def match_reference(pf: PFComplex, table: ReferenceTable) -> ReferenceMatch:
    """Renumbers the vertices of ``pf`` after a reference table.

    Matched vertices come first in reference order and carry the reference ids; the others keep their
    canonical order and are numbered after the largest reference id. ``missing`` lists reference
    ids absent from ``pf``.
    """
    index = {v: i for i, v in enumerate(pf.vertices)}
    order, ids, missing = [], [], []
    for v in sorted(table.vertices, key=lambda v: v['id']):
        found = index.get(tuple(v['coordinate']))
        if found is None:
            missing.append(v['id'])
        else:
            order.append(found)
            ids.append(v['id'])
    next_id = max([v['id'] for v in table.vertices], default=0) + 1
    for i in range(len(pf.vertices)):
        if i not in order:
            order.append(i)
            ids.append(next_id)
            next_id += 1
    return ReferenceMatch(pf=pf.renumbered(order), ids=tuple(ids), missing=tuple(missing))

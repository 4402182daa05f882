#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import json
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from spunnormal.context.exceptions import MalformedDocument
from spunnormal.logging import get_logger
from spunnormal.tri import Triangulation

from .gluing import ExponentVector, GluingSystem, edge_rows, parameter_rows

__all__ = [
    'NZRow', 'PeripheralCurves', 'load_nz_document', 'ingest_nz', 'nz_to_exponent', 'relabel_exponent',
    'peripheral_rows', 'nz_edge_rows', 'gluing_system'
]


@dataclass(frozen=True)
class NZRow:
    """A row ``(a | b | c)`` of Neumann-Zagier data: ``(-1)^c * prod z_i^a_i (1 - z_i)^b_i``."""
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    c: int
    label: str = ''
    kind: str = ''
    cusp: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class PeripheralCurves:
    cusp: int
    meridian: ExponentVector
    longitude: ExponentVector


def load_nz_document(source: Union[str, Path, Mapping]) -> dict:
    if isinstance(source, Mapping):
        return dict(source)
    if isinstance(source, str) and source.lstrip().startswith('{'):
        text = source
    else:
        text = Path(source).read_text(encoding='utf-8')
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f'NZ document is not valid JSON: {e}') from e
    if not isinstance(doc, Mapping):
        raise MalformedDocument('NZ document must be a JSON object')
    return dict(doc)


def _int_list(values, where: str) -> Tuple[int, ...]:
    if not isinstance(values, (list, tuple)) or not all(isinstance(v, int) and not isinstance(v, bool)
                                                        for v in values):
        raise MalformedDocument(f'{where}: expected a list of integers, but got {values!r}')
    return tuple(values)


def _read_row(row, n: Optional[int], where: str) -> NZRow:
    if isinstance(row, (list, tuple)):
        flat = _int_list(row, where)
        if n is None:
            if len(flat) % 2 == 0:
                raise MalformedDocument(f'{where}: a flat row needs 2n + 1 entries, but got {len(flat)}')
            n = len(flat) // 2
        if len(flat) != 2 * n + 1:
            raise MalformedDocument(f'{where}: expected {2 * n + 1} entries, but got {len(flat)}')
        return NZRow(a=flat[:n], b=flat[n:2 * n], c=flat[2 * n])
    if not isinstance(row, Mapping) or not {'a', 'b', 'c'} <= set(row):
        raise MalformedDocument(f'{where}: a row needs the fields a, b and c')
    a = _int_list(row['a'], f'{where} a')
    b = _int_list(row['b'], f'{where} b')
    c = row['c']
    if not isinstance(c, int) or isinstance(c, bool):
        raise MalformedDocument(f'{where}: c must be an integer, but got {c!r}')
    if len(a) != len(b) or (n is not None and len(a) != n):
        raise MalformedDocument(f'{where}: a and b must both have length {n if n is not None else len(a)}')
    cusp = row.get('cusp')
    if cusp is not None and (not isinstance(cusp, int) or isinstance(cusp, bool)):
        raise MalformedDocument(f'{where}: cusp must be an integer')
    return NZRow(a=a, b=b, c=c, label=str(row.get('label', '')), kind=str(row.get('kind', '')), cusp=cusp)


def ingest_nz(doc: Union[str, Path, Mapping]) -> List[NZRow]:
    """Reads the rows of an NZ document verbatim.

    Rows are either objects ``{a, b, c, label, kind, cusp}`` or flat lists of ``2n + 1`` integers.

    :raises MalformedDocument: if a row has the wrong shape or the lengths disagree
    """
    doc = load_nz_document(doc)
    rows = doc.get('rows')
    if not isinstance(rows, list):
        raise MalformedDocument('NZ document needs a list of rows')
    n = doc.get('num_tetrahedra')
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 1):
        raise MalformedDocument(f'num_tetrahedra must be a positive integer, but got {n!r}')
    result = []
    for i, row in enumerate(rows):
        parsed = _read_row(row, n, f'row {i}')
        n = parsed.n
        result.append(parsed)
    return result


def nz_to_exponent(r: NZRow) -> ExponentVector:
    """Rewrites ``(-1)^c z^a (1 - z)^b`` as ``(-1)^c z^a (z')^-b`` using ``z' = 1/(1 - z)``."""
    entries = []
    for a, b in zip(r.a, r.b):
        entries.extend((a, -b, 0))
    return ExponentVector(tuple(entries), r.c)


def relabel_exponent(vec: ExponentVector, shifts: Sequence[int]) -> ExponentVector:
    """Cyclically relabels the shapes of each tetrahedron: label ``j`` of tetrahedron ``t`` in the
    source convention becomes label ``(j - shifts[t]) mod 3``.
    """
    assert len(shifts) == vec.n, f'expected {vec.n} shifts, but got {len(shifts)}'
    entries = []
    for t, shift in enumerate(shifts):
        block = vec.block(t)
        entries.extend(block[(k + shift) % 3] for k in range(3))
    return ExponentVector(tuple(entries), vec.sign_exp)


def _shifts(doc: Mapping, n: int) -> Tuple[int, ...]:
    shifts = doc.get('shape_map', {}).get('shifts', [0] * n)
    shifts = _int_list(shifts, 'shape_map shifts')
    if len(shifts) != n:
        raise MalformedDocument(f'shape_map needs {n} shifts, but got {len(shifts)}')
    return shifts


def _find(rows: List[NZRow], kind: str, cusp: int) -> NZRow:
    for row in rows:
        if row.kind == kind and row.cusp == cusp:
            return row
    raise MalformedDocument(f'NZ document has no {kind} row for cusp {cusp}')


def peripheral_rows(doc: Union[str, Path, Mapping]) -> List[PeripheralCurves]:
    """Meridian and longitude exponent rows per cusp, in the triangulation's conventions.

    The document's ``peripheral`` block gives ``cusp_order`` (``cusp_order[k]`` is the source cusp
    of cusp ``k``), ``longitude_correction`` ``m``, so that the returned longitude is ``L * M^m``,
    and ``reverse_curves``, set when the document lists the moduli to the left of each curve; both
    rows are then inverted. Shapes are relabelled with the ``shape_map`` shifts.
    """
    doc = load_nz_document(doc)
    rows = ingest_nz(doc)
    if not rows:
        return []
    n = rows[0].n
    shifts = _shifts(doc, n)
    peripheral = doc.get('peripheral', {})
    source_cusps = sorted({row.cusp for row in rows if row.kind == 'meridian'})
    order = _int_list(peripheral.get('cusp_order', source_cusps), 'peripheral cusp_order')
    correction = peripheral.get('longitude_correction', 0)
    if not isinstance(correction, int) or isinstance(correction, bool):
        raise MalformedDocument(f'longitude_correction must be an integer, but got {correction!r}')
    reverse = peripheral.get('reverse_curves', False)
    if not isinstance(reverse, bool):
        raise MalformedDocument(f'reverse_curves must be true or false, but got {reverse!r}')

    curves = []
    for cusp, source in enumerate(order):
        meridian = relabel_exponent(nz_to_exponent(_find(rows, 'meridian', source)), shifts)
        longitude = relabel_exponent(nz_to_exponent(_find(rows, 'longitude', source)), shifts)
        longitude = longitude.times(meridian, correction)
        if reverse:
            meridian, longitude = meridian.inverse(), longitude.inverse()
        curves.append(PeripheralCurves(cusp=cusp, meridian=meridian, longitude=longitude))
    get_logger().debug(f'read peripheral curves of {len(curves)} cusps')
    return curves


def nz_edge_rows(doc: Union[str, Path, Mapping]) -> List[ExponentVector]:
    """The edge rows of an NZ document, relabelled to the triangulation's conventions."""
    doc = load_nz_document(doc)
    rows = ingest_nz(doc)
    if not rows:
        return []
    shifts = _shifts(doc, rows[0].n)
    return [relabel_exponent(nz_to_exponent(row), shifts) for row in rows if row.kind == 'edge']


def gluing_system(T: Triangulation, nz_doc: Optional[Union[str, Path, Mapping]] = None) -> GluingSystem:
    """Edge rows and parameter supports of ``T``, plus the peripheral rows of ``nz_doc`` when given."""
    peripheral = tuple(peripheral_rows(nz_doc)) if nz_doc is not None else ()
    for curves in peripheral:
        if curves.meridian.n != T.n:
            raise MalformedDocument(f'NZ data has {curves.meridian.n} tetrahedra, the triangulation {T.n}')
    return GluingSystem(edge_rows=tuple(edge_rows(T)),
                        peripheral_rows=peripheral,
                        param_supports=tuple(parameter_rows(T.n)))

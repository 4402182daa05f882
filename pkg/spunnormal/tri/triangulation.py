#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import json
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

from spunnormal.context.exceptions import (MalformedDocument, NonInvolutivePairing, OrientationViolation,
                                           UnpairedFace)
from spunnormal.logging import get_logger

Perm = Tuple[int, int, int, int]


def perm_parity(perm: Perm) -> int:
    """0 for even permutations, 1 for odd ones."""
    parity = 0
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def perm_inverse(perm: Perm) -> Perm:
    inverse = [0] * len(perm)
    for i, p in enumerate(perm):
        inverse[p] = i
    return tuple(inverse)


def perm_compose(outer: Perm, inner: Perm) -> Perm:
    """``outer`` after ``inner``."""
    return tuple(outer[i] for i in inner)


@dataclass(frozen=True)
class Triangulation:
    """An ideal triangulation given by face pairings.

    ``pairings[tet][face] = (target_tet, target_face, perm)`` where ``perm`` lists the images of the
    vertices 0..3 of ``tet`` and ``target_face == perm[face]``. Instances are only created by
    :func:`parse_triangulation`, which validates every invariant.
    """
    n: int
    pairings: Tuple[Tuple[Tuple[int, int, Perm], ...], ...]
    name: str = ''

    def gluing(self, tet: int, face: int) -> Tuple[int, Perm]:
        target_tet, _, perm = self.pairings[tet][face]
        return target_tet, perm

    def to_document(self) -> dict:
        doc = {
            'num_tetrahedra': self.n,
            'gluings': [[{
                'tet': target,
                'perm': list(perm)
            } for target, _, perm in row] for row in self.pairings],
        }
        if self.name:
            doc['name'] = self.name
        return doc


def _load_document(source) -> dict:
    if isinstance(source, Mapping):
        return dict(source)
    if isinstance(source, Path):
        text = source.read_text(encoding='utf-8')
    elif isinstance(source, str):
        text = source if source.lstrip().startswith('{') else Path(source).read_text(encoding='utf-8')
    else:
        raise MalformedDocument(f'cannot read a triangulation from {type(source).__name__}')
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f'triangulation document is not valid JSON: {e}') from e
    if not isinstance(doc, Mapping):
        raise MalformedDocument('triangulation document must be a JSON object')
    return dict(doc)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _read_entry(entry, n: int, where: str) -> Tuple[int, Perm]:
    if not isinstance(entry, Mapping) or 'tet' not in entry or 'perm' not in entry:
        raise MalformedDocument(f'{where}: a gluing needs the fields tet and perm')
    target, perm = entry['tet'], entry['perm']
    if not _is_int(target) or not 0 <= target < n:
        raise MalformedDocument(f'{where}: target tetrahedron {target!r} is out of range')
    if not isinstance(perm, (list, tuple)) or len(perm) != 4 or not all(_is_int(p) for p in perm) \
            or sorted(perm) != [0, 1, 2, 3]:
        raise MalformedDocument(f'{where}: {perm!r} is not a permutation of 0..3')
    return target, tuple(perm)


def parse_triangulation(source: Union[str, Path, Mapping]) -> Triangulation:
    """Reads and validates a triangulation document.

    The document is a JSON object with ``num_tetrahedra``, ``gluings`` (``n`` rows of four
    ``{"tet": t, "perm": [p0, p1, p2, p3]}`` entries, ``null`` for an unpaired face) and an optional
    ``name``.

    :param source: A path, a JSON string or an already decoded mapping
    :type source: str, pathlib.Path or Mapping
    :raises MalformedDocument: if the document does not follow the schema
    :raises UnpairedFace: if some face has no partner
    :raises NonInvolutivePairing: if a pairing is not its partner's inverse
    :raises OrientationViolation: if some pairing is orientation preserving on faces
    :return: The validated triangulation
    :rtype: :class:`Triangulation`
    """
    doc = _load_document(source)
    n = doc.get('num_tetrahedra')
    if not _is_int(n) or n < 1:
        raise MalformedDocument(f'num_tetrahedra must be a positive integer, but got {n!r}')
    gluings = doc.get('gluings')
    if not isinstance(gluings, list):
        raise MalformedDocument('gluings must be a list')
    if len(gluings) > n:
        raise MalformedDocument(f'gluings has {len(gluings)} rows for {n} tetrahedra')
    name = doc.get('name', '')
    if not isinstance(name, str):
        raise MalformedDocument('name must be a string')

    entries = {}
    unpaired = []
    for tet in range(n):
        row = gluings[tet] if tet < len(gluings) else []
        if not isinstance(row, list) or len(row) > 4:
            raise MalformedDocument(f'tetrahedron {tet}: expected a list of at most four gluings')
        for face in range(4):
            entry = row[face] if face < len(row) else None
            if entry is None:
                unpaired.append((tet, face))
                continue
            entries[(tet, face)] = _read_entry(entry, n, f'tetrahedron {tet} face {face}')
    if unpaired:
        raise UnpairedFace(f'unpaired faces (tet, face): {unpaired}')

    for (tet, face), (target, perm) in sorted(entries.items()):
        target_face = perm[face]
        if (target, target_face) == (tet, face):
            raise NonInvolutivePairing(f'tetrahedron {tet} face {face} is glued to itself')
        back_target, back_perm = entries[(target, target_face)]
        if back_target != tet or back_perm != perm_inverse(perm):
            raise NonInvolutivePairing(f'tetrahedron {tet} face {face} -> tetrahedron {target} face {target_face} '
                                       f'is not undone by the partner gluing')

    for (tet, face), (_, perm) in sorted(entries.items()):
        if perm_parity(perm) == 0:
            raise OrientationViolation(f'tetrahedron {tet} face {face}: {list(perm)} is an even permutation, '
                                       f'the pairing preserves orientation')

    pairings = tuple(
        tuple((entries[(tet, face)][0], entries[(tet, face)][1][face], entries[(tet, face)][1])
              for face in range(4))
        for tet in range(n))
    triangulation = Triangulation(n=n, pairings=pairings, name=name)
    get_logger().debug(f'parsed triangulation {name or "<unnamed>"} with {n} tetrahedra')
    return triangulation


def load_triangulation(path: Union[str, Path]) -> Triangulation:
    return parse_triangulation(Path(path))

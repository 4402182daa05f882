#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from spunnormal.equations import ExponentVector, parameter_rows
from spunnormal.logging import get_logger

__all__ = ['SupportSet', 'parameter_supports', 'gluing_supports']


@dataclass(frozen=True)
class SupportSet:
    """Exponent vectors of the monomials of a polynomial, deduplicated and sorted."""
    points: Tuple[Tuple[int, ...], ...]
    label: str = ''

    @staticmethod
    def of(points: Iterable[Sequence[int]], label: str = '') -> 'SupportSet':
        unique = sorted({tuple(int(v) for v in p) for p in points})
        assert unique, 'a support needs at least one point'
        dims = {len(p) for p in unique}
        assert len(dims) == 1, f'support points of different lengths {sorted(dims)}'
        return SupportSet(tuple(unique), label)

    @property
    def ambient(self) -> int:
        return len(self.points[0])

    def __len__(self):
        return len(self.points)


def parameter_supports(n: int) -> List[SupportSet]:
    """Supports of the three parameter relations of every tetrahedron, ``p_t, p'_t, p''_t`` in turn."""
    names = ('p', "p'", "p''")
    return [SupportSet.of(points, f'{names[i % 3]}_{i // 3}') for i, points in enumerate(parameter_rows(n))]


def gluing_supports(rows: Sequence[ExponentVector]) -> List[SupportSet]:
    """Two point supports ``{row, 0}`` of the edge relations.

    A zero row collapses to the single point ``{0}``; such supports are kept but reported.
    """
    supports = []
    for i, row in enumerate(rows):
        entries = row.entries if isinstance(row, ExponentVector) else tuple(row)
        assert all(v >= 0 for v in entries), f'edge row {i} has a negative exponent'
        support = SupportSet.of([entries, (0,) * len(entries)], f'g_{i}')
        if len(support) < 2:
            get_logger().warning(f'edge row {i} is zero, its support is a single point')
        supports.append(support)
    return supports

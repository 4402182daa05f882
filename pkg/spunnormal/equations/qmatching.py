#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from spunnormal.constants import C1, QUAD_OF_EDGE, QUAD_SYMBOLS
from spunnormal.tri import Triangulation, even_completion, trace_edge_classes
from spunnormal.utils import format_rational

from .gluing import ExponentVector, GluingSystem

__all__ = ['CnMatrix', 'SlopeFunctional', 'qmatching_from_A', 'qmatching_direct', 'slope_functionals']

Matrix = List[Tuple[int, ...]]


class CnMatrix:
    """The block diagonal ``3n x 3n`` matrix with ``n`` copies of ``C_1``.

    Only products are needed, so the matrix is never materialised unless asked for.
    """

    def __init__(self, n: int):
        self.n = n

    @property
    def block(self) -> Tuple[Tuple[int, int, int], ...]:
        return C1

    def dense(self) -> Matrix:
        rows = []
        for t in range(self.n):
            for i in range(3):
                row = [0] * (3 * self.n)
                row[3 * t:3 * t + 3] = C1[i]
                rows.append(tuple(row))
        return rows

    def right_multiply(self, row: Sequence) -> tuple:
        """``row . C_n``; per tetrahedron ``(a, a', a'') -> (a'' - a', a - a'', a' - a)``."""
        assert len(row) == 3 * self.n, f'expected a row of length {3 * self.n}, but got {len(row)}'
        result = []
        for t in range(self.n):
            block = row[3 * t:3 * t + 3]
            result.extend(sum(block[i] * C1[i][j] for i in range(3)) for j in range(3))
        return tuple(result)

    def transpose_apply(self, x: Sequence) -> tuple:
        """``C_n^T x``, which equals ``-(C_n x)`` blockwise."""
        return self.right_multiply(x)


@dataclass(frozen=True)
class SlopeFunctional:
    """Linear functional on normal Q-coordinates."""
    coeffs: Tuple[int, ...]
    label: str = ''

    def __call__(self, x: Sequence) -> Fraction:
        assert len(x) == len(self.coeffs), f'expected a coordinate of length {len(self.coeffs)}, but got {len(x)}'
        return sum((Fraction(c) * Fraction(v) for c, v in zip(self.coeffs, x)), Fraction(0))

    def describe(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = f'{QUAD_SYMBOLS[i % 3]}_{i // 3}'
            coefficient = '' if abs(c) == 1 else format_rational(abs(c))
            terms.append(('- ' if c < 0 else '+ ') + coefficient + name)
        if not terms:
            return '0'
        text = ' '.join(terms)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]


def qmatching_from_A(G: Union[GluingSystem, Sequence[ExponentVector]]) -> Matrix:
    """The Q-matching matrix ``B = A C_n`` from the exponent rows of the gluing equations."""
    rows = G.edge_rows if isinstance(G, GluingSystem) else G
    if len(rows) == 0:
        return []
    cn = CnMatrix(rows[0].n)
    return [cn.right_multiply(r.entries) for r in rows]


def qmatching_direct(T: Triangulation) -> Matrix:
    """The Q-matching matrix from the slopes of quadrilaterals around each edge.

    At a corner on the edge ``(a, b)`` with ``(a, b, c, d)`` an even permutation, the quadrilateral
    separating ``{a, d}`` from ``{b, c}`` has slope +1 and the one separating ``{a, c}`` from
    ``{b, d}`` has slope -1. The quadrilateral not meeting the edge contributes nothing.
    """
    rows = []
    for edge in trace_edge_classes(T):
        row = [0] * (3 * T.n)
        for tet, (a, b) in edge.corners:
            c, d = even_completion(a, b)
            row[3 * tet + QUAD_OF_EDGE[(min(a, d), max(a, d))]] += 1
            row[3 * tet + QUAD_OF_EDGE[(min(a, c), max(a, c))]] -= 1
        rows.append(tuple(row))
    return rows


def slope_functionals(rows: Sequence[ExponentVector], labels: Sequence[str] = ()) -> List[SlopeFunctional]:
    """The Q-modulus functional ``nu(gamma)`` of each holonomy exponent row ``u(gamma)``.

    Per tetrahedron this contracts ``z -> q'' - q'``, ``z' -> q - q''`` and ``z'' -> q' - q``, which is
    ``u(gamma) C_n^T``. Rows are read as holonomies of curves with the moduli on their right.
    """
    labels = list(labels) + [''] * (len(rows) - len(labels))
    functionals = []
    for row, label in zip(rows, labels):
        # C_1^T = -C_1
        coeffs = CnMatrix(row.n).right_multiply(row.entries)
        functionals.append(SlopeFunctional(tuple(-int(v) for v in coeffs), label))
    return functionals

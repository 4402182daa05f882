#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from typing import List, Tuple

from spunnormal.constants import SHAPE_SYMBOLS, SHAPE_TOLERANCE
from spunnormal.context.exceptions import DegenerateShape
from spunnormal.tri import Triangulation, require_torus_cusps, trace_edge_classes

__all__ = [
    'ExponentVector', 'ShapeAssignment', 'GluingSystem', 'edge_rows', 'parameter_rows',
    'evaluate_row', 'holonomy_derivative'
]

Support = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ExponentVector:
    """The monomial ``(-1)^sign_exp * prod z_i^a_i (z'_i)^a'_i (z''_i)^a''_i`` as its exponents,
    indexed ``(z_0, z'_0, z''_0, z_1, ...)``.
    """
    entries: Tuple[int, ...]
    sign_exp: int = 0

    def __post_init__(self):
        assert len(self.entries) % 3 == 0, f'expected 3n exponents, but got {len(self.entries)}'
        object.__setattr__(self, 'entries', tuple(int(v) for v in self.entries))
        object.__setattr__(self, 'sign_exp', int(self.sign_exp) % 2)

    @staticmethod
    def zero(n: int) -> 'ExponentVector':
        return ExponentVector((0,) * (3 * n))

    @property
    def n(self) -> int:
        return len(self.entries) // 3

    def __len__(self):
        return len(self.entries)

    def times(self, other: 'ExponentVector', power: int = 1) -> 'ExponentVector':
        """The monomial ``self * other^power``."""
        assert len(other) == len(self), f'expected exponent vectors of equal length, {len(self)} vs {len(other)}'
        return ExponentVector(tuple(a + power * b for a, b in zip(self.entries, other.entries)),
                              self.sign_exp + power * other.sign_exp)

    def inverse(self) -> 'ExponentVector':
        return ExponentVector(tuple(-v for v in self.entries), self.sign_exp)

    def block(self, tet: int) -> Tuple[int, int, int]:
        return self.entries[3 * tet:3 * tet + 3]

    def describe(self) -> str:
        """Human readable monomial such as ``-z_0 z'_1^2``."""
        factors = []
        for i, e in enumerate(self.entries):
            if e == 0:
                continue
            name = f'{SHAPE_SYMBOLS[i % 3]}_{i // 3}'
            factors.append(name if e == 1 else f'{name}^{e}')
        text = ' '.join(factors) if factors else '1'
        return f'-{text}' if self.sign_exp else text


@dataclass(frozen=True)
class ShapeAssignment:
    """One shape ``z_i`` per tetrahedron; the other two labels follow from ``z' = 1/(1-z)`` and
    ``z'' = (z-1)/z``. Values may be Python or :mod:`mpmath` complex numbers.
    """
    shapes: tuple

    @property
    def n(self) -> int:
        return len(self.shapes)

    def check(self, tolerance: float = SHAPE_TOLERANCE):
        for i, z in enumerate(self.shapes):
            if abs(z) < tolerance or abs(z - 1) < tolerance:
                raise DegenerateShape(f'shape of tetrahedron {i} is degenerate: {z}')

    def triple(self, tet: int):
        z = self.shapes[tet]
        return z, 1 / (1 - z), (z - 1) / z


@dataclass(frozen=True)
class GluingSystem:
    edge_rows: Tuple[ExponentVector, ...]
    peripheral_rows: tuple = ()
    param_supports: Tuple[Support, ...] = ()

    @property
    def n(self) -> int:
        return len(self.param_supports) // 3


def edge_rows(T: Triangulation) -> List[ExponentVector]:
    """One exponent row per edge class: the number of corners of each label around the edge.

    :param T: A triangulation whose cusps are all tori
    :type T: :class:`spunnormal.tri.Triangulation`
    :raises NonTorusLink: if some vertex link is not a torus
    :return: The rows of the exponent matrix ``A`` in edge class order
    :rtype: list of :class:`ExponentVector`
    """
    require_torus_cusps(T)
    return [ExponentVector(e.label_counts(T.n)) for e in trace_edge_classes(T)]


def _unit(n: int, *indices: int) -> Tuple[int, ...]:
    entries = [0] * (3 * n)
    for i in indices:
        entries[i] += 1
    return tuple(entries)


def parameter_rows(n: int) -> List[Support]:
    """Supports of the parameter relations, three per tetrahedron in the order
    ``z(1 - z'') - 1``, ``z'(1 - z) - 1``, ``z''(1 - z') - 1``.
    """
    supports = []
    for t in range(n):
        z, z1, z2 = 3 * t, 3 * t + 1, 3 * t + 2
        supports.append((_unit(n, z), _unit(n, z, z2), _unit(n)))
        supports.append((_unit(n, z1, z), _unit(n, z1), _unit(n)))
        supports.append((_unit(n, z2, z1), _unit(n, z2), _unit(n)))
    return supports


def evaluate_row(r: ExponentVector, Z: ShapeAssignment):
    """Numerical value of the monomial ``r`` at the shapes ``Z``.

    :raises DegenerateShape: if a shape is within tolerance of 0 or 1
    """
    if len(r.entries) == 0:
        return 1
    assert r.n == Z.n, f'expected {r.n} shapes, but got {Z.n}'
    Z.check()
    value = -1 if r.sign_exp else 1
    for t in range(Z.n):
        for label, e in zip(Z.triple(t), r.block(t)):
            if e != 0:
                value = value * label**e
    return value


holonomy_derivative = evaluate_row

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from spunnormal.context.exceptions import DimensionMismatch

RationalVector = Tuple[Fraction, ...]

__all__ = ['RationalVector', 'as_vector', 'rref', 'rank', 'nullspace', 'solve']


def as_vector(values: Sequence) -> RationalVector:
    return tuple(Fraction(v) for v in values)


def _check_rows(rows: Sequence[Sequence], dim: Optional[int]) -> int:
    if dim is None:
        assert len(rows) > 0, 'the dimension of an empty row list must be given'
        dim = len(rows[0])
    for row in rows:
        if len(row) != dim:
            raise DimensionMismatch(f'expected rows of length {dim}, but got one of length {len(row)}')
    return dim


def _to_domain(rows: Sequence[Sequence], dim: int) -> DomainMatrix:
    entries = [[QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rows]
    return DomainMatrix(entries, (len(rows), dim), QQ)


def _from_sympy(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rref(rows: Sequence[Sequence], dim: Optional[int] = None) -> Tuple[List[RationalVector], Tuple[int, ...]]:
    """Reduced row echelon form over the rationals.

    :param rows: The matrix as a list of rows
    :param dim: Number of columns, required when ``rows`` is empty
    :return: The nonzero rows of the echelon form and the pivot columns
    :rtype: tuple
    """
    dim = _check_rows(rows, dim)
    if len(rows) == 0 or dim == 0:
        return [], ()
    reduced, pivots = _to_domain(rows, dim).rref()
    matrix = reduced.to_Matrix()
    echelon = [tuple(_from_sympy(matrix[i, j]) for j in range(dim)) for i in range(len(pivots))]
    return echelon, tuple(pivots)


def rank(rows: Sequence[Sequence], dim: Optional[int] = None) -> int:
    return len(rref(rows, dim)[1])


def nullspace(rows: Sequence[Sequence], dim: Optional[int] = None) -> List[RationalVector]:
    """An exact basis of ``{x : row . x = 0 for every row}``, one vector per free column.

    The basis vector of free column ``f`` has entry 1 at ``f`` and 0 at the other free columns.
    """
    dim = _check_rows(rows, dim)
    echelon, pivots = rref(rows, dim)
    free = [j for j in range(dim) if j not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * dim
        vector[f] = Fraction(1)
        for row, p in zip(echelon, pivots):
            vector[p] = -row[f]
        basis.append(tuple(vector))
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> RationalVector:
    """The unique solution of a square nonsingular system."""
    n = len(matrix)
    _check_rows(matrix, n)
    assert len(rhs) == n, f'expected a right hand side of length {n}, but got {len(rhs)}'
    solution = _to_domain(matrix, n).lu_solve(_to_domain([[v] for v in rhs], 1)).to_Matrix()
    return tuple(_from_sympy(solution[i, 0]) for i in range(n))

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple

from spunnormal.context.exceptions import DimensionMismatch
from spunnormal.logging import get_logger
from spunnormal.utils import dot

from .linalg import RationalVector, as_vector

__all__ = ['LPProblem', 'LPResult', 'FarkasCertificate', 'lp_feasible']

Row = Tuple[RationalVector, Fraction]


def _read_rows(rows, dim: int, kind: str) -> Tuple[Row, ...]:
    result = []
    for coefficients, rhs in rows:
        if len(coefficients) != dim:
            raise DimensionMismatch(f'{kind} row of length {len(coefficients)} in a problem of dimension {dim}')
        result.append((as_vector(coefficients), Fraction(rhs)))
    return tuple(result)


@dataclass(frozen=True)
class LPProblem:
    """Feasibility problem over nonnegative variables ``x_0 .. x_{dim-1}``.

    Equalities are rows ``(a, b)`` meaning ``a . x = b``, inequalities mean ``a . x >= b`` and
    ``upper[j]`` is either None or a bound ``x_j <= upper[j]``.
    """
    dim: int
    equalities: Tuple[Row, ...] = ()
    inequalities: Tuple[Row, ...] = ()
    upper: Tuple[Optional[Fraction], ...] = ()

    @staticmethod
    def build(dim: int, equalities=(), inequalities=(), upper=None) -> 'LPProblem':
        if upper is None:
            upper = (None,) * dim
        if len(upper) != dim:
            raise DimensionMismatch(f'expected {dim} upper bounds, but got {len(upper)}')
        return LPProblem(dim=dim,
                         equalities=_read_rows(equalities, dim, 'equality'),
                         inequalities=_read_rows(inequalities, dim, 'inequality'),
                         upper=tuple(None if u is None else Fraction(u) for u in upper))

    def with_equalities(self, rows) -> 'LPProblem':
        return LPProblem(self.dim, self.equalities + _read_rows(rows, self.dim, 'equality'), self.inequalities,
                         self.upper)

    def is_feasible_point(self, x: Sequence) -> bool:
        if len(x) != self.dim or any(v < 0 for v in x):
            return False
        if any(u is not None and v > u for v, u in zip(x, self.upper)):
            return False
        return all(dot(a, x) == b for a, b in self.equalities) and all(dot(a, x) >= b for a, b in self.inequalities)


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving infeasibility: ``eq`` free, ``ineq >= 0`` and ``upper <= 0`` (zero for
    unbounded variables) with ``eq.E + ineq.I + upper <= 0`` entrywise and ``eq.e + ineq.f + upper.u > 0``.
    """
    eq: RationalVector
    ineq: RationalVector
    upper: RationalVector

    def verify(self, p: LPProblem) -> bool:
        if len(self.eq) != len(p.equalities) or len(self.ineq) != len(p.inequalities) or len(self.upper) != p.dim:
            return False
        if any(y < 0 for y in self.ineq) or any(y > 0 for y in self.upper):
            return False
        if any(y != 0 and u is None for y, u in zip(self.upper, p.upper)):
            return False
        for j in range(p.dim):
            combined = sum(y * a[j] for y, (a, _) in zip(self.eq, p.equalities)) \
                + sum(y * a[j] for y, (a, _) in zip(self.ineq, p.inequalities)) + self.upper[j]
            if combined > 0:
                return False
        bound = sum(y * b for y, (_, b) in zip(self.eq, p.equalities)) \
            + sum(y * b for y, (_, b) in zip(self.ineq, p.inequalities)) \
            + sum(y * u for y, u in zip(self.upper, p.upper) if u is not None)
        return bound > 0


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    point: Optional[RationalVector] = None
    certificate: Optional[FarkasCertificate] = None


class _Tableau:
    """Dense simplex tableau ``B^{-1} [A | b]`` with the basis kept as column indices."""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int], width: int):
        self.rows = rows
        self.width = width
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.rows[i][j]
        self.rows[i] = [v / piv for v in self.rows[i]]
        self.rhs[i] /= piv
        for k in range(len(self.rows)):
            f = self.rows[k][j]
            if k != i and f != 0:
                self.rows[k] = [a - f * b for a, b in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def reduced_costs(self, cost: List[Fraction]) -> List[Fraction]:
        return [
            cost[j] - sum(cost[b] * self.rows[i][j] for i, b in enumerate(self.basis)) for j in range(self.width)
        ]

    def minimize(self, cost: List[Fraction], allowed: Set[int]) -> List[Fraction]:
        """Bland's rule over the columns in ``allowed``. Returns the final reduced costs."""
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in sorted(allowed) if reduced[j] < 0), None)
            if entering is None:
                return reduced
            candidates = [(self.rhs[i] / self.rows[i][entering], self.basis[i], i)
                          for i in range(len(self.rows))
                          if self.rows[i][entering] > 0]
            # every objective used here is bounded below on the nonnegative orthant
            assert candidates, 'the simplex objective is unbounded'
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)

    def values(self, count: int) -> List[Fraction]:
        x = [Fraction(0)] * count
        for i, b in enumerate(self.basis):
            if b < count:
                x[b] = self.rhs[i]
        return x


def lp_feasible(p: LPProblem, lexicographic: bool = False) -> LPResult:
    """Decides feasibility of ``p`` exactly with a two-phase simplex method and Bland's rule.

    :param p: The problem
    :type p: :class:`LPProblem`
    :param lexicographic: Return the lexicographically smallest feasible point instead of the first
        basic solution found, defaults to False
    :type lexicographic: bool, optional
    :return: A feasible point, or a Farkas certificate of infeasibility
    :rtype: :class:`LPResult`
    """
    bounded = [j for j, u in enumerate(p.upper) if u is not None]
    n_ineq = len(p.inequalities)
    n_vars = p.dim + n_ineq + len(bounded)

    # standard form: a.x - s = f for inequalities, x_j + t_j = u_j for bounds
    matrix, rhs = [], []
    for a, b in p.equalities:
        matrix.append(list(a) + [Fraction(0)] * (n_vars - p.dim))
        rhs.append(b)
    for k, (a, b) in enumerate(p.inequalities):
        row = list(a) + [Fraction(0)] * (n_vars - p.dim)
        row[p.dim + k] = Fraction(-1)
        matrix.append(row)
        rhs.append(b)
    for k, j in enumerate(bounded):
        row = [Fraction(0)] * n_vars
        row[j] = Fraction(1)
        row[p.dim + n_ineq + k] = Fraction(1)
        matrix.append(row)
        rhs.append(p.upper[j])

    m = len(matrix)
    flips = [Fraction(-1) if b < 0 else Fraction(1) for b in rhs]
    rows = [[flip * v for v in row] + [Fraction(int(i == k)) for k in range(m)]
            for i, (row, flip) in enumerate(zip(matrix, flips))]
    tableau = _Tableau(rows, [flip * b for flip, b in zip(flips, rhs)], [n_vars + i for i in range(m)], n_vars + m)

    phase_one = [Fraction(0)] * n_vars + [Fraction(1)] * m
    tableau.minimize(phase_one, set(range(n_vars + m)))
    infeasibility = sum(tableau.rhs[i] for i, b in enumerate(tableau.basis) if b >= n_vars)
    logger = get_logger()

    if infeasibility > 0:
        # duals of the flipped system are c_B B^{-1}, read off the artificial columns
        duals = [
            sum(phase_one[b] * tableau.rows[i][n_vars + r] for i, b in enumerate(tableau.basis)) for r in range(m)
        ]
        y = [flip * d for flip, d in zip(flips, duals)]
        n_eq = len(p.equalities)
        upper = [Fraction(0)] * p.dim
        for k, j in enumerate(bounded):
            upper[j] = y[n_eq + n_ineq + k]
        certificate = FarkasCertificate(eq=tuple(y[:n_eq]), ineq=tuple(y[n_eq:n_eq + n_ineq]), upper=tuple(upper))
        logger.debug(f'infeasible after {tableau.pivots} pivots')
        return LPResult(feasible=False, certificate=certificate)

    # drive the remaining zero-valued artificials out of the basis where possible
    for i, b in enumerate(tableau.basis):
        if b >= n_vars:
            column = next((j for j in range(n_vars) if tableau.rows[i][j] != 0), None)
            if column is not None:
                tableau.pivot(i, column)

    if lexicographic:
        allowed = set(range(n_vars))
        for k in range(p.dim):
            cost = [Fraction(int(j == k)) for j in range(n_vars + m)]
            reduced = tableau.minimize(cost, allowed)
            # columns with a positive reduced cost stay at zero on the optimal face
            allowed = {j for j in allowed if reduced[j] == 0}

    point = tuple(tableau.values(n_vars)[:p.dim])
    assert p.is_feasible_point(point), 'simplex returned an infeasible point'
    logger.debug(f'feasible after {tableau.pivots} pivots')
    return LPResult(feasible=True, point=point)

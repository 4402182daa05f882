#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from spunnormal.context.exceptions import IncompatibleSupports
from spunnormal.equations import ExponentVector
from spunnormal.hull import FarkasCertificate, LPProblem, lp_feasible
from spunnormal.logging import get_logger
from spunnormal.surfaces import is_compatible
from spunnormal.tri import Triangulation
from spunnormal.utils import dot, format_rational

__all__ = [
    'SemiAngleStructure', 'CertificateReport', 'angle_polytope', 'find_dual_semiangle', 'certify_essential',
    'is_semi_angle_structure', 'dual_surfaces'
]


@dataclass(frozen=True)
class SemiAngleStructure:
    """Angles in units of pi, indexed like quad types."""
    angles: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'angles', tuple(Fraction(v) for v in self.angles))

    def pairing(self, x: Sequence) -> Fraction:
        return dot(self.angles, x)

    def is_dual_to(self, x: Sequence) -> bool:
        return self.pairing(x) == 0

    def __str__(self):
        return '(' + ', '.join(format_rational(v) for v in self.angles) + ')'


def angle_polytope(T: Triangulation, A: Sequence[ExponentVector]) -> LPProblem:
    """The semi-angle polytope as a feasibility problem over the quad angles.

    :param T: The triangulation
    :param A: Edge rows of the exponent matrix; entry ``3t + k`` counts the corners of label ``k`` of
        tetrahedron ``t`` around the edge
    :return: Per tetrahedron angle sum 1, per edge weighted angle sum 2, every angle in ``[0, 1]``
    :rtype: :class:`spunnormal.hull.LPProblem`
    """
    dim = 3 * T.n
    equalities = []
    for t in range(T.n):
        equalities.append(([int(3 * t <= j < 3 * t + 3) for j in range(dim)], 1))
    for row in A:
        entries = row.entries if isinstance(row, ExponentVector) else tuple(row)
        assert len(entries) == dim, f'expected edge rows of length {dim}, but got {len(entries)}'
        equalities.append((entries, 2))
    return LPProblem.build(dim, equalities=equalities, upper=[1] * dim)


def is_semi_angle_structure(alpha: Union[SemiAngleStructure, Sequence], P: LPProblem) -> bool:
    angles = alpha.angles if isinstance(alpha, SemiAngleStructure) else tuple(Fraction(v) for v in alpha)
    return P.is_feasible_point(angles)


def _vanishing_rows(support: Sequence[int], dim: int):
    return [([int(i == j) for j in range(dim)], 0) for i in sorted(support)]


def find_dual_semiangle(S: Sequence, P: LPProblem) -> Union[SemiAngleStructure, FarkasCertificate]:
    """Looks for a semi-angle structure vanishing on the support of ``S``.

    Only the support of ``S`` matters, so any nonnegative coordinate is accepted. The lexicographically
    smallest solution is returned, which picks angles in ``{0, 1}`` whenever such a vertex exists.

    :return: The structure, or a certificate that none exists
    """
    assert len(S) == P.dim, f'expected a coordinate of length {P.dim}, but got {len(S)}'
    support = [i for i, v in enumerate(S) if v != 0]
    result = lp_feasible(P.with_equalities(_vanishing_rows(support, P.dim)), lexicographic=True)
    if result.feasible:
        return SemiAngleStructure(result.point)
    return result.certificate


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of an essentialness search.

    A feasible report certifies each 2-sided surface obtained as a Haken sum of the inputs, provided it
    has no boundary parallel components; neither condition is decided here.
    """
    surface_ids: Tuple[int, ...]
    alpha: Optional[SemiAngleStructure]
    feasible: bool
    farkas: Optional[FarkasCertificate] = None
    haken_sums_certified: bool = False
    two_sidedness_unchecked: bool = True
    boundary_parallel_unchecked: bool = True

    def to_dict(self) -> dict:
        doc = dict(surface_ids=list(self.surface_ids),
                   alpha=[format_rational(v) for v in self.alpha.angles] if self.alpha is not None else None,
                   feasible=self.feasible,
                   haken_sums_certified=self.haken_sums_certified,
                   two_sidedness_unchecked=self.two_sidedness_unchecked,
                   boundary_parallel_unchecked=self.boundary_parallel_unchecked)
        if self.farkas is not None:
            doc['farkas'] = dict(eq=[format_rational(v) for v in self.farkas.eq],
                                 ineq=[format_rational(v) for v in self.farkas.ineq],
                                 upper=[format_rational(v) for v in self.farkas.upper])
        return doc


def certify_essential(surfaces: Sequence[Sequence],
                      P: LPProblem,
                      strict: bool = True,
                      surface_ids: Optional[Sequence[int]] = None) -> CertificateReport:
    """Searches for one semi-angle structure dual to every surface in ``surfaces``.

    :param surfaces: Normal Q-coordinates
    :param P: The semi-angle polytope
    :param strict: Require the surfaces to be pairwise compatible, defaults to True
    :param surface_ids: Ids reported for the surfaces, defaults to their positions
    :raises IncompatibleSupports: if ``strict`` and two surfaces are not compatible
    :rtype: :class:`CertificateReport`
    """
    n = P.dim // 3
    ids = tuple(surface_ids) if surface_ids is not None else tuple(range(len(surfaces)))
    assert len(ids) == len(surfaces), f'expected {len(surfaces)} surface ids, but got {len(ids)}'
    compatible = all(is_compatible(x, y, n) for x, y in combinations(surfaces, 2))
    if strict and not compatible:
        raise IncompatibleSupports(f'surfaces {list(ids)} are not pairwise compatible')

    union = [0] * P.dim
    for x in surfaces:
        assert len(x) == P.dim, f'expected coordinates of length {P.dim}, but got {len(x)}'
        union = [int(u != 0 or v != 0) for u, v in zip(union, x)]
    found = find_dual_semiangle(union, P)
    if isinstance(found, SemiAngleStructure):
        get_logger().info(f'surfaces {list(ids)} are dual to {found}')
        return CertificateReport(surface_ids=ids, alpha=found, feasible=True, haken_sums_certified=compatible)
    get_logger().info(f'no semi-angle structure is dual to surfaces {list(ids)}')
    return CertificateReport(surface_ids=ids, alpha=None, feasible=False, farkas=found)


def dual_surfaces(alpha: SemiAngleStructure, vertices: Sequence[Sequence]) -> List[int]:
    """Positions of the coordinates ``x`` with ``alpha . x = 0``."""
    return [i for i, x in enumerate(vertices) if alpha.is_dual_to(x)]

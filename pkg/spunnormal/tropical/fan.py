#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from tqdm import tqdm

from spunnormal.context.exceptions import DegenerateSupport
from spunnormal.equations import ExponentVector, edge_rows
from spunnormal.hull import Cone, cone_intersect, is_subcone
from spunnormal.logging import get_logger
from spunnormal.tri import Triangulation
from spunnormal.utils import dot, format_rational, resolve_num_threads

from .correspondence import xi_to_normal
from .supports import SupportSet, gluing_supports, parameter_supports

__all__ = [
    'DualFan', 'PreVariety', 'spherical_dual', 'max_attained_twice', 'fan_contains', 'prevariety',
    'prevariety_from_rows'
]

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class DualFan:
    """Closed cones of directions on which the maximum over ``support`` is attained at least twice."""
    support: SupportSet
    cones: Tuple[Cone, ...]


def max_attained_twice(xi: Sequence, support: SupportSet) -> bool:
    values = [dot(xi, p) for p in support.points]
    top = max(values)
    return sum(1 for v in values if v == top) >= 2


def fan_contains(fan: DualFan, xi: Sequence) -> bool:
    return any(c.contains(xi) for c in fan.cones)


def _maximal(cones: Sequence[Cone]) -> List[Cone]:
    """Nontrivial cones of the list that are not contained in another one, one per canonical key."""
    unique: Dict[tuple, Cone] = {}
    for c in cones:
        if not c.is_trivial():
            unique.setdefault(c.canonical_key(), c)
    ordered = [unique[key] for key in sorted(unique, key=repr)]
    return [
        c for i, c in enumerate(ordered)
        if not any(i != j and is_subcone(c, other) for j, other in enumerate(ordered))
    ]


def spherical_dual(s: SupportSet) -> DualFan:
    """The cones ``{xi : xi.a = xi.b >= xi.c for every c}`` over the pairs ``a, b`` of ``s``.

    :raises DegenerateSupport: if ``s`` has fewer than two points
    """
    if len(s) < 2:
        raise DegenerateSupport(f'support {s.label or s.points} has fewer than two points')
    cones = []
    for a, b in combinations(s.points, 2):
        equality = [x - y for x, y in zip(a, b)]
        inequalities = [[x - y for x, y in zip(a, c)] for c in s.points if c != a and c != b]
        cones.append(Cone.build(s.ambient, [equality], inequalities).with_rays())
    return DualFan(support=s, cones=tuple(_maximal(cones)))


@dataclass(frozen=True)
class PreVariety:
    """Maximal cones of the intersection of the dual fans of the parameter and edge relations."""
    n: int
    cones: Tuple[Cone, ...]
    rays: Tuple[IntVector, ...]

    def cells_under_N(self) -> List[FrozenSet[IntVector]]:
        """Each maximal cone as the set of normal coordinates of its rays."""
        return [frozenset(xi_to_normal(r) for r in c.cached.rays) for c in self.cones]

    def cell_counts(self) -> Dict[int, int]:
        """Number of maximal cones per projective dimension."""
        counts = {}
        for c in self.cones:
            counts[c.dim() - 1] = counts.get(c.dim() - 1, 0) + 1
        return dict(sorted(counts.items()))

    def to_dict(self) -> dict:
        return dict(num_tetrahedra=self.n,
                    cones=[
                        dict(equalities=[[format_rational(v) for v in row] for row in c.equalities],
                             inequalities=[[format_rational(v) for v in row] for row in c.inequalities],
                             rays=[list(r) for r in c.cached.rays]) for c in self.cones
                    ])


def prevariety_from_rows(n: int,
                         rows: Sequence[ExponentVector],
                         num_threads: Optional[int] = None,
                         progress: bool = False) -> PreVariety:
    """Folds the dual fans of the edge relations ``rows`` and of the parameter relations of ``n``
    tetrahedra into their intersection.

    The edge fans go first, then the three parameter fans of each tetrahedron. Every step intersects
    each current cone with each cone of the next fan on a thread pool and keeps the maximal results.

    :param n: Number of tetrahedra
    :param rows: Edge rows, possibly empty
    :param num_threads: Worker threads for the cone intersections
    :param progress: Whether to show a progress bar
    :rtype: :class:`PreVariety`
    """
    fans = [spherical_dual(s) for s in gluing_supports(rows)] + [spherical_dual(s) for s in parameter_supports(n)]
    logger = get_logger()
    current = [Cone.full(3 * n).with_rays()]
    steps = tqdm(fans, desc='[Fans]') if progress else fans
    with ThreadPoolExecutor(max_workers=resolve_num_threads(num_threads)) as pool:
        for fan in steps:
            pairs = [(a, b) for a in current for b in fan.cones]
            current = _maximal(list(pool.map(lambda ab: cone_intersect(*ab).with_rays(), pairs)))
            logger.debug(f'after {fan.support.label}: {len(current)} cones')

    assert all(not c.cached.lineality for c in current), 'the pre-variety has a lineality space'
    cones = sorted(current, key=lambda c: (-c.dim(), c.cached.rays))
    rays = tuple(sorted({r for c in cones for r in c.cached.rays}, reverse=True))
    pre = PreVariety(n=n, cones=tuple(cones), rays=rays)
    logger.info(f'pre-variety: {len(rays)} rays, maximal cones {pre.cell_counts()}')
    return pre


def prevariety(T: Triangulation, num_threads: Optional[int] = None, progress: bool = False) -> PreVariety:
    """The tropical pre-variety of ``T``; it contains the logarithmic limit set of the shape variety."""
    return prevariety_from_rows(T.n, edge_rows(T), num_threads=num_threads, progress=progress)

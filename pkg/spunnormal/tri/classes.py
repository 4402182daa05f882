#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from spunnormal.constants import EDGE_PAIRS, QUAD_OF_EDGE
from spunnormal.context.exceptions import NonTorusLink
from spunnormal.logging import get_logger

from .triangulation import Triangulation

Corner = Tuple[int, Tuple[int, int]]


@dataclass(frozen=True)
class EdgeClass:
    """An edge of the triangulation as the cyclic sequence of tetrahedron edges around it.

    Each corner is ``(tet, (a, b))``; the ordered pair records the traversal orientation, so
    ``(a, b)`` need not be increasing.
    """
    id: int
    corners: Tuple[Corner, ...]

    @property
    def degree(self) -> int:
        return len(self.corners)

    def label_counts(self, n: int) -> Tuple[int, ...]:
        """How many corners of each label meet this edge, indexed like the 3n shape symbols."""
        counts = [0] * (3 * n)
        for tet, (a, b) in self.corners:
            counts[3 * tet + QUAD_OF_EDGE[(min(a, b), max(a, b))]] += 1
        return tuple(counts)


@dataclass(frozen=True)
class CuspClass:
    id: int
    vertices: FrozenSet[Tuple[int, int]]
    link_euler: int

    @property
    def is_torus(self) -> bool:
        return self.link_euler == 0


def even_completion(a: int, b: int) -> Tuple[int, int]:
    """The two vertices ``c, d`` such that ``(a, b, c, d)`` is an even permutation."""
    c, d = (v for v in range(4) if v not in (a, b))
    inversions = sum(1 for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
                     if (a, b, c, d)[i] > (a, b, c, d)[j])
    return (c, d) if inversions % 2 == 0 else (d, c)


def _walk_edge(T: Triangulation, tet: int, a: int, b: int) -> List[Tuple[int, int, int]]:
    corners = []
    current = (tet, a, b)
    while True:
        corners.append(current)
        t, x, y = current
        c, _ = even_completion(x, y)
        target, perm = T.gluing(t, c)
        current = (target, perm[x], perm[y])
        if current == corners[0]:
            return corners
        assert len(corners) <= 6 * T.n, 'edge traversal did not close up'


def trace_edge_classes(T: Triangulation) -> List[EdgeClass]:
    """Traces the edges of ``T`` around their abstract neighbourhoods.

    Classes are ordered by their least ``(tet, edge pair)`` corner and every walk starts there,
    so the result only depends on the pairing data.

    :param T: A validated triangulation
    :type T: :class:`Triangulation`
    :return: The edge classes
    :rtype: list of :class:`EdgeClass`
    """
    seen = set()
    classes = []
    for tet in range(T.n):
        for a, b in EDGE_PAIRS:
            if (tet, (a, b)) in seen:
                continue
            walk = _walk_edge(T, tet, a, b)
            corners = tuple((t, (x, y)) for t, x, y in walk)
            for t, (x, y) in corners:
                key = (t, (min(x, y), max(x, y)))
                assert key not in seen, f'corner {key} met twice, the triangulation is not orientable'
                seen.add(key)
            classes.append(EdgeClass(id=len(classes), corners=corners))
    assert sum(e.degree for e in classes) == 6 * T.n
    return classes


class _UnionFind:

    def __init__(self, items):
        self._parent = {item: item for item in items}

    def find(self, item):
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller representative so class order is canonical
            if rb < ra:
                ra, rb = rb, ra
            self._parent[rb] = ra

    def groups(self) -> Dict:
        groups = {}
        for item in sorted(self._parent):
            groups.setdefault(self.find(item), []).append(item)
        return groups


def trace_cusp_classes(T: Triangulation) -> List[CuspClass]:
    """Partitions the ideal vertices into cusps and computes the Euler characteristic of each
    vertex link from its induced triangulation (triangles, glued edges and edge ends).

    A non-torus link is logged as a warning; use :func:`require_torus_cusps` to make it fatal.
    """
    vertices = [(t, v) for t in range(T.n) for v in range(4)]
    ends = [(t, v, w) for t in range(T.n) for v in range(4) for w in range(4) if v != w]
    vertex_groups = _UnionFind(vertices)
    end_groups = _UnionFind(ends)
    for t in range(T.n):
        for f in range(4):
            target, perm = T.gluing(t, f)
            for v in range(4):
                if v == f:
                    continue
                vertex_groups.union((t, v), (target, perm[v]))
                for w in range(4):
                    if w not in (v, f):
                        end_groups.union((t, v, w), (target, perm[v], perm[w]))

    link_vertices = {}
    for root in end_groups.groups():
        t, v, _ = root
        cusp = vertex_groups.find((t, v))
        link_vertices[cusp] = link_vertices.get(cusp, 0) + 1

    cusps = []
    logger = get_logger()
    for root, members in vertex_groups.groups().items():
        faces = len(members)
        # every link triangle has three edges, each shared by two triangles
        edges = 3 * faces // 2
        euler = link_vertices[root] - edges + faces
        cusp = CuspClass(id=len(cusps), vertices=frozenset(members), link_euler=euler)
        if not cusp.is_torus:
            logger.warning(f'cusp {cusp.id} has a vertex link of Euler characteristic {euler}, not a torus')
        cusps.append(cusp)
    return cusps


def require_torus_cusps(T: Triangulation) -> List[CuspClass]:
    """Like :func:`trace_cusp_classes`, but raises :class:`NonTorusLink` for any non-torus link."""
    cusps = trace_cusp_classes(T)
    bad = [c.id for c in cusps if not c.is_torus]
    if bad:
        raise NonTorusLink(f'cusps {bad} do not have torus links')
    return cusps


def cusp_of_vertex(cusps: List[CuspClass]) -> Dict[Tuple[int, int], int]:
    return {vertex: cusp.id for cusp in cusps for vertex in cusp.vertices}

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction
from typing import List, Sequence, Tuple

from spunnormal.tri import apply_quad_permutation
from spunnormal.utils import primitive_vector

from .complex import PFComplex, is_compatible, midpoint

__all__ = ['orbits', 'orbit_of', 'arc_midpoints']


def orbit_of(pf: PFComplex, vertex: int, perms: Sequence[Sequence[int]]) -> List[int]:
    """Vertex ids reachable from ``vertex`` under the group generated by ``perms``."""
    index = {v: i for i, v in enumerate(pf.vertices)}
    seen = {vertex}
    frontier = [vertex]
    while frontier:
        current = frontier.pop()
        for perm in perms:
            image = primitive_vector(apply_quad_permutation(perm, pf.vertices[current]))
            assert image in index, f'vertex {current} is not mapped to a vertex, the permutation is not a symmetry'
            target = index[image]
            if target not in seen:
                seen.add(target)
                frontier.append(target)
    return sorted(seen)


def orbits(pf: PFComplex, G: Sequence[Sequence[int]]) -> List[List[int]]:
    """Partitions the vertex ids into orbits of the group generated by the quad permutations ``G``.

    Orbits are sorted by their smallest vertex id.
    """
    assigned = set()
    partition = []
    for vertex in range(len(pf.vertices)):
        if vertex in assigned:
            continue
        orbit = orbit_of(pf, vertex, G)
        assigned.update(orbit)
        partition.append(orbit)
    return partition


def arc_midpoints(pf: PFComplex, partition: Sequence[Sequence[int]]) -> List[Tuple[int, int, Tuple[Fraction, ...]]]:
    """Midpoints of the arcs of the complex joining two vertices of one orbit.

    These are the Haken sums of such pairs, halved; they are admissible because the endpoints of a
    cell are compatible.
    """
    owner = {v: k for k, orbit in enumerate(partition) for v in orbit}
    result = []
    for cell in pf.cells:
        if cell.dim != 2:
            continue
        a, b = sorted(cell.vertex_ids)
        x, y = pf.vertices[a], pf.vertices[b]
        if owner[a] == owner[b] and is_compatible(x, y, pf.n):
            result.append((a, b, midpoint(x, y)))
    return sorted(result)

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from spunnormal.constants import EDGES_OF_QUAD, QUAD_OF_EDGE
from spunnormal.logging import get_logger
from spunnormal.utils import resolve_num_threads

from .classes import CuspClass, cusp_of_vertex
from .triangulation import Perm, Triangulation, perm_compose, perm_inverse, perm_parity

__all__ = ['Symmetry', 'symmetries', 'cusp_stabilizer', 'induced_quad_permutation', 'apply_quad_permutation']


@dataclass(frozen=True, order=True)
class Symmetry:
    """A combinatorial automorphism: tetrahedron ``t`` goes to ``tet_perm[t]`` and its vertex ``v``
    to vertex ``corner_perms[t][v]`` of the image tetrahedron.
    """
    tet_perm: Tuple[int, ...]
    corner_perms: Tuple[Perm, ...]

    @staticmethod
    def identity(n: int) -> 'Symmetry':
        return Symmetry(tuple(range(n)), tuple((0, 1, 2, 3) for _ in range(n)))

    def is_identity(self) -> bool:
        return self == Symmetry.identity(len(self.tet_perm))

    def compose(self, other: 'Symmetry') -> 'Symmetry':
        """``self`` after ``other``."""
        tet_perm = tuple(self.tet_perm[other.tet_perm[t]] for t in range(len(other.tet_perm)))
        corner_perms = tuple(
            perm_compose(self.corner_perms[other.tet_perm[t]], other.corner_perms[t])
            for t in range(len(other.tet_perm)))
        return Symmetry(tet_perm, corner_perms)

    def inverse(self) -> 'Symmetry':
        n = len(self.tet_perm)
        tet_perm = [0] * n
        corner_perms = [None] * n
        for t, image in enumerate(self.tet_perm):
            tet_perm[image] = t
            corner_perms[image] = perm_inverse(self.corner_perms[t])
        return Symmetry(tuple(tet_perm), tuple(corner_perms))

    def is_orientation_preserving(self) -> bool:
        return all(perm_parity(p) == 0 for p in self.corner_perms)

    def maps_vertex(self, tet: int, vertex: int) -> Tuple[int, int]:
        return self.tet_perm[tet], self.corner_perms[tet][vertex]


def _extend_seed(T: Triangulation, image: int, corner: Perm) -> Optional[Symmetry]:
    tet_perm: List[Optional[int]] = [None] * T.n
    corner_perms: List[Optional[Perm]] = [None] * T.n
    tet_perm[0], corner_perms[0] = image, corner
    stack = [0]
    while stack:
        t = stack.pop()
        sigma = corner_perms[t]
        for f in range(4):
            target, perm = T.gluing(t, f)
            image_target, image_perm = T.gluing(tet_perm[t], sigma[f])
            # sigma_target o perm = image_perm o sigma
            required = perm_compose(perm_compose(image_perm, sigma), perm_inverse(perm))
            if tet_perm[target] is None:
                tet_perm[target], corner_perms[target] = image_target, required
                stack.append(target)
            elif tet_perm[target] != image_target or corner_perms[target] != required:
                return None
    if any(t is None for t in tet_perm) or len(set(tet_perm)) != T.n:
        return None
    return Symmetry(tuple(tet_perm), tuple(corner_perms))


def symmetries(T: Triangulation,
               orientation_preserving: bool = True,
               num_threads: Optional[int] = None) -> List[Symmetry]:
    """Finds every combinatorial automorphism of a connected triangulation.

    Each seed fixes the image of tetrahedron 0 together with a vertex permutation; the rest of the
    map is forced by the face pairings. Corner permutations of one automorphism share their parity,
    so ``orientation_preserving`` restricts the seeds to even permutations.

    :param T: A validated triangulation
    :type T: :class:`Triangulation`
    :param orientation_preserving: Whether to keep only automorphisms with even corner permutations
    :type orientation_preserving: bool, optional
    :param num_threads: Number of worker threads, resolved by :func:`spunnormal.utils.resolve_num_threads`
    :type num_threads: int, optional
    :return: The automorphism group in canonical order, identity first
    :rtype: list of :class:`Symmetry`
    """
    seeds = [(image, corner)
             for image in range(T.n)
             for corner in permutations(range(4))
             if not orientation_preserving or perm_parity(corner) == 0]
    with ThreadPoolExecutor(max_workers=resolve_num_threads(num_threads)) as pool:
        found = list(pool.map(lambda seed: _extend_seed(T, *seed), seeds))
    group = sorted(s for s in found if s is not None)
    get_logger().debug(f'found {len(group)} symmetries of {T.name or "the triangulation"}')
    return group


def cusp_stabilizer(T: Triangulation, syms: Sequence[Symmetry], cusps: Sequence[CuspClass]) -> List[Symmetry]:
    """The symmetries sending every cusp to itself."""
    owner = cusp_of_vertex(list(cusps))
    return [s for s in syms if all(owner[s.maps_vertex(t, v)] == owner[(t, v)] for (t, v) in owner)]


def induced_quad_permutation(s: Symmetry) -> Tuple[int, ...]:
    """The permutation of the 3n quad indices induced by ``s``.

    Index ``3t + k`` (quad type ``k`` of tetrahedron ``t``) goes to the index of the quad type
    separating the image edge pair in the image tetrahedron. Quads carry no orientation, so
    the permutation is unsigned.
    """
    images = []
    for t, sigma in enumerate(s.corner_perms):
        for k in range(3):
            a, b = EDGES_OF_QUAD[k][0]
            x, y = sigma[a], sigma[b]
            images.append(3 * s.tet_perm[t] + QUAD_OF_EDGE[(min(x, y), max(x, y))])
    return tuple(images)


def apply_quad_permutation(perm: Sequence[int], x: Sequence) -> tuple:
    """Moves the entry at index ``i`` to index ``perm[i]``."""
    assert len(perm) == len(x), f'expected a coordinate of length {len(perm)}, but got {len(x)}'
    result = [None] * len(x)
    for i, value in enumerate(x):
        result[perm[i]] = value
    return tuple(result)

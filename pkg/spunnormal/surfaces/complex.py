#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from tqdm import tqdm

from spunnormal.context.exceptions import IncompatibleSupports
from spunnormal.hull import Cone, cone_faces, extreme_rays, rank
from spunnormal.logging import get_logger
from spunnormal.utils import dot, primitive_vector, resolve_num_threads

__all__ = [
    'AdmissiblePattern', 'Cell', 'PFComplex', 'enumerate_pf', 'vertex_solutions', 'center_point', 'is_admissible',
    'is_compatible', 'satisfies_matching', 'haken_sum', 'midpoint', 'minimal_representative'
]

# quad type allowed to be nonzero in each tetrahedron
AdmissiblePattern = Tuple[int, ...]
IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class Cell:
    """The cone of admissible solutions carried by one pattern.

    ``vertex_ids`` index into :attr:`PFComplex.vertices`; ``dim`` is the dimension of the cone, so
    the cell is projectively of dimension ``dim - 1``.
    """
    pattern: AdmissiblePattern
    cone: Cone
    vertex_ids: FrozenSet[int]
    dim: int
    maximal: bool = False

    @property
    def projective_dim(self) -> int:
        return self.dim - 1


@dataclass(frozen=True)
class PFComplex:
    n: int
    cells: Tuple[Cell, ...]
    vertices: Tuple[IntVector, ...]

    def maximal_cells(self) -> List[Cell]:
        return [cell for cell in self.cells if cell.maximal]

    def cell_counts(self) -> Dict[int, int]:
        """Number of maximal cells per projective dimension."""
        counts = {}
        for cell in self.maximal_cells():
            counts[cell.projective_dim] = counts.get(cell.projective_dim, 0) + 1
        return dict(sorted(counts.items()))

    def faces(self) -> List[FrozenSet[int]]:
        """Every nonempty face of every cell, as a set of vertex ids."""
        found = set()
        for cell in self.maximal_cells():
            rays = extreme_rays(cell.cone).rays
            ids = [self.vertices.index(r) for r in rays]
            for face in cone_faces(cell.cone):
                if face:
                    found.add(frozenset(ids[i] for i in face))
        return sorted(found, key=lambda f: (len(f), sorted(f)))

    def renumbered(self, order: Sequence[int]) -> 'PFComplex':
        """The same complex with ``vertices[order[k]]`` as vertex ``k``."""
        assert sorted(order) == list(range(len(self.vertices))), 'expected a permutation of the vertex ids'
        new_id = {old: new for new, old in enumerate(order)}
        cells = tuple(replace(cell, vertex_ids=frozenset(new_id[i] for i in cell.vertex_ids)) for cell in self.cells)
        return PFComplex(self.n, cells, tuple(self.vertices[old] for old in order))


def is_admissible(x: Sequence, n: int) -> bool:
    """Nonnegative, with at most one nonzero quad type per tetrahedron."""
    if len(x) != 3 * n or any(v < 0 for v in x):
        return False
    return all(sum(1 for v in x[3 * t:3 * t + 3] if v != 0) <= 1 for t in range(n))


def is_compatible(x: Sequence, y: Sequence, n: int) -> bool:
    """Whether the union of the supports of ``x`` and ``y`` is admissible."""
    assert len(x) == len(y) == 3 * n, f'expected coordinates of length {3 * n}'
    union = [1 if (a != 0 or b != 0) else 0 for a, b in zip(x, y)]
    return is_admissible(union, n) and is_admissible(x, n) and is_admissible(y, n)


def satisfies_matching(B: Sequence[Sequence[int]], x: Sequence) -> bool:
    return all(dot(row, x) == 0 for row in B)


def haken_sum(x: Sequence, y: Sequence) -> tuple:
    """Entrywise sum of two compatible normal coordinates.

    :raises IncompatibleSupports: if the union of the supports is not admissible
    """
    assert len(x) == len(y) and len(x) % 3 == 0, 'expected normal coordinates of equal length'
    if not is_compatible(x, y, len(x) // 3):
        raise IncompatibleSupports('the supports of the summands use two quad types in one tetrahedron')
    return tuple(a + b for a, b in zip(x, y))


def midpoint(x: Sequence, y: Sequence) -> Tuple[Fraction, ...]:
    return tuple(Fraction(a + b) / 2 for a, b in zip(x, y))


def minimal_representative(x: Sequence) -> IntVector:
    return primitive_vector(x)


def _pattern_cone(B: Sequence[Sequence[int]], n: int, pattern: AdmissiblePattern) -> Cone:
    dim = 3 * n
    allowed = {3 * t + k for t, k in enumerate(pattern)}
    units = [[int(i == j) for j in range(dim)] for i in range(dim)]
    equalities = list(B) + [units[i] for i in range(dim) if i not in allowed]
    inequalities = [units[i] for i in sorted(allowed)]
    return Cone.build(dim, equalities, inequalities).with_rays()


def enumerate_pf(B: Sequence[Sequence[int]], n: int, num_threads: Optional[int] = None,
                 progress: bool = False) -> PFComplex:
    """Enumerates the projectivised admissible solution space as a cell complex.

    Each of the ``3^n`` patterns gives the cone ``{B x = 0, x >= 0}`` restricted to one quad type per
    tetrahedron. Nonzero cones are deduplicated by their rays, vertices are collected across all cells
    and a cell is maximal when its vertex set is not contained in another cell's.

    :param B: The Q-matching matrix, with ``3n`` columns
    :param n: Number of tetrahedra
    :param num_threads: Worker threads for the pattern solves
    :param progress: Whether to show a progress bar
    :return: The complex
    :rtype: :class:`PFComplex`
    """
    B = [tuple(row) for row in B]
    assert all(len(row) == 3 * n for row in B), f'expected a matching matrix with {3 * n} columns'
    patterns = list(product(range(3), repeat=n))
    with ThreadPoolExecutor(max_workers=resolve_num_threads(num_threads)) as pool:
        solved = pool.map(lambda p: (p, _pattern_cone(B, n, p)), patterns)
        if progress:
            solved = tqdm(solved, total=len(patterns), desc='[Patterns]')
        solved = list(solved)

    by_rays = {}
    for pattern, cone in solved:
        rays = cone.cached.rays
        if rays and rays not in by_rays:
            by_rays[rays] = (pattern, cone)

    vertices = tuple(sorted({r for rays in by_rays for r in rays}, reverse=True))
    index = {v: i for i, v in enumerate(vertices)}
    cells = []
    for rays, (pattern, cone) in by_rays.items():
        ids = frozenset(index[r] for r in rays)
        cells.append(Cell(pattern=pattern, cone=cone, vertex_ids=ids, dim=rank(list(rays), 3 * n)))
    cells.sort(key=lambda c: (-c.dim, sorted(c.vertex_ids)))
    cells = [
        replace(cell, maximal=not any(cell.vertex_ids < other.vertex_ids for other in cells)) for cell in cells
    ]
    pf = PFComplex(n=n, cells=tuple(cells), vertices=vertices)
    get_logger().info(f'admissible solution space: {len(vertices)} vertices, maximal cells {pf.cell_counts()}')
    return pf


def vertex_solutions(pf: PFComplex) -> List[IntVector]:
    """Minimal integer representatives of the vertex solutions, in vertex id order."""
    return [minimal_representative(v) for v in pf.vertices]


def center_point(pf: PFComplex) -> Optional[Tuple[Fraction, ...]]:
    """The common midpoint of the diagonals of a quadrilateral cell, if there is one."""
    for cell in pf.maximal_cells():
        if cell.projective_dim != 2 or len(cell.vertex_ids) != 4:
            continue
        edges = {face for face in pf.faces() if len(face) == 2 and face <= cell.vertex_ids}
        diagonals = [frozenset(pair) for pair in combinations(sorted(cell.vertex_ids), 2)
                     if frozenset(pair) not in edges]
        if len(diagonals) != 2:
            continue
        (a, c), (b, d) = (sorted(diag) for diag in diagonals)
        first = midpoint(pf.vertices[a], pf.vertices[c])
        if first == midpoint(pf.vertices[b], pf.vertices[d]):
            return first
    return None

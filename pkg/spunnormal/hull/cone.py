#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from spunnormal.context.exceptions import DimensionMismatch, NotPointed
from spunnormal.logging import get_logger
from spunnormal.utils import dot, format_rational, primitive_vector

from .linalg import RationalVector, as_vector, nullspace, rank, rref, solve

__all__ = ['Cone', 'ConeRays', 'extreme_rays', 'cone_intersect', 'is_subcone', 'cone_faces']

IntVector = Tuple[int, ...]


class ConeRays(NamedTuple):
    """Extreme rays of a cone modulo its lineality space.

    ``rays`` are primitive integer vectors orthogonal to the lineality space, sorted; ``lineality``
    is the lineality space as a basis in reduced row echelon form.
    """
    rays: Tuple[IntVector, ...]
    lineality: Tuple[RationalVector, ...]


def _unique_rows(rows) -> Tuple[RationalVector, ...]:
    seen = []
    for row in rows:
        row = as_vector(row)
        if row not in seen:
            seen.append(row)
    return tuple(seen)


@dataclass(frozen=True)
class Cone:
    """The polyhedral cone ``{x : E x = 0, I x >= 0}`` in dimension ``ambient``.

    ``cached`` holds the extreme rays once computed; it never takes part in comparisons.
    """
    ambient: int
    equalities: Tuple[RationalVector, ...] = ()
    inequalities: Tuple[RationalVector, ...] = ()
    cached: Optional[ConeRays] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for row in self.equalities + self.inequalities:
            if len(row) != self.ambient:
                raise DimensionMismatch(f'expected constraints of length {self.ambient}, but got {len(row)}')

    @staticmethod
    def build(ambient: int, equalities: Sequence[Sequence] = (), inequalities: Sequence[Sequence] = ()) -> 'Cone':
        return Cone(ambient, _unique_rows(equalities), _unique_rows(inequalities))

    @staticmethod
    def full(ambient: int) -> 'Cone':
        return Cone(ambient)

    @staticmethod
    def orthant(ambient: int) -> 'Cone':
        return Cone.build(ambient, inequalities=[[int(i == j) for j in range(ambient)] for i in range(ambient)])

    def contains(self, x: Sequence) -> bool:
        assert len(x) == self.ambient, f'expected a vector of length {self.ambient}, but got {len(x)}'
        return all(dot(row, x) == 0 for row in self.equalities) and all(dot(row, x) >= 0 for row in self.inequalities)

    def rays(self) -> ConeRays:
        return extreme_rays(self, report_lineality=True)

    def with_rays(self) -> 'Cone':
        return self if self.cached is not None else replace(self, cached=self.rays())

    def is_trivial(self) -> bool:
        """Whether the cone is the origin alone."""
        generators = self.rays()
        return not generators.rays and not generators.lineality

    def dim(self) -> int:
        generators = self.rays()
        vectors = list(generators.rays) + list(generators.lineality)
        return rank(vectors, self.ambient) if vectors else 0

    def canonical_key(self) -> Tuple[Tuple[RationalVector, ...], Tuple[IntVector, ...]]:
        generators = self.rays()
        return generators.lineality, generators.rays

    def dump(self) -> str:
        """Plain-text listing of constraints and, when known, generators."""
        lines = [f'cone in dimension {self.ambient}']
        for row in self.equalities:
            lines.append('  eq   ' + ' '.join(format_rational(v) for v in row))
        for row in self.inequalities:
            lines.append('  ineq ' + ' '.join(format_rational(v) for v in row))
        if self.cached is not None:
            for ray in self.cached.rays:
                lines.append('  ray  ' + ' '.join(str(v) for v in ray))
            for vector in self.cached.lineality:
                lines.append('  line ' + ' '.join(format_rational(v) for v in vector))
        return '\n'.join(lines)


def _zero_set(rows: Sequence[RationalVector], ray: RationalVector, upto: int) -> FrozenSet[int]:
    return frozenset(i for i in range(upto) if dot(rows[i], ray) == 0)


def _scaled(vector: Sequence[Fraction]) -> RationalVector:
    return tuple(Fraction(v) for v in primitive_vector(vector))


def _double_description(rows: List[RationalVector], d: int) -> List[RationalVector]:
    """Extreme rays of the pointed cone ``{y : rows . y >= 0}`` of full rank ``d``."""
    # insert sparse constraints first
    order = sorted(range(len(rows)), key=lambda i: sum(1 for v in rows[i] if v != 0))
    rows = [rows[i] for i in order]

    basis_rows = []
    rest = []
    for row in rows:
        if len(basis_rows) < d and rank(basis_rows + [row], d) == len(basis_rows) + 1:
            basis_rows.append(row)
        else:
            rest.append(row)
    assert len(basis_rows) == d, f'expected constraints of rank {d}, but got {len(basis_rows)}'

    # the initial simplicial cone is generated by the columns of the inverse
    rays = []
    for j in range(d):
        unit = [Fraction(int(i == j)) for i in range(d)]
        rays.append(_scaled(solve(basis_rows, unit)))
    processed = basis_rows
    zero_sets = [_zero_set(processed, r, len(processed)) for r in rays]

    for row in rest:
        values = [dot(row, r) for r in rays]
        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        if not negative:
            processed = processed + [row]
            zero_sets = [z | {len(processed) - 1} if values[i] == 0 else z for i, z in enumerate(zero_sets)]
            continue

        new_rays = []
        for p in positive:
            for n in negative:
                common = zero_sets[p] & zero_sets[n]
                if len(common) < d - 2:
                    continue
                adjacent = all(k in (p, n) or not common <= zero_sets[k] for k in range(len(rays)))
                if adjacent:
                    new_rays.append(_scaled([values[p] * b - values[n] * a for a, b in zip(rays[p], rays[n])]))

        kept = [i for i, v in enumerate(values) if v >= 0]
        rays = [rays[i] for i in kept] + new_rays
        processed = processed + [row]
        zero_sets = [_zero_set(processed, r, len(processed)) for r in rays]
    return rays


def extreme_rays(c: Cone, report_lineality: bool = False) -> ConeRays:
    """Enumerates the extreme rays of ``c`` with the double description method.

    The cone is first reduced modulo its lineality space ``L``: the rays are computed in the subspace
    ``{E x = 0} ∩ L^⊥``, where the cone is pointed, so the returned rays are unique up to positive
    scaling and are normalised to primitive integer vectors.

    :param c: The cone
    :type c: :class:`Cone`
    :param report_lineality: Whether a nontrivial lineality space is acceptable
    :type report_lineality: bool, optional
    :raises NotPointed: If ``c`` contains a line and ``report_lineality`` is False
    :return: The rays and the lineality basis
    :rtype: :class:`ConeRays`
    """
    if c.cached is not None:
        generators = c.cached
    else:
        lineality_basis = nullspace(list(c.equalities + c.inequalities), c.ambient)
        lineality = tuple(rref(lineality_basis, c.ambient)[0])
        subspace = nullspace(list(c.equalities) + list(lineality), c.ambient)
        d = len(subspace)
        rays = []
        if d > 0:
            reduced = [tuple(dot(row, k) for k in subspace) for row in c.inequalities]
            reduced = [row for row in reduced if any(v != 0 for v in row)]
            for y in _double_description(reduced, d):
                x = [sum(y[j] * subspace[j][i] for j in range(d)) for i in range(c.ambient)]
                rays.append(primitive_vector(x))
        generators = ConeRays(tuple(sorted(set(rays))), lineality)
        get_logger().debug(f'cone in dimension {c.ambient}: {len(generators.rays)} rays, '
                           f'lineality {len(lineality)}')
    if generators.lineality and not report_lineality:
        raise NotPointed(f'the cone contains a lineality space of dimension {len(generators.lineality)}')
    return generators


def cone_intersect(a: Cone, b: Cone) -> Cone:
    """The intersection, i.e. the union of both constraint lists. The result has no cached rays."""
    if a.ambient != b.ambient:
        raise DimensionMismatch(f'cannot intersect cones of dimensions {a.ambient} and {b.ambient}')
    return Cone(a.ambient, _unique_rows(a.equalities + b.equalities), _unique_rows(a.inequalities + b.inequalities))


def is_subcone(a: Cone, b: Cone) -> bool:
    """Whether ``a`` is contained in ``b``, tested on the generators of ``a``."""
    if a.ambient != b.ambient:
        raise DimensionMismatch(f'cannot compare cones of dimensions {a.ambient} and {b.ambient}')
    generators = a.rays()
    if not all(b.contains(r) for r in generators.rays):
        return False
    return all(b.contains(v) and b.contains(tuple(-x for x in v)) for v in generators.lineality)


def cone_faces(c: Cone) -> List[FrozenSet[int]]:
    """Face lattice of a pointed cone as sets of indices into its sorted ray list.

    Every face is cut out by the inequalities it makes tight, so the faces are the intersections
    of the tight sets of the inequalities, plus the cone itself.
    """
    rays = extreme_rays(c).rays
    everything = frozenset(range(len(rays)))
    tight = {frozenset(i for i, r in enumerate(rays) if dot(row, r) == 0) for row in c.inequalities}
    faces = {everything}
    frontier = [everything]
    while frontier:
        face = frontier.pop()
        for t in tight:
            smaller = face & t
            if smaller not in faces:
                faces.add(smaller)
                frontier.append(smaller)
    return sorted(faces, key=lambda f: (len(f), sorted(f)))

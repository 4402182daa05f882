#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction
from typing import TYPE_CHECKING, FrozenSet, List, NamedTuple, Sequence, Tuple

from spunnormal.constants import C1
from spunnormal.context.exceptions import NoAdmissibleSolution
from spunnormal.equations import CnMatrix
from spunnormal.surfaces import PFComplex, is_admissible

if TYPE_CHECKING:
    from .fan import PreVariety

__all__ = ['xi_to_normal', 'normal_to_xi', 'CorrespondenceReport', 'correspondence_report']


def _exact(value):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def xi_to_normal(xi: Sequence) -> tuple:
    """The admissible coordinate ``x`` with ``C_n^T x = xi``.

    Per tetrahedron the block of ``xi`` must be a nonnegative multiple of a row of ``C_1``, or zero;
    that multiple sits at the matching quad type.

    :raises NoAdmissibleSolution: if some block is not of that form
    """
    assert len(xi) % 3 == 0, f'expected a vector of length 3n, but got {len(xi)}'
    x = []
    for t in range(len(xi) // 3):
        block = tuple(Fraction(v) for v in xi[3 * t:3 * t + 3])
        if not any(block):
            x.extend((0, 0, 0))
            continue
        for k, row in enumerate(C1):
            # row k has its +1 entry at position (k + 1) mod 3
            scale = block[(k + 1) % 3]
            if scale > 0 and all(scale * r == b for r, b in zip(row, block)):
                x.extend(_exact(scale) if j == k else 0 for j in range(3))
                break
        else:
            raise NoAdmissibleSolution(f'block {t} of {tuple(xi)} has no nonnegative solution with one quad type')
    return tuple(x)


def normal_to_xi(x: Sequence) -> tuple:
    """``C_n^T x`` for an admissible coordinate ``x``."""
    assert len(x) % 3 == 0, f'expected a vector of length 3n, but got {len(x)}'
    assert is_admissible(x, len(x) // 3), f'{tuple(x)} is not admissible'
    return tuple(_exact(v) for v in CnMatrix(len(x) // 3).transpose_apply(x))


class CorrespondenceReport(NamedTuple):
    bijective: bool
    incidence_matches: bool
    missing: Tuple[Tuple[int, ...], ...]
    extra: Tuple[Tuple[int, ...], ...]


def correspondence_report(pre: 'PreVariety', pf: PFComplex) -> CorrespondenceReport:
    """Compares the rays and maximal cones of the pre-variety, mapped to normal coordinates, with the
    vertices and maximal cells of the admissible solution space.

    ``missing`` lists vertices of ``pf`` no ray maps to, ``extra`` the images that are not vertices.
    """
    images = [xi_to_normal(r) for r in pre.rays]
    vertices = set(pf.vertices)
    missing = tuple(sorted(vertices - set(images), reverse=True))
    extra = tuple(sorted(set(images) - vertices, reverse=True))
    bijective = not missing and not extra and len(set(images)) == len(images)

    cells: List[FrozenSet[Tuple[int, ...]]] = pre.cells_under_N()
    expected = {frozenset(pf.vertices[i] for i in cell.vertex_ids) for cell in pf.maximal_cells()}
    incidence_matches = len(cells) == len(expected) and set(cells) == expected
    return CorrespondenceReport(bijective, incidence_matches, missing, extra)

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import random
from itertools import combinations

import pytest

from spunnormal.context import DimensionMismatch, NotPointed
from spunnormal.hull import Cone, cone_faces, cone_intersect, extreme_rays, is_subcone, nullspace
from spunnormal.testing import parameterize
from spunnormal.utils import dot, primitive_vector


@pytest.mark.cpu
def test_orthant_rays():
    assert extreme_rays(Cone.orthant(2)).rays == ((0, 1), (1, 0))
    assert extreme_rays(Cone.orthant(3)).rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert Cone.orthant(3).dim() == 3


@pytest.mark.cpu
def test_single_ray():
    c = Cone.build(2, equalities=[[1, -1]], inequalities=[[1, 0], [0, 1]])
    assert extreme_rays(c).rays == ((1, 1),)
    assert c.dim() == 1
    assert c.contains((3, 3))
    assert not c.contains((1, 2))


@pytest.mark.cpu
def test_lineality_is_reported():
    half_plane = Cone.build(2, inequalities=[[1, 0]])
    with pytest.raises(NotPointed):
        extreme_rays(half_plane)
    generators = half_plane.rays()
    assert generators.rays == ((1, 0),)
    assert len(generators.lineality) == 1
    assert half_plane.dim() == 2


@pytest.mark.cpu
def test_trivial_cones():
    assert Cone.build(1, equalities=[[1]]).is_trivial()
    assert not Cone.full(2).is_trivial()
    assert Cone.build(2, inequalities=[[1, 0], [-1, 0], [0, 1], [0, -1]]).is_trivial()


@pytest.mark.cpu
def test_intersection_and_containment():
    diagonal = Cone.build(3, equalities=[[1, -1, 0]])
    meet = cone_intersect(Cone.orthant(3), diagonal)
    assert extreme_rays(meet).rays == ((0, 0, 1), (1, 1, 0))
    assert is_subcone(meet, Cone.orthant(3))
    assert not is_subcone(Cone.orthant(3), meet)
    with pytest.raises(DimensionMismatch):
        cone_intersect(Cone.orthant(2), Cone.orthant(3))
    with pytest.raises(DimensionMismatch):
        Cone.build(2, equalities=[[1, 0, 0]])


@pytest.mark.cpu
def test_cached_rays_do_not_change_equality():
    c = Cone.orthant(2)
    cached = c.with_rays()
    assert cached == c
    assert cached.cached is not None
    assert cached.canonical_key() == c.canonical_key()
    assert 'ray  0 1' in cached.dump()


@pytest.mark.cpu
def test_face_lattice():
    assert cone_faces(Cone.orthant(2)) == [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]
    # a square cone has the empty face, four rays, four facets and itself
    square = Cone.build(3, inequalities=[[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]])
    faces = cone_faces(square)
    assert len(faces) == 10
    assert [len(f) for f in faces].count(2) == 4


def _random_cones(count: int, seed: int):
    rng = random.Random(seed)
    cones = []
    for _ in range(count):
        d = rng.randint(1, 4)
        equalities = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(rng.choice([0, 0, 0, 1]))]
        inequalities = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(rng.randint(1, 6))]
        cones.append(Cone.build(d, equalities, inequalities))
    return cones


def _rays_by_tight_subsets(c: Cone):
    """Rays modulo lineality: every set of inequalities whose tight space, inside the complement of the
    lineality space, is a line spanned by a feasible vector."""
    lineality = nullspace(list(c.equalities + c.inequalities), c.ambient)
    fixed = list(c.equalities) + lineality
    rays = set()
    for size in range(c.ambient + 1):
        for tight in combinations(c.inequalities, size):
            line = nullspace(fixed + list(tight), c.ambient)
            if len(line) != 1:
                continue
            for v in (line[0], tuple(-x for x in line[0])):
                if all(dot(row, v) >= 0 for row in c.inequalities):
                    rays.add(primitive_vector(v))
    return tuple(sorted(rays)), len(lineality)


@pytest.mark.cpu
def test_rays_agree_with_tight_subset_enumeration():

    @parameterize('c', _random_cones(200, seed=17))
    def check(c):
        generators = c.rays()
        expected_rays, lineality_dim = _rays_by_tight_subsets(c)
        assert generators.rays == expected_rays, c.dump()
        assert len(generators.lineality) == lineality_dim, c.dump()
        assert all(c.contains(r) for r in generators.rays)

    check()

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import random
from itertools import product

import pytest

from spunnormal.context import DegenerateSupport
from spunnormal.equations import ExponentVector
from spunnormal.tropical import (SupportSet, fan_contains, gluing_supports, max_attained_twice, parameter_supports,
                                 prevariety_from_rows, spherical_dual)


@pytest.mark.cpu
def test_parameter_supports():
    supports = parameter_supports(2)
    assert [s.label for s in supports] == ['p_0', "p'_0", "p''_0", 'p_1', "p'_1", "p''_1"]
    assert supports[0].points == ((0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0))
    assert all(len(s) == 3 and s.ambient == 6 for s in supports)


@pytest.mark.cpu
def test_gluing_supports():
    (s,) = gluing_supports([ExponentVector((1, 0, 0) * 2)])
    assert s.points == ((0, 0, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0))
    assert s.label == 'g_0'
    (zero,) = gluing_supports([ExponentVector.zero(1)])
    assert len(zero) == 1
    with pytest.raises(AssertionError):
        gluing_supports([ExponentVector((1, -1, 0))])


@pytest.mark.cpu
def test_triangle_dual_fan():
    fan = spherical_dual(SupportSet.of([(1, 0), (0, 1), (0, 0)]))
    rays = sorted(r for c in fan.cones for r in c.cached.rays)
    assert rays == [(-1, 0), (0, -1), (1, 1)]
    assert all(not c.cached.lineality for c in fan.cones)
    with pytest.raises(DegenerateSupport):
        spherical_dual(SupportSet.of([(0, 0), (0, 0)]))


@pytest.mark.cpu
@pytest.mark.slow
def test_dual_fan_agrees_with_maximum_oracle():
    rng = random.Random(2024)
    for _ in range(200):
        d = rng.randint(2, 4)
        points = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(rng.randint(2, 6))]
        support = SupportSet.of(points)
        if len(support) < 2:
            continue
        fan = spherical_dual(support)
        for xi in product(range(-2, 3), repeat=d):
            assert fan_contains(fan, xi) == max_attained_twice(xi, support), f'{support.points} at {xi}'


@pytest.mark.cpu
def test_single_tetrahedron_prevariety():
    pre = prevariety_from_rows(1, [])
    assert pre.rays == ((1, -1, 0), (0, 1, -1), (-1, 0, 1))
    assert pre.cell_counts() == {0: 3}
    for ray in pre.rays:
        assert all(max_attained_twice(ray, s) for s in parameter_supports(1))
    assert sorted(pre.cells_under_N()) == sorted(
        [frozenset({(1, 0, 0)}), frozenset({(0, 1, 0)}), frozenset({(0, 0, 1)})], key=sorted)
    assert len(pre.to_dict()['cones']) == 3

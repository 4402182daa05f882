#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import pytest

from spunnormal.fixtures import WHL, fixture_path
from spunnormal.tri import (Symmetry, apply_quad_permutation, cusp_stabilizer, induced_quad_permutation,
                            load_triangulation, symmetries, trace_cusp_classes)
from tests.components_to_test.registry import triangulation_component_funcs


@pytest.mark.cpu
def test_group_orders():
    for get_components in triangulation_component_funcs:
        triangulation_builder, expected = get_components()
        if expected['symmetry_order'] is None:
            continue
        group = symmetries(triangulation_builder())
        assert len(group) == expected['symmetry_order']
        assert group[0].is_identity()


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_group_is_closed():
    triangulation_builder, _ = triangulation_component_funcs.get_callable('whitehead_link')()
    T = triangulation_builder()
    group = symmetries(T, num_threads=1)
    assert symmetries(T, num_threads=4) == group
    members = set(group)
    for s in group:
        assert s.is_orientation_preserving()
        assert s.inverse() in members
        assert s.compose(s.inverse()).is_identity()
        for other in group:
            assert s.compose(other) in members


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_cusp_stabilizer():
    T = load_triangulation(fixture_path(WHL))
    group = symmetries(T)
    stabilizer = cusp_stabilizer(T, group, trace_cusp_classes(T))
    assert len(stabilizer) == 4
    assert set(stabilizer) <= set(group)


@pytest.mark.cpu
def test_orientation_reversing_symmetries_extend_group():
    T = load_triangulation(fixture_path(WHL))
    preserving = symmetries(T)
    everything = symmetries(T, orientation_preserving=False)
    assert set(preserving) <= set(everything)
    assert len(everything) % len(preserving) == 0


@pytest.mark.cpu
def test_induced_quad_permutation():
    identity = Symmetry.identity(4)
    assert induced_quad_permutation(identity) == tuple(range(12))

    T = load_triangulation(fixture_path(WHL))
    for s in symmetries(T):
        perm = induced_quad_permutation(s)
        assert sorted(perm) == list(range(12))
        # quads of one tetrahedron stay together
        for t in range(4):
            assert len({perm[3 * t + k] // 3 for k in range(3)}) == 1


@pytest.mark.cpu
def test_apply_quad_permutation():
    assert apply_quad_permutation((1, 2, 0), ('a', 'b', 'c')) == ('c', 'a', 'b')
    with pytest.raises(AssertionError):
        apply_quad_permutation((0, 1), (1, 2, 3))


@pytest.mark.cpu
def test_induced_quad_permutation_is_a_group_action():
    for get_components in triangulation_component_funcs:
        triangulation_builder, _ = get_components()
        group = symmetries(triangulation_builder(), orientation_preserving=False)
        induced = {s: induced_quad_permutation(s) for s in group}
        for g in group:
            for h in group:
                assert induced[g.compose(h)] == tuple(induced[g][i] for i in induced[h])
            x = tuple(range(len(induced[g])))
            assert apply_quad_permutation(induced[g.inverse()], apply_quad_permutation(induced[g], x)) == x

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import copy

import pytest

from spunnormal.context import (MalformedDocument, NonInvolutivePairing, NonTorusLink, OrientationViolation,
                                UnpairedFace)
from spunnormal.fixtures import EMPTY, WHL, fixture_path, load_fixture
from spunnormal.tri import (even_completion, load_triangulation, parse_triangulation, perm_compose, perm_inverse,
                            perm_parity, require_torus_cusps, trace_cusp_classes, trace_edge_classes)
from tests.components_to_test.registry import triangulation_component_funcs


@pytest.mark.cpu
def test_permutation_helpers():
    assert perm_parity((0, 1, 2, 3)) == 0
    assert perm_parity((1, 0, 2, 3)) == 1
    assert perm_parity((1, 2, 3, 0)) == 1
    assert perm_parity((1, 0, 3, 2)) == 0
    assert perm_inverse((1, 2, 3, 0)) == (3, 0, 1, 2)
    assert perm_compose((1, 2, 3, 0), (3, 0, 1, 2)) == (0, 1, 2, 3)


@pytest.mark.cpu
def test_even_completion():
    assert even_completion(0, 1) == (2, 3)
    assert even_completion(0, 2) == (3, 1)
    assert even_completion(1, 0) == (3, 2)
    for a in range(4):
        for b in range(4):
            if a != b:
                c, d = even_completion(a, b)
                assert perm_parity((a, b, c, d)) == 0


@pytest.mark.cpu
def test_components_parse():
    for get_components in triangulation_component_funcs:
        triangulation_builder, expected = get_components()
        T = triangulation_builder()
        assert T.n == expected['n']
        edges = trace_edge_classes(T)
        assert sum(e.degree for e in edges) == 6 * T.n
        if expected['edge_degrees'] is not None:
            assert tuple(e.degree for e in edges) == expected['edge_degrees']
        if expected['num_cusps'] is not None:
            assert len(trace_cusp_classes(T)) == expected['num_cusps']


@pytest.mark.cpu
def test_document_roundtrip():
    T = load_triangulation(fixture_path(WHL))
    assert parse_triangulation(T.to_document()) == T
    assert T.name == 'whitehead_link'


@pytest.mark.cpu
def test_unpaired_face():
    with pytest.raises(UnpairedFace):
        load_triangulation(fixture_path(EMPTY))


@pytest.mark.cpu
def test_non_involutive_pairing():
    doc = copy.deepcopy(load_fixture(WHL))
    doc['gluings'][0][0] = {'tet': 1, 'perm': [0, 1, 3, 2]}
    with pytest.raises(NonInvolutivePairing):
        parse_triangulation(doc)


@pytest.mark.cpu
def test_orientation_violation():
    doc = {
        'num_tetrahedra': 1,
        'gluings': [[{'tet': 0, 'perm': [1, 0, 3, 2]}, {'tet': 0, 'perm': [1, 0, 3, 2]},
                     {'tet': 0, 'perm': [0, 1, 3, 2]}, {'tet': 0, 'perm': [0, 1, 3, 2]}]]
    }
    with pytest.raises(OrientationViolation):
        parse_triangulation(doc)


@pytest.mark.cpu
def test_malformed_documents():
    with pytest.raises(MalformedDocument):
        parse_triangulation('{"num_tetrahedra": 0, "gluings": []}')
    with pytest.raises(MalformedDocument):
        parse_triangulation('{not json')
    doc = copy.deepcopy(load_fixture(WHL))
    doc['gluings'][0][0] = {'tet': 2, 'perm': [0, 0, 1, 2]}
    with pytest.raises(MalformedDocument):
        parse_triangulation(doc)
    doc['gluings'][0][0] = {'tet': 7, 'perm': [0, 1, 3, 2]}
    with pytest.raises(MalformedDocument):
        parse_triangulation(doc)


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_edges_and_cusps():
    T = load_triangulation(fixture_path(WHL))
    edges = trace_edge_classes(T)
    counts = [e.label_counts(T.n) for e in edges]

    # every label of every tetrahedron sits on exactly two edges
    assert [sum(column) for column in zip(*counts)] == [2] * 12
    assert all(sum(c) == e.degree for c, e in zip(counts, edges))
    assert (1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0) in counts

    cusps = require_torus_cusps(T)
    assert len(cusps) == 2
    assert all(c.link_euler == 0 for c in cusps)
    assert sum(len(c.vertices) for c in cusps) == 16


@pytest.mark.cpu
def test_edge_count_matches_tetrahedra_on_torus_cusps():
    for get_components in triangulation_component_funcs:
        triangulation_builder, expected = get_components()
        T = triangulation_builder()
        edges = trace_edge_classes(T)
        if all(c.link_euler == 0 for c in trace_cusp_classes(T)):
            assert len(edges) == T.n
            assert len(require_torus_cusps(T)) == expected['num_cusps']
        else:
            assert len(edges) != T.n
            with pytest.raises(NonTorusLink):
                require_torus_cusps(T)

#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction

import pytest

from spunnormal.context import NoAdmissibleSolution
from spunnormal.equations import qmatching_direct
from spunnormal.fixtures import WHL, WHL_TABLE, fixture_path
from spunnormal.surfaces import enumerate_pf, load_reference
from spunnormal.testing import assert_exact_equal, parameterize
from spunnormal.tri import load_triangulation
from spunnormal.tropical import correspondence_report, normal_to_xi, prevariety, prevariety_from_rows, xi_to_normal


@pytest.mark.cpu
def test_xi_to_normal_examples():
    assert xi_to_normal((0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1, -1)) == (0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0)
    assert xi_to_normal((-1, 0, 1, 0, 1, -1, 0, 0, 0, 1, -1, 0)) == (0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1)
    assert xi_to_normal((-1, 0, 1, 1, -1, 0, -1, 0, 1, 1, -1, 0)) == (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1)
    assert xi_to_normal((0, 1, -1) * 4) == (1, 0, 0) * 4
    assert_exact_equal(xi_to_normal((0, Fraction(1, 2), Fraction(-1, 2))), (Fraction(1, 2), 0, 0))


@pytest.mark.cpu
def test_xi_to_normal_rejects_blocks_off_the_rows():
    with pytest.raises(NoAdmissibleSolution):
        xi_to_normal((1, 1, -2))
    with pytest.raises(NoAdmissibleSolution):
        xi_to_normal((0, -1, 1))
    with pytest.raises(AssertionError):
        normal_to_xi((1, 1, 0))


@pytest.mark.cpu
def test_round_trip_on_reference_vertices():
    table = load_reference(fixture_path(WHL_TABLE))

    @parameterize('vertex_id', list(range(1, 21)))
    def check(vertex_id):
        x = table.coordinate(vertex_id)
        assert xi_to_normal(normal_to_xi(x)) == x

    check()


@pytest.mark.cpu
def test_single_tetrahedron_correspondence():
    report = correspondence_report(prevariety_from_rows(1, []), enumerate_pf([], 1))
    assert report.bijective and report.incidence_matches
    assert report.missing == () and report.extra == ()


@pytest.mark.cpu
@pytest.mark.slow
@pytest.mark.golden
def test_whitehead_correspondence():
    T = load_triangulation(fixture_path(WHL))
    pre = prevariety(T)
    pf = enumerate_pf(qmatching_direct(T), T.n)
    assert len(pre.rays) == 20
    assert pre.cell_counts() == {1: 28, 2: 1}
    report = correspondence_report(pre, pf)
    assert report.bijective, f'missing {report.missing}, extra {report.extra}'
    assert report.incidence_matches

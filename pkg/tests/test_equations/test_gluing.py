#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import cmath
import math

import pytest

from spunnormal.context import DegenerateShape, NonTorusLink
from spunnormal.equations import ExponentVector, ShapeAssignment, edge_rows, evaluate_row, parameter_rows
from spunnormal.fixtures import FIGURE8, ONE_TET, WHL, fixture_path
from spunnormal.testing import assert_close_complex
from spunnormal.tri import load_triangulation

COMPLETE = ShapeAssignment((1j, 1j, 1j, 1j))


@pytest.mark.cpu
def test_exponent_vector():
    r = ExponentVector((1, 0, 0, 0, 2, 0), 3)
    assert r.sign_exp == 1
    assert r.n == 2
    assert r.block(1) == (0, 2, 0)
    assert r.describe() == "-z_0 z'_1^2"
    assert ExponentVector.zero(2).describe() == '1'
    assert r.times(r, -1) == ExponentVector.zero(2)
    assert r.inverse().entries == (-1, 0, 0, 0, -2, 0)
    with pytest.raises(AssertionError):
        ExponentVector((1, 0))


@pytest.mark.cpu
def test_shape_triple():
    z, z1, z2 = ShapeAssignment((1j,)).triple(0)
    assert_close_complex(z1, (1 + 1j) / 2)
    assert_close_complex(z2, 1 + 1j)
    assert_close_complex(z * z1 * z2, -1)


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_edge_rows():
    A = edge_rows(load_triangulation(fixture_path(WHL)))
    assert len(A) == 4
    assert ExponentVector((1, 0, 0) * 4) in A
    assert sorted(sum(r.entries) for r in A) == [4, 4, 8, 8]


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_edge_rows_hold_at_complete_shapes():
    for r in edge_rows(load_triangulation(fixture_path(WHL))):
        assert_close_complex(evaluate_row(r, COMPLETE), 1)


@pytest.mark.cpu
def test_figure_eight_edge_rows_hold_at_regular_shapes():
    regular = ShapeAssignment((cmath.exp(1j * math.pi / 3),) * 2)
    for r in edge_rows(load_triangulation(fixture_path(FIGURE8))):
        assert sum(r.entries) == 6
        assert_close_complex(evaluate_row(r, regular), 1)


@pytest.mark.cpu
def test_evaluate_row_edge_cases():
    assert evaluate_row(ExponentVector(()), ShapeAssignment(())) == 1
    with pytest.raises(DegenerateShape):
        evaluate_row(ExponentVector((1, 0, 0) * 4), ShapeAssignment((1, 1j, 1j, 1j)))
    with pytest.raises(DegenerateShape):
        evaluate_row(ExponentVector((1, 0, 0) * 4), ShapeAssignment((0, 1j, 1j, 1j)))


@pytest.mark.cpu
def test_parameter_rows():
    supports = parameter_rows(1)
    assert supports == [
        ((1, 0, 0), (1, 0, 1), (0, 0, 0)),
        ((1, 1, 0), (0, 1, 0), (0, 0, 0)),
        ((0, 1, 1), (0, 0, 1), (0, 0, 0)),
    ]
    assert len(parameter_rows(4)) == 12


@pytest.mark.cpu
def test_non_torus_cusp_is_rejected():
    # the single tetrahedron has a spherical vertex link
    with pytest.raises(NonTorusLink):
        edge_rows(load_triangulation(fixture_path(ONE_TET)))

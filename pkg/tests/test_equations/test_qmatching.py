#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import pytest

from spunnormal.equations import (CnMatrix, ExponentVector, edge_rows, peripheral_rows, qmatching_direct,
                                  qmatching_from_A, slope_functionals)
from spunnormal.fixtures import WHL, WHL_NZ, WHL_TABLE, fixture_path
from spunnormal.hull import nullspace, rank, rref
from spunnormal.surfaces import load_reference
from spunnormal.testing import assert_same_ray, parameterize
from spunnormal.tri import load_triangulation
from tests.components_to_test.registry import triangulation_component_funcs

V1 = (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0)
V2 = (0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0)
V13 = (0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2)


@pytest.mark.cpu
def test_cn_matrix():
    cn = CnMatrix(2)
    dense = cn.dense()
    assert dense[0] == (0, 1, -1, 0, 0, 0)
    assert dense[5] == (0, 0, 0, 1, -1, 0)
    assert cn.right_multiply((1, 0, 0, 0, 1, 0)) == (0, 1, -1, -1, 0, 1)
    row = (3, -1, 2, 0, 5, 1)
    assert cn.right_multiply(row) == tuple(sum(row[i] * dense[i][j] for i in range(6)) for j in range(6))


@pytest.mark.cpu
@pytest.mark.golden
def test_transpose_apply_examples():
    cn = CnMatrix(4)
    assert cn.transpose_apply(V1) == (0, 1, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0)
    assert cn.transpose_apply(V13) == (0, 0, 0, -1, 0, 1, -1, 0, 1, 2, -2, 0)


@pytest.mark.cpu
def test_direct_matching_equals_product():
    for get_components in triangulation_component_funcs:
        triangulation_builder, expected = get_components()
        if expected['n'] == 1:
            continue
        T = triangulation_builder()
        assert qmatching_direct(T) == qmatching_from_A(edge_rows(T))


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_matching_rows():
    B = qmatching_direct(load_triangulation(fixture_path(WHL)))
    assert (0, 1, -1) * 4 in B

    @parameterize('x', [V1, V2, V13])
    def check_solution(x, matrix):
        assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in matrix)

    check_solution(matrix=B)


Q_MATCH_1 = (0, 1, -1) * 4
Q_MATCH_2 = (1, -1, 0, 1, -1, 0, -1, 1, 0, -1, 1, 0)
BLACK = (1, -2, 1, 1, -2, 1, -1, 0, 1, -1, 0, 1)


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_matching_reduces_to_two_rows():
    T = load_triangulation(fixture_path(WHL))
    expected = rref([Q_MATCH_1, Q_MATCH_2], 12)[0]
    assert tuple(b - a for a, b in zip(Q_MATCH_1, Q_MATCH_2)) == BLACK

    @parameterize('B', [qmatching_direct(T), qmatching_from_A(edge_rows(T))])
    def check_reduction(B):
        assert rank(B, 12) == 2
        assert rref(B, 12)[0] == expected
        assert rank(list(B) + [BLACK], 12) == 2

    check_reduction()


@pytest.mark.cpu
@pytest.mark.golden
def test_pattern_kernel_is_spanned_by_vertex():
    B = qmatching_direct(load_triangulation(fixture_path(WHL)))
    # keep only the columns of q_1 and q_2
    restricted = [(row[3], row[6]) for row in B]
    kernel = nullspace(restricted, 2)
    assert len(kernel) == 1
    assert_same_ray(kernel[0], (1, 1))


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_slope_functionals():
    curves = peripheral_rows(fixture_path(WHL_NZ))
    nu_l0, nu_m0, nu_l1, nu_m1 = slope_functionals(
        [curves[0].longitude, curves[0].meridian, curves[1].longitude, curves[1].meridian], ['L0', 'M0', 'L1', 'M1'])
    assert nu_m0.coeffs == (0, -1, 1, 1, -1, 0, 0, 0, 0, -1, 0, 1)
    assert nu_m0.describe() == "-q'_0 + q''_0 + q_1 - q'_1 - q_3 + q''_3"
    assert nu_l0.coeffs == (-1, 3, -2, -1, 1, 0, 1, -1, 0, 1, 1, -2)
    assert nu_m1.coeffs == (1, 0, -1, 0, 0, 0, 0, 1, -1, -1, 1, 0)
    assert nu_l1.coeffs == (-1, -1, 2, -1, 1, 0, 1, -3, 2, 1, -1, 0)
    assert nu_l0.label == 'L0'
    assert (nu_l0(V13), -nu_m0(V13), nu_l1(V13), -nu_m1(V13)) == (-4, -1, -2, -1)
    assert (nu_l0(V2), -nu_m0(V2), nu_l1(V2), -nu_m1(V2)) == (0, -1, 0, 0)


def _monomial(**blocks) -> ExponentVector:
    """Exponents of a monomial in the shapes ``w, x, y, z`` of tetrahedra 0 to 3, each given as
    ``(z, z', z'')`` exponents."""
    entries = []
    for name in 'wxyz':
        entries.extend(blocks.get(name, (0, 0, 0)))
    return ExponentVector(tuple(entries))


@pytest.mark.cpu
@pytest.mark.golden
def test_whitehead_holonomy_monomials():
    # x'z''/y, x^2 y^2, x/(w''z') and w^2 y^2
    holonomies = [
        _monomial(x=(0, 1, 0), y=(-1, 0, 0), z=(0, 0, 1)),
        _monomial(x=(2, 0, 0), y=(2, 0, 0)),
        _monomial(w=(0, 0, -1), x=(1, 0, 0), z=(0, -1, 0)),
        _monomial(w=(2, 0, 0), y=(2, 0, 0)),
    ]
    nu_m0, nu_l0, nu_m1, nu_l1 = slope_functionals(holonomies, ['M0', 'L0', 'M1', 'L1'])
    assert nu_m0.coeffs == (0, 0, 0, 1, 0, -1, 0, 1, -1, -1, 1, 0)
    assert nu_m0.describe() == "q_1 - q''_1 + q'_2 - q''_2 - q_3 + q'_3"
    assert nu_l0.coeffs == (0, 0, 0, 0, -2, 2, 0, -2, 2, 0, 0, 0)
    assert nu_l0.describe() == "-2q'_1 + 2q''_1 - 2q'_2 + 2q''_2"
    assert nu_m1.coeffs == (1, -1, 0, 0, -1, 1, 0, 0, 0, -1, 0, 1)
    assert nu_l1.coeffs == (0, -2, 2, 0, 0, 0, 0, -2, 2, 0, 0, 0)

    curves = peripheral_rows(fixture_path(WHL_NZ))
    census = slope_functionals([curves[0].meridian, curves[0].longitude, curves[1].meridian, curves[1].longitude])
    table = load_reference(fixture_path(WHL_TABLE))
    for vertex in table.vertices:
        x = tuple(vertex['coordinate'])
        assert [fn(x) for fn in census] == [fn(x) for fn in (nu_m0, nu_l0, nu_m1, nu_l1)], f'vertex {vertex["id"]}'
        assert (nu_l0(x), -nu_m0(x), nu_l1(x), -nu_m1(x)) == tuple(vertex['boundary']), f'vertex {vertex["id"]}'


@pytest.mark.cpu
def test_slope_functional_contraction():
    z, z_prime, z_double = (ExponentVector(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert [fn.coeffs for fn in slope_functionals([z, z_prime, z_double])] == [(0, -1, 1), (1, 0, -1), (-1, 1, 0)]
    assert slope_functionals([ExponentVector.zero(2)])[0].coeffs == (0,) * 6

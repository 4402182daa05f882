#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction

import pytest
from mpmath import mpf

from spunnormal.builder import build_degeneration
from spunnormal.context import DegenerateShape
from spunnormal.equations import edge_rows, evaluate_row
from spunnormal.fixtures import WHL, fixture_path
from spunnormal.registry import DEGENERATIONS
from spunnormal.testing import angle_between, assert_close_complex, parameterize
from spunnormal.tri import load_triangulation
from spunnormal.tropical import (CentreSquarePath, ConstantPath, EqualGrowthPath, FlatTetrahedraPath, GoldenRatioPath,
                                 log_limit_probe, working_digits)

DIVERGENT_PATHS = [
    EqualGrowthPath(0),
    EqualGrowthPath(1),
    EqualGrowthPath(-1),
    FlatTetrahedraPath(),
    GoldenRatioPath(),
    CentreSquarePath()
]


@pytest.mark.cpu
def test_working_digits():
    assert working_digits(Fraction(1, 2**10), 30) == 34
    assert working_digits(Fraction(1, 2), 0) == 1


@pytest.mark.cpu
def test_registered_paths():
    assert {'EqualGrowthPath', 'GoldenRatioPath', 'ConstantPath'} <= set(DEGENERATIONS.names())
    assert build_degeneration(dict(type='EqualGrowthPath', limit=-1)).expected_xi == EqualGrowthPath(-1).expected_xi
    assert build_degeneration(dict(type='CentreSquarePath')).expected_xi == (0, 1, -1) * 4
    with pytest.raises(AssertionError):
        EqualGrowthPath(2)


@pytest.mark.cpu
def test_paths_satisfy_edge_relations():
    rows = edge_rows(load_triangulation(fixture_path(WHL)))

    @parameterize('path', [EqualGrowthPath(0), EqualGrowthPath(1), CentreSquarePath()])
    def check(path):
        Z = path.assignment(mpf(1) / 8)
        for row in rows:
            assert_close_complex(evaluate_row(row, Z), 1)

    check()


@pytest.mark.cpu
def test_constant_path_does_not_diverge():
    result = log_limit_probe(ConstantPath(), samples=10)
    assert not result.divergent
    assert result.converged
    assert result.direction == (0.0,) * 12
    assert result.angle_to((1,) * 12) == pytest.approx(3.141592653589793)

    with pytest.raises(DegenerateShape):
        log_limit_probe(ConstantPath((1, 1j, 1j, 1j)), samples=2)


@pytest.mark.cpu
def test_direction_converges_quickly_on_exact_logs():

    @parameterize('path', [EqualGrowthPath(0), CentreSquarePath()])
    def check(path):
        result = log_limit_probe(path, samples=60)
        assert result.divergent and result.converged
        assert result.angle_to(path.expected_xi) < 1e-3
        assert angle_between(result.normalized, path.expected_xi) < 1e-1

    check()


@pytest.mark.cpu
def test_secant_recovers_expected_rays():

    @parameterize('path', DIVERGENT_PATHS)
    def check(path):
        result = log_limit_probe(path, samples=80)
        assert result.divergent
        assert result.angle_to(path.expected_xi, use_secant=True) < 1e-6, repr(path)

    check()


@pytest.mark.cpu
@pytest.mark.slow
def test_direction_converges_with_many_samples():

    @parameterize('path', [EqualGrowthPath(1), EqualGrowthPath(-1), FlatTetrahedraPath(), GoldenRatioPath()])
    def check(path):
        result = log_limit_probe(path, samples=2000)
        assert result.angle_to(path.expected_xi) < 1e-3, repr(path)

    check()

from fractions import Fraction
from math import gcd, pi

import numpy as np
import pytest

from orbindex.correction import n_closed
from orbindex.numtheory import DomainError, sawtooth
from orbindex.oracle import (
    RotationAngles,
    assembled_correction_float,
    chern_ratio,
    chern_ratio_from_traces,
    correction_sum_float,
    eisenstein_sum_float,
    eta_float,
    rotation_matrix,
    traces,
    traces_matrix,
)


@pytest.mark.parametrize(
    "t1, t2, expected",
    [
        # g = -Id acts trivially on 2-forms, so S^2_0(N) (dim 9) has trace 9
        (pi, pi, (-4.0, 9.0, 5.0)),
        (pi / 2, pi / 2, (0.0, -3.0, 1.0)),
    ],
)
def test_traces_substitution(t1, t2, expected):
    a = RotationAngles(t1, t2)
    assert traces(a) == pytest.approx(expected, abs=1e-12)
    assert traces_matrix(a) == pytest.approx(expected, abs=1e-9)


def test_traces_identity_gives_dimensions():
    assert traces_matrix(RotationAngles(0.0, 0.0)) == pytest.approx((4, 9, 5), abs=1e-9)


def test_traces_match_matrix_grid():
    grid = np.linspace(0.1, 2 * pi - 0.1, 10)
    for t1 in grid:
        for t2 in grid:
            a = RotationAngles(t1, t2)
            assert traces(a) == pytest.approx(traces_matrix(a), abs=1e-9)


def test_rotation_matrix_is_special_orthogonal():
    g = rotation_matrix(RotationAngles(0.7, 2.1))
    assert np.allclose(g @ g.T, np.eye(4))
    assert np.linalg.det(g) == pytest.approx(1.0)


def test_chern_ratio_examples():
    assert chern_ratio(RotationAngles(pi, pi)) == pytest.approx(-0.5, abs=1e-12)
    assert chern_ratio(RotationAngles(2 * pi / 3, 2 * pi / 3)) == pytest.approx(-1 / 3, abs=1e-12)


def test_chern_ratio_equals_trace_ratio():
    for t1, t2 in [(0.3, 1.9), (2 * pi / 5, 4 * pi / 5), (5.0, 1.0), (pi, 0.4)]:
        a = RotationAngles(t1, t2)
        assert chern_ratio(a) == pytest.approx(chern_ratio_from_traces(a), abs=1e-10)


def test_chern_ratio_rejects_identity_angle():
    with pytest.raises(DomainError):
        chern_ratio(RotationAngles(2 * pi, 1.0))


def test_correction_sum_examples():
    assert correction_sum_float(1, 2) == pytest.approx(-0.5, abs=1e-12)
    assembled = -7.5 * 4 / 5 + 14.5 * eta_float(2, 5) + correction_sum_float(2, 5) / 5
    assert assembled == pytest.approx(-6, abs=1e-6)
    assert assembled_correction_float(1, 3) == pytest.approx(-2, abs=1e-6)


def test_assembled_matches_closed_form():
    for p in range(2, 60):
        for q in range(1, p):
            if gcd(q, p) == 1:
                assert assembled_correction_float(q, p) == pytest.approx(n_closed(q, p), abs=1e-4)


@pytest.mark.parametrize("q, p, expected", [(1, 2, 0.0), (2, 5, -0.1), (3, 5, 0.1)])
def test_eisenstein_examples(q, p, expected):
    assert eisenstein_sum_float(q, p) == pytest.approx(expected, abs=1e-9)


def test_eisenstein_matches_sawtooth():
    for p in range(2, 200):
        for q in range(1, p):
            if gcd(q, p) == 1:
                assert abs(eisenstein_sum_float(q, p) - float(sawtooth(Fraction(q, p)))) <= 1e-8

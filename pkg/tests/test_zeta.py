from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from zetaprop.errors import NotSquare
from zetaprop.linalg import MatrixQ, det_one_minus_tA, trace_power
from zetaprop.ring import RationalFunction as RF, T, rf_to_series
from zetaprop.zeta import (
    GradedAction,
    lefschetz_number,
    zeta_function,
    zeta_log_derivative,
    zeta_series_from_lefschetz,
)

ONE = MatrixQ([[1]])
EMPTY = MatrixQ.zeros(0, 0)
SPHERE = GradedAction((ONE, EMPTY, ONE))
TORUS = GradedAction((ONE, MatrixQ.identity(2), ONE))
ANOSOV = GradedAction.of([[1]], [[2, 1], [1, 1]], [[1]])


@st.composite
def actions(draw, max_dim=4):
    def mat():
        n = draw(st.integers(0, max_dim))
        return MatrixQ([[draw(st.integers(-3, 3)) for _ in range(n)] for _ in range(n)], rows=n, cols=n)

    return GradedAction((mat(), mat(), mat()))


def test_graded_action_shape():
    with pytest.raises(ValueError):
        GradedAction((ONE, ONE))
    with pytest.raises(NotSquare):
        GradedAction((ONE, MatrixQ([[1, 2]]), ONE))
    assert ANOSOV.dims == (1, 2, 1)


def test_lefschetz_examples():
    assert all(lefschetz_number(SPHERE, k) == 2 for k in range(1, 8))
    assert all(lefschetz_number(TORUS, k) == 0 for k in range(1, 8))
    assert [lefschetz_number(ANOSOV, k) for k in (1, 2, 3)] == [-1, -5, -16]


def test_anosov_lefschetz_is_two_minus_lucas():
    lucas = [2, 1]
    for _ in range(20):
        lucas.append(lucas[-1] + lucas[-2])
    assert all(lefschetz_number(ANOSOV, k) == 2 - lucas[2 * k] for k in range(1, 10))


def test_zeta_examples():
    assert zeta_function(SPHERE) == RF(1, (1 - T) ** 2)
    assert zeta_function(TORUS) == 1
    z = zeta_function(ANOSOV)
    assert z == RF(1 - 3 * T + T**2, (1 - T) ** 2)
    assert str(z) == "(1-3*t+t^2)/(1-t)^2"


def test_log_derivative_examples():
    assert zeta_log_derivative(SPHERE) == RF(2 * T, 1 - T)
    assert zeta_log_derivative(TORUS) == 0
    assert rf_to_series(zeta_log_derivative(ANOSOV), 3).coefficients == [0, -1, -5, -16]


def test_series_from_lefschetz_examples():
    assert zeta_series_from_lefschetz(SPHERE, 3).coefficients == [1, 2, 3, 4]
    assert zeta_series_from_lefschetz(TORUS, 5).coefficients == [1, 0, 0, 0, 0, 0]
    # (1 - 3t + t^2)(1 + 2t + 3t^2 + ...) = 1 - t - 2t^2 + ...
    assert zeta_series_from_lefschetz(ANOSOV, 2).coefficients == [1, -1, -2]


@given(actions())
def test_trace_formula(g):
    s = rf_to_series(zeta_log_derivative(g), 10)
    assert s.coefficients[1:] == [lefschetz_number(g, k) for k in range(1, 11)]


@given(actions())
def test_exp_of_lefschetz_is_zeta(g):
    assert zeta_series_from_lefschetz(g, 10) == rf_to_series(zeta_function(g), 10)


@given(actions(max_dim=3), actions(max_dim=3))
def test_direct_sum_in_degree_one_multiplies_numerators(g, h):
    joined = GradedAction((g[0], g[1].block_diagonal(h[1]), g[2]))
    assert zeta_function(joined) == zeta_function(g) * RF(det_one_minus_tA(h[1]))


def test_lefschetz_uses_chain_traces():
    k = 4
    assert lefschetz_number(ANOSOV, k) == 1 - trace_power(ANOSOV[1], k) + 1

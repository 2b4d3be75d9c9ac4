from math import comb

import pytest

from sl2calc.errors import ParameterError
from sl2calc.fields import PrimeField
from sl2calc.hankel import (BettiTable, HilbertSeries, eagon_northcott_betti,
                            generalized_hermite_check, hankel_evaluate,
                            hankel_matrix, hilbert_series, mcm_data,
                            secant_invariants)
from sl2calc.matrices import rank


def test_hankel_matrix_shape_and_entries():
    arr = hankel_matrix(4, 1)
    assert arr == [[0, 1], [1, 2], [2, 3], [3, 4]]
    assert hankel_matrix(3, 3) == [[0, 1, 2, 3]]


def test_hankel_evaluate_rank_examples():
    assert rank(hankel_evaluate(4, 1, [1] * 5)) == 1
    # z = (1,0,0,0,1) has rank 2: a sum of two fourth powers
    m = hankel_evaluate(4, 2, [1, 0, 0, 0, 1])
    assert rank(m) == 2
    m5 = hankel_evaluate(4, 2, [1, 0, 0, 0, 1], PrimeField(5))
    assert rank(m5) == 2


def test_betti_examples():
    assert eagon_northcott_betti(4, 1).entries() == [
        (0, 0, 1), (1, 2, 6), (2, 3, 8), (3, 4, 3)]
    assert eagon_northcott_betti(6, 2).entries() == [
        (0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6)]
    # n = 2k: a single determinantal hypersurface
    assert eagon_northcott_betti(6, 3).entries() == [(0, 0, 1), (1, 4, 1)]
    # n = 2k - 1: the secant variety fills space, no equations
    assert eagon_northcott_betti(5, 3).entries() == [(0, 0, 1)]


def test_hilbert_series_examples():
    assert hilbert_series(4, 2).numerator == [1, 1, 1]
    assert hilbert_series(4, 2).denom_power == 4
    hs = hilbert_series(6, 2)
    assert hs.numerator == [1, 3, 6]
    assert hs.numerator_at_one() == 10 == comb(5, 2)
    for n in range(3, 9):
        assert hilbert_series(n, 1).numerator == [1, n - 1]


def test_hilbert_series_cross_check_full_range():
    for k in range(1, 5):
        for n in range(2 * k - 1, 11):
            hilbert_series(n, k, cross_check=True)


def test_series_expansion():
    hs = HilbertSeries([1, 1, 1], 4)
    # B_d for the (4,2) case: coefficient of t^d
    assert hs.coefficients(5) == [1, 5, 15, 34, 65]


def test_secant_invariants_examples():
    inv = secant_invariants(6, 2)
    assert (inv.dim_proj, inv.degree, inv.class_group_order,
            inv.ulrich_index) == (3, 10, 4, 3)
    assert secant_invariants(3, 2).degree == 1
    for n in range(3, 9):
        i = secant_invariants(n, 1)
        assert i.degree == n and i.class_group_order == n


def test_degree_identity():
    for k in range(1, 5):
        for n in range(2 * k - 1, 11):
            inv = secant_invariants(n, k)
            assert inv.degree == comb(n - k + 1, k)


def test_projective_dimension_equals_codim():
    for k in range(1, 5):
        for n in range(2 * k - 1, 11):
            betti = eagon_northcott_betti(n, k)
            assert betti.projective_dimension() == n + 1 - 2 * k


def test_mcm_examples():
    d = mcm_data(6, 2, 3)
    assert d["mu"] == comb(5, 2) == 10 == d["degree"]
    assert d["ulrich"]
    assert mcm_data(6, 2, 0)["mu"] == 1
    dual = mcm_data(6, 2, -1)
    assert [t["dim"] for t in dual["resolution"]] == \
        [t["dim"] for t in d["resolution"]]
    assert [t["shift"] for t in d["resolution"]] == [0, -1, -2, -3]


def test_mcm_range_errors():
    with pytest.raises(ParameterError):
        mcm_data(6, 2, 4)
    with pytest.raises(ParameterError):
        mcm_data(6, 2, -2)


def test_mcm_mu_grid():
    for k in range(1, 4):
        for n in range(2 * k - 1, 9):
            for r in range(n - 2 * k + 2):
                assert mcm_data(n, k, r)["mu"] == comb(r + k, k)


def test_generalized_hermite_examples():
    rep = generalized_hermite_check(6, 2, 1)
    assert rep["dim_left"] == 30 == rep["dim_right"] and rep["pass"]
    rep = generalized_hermite_check(8, 3, 2)
    assert rep["dim_left"] == rep["dim_right"] == 60 and rep["pass"]
    # i = 0 reduces to the character identity behind Hermite reciprocity
    for n in range(3, 9):
        for k in range(1, (n + 1) // 2 + 1):
            assert generalized_hermite_check(n, k, 0)["pass"]


def test_generalized_hermite_full_sweep():
    for k in range(1, 4):
        for n in range(2 * k - 1, 9):
            for i in range(n - k + 2):
                assert generalized_hermite_check(n, k, i)["pass"], (n, k, i)


def test_betti_table_type():
    t = BettiTable({(0, 0): 1, (1, 2): 0})
    assert t.entries() == [(0, 0, 1)]
    assert t.beta(1, 2) == 0
    assert t.euler_numerator(3) == [1, 0, 0, 0]

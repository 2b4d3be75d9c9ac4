from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import pytest

from sl2calc.errors import ParameterError
from sl2calc.fields import PrimeField
from sl2calc.graded import blocked_rank
from sl2calc.hermite import (freeness_certificate, generator_multiplication,
                             hermite_alpha, hermite_beta, hermite_gamma,
                             star_action, star_apply, theta_determinant_unit,
                             verify_compatibilities)
from sl2calc.matrices import ExactMatrix, compose
from sl2calc.maps import index_map
from sl2calc.spaces import D, Sym, Wedge, basis, character, d_u, dim, sym_u


def paper_star_wedge(m, d):
    """Independent oracle: increment k entries of a strictly decreasing tuple.

    x^(k) (x) (x^d1 ^ ... ^ x^dm) -> sum over k-subsets S of the tuple with
    +1 on S, dropping any result with a repeated exponent.
    """
    dom_wedge = basis(Wedge(m, sym_u(d)))
    cod_pos = index_map(Wedge(m, sym_u(d + 1)))
    entries = {}
    for k in range(m + 1):
        for w_ord, tup in enumerate(dom_wedge):
            col = k * len(dom_wedge) + w_ord
            for subset in combinations(range(m), k):
                out = tuple(tup[i] + (1 if i in subset else 0)
                            for i in range(m))
                if any(out[i] <= out[i + 1] for i in range(m - 1)):
                    continue
                key = (cod_pos[out], col)
                entries[key] = entries.get(key, 0) + 1
    return entries


def brute_star_divided(m, d):
    """Independent oracle from raw symmetric-tensor expansion."""
    dom = basis(D(m, sym_u(d)))
    cod_pos = index_map(D(m, sym_u(d + 1)))
    entries = {}
    for k in range(m + 1):
        for mu_ord, mu in enumerate(dom):
            col = k * len(dom) + mu_ord
            acc = {}
            for subset in combinations(range(m), k):
                for tau in set(permutations(mu)):
                    tup = tuple(tau[i] + (1 if i in subset else 0)
                                for i in range(m))
                    acc[tup] = acc.get(tup, 0) + 1
            for tup, c in acc.items():
                if tup == tuple(sorted(tup, reverse=True)):
                    entries[(cod_pos[tup], col)] = c
    return entries


@pytest.mark.parametrize("m,d", [(1, 3), (2, 1), (2, 3), (3, 2), (3, 4)])
def test_star_wedge_matches_paper_formula(m, d):
    mat = star_action(m, d, "wedge")
    expected = {k: Fraction(v) for k, v in paper_star_wedge(m, d).items()}
    assert mat.entries == expected


@pytest.mark.parametrize("m,d", [(1, 2), (2, 2), (3, 1), (3, 3)])
def test_star_divided_matches_tensor_expansion(m, d):
    mat = star_action(m, d, "divided")
    expected = {k: Fraction(v) for k, v in brute_star_divided(m, d).items()}
    assert mat.entries == expected


def test_star_m1_is_multiplication():
    from sl2calc.maps import mult_by_u

    for d in range(0, 5):
        for mode in ("wedge", "divided"):
            assert star_action(1, d, mode).entries == mult_by_u(d).entries


def test_star_example_m2_d1():
    # x^(1) acting on x ^ 1 gives x^2 ^ 1 (the x ^ x cross term cancels);
    # x^(2) gives x^2 ^ x
    cols = star_action(2, 1, "wedge").column_dicts()
    cod = basis(Wedge(2, sym_u(2)))
    ((r1, v1),) = cols[1].items()
    ((r2, v2),) = cols[2].items()
    assert cod[r1] == (2, 0) and v1 == 1
    assert cod[r2] == (2, 1) and v2 == 1


def test_star_commutes():
    # acting by e_k then e_l equals acting by e_l then e_k
    for m in range(1, 5):
        for mode in ("wedge", "divided"):
            d = m - 1 if mode == "wedge" else 0
            space = (Wedge(m, sym_u(d)) if mode == "wedge"
                     else D(m, sym_u(d)))
            for w in range(dim(space)):
                vec = {w: 1}
                for k in range(m + 1):
                    for l in range(k):
                        one = star_apply(m, d + 1, mode, l,
                                         star_apply(m, d, mode, k, vec))
                        two = star_apply(m, d + 1, mode, k,
                                         star_apply(m, d, mode, l, vec))
                        assert one == two, (m, mode, k, l)


def test_beta_2_2_is_permutation_like():
    b = hermite_beta(2, 2)
    assert b.entries == ExactMatrix.identity(3).entries


def test_alpha_2_3_matches_expansion():
    # e0 -> x ^ 1, e1 -> x^2 ^ 1, e2 -> x^2 ^ x: the identity in basis order
    a = hermite_alpha(2, 3)
    assert a.entries == ExactMatrix.identity(3).entries


def test_gamma_trivial_case():
    g = hermite_gamma(3, 3)
    assert (g.rows, g.cols) == (1, 1)
    assert g[(0, 0)] == 1


def test_freeness_example_m2_d1():
    theta = generator_multiplication(2, 2, "wedge")
    # e_k maps the generator to x^1^x^0, x^2^x^0, x^2^x^1 in order
    assert theta.entries == ExactMatrix.identity(3).entries


def test_freeness_dimension_precondition():
    for m in range(1, 6):
        for d in range(0, 7):
            assert comb(m + d, d) == dim(Wedge(m, sym_u(m - 1 + d))), (m, d)


def test_freeness_certificates():
    for m in (1, 2, 3):
        for mode in ("wedge", "divided"):
            assert freeness_certificate(m, 4, mode)["all_free"]


def test_triangle_and_square_small_grid():
    for m, n in [(1, 1), (1, 4), (2, 2), (2, 4), (3, 4)]:
        rep = verify_compatibilities(m, n)
        assert rep["pass"], rep


def test_compatibilities_mod_p():
    for p in (2, 3, 5, 7):
        rep = verify_compatibilities(3, 5, char=p)
        assert rep["pass"], (p, rep)


def test_characters_match_for_all_three_maps():
    for m, n in [(2, 3), (3, 6)]:
        for matf in (hermite_alpha, hermite_beta, hermite_gamma):
            mat = matf(m, n)
            assert character(mat.domain) == character(mat.codomain)


def test_theta_determinant_is_unit():
    # determinant +-1 makes beta and gamma integral
    for m in range(1, 4):
        for n in range(m, 7):
            assert theta_determinant_unit(m, n, "wedge") == 1
            assert theta_determinant_unit(m, max(n - m, 0) + m - 1,
                                          "wedge") == 1


def test_beta_reduction_commutes_with_mod_p_construction():
    for p in (2, 3, 5, 7):
        for m, n in [(2, 4), (3, 5)]:
            native = hermite_beta(m, n, char=p)
            reduced = hermite_beta(m, n).change_field(PrimeField(p))
            assert native == reduced


def test_alpha_entries_are_integers():
    for m, n in [(2, 4), (3, 6), (4, 6)]:
        a = hermite_alpha(m, n)
        assert all(v.denominator == 1 for v in a.entries.values())


def test_parameter_errors():
    with pytest.raises(ParameterError):
        hermite_alpha(0, 3)
    with pytest.raises(ParameterError):
        hermite_beta(3, 1)
    with pytest.raises(ParameterError):
        star_action(3, 1, "wedge")
    with pytest.raises(ParameterError):
        star_action(2, 1, "symmetric")

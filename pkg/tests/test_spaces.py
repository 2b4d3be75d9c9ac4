import pytest

from sl2calc.errors import ParameterError
from sl2calc.spaces import (CharPoly, D, Sym, Tensor, Trivial, U, Wedge,
                            basis, character, d_u, describe, dim, sym_u,
                            weights)


def test_sym_u_enumeration_is_exponent_order():
    assert basis(sym_u(2)) == ((0, 0), (1, 0), (1, 1))
    assert dim(sym_u(5)) == 6
    assert weights(sym_u(3)) == (-3, -1, 1, 3)


def test_wedge_enumeration_matches_documented_order():
    assert basis(Wedge(2, sym_u(2))) == ((1, 0), (2, 0), (2, 1))
    assert dim(Wedge(2, sym_u(2))) == 3


def test_divided_square_of_line():
    assert basis(D(2, sym_u(1))) == ((0, 0), (1, 0), (1, 1))


def test_wedge_arity_bound():
    with pytest.raises(ParameterError):
        dim(Wedge(4, sym_u(2)))


def test_tensor_row_major():
    t = Tensor(U(), sym_u(1))
    assert basis(t) == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert dim(t) == 4


def test_dim_equals_basis_length_and_character_at_one():
    spaces = [U(), Trivial(), sym_u(4), d_u(3), Wedge(2, sym_u(3)),
              Sym(2, d_u(2)), Tensor(sym_u(2), d_u(1)),
              D(2, Sym(2, U())), Wedge(3, Tensor(U(), U()))]
    for s in spaces:
        assert dim(s) == len(basis(s)) == len(weights(s))
        assert character(s).at_one() == dim(s)


def test_character_of_u():
    assert character(U()).coeffs == {1: 1, -1: 1}


def test_character_hermite_shadow_example():
    left = character(Wedge(2, sym_u(3)))
    assert left.coeffs == {4: 1, 2: 1, 0: 2, -2: 1, -4: 1}
    assert left == character(Sym(2, d_u(2)))


def test_character_identity_full_grid():
    # Wedge^m(Sym^n U) and Sym^(n-m+1)(D^m U) share characters, 1<=m<=n<=8
    for m in range(1, 9):
        for n in range(m, 9):
            assert (character(Wedge(m, sym_u(n)))
                    == character(Sym(n - m + 1, d_u(m)))), (m, n)


def test_characters_palindromic():
    for s in [sym_u(5), d_u(4), Wedge(3, sym_u(5)), Sym(3, d_u(2)),
              Tensor(sym_u(2), sym_u(3)), D(2, Sym(3, U()))]:
        assert character(s).is_palindromic()


def test_char_poly_arithmetic():
    a = CharPoly({1: 1, -1: 1})
    assert (a * a).coeffs == {2: 1, 0: 2, -2: 1}
    assert (a - a).coeffs == {}
    assert (a * a).dominates(CharPoly({0: 2}))
    assert not CharPoly({0: 1}).dominates(a)


def test_describe():
    assert describe(Wedge(2, sym_u(3))) == "Wedge^2(Sym^3(U))"
    assert describe(Tensor(d_u(2), U())) == "D^2(U) @ U"

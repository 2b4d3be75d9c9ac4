"""Formal SL(2) representation spaces with canonical enumerated bases.

A space is a functor tree over the 2-dimensional standard space U with basis
{1, x} (inhomogeneous convention: x^j stands for x^j y^(d-j)).  Constructors:

* ``U()``            -- the standard space, basis [1, x], weights [-1, +1]
* ``Trivial()``      -- the ground field, one basis vector of weight 0
* ``Sym(n, X)``      -- n-th symmetric power, basis = multisets of X-ordinals
* ``D(n, X)``        -- n-th divided power, same index set as Sym(n, X)
* ``Wedge(n, X)``    -- n-th exterior power, strictly decreasing tuples
* ``Tensor(X, Y)``   -- pairs, row-major ordinals

Basis indices are tuples of ordinals into the inner space's enumeration.
Multiset/wedge tuples are stored weakly/strictly decreasing and enumerated
in ascending lexicographic order; this total order is part of the package's
output contract (see CONVENTIONS.md).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import ParameterError


class SpaceExpr:
    __slots__ = ()


@dataclass(frozen=True)
class U(SpaceExpr):
    pass


@dataclass(frozen=True)
class Trivial(SpaceExpr):
    pass


@dataclass(frozen=True)
class Sym(SpaceExpr):
    n: int
    inner: SpaceExpr


@dataclass(frozen=True)
class D(SpaceExpr):
    n: int
    inner: SpaceExpr


@dataclass(frozen=True)
class Wedge(SpaceExpr):
    n: int
    inner: SpaceExpr


@dataclass(frozen=True)
class Tensor(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


def sym_u(n):
    return Sym(n, U())


def d_u(n):
    return D(n, U())


def _check(space):
    if isinstance(space, (Sym, D, Wedge)):
        if space.n < 0:
            raise ParameterError(f"negative functor arity in {space}")
        if isinstance(space, Wedge) and space.n > dim(space.inner):
            raise ParameterError(
                f"Wedge({space.n}, .) needs arity <= dim = {dim(space.inner)}")


@lru_cache(maxsize=None)
def dim(space: SpaceExpr) -> int:
    _check(space)
    if isinstance(space, U):
        return 2
    if isinstance(space, Trivial):
        return 1
    if isinstance(space, (Sym, D)):
        return comb(dim(space.inner) + space.n - 1, space.n)
    if isinstance(space, Wedge):
        return comb(dim(space.inner), space.n)
    if isinstance(space, Tensor):
        return dim(space.left) * dim(space.right)
    raise ParameterError(f"unknown space {space!r}")


def _dec_tuples(bound, n, strict):
    """Decreasing tuples with entries in [0, bound), ascending lex order."""
    if n == 0:
        yield ()
        return
    start = n - 1 if strict else 0
    for head in range(start, bound):
        for tail in _dec_tuples(head if strict else head + 1, n - 1, strict):
            yield (head,) + tail


@lru_cache(maxsize=None)
def basis(space: SpaceExpr) -> tuple:
    """Canonical ordered basis; element i of the tuple has ordinal i."""
    _check(space)
    if isinstance(space, U):
        return (0, 1)
    if isinstance(space, Trivial):
        return ((),)
    if isinstance(space, (Sym, D)):
        return tuple(_dec_tuples(dim(space.inner), space.n, strict=False))
    if isinstance(space, Wedge):
        return tuple(_dec_tuples(dim(space.inner), space.n, strict=True))
    if isinstance(space, Tensor):
        dr = dim(space.right)
        return tuple((i, j) for i in range(dim(space.left)) for j in range(dr))
    raise ParameterError(f"unknown space {space!r}")


@lru_cache(maxsize=None)
def weights(space: SpaceExpr) -> tuple:
    """SL(2) weight of each basis vector, aligned with ``basis(space)``."""
    if isinstance(space, U):
        return (-1, 1)
    if isinstance(space, Trivial):
        return (0,)
    if isinstance(space, (Sym, D, Wedge)):
        inner = weights(space.inner)
        return tuple(sum(inner[t] for t in idx) for idx in basis(space))
    if isinstance(space, Tensor):
        wl = weights(space.left)
        wr = weights(space.right)
        return tuple(wl[i] + wr[j] for (i, j) in basis(space))
    raise ParameterError(f"unknown space {space!r}")


def ordinal(space: SpaceExpr, index) -> int:
    """Position of a basis index in the canonical enumeration."""
    if isinstance(space, Tensor):
        i, j = index
        return i * dim(space.right) + j
    return basis(space).index(index)


def describe(space: SpaceExpr) -> str:
    if isinstance(space, U):
        return "U"
    if isinstance(space, Trivial):
        return "k"
    if isinstance(space, Sym):
        return f"Sym^{space.n}({describe(space.inner)})"
    if isinstance(space, D):
        return f"D^{space.n}({describe(space.inner)})"
    if isinstance(space, Wedge):
        return f"Wedge^{space.n}({describe(space.inner)})"
    if isinstance(space, Tensor):
        return f"{describe(space.left)} @ {describe(space.right)}"
    return repr(space)


# -- characters ------------------------------------------------------------


class CharPoly:
    """Laurent polynomial in q with integer coefficients (the SL(2) character)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def of_space(cls, space: SpaceExpr) -> "CharPoly":
        out = {}
        for w in weights(space):
            out[w] = out.get(w, 0) + 1
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return CharPoly(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return CharPoly(out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return CharPoly(out)

    def is_palindromic(self):
        return all(self.coeffs.get(-e, 0) == c for e, c in self.coeffs.items())

    def dominates(self, other):
        """Coefficientwise >= (character containment)."""
        return all(self.coeffs.get(e, 0) >= c for e, c in other.coeffs.items())

    def at_one(self):
        return sum(self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "CharPoly(0)"
        terms = " + ".join(f"{c}*q^{e}" for e, c in sorted(self.coeffs.items(),
                                                           reverse=True))
        return f"CharPoly({terms})"


def character(space: SpaceExpr) -> CharPoly:
    return CharPoly.of_space(space)

"""Structural SL(2)-equivariant maps as explicit integer matrices.

Everything here is built in the canonical bases of ``spaces``: polynomial
multiplication, divided-power comultiplication and contraction, the shuffle
product on divided powers, functor powers of a map (Sym^m f, D^m f, Wedge^m f),
and the canonical embeddings

    D^m A (x) Wedge^m B -> Wedge^m(A (x) B)
    D^m A (x) D^m B     -> D^m(A (x) B)

realized through symmetric/skew tensors.  All coefficients are integers, so
every matrix specializes to every prime field by reduction.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb

from .errors import ParameterError
from .fields import QQ
from .matrices import ExactMatrix
from .spaces import (D, Sym, Tensor, Trivial, U, Wedge, basis, d_u, dim,
                     sym_u)


@lru_cache(maxsize=None)
def index_map(space):
    return {idx: pos for pos, idx in enumerate(basis(space))}


def _arrangements(t):
    """Distinct orderings of a multiset tuple, sorted for determinism."""
    return sorted(set(permutations(t)))


def _sort_desc_signed(t):
    """(descending tuple, permutation sign), or None on repeated entries."""
    lst = list(t)
    sign = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] < lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
            elif lst[j] == lst[j + 1]:
                return None
    return tuple(lst), sign


def _insert_sorted(mu, k):
    """Insert k into a weakly decreasing tuple."""
    out = list(mu)
    pos = 0
    while pos < len(out) and out[pos] > k:
        pos += 1
    out.insert(pos, k)
    return tuple(out)


# -- polynomial multiplication and divided-power structure maps -------------


@lru_cache(maxsize=None)
def mult_map(a: int, b: int) -> ExactMatrix:
    """Sym^a U (x) Sym^b U -> Sym^(a+b) U, x^i (x) x^j -> x^(i+j)."""
    if a < 0 or b < 0:
        raise ParameterError("mult_map needs nonnegative degrees")
    dom = Tensor(sym_u(a), sym_u(b))
    cod = sym_u(a + b)
    entries = {}
    for col, (i, j) in enumerate(basis(dom)):
        entries[(i + j, col)] = 1
    return ExactMatrix(QQ, a + b + 1, dim(dom), entries, domain=dom, codomain=cod)


@lru_cache(maxsize=None)
def mult_by_u(d: int) -> ExactMatrix:
    """U (x) Sym^d U -> Sym^(d+1) U (left factor the atom U itself)."""
    dom = Tensor(U(), sym_u(d))
    cod = sym_u(d + 1)
    entries = {}
    for col, (i, j) in enumerate(basis(dom)):
        entries[(i + j, col)] = 1
    return ExactMatrix(QQ, d + 2, dim(dom), entries, domain=dom, codomain=cod)


@lru_cache(maxsize=None)
def comult_map(a: int, b: int, c: int) -> ExactMatrix:
    """Divided-power comultiplication D^a U -> D^b U (x) D^c U.

    x^(k) maps to the sum of x^(k1) (x) x^(k2) over k1 + k2 = k, with all
    coefficients 1 (the divided-power convention carries no binomials).
    """
    if b < 0 or c < 0 or b + c != a:
        raise ParameterError(f"comultiplication needs b + c = a, got {b}+{c}!={a}")

    dom = d_u(a)
    cod = Tensor(d_u(b), d_u(c))
    entries = {}
    for k in range(a + 1):
        for k1 in range(max(0, k - c), min(b, k) + 1):
            k2 = k - k1
            entries[(k1 * (c + 1) + k2, k)] = 1
    return ExactMatrix(QQ, dim(cod), a + 1, entries, domain=dom, codomain=cod)


@lru_cache(maxsize=None)
def pairing(d: int) -> ExactMatrix:
    """Perfect pairing D^d U (x) Sym^d U -> k, <x^(k), x^j> = delta_kj."""

    dom = Tensor(d_u(d), sym_u(d))
    entries = {}
    for col, (k, j) in enumerate(basis(dom)):
        if k == j:
            entries[(0, col)] = 1
    return ExactMatrix(QQ, 1, dim(dom), entries, domain=dom, codomain=Trivial())


@lru_cache(maxsize=None)
def contraction(d: int, r: int) -> ExactMatrix:
    """Contraction D^d U (x) Sym^r U -> D^(d-r) U.

    Comultiply D^d -> D^(d-r) (x) D^r and pair the D^r factor against
    Sym^r; on bases x^(k) (x) x^j goes to x^(k-j) when 0 <= k-j <= d-r.
    """
    if not d >= r >= 0:
        raise ParameterError(f"contraction needs d >= r >= 0, got {d}, {r}")

    dom = Tensor(d_u(d), sym_u(r))
    cod = d_u(d - r)
    entries = {}
    for col, (k, j) in enumerate(basis(dom)):
        if 0 <= k - j <= d - r:
            entries[(k - j, col)] = 1
    return ExactMatrix(QQ, d - r + 1, dim(dom), entries, domain=dom, codomain=cod)


def contract_by(n: int, k: int, g) -> ExactMatrix:
    """Matrix of <., g>: D^n U -> D^(n-k) U for g = sum g_l x^l in Sym^k U."""
    if not n >= k >= 0:
        raise ParameterError(f"contract_by needs n >= k >= 0, got {n}, {k}")
    if len(g) != k + 1:
        raise ParameterError(f"g needs {k + 1} coefficients")

    entries = {}
    for s in range(n + 1):
        for l, gl in enumerate(g):
            if gl and 0 <= s - l <= n - k:
                entries[(s - l, s)] = entries.get((s - l, s), 0) + gl
    return ExactMatrix(QQ, n - k + 1, n + 1, entries,
                       domain=d_u(n), codomain=d_u(n - k))


@lru_cache(maxsize=None)
def divided_mult(a: int, b: int) -> ExactMatrix:
    """Shuffle product D^a U (x) D^b U -> D^(a+b) U.

    On symmetric tensors this is the sum over (a,b)-shuffles; on the basis
    x^(j) (x) x^(l) it gives C(j+l, j) * C(a+b-j-l, a-j) * x^(j+l).
    """
    if a < 0 or b < 0:
        raise ParameterError("divided_mult needs nonnegative degrees")

    dom = Tensor(d_u(a), d_u(b))
    entries = {}
    for col, (j, l) in enumerate(basis(dom)):
        entries[(j + l, col)] = comb(j + l, j) * comb(a + b - j - l, a - j)
    return ExactMatrix(QQ, a + b + 1, dim(dom), entries,
                       domain=dom, codomain=d_u(a + b))


def poly_mult(w, n: int) -> ExactMatrix:
    """Multiplication W (x) Sym^n W -> Sym^(n+1) W for any space W.

    Monomial basis convention: the product of a variable and a monomial is
    the merged monomial with coefficient 1.
    """
    dom = Tensor(w, Sym(n, w))
    cod = Sym(n + 1, w)
    cod_pos = index_map(cod)
    sym_basis = basis(Sym(n, w))
    entries = {}
    for col, (v, mi) in enumerate(basis(dom)):
        entries[(cod_pos[_insert_sorted(sym_basis[mi], v)], col)] = 1
    return ExactMatrix(QQ, dim(cod), dim(dom), entries, domain=dom, codomain=cod)


# -- functor powers of a map -------------------------------------------------


def _labeled_columns(f: ExactMatrix):
    if f.domain is None or f.codomain is None:
        raise ParameterError("functor powers need a labeled matrix")
    return f.column_dicts()


def wedge_power(f: ExactMatrix, m: int) -> ExactMatrix:
    """Wedge^m f : Wedge^m(dom f) -> Wedge^m(cod f)."""
    cols = _labeled_columns(f)
    dom = Wedge(m, f.domain)
    cod = Wedge(m, f.codomain)
    cod_pos = index_map(cod)
    entries = {}
    for col, tup in enumerate(basis(dom)):
        supports = [sorted(cols[t].items()) for t in tup]
        for choice in product(*supports):
            signed = _sort_desc_signed(tuple(c for c, _ in choice))
            if signed is None:
                continue
            target, sign = signed
            coeff = sign
            for _, v in choice:
                coeff *= v
            key = (cod_pos[target], col)
            acc = entries.get(key, 0) + coeff
            if acc:
                entries[key] = acc
            else:
                entries.pop(key, None)
    return ExactMatrix(f.field, dim(cod), dim(dom), entries,
                       domain=dom, codomain=cod)


def divided_power(f: ExactMatrix, m: int) -> ExactMatrix:
    """D^m f : D^m(dom f) -> D^m(cod f) on symmetric tensors."""
    cols = _labeled_columns(f)
    dom = D(m, f.domain)
    cod = D(m, f.codomain)
    cod_pos = index_map(cod)
    entries = {}
    for col, mu in enumerate(basis(dom)):
        for tau in _arrangements(mu):
            supports = [sorted(cols[t].items()) for t in tau]
            for choice in product(*supports):
                target = tuple(c for c, _ in choice)
                if any(target[i] < target[i + 1] for i in range(len(target) - 1)):
                    continue
                coeff = 1
                for _, v in choice:
                    coeff *= v
                key = (cod_pos[target], col)
                acc = entries.get(key, 0) + coeff
                if acc:
                    entries[key] = acc
                else:
                    entries.pop(key, None)
    return ExactMatrix(f.field, dim(cod), dim(dom), entries,
                       domain=dom, codomain=cod)


def sym_power(f: ExactMatrix, m: int) -> ExactMatrix:
    """Sym^m f : Sym^m(dom f) -> Sym^m(cod f) on monomials."""
    cols = _labeled_columns(f)
    dom = Sym(m, f.domain)
    cod = Sym(m, f.codomain)
    cod_pos = index_map(cod)
    entries = {}
    for col, mu in enumerate(basis(dom)):
        supports = [sorted(cols[t].items()) for t in mu]
        for choice in product(*supports):
            target = tuple(sorted((c for c, _ in choice), reverse=True))
            coeff = 1
            for _, v in choice:
                coeff *= v
            key = (cod_pos[target], col)
            acc = entries.get(key, 0) + coeff
            if acc:
                entries[key] = acc
            else:
                entries.pop(key, None)
    return ExactMatrix(f.field, dim(cod), dim(dom), entries,
                       domain=dom, codomain=cod)


# -- canonical embeddings ----------------------------------------------------


@lru_cache(maxsize=None)
def canonical_embed(m: int, a_space, b_space, mode: str) -> ExactMatrix:
    """The canonical map out of D^m A (x) F^m B for F = Wedge or D.

    In wedge mode this sends an invariant tensor times a skew tensor to the
    skew tensor of pairs; columns are indexed by D^m A (x) Wedge^m B, rows by
    Wedge^m(A (x) B) in canonical order, and only canonical (sorted)
    representatives are read off, so no division ever happens.
    """
    if mode not in ("wedge", "divided"):
        raise ParameterError(f"unknown canonical_embed mode {mode!r}")
    ab = Tensor(a_space, b_space)
    dim_b = dim(b_space)
    if mode == "wedge":
        if m > dim_b:
            raise ParameterError(f"wedge arity {m} exceeds dim B = {dim_b}")
        dom = Tensor(D(m, a_space), Wedge(m, b_space))
        cod = Wedge(m, ab)
    else:
        dom = Tensor(D(m, a_space), D(m, b_space))
        cod = D(m, ab)
    cod_pos = index_map(cod)
    left_basis = basis(dom.left)
    right_basis = basis(dom.right)
    entries = {}
    for col, (mi, ti) in enumerate(basis(dom)):
        mu = left_basis[mi]
        tb = right_basis[ti]
        if mode == "wedge":
            for tau in _arrangements(mu):
                for sigma in permutations(range(m)):
                    pair = tuple(tau[i] * dim_b + tb[sigma[i]] for i in range(m))
                    if any(pair[i] <= pair[i + 1] for i in range(m - 1)):
                        continue
                    sign = _perm_sign(sigma)
                    key = (cod_pos[pair], col)
                    acc = entries.get(key, 0) + sign
                    if acc:
                        entries[key] = acc
                    else:
                        entries.pop(key, None)
        else:
            for tau in _arrangements(mu):
                for ups in _arrangements(tb):
                    pair = tuple(tau[i] * dim_b + ups[i] for i in range(m))
                    if any(pair[i] < pair[i + 1] for i in range(m - 1)):
                        continue
                    key = (cod_pos[pair], col)
                    entries[key] = entries.get(key, 0) + 1
    return ExactMatrix(QQ, dim(cod), dim(dom), entries, domain=dom, codomain=cod)


def _perm_sign(sigma):
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign

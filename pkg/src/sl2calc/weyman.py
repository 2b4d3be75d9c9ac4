"""Three-term Koszul subcomplexes whose middle homology drives Green-type checks.

Single-graded: over S~ = Sym(D^(i+1) U), the complex

    D^(2i) U (x) S~(-2) --> D^(i+1) U (x) S~(-1) --> S~

is a subcomplex of the Koszul complex of the maximal ideal; the second map
is the Koszul differential and the first is induced by an equivariant
inclusion D^(2i) U -> D^(i+1) U (x) D^(i+1) U.  Comultiplying
D^(2i) -> D^i (x) D^i, inserting the invariant 1(x)x - x(x)1 and multiplying
each factor yields (i+1) times a primitive integer matrix (the transpose of
the one-variable Wronskian pairing); the primitive form is used so the map
survives reduction mod every prime.  Degree-slice middle homology dimensions
are the Weyman module values; their vanishing at the genus slices is the
Green surjectivity statement.

Bigraded: over S~ = Sym(D^(u+1) U + D^(v+1) U), with first layer either
D^(u+v+2) U alone (transparent policy; comultiplication into both middle
blocks) or together with a D^(u+v) U summand (full policy; invariant
insertion).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import ParameterError
from .fields import QQ, field_of_characteristic
from .graded import blocked_rank, weighted_rank
from .maps import _insert_sorted, index_map, poly_mult
from .matrices import ExactMatrix, compose
from .spaces import D, Sym, Tensor, basis, d_u, dim, sym_u, weights


@lru_cache(maxsize=None)
def cg_inclusion_raw(i: int) -> ExactMatrix:
    """D^(2i) U -> D^(i+1) U (x) D^(i+1) U via comultiplication and 1(x)x - x(x)1.

    Comultiply D^(2i) -> D^i (x) D^i, tensor the invariant into the two
    slots, and close with the shuffle product D^i U (x) U -> D^(i+1) U on
    each factor.  The whole matrix is divisible by i+1.
    """
    if i < 0:
        raise ParameterError("cg_inclusion needs i >= 0")
    cod = Tensor(d_u(i + 1), d_u(i + 1))
    entries = {}

    def add(a, b, s, coeff):
        key = (a * (i + 2) + b, s)
        acc = entries.get(key, 0) + coeff
        if acc:
            entries[key] = acc
        else:
            entries.pop(key, None)

    for s in range(2 * i + 1):
        for s1 in range(max(0, s - i), min(i, s) + 1):
            s2 = s - s1
            # e_j * x = (j+1) e_(j+1) and e_j * 1 = (i+1-j) e_j in D^(i+1) U
            add(s1, s2 + 1, s, (i + 1 - s1) * (s2 + 1))
            add(s1 + 1, s2, s, -(s1 + 1) * (i + 1 - s2))
    return ExactMatrix(QQ, (i + 2) ** 2, 2 * i + 1, entries,
                       domain=d_u(2 * i), codomain=cod)


@lru_cache(maxsize=None)
def cg_inclusion(i: int) -> ExactMatrix:
    """Primitive integral form: e_s -> sum over a+b=s+1 of (b - a) e_a (x) e_b.

    Equals cg_inclusion_raw / (i+1); this is the transpose of the
    inhomogeneous Wronskian pairing f (x) g -> f'g - fg' on Sym^(i+1) U.
    """
    cod = Tensor(d_u(i + 1), d_u(i + 1))
    entries = {}
    for s in range(2 * i + 1):
        for a in range(0, i + 2):
            b = s + 1 - a
            if 0 <= b <= i + 1 and b != a:
                entries[(a * (i + 2) + b, s)] = b - a
    return ExactMatrix(QQ, (i + 2) ** 2, 2 * i + 1, entries,
                       domain=d_u(2 * i), codomain=cod)


def _stilde(i, e):
    """Degree-e piece of S~ = Sym(D^(i+1) U)."""
    return Sym(e, d_u(i + 1))


def weyman_complex(i: int, d: int, char: int = 0):
    """The degree-d slice of the 3-term complex, as a pair of matrices.

    d1: D^(2i) U (x) S~_(d-2) -> D^(i+1) U (x) S~_(d-1)
    d2: D^(i+1) U (x) S~_(d-1) -> S~_d      (Koszul multiplication)

    The composite is zero in every characteristic.
    """
    if i < 0 or d < 0:
        raise ParameterError("weyman_complex needs i, d >= 0")
    w = d_u(i + 1)
    nvars = i + 2
    if d >= 1:
        d2 = poly_mult(w, d - 1)
        mid_space = Tensor(w, _stilde(i, d - 1))
    else:
        d2 = ExactMatrix.zero(dim(_stilde(i, 0)), 0, QQ)
        mid_space = None
    if d >= 2:
        dom = Tensor(d_u(2 * i), _stilde(i, d - 2))
        s_low = basis(_stilde(i, d - 2))
        mid_pos = index_map(_stilde(i, d - 1))
        dim_mid_s = dim(_stilde(i, d - 1))
        incl_cols = cg_inclusion(i).column_dicts()
        entries = {}
        for col, (s, mu_i) in enumerate(basis(dom)):
            mu = s_low[mu_i]
            for pair, coeff in incl_cols[s].items():
                a, b = divmod(pair, nvars)
                row = a * dim_mid_s + mid_pos[_insert_sorted(mu, b)]
                key = (row, col)
                acc = entries.get(key, 0) + int(coeff)
                if acc:
                    entries[key] = acc
                else:
                    entries.pop(key, None)
        d1 = ExactMatrix(QQ, dim(mid_space), dim(dom), entries,
                         domain=dom, codomain=mid_space)
    else:
        d1 = ExactMatrix.zero(dim(mid_space) if mid_space else 0, 0, QQ)
    if char:
        field = field_of_characteristic(char)
        d1 = d1.change_field(field)
        d2 = d2.change_field(field)
    return d1, d2


def weyman_dim(i: int, d: int, char: int = 0) -> int:
    """Middle homology dimension of the degree-d slice."""
    d1, d2 = weyman_complex(i, d, char)
    if d2.cols == 0:
        return 0
    h = d2.cols - blocked_rank(d2) - blocked_rank(d1)
    if h < 0:
        raise AssertionError(f"negative homology at (i={i}, d={d}, char={char})")
    return h


def green_check(g: int, char: int = 0) -> dict:
    """Generic-Green surjectivity checks at genus g over the given field.

    For each i <= (g-1)/2 the comparison map out of the genus-g Tor group is
    surjective iff the Weyman slice whose first layer sits in S~-degree
    g-2-i vanishes.  Reports per-i homology together with the closed-form
    source and target dimensions of the comparison map.
    """
    if g < 3:
        raise ParameterError("green_check needs g >= 3")
    per_i = []
    for i in range(0, (g - 1) // 2 + 1):
        hom = weyman_dim(i, g - i, char)
        per_i.append({
            "i": i,
            "source_dim": (2 * i + 1) * comb(g - 1, i + 1),
            "target_dim": comb(g, i) * (g - 1 - i),
            "homology_dim": hom,
            "surjective": hom == 0,
        })
    return {
        "g": g,
        "char": char,
        "per_i": per_i,
        "pass": all(row["surjective"] for row in per_i),
    }


# -- bigraded complexes ------------------------------------------------------


def _sym_basis(e, m):
    """Basis of Sym^e(D^m U), or [] for negative e."""
    return list(basis(Sym(e, d_u(m)))) if e >= 0 else []


def _msweight(mu, m):
    """Weight of a multiset of D^m U ordinals."""
    return sum(2 * k - m for k in mu)


def bigraded_weyman(u: int, v: int, d1: int, d2: int, char: int = 0,
                    q_policy: str = "transparent") -> dict:
    """Middle homology of the bigraded 3-term complex at bidegree (d1, d2).

    Layers over S~ = Sym(D^(u+1) U + D^(v+1) U):

      Q (x) S~(-1,-1) --> D^(u+1) U (x) S~(-1,0) + D^(v+1) U (x) S~(0,-1) --> S~

    with Q = D^(u+v+2) U under the transparent policy and an extra plain
    D^(u+v) U summand under the full policy.  The bidegree labels the final
    layer S~_(d1,d2).  The composite is asserted to vanish; the homology is
    computed weight block by weight block.
    """
    if u < 0 or v < 0 or d1 < 0 or d2 < 0:
        raise ParameterError("bigraded_weyman needs u, v, d1, d2 >= 0")
    if q_policy not in ("transparent", "full"):
        raise ParameterError(f"unknown q_policy {q_policy!r}")
    mu1, mv1 = u + 1, v + 1

    sym1_top = _sym_basis(d1, mu1)
    sym2_top = _sym_basis(d2, mv1)
    sym1_lo = _sym_basis(d1 - 1, mu1)
    sym2_lo = _sym_basis(d2 - 1, mv1)
    pos1_top = {m: a for a, m in enumerate(sym1_top)}
    pos2_top = {m: a for a, m in enumerate(sym2_top)}
    pos1_lo = {m: a for a, m in enumerate(sym1_lo)}
    pos2_lo = {m: a for a, m in enumerate(sym2_lo)}

    dim_top = len(sym1_top) * len(sym2_top)
    dim_a = (u + 2) * len(sym1_lo) * len(sym2_top)
    dim_b = (v + 2) * len(sym1_top) * len(sym2_lo)
    dim_mid = dim_a + dim_b

    def ord_top(p1, p2):
        return p1 * len(sym2_top) + p2

    def ord_mid_a(q, m1, m2):
        return (q * len(sym1_lo) + m1) * len(sym2_top) + m2

    def ord_mid_b(q, m1, m2):
        return dim_a + (q * len(sym1_top) + m1) * len(sym2_lo) + m2

    # d2: Koszul multiplication from both middle blocks.
    d2_entries = {}
    for q in range(u + 2):
        for m1, mono1 in enumerate(sym1_lo):
            p1 = pos1_top[_insert_sorted(mono1, q)]
            for m2 in range(len(sym2_top)):
                d2_entries[(ord_top(p1, m2), ord_mid_a(q, m1, m2))] = 1
    for q in range(v + 2):
        for m2, mono2 in enumerate(sym2_lo):
            p2 = pos2_top[_insert_sorted(mono2, q)]
            for m1 in range(len(sym1_top)):
                d2_entries[(ord_top(m1, p2), ord_mid_b(q, m1, m2))] = 1
    d2_mat = ExactMatrix(QQ, dim_top, dim_mid, d2_entries)

    # d1: from Q (x) S~_(d1-1, d2-1).
    summands = [("main", u + v + 2)]
    if q_policy == "full":
        summands.append(("extra", u + v))
    dim_low = len(sym1_lo) * len(sym2_lo)
    d1_entries = {}
    d1_col_weights = []
    col = 0
    for name, qdeg in (summands if dim_low else []):
        for s in range(qdeg + 1):
            for m1, mono1 in enumerate(sym1_lo):
                for m2, mono2 in enumerate(sym2_lo):

                    def add(row, coeff):
                        key = (row, col)
                        acc = d1_entries.get(key, 0) + coeff
                        if acc:
                            d1_entries[key] = acc
                        else:
                            d1_entries.pop(key, None)

                    if name == "main":
                        # comult into (D^(u+1), D^(v+1)): block A, sign +
                        for a in range(max(0, s - mv1), min(mu1, s) + 1):
                            b = s - a
                            add(ord_mid_a(a, m1,
                                          pos2_top[_insert_sorted(mono2, b)]), 1)
                        # comult into (D^(v+1), D^(u+1)): block B, sign -
                        for b in range(max(0, s - mu1), min(mv1, s) + 1):
                            a = s - b
                            add(ord_mid_b(b,
                                          pos1_top[_insert_sorted(mono1, a)],
                                          m2), -1)
                    else:
                        # invariant insertion on the D^(u+v) summand
                        for s1 in range(max(0, s - v), min(u, s) + 1):
                            s2 = s - s1
                            add(ord_mid_a(s1, m1,
                                          pos2_top[_insert_sorted(mono2, s2 + 1)]),
                                (u + 1 - s1) * (s2 + 1))
                            add(ord_mid_a(s1 + 1, m1,
                                          pos2_top[_insert_sorted(mono2, s2)]),
                                -(s1 + 1) * (v + 1 - s2))
                        for s2 in range(max(0, s - u), min(v, s) + 1):
                            s1 = s - s2
                            add(ord_mid_b(s2,
                                          pos1_top[_insert_sorted(mono1, s1 + 1)],
                                          m2),
                                (v + 1 - s2) * (s1 + 1))
                            add(ord_mid_b(s2 + 1,
                                          pos1_top[_insert_sorted(mono1, s1)],
                                          m2),
                                -(s2 + 1) * (u + 1 - s1))
                    d1_col_weights.append(
                        2 * s - qdeg + _msweight(mono1, mu1)
                        + _msweight(mono2, mv1))
                    col += 1
    d1_mat = ExactMatrix(QQ, dim_mid, col, d1_entries)

    if char:
        field = field_of_characteristic(char)
        d1_mat = d1_mat.change_field(field)
        d2_mat = d2_mat.change_field(field)
    if not compose(d2_mat, d1_mat).is_zero():
        raise AssertionError("bigraded complex composite is not zero")

    mid_w = ([weights(d_u(mu1))[q] + _msweight(sym1_lo[m1], mu1)
              + _msweight(sym2_top[m2], mv1)
              for q in range(u + 2)
              for m1 in range(len(sym1_lo))
              for m2 in range(len(sym2_top))]
             + [weights(d_u(mv1))[q] + _msweight(sym1_top[m1], mu1)
                + _msweight(sym2_lo[m2], mv1)
                for q in range(v + 2)
                for m1 in range(len(sym1_top))
                for m2 in range(len(sym2_lo))])
    top_w = [_msweight(sym1_top[p1], mu1) + _msweight(sym2_top[p2], mv1)
             for p1 in range(len(sym1_top)) for p2 in range(len(sym2_top))]
    rank_out = weighted_rank(d2_mat, top_w, mid_w)
    rank_in = weighted_rank(d1_mat, mid_w, d1_col_weights)
    hom = dim_mid - rank_out - rank_in
    if hom < 0:
        raise AssertionError("negative bigraded homology")
    return {
        "u": u, "v": v, "d1": d1, "d2": d2, "char": char,
        "q_policy": q_policy,
        "dims": [col, dim_mid, dim_top],
        "homology_dim": hom,
    }



def bigraded_target_dimension(g: int, a: int, u: int, v: int) -> int:
    """Closed-form dimension of the canonical-module Tor component.

    dim Sym^(g-3-i) U (x) Wedge^u(Sym^(a-1) U) (x) Wedge^v(Sym^(g-2-a) U)
    with i = u + v; zero once any factor dies.
    """
    i = u + v
    if g - 2 - i <= 0:
        return 0
    return (g - 2 - i) * comb(a, u) * comb(g - 1 - a, v)


def tor_profiles(g: int, a: int | None = None) -> dict:
    """Closed-form Tor dimension lists for the tangential variety or a scroll.

    Tangential (a omitted): source_i = (2i+1) C(g-1, i+1),
    target_i = C(g, i) (g-1-i), i = 0..g-2.
    Scroll: source_i = i C(g-1, i+1), canonical target_i = (g-2-i) C(g-1, i).
    """
    if g < 3:
        raise ParameterError("tor_profiles needs g >= 3")
    if a is None:
        return {
            "g": g,
            "kind": "tangential",
            "source": [(2 * i + 1) * comb(g - 1, i + 1) for i in range(g - 1)],
            "target": [comb(g, i) * (g - 1 - i) for i in range(g - 1)],
        }
    if not 1 <= a <= (g - 1) // 2:
        raise ParameterError("scroll parameter needs 1 <= a <= (g-1)/2")
    return {
        "g": g,
        "a": a,
        "kind": "scroll",
        "source": [i * comb(g - 1, i + 1) for i in range(g - 1)],
        "target": [(g - 2 - i) * comb(g - 1, i) for i in range(g - 1)],
    }

"""Cohomology tables for exterior and symmetric powers of Schwarzenberger bundles.

The rank-m bundle E^m_d on P^m is presented by

    0 -> Sym^d U(-1) -> Sym^(d+m) U (x) O -> E^m_d -> 0.

Exterior powers push forward from a product of projective spaces, so all of
their cohomology reduces to line-bundle tables and Kunneth sums; h^0 of
twisted symmetric powers is computed from the Koszul-type resolution of
Sym^N E by explicit matrices, in twist windows where a single cohomology row
survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ParameterError, UnsupportedTwistWindowError
from .fields import QQ
from .graded import weighted_rank
from .matrices import ExactMatrix
from .maps import _insert_sorted, index_map
from .spaces import D, Sym, Tensor, Wedge, basis, d_u, dim, sym_u, weights


def line_cohomology(k: int, d: int):
    """(h^0, h^k) of O(d) on P^k; intermediate cohomology vanishes."""
    if k < 1:
        raise ParameterError("line_cohomology needs k >= 1")
    h0 = comb(d + k, k) if d >= 0 else 0
    hk = comb(-d - 1, k) if d <= -k - 1 else 0
    return (h0, hk)


def _factor_cohomology(p: int, e: int):
    """{j: h^j} of O(e) on P^p; on the point P^0 every twist is trivial."""
    if p == 0:
        return {0: 1}
    h0, hp = line_cohomology(p, e)
    out = {}
    if h0:
        out[0] = h0
    if hp:
        out[p] = hp
    return out


def product_cohomology(p: int, q: int, a: int, b: int) -> dict:
    """Kunneth: {j: h^j} of O(a, b) on P^p x P^q."""
    if p < 0 or q < 0:
        raise ParameterError("product_cohomology needs p, q >= 0")
    left = _factor_cohomology(p, a)
    right = _factor_cohomology(q, b)
    out = {}
    for j1, h1 in left.items():
        for j2, h2 in right.items():
            out[j1 + j2] = out.get(j1 + j2, 0) + h1 * h2
    return out


@dataclass
class CohTable:
    """Cohomology of Wedge^i E^m_d (t): map j -> h^j, zeros omitted."""

    m: int
    d: int
    i: int
    twist: int
    values: dict = field(default_factory=dict)

    def h(self, j):
        return self.values.get(j, 0)

    def nonzero_rows(self):
        return sorted(j for j, v in self.values.items() if v)

    def euler(self):
        return sum((-1) ** j * v for j, v in self.values.items())


def wedge_E_cohomology(m: int, d: int, i: int, t: int) -> CohTable:
    """Cohomology table of Wedge^i E^m_d twisted by O(t).

    Uses Wedge^i E^m_d = mu_* O(d+m-i+1, 0) on P^i x P^(m-i) together with
    the projection formula mu^* O(1) = O(1, 1).
    """
    if not 0 <= i <= m or m < 1 or d < 0:
        raise ParameterError(f"wedge_E_cohomology range: m={m}, d={d}, i={i}")
    values = product_cohomology(i, m - i, d + m - i + 1 + t, t)
    return CohTable(m, d, i, t, {j: v for j, v in values.items() if v})


def root_sequence(m: int, d: int, i: int):
    """Closed-form supernatural roots of Wedge^i E^m_d (strictly decreasing)."""
    if not 0 <= i <= m or m < 1 or d < 0:
        raise ParameterError(f"root_sequence range: m={m}, d={d}, i={i}")
    first = [-(j + 1) for j in range(m - i)]
    second = [-(m - i + d + 2 + j) for j in range(i)]
    return first + second


def supernatural_check(m: int, d: int, i: int, window=None) -> dict:
    """Verify the supernatural shape over a twist window.

    Exactly one nonzero cohomology row per twist, except at the closed-form
    roots where the whole table vanishes.
    """
    if window is None:
        window = range(-(m + d + 2), 3)
    roots = set(root_sequence(m, d, i))
    rows = {}
    ok = True
    for t in window:
        table = wedge_E_cohomology(m, d, i, t)
        nz = table.nonzero_rows()
        rows[t] = {j: table.values[j] for j in nz}
        if t in roots:
            ok = ok and not nz
        else:
            ok = ok and len(nz) == 1
    return {"m": m, "d": d, "i": i,
            "roots": root_sequence(m, d, i),
            "window": [min(window), max(window)],
            "tables": rows, "supernatural": ok}


def euler_polynomial(m: int, d: int, i: int):
    """chi(Wedge^i E^m_d (t)) as an exact polynomial in t, coefficients c[0..m].

    Interpolated from the tables at m+1 sample twists via Newton divided
    differences; its roots must be exactly the root sequence.
    """
    points = list(range(m + 1))
    values = [Fraction(wedge_E_cohomology(m, d, i, t).euler()) for t in points]
    diffs = list(values)
    newton = [diffs[0]]
    for order in range(1, m + 1):
        diffs = [(diffs[a + 1] - diffs[a]) / (points[a + order] - points[a])
                 for a in range(len(diffs) - 1)]
        newton.append(diffs[0])
    poly = [Fraction(0)] * (m + 1)
    acc = [Fraction(1)]
    for order, coef in enumerate(newton):
        for e, c in enumerate(acc):
            poly[e] += coef * c
        if order < m:
            root = Fraction(points[order])
            nxt = [Fraction(0)] * (len(acc) + 1)
            for e, c in enumerate(acc):
                nxt[e + 1] += c
                nxt[e] -= root * c
            acc = nxt
    return poly


def poly_value(poly, t):
    out = Fraction(0)
    for c in reversed(poly):
        out = out * t + c
    return out


# -- h^0 of twisted symmetric powers ----------------------------------------


def h0_symN_E_twist(k: int, n: int, N: int, t: int) -> int:
    """h^0(P^k, Sym^N E (x) O(t)) for E = E^k_(n-k), by hypercohomology.

    The Koszul-type resolution of Sym^N E has terms

        G_i = Wedge^i(Sym^(n-k) U) (x) Sym^(N-i)(Sym^n U) (x) O(t - i),
        i = 0 .. min(N, n-k+1).

    For t <= -1 only the top cohomology row survives and h^0 is the middle
    homology of that row at position k; for t >= 0 with imax <= t + k only
    the H^0 row survives and h^0 is the cokernel dimension at position 0.
    Mixed windows are rejected.
    """
    if not (n >= k >= 1) or N < 0:
        raise ParameterError(f"h0_symN_E_twist range: k={k}, n={n}, N={N}")
    imax = min(N, n - k + 1)
    if t <= -1:
        out_m = _row_map(k, n, N, t, pos=k, h_row=k)
        in_m = _row_map(k, n, N, t, pos=k + 1, h_row=k)
        kernel = out_m.cols - weighted_rank(
            out_m, _term_weights(k, n, N, t, k - 1, k),
            _term_weights(k, n, N, t, k, k))
        return kernel - weighted_rank(
            in_m, _term_weights(k, n, N, t, k, k),
            _term_weights(k, n, N, t, k + 1, k))
    if imax <= t + k:
        m1 = _row_map(k, n, N, t, pos=1, h_row=0)
        return m1.rows - weighted_rank(
            m1, _term_weights(k, n, N, t, 0, 0),
            _term_weights(k, n, N, t, 1, 0))
    raise UnsupportedTwistWindowError(
        f"both cohomology rows survive for k={k}, n={n}, N={N}, t={t}")


def _resolution_parts(k, n, N, i):
    """(wedge space, sym space) of G_i, or None when the term vanishes."""
    if i < 0 or i > min(N, n - k + 1):
        return None
    return Wedge(i, sym_u(n - k)), Sym(N - i, sym_u(n))


def _term_space(k, n, N, t, i, h_row):
    """Cohomology of G_i(t) on the requested row, as a labeled space."""
    parts = _resolution_parts(k, n, N, i)
    if parts is None:
        return None
    w, s = parts
    e = t - i
    if h_row == 0:
        if e < 0:
            return None
        return Tensor(Tensor(w, s), Sym(e, d_u(k)))
    if e > -k - 1:
        return None
    return Tensor(Tensor(w, s), D(-e - k - 1, sym_u(k)))


def _term_weights(k, n, N, t, i, h_row):
    """Weight vector of the cohomology term of G_i(t), in basis order.

    The z and x variables are function-space coordinates while the y
    variables pair dually against them, so the coefficient factor carries
    the opposite sign: -(2l-k) per y_l on the H^0 row, +(2l-k) per
    Sym^k-basis element of the divided-power multiset on the H^k row.
    """
    space = _term_space(k, n, N, t, i, h_row)
    if space is None:
        return []
    wspace, sspace = _resolution_parts(k, n, N, i)
    wedge_w = weights(wspace)
    sym_w = weights(sspace)
    out = []
    for wv in wedge_w:
        for sv in sym_w:
            for cidx in basis(space.right):
                coeff_w = sum(2 * l - k for l in cidx)
                if h_row == 0:
                    coeff_w = -coeff_w
                out.append(wv + sv + coeff_w)
    return out


def _row_map(k, n, N, t, pos, h_row) -> ExactMatrix:
    """Differential G_pos -> G_(pos-1) restricted to one cohomology row.

    The sheaf differential contracts the wedge factor against
    phi(x_j) = sum_l z_(j+l) (x) y_l; on the H^0 row each y_l multiplies
    Sym(D^k U), on the H^k row it removes one l from the multiset basis of
    D(Sym^k U) (the dual-basis contraction).
    """
    dom = _term_space(k, n, N, t, pos, h_row)
    cod = _term_space(k, n, N, t, pos - 1, h_row)
    rows = dim(cod) if cod is not None else 0
    if dom is None:
        return ExactMatrix.zero(rows, 0, QQ)
    if cod is None:
        return ExactMatrix.zero(0, dim(dom), QQ)
    wd, sd = _resolution_parts(k, n, N, pos)
    wc, sc = _resolution_parts(k, n, N, pos - 1)
    wedge_basis_d = basis(wd)
    wedge_pos_c = index_map(wc)
    sym_basis_d = basis(sd)
    sym_pos_c = index_map(sc)
    coeff_basis_d = basis(dom.right)
    coeff_pos_c = index_map(cod.right)
    dim_sd = dim(sd)
    dim_sc, dim_coeff_c = dim(sc), dim(cod.right)
    entries = {}
    for col, (pair_i, coeff_i) in enumerate(basis(dom)):
        wi, si = divmod(pair_i, dim_sd)
        tup = wedge_basis_d[wi]
        mono = sym_basis_d[si]
        cidx = coeff_basis_d[coeff_i]
        for drop_pos, j in enumerate(tup):
            sign = (-1) ** drop_pos
            rest = tup[:drop_pos] + tup[drop_pos + 1:]
            wc_ord = wedge_pos_c[rest]
            for l in range(k + 1):
                new_mono = _insert_sorted(mono, j + l)
                sc_ord = sym_pos_c[new_mono]
                if h_row == 0:
                    new_c = _insert_sorted(cidx, l)
                else:
                    if l not in cidx:
                        continue
                    lst = list(cidx)
                    lst.remove(l)
                    new_c = tuple(lst)
                cc_ord = coeff_pos_c[new_c]
                row = (wc_ord * dim_sc + sc_ord) * dim_coeff_c + cc_ord
                key = (row, col)
                acc = entries.get(key, 0) + sign
                if acc:
                    entries[key] = acc
                else:
                    entries.pop(key, None)
    return ExactMatrix(QQ, rows, dim(dom), entries, domain=dom, codomain=cod)

"""Hankel matrices and closed-form invariants of secant varieties.

For the k-th secant variety of the rational normal curve of degree n, the
homogeneous coordinate ring B is cut out by the maximal minors of the
(n-k+1) x (k+1) Hankel matrix with entry (i, j) = z_(i+j); its minimal free
resolution is the Eagon-Northcott complex, which gives every Betti number,
the Hilbert series, and the numeric invariants in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ParameterError
from .fields import QQ
from .matrices import ExactMatrix
from .spaces import D, Sym, Wedge, character, d_u, sym_u


@dataclass
class BettiTable:
    """Graded Betti numbers: map (homological index i, internal degree j) -> count."""

    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = {key: v for key, v in self.values.items() if v}

    def beta(self, i, j):
        return self.values.get((i, j), 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.values == other.values

    def entries(self):
        return sorted((i, j, v) for (i, j), v in self.values.items())

    def projective_dimension(self):
        return max((i for (i, _), v in self.values.items() if v), default=0)

    def euler_numerator(self, tmax):
        """Coefficients of sum_i (-1)^i sum_j beta_(i,j) t^j up to degree tmax."""
        out = [0] * (tmax + 1)
        for (i, j), v in self.values.items():
            if j <= tmax:
                out[j] += (-1) ** i * v
        return out


@dataclass
class HilbertSeries:
    """Rational function numerator(t) / (1 - t)^denom_power, lowest terms."""

    numerator: list
    denom_power: int

    def coefficients(self, count):
        """First ``count`` coefficients of the power-series expansion."""
        e = self.denom_power
        out = []
        for j in range(count):
            s = 0
            for i, c in enumerate(self.numerator):
                if i <= j:
                    s += c * comb(j - i + e - 1, e - 1)
            out.append(s)
        return out

    def numerator_at_one(self):
        return sum(self.numerator)


def _binom(n, r):
    """C(n, r) with C(n, 0) = 1 for every n and 0 for r > n >= 0 or r < 0."""
    if r == 0:
        return 1
    if r < 0 or n < 0:
        return 0
    return comb(n, r)


def hankel_matrix(n: int, k: int):
    """The (n-k+1) x (k+1) symbolic Hankel array; entry (i, j) = index i + j."""
    if not 0 <= k <= n:
        raise ParameterError(f"hankel_matrix needs 0 <= k <= n, got {n}, {k}")
    return [[i + j for j in range(k + 1)] for i in range(n - k + 1)]


def hankel_evaluate(n: int, k: int, z, fieldctx=QQ) -> ExactMatrix:
    """Evaluate the Hankel array at a point z in field^(n+1)."""
    z = list(z)
    if len(z) != n + 1:
        raise ParameterError(f"point needs {n + 1} coordinates")
    entries = {}
    for i in range(n - k + 1):
        for j in range(k + 1):
            entries[(i, j)] = z[i + j]
    return ExactMatrix(fieldctx, n - k + 1, k + 1, entries)


def _check_secant_range(n, k):
    if not (1 <= k and 2 * k <= n + 1):
        raise ParameterError(
            f"need 1 <= k <= (n+1)/2 for secant invariants, got n={n}, k={k}")


def eagon_northcott_betti(n: int, k: int) -> BettiTable:
    """beta_(0,0) = 1 and beta_(i, i+k) = C(i-1+k, k) C(n-k+1, i+k).

    The second binomial vanishes past i = n-2k+1, so the edge cases n = 2k-1
    (no equations) and n = 2k (one determinantal hypersurface) come out of
    the same formula.
    """
    _check_secant_range(n, k)
    values = {(0, 0): 1}
    for i in range(1, n - 2 * k + 2):
        values[(i, i + k)] = comb(i - 1 + k, k) * comb(n - k + 1, i + k)
    return BettiTable(values)


def hilbert_series(n: int, k: int, cross_check: bool = False) -> HilbertSeries:
    """HS_B(t) = (sum_i C(n-2k+i, i) t^i) / (1-t)^(2k) in lowest terms.

    With cross_check, also expands the Betti-table Euler characteristic over
    (1-t)^(n+1) and asserts agreement of the first 2n coefficients.
    """
    _check_secant_range(n, k)
    numer = [_binom(n - 2 * k + i, i) for i in range(k + 1)]
    series = HilbertSeries(numer, 2 * k)
    if cross_check:
        count = 2 * n
        betti = eagon_northcott_betti(n, k)
        f = betti.euler_numerator(count)
        via_betti = HilbertSeries(f, n + 1).coefficients(count)
        if via_betti != series.coefficients(count):
            raise AssertionError(
                f"Hilbert series mismatch for (n,k)=({n},{k})")
    return series


@dataclass
class SecantInvariants:
    n: int
    k: int
    dim_proj: int
    degree: int
    codim: int
    class_group_order: int
    ulrich_index: int


def secant_invariants(n: int, k: int) -> SecantInvariants:
    """Dimension, degree, codimension, class group order, Ulrich index."""
    _check_secant_range(n, k)
    degree = comb(n - k + 1, k)
    monomial_count = sum(_binom(n - 2 * k + i, i) for i in range(k + 1))
    if degree != monomial_count:
        raise AssertionError("degree identity violated")
    return SecantInvariants(
        n=n, k=k,
        dim_proj=2 * k - 1,
        degree=degree,
        codim=n + 1 - 2 * k,
        class_group_order=n - 2 * k + 2,
        ulrich_index=n - 2 * k + 1,
    )


def mcm_data(n: int, k: int, r: int) -> dict:
    """Generator count and resolution shape of the rank-one MCM module M_r.

    r runs over 0 .. n-2k+1; r = -1 is admitted as the dual presentation of
    the Ulrich module.  Gradings are normalized so generators sit in
    degree 0.  For the two self-dual extremes the full term dimensions are
    returned.
    """
    _check_secant_range(n, k)
    top = n - 2 * k + 1
    if not (r == -1 or 0 <= r <= top):
        raise ParameterError(
            f"M_r classified only for r in -1, 0..{top}; got r={r}")
    degree = comb(n - k + 1, k)
    if r == -1:
        mu = comb(n - k + 1, k)
        generators = f"Wedge^{k}(Sym^{n - k}(U))"
    else:
        mu = comb(r + k, k)
        generators = f"Sym^{r}(D^{k}(U))"
    out = {
        "n": n, "k": k, "r": r,
        "mu": mu,
        "degree": degree,
        "ulrich": mu == degree,
        "generators": generators,
    }
    if r == top:
        out["resolution"] = [
            {"i": i, "dim": comb(n - k + 1, i) * comb(n - k + 1 - i, k),
             "shift": -i}
            for i in range(top + 1)
        ]
    elif r == -1:
        out["resolution"] = [
            {"i": i, "dim": comb(n - k + 1, i + k) * comb(i + k, k),
             "shift": -i}
            for i in range(top + 1)
        ]
    return out


def generalized_hermite_check(n: int, k: int, i: int) -> dict:
    """Dimension and character equality of the resolution-step isomorphism

        Wedge^i(Sym^(n-k) U) (x) Sym^(n-2k+1-i)(D^k U)
          ~ Wedge^(i+k)(Sym^(n-k) U) (x) D^i(Sym^k U).
    """
    _check_secant_range(n, k)
    if not 0 <= i <= n - k + 1:
        raise ParameterError(f"need 0 <= i <= n-k+1, got i={i}")
    e = n - 2 * k + 1 - i
    dim_left = comb(n - k + 1, i) * (comb(e + k, k) if e >= 0 else 0)
    dim_right = (comb(n - k + 1, i + k) * comb(i + k, k)
                 if i + k <= n - k + 1 else 0)
    result = {"n": n, "k": k, "i": i,
              "dim_left": dim_left, "dim_right": dim_right}
    chars_equal = True
    if dim_left and dim_right:
        left = (character(Wedge(i, sym_u(n - k)))
                * character(Sym(e, d_u(k))))
        right = (character(Wedge(i + k, sym_u(n - k)))
                 * character(D(i, sym_u(k))))
        chars_equal = left == right
    result["dims_equal"] = dim_left == dim_right
    result["characters_equal"] = chars_equal
    result["pass"] = result["dims_equal"] and chars_equal
    return result

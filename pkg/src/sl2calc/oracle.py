"""Brute-force Koszul-homology oracle for the Hankel Betti numbers.

Independent of the Eagon-Northcott closed form: the graded pieces of
B = Sym(V)/I(minors) are realized concretely as quotients by the spans of
(k+1)-minors of the Hankel matrix times monomials (the one interesting map
of the hypercohomology spectral sequence), and

    Tor_i(k, B)_j  =  middle homology of
        Wedge^(i+1) V (x) B_(j-i-1) -> Wedge^i V (x) B_(j-i)
                                    -> Wedge^(i-1) V (x) B_(j-i+1)

with V = Sym^n U.  Everything is weight-graded, so ranks are computed one
SL(2) weight block at a time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .errors import ParameterError, ResourceGuardError
from .fields import QQ
from .hankel import BettiTable
from .maps import _insert_sorted, _perm_sign, index_map
from .matrices import ExactMatrix, _integerize, _rank_int_rows, rref
from .spaces import Sym, Wedge, basis, dim, sym_u, weights

MAX_VARS = 9   # dim S = n + 1
MAX_K = 3


def _guard(n, k):
    if n + 1 > MAX_VARS or k > MAX_K:
        raise ResourceGuardError(
            f"oracle guard: need n+1 <= {MAX_VARS} and k <= {MAX_K}, "
            f"got n={n}, k={k} (sizes: dim S = {n + 1})")


def hankel_minors(n: int, k: int):
    """All (k+1)-minors of the Hankel array, as {monomial: coeff} dicts."""
    out = []
    for rows in combinations(range(n - k + 1), k + 1):
        minor = {}
        for sigma in permutations(range(k + 1)):
            sign = _perm_sign(sigma)
            mono = tuple(sorted((rows[a] + sigma[a] for a in range(k + 1)),
                                reverse=True))
            minor[mono] = minor.get(mono, 0) + sign
        out.append({m: c for m, c in minor.items() if c})
    return out


class HankelQuotient:
    """Graded pieces of B = Sym(V)/I as explicit quotient bases.

    Per degree, the ideal slice is row-reduced weight block by weight block;
    the non-pivot monomials form the standard basis, and ``reduce`` rewrites
    any monomial as a combination of standard ones.
    """

    def __init__(self, n: int, k: int):
        _guard(n, k)
        if not (1 <= k and 2 * k <= n + 1):
            raise ParameterError(f"need 1 <= k <= (n+1)/2, got n={n}, k={k}")
        self.n = n
        self.k = k
        self.minors = hankel_minors(n, k)
        self._degree_data = {}

    def _monomials(self, d):
        return basis(Sym(d, sym_u(self.n)))

    def weight(self, mono):
        return sum(2 * j - self.n for j in mono)

    def _build_degree(self, d):
        n, k = self.n, self.k
        monos = self._monomials(d)
        rewrite = {}
        if d >= k + 1 and self.minors:
            gens = []
            for minor in self.minors:
                for extra in self._monomials(d - k - 1):
                    gens.append({tuple(sorted(m + extra, reverse=True)): c
                                 for m, c in minor.items()})
            blocks = {}
            for g in gens:
                w = self.weight(next(iter(g)))
                blocks.setdefault(w, []).append(g)
            pos = {m: a for a, m in enumerate(monos)}
            for w, block_gens in sorted(blocks.items()):
                cols = sorted({m for g in block_gens for m in g}, key=pos.get)
                col_of = {m: a for a, m in enumerate(cols)}
                mat = ExactMatrix(
                    QQ, len(block_gens), len(cols),
                    {(r, col_of[m]): c
                     for r, g in enumerate(block_gens) for m, c in g.items()})
                pivot_cols, rows = rref(mat)
                for pc, row in zip(pivot_cols, rows):
                    rewrite[cols[pc]] = {
                        cols[c]: -v for c, v in row.items() if c != pc}
        standard = [m for m in monos if m not in rewrite]
        ordinal = {m: a for a, m in enumerate(standard)}
        self._degree_data[d] = (standard, ordinal, rewrite)

    def _data(self, d):
        if d not in self._degree_data:
            self._build_degree(d)
        return self._degree_data[d]

    def basis(self, d):
        """Standard monomials of B_d (empty for d < 0)."""
        if d < 0:
            return []
        return self._data(d)[0]

    def dim(self, d):
        return len(self.basis(d))

    def reduce(self, mono):
        """A degree-d monomial as {standard ordinal: coefficient}."""
        standard, ordinal, rewrite = self._data(len(mono))
        if mono in rewrite:
            return {ordinal[m]: c for m, c in rewrite[mono].items()}
        return {ordinal[mono]: Fraction(1)}

    def multiply(self, var, std_ordinal, d):
        """z_var times the std_ordinal-th standard monomial of B_d, in B_(d+1)."""
        mono = self.basis(d)[std_ordinal]
        return self.reduce(_insert_sorted(mono, var))


def _koszul_rank(ring: HankelQuotient, i: int, e: int) -> int:
    """Rank of Wedge^i V (x) B_e -> Wedge^(i-1) V (x) B_(e+1), blockwise."""
    n = ring.n
    if i < 1 or e < 0 or i > n + 1:
        return 0
    v = sym_u(n)
    wedge_dom = basis(Wedge(i, v))
    wedge_w = weights(Wedge(i, v))
    wedge_cod_pos = index_map(Wedge(i - 1, v))
    wedge_cod_w = weights(Wedge(i - 1, v))
    b_dom = ring.basis(e)
    if not b_dom or not wedge_dom:
        return 0
    dim_b_cod = ring.dim(e + 1)
    b_w = [ring.weight(m) for m in b_dom]
    b_cod_w = [ring.weight(m) for m in ring.basis(e + 1)]
    # Bucket columns by weight, build local sparse columns, eliminate.
    blocks = {}
    row_local = {}
    for ti, tup in enumerate(wedge_dom):
        for bi in range(len(b_dom)):
            w = wedge_w[ti] + b_w[bi]
            col = {}
            for drop_pos, var in enumerate(tup):
                sign = (-1) ** drop_pos
                rest = tup[:drop_pos] + tup[drop_pos + 1:]
                wc = wedge_cod_pos[rest]
                for bo, coeff in ring.multiply(var, bi, e).items():
                    if wedge_cod_w[wc] + b_cod_w[bo] != w:
                        raise AssertionError("Koszul entry crosses weights")
                    row = wc * dim_b_cod + bo
                    acc = col.get(row, Fraction(0)) + sign * coeff
                    if acc:
                        col[row] = acc
                    else:
                        col.pop(row, None)
            if not col:
                continue
            loc = row_local.setdefault(w, {})
            local_col = {}
            for row, val in col.items():
                local_col[loc.setdefault(row, len(loc))] = val
            blocks.setdefault(w, []).append(local_col)
    total = 0
    for w in sorted(blocks):
        # rows of the elimination = columns of the map; rank is symmetric
        total += _rank_int_rows([_integerize(c, QQ) for c in blocks[w]])
    return total


def tor_dimension(ring: HankelQuotient, i: int, j: int) -> int:
    """dim Tor_i(k, B)_j via the Koszul complex slice at (i, j)."""
    n = ring.n
    e = j - i
    if e < 0 or i < 0 or i > n + 1:
        return 0
    mid = dim(Wedge(i, sym_u(n))) * ring.dim(e) if i <= n + 1 else 0
    if mid == 0:
        return 0
    rank_out = _koszul_rank(ring, i, e)
    rank_in = _koszul_rank(ring, i + 1, e - 1)
    hom = mid - rank_out - rank_in
    if hom < 0:
        raise AssertionError(
            f"negative homology at (i,j)=({i},{j}): composite not zero?")
    return hom


@lru_cache(maxsize=None)
def koszul_tor_oracle(n: int, k: int, max_i: int | None = None) -> BettiTable:
    """Betti table of the Hankel ring computed by brute force.

    Covers homological indices 0..max_i (default: the full projective
    dimension n-2k+1) and internal degrees j <= i+k+1, which includes one
    degree beyond the expected support so spurious entries would be seen.
    """
    ring = HankelQuotient(n, k)
    if max_i is None:
        max_i = n - 2 * k + 1
    values = {}
    for i in range(max_i + 1):
        for j in range(i + k + 2):
            d = tor_dimension(ring, i, j)
            if d:
                values[(i, j)] = d
    return BettiTable(values)

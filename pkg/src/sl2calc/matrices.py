"""Sparse exact matrices and deterministic linear algebra over Q and F_p.

Matrices are stored as ``{(row, col): value}`` with no explicit zeros.  Rank
uses fraction-free integer elimination over Q (cross-multiplied row updates
with gcd normalization, pivots preferring unit entries) and plain elimination
over F_p.  Every routine uses a fixed pivot rule, so outputs are identical
across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import FieldMismatchError, ParameterError
from .fields import QQ, PrimeField, Rationals, check_same_field


class ExactMatrix:
    """A rows x cols sparse matrix of exact scalars.

    ``domain`` and ``codomain`` are optional space labels (see ``spaces``);
    when present they must agree with the matrix shape and they enable the
    weight-graded block routines in ``graded``.
    """

    __slots__ = ("field", "rows", "cols", "entries", "domain", "codomain")

    def __init__(self, field, rows, cols, entries, domain=None, codomain=None):
        if rows < 0 or cols < 0:
            raise ParameterError("negative matrix dimensions")
        self.field = field
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ParameterError(f"entry ({i},{j}) outside {rows}x{cols}")
            v = field.of(v)
            if v != field.zero:
                clean[(i, j)] = v
        self.entries = clean
        self.domain = domain
        self.codomain = codomain
        if domain is not None or codomain is not None:
            from .spaces import dim

            if domain is not None and dim(domain) != cols:
                raise ParameterError("cols do not match dim(domain)")
            if codomain is not None and dim(codomain) != rows:
                raise ParameterError("rows do not match dim(codomain)")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n, field=QQ, space=None):
        return cls(field, n, n, {(i, i): field.one for i in range(n)},
                   domain=space, codomain=space)

    @classmethod
    def zero(cls, rows, cols, field=QQ, domain=None, codomain=None):
        return cls(field, rows, cols, {}, domain=domain, codomain=codomain)

    @classmethod
    def from_rows(cls, dense, field=QQ, domain=None, codomain=None):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ParameterError("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(field, rows, cols, entries, domain=domain, codomain=codomain)

    @classmethod
    def from_columns(cls, columns, rows, field=QQ, domain=None, codomain=None):
        """columns: list of {row: value} dicts."""
        entries = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                entries[(i, j)] = v
        return cls(field, rows, len(columns), entries,
                   domain=domain, codomain=codomain)

    # -- basic views -------------------------------------------------------

    def __getitem__(self, key):
        return self.entries.get(key, self.field.zero)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols,
                     tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return (f"ExactMatrix({self.field}, {self.rows}x{self.cols}, "
                f"{len(self.entries)} entries)")

    def is_zero(self):
        return not self.entries

    def column_dicts(self):
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        return cols

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def to_dense(self):
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def triples(self):
        """Sorted (row, col, numerator, denominator) quadruples."""
        out = []
        for (i, j), v in sorted(self.entries.items()):
            num, den = self.field.as_pair(v)
            out.append((i, j, num, den))
        return out

    # -- arithmetic --------------------------------------------------------

    def transpose(self):
        return ExactMatrix(self.field, self.cols, self.rows,
                           {(j, i): v for (i, j), v in self.entries.items()},
                           domain=self.codomain, codomain=self.domain)

    def scale(self, c):
        c = self.field.of(c)
        return ExactMatrix(self.field, self.rows, self.cols,
                           {k: self.field.mul(v, c) for k, v in self.entries.items()},
                           domain=self.domain, codomain=self.codomain)

    def add(self, other):
        check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ParameterError("shape mismatch in add")
        entries = dict(self.entries)
        f = self.field
        for k, v in other.entries.items():
            entries[k] = f.add(entries.get(k, f.zero), v)
        return ExactMatrix(f, self.rows, self.cols, entries,
                           domain=self.domain, codomain=self.codomain)

    def sub(self, other):
        return self.add(other.scale(self.field.neg(self.field.one)))

    def apply(self, vec):
        """Apply to a sparse column vector {index: value}."""
        f = self.field
        out = {}
        cols = self.column_dicts()
        for j, c in vec.items():
            for i, v in cols[j].items():
                s = f.add(out.get(i, f.zero), f.mul(v, c))
                if s == f.zero:
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def change_field(self, field):
        """Re-coerce entries into another field (errors if not liftable)."""
        return ExactMatrix(field, self.rows, self.cols,
                           {k: field.of(v) for k, v in self.entries.items()},
                           domain=self.domain, codomain=self.codomain)


def compose(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Matrix product a . b (apply b first)."""
    check_same_field(a.field, b.field)
    if a.cols != b.rows:
        raise ParameterError(f"compose shape mismatch: {a.cols} vs {b.rows}")
    if a.domain is not None and b.codomain is not None and a.domain != b.codomain:
        raise ParameterError("compose label mismatch")
    f = a.field
    a_cols = a.column_dicts()
    entries = {}
    for (k, j), bv in b.entries.items():
        for i, av in a_cols[k].items():
            key = (i, j)
            s = f.add(entries.get(key, f.zero), f.mul(av, bv))
            if s == f.zero:
                entries.pop(key, None)
            else:
                entries[key] = s
    return ExactMatrix(f, a.rows, b.cols, entries,
                       domain=b.domain, codomain=a.codomain)


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product in row-major tensor basis order."""
    check_same_field(a.field, b.field)
    f = a.field
    entries = {}
    for (ia, ja), va in a.entries.items():
        for (ib, jb), vb in b.entries.items():
            entries[(ia * b.rows + ib, ja * b.cols + jb)] = f.mul(va, vb)
    domain = codomain = None
    if a.domain is not None and b.domain is not None:
        from .spaces import Tensor

        domain = Tensor(a.domain, b.domain)
    if a.codomain is not None and b.codomain is not None:
        from .spaces import Tensor

        codomain = Tensor(a.codomain, b.codomain)
    return ExactMatrix(f, a.rows * b.rows, a.cols * b.cols, entries,
                       domain=domain, codomain=codomain)


# -- elimination kernels ---------------------------------------------------


def _gcd_normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _rank_int_rows(rows):
    """Rank of integer sparse rows by fraction-free elimination.

    Row updates are cross-multiplied (r' = p_val*r - r_val*p) and re-reduced
    by their content, so all arithmetic stays in Z.  Pivots prefer unit
    entries, then sparser rows; ties break on position, which makes the
    elimination order (and hence intermediate values) reproducible.
    """
    active = [dict(r) for r in rows if r]
    rank = 0
    while active:
        pivot_col = min(min(r) for r in active)
        cand = [i for i, r in enumerate(active) if pivot_col in r]
        pi = min(cand, key=lambda i: (abs(active[i][pivot_col]) != 1,
                                      len(active[i]), i))
        prow = active.pop(pi)
        pval = prow[pivot_col]
        rank += 1
        nxt = []
        for r in active:
            rv = r.pop(pivot_col, None)
            if rv is None:
                if r:
                    nxt.append(r)
                continue
            new = {}
            for c, v in r.items():
                new[c] = pval * v
            for c, v in prow.items():
                if c == pivot_col:
                    continue
                w = new.get(c, 0) - rv * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if new:
                nxt.append(_gcd_normalize(new))
        active = nxt
    return rank


def _rank_mod_p(rows, field: PrimeField):
    p = field.p
    active = [dict(r) for r in rows if r]
    rank = 0
    while active:
        pivot_col = min(min(r) for r in active)
        cand = [i for i, r in enumerate(active) if pivot_col in r]
        pi = min(cand, key=lambda i: (len(active[i]), i))
        prow = active.pop(pi)
        pinv = pow(prow[pivot_col], -1, p)
        prow = {c: v * pinv % p for c, v in prow.items()}
        rank += 1
        nxt = []
        for r in active:
            rv = r.pop(pivot_col, None)
            if rv is None:
                if r:
                    nxt.append(r)
                continue
            for c, v in prow.items():
                if c == pivot_col:
                    continue
                w = (r.get(c, 0) - rv * v) % p
                if w:
                    r[c] = w
                else:
                    r.pop(c, None)
            if r:
                nxt.append(r)
        active = nxt
    return rank


def _integerize(row, field):
    """Scale a QQ sparse row to coprime integers."""
    if not row:
        return {}
    lcm = 1
    for v in row.values():
        den = v.denominator
        lcm = lcm // gcd(lcm, den) * den
    out = {c: int(v * lcm) for c, v in row.items()}
    return _gcd_normalize(out)


def rank(m: ExactMatrix) -> int:
    """Rank over the matrix's field; deterministic."""
    rows = m.row_dicts()
    if isinstance(m.field, Rationals):
        return _rank_int_rows([_integerize(r, m.field) for r in rows])
    return _rank_mod_p(rows, m.field)


def rref(m: ExactMatrix):
    """Reduced row echelon form.

    Returns (pivot_cols, rows) where rows are sparse dicts over the field,
    one per pivot, with a 1 in their pivot column and zeros in every other
    pivot column.
    """
    f = m.field
    active = [{c: v for c, v in r.items()} for r in m.row_dicts() if r]
    done = []
    pivot_cols = []
    while active:
        pivot_col = min(min(r) for r in active)
        cand = [i for i, r in enumerate(active) if pivot_col in r]
        pi = min(cand, key=lambda i: (len(active[i]), i))
        prow = active.pop(pi)
        pinv = f.inv(prow[pivot_col])
        prow = {c: f.mul(v, pinv) for c, v in prow.items()}
        for rows_list in (active, done):
            for idx, r in enumerate(rows_list):
                rv = r.pop(pivot_col, None)
                if rv is None:
                    continue
                for c, v in prow.items():
                    if c == pivot_col:
                        continue
                    w = f.sub(r.get(c, f.zero), f.mul(rv, v))
                    if w == f.zero:
                        r.pop(c, None)
                    else:
                        r[c] = w
        active = [r for r in active if r]
        done.append(prow)
        pivot_cols.append(pivot_col)
    order = sorted(range(len(pivot_cols)), key=lambda i: pivot_cols[i])
    return [pivot_cols[i] for i in order], [done[i] for i in order]


def kernel_basis(m: ExactMatrix):
    """Basis of the right kernel, each vector normalized to leading 1.

    Vectors are returned as dense lists (length = cols), ordered by their
    free column; size equals cols - rank(m).
    """
    f = m.field
    pivot_cols, rows = rref(m)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [f.zero] * m.cols
        vec[free] = f.one
        for pc, row in zip(pivot_cols, rows):
            c = row.get(free)
            if c is not None:
                vec[pc] = f.neg(c)
        lead = next(v for v in vec if v != f.zero)
        inv = f.inv(lead)
        basis.append([f.mul(v, inv) for v in vec])
    return basis


def kernel_dim(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a square matrix, or ParameterError when singular."""
    if m.rows != m.cols:
        raise ParameterError("inverse of a non-square matrix")
    n = m.rows
    f = m.field
    aug_entries = dict(m.entries)
    for i in range(n):
        aug_entries[(i, n + i)] = f.one
    aug = ExactMatrix(f, n, 2 * n, aug_entries)
    pivot_cols, rows = rref(aug)
    if len(pivot_cols) < n or pivot_cols[:n] != list(range(n)):
        raise ParameterError("matrix is singular")
    entries = {}
    for i, row in enumerate(rows):
        for c, v in row.items():
            if c >= n:
                entries[(i, c - n)] = v
    return ExactMatrix(f, n, n, entries, domain=m.codomain, codomain=m.domain)


def determinant(m: ExactMatrix):
    """Determinant via elimination over the field (small matrices)."""
    if m.rows != m.cols:
        raise ParameterError("determinant of a non-square matrix")
    f = m.field
    n = m.rows
    a = [row[:] for row in m.to_dense()]
    det = f.one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != f.zero:
                piv = r
                break
        if piv is None:
            return f.zero
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            det = f.neg(det)
        pval = a[col][col]
        det = f.mul(det, pval)
        pinv = f.inv(pval)
        for r in range(col + 1, n):
            if a[r][col] == f.zero:
                continue
            factor = f.mul(a[r][col], pinv)
            for c in range(col, n):
                a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]))
    return det

"""Weight-graded block decomposition of labeled matrices.

Every structural map in this package is SL(2)-equivariant, hence preserves
the weight grading of the canonical bases.  Splitting a labeled matrix into
its weight blocks turns one big elimination into many tiny ones; these
helpers do exactly that and raise if a stray entry ever crosses weights.
"""

from __future__ import annotations

from .errors import ParameterError
from .fields import Rationals
from .matrices import (ExactMatrix, _integerize, _rank_int_rows, _rank_mod_p,
                       inverse)
from .spaces import weights


def _require_labels(m: ExactMatrix):
    if m.domain is None or m.codomain is None:
        raise ParameterError("graded routines need domain/codomain labels")


def blocked_rank(m: ExactMatrix) -> int:
    """Rank computed one weight block at a time."""
    if not m.entries:
        return 0
    _require_labels(m)
    row_w = weights(m.codomain)
    col_w = weights(m.domain)
    buckets = {}
    col_local = {}
    for (i, j), v in m.entries.items():
        w = col_w[j]
        if row_w[i] != w:
            raise ParameterError(
                f"entry ({i},{j}) crosses weights {row_w[i]} != {w}")
        loc = col_local.setdefault(w, {})
        jl = loc.setdefault(j, len(loc))
        buckets.setdefault(w, {}).setdefault(i, {})[jl] = v
    total = 0
    f = m.field
    rational = isinstance(f, Rationals)
    for w in sorted(buckets):
        rows = [buckets[w][i] for i in sorted(buckets[w])]
        if rational:
            total += _rank_int_rows([_integerize(r, f) for r in rows])
        else:
            total += _rank_mod_p(rows, f)
    return total


def blocked_kernel_dim(m: ExactMatrix) -> int:
    return m.cols - blocked_rank(m)


def blocked_inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a labeled square matrix, block by weight."""
    _require_labels(m)
    if m.rows != m.cols:
        raise ParameterError("inverse of a non-square matrix")
    row_w = weights(m.codomain)
    col_w = weights(m.domain)
    by_w_rows = {}
    by_w_cols = {}
    for i, w in enumerate(row_w):
        by_w_rows.setdefault(w, []).append(i)
    for j, w in enumerate(col_w):
        by_w_cols.setdefault(w, []).append(j)
    if sorted(by_w_rows) != sorted(by_w_cols) or any(
            len(by_w_rows[w]) != len(by_w_cols[w]) for w in by_w_rows):
        raise ParameterError("weight blocks are not square; matrix is singular")
    blocks = {w: {} for w in by_w_rows}
    for (i, j), v in m.entries.items():
        w = row_w[i]
        if col_w[j] != w:
            raise ParameterError(
                f"entry ({i},{j}) crosses weights {w} != {col_w[j]}")
        blocks[w][(i, j)] = v
    entries = {}
    for w in sorted(by_w_rows):
        rloc = {i: a for a, i in enumerate(by_w_rows[w])}
        cloc = {j: a for a, j in enumerate(by_w_cols[w])}
        n = len(rloc)
        sub = ExactMatrix(m.field, n, n,
                          {(rloc[i], cloc[j]): v
                           for (i, j), v in blocks[w].items()})
        inv = inverse(sub)
        for (a, b), v in inv.entries.items():
            entries[(by_w_cols[w][a], by_w_rows[w][b])] = v
    return ExactMatrix(m.field, m.cols, m.rows, entries,
                       domain=m.codomain, codomain=m.domain)


def weighted_rank(mat: ExactMatrix, row_w, col_w) -> int:
    """Blocked rank with explicit weight vectors (for unlabeled matrices).

    Useful when a basis mixes a space with its dual, so the label-derived
    weights would not be the ones the map preserves.
    """
    if not mat.entries:
        return 0
    buckets = {}
    col_local = {}
    for (i, j), val in mat.entries.items():
        w = col_w[j]
        if row_w[i] != w:
            raise ParameterError(f"entry ({i},{j}) crosses weights")
        loc = col_local.setdefault(w, {})
        jl = loc.setdefault(j, len(loc))
        buckets.setdefault(w, {}).setdefault(i, {})[jl] = val
    total = 0
    rational = isinstance(mat.field, Rationals)
    for w in sorted(buckets):
        rows = [buckets[w][i] for i in sorted(buckets[w])]
        if rational:
            total += _rank_int_rows([_integerize(r, mat.field) for r in rows])
        else:
            total += _rank_mod_p(rows, mat.field)
    return total


def image_character(m: ExactMatrix):
    """Character of the image subspace: per-weight block ranks."""
    from .spaces import CharPoly

    _require_labels(m)
    row_w = weights(m.codomain)
    col_w = weights(m.domain)
    buckets = {}
    col_local = {}
    for (i, j), v in m.entries.items():
        w = col_w[j]
        if row_w[i] != w:
            raise ParameterError("entry crosses weights")
        loc = col_local.setdefault(w, {})
        jl = loc.setdefault(j, len(loc))
        buckets.setdefault(w, {}).setdefault(i, {})[jl] = v
    f = m.field
    rational = isinstance(f, Rationals)
    out = {}
    for w in sorted(buckets):
        rows = [buckets[w][i] for i in sorted(buckets[w])]
        if rational:
            out[w] = _rank_int_rows([_integerize(r, f) for r in rows])
        else:
            out[w] = _rank_mod_p(rows, f)
    return CharPoly(out)


def homology_dim(outgoing: ExactMatrix, incoming: ExactMatrix) -> int:
    """dim ker(outgoing) - rank(incoming) for a labeled 3-term complex slice.

    ``incoming`` maps into the middle term, ``outgoing`` maps out of it; the
    caller is responsible for the composite being zero.
    """
    if incoming.rows != outgoing.cols:
        raise ParameterError("complex terms do not line up")
    return outgoing.cols - blocked_rank(outgoing) - blocked_rank(incoming)

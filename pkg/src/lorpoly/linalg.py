"""Exact linear algebra helpers: sparse rational echelon forms, integer
Bareiss ranks, kernels, and span membership.

Two regimes are used throughout the package.  Systems coming from binomial
equalities are sparse with entries in {-1, 0, 1} and are reduced by a sparse
fraction-aware echelon form.  Span/rank questions about integer matrices
(point matrices of M-convex sets, ray restrictions) go through fraction-free
Bareiss elimination on int64 numpy arrays, which is exact as long as the
Hadamard bound of the matrix fits; a Fraction fallback covers the rest.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

SparseRow = Dict[int, Fraction]


# -- sparse echelon over the rationals ---------------------------------------

def echelon_sparse(rows: Iterable[SparseRow]) -> Dict[int, SparseRow]:
    """Reduce sparse rows to echelon form; returns {pivot column: row}.

    Each returned row is scaled to have coefficient 1 on its pivot column and
    is fully reduced against the other pivots (reduced row echelon form).
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        row = _reduce_against(dict(row), pivots)
        if not row:
            continue
        piv = min(row)
        inv = Fraction(1) / row[piv]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute the new pivot into existing rows
        for p, existing in pivots.items():
            coeff = existing.get(piv)
            if coeff:
                _add_multiple(existing, row, -coeff)
        pivots[piv] = row
    return pivots


def _reduce_against(row: SparseRow, pivots: Dict[int, SparseRow]) -> SparseRow:
    for p in sorted(set(row) & set(pivots)):
        coeff = row.get(p)
        if coeff:
            _add_multiple(row, pivots[p], -coeff)
    return row


def _add_multiple(target: SparseRow, source: SparseRow, factor: Fraction) -> None:
    for c, v in source.items():
        new = target.get(c, Fraction(0)) + factor * v
        if new:
            target[c] = new
        else:
            target.pop(c, None)


class RowSpace:
    """Incremental row space over the rationals (sparse vectors)."""

    def __init__(self):
        self.pivots: Dict[int, SparseRow] = {}

    def add(self, row: SparseRow) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        red = _reduce_against(dict(row), self.pivots)
        if not red:
            return False
        piv = min(red)
        inv = Fraction(1) / red[piv]
        red = {c: v * inv for c, v in red.items()}
        for p, existing in self.pivots.items():
            coeff = existing.get(piv)
            if coeff:
                _add_multiple(existing, red, -coeff)
        self.pivots[piv] = red
        return True

    def contains(self, row: SparseRow) -> bool:
        return not _reduce_against(dict(row), self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        """The canonical representative of row modulo this span."""
        return _reduce_against(dict(row), self.pivots)

    @property
    def dim(self) -> int:
        return len(self.pivots)


def kernel_basis(rows: Iterable[SparseRow], ncols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : row . x = 0 for all rows}, as dense Fraction tuples.

    Free coordinates are the non-pivot columns; each basis vector sets one
    free coordinate to 1 and solves for the pivots.
    """
    pivots = echelon_sparse(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, row in pivots.items():
            coeff = row.get(f)
            if coeff:
                vec[p] = -coeff
        basis.append(tuple(vec))
    return basis


def dense_to_sparse(vec: Sequence) -> SparseRow:
    return {i: Fraction(v) for i, v in enumerate(vec) if v}


# -- integer Bareiss ----------------------------------------------------------

def _hadamard_safe(mat: np.ndarray) -> bool:
    """Whether Bareiss on this integer matrix stays within int64.

    Intermediate entries are minors of the input; squared minors are bounded
    by the product of the k largest squared row norms, and equally by column
    norms (Hadamard both ways).  The elimination update multiplies two such
    entries, so minors must stay below about 2^30.
    """
    if mat.size == 0:
        return True
    max_abs = int(np.abs(mat).max())
    if max_abs == 0:
        return True
    if max_abs * max_abs * max(mat.shape) >= 2 ** 62:
        return False  # cannot even square safely; use the exact path
    k = min(mat.shape)
    bound_sq = 2 ** 200
    for axis in (0, 1):
        norms = sorted((int(x) for x in (mat * mat).sum(axis=axis)), reverse=True)
        b = 1
        for v in norms[:k]:
            b *= v
        bound_sq = min(bound_sq, b)
    return bound_sq < 2 ** 61


def _bareiss_rank(a: np.ndarray) -> int:
    """Fraction-free elimination; works on int64 and object (bigint) arrays."""
    rows, cols = a.shape
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        pivot = a[r, c]
        below = a[r + 1:, :]
        if below.size:
            a[r + 1:, :] = (below * pivot - np.outer(a[r + 1:, c], a[r, :])) // prev
        prev = pivot
        r += 1
        rank += 1
    return rank


def rank_int(mat) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    a = np.array(mat, dtype=object)
    if a.size == 0:
        return 0
    if a.ndim != 2:
        raise ValueError("rank_int expects a 2-d matrix")
    ai = None
    try:
        ai = a.astype(np.int64)
    except (OverflowError, TypeError):
        pass
    if ai is not None and _hadamard_safe(ai):
        return _bareiss_rank(ai.copy())
    return _bareiss_rank(a.copy())


def in_row_span_int(mat, vec) -> bool:
    """Whether an integer vector lies in the rational row span of an integer matrix."""
    a = np.array(mat, dtype=np.int64)
    v = np.array(vec, dtype=np.int64).reshape(1, -1)
    if a.size == 0:
        return not v.any()
    stacked = np.vstack([a, v])
    return rank_int(stacked) == rank_int(a)


# -- small dense rational solves ----------------------------------------------

def solve_dense(a: Sequence[Sequence], b: Sequence):
    """Solve a x = b over the rationals; returns None if inconsistent.

    For underdetermined systems an arbitrary solution (free vars = 0) is
    returned.  Entries may be ints or Fractions.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [[Fraction(a[i][j]) for j in range(ncols)] + [Fraction(b[i])]
           for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return x

"""Independent oracles that the test suite checks library answers against.

Everything here is written from scratch and kept deliberately naive; the
point is to disagree with the library whenever the library is wrong, so none
of this shares code with src/.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np


# -- M-convexity of point sets -------------------------------------------------

def exchange_m_convex(points):
    """Plain quadratic symmetric-exchange check on a set of lattice points."""
    pts = {tuple(int(x) for x in p) for p in points}
    if not pts:
        return False
    degs = {sum(p) for p in pts}
    if len(degs) != 1:
        return False
    for a in pts:
        for b in pts:
            for k in range(len(a)):
                if a[k] <= b[k]:
                    continue
                if not _set_exchange_ok(a, b, k, pts):
                    return False
    return True


def _set_exchange_ok(a, b, k, pts):
    for l in range(len(a)):
        if a[l] >= b[l]:
            continue
        a2 = list(a)
        a2[k] -= 1
        a2[l] += 1
        b2 = list(b)
        b2[k] += 1
        b2[l] -= 1
        if tuple(a2) in pts and tuple(b2) in pts:
            return True
    return False


# -- M-convexity of functions ---------------------------------------------------

def exchange_m_convex_function(values):
    """Murota exchange for nu: J -> Q given as a dict {point: value}.

    For every a, b in J and every k with a_k > b_k there must be an l with
    a_l < b_l such that both exchange targets stay in J and
    nu(a) + nu(b) >= nu(a - e_k + e_l) + nu(b + e_k - e_l).
    """
    pts = set(values)
    for a in pts:
        for b in pts:
            for k in range(len(a)):
                if a[k] <= b[k]:
                    continue
                bound = values[a] + values[b]
                if not _fn_exchange_ok(a, b, k, bound, values):
                    return False
    return True


def _fn_exchange_ok(a, b, k, bound, values):
    for l in range(len(a)):
        if a[l] >= b[l]:
            continue
        a2 = list(a)
        a2[k] -= 1
        a2[l] += 1
        b2 = list(b)
        b2[k] += 1
        b2[l] -= 1
        a2, b2 = tuple(a2), tuple(b2)
        if a2 in values and b2 in values:
            if values[a2] + values[b2] <= bound:
                return True
    return False


# -- split functions on uniform rank-2 matroids ----------------------------------

def rank2_split_functions(n):
    """The {A, A^c} split functions of U_{2,n}, one per 2 <= |A| <= n-2 class.

    For a part A, the split takes the value 1 on points supported inside A or
    inside the complement and 0 on the mixed points.  For n = 5 this yields
    the ten candidate ray representatives of the reduced Dressian.
    """
    points = sorted(_uniform2_points(n))
    splits = []
    seen = set()
    for size in range(2, n - 1):
        for part in combinations(range(n), size):
            key = frozenset((frozenset(part),
                             frozenset(set(range(n)) - set(part))))
            if key in seen:
                continue
            seen.add(key)
            a = set(part)
            vals = {}
            for p in points:
                supp = {i for i, x in enumerate(p) if x}
                vals[p] = 1 if (supp <= a or supp.isdisjoint(a)) else 0
            splits.append(vals)
    return splits


def _uniform2_points(n):
    out = []
    for i, j in combinations(range(n), 2):
        p = [0] * n
        p[i] = p[j] = 1
        out.append(tuple(p))
    return out


# -- exact linear algebra (solving, span membership) ------------------------------

def solve_columns(cols, target):
    """One exact solution x of sum_j x_j cols[j] = target, or None.

    Plain Gauss-Jordan over Fractions; free variables are pinned to zero.
    """
    rows = len(target)
    ncols = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def in_span(rows, vec):
    if not rows:
        return all(Fraction(x) == 0 for x in vec)
    return solve_columns([list(r) for r in rows], vec) is not None


def coordinate_rows(points, n):
    """The n functionals alpha -> alpha_i as vectors over the given points."""
    return [[Fraction(p[i]) for p in points] for i in range(n)]


def rays_equivalent(u, v, w_rows):
    """Whether u = lambda * v + (element of span w_rows) with lambda > 0."""
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    if in_span(w_rows, v):
        return in_span(w_rows, u)
    cols = [v] + [list(r) for r in w_rows]
    sol = solve_columns(cols, u)
    return sol is not None and sol[0] > 0


# -- float spectra ----------------------------------------------------------------

def eig_inertia(matrix, rtol=1e-9):
    """Sign counts of the spectrum via numpy, with a relative dead band.

    Returns (positives, negatives, zeros, margin) where margin is the
    smallest |eigenvalue| relative to the spectral radius; callers should
    ignore comparisons when the margin sits inside the dead band.
    """
    a = np.array([[float(x) for x in row] for row in matrix], dtype=float)
    w = np.linalg.eigvalsh(a)
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
    pos = int(np.sum(w > rtol * scale))
    neg = int(np.sum(w < -rtol * scale))
    margin = float(np.min(np.abs(w)) / scale) if w.size else 0.0
    return pos, neg, len(w) - pos - neg, margin


# -- polytope combinatorics --------------------------------------------------------

def euler_poincare_ok(f_vector):
    """Check the alternating sum over proper faces of a single polytope.

    ``f_vector`` lists face counts by dimension including the polytope
    itself as its last entry; for a polytope of dimension >= 1 the proper
    faces must satisfy sum (-1)^i f_i = 1 - (-1)^dim.
    """
    if len(f_vector) == 0 or f_vector[-1] != 1:
        return False
    dim = len(f_vector) - 1
    if dim == 0:
        return True
    alternating = sum((-1) ** i * c for i, c in enumerate(f_vector[:-1]))
    return alternating == 1 - (-1) ** dim


# -- random generators --------------------------------------------------------------

def random_rational_symmetric(rng, size, entry_range=12, max_den=7):
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            v = Fraction(rng.randint(-entry_range, entry_range),
                         rng.randint(1, max_den))
            m[i][j] = m[j][i] = v
    return m


def random_int_matrix(rng, d, n, low=-4, high=4):
    return [[rng.randint(low, high) for _ in range(n)] for _ in range(d)]

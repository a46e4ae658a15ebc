"""Homogeneous polynomials in normalized coordinates and the Lorentzian
membership machinery.

A polynomial is stored as f = sum_alpha c_alpha x^alpha / alpha!; with this
convention the Hessian of the second partial derivative d^alpha f has (i, j)
entry exactly c_{alpha + e_i + e_j}.  Membership asks the support to be
M-convex and every such Hessian to carry at most one positive eigenvalue.
Exact coefficients go through Sylvester congruence; float coefficients go
through an eigensolver with a relative tolerance and marginal reporting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .combinatorics import MConvexSet, is_m_convex, full_simplex

Point = Tuple[int, ...]

FLOAT_REL_TOL = 1e-9  # relative eigenvalue tolerance in float mode


# -- small exact number types -------------------------------------------------

class GoldenRational:
    """Element p + q*sqrt(5) of the real quadratic field Q(sqrt 5)."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    def __add__(self, other):
        other = _golden(other)
        return GoldenRational(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other):
        other = _golden(other)
        return GoldenRational(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        return _golden(other) - self

    def __mul__(self, other):
        other = _golden(other)
        return GoldenRational(self.p * other.p + 5 * self.q * other.q,
                              self.p * other.q + self.q * other.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _golden(other)
        norm = other.p * other.p - 5 * other.q * other.q
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        conj = GoldenRational(other.p / norm, -other.q / norm)
        return self * conj

    def __neg__(self):
        return GoldenRational(-self.p, -self.q)

    def conjugate(self):
        return GoldenRational(self.p, -self.q)

    def sign(self) -> int:
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # p and q have opposite signs; compare p^2 against 5 q^2
        if p * p > 5 * q * q:
            return (p > 0) - (p < 0)
        return (q > 0) - (q < 0)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        try:
            other = _golden(other)
        except TypeError:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __lt__(self, other):
        return (self - _golden(other)).sign() < 0

    def __le__(self, other):
        return (self - _golden(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _golden(other)).sign() > 0

    def __ge__(self, other):
        return (self - _golden(other)).sign() >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def __bool__(self):
        return bool(self.p or self.q)

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(5.0)

    def __repr__(self):
        return f"({self.p}+{self.q}*sqrt5)"


def _golden(x) -> GoldenRational:
    if isinstance(x, GoldenRational):
        return x
    if isinstance(x, Rational):
        return GoldenRational(x)
    raise TypeError(f"cannot coerce {x!r} into Q(sqrt5)")


GOLDEN_PHI = GoldenRational(Fraction(1, 2), Fraction(1, 2))


class ComplexRational:
    """Gaussian rational re + im*i; just enough for exact minors."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _complex_rat(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _complex_rat(other)
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _complex_rat(other) - self

    def __mul__(self, other):
        other = _complex_rat(other)
        return ComplexRational(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        try:
            other = _complex_rat(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return bool(self.re or self.im)

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


def _complex_rat(x) -> ComplexRational:
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, Rational):
        return ComplexRational(x)
    raise TypeError(f"cannot coerce {x!r} into Q(i)")


# -- the polynomial type ------------------------------------------------------

def factorial_of(alpha: Sequence[int]) -> int:
    out = 1
    for a in alpha:
        out *= math.factorial(a)
    return out


class Polynomial:
    """Homogeneous polynomial with normalized coefficients.

    ``coeffs`` maps exponent vectors to scalars c_alpha with the reading
    f = sum c_alpha x^alpha / alpha!.  Zero coefficients are dropped at
    construction; ``mode`` is "exact" when every coefficient is rational and
    "float" otherwise.
    """

    def __init__(self, n: int, d: int, coeffs: Dict[Point, object]):
        self.n = int(n)
        self.d = int(d)
        clean = {}
        for alpha, c in coeffs.items():
            alpha = tuple(int(x) for x in alpha)
            if len(alpha) != self.n:
                raise ValueError(f"exponent {alpha} has wrong length")
            if any(x < 0 for x in alpha) or sum(alpha) != self.d:
                raise ValueError(f"exponent {alpha} is not in Delta^{d}_{n}")
            if isinstance(c, float) and not math.isfinite(c):
                raise ValueError(f"non-finite coefficient at {alpha}")
            if c == 0:
                continue
            clean[alpha] = c
        self.coeffs = clean

    @property
    def mode(self) -> str:
        return "exact" if all(isinstance(c, Rational) for c in self.coeffs.values()) \
            else "float"

    def support(self) -> Tuple[Point, ...]:
        return tuple(sorted(self.coeffs))

    def coefficient(self, alpha) -> object:
        return self.coeffs.get(tuple(alpha), 0)

    def monomial_coefficient(self, alpha) -> object:
        """Coefficient in the plain monomial basis (c_alpha / alpha!)."""
        c = self.coefficient(alpha)
        if isinstance(c, Rational):
            return Fraction(c) / factorial_of(alpha)
        return c / factorial_of(alpha)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.n == other.n
                and self.d == other.d and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"<Polynomial n={self.n} d={self.d} |support|={len(self.coeffs)} {self.mode}>"


# -- inertia ------------------------------------------------------------------

@dataclass(frozen=True)
class Inertia:
    positives: int
    negatives: int
    zeros: int

    def as_tuple(self):
        return (self.positives, self.negatives, self.zeros)


def _is_exact_matrix(m) -> bool:
    return all(isinstance(x, (Rational, GoldenRational)) for row in m for x in row)


def hessian_inertia(matrix) -> Inertia:
    """Inertia (positives, negatives, zeros) of a symmetric matrix.

    Exact entries (rationals, Q(sqrt5)) are reduced by symmetric congruence;
    float entries go through an eigensolver with relative tolerance.
    """
    m = [list(row) for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    if _is_exact_matrix(m):
        for i in range(size):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix must be symmetric")
        return _inertia_exact(m)
    inertia, _ = _inertia_float(m)
    return inertia


def _inertia_exact(m) -> Inertia:
    """Symmetric congruence reduction; entries from any ordered field."""
    size = len(m)
    active = list(range(size))
    pos = neg = zero = 0
    while active:
        pivot = next((k for k in active if m[k][k] != 0), None)
        if pivot is None:
            # all remaining diagonal entries vanish; look for an off-diagonal
            pair = next(((i, j) for i in active for j in active
                         if i < j and m[i][j] != 0), None)
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            # congruence x_i -> x_i + x_j turns the diagonal entry into 2 m_ij
            for k in range(size):
                m[i][k] = m[i][k] + m[j][k]
            for k in range(size):
                m[k][i] = m[k][i] + m[k][j]
            pivot = i
        p = m[pivot][pivot]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        others = [k for k in active]
        for i in others:
            factor = m[i][pivot] / p
            if factor != 0:
                for j in others:
                    m[i][j] = m[i][j] - factor * m[pivot][j]
        # zero out the pivot row/column bookkeeping
        for i in others:
            m[i][pivot] = 0 * m[i][pivot]
            m[pivot][i] = 0 * m[pivot][i]
    return Inertia(pos, neg, zero)


def _inertia_float(m) -> Tuple[Inertia, float]:
    """Eigenvalue counts with relative tolerance; returns (inertia, margin).

    margin is the smallest |eigenvalue| relative to the spectral norm; values
    below FLOAT_REL_TOL were classified as zero.
    """
    a = np.array([[float(x) for x in row] for row in m], dtype=float)
    if not np.allclose(a, a.T, rtol=1e-12, atol=1e-12 * (abs(a).max() + 1)):
        raise ValueError("matrix must be symmetric")
    a = (a + a.T) / 2.0
    eigs = np.linalg.eigvalsh(a)
    scale = float(np.abs(eigs).max()) if eigs.size else 0.0
    if scale == 0.0:
        return Inertia(0, 0, len(m)), math.inf
    band = FLOAT_REL_TOL * scale
    pos = int(np.sum(eigs > band))
    neg = int(np.sum(eigs < -band))
    zero = len(m) - pos - neg
    margin = float(np.abs(eigs).min()) / scale
    return Inertia(pos, neg, zero), margin


# -- Lorentzian membership ----------------------------------------------------

@dataclass(frozen=True)
class LorentzianVerdict:
    ok: bool
    reason: Optional[str] = None          # "support" | "hessian" when ok is False
    witness: Optional[tuple] = None       # exchange witness or failing alpha
    marginal: bool = False                # float mode: an eigenvalue sat inside the band
    margin: Optional[float] = None        # smallest relative eigenvalue seen

    def __bool__(self):
        return self.ok


def _check_poly_input(f: Polynomial) -> None:
    if not f.coeffs:
        raise ValueError("the zero polynomial is not Lorentzian")
    for alpha, c in f.coeffs.items():
        if c < 0:
            raise ValueError(f"negative coefficient at {alpha}")


def _hessian_alphas(f: Polynomial) -> List[Point]:
    seen = set()
    for p in f.coeffs:
        support = [i for i in range(f.n) if p[i]]
        for i in support:
            for j in support:
                if j < i:
                    continue
                if i == j and p[i] < 2:
                    continue
                a = list(p)
                a[i] -= 1
                a[j] -= 1
                seen.add(tuple(a))
    return sorted(seen)


def _hessian_at(f: Polynomial, alpha: Point):
    base = list(alpha)
    h = []
    for i in range(f.n):
        row = []
        base[i] += 1
        for j in range(f.n):
            base[j] += 1
            row.append(f.coeffs.get(tuple(base), 0))
            base[j] -= 1
        base[i] -= 1
        h.append(row)
    return h


def is_lorentzian(f: Polynomial) -> LorentzianVerdict:
    """Support M-convexity plus the one-positive-eigenvalue Hessian test.

    Returns a verdict whose certificate names either the support witness or
    the first failing alpha; float mode also reports whether any eigenvalue
    decision was marginal.
    """
    _check_poly_input(f)
    if f.d <= 1:
        return LorentzianVerdict(True)
    support = f.support()
    ok, witness = is_m_convex(support, f.n, f.d)
    if not ok:
        return LorentzianVerdict(False, reason="support", witness=witness)
    exact = f.mode == "exact"
    worst_margin = math.inf
    marginal = False
    for alpha in _hessian_alphas(f):
        h = _hessian_at(f, alpha)
        if exact:
            inertia = _inertia_exact([row[:] for row in h])
        else:
            inertia, margin = _inertia_float(h)
            worst_margin = min(worst_margin, margin)
            if margin <= FLOAT_REL_TOL:
                marginal = True
        if inertia.positives > 1:
            return LorentzianVerdict(False, reason="hessian", witness=alpha,
                                     marginal=marginal,
                                     margin=None if exact else worst_margin)
    return LorentzianVerdict(True, marginal=marginal,
                             margin=None if exact or worst_margin is math.inf
                             else worst_margin)


def is_strictly_lorentzian(f: Polynomial) -> LorentzianVerdict:
    """Full simplex support, positive coefficients, inertia exactly (1, n-1, 0)."""
    _check_poly_input(f)
    simplex_points = set(full_simplex(f.d, f.n).points)
    if set(f.coeffs) != simplex_points:
        missing = sorted(simplex_points - set(f.coeffs))
        return LorentzianVerdict(False, reason="support",
                                 witness=missing[0] if missing else None)
    if f.d <= 1:
        return LorentzianVerdict(True)
    exact = f.mode == "exact"
    marginal = False
    worst_margin = math.inf
    for alpha in _hessian_alphas(f):
        h = _hessian_at(f, alpha)
        if exact:
            inertia = _inertia_exact([row[:] for row in h])
        else:
            inertia, margin = _inertia_float(h)
            worst_margin = min(worst_margin, margin)
            if margin <= FLOAT_REL_TOL:
                marginal = True
        if inertia.as_tuple() != (1, f.n - 1, 0):
            return LorentzianVerdict(False, reason="hessian", witness=alpha,
                                     marginal=marginal,
                                     margin=None if exact else worst_margin)
    return LorentzianVerdict(True, marginal=marginal,
                             margin=None if exact or worst_margin is math.inf
                             else worst_margin)


# -- coefficient transforms ---------------------------------------------------

def power_map(f: Polynomial, p) -> Polynomial:
    """R_p: raise every normalized coefficient to the p-th power."""
    if p < 0:
        raise ValueError("power_map needs p >= 0")
    if p == 0:
        return Polynomial(f.n, f.d, {a: Fraction(1) for a in f.coeffs})
    if p == 1:
        return Polynomial(f.n, f.d, dict(f.coeffs))
    if isinstance(p, int) or (isinstance(p, Rational) and p.denominator == 1):
        k = int(p)
        return Polynomial(f.n, f.d, {a: c ** k for a, c in f.coeffs.items()})
    return Polynomial(f.n, f.d,
                      {a: float(c) ** float(p) for a, c in f.coeffs.items()})


def normalize(f: Polynomial, t) -> Polynomial:
    """N_t: divide c_alpha by (alpha!)^t; N_s(N_t(f)) = N_{s+t}(f)."""
    if isinstance(t, int) or (isinstance(t, Rational) and t.denominator == 1):
        k = int(t)
        out = {}
        for a, c in f.coeffs.items():
            fa = factorial_of(a) ** k if k >= 0 else Fraction(1, factorial_of(a) ** (-k))
            if isinstance(c, Rational):
                out[a] = Fraction(c) / fa
            else:
                out[a] = c / float(fa)
        return Polynomial(f.n, f.d, out)
    return Polynomial(f.n, f.d,
                      {a: float(c) / factorial_of(a) ** float(t)
                       for a, c in f.coeffs.items()})


# -- degree-2 simplification ----------------------------------------------------

@dataclass(frozen=True)
class Simplification:
    g: Polynomial
    lambdas: tuple
    partition: Tuple[Tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.partition)


def simplify_degree2(f: Polynomial) -> Simplification:
    """Collapse a degree-2 polynomial along its multipartite support classes.

    Coordinates i != j with e_i + e_j outside the support fall into one
    class; within each class V_k the weights lambda_i sum to one and
    f(x) = g(..., sum_{i in V_k} lambda_i x_i, ...) exactly.  Requires the
    support to be M-convex and the coefficients to satisfy the degenerate
    binomial equalities (each violation is reported by its 2x2 minor).
    """
    if f.d != 2:
        raise ValueError("simplify_degree2 needs degree exactly 2")
    _check_poly_input(f)
    n = f.n
    support = f.support()
    ok, witness = is_m_convex(support, n, 2)
    if not ok:
        raise ValueError(f"support is not M-convex; witness {witness}")

    def pair(i, j):
        v = [0] * n
        v[i] += 1
        v[j] += 1
        return tuple(v)

    in_support = set(support)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if pair(i, j) not in in_support:
                parent[find(i)] = find(j)
    blocks: Dict[int, List[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    partition = tuple(tuple(sorted(b)) for b in
                      sorted(blocks.values(), key=lambda b: min(b)))
    # the classes must be genuinely multipartite: no support inside a block,
    # diagonal support only on singleton blocks
    for block in partition:
        for i in block:
            for j in block:
                if i < j and pair(i, j) in in_support:
                    raise AssertionError(
                        "support classes are not multipartite; "
                        f"{(i, j)} crosses a merged block")
            if pair(i, i) in in_support and len(block) > 1:
                raise AssertionError(
                    f"diagonal support at {i} inside a block of size {len(block)}")

    exact = f.mode == "exact"
    one = Fraction(1) if exact else 1.0

    block_of = {}
    for b_index, block in enumerate(partition):
        for i in block:
            block_of[i] = b_index

    r = len(partition)
    # consistency of the rank-1 structure: for every block, the coefficient
    # matrix against ALL outside coordinates must be rank 1, i.e. every 2x2
    # minor c_{ij} c_{i'j'} - c_{ij'} c_{i'j} with j, j' in the block and
    # i, i' outside it vanishes (these are the degenerate binomials)
    for b_index, block in enumerate(partition):
        if len(block) < 2:
            continue
        others = [i for i in range(n) if block_of[i] != b_index]
        for i1, i2 in itertools.combinations(others, 2):
            for j1, j2 in itertools.combinations(block, 2):
                lhs = f.coeffs[pair(i1, j1)] * f.coeffs[pair(i2, j2)]
                rhs = f.coeffs[pair(i1, j2)] * f.coeffs[pair(i2, j1)]
                if exact:
                    bad = lhs != rhs
                else:
                    bad = abs(lhs - rhs) > 1e-9 * max(abs(lhs), abs(rhs), 1e-300)
                if bad:
                    raise ValueError(
                        "degenerate binomial equality violated on minor "
                        f"rows {(i1, i2)} cols {(j1, j2)}: {lhs} != {rhs}")

    lambdas = [one] * n
    for b_index, block in enumerate(partition):
        if len(block) == 1:
            lambdas[block[0]] = one
            continue
        # reference column in any other block; rank-1 consistency makes the
        # normalized profile independent of the choice
        ref_block = partition[0] if b_index != 0 else partition[1]
        j0 = ref_block[0]
        weights = [f.coeffs[pair(i, j0)] for i in block]
        total = sum(weights)
        for i, wgt in zip(block, weights):
            # int coefficients must divide exactly, not through float division
            lambdas[i] = (Fraction(wgt) / Fraction(total) if exact
                          else float(wgt) / float(total))

    g_coeffs: Dict[Point, object] = {}

    def g_point(a, b):
        v = [0] * r
        v[a] += 1
        v[b] += 1
        return tuple(v)

    for a in range(r):
        block = partition[a]
        if len(block) == 1 and pair(block[0], block[0]) in in_support:
            g_coeffs[g_point(a, a)] = f.coeffs[pair(block[0], block[0])]
        for b in range(a + 1, r):
            i, j = partition[a][0], partition[b][0]
            val = f.coeffs[pair(i, j)] / (lambdas[i] * lambdas[j])
            g_coeffs[g_point(a, b)] = val

    g = Polynomial(r, 2, g_coeffs)
    simp = Simplification(g, tuple(lambdas), partition)
    _check_simplification_roundtrip(f, simp)
    return simp


def _check_simplification_roundtrip(f: Polynomial, simp: Simplification) -> None:
    """Substituting the block sums into g must reproduce f exactly."""
    n = f.n
    block_of = {}
    for b_index, block in enumerate(simp.partition):
        for i in block:
            block_of[i] = b_index
    exact = f.mode == "exact" and simp.g.mode == "exact"
    for i in range(n):
        for j in range(i, n):
            a, b = block_of[i], block_of[j]
            if a == b and i != j:
                expected = 0
            else:
                v = [0] * simp.r
                v[a] += 1
                v[b] += 1
                gc = simp.g.coeffs.get(tuple(v), 0)
                expected = gc * simp.lambdas[i] * simp.lambdas[j]
            actual = f.coeffs.get(_pair_point(n, i, j), 0)
            if exact:
                if expected != actual:
                    raise AssertionError(
                        f"simplification does not reproduce f at ({i},{j})")
            else:
                ref = max(abs(float(expected)), abs(float(actual)), 1e-300)
                if abs(float(expected) - float(actual)) > 1e-9 * ref:
                    raise AssertionError(
                        f"simplification does not reproduce f at ({i},{j})")


def _pair_point(n, i, j):
    v = [0] * n
    v[i] += 1
    v[j] += 1
    return tuple(v)


def classify_deg2(f: Polynomial) -> Tuple[str, str]:
    """Position and image class of a Lorentzian degree-2 polynomial.

    Position: "interior" when the simplified Hessian has full rank (always a
    certificate); a singular Hessian gives "boundary" when the simplification
    has no diagonal terms (the only case where singularity is known to force
    the boundary) and "undetermined-boundary" otherwise.  Image class by the
    simplified-Hessian rank: <= 3 real, == 4 complex, >= 5 outside.
    """
    verdict = is_lorentzian(f)
    if not verdict.ok:
        raise ValueError(f"classify_deg2 needs a Lorentzian input: {verdict}")
    simp = simplify_degree2(f)
    g = simp.g
    h = _hessian_at(g, (0,) * g.n)
    if g.mode == "exact":
        rank = _exact_rank_dense(h)
    else:
        inertia, _ = _inertia_float(h)
        rank = inertia.positives + inertia.negatives
    if rank == g.n:
        position = "interior"
    else:
        diagonal_free = all(sum(1 for x in a if x) == 2 for a in g.coeffs)
        position = "boundary" if diagonal_free else "undetermined-boundary"
    if rank <= 3:
        image = "real-image"
    elif rank == 4:
        image = "complex-image"
    else:
        image = "outside-image"
    return position, image


def _exact_rank_dense(matrix) -> int:
    from . import linalg
    rows = []
    for row in matrix:
        dense = [Fraction(x) for x in row]
        rows.append({i: v for i, v in enumerate(dense) if v})
    return len(linalg.echelon_sparse(r for r in rows if r))


# -- the Grassmannian map -----------------------------------------------------

def _det_laplace(matrix):
    """Determinant via Laplace expansion; ring entries (no division)."""
    size = len(matrix)
    if size == 0:
        return 1
    cols = tuple(range(size))
    memo = {}

    def rec(row, cols):
        if not cols:
            return 1
        if (row, cols) in memo:
            return memo[(row, cols)]
        total = None
        for idx, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = rec(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry * sub if idx % 2 == 0 else -(entry * sub)
            total = term if total is None else total + term
        if total is None:
            total = 0 * matrix[0][0]
        memo[(row, cols)] = total
        return total

    return rec(0, cols)


def grassmann_map(matrix, t=2) -> Polynomial:
    """f = sum_S |minor_S|^t x^S over d-subsets S of the columns.

    Entries may be rationals, ComplexRational, or GoldenRational; minors are
    computed exactly.  With t = 2 and rational or complex-rational entries
    the output is exact (squared modulus); golden-ratio entries and other t
    round to float.  Requires the matrix to have full row rank.
    """
    if t <= 0:
        raise ValueError("grassmann_map needs t > 0")
    rows = [list(r) for r in matrix]
    d = len(rows)
    if d == 0 or len({len(r) for r in rows}) != 1:
        raise ValueError("matrix must be rectangular and nonempty")
    n = len(rows[0])
    if d > n:
        raise ValueError(f"need d <= n, got {d}x{n}")

    coeffs: Dict[Point, object] = {}
    exact_t2 = (t == 2)
    any_nonzero = False
    for S in itertools.combinations(range(n), d):
        sub = [[rows[i][c] for c in S] for i in range(d)]
        det = _det_laplace(sub)
        if not det:
            continue
        any_nonzero = True
        alpha = [0] * n
        for c in S:
            alpha[c] = 1
        if isinstance(det, ComplexRational):
            mod2 = det.abs2()
            value = mod2 if exact_t2 else float(mod2) ** (float(t) / 2)
        elif isinstance(det, GoldenRational):
            mod2 = det * det  # exact in the field, then rounded for storage
            value = float(mod2) if exact_t2 else abs(float(det)) ** float(t)
        else:
            det = Fraction(det)
            mod2 = det * det
            value = mod2 if exact_t2 else float(mod2) ** (float(t) / 2)
        # the coefficient is attached in normalized coordinates; alpha! = 1
        coeffs[tuple(alpha)] = value
    if not any_nonzero:
        raise ValueError("matrix is rank deficient: every maximal minor vanishes")
    f = Polynomial(n, d, coeffs)
    # full row rank means some d-subset has a nonzero minor, checked above;
    # a rank deficit below d-1 would have emptied the support as well
    return f


# -- the eleven-point star family ----------------------------------------------

def betsy_matrix():
    """The rank-3 golden-ratio matrix whose column triples cut out the
    eleven-point star matroid."""
    one = GoldenRational(1)
    zero = GoldenRational(0)
    phi = GOLDEN_PHI
    phi1 = phi + one
    invphi = one / phi
    return [
        [zero, zero, one, one, one, one, one, one, one, one, one],
        [one, zero, one, phi1, phi, phi1, zero, phi, phi, phi1, zero],
        [zero, one, one, phi, invphi, zero, phi, phi, one, one, zero],
    ]


def betsy_polynomial(t) -> Polynomial:
    """The one-parameter family |minor_S|^t on the 140 star-matroid bases.

    Minors are exact in Q(sqrt5); the t-th powers are taken in double
    precision (exact rational 1 at t = 0).  Lorentzian exactly for
    t in [-2, 2].
    """
    a = betsy_matrix()
    coeffs: Dict[Point, object] = {}
    for S in itertools.combinations(range(11), 3):
        sub = [[a[i][c] for c in S] for i in range(3)]
        det = _det_laplace(sub)
        if not det:
            continue
        alpha = [0] * 11
        for c in S:
            alpha[c] = 1
        if t == 0:
            coeffs[tuple(alpha)] = Fraction(1)
        else:
            coeffs[tuple(alpha)] = float(abs(det)) ** float(t)
    return Polynomial(11, 3, coeffs)

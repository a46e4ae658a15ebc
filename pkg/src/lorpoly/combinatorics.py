"""M-convex sets of lattice points and a library of named examples.

An M-convex set lives in the discrete simplex Delta^d_n = {alpha in Z^n_{>=0}
: sum(alpha) = d} and satisfies the symmetric exchange axiom: for alpha, beta
in J and any i with alpha_i > beta_i there is a j with alpha_j < beta_j such
that both alpha - e_i + e_j and beta + e_i - e_j stay in J.  Matroids are the
special case of 0/1 points (bases as indicator vectors).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Point = tuple  # exponent vector: tuple of n nonnegative ints


def _as_point(p) -> Point:
    return tuple(int(x) for x in p)


def _validate_points(points: Sequence[Point], n: int, d: int) -> None:
    for p in points:
        if len(p) != n:
            raise ValueError(f"point {p} has length {len(p)}, expected n={n}")
        if any(x < 0 for x in p):
            raise ValueError(f"point {p} has a negative entry")
        if sum(p) != d:
            raise ValueError(f"point {p} has coordinate sum {sum(p)}, expected d={d}")


def is_m_convex(points: Iterable[Sequence[int]], n: int, d: int):
    """Exhaustive symmetric-exchange check on a set of exponent vectors.

    Returns ``(True, None)`` if the set is a nonempty M-convex subset of
    Delta^d_n.  Otherwise returns ``(False, witness)`` where witness is a
    triple ``(alpha, beta, i)`` such that alpha_i > beta_i but no index j
    repairs the exchange; for the empty set the witness is None.

    Runs the full O(|J|^2 n^2) check; inputs at desk scale (|J| <= ~200)
    finish in well under a second.
    """
    pts = sorted({_as_point(p) for p in points})
    _validate_points(pts, n, d)
    if not pts:
        return False, None
    member = set(pts)
    for a in pts:
        for b in pts:
            if a is b or a == b:
                continue
            for i in range(n):
                if a[i] <= b[i]:
                    continue
                found = False
                for j in range(n):
                    if a[j] >= b[j]:
                        continue
                    a2 = list(a)
                    a2[i] -= 1
                    a2[j] += 1
                    b2 = list(b)
                    b2[i] += 1
                    b2[j] -= 1
                    if tuple(a2) in member and tuple(b2) in member:
                        found = True
                        break
                if not found:
                    return False, (a, b, i)
    return True, None


class MConvexSet:
    """A nonempty M-convex subset of Delta^d_n with lex-sorted points.

    The constructor validates shapes and, unless ``check=False``, runs the
    exchange check.  Instances are immutable and hashable; derived data
    (bounds, component count) is cached lazily.
    """

    def __init__(self, n: int, d: int, points: Iterable[Sequence[int]],
                 label: Optional[str] = None, check: bool = True):
        pts = tuple(sorted({_as_point(p) for p in points}))
        _validate_points(pts, n, d)
        if not pts:
            raise ValueError("M-convex sets are nonempty by definition")
        if check:
            ok, witness = is_m_convex(pts, n, d)
            if not ok:
                raise ValueError(f"point set is not M-convex; witness {witness}")
        self.n = int(n)
        self.d = int(d)
        self.points = pts
        self.label = label
        self._bounds = None
        self._components = None
        self._point_index = None

    # -- basic protocol ----------------------------------------------------

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return _as_point(p) in self.point_index

    def __eq__(self, other):
        return (isinstance(other, MConvexSet)
                and self.n == other.n and self.d == other.d
                and self.points == other.points)

    def __hash__(self):
        return hash((self.n, self.d, self.points))

    def __repr__(self):
        name = self.label or "MConvexSet"
        return f"<{name}: {len(self.points)} points in Delta^{self.d}_{self.n}>"

    @property
    def point_index(self) -> dict:
        """Map point -> position in the lex-sorted point tuple."""
        if self._point_index is None:
            self._point_index = {p: k for k, p in enumerate(self.points)}
        return self._point_index

    def is_matroid(self) -> bool:
        return all(x <= 1 for p in self.points for x in p)

    # -- derived data -------------------------------------------------------

    def delta_bounds(self):
        """Coordinatewise (min, max) over the points: the vectors delta^- and delta^+."""
        if self._bounds is None:
            lower = tuple(min(p[i] for p in self.points) for i in range(self.n))
            upper = tuple(max(p[i] for p in self.points) for i in range(self.n))
            self._bounds = (lower, upper)
        return self._bounds

    def components(self) -> int:
        """Number of factors in the finest Cartesian-product decomposition.

        Two coordinates belong to the same factor when a one-step exchange
        links them, i.e. some alpha in J has alpha - e_i + e_j in J.  The
        connected blocks of that relation give the decomposition; the product
        identity |J| = prod |proj_block(J)| is asserted as a safety check.
        """
        if self._components is None:
            self._components = self._compute_components()
        return self._components

    def _compute_components(self) -> int:
        n = self.n
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        member = self.point_index
        for a in self.points:
            for i in range(n):
                if a[i] == 0:
                    continue
                for j in range(n):
                    if i == j:
                        continue
                    a2 = list(a)
                    a2[i] -= 1
                    a2[j] += 1
                    if tuple(a2) in member:
                        union(i, j)

        blocks = {}
        for i in range(n):
            blocks.setdefault(find(i), []).append(i)
        block_list = list(blocks.values())

        # J must equal the product of its block projections; anything else
        # means the exchange relation above is wrong, not a bad input.
        size_product = 1
        for block in block_list:
            size_product *= len({tuple(p[i] for i in block) for p in self.points})
        if size_product != len(self.points):
            raise AssertionError(
                "component decomposition failed the product test; "
                "this is a bug, please report it")
        return len(block_list)

    def generating_polynomial(self):
        """The polynomial with normalized coefficient 1 on every point of J.

        In monomial terms this is sum_{alpha in J} x^alpha / alpha!.
        """
        from .lorentzian import Polynomial
        return Polynomial(self.n, self.d, {p: Fraction(1) for p in self.points})


# -- named examples ---------------------------------------------------------

# Collinear triples of the eleven-point star arrangement (five 4-point lines
# forming the pentagram, five 3-point lines through the center point 10),
# computed from the golden-ratio matrix in lorentzian.betsy_matrix().
BETSY_ROSS_NONBASES = (
    (0, 2, 8), (0, 2, 9), (0, 3, 6), (0, 3, 7), (0, 5, 10),
    (0, 6, 7), (0, 8, 9), (1, 3, 5), (1, 3, 9), (1, 4, 7),
    (1, 4, 8), (1, 5, 9), (1, 6, 10), (1, 7, 8), (2, 4, 5),
    (2, 4, 6), (2, 5, 6), (2, 7, 10), (2, 8, 9), (3, 5, 9),
    (3, 6, 7), (3, 8, 10), (4, 5, 6), (4, 7, 8), (4, 9, 10),
)

# Lines of the seven-point projective plane, in the cyclic {i, i+1, i+3}
# presentation on {0,...,6}.
FANO_LINES = tuple(
    tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)
)


def _indicator(subset, n):
    v = [0] * n
    for i in subset:
        v[i] = 1
    return tuple(v)


def uniform_matroid(d: int, n: int) -> MConvexSet:
    """U_{d,n}: all 0/1 vectors with exactly d ones."""
    if not 0 <= d <= n:
        raise ValueError(f"uniform({d},{n}) needs 0 <= d <= n")
    pts = [_indicator(c, n) for c in itertools.combinations(range(n), d)]
    return MConvexSet(n, d, pts, label=f"U({d},{n})", check=False)


def full_simplex(d: int, n: int) -> MConvexSet:
    """All of Delta^d_n."""
    if n < 1 or d < 0:
        raise ValueError("simplex(d,n) needs n >= 1 and d >= 0")
    pts = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        v = []
        for b in bars:
            v.append(b - prev - 1)
            prev = b
        v.append(d + n - 2 - prev)
        pts.append(tuple(v))
    return MConvexSet(n, d, pts, label=f"Delta^{d}_{n}", check=False)


def from_nonbases(n: int, nonbases: Iterable[Sequence[int]], rank: int = 3,
                  label: Optional[str] = None) -> MConvexSet:
    """Rank-r matroid on {0,...,n-1} given by its list of nonbases.

    Raises a construction error when the complement of the nonbases is not
    the basis set of a matroid.
    """
    nb = {tuple(sorted(t)) for t in nonbases}
    for t in nb:
        if len(t) != rank or len(set(t)) != rank:
            raise ValueError(f"nonbasis {t} is not a {rank}-subset")
        if any(not 0 <= i < n for i in t):
            raise ValueError(f"nonbasis {t} out of range for n={n}")
    pts = [_indicator(c, n)
           for c in itertools.combinations(range(n), rank)
           if tuple(c) not in nb]
    if not pts:
        raise ValueError("every subset is a nonbasis; empty point set")
    ok, witness = is_m_convex(pts, n, rank)
    if not ok:
        raise ValueError(
            f"nonbasis list does not define a matroid; exchange fails at {witness}")
    return MConvexSet(n, rank, pts, label=label, check=False)


def elliptic_matroid(n: int) -> MConvexSet:
    """Rank-3 matroid on {0,...,n-1} whose nonbases are the triples summing to 0 mod n."""
    if n < 4:
        raise ValueError("elliptic(n) needs n >= 4")
    nb = [t for t in itertools.combinations(range(n), 3) if sum(t) % n == 0]
    return from_nonbases(n, nb, rank=3, label=f"elliptic({n})")


def betsy_ross() -> MConvexSet:
    """The rank-3 matroid of the eleven-point star arrangement (140 bases)."""
    return from_nonbases(11, BETSY_ROSS_NONBASES, rank=3, label="betsy_ross")


def fano() -> MConvexSet:
    """The seven-point projective plane, rank 3, 28 bases."""
    return from_nonbases(7, FANO_LINES, rank=3, label="fano")


def build_named(kind: str, **params) -> MConvexSet:
    """Build one of the named M-convex sets.

    Kinds: ``uniform(d, n)``, ``elliptic(n)``, ``betsy_ross``, ``fano``,
    ``simplex(d, n)``, ``from_nonbases(n, nonbases, rank=3)``.
    """
    kind = kind.lower()
    if kind == "uniform":
        return uniform_matroid(int(params["d"]), int(params["n"]))
    if kind == "elliptic":
        return elliptic_matroid(int(params["n"]))
    if kind == "betsy_ross":
        return betsy_ross()
    if kind == "fano":
        return fano()
    if kind == "simplex":
        return full_simplex(int(params["d"]), int(params["n"]))
    if kind == "from_nonbases":
        return from_nonbases(int(params["n"]), params["nonbases"],
                             rank=int(params.get("rank", 3)),
                             label=params.get("label"))
    raise ValueError(f"unknown kind {kind!r}")

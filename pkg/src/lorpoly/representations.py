"""Exchange relations of M-convex sets and their hyperfield representations.

A representation assigns a positive scalar to every point of an M-convex set
J.  Membership in the weak (3-term) or strong (all series lengths s) relation
classes at T_q is decided by feeding each relation's supported term products
to the hyperfield null test; signs are recorded but play no role there.  The
degenerate relations (exactly two supported terms) cut out the exact linear
space V_J in log coordinates, alongside the rescaling space W_J spanned by
the coordinate rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import hyperfield, linalg
from .combinatorics import MConvexSet

Point = Tuple[int, ...]


@dataclass(frozen=True)
class PlueckerRelation:
    """One exchange relation: signed sum of products rho(a) * rho(b)."""

    alpha: Point
    term_pairs: Tuple[Tuple[Point, Point], ...]
    signs: Tuple[int, ...]
    supported_mask: Tuple[bool, ...]

    @property
    def n_supported(self) -> int:
        return sum(self.supported_mask)

    def supported_values(self, rho: Dict[Point, object]) -> list:
        """Products of rho over the supported terms (off-support terms are 0)."""
        return [rho[a] * rho[b]
                for (a, b), ok in zip(self.term_pairs, self.supported_mask) if ok]


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of R^J with exact rational basis rows.

    ``ambient_labels`` fixes the coordinate order (the lex-sorted points of
    J); ``basis`` rows are linearly independent.
    """

    ambient_labels: Tuple[Point, ...]
    basis: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _add_vec(base: Sequence[int], *indices: int) -> Point:
    v = list(base)
    for i in indices:
        v[i] += 1
    return tuple(v)


def _alphas_in_bounds(J: MConvexSet, degree: int):
    """All alpha in Delta^degree_n with delta^- <= alpha coordinatewise."""
    lower, upper = J.delta_bounds()
    rest = degree - sum(lower)
    if rest < 0:
        return
    n = J.n
    # distribute `rest` over the coordinates on top of `lower`
    def gen(i, remaining, acc):
        if i == n - 1:
            yield tuple(acc + [lower[i] + remaining])
            return
        for x in range(remaining + 1):
            yield from gen(i + 1, remaining - x, acc + [lower[i] + x])
    yield from gen(0, rest, [])


def three_term_relations(J: MConvexSet) -> List[PlueckerRelation]:
    """All 3-term relations within the delta bounds of J.

    Indices run over 1 <= i <= j <= k <= l <= n (repeats allowed); a relation
    is kept when at least one of its three terms has both factors in J.
    Term order follows (jk|il), (ik|jl), (ij|kl) with signs (+, -, +).
    """
    if J.d < 2:
        return []
    _, upper = J.delta_bounds()
    member = J.point_index
    out = []
    for alpha in _alphas_in_bounds(J, J.d - 2):
        for quad in itertools.combinations_with_replacement(range(J.n), 4):
            i, j, k, l = quad
            cap = list(alpha)
            for t in quad:
                cap[t] += 1
            if any(c > u for c, u in zip(cap, upper)):
                continue
            pairs = (
                (_add_vec(alpha, j, k), _add_vec(alpha, i, l)),
                (_add_vec(alpha, i, k), _add_vec(alpha, j, l)),
                (_add_vec(alpha, i, j), _add_vec(alpha, k, l)),
            )
            mask = tuple(a in member and b in member for a, b in pairs)
            if not any(mask):
                continue
            out.append(PlueckerRelation(tuple(alpha), pairs, (1, -1, 1), mask))
    return out


def full_relations(J: MConvexSet, s: int) -> List[PlueckerRelation]:
    """The (s+1)-term relations for one series length s, 2 <= s <= d.

    For each shift alpha in Delta^{d-s}_n, indices i_0 <= ... <= i_s and
    j_2 <= ... <= j_s, the k-th term pairs rho(alpha + sum e_{i_t}, t != k)
    with rho(alpha + e_{i_k} + e_{j_2} + ... + e_{j_s}); the sign is
    (-1)^(k + eps) with eps = #{t in {2..s} : i_t < j_s}.  Relations whose
    term multiset repeats an earlier one are emitted once.
    """
    if not 2 <= s <= J.d:
        raise ValueError(f"s must satisfy 2 <= s <= d={J.d}, got {s}")
    _, upper = J.delta_bounds()
    member = J.point_index
    out = []
    seen = set()
    for alpha in _alphas_in_bounds(J, J.d - s):
        for i_tuple in itertools.combinations_with_replacement(range(J.n), s + 1):
            for j_tuple in itertools.combinations_with_replacement(range(J.n), s - 1):
                cap = list(alpha)
                for t in i_tuple:
                    cap[t] += 1
                for t in j_tuple:
                    cap[t] += 1
                if any(c > u for c, u in zip(cap, upper)):
                    continue
                eps = sum(1 for t in i_tuple[2:] if t < j_tuple[-1]) if j_tuple else 0
                pairs = []
                signs = []
                for k in range(s + 1):
                    rest = i_tuple[:k] + i_tuple[k + 1:]
                    f1 = _add_vec(alpha, *rest)
                    f2 = _add_vec(alpha, i_tuple[k], *j_tuple)
                    pairs.append((f1, f2) if f1 <= f2 else (f2, f1))
                    signs.append((-1) ** (k + eps))
                key = frozenset((p, pairs.count(p)) for p in pairs)
                if key in seen:
                    continue
                seen.add(key)
                mask = tuple(a in member and b in member for a, b in pairs)
                if not any(mask):
                    continue
                out.append(PlueckerRelation(tuple(alpha), tuple(pairs),
                                            tuple(signs), mask))
    return out


def _check_support(rho: Dict[Point, object], J: MConvexSet) -> None:
    if set(rho) != set(J.points):
        raise ValueError("representation support does not equal the point set")
    for v in rho.values():
        if not v > 0:
            raise ValueError(f"representation values must be positive, got {v}")


def is_weak_rep(rho: Dict[Point, object], J: MConvexSet, q) -> bool:
    """Whether rho satisfies every 3-term relation of J at T_q."""
    _check_support(rho, J)
    return all(hyperfield.is_null(rel.supported_values(rho), q)
               for rel in three_term_relations(J))


def is_strong_rep(rho: Dict[Point, object], J: MConvexSet, q) -> bool:
    """Whether rho satisfies the relations of every series length at T_q."""
    _check_support(rho, J)
    if J.d < 2:
        return True
    return all(hyperfield.is_null(rel.supported_values(rho), q)
               for s in range(2, J.d + 1)
               for rel in full_relations(J, s))


def degenerate_relations(J: MConvexSet, use_full: bool = False):
    """Relations with exactly two supported terms, as product equalities.

    Returns a list of pairs ((a, b), (c, d)) of point pairs meaning
    rho(a) rho(b) = rho(c) rho(d).  A relation with exactly one supported
    term would contradict the exchange property; finding one raises.
    """
    if J.d < 2:
        return []
    if use_full:
        rels = [r for s in range(2, J.d + 1) for r in full_relations(J, s)]
    else:
        rels = three_term_relations(J)
    out = []
    for rel in rels:
        supported = [p for p, ok in zip(rel.term_pairs, rel.supported_mask) if ok]
        if len(supported) == 1:
            raise AssertionError(
                f"relation with a single supported term at alpha={rel.alpha}; "
                "the point set cannot be M-convex")
        if len(supported) == 2:
            out.append((supported[0], supported[1]))
    return out


def _binomial_rows(J: MConvexSet, equalities) -> List[linalg.SparseRow]:
    idx = J.point_index
    rows = []
    for (a, b), (c, d) in equalities:
        row: Dict[int, Fraction] = {}
        for p, sgn in ((a, 1), (b, 1), (c, -1), (d, -1)):
            row[idx[p]] = row.get(idx[p], Fraction(0)) + sgn
        rows.append({k: v for k, v in row.items() if v})
    return rows


def v_space(J: MConvexSet, validate_full: bool = False) -> RationalSubspace:
    """The exact solution space of the degenerate binomial equalities, in log
    coordinates on R^J.

    With ``validate_full`` the kernel is recomputed from the degenerate
    relations of every series length and must agree (it always does for
    M-convex input; the flag turns that fact into a runtime check).
    """
    eqs = degenerate_relations(J, use_full=False)
    basis = linalg.kernel_basis(_binomial_rows(J, eqs), len(J.points))
    if validate_full:
        eqs_full = degenerate_relations(J, use_full=True)
        full_basis = linalg.kernel_basis(_binomial_rows(J, eqs_full), len(J.points))
        if len(full_basis) != len(basis):
            raise AssertionError(
                "degenerate relations of higher series lengths cut the space "
                f"further: dim {len(basis)} vs {len(full_basis)}")
        space = linalg.RowSpace()
        for vec in basis:
            space.add(linalg.dense_to_sparse(vec))
        for vec in full_basis:
            if not space.contains(linalg.dense_to_sparse(vec)):
                raise AssertionError("full-relation kernel escapes the 3-term kernel")
    return RationalSubspace(J.points, tuple(basis))


def w_space(J: MConvexSet) -> RationalSubspace:
    """Row space of the n x |J| matrix whose i-th row is (alpha_i)_{alpha in J}."""
    space = linalg.RowSpace()
    for i in range(J.n):
        space.add({k: Fraction(p[i]) for k, p in enumerate(J.points) if p[i]})
    m = len(J.points)
    basis = []
    for piv in sorted(space.pivots):
        row = space.pivots[piv]
        basis.append(tuple(row.get(c, Fraction(0)) for c in range(m)))
    return RationalSubspace(J.points, tuple(basis))


def tutte_rank(J: MConvexSet) -> int:
    """dim V_J - 1."""
    return v_space(J).dim - 1


def reduced_dim(J: MConvexSet) -> int:
    """dim V_J - dim W_J: the dimension of the reduced representation space."""
    return v_space(J).dim - w_space(J).dim


def restriction_injective(J: MConvexSet, J_sub: MConvexSet,
                          v: Optional[RationalSubspace] = None,
                          w: Optional[RationalSubspace] = None) -> bool:
    """Whether V_J / W_J -> V_{J_sub} / W_{J_sub} (restrict, then quotient)
    is injective.

    The kernel is {v in V_J : v|_{J_sub} in W_{J_sub}} / W_J, so injectivity
    amounts to the exact rank identity
    rank(W_{J_sub} + V_J|_{J_sub}) - rank(W_{J_sub}) = dim V_J - dim W_J.
    ``v`` and ``w`` may be passed to reuse precomputed spaces of J.
    """
    sub_points = set(J_sub.points)
    if not sub_points <= set(J.points):
        raise ValueError("J_sub must be a subset of J")
    v = v if v is not None else v_space(J)
    w = w if w is not None else w_space(J)
    positions = [J.point_index[p] for p in J_sub.points]

    w_sub = linalg.RowSpace()
    for i in range(J_sub.n):
        w_sub.add({k: Fraction(p[i]) for k, p in enumerate(J_sub.points) if p[i]})
    image = linalg.RowSpace()
    extra = 0
    for row in v.basis:
        restricted = {k: row[pos] for k, pos in enumerate(positions) if row[pos]}
        reduced = w_sub.reduce(restricted)
        if image.add(reduced):
            extra += 1
    return extra == v.dim - w.dim

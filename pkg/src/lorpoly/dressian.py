"""M-convex functions on an M-convex set, the regular subdivisions they
induce, and enumeration of the rays of the reduced space of tropical
representations.

An M-convex function satisfies the exchange inequality
nu(a) + nu(b) >= nu(a - e_k + e_l) + nu(b + e_k - e_l) for some admissible l
at every a, b, k; equivalently (cross-checked at runtime) the tropical
3-term conditions: along every fully supported 3-term relation the minimum
of the three pair sums is attained at least twice.  Rays live in the
quotient of the binomial-equality space by the coordinate-rescaling space
and are canonicalized by positive scaling only — a ray and its negative are
genuinely different objects.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import linalg, representations, polytopes
from .combinatorics import MConvexSet, is_m_convex
from .lorentzian import Polynomial
from .polytopes import ResourceLimitError

Point = Tuple[int, ...]

DEFAULT_MAX_DIM = 6
DEFAULT_NODE_BUDGET = 1_000_000


# -- M-convex functions ---------------------------------------------------------

def _coerce_values(values, J: MConvexSet) -> Dict[Point, Fraction]:
    vals = {tuple(int(x) for x in p): Fraction(v) for p, v in values.items()}
    if set(vals) != set(J.points):
        raise ValueError("function values must be defined exactly on the point set")
    return vals


def _exchange_criterion(vals: Dict[Point, Fraction], J: MConvexSet) -> bool:
    member = J.point_index
    pts = J.points
    n = J.n
    for a in pts:
        va = vals[a]
        for b in pts:
            if a == b:
                continue
            target = va + vals[b]
            for k in range(n):
                if a[k] <= b[k]:
                    continue
                ok = False
                for l in range(n):
                    if a[l] >= b[l]:
                        continue
                    a2 = list(a)
                    a2[k] -= 1
                    a2[l] += 1
                    a2 = tuple(a2)
                    if a2 not in member:
                        continue
                    b2 = list(b)
                    b2[k] += 1
                    b2[l] -= 1
                    b2 = tuple(b2)
                    if b2 not in member:
                        continue
                    if target >= vals[a2] + vals[b2]:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def _local_criterion(vals: Dict[Point, Fraction], J: MConvexSet,
                     relations=None) -> bool:
    if relations is None:
        relations = representations.three_term_relations(J)
    for rel in relations:
        sums = [vals[a] + vals[b]
                for (a, b), sup in zip(rel.term_pairs, rel.supported_mask) if sup]
        if len(sums) < 2:
            return False
        m = min(sums)
        if sums.count(m) < 2:
            return False
    return True


def is_m_convex_function(values, J: MConvexSet, relations=None) -> bool:
    """Exchange-inequality verdict for a rational function on the points of J.

    The tropical 3-term criterion is evaluated alongside; the two must agree
    (they are equivalent characterizations) and any disagreement is raised as
    an internal error rather than resolved silently.
    """
    vals = _coerce_values(values, J)
    exchange = _exchange_criterion(vals, J)
    local = _local_criterion(vals, J, relations)
    if exchange != local:
        raise RuntimeError(
            "internal error: exchange and local M-convexity criteria disagree "
            f"(exchange={exchange}, local={local}) on {dict(vals)}")
    return exchange


class MConvexFunction:
    """A rational M-convex function given by its values on the points of J."""

    def __init__(self, domain: MConvexSet, values, check: bool = True,
                 relations=None):
        vals = _coerce_values(values, domain)
        if check and not is_m_convex_function(vals, domain, relations):
            raise ValueError("function violates the exchange inequality")
        self.domain = domain
        self.values = vals

    @classmethod
    def from_vector(cls, domain: MConvexSet, vec: Sequence, check: bool = True,
                    relations=None) -> "MConvexFunction":
        return cls(domain, dict(zip(domain.points, vec)), check, relations)

    def vector(self) -> Tuple[Fraction, ...]:
        return tuple(self.values[p] for p in self.domain.points)

    def __eq__(self, other):
        return (isinstance(other, MConvexFunction)
                and self.domain == other.domain and self.values == other.values)

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self.values.items()))))

    def __repr__(self):
        return f"<MConvexFunction on {self.domain!r}>"


# -- quotient canonicalization ---------------------------------------------------

def w_rowspace(J: MConvexSet) -> linalg.RowSpace:
    """The coordinate-rescaling space W_J as an incremental row space."""
    space = linalg.RowSpace()
    for i in range(J.n):
        space.add({k: Fraction(p[i]) for k, p in enumerate(J.points) if p[i]})
    return space


def reduced_ray_key(vec: Sequence, w: linalg.RowSpace,
                    npoints: int) -> Optional[Tuple[Fraction, ...]]:
    """Canonical label of the ray spanned by vec modulo the row space.

    Reduce, then divide by the absolute value of the first nonzero
    coordinate (positive scaling only, so opposite rays stay distinct).
    None when the vector lies in the space itself.
    """
    red = w.reduce(linalg.dense_to_sparse(vec))
    if not red:
        return None
    dense = [red.get(k, Fraction(0)) for k in range(npoints)]
    first = next(x for x in dense if x)
    scale = Fraction(1) / abs(first)
    return tuple(x * scale for x in dense)


def canonical_ray(vec: Sequence, J: MConvexSet,
                  w: Optional[linalg.RowSpace] = None) -> Optional[Tuple[Fraction, ...]]:
    """Canonical representative values for a ray direction on J.

    Quotient-reduce, positively scale the first nonzero quotient coordinate
    to absolute value 1, then add the constant that makes the minimum 0.
    Constants lie in the rescaling space, so equivalent inputs agree exactly;
    the result is M-convex whenever the input is.
    """
    key = reduced_ray_key(vec, w if w is not None else w_rowspace(J),
                          len(J.points))
    if key is None:
        return None
    mn = min(key)
    return tuple(x - mn for x in key)


# -- the exp map -----------------------------------------------------------------

def dressian_to_polynomial(nu: Union[MConvexFunction, Dict[Point, object]],
                           t=1) -> Polynomial:
    """Coefficients e^{-t nu(alpha)} on the support J (normalized basis).

    The zero function gives the exact generating polynomial; anything else is
    evaluated in floating point.
    """
    if t <= 0:
        raise ValueError("the scale t must be positive")
    if isinstance(nu, MConvexFunction):
        J, vals = nu.domain, nu.values
    else:
        raise ValueError("nu must be an MConvexFunction")
    if all(v == 0 for v in vals.values()):
        return Polynomial(J.n, J.d, {p: Fraction(1) for p in J.points})
    coeffs = {p: math.exp(-float(t) * float(v)) for p, v in vals.items()}
    return Polynomial(J.n, J.d, coeffs)


# -- regular subdivisions ---------------------------------------------------------

class Subdivision:
    """Maximal cells of a regular polymatroid subdivision of J.

    Validates that the cells cover J, that each cell is M-convex, and that
    any two cells meet in a common face of both (on the hull level).
    """

    def __init__(self, J: MConvexSet, cells: Sequence[Sequence[Point]],
                 check: bool = True):
        self.domain = J
        self.cells = tuple(sorted(tuple(sorted(tuple(p) for p in c))
                                  for c in cells))
        if check:
            self._validate()

    def _validate(self):
        J = self.domain
        union = set()
        for cell in self.cells:
            union.update(cell)
            ok, witness = is_m_convex(cell, J.n, J.d)
            if not ok:
                raise AssertionError(f"subdivision cell is not M-convex: {witness}")
        if union != set(J.points):
            raise AssertionError("subdivision cells do not cover the point set")
        hulls = [polytopes.polytope_of_points(c) for c in self.cells]
        for i in range(len(self.cells)):
            for j in range(i + 1, len(self.cells)):
                shared = sorted(set(self.cells[i]) & set(self.cells[j]))
                if not shared:
                    continue
                for k in (i, j):
                    if not polytopes.is_face_points(hulls[k], shared):
                        raise AssertionError(
                            "cells meet in a set that is not a common face")

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        return (isinstance(other, Subdivision)
                and self.domain == other.domain and self.cells == other.cells)

    def __repr__(self):
        return f"<Subdivision of {self.domain!r} into {len(self.cells)} cells>"


def induced_subdivision(J: MConvexSet,
                        nu: Union[MConvexFunction, Dict[Point, object]]) -> Subdivision:
    """Cells of the regular subdivision induced by lifting J along nu.

    The epigraph of the lift is a polyhedron whose non-vertical facets are
    exactly the lower faces of conv{(alpha, nu(alpha))}; each one projects to
    a maximal cell, collected as all points of J on the facet.
    """
    if isinstance(nu, MConvexFunction):
        if nu.domain != J:
            raise ValueError("function domain differs from J")
        vals = nu.values
    else:
        vals = _coerce_values(nu, J)
        if not is_m_convex_function(vals, J):
            raise ValueError("the lifting function is not M-convex")
    if len(J.points) == 1:
        return Subdivision(J, (J.points,), check=False)
    lifted = [tuple(Fraction(x) for x in p) + (vals[p], Fraction(1))
              for p in J.points]
    up = tuple([Fraction(0)] * J.n + [Fraction(1), Fraction(0)])
    normals = polytopes.cone_facets(lifted + [up])
    cells = set()
    for nm in normals:
        if nm[J.n] <= 0:      # vertical or upper facet
            continue
        cell = tuple(p for p, g in zip(J.points, lifted)
                     if sum(a * b for a, b in zip(nm, g)) == 0)
        if cell:
            cells.add(cell)
    if not cells:
        raise AssertionError("no lower facet found; lifting degenerated")
    return Subdivision(J, tuple(cells))


# -- ray enumeration --------------------------------------------------------------

def complement_basis(J: MConvexSet,
                     w: Optional[linalg.RowSpace] = None) -> List[Tuple[Fraction, ...]]:
    """Basis of a complement of the rescaling space inside the binomial space.

    The vectors are W-reduced, so they represent a basis of the quotient;
    their number is reduced_dim(J).
    """
    if w is None:
        w = w_rowspace(J)
    v = representations.v_space(J)
    chosen: List[Tuple[Fraction, ...]] = []
    span = linalg.RowSpace()
    m = len(J.points)
    for vec in v.basis:
        red = w.reduce(linalg.dense_to_sparse(vec))
        if red and span.add(dict(red)):
            chosen.append(tuple(red.get(k, Fraction(0)) for k in range(m)))
    return chosen


def _canon_form(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    return polytopes._primitive(vec)


def _clone_rowspace(rs: linalg.RowSpace) -> linalg.RowSpace:
    out = linalg.RowSpace()
    out.pivots = {p: dict(row) for p, row in rs.pivots.items()}
    return out


def _analyze_cone(eq_space: linalg.RowSpace, ineqs: frozenset, r: int):
    """(nonzero?, extreme rays in ambient coords or None, has lineality?)"""
    null = linalg.kernel_basis(list(eq_space.pivots.values()), r)
    m = len(null)
    if m == 0:
        return False, (), False
    projected = set()
    for c in ineqs:
        row = tuple(sum(Fraction(ci) * nv[i] for i, ci in enumerate(c))
                    for nv in null)
        if any(row):
            projected.add(_canon_form(row))
    rows = [tuple(Fraction(x) for x in p) for p in projected]
    rank = len(linalg.echelon_sparse(linalg.dense_to_sparse(p) for p in rows))
    if rank < m:
        return True, None, True
    rays_m = polytopes.dual_rays(rows, m)
    if not rays_m:
        return False, (), False
    ambient = []
    for y in rays_m:
        s = [Fraction(0)] * r
        for coeff, nv in zip(y, null):
            if coeff:
                for i in range(r):
                    s[i] += coeff * nv[i]
        ambient.append(tuple(s))
    return True, tuple(ambient), False


def enumerate_rays(J: MConvexSet, max_dim: int = DEFAULT_MAX_DIM,
                   node_budget: int = DEFAULT_NODE_BUDGET,
                   fixture_values: Optional[Sequence[Sequence]] = None):
    """Rays of the reduced space of M-convex directions on J.

    Returns (rays, complete).  The traversal walks the case split of every
    fully supported 3-term condition ("minimum attained twice"), maintaining
    an exact cone per branch and pruning empty ones; the rays of the leaf
    cones, mapped back and canonicalized, are the answer.  ``fixture_values``
    bypasses the traversal (rays are then verified but completeness is
    assumed, not certified, and the flag comes back False).
    """
    w = w_rowspace(J)
    npts = len(J.points)

    if fixture_values is not None:
        rays = []
        seen = set()
        for vec in fixture_values:
            if len(vec) != npts:
                raise ValueError("fixture ray has wrong length")
            canon = canonical_ray([Fraction(x) for x in vec], J, w)
            if canon is None:
                raise ValueError("fixture ray lies in the rescaling space")
            if canon in seen:
                raise ValueError("fixture rays are not pairwise non-equivalent")
            seen.add(canon)
            rays.append(MConvexFunction.from_vector(J, canon))
        return rays, False

    basis = complement_basis(J, w)
    r = len(basis)
    if r == 0:
        return [], True
    if r > max_dim:
        raise ResourceLimitError(
            f"reduced dimension {r} exceeds max_dim={max_dim}; "
            "supply fixture rays")

    point_form = [tuple(u[k] for u in basis) for k in range(npts)]
    index = J.point_index

    def pair_form(a: Point, b: Point) -> Tuple[Fraction, ...]:
        fa = point_form[index[a]]
        fb = point_form[index[b]]
        return tuple(x + y for x, y in zip(fa, fb))

    global_ineqs = set()
    branch_rels: Dict[frozenset, Tuple] = {}
    for rel in representations.three_term_relations(J):
        if not all(rel.supported_mask):
            continue
        forms = [pair_form(a, b) for a, b in rel.term_pairs]
        distinct = set(forms)
        if len(distinct) == 1:
            continue
        if len(distinct) == 2:
            # values (s, s, t): the minimum repeats iff t - s >= 0
            if forms[0] == forms[1]:
                s, t = forms[0], forms[2]
            elif forms[0] == forms[2]:
                s, t = forms[0], forms[1]
            else:
                s, t = forms[1], forms[0]
            diff = tuple(x - y for x, y in zip(t, s))
            global_ineqs.add(_canon_form(diff))
            continue
        branch_rels.setdefault(frozenset(forms), tuple(forms))
    branches = list(branch_rels.values())

    found: Dict[Tuple[Fraction, ...], MConvexFunction] = {}
    relations_cache = representations.three_term_relations(J)

    def record(s_vec: Tuple[Fraction, ...]):
        values = [Fraction(0)] * npts
        for coeff, u in zip(s_vec, basis):
            if coeff:
                for k in range(npts):
                    values[k] += coeff * u[k]
        canon = canonical_ray(values, J, w)
        if canon is None:
            raise AssertionError("leaf ray collapsed into the rescaling space")
        if canon in found:
            return
        fn = MConvexFunction.from_vector(J, canon, check=True,
                                         relations=relations_cache)
        found[canon] = fn

    visited = set()
    nodes = 0
    root_eq = linalg.RowSpace()
    stack = [(0, root_eq, frozenset(global_ineqs))]
    while stack:
        idx, eq_space, ineqs = stack.pop()
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(f"cone budget {node_budget} exceeded")
        eq_key = tuple(sorted(
            (piv, tuple(sorted(row.items()))) for piv, row in eq_space.pivots.items()))
        key = (idx, eq_key, ineqs)
        if key in visited:
            continue
        visited.add(key)
        nonzero, rays_here, lineal = _analyze_cone(eq_space, ineqs, r)
        if not nonzero:
            continue
        if idx == len(branches):
            if lineal:
                raise RuntimeError(
                    "reduced cone contains a line; the fan is not pointed")
            for s_vec in rays_here:
                record(s_vec)
            continue
        f0, f1, f2 = branches[idx]
        children = set()
        for a, b, c in ((f0, f1, f2), (f0, f2, f1), (f1, f2, f0)):
            eq = tuple(x - y for x, y in zip(a, b))
            lo = tuple(x - y for x, y in zip(c, a))
            child_eq = _clone_rowspace(eq_space)
            if any(eq):
                child_eq.add(linalg.dense_to_sparse(eq))
            child_ineqs = set(ineqs)
            if any(lo):
                child_ineqs.add(_canon_form(lo))
            child_key = (tuple(sorted(
                (piv, tuple(sorted(row.items())))
                for piv, row in child_eq.pivots.items())), frozenset(child_ineqs))
            if child_key in children:
                continue
            children.add(child_key)
            stack.append((idx + 1, child_eq, frozenset(child_ineqs)))

    ordered = [found[k] for k in sorted(found)]
    return ordered, True


def is_rigid(J: MConvexSet, max_dim: int = DEFAULT_MAX_DIM,
             node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Whether the reduced space of M-convex directions is a single point."""
    rays, complete = enumerate_rays(J, max_dim, node_budget)
    return complete and not rays


def is_fan_one_dimensional(J: MConvexSet, rays: Sequence[MConvexFunction],
                           complete: bool = True):
    """Whether the reduced fan consists of rays only (no 2-dimensional cone).

    Tests, for every unordered pair of the GIVEN representatives, that their
    sum is not M-convex; doubles of single rays are trivially in the fan.
    Returns True/False, or the string "unknown" when the ray data is not
    known to be complete.
    """
    if not complete:
        return "unknown"
    relations = representations.three_term_relations(J)
    fns = list(rays)
    for i in range(len(fns)):
        for j in range(i + 1, len(fns)):
            summed = {p: fns[i].values[p] + fns[j].values[p] for p in J.points}
            if is_m_convex_function(summed, J, relations):
                return False
    return True

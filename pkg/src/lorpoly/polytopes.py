"""Exact convex geometry for the point sets in play: double-description
cones, base polytopes, face lattices, and the face <-> point-subset
dictionary.

Everything is rational arithmetic.  The double-description core computes
extreme rays of {y : r.y >= 0} and doubles as both directions of hull
conversion: facets of cone(G) are the extreme rays of the cone dual to G.
Polytopes are handled through homogenization (p -> (p, 1)) after cutting
down to the linear span, so lower-dimensional hulls are exact too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .combinatorics import MConvexSet

DEFAULT_FACE_BUDGET = 2_000_000


class ResourceLimitError(RuntimeError):
    """A configured resource cap (faces, cones, dimension) was exceeded."""


def _primitive(vec) -> Tuple[int, ...]:
    """Scale a rational vector to integers with gcd 1 (sign preserved)."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


# -- double description ---------------------------------------------------------

def dual_rays(rows: Sequence[Sequence], dim: int) -> List[Tuple[int, ...]]:
    """Extreme rays of the pointed cone {y in Q^dim : r.y >= 0 for all rows}.

    The rows must span Q^dim (otherwise the cone contains a line and the
    extreme-ray description does not exist); a ValueError reports that case.
    Rays are primitive integer vectors.  Incremental double description with
    the combinatorial adjacency test.
    """
    rows = [tuple(Fraction(x) for x in r) for r in rows]
    if any(len(r) != dim for r in rows):
        raise ValueError("constraint rows must have length dim")
    space = linalg.RowSpace()
    init_idx, rest_idx = [], []
    for idx, r in enumerate(rows):
        if len(init_idx) < dim and space.add(linalg.dense_to_sparse(r)):
            init_idx.append(idx)
        else:
            rest_idx.append(idx)
    if len(init_idx) < dim:
        raise ValueError("cone has lineality: constraints do not span")

    # simplicial start: rays dual to the chosen independent rows
    base = [rows[i] for i in init_idx]
    rays: List[Tuple[int, ...]] = []
    for j in range(dim):
        e = [Fraction(0)] * dim
        e[j] = Fraction(1)
        sol = linalg.solve_dense(base, e)
        rays.append(_primitive(sol))

    # zero-set masks over the processed constraints, in processing order
    order = init_idx + rest_idx
    processed = [rows[i] for i in order[:dim]]
    masks = []
    for ray in rays:
        m = 0
        for bit, r in enumerate(processed):
            if sum(a * b for a, b in zip(r, ray)) == 0:
                m |= 1 << bit
        masks.append(m)

    for idx in order[dim:]:
        c = rows[idx]
        bit = 1 << len(processed)
        dots = [sum(a * b for a, b in zip(c, ray)) for ray in rays]
        keep_rays, keep_masks = [], []
        pos, neg = [], []
        for ray, mask, dot in zip(rays, masks, dots):
            if dot > 0:
                pos.append((ray, mask, dot))
                keep_rays.append(ray)
                keep_masks.append(mask)
            elif dot == 0:
                keep_rays.append(ray)
                keep_masks.append(mask | bit)
            else:
                neg.append((ray, mask, dot))
        if neg and pos:
            all_masks = masks  # adjacency is tested against the pre-cut cone
            need = dim - 2     # adjacent rays share >= dim-2 active constraints
            for rp, mp, dp in pos:
                for rn, mn, dn in neg:
                    common = mp & mn
                    if common.bit_count() < max(need, 0):
                        continue
                    if any(m != mp and m != mn and (m & common) == common
                           for m in all_masks):
                        continue
                    new = tuple(dp * b - dn * a for a, b in zip(rp, rn))
                    new = _primitive(new)
                    m = 0
                    for b2, r2 in enumerate(processed):
                        if sum(x * y for x, y in zip(r2, new)) == 0:
                            m |= 1 << b2
                    keep_rays.append(new)
                    keep_masks.append(m | bit)
        processed.append(c)
        rays, masks = keep_rays, keep_masks
        if not rays:
            break
    return rays


def cone_facets(generators: Sequence[Sequence]) -> List[Tuple[int, ...]]:
    """Inward facet normals of the pointed cone spanned by the generators.

    Generators may lie in a proper subspace; normals are returned in ambient
    coordinates (valid together with the span's implicit equalities).
    """
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    ambient = len(gens[0])
    pivots = linalg.echelon_sparse(linalg.dense_to_sparse(g) for g in gens)
    pivot_cols = sorted(pivots)
    k = len(pivot_cols)
    if k == 0:
        return []
    # coordinates in the span: restriction to the pivot columns (the RREF
    # basis is the identity there)
    coords = [tuple(g[c] for c in pivot_cols) for g in gens]
    normals = dual_rays(coords, k)
    out = []
    for nm in normals:
        amb = [0] * ambient
        for c, v in zip(pivot_cols, nm):
            amb[c] = v
        out.append(tuple(amb))
    return out


# -- polytopes -------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope:
    """Exact convex hull of a finite point set (the generators).

    Facets are homogeneous inward normals acting on (p, 1); masks cache the
    generator/facet incidences as bitmasks for the lattice algorithms.
    """
    ambient: int
    points: Tuple[Tuple[int, ...], ...]
    dim: int
    facets: Tuple[Tuple[int, ...], ...]          # inward normals on (p, 1)
    facet_point_masks: Tuple[int, ...]           # per facet: generators on it
    point_facet_masks: Tuple[int, ...]           # per generator: facets through it
    vertices: Tuple[int, ...]                    # indices of extreme generators

    def vertex_points(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.points[i] for i in self.vertices)


def polytope_of_points(points: Sequence[Sequence[int]]) -> LatticePolytope:
    """Exact hull of integer (or rational) points via homogenized DD."""
    pts = tuple(tuple(p) for p in points)
    if not pts:
        raise ValueError("empty point set has no polytope")
    ambient = len(pts[0])
    if len(pts) == 1:
        return LatticePolytope(ambient, pts, 0, (), (), (0,), (0,))
    lifted = [p + (1,) for p in pts]
    pivots = linalg.echelon_sparse(linalg.dense_to_sparse(g) for g in lifted)
    dim = len(pivots) - 1
    normals = cone_facets(lifted)
    facets, fmasks = [], []
    for nm in normals:
        mask = 0
        for i, g in enumerate(lifted):
            val = sum(a * b for a, b in zip(nm, g))
            if val < 0:
                raise AssertionError("facet normal fails on a generator")
            if val == 0:
                mask |= 1 << i
        if mask == 0:
            raise AssertionError("facet normal touches no generator")
        facets.append(nm)
        fmasks.append(mask)
    pmasks = []
    for i in range(len(pts)):
        m = 0
        for f, fm in enumerate(fmasks):
            if fm >> i & 1:
                m |= 1 << f
        pmasks.append(m)
    # a generator is a vertex iff the facets through it pin down only itself
    verts = []
    for i in range(len(pts)):
        mi = pmasks[i]
        alone = all(j == i or (pmasks[j] & mi) != mi for j in range(len(pts)))
        if alone:
            verts.append(i)
    return LatticePolytope(ambient, pts, dim, tuple(facets), tuple(fmasks),
                           tuple(pmasks), tuple(verts))


def base_polytope(J: MConvexSet) -> LatticePolytope:
    """Convex hull of the points of J (in the canonical point order)."""
    P = polytope_of_points(J.points)
    if J.is_matroid() and len(P.vertices) != len(J.points):
        raise AssertionError("0/1 generators must all be vertices")
    return P


# -- face lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    vertex_mask: int        # over P.vertices (positional bits)
    facet_mask: int         # facets containing the face
    dim: int


@dataclass(frozen=True)
class FaceLattice:
    polytope: LatticePolytope
    faces: Tuple[Face, ...]
    f_vector: Tuple[int, ...]


def _affine_rank(points: List[Tuple[int, ...]]) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return linalg.rank_int(rows)


def face_lattice(P: LatticePolytope,
                 face_budget: int = DEFAULT_FACE_BUDGET) -> FaceLattice:
    """All nonempty faces (the polytope included) by incidence closure.

    Breadth-first from the full face: children are closures of (face ∩
    facet).  Validates the Euler–Poincaré relation before returning.
    """
    if P.dim == 0:
        full = Face((1 << len(P.vertices)) - 1, 0, 0)
        return FaceLattice(P, (full,), (1,))
    nverts = len(P.vertices)
    vert_pts = P.vertex_points()
    # incidences restricted to vertices
    vfacet = []   # per vertex: facet mask
    for vi, gi in enumerate(P.vertices):
        vfacet.append(P.point_facet_masks[gi])
    fvert = []    # per facet: vertex mask
    for f in range(len(P.facets)):
        m = 0
        for vi in range(nverts):
            if vfacet[vi] >> f & 1:
                m |= 1 << vi
        fvert.append(m)

    def closure_facets(vmask: int) -> int:
        m = (1 << len(P.facets)) - 1
        rest = vmask
        while rest:
            low = rest & -rest
            m &= vfacet[low.bit_length() - 1]
            rest ^= low
        return m

    def dim_of(vmask: int) -> int:
        pts = [vert_pts[i] for i in _bits(vmask)]
        return _affine_rank(pts)

    full_mask = (1 << nverts) - 1
    start = Face(full_mask, closure_facets(full_mask), P.dim)
    seen: Dict[int, Face] = {start.vertex_mask: start}
    frontier = [start]
    while frontier:
        nxt = []
        for face in frontier:
            for f in range(len(P.facets)):
                if face.facet_mask >> f & 1:
                    continue
                nv = face.vertex_mask & fvert[f]
                if nv == 0 or nv in seen:
                    continue
                nf = closure_facets(nv)
                child = Face(nv, nf, dim_of(nv))
                seen[nv] = child
                nxt.append(child)
                if len(seen) > face_budget:
                    raise ResourceLimitError(
                        f"face budget {face_budget} exceeded "
                        f"(partial count {len(seen)})")
        frontier = nxt
    faces = tuple(sorted(seen.values(), key=lambda f: (f.dim, f.vertex_mask)))
    fvec = [0] * (P.dim + 1)
    for f in faces:
        fvec[f.dim] += 1
    if P.dim >= 1:
        alt = sum((-1) ** i * fvec[i] for i in range(P.dim))
        if alt != 1 - (-1) ** P.dim:
            raise AssertionError(
                f"Euler–Poincaré violation: f={tuple(fvec)}, alt sum {alt}")
    return FaceLattice(P, faces, tuple(fvec))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def face_points(P: LatticePolytope, facet_mask: int) -> Tuple[int, ...]:
    """Indices of ALL generators lying on the face fixed by these facets."""
    m = (1 << len(P.points)) - 1
    for f in _bits(facet_mask):
        m &= P.facet_point_masks[f]
    return tuple(_bits(m))


def face_to_subset(P: LatticePolytope, face: Face, J: MConvexSet) -> MConvexSet:
    """The sub-M-convex set of the points of J on a face of BP_J."""
    idx = face_points(P, face.facet_mask)
    pts = [P.points[i] for i in idx]
    return MConvexSet(J.n, J.d, pts, check=False)


def is_face_points(P: LatticePolytope, pts: Sequence[Tuple[int, ...]]) -> bool:
    """Whether a subset of P's generators is exactly the point set of a face.

    Decided exactly by incidence closure: the smallest face containing the
    subset must contain no further generators.
    """
    index = {p: i for i, p in enumerate(P.points)}
    try:
        sub_idx = [index[tuple(p)] for p in pts]
    except KeyError:
        return False
    common = (1 << len(P.facets)) - 1
    for i in sub_idx:
        common &= P.point_facet_masks[i]
    recovered = set(face_points(P, common))
    return recovered == set(sub_idx)


def is_face(J_sub: MConvexSet, J: MConvexSet,
            P: Optional[LatticePolytope] = None) -> bool:
    """Whether BP_{J_sub} is a face of BP_J (point sets must nest)."""
    if P is None:
        P = base_polytope(J)
    return is_face_points(P, J_sub.points)

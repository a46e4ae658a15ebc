"""Initial subsets and Euler characteristics of closed Lorentzian strata.

The closed stratum of a polynomial with support J is stratified by initial
subsets J' (faces of BP_J and faces of cells of the regular subdivisions
induced by the boundary rays).  When the reduced fan of directions consists
of rays only, the Euler characteristic is

    chi = sum_i (-1)^i * ( g_i + sum_j f_ij * (1 - j) )

where g_i counts non-face initial subsets of dimension i and f_ij counts
dimension-i faces whose restricted ray images span j distinct rays in the
reduced space of J'.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg, polytopes, representations
from .combinatorics import MConvexSet
from .dressian import (MConvexFunction, complement_basis, enumerate_rays,
                       induced_subdivision, is_fan_one_dimensional,
                       reduced_ray_key, w_rowspace)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class InitialSubset:
    subset: MConvexSet
    dim: int
    is_face: bool
    source: str            # "trivial" or "subdivision-<ray index>"


@dataclass
class EulerReport:
    g: List[int]
    f: List[List[int]]
    chi: int
    rays: int
    complete: bool
    runtime_ms: int
    note: Optional[str] = None

    def to_json(self) -> dict:
        out = {"g": list(self.g), "f": [list(r) for r in self.f],
               "chi": self.chi, "rays": self.rays, "complete": self.complete,
               "runtime_ms": self.runtime_ms}
        if self.note:
            out["note"] = self.note
        return out


def _points_rowspace(points: Sequence[Point], n: int) -> linalg.RowSpace:
    space = linalg.RowSpace()
    for i in range(n):
        space.add({k: Fraction(p[i]) for k, p in enumerate(points) if p[i]})
    return space


def _lattice_point_sets(P: polytopes.LatticePolytope,
                        lattice: polytopes.FaceLattice) -> List[Tuple[Point, ...]]:
    out = []
    for face in lattice.faces:
        idx = polytopes.face_points(P, face.facet_mask)
        out.append((tuple(P.points[i] for i in idx), face.dim))
    return out


def initial_subsets(J: MConvexSet, rays: Sequence[MConvexFunction],
                    face_budget: int = polytopes.DEFAULT_FACE_BUDGET
                    ) -> List[InitialSubset]:
    """All initial subsets of J, deduped by point set.

    These are the faces of BP_J together with the faces of every cell of the
    subdivision induced by each supplied ray.
    """
    P = polytopes.base_polytope(J)
    lattice = polytopes.face_lattice(P, face_budget)
    seen: Dict[Tuple[Point, ...], InitialSubset] = {}
    for pts, dim in _lattice_point_sets(P, lattice):
        sub = MConvexSet(J.n, J.d, pts, check=False)
        seen[pts] = InitialSubset(sub, dim, True, "trivial")
    for ridx, ray in enumerate(rays):
        subdivision = induced_subdivision(J, ray)
        for cell in subdivision:
            Pc = polytopes.polytope_of_points(cell)
            cell_lattice = polytopes.face_lattice(Pc, face_budget)
            for pts, dim in _lattice_point_sets(Pc, cell_lattice):
                if pts in seen:
                    continue
                sub = MConvexSet(J.n, J.d, pts, check=False)
                face_flag = polytopes.is_face_points(P, pts)
                seen[pts] = InitialSubset(sub, dim, face_flag,
                                          f"subdivision-{ridx}")
    return sorted(seen.values(), key=lambda s: (s.dim, s.subset.points))


def _restricted_ray_count(pts: Sequence[Point], n: int,
                          rays: Sequence[MConvexFunction]) -> int:
    """Distinct nonzero canonical ray restrictions modulo the rescaling
    space of the subset (zero projections land in the lineality and are
    dropped)."""
    if not rays:
        return 0
    w = _points_rowspace(pts, n)
    keys = set()
    for ray in rays:
        vec = [ray.values[p] for p in pts]
        key = reduced_ray_key(vec, w, len(pts))
        if key is not None:
            keys.add(key)
    return len(keys)


def tallies(J: MConvexSet, rays: Sequence[MConvexFunction],
            face_budget: int = polytopes.DEFAULT_FACE_BUDGET
            ) -> Tuple[List[int], List[List[int]]]:
    """The (g_i) and (f_ij) tallies over all initial subsets.

    Requires the reduced fan spanned by the supplied rays to be
    one-dimensional (pairwise sums of representatives must not be M-convex).
    """
    verdict = is_fan_one_dimensional(J, rays, complete=True)
    if verdict is not True:
        raise ValueError("the reduced fan is not one-dimensional; "
                         "the tally formula does not apply")
    subsets = initial_subsets(J, rays, face_budget)
    top = max(s.dim for s in subsets)
    m = len(rays)
    g = [0] * (top + 1)
    f = [[0] * (m + 1) for _ in range(top + 1)]
    for s in subsets:
        if not s.is_face:
            g[s.dim] += 1
            continue
        j = _restricted_ray_count(s.subset.points, J.n, rays)
        f[s.dim][j] += 1
    if sum(g) + sum(map(sum, f)) != len(subsets):
        raise AssertionError("tally total does not match the subset count")
    face_euler = sum((-1) ** s.dim for s in subsets if s.is_face)
    if face_euler != 1:
        raise AssertionError(
            f"face Euler sum is {face_euler}, expected 1 for a polytope")
    return g, f


def euler_characteristic(J: MConvexSet, rays: Sequence[MConvexFunction],
                         complete: bool = True,
                         face_budget: int = polytopes.DEFAULT_FACE_BUDGET
                         ) -> EulerReport:
    """Euler characteristic of the closed Lorentzian stratum of J."""
    t0 = time.monotonic()
    g, f = tallies(J, rays, face_budget)
    chi = 0
    for i in range(len(g)):
        chi += (-1) ** i * (g[i] + sum(fij * (1 - j)
                                       for j, fij in enumerate(f[i])))
    ms = int((time.monotonic() - t0) * 1000)
    note = None if complete else "conditional on ray completeness"
    return EulerReport(g, f, chi, len(rays), complete, ms, note)


def stratum_euler(J: MConvexSet, max_dim: int = 6,
                  node_budget: int = 1_000_000,
                  fixture_values: Optional[Sequence[Sequence]] = None,
                  face_budget: int = polytopes.DEFAULT_FACE_BUDGET
                  ) -> EulerReport:
    """Full pipeline: enumerate rays, then compute the Euler characteristic."""
    t0 = time.monotonic()
    rays, complete = enumerate_rays(J, max_dim, node_budget, fixture_values)
    report = euler_characteristic(J, rays, complete, face_budget)
    report.runtime_ms = int((time.monotonic() - t0) * 1000)
    return report


def rigid_euler(J: MConvexSet, max_dim: int = 6,
                node_budget: int = 1_000_000) -> int:
    """Euler characteristic shortcut for rigid J (certified; always 1).

    The initial subsets of a rigid J are exactly the faces of BP_J, and the
    alternating sum over the faces of a polytope (the polytope included) is
    1; this sum is recomputed as a cross-check.
    """
    rays, complete = enumerate_rays(J, max_dim, node_budget)
    if rays or not complete:
        raise ValueError("J is not rigid (or rigidity could not be certified)")
    subsets = initial_subsets(J, [])
    total = sum((-1) ** s.dim for s in subsets)
    if total != 1:
        raise AssertionError(f"face Euler sum is {total}, expected 1")
    return 1


# -- the two-orbit stable-space formula -------------------------------------------

def _scaled_int_vector(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    return tuple(int(x * denom) for x in vec)


def injectivity_profile(M: MConvexSet,
                        face_budget: int = polytopes.DEFAULT_FACE_BUDGET
                        ) -> Tuple[List[int], List[int]]:
    """Per-dimension face counts of BP_M and counts of faces on which the
    reduced restriction map fails to be injective.

    Requires reduced_dim(M) = 1: non-injectivity then means the single
    reduced direction restricts into the rescaling space of the face.
    """
    basis = complement_basis(M)
    if len(basis) != 1:
        raise ValueError("the reduced space must be one-dimensional")
    v0 = _scaled_int_vector(basis[0])
    P = polytopes.base_polytope(M)
    lattice = polytopes.face_lattice(P, face_budget)
    top = lattice.polytope.dim
    f_vec = [0] * (top + 1)
    noninj = [0] * (top + 1)
    for face in lattice.faces:
        idx = polytopes.face_points(P, face.facet_mask)
        f_vec[face.dim] += 1
        rows = [[P.points[k][i] for k in idx] for i in range(M.n)]
        vrow = [v0[k] for k in idx]
        if linalg.rank_int(rows) == linalg.rank_int(rows + [vrow]):
            noninj[face.dim] += 1
    return f_vec, noninj


def two_orbit_stable_euler(M: MConvexSet,
                           face_budget: int = polytopes.DEFAULT_FACE_BUDGET
                           ) -> int:
    """Euler characteristic of the closed stable stratum under the two-orbit
    hypothesis.

    Preconditions: M rigid and reduced_dim(M) = 1.  The hypothesis that the
    stable stratum consists of exactly two rescaling orbits is not machine
    checkable and is assumed.  By inclusion-exclusion over the two orbit
    closures, chi = 2 - sum over non-injective faces F of (-1)^{dim F}.
    """
    if not representations.reduced_dim(M) == 1:
        raise ValueError("the reduced space must be one-dimensional")
    rays, complete = enumerate_rays(M)
    if rays or not complete:
        raise ValueError("M is not rigid (or rigidity could not be certified)")
    _, noninj = injectivity_profile(M, face_budget)
    overlap = sum((-1) ** d * c for d, c in enumerate(noninj))
    return 2 - overlap

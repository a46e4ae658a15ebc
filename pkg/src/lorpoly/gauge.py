"""Star-shaped ball model for the space of Lorentzian polynomials on J.

In log-coordinates the space is strongly star-shaped around the base point
x_* = log of the factorial-normalized generating polynomial, inside the
binomial subspace V_J.  The gauge

    psi(x) = inf { lam > 0 : x_* + (x - x_*)/lam  is Lorentzian }

is computed by bisection with the Lorentzian tester as membership oracle,
and the mutually inverse maps v -> v/(1 - psi(v) + |v|) and
y -> y/(1 + psi(y) - |y|) identify the space with a subset of the unit ball
of V_J / R*1 under the sup norm.  Everything here runs in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg, representations
from .combinatorics import MConvexSet
from .lorentzian import Polynomial, factorial_of, is_lorentzian

DEFAULT_TOL = 1e-6
DEFAULT_PROBE = 1e3


@dataclass
class GaugeValue:
    value: float
    probe_limited: bool = False     # membership held all the way to the probe bound

    def __float__(self) -> float:
        return self.value


@dataclass
class BallPoint:
    domain: MConvexSet
    t: float
    coords: Tuple[float, ...]
    psi: float

    def __post_init__(self):
        if self.norm > 1 + 1e-9:
            raise ValueError(f"ball coordinates have norm {self.norm} > 1")

    @property
    def norm(self) -> float:
        return max((abs(c) for c in self.coords), default=0.0)

    def to_json(self) -> dict:
        return {"coordinates": list(self.coords), "psi": self.psi,
                "norm": self.norm, "t": self.t}


def _support_set(f: Polynomial) -> MConvexSet:
    return MConvexSet(f.n, f.d, f.support(), check=False)


def _base_logvec(J: MConvexSet, t: float) -> List[float]:
    return [-float(t) * math.log(float(factorial_of(p))) for p in J.points]


def _member(J: MConvexSet, logvec: Sequence[float]) -> bool:
    """Lorentzian membership of the polynomial with these log-coefficients.

    The vector is shifted so the largest entry is 0 (a constant rescaling);
    entries that underflow to coefficient 0 drop out of the support, which
    matches the boundary limit the ray is converging to.
    """
    shift = max(logvec)
    coeffs = {p: math.exp(v - shift) for p, v in zip(J.points, logvec)}
    f = Polynomial(J.n, J.d, coeffs)
    return bool(is_lorentzian(f))


def _psi_direction(J: MConvexSet, xstar: Sequence[float], v: Sequence[float],
                   tol: float, probe: float) -> GaugeValue:
    """Gauge of the direction v relative to the base point (homogeneous)."""
    if all(x == 0 for x in v):
        return GaugeValue(0.0, True)

    def member(lam: float) -> bool:
        return _member(J, [xs + vi / lam for xs, vi in zip(xstar, v)])

    lam_min = 1.0 / probe
    if member(1.0):
        # walk a halving ladder toward the probe bound; the first failure
        # brackets the gauge, and full persistence is the probe-limited 0
        lam = 1.0
        while lam > lam_min:
            nxt = max(lam / 2.0, lam_min)
            if not member(nxt):
                lo, hi = nxt, lam
                break
            lam = nxt
        else:
            return GaugeValue(0.0, True)
    else:
        hi = 1.0
        while not member(hi):
            lo = hi
            hi *= 2.0
            if hi > 1e9:
                raise ValueError("gauge bisection found no Lorentzian scale")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if member(mid):
            hi = mid
        else:
            lo = mid
    return GaugeValue(hi, False)


def _log_coeffs(f: Polynomial, J: MConvexSet) -> List[float]:
    out = []
    for p in J.points:
        c = float(f.coefficient(p))
        if c <= 0:
            raise ValueError("coefficients must be positive on the support")
        out.append(math.log(c))
    return out


def gauge_psi(f: Polynomial, t: float = 1.0, tol: float = DEFAULT_TOL,
              probe: float = DEFAULT_PROBE) -> GaugeValue:
    """The gauge of log f, measured from the normalized base point.

    0 with the probe-limited flag means the ray stayed Lorentzian out to the
    probe bound (exact zero cannot be certified numerically; a rational
    direction can be tested exactly for M-concavity instead).
    """
    verdict = is_lorentzian(f)
    if not verdict:
        raise ValueError(f"polynomial is not Lorentzian ({verdict.reason})")
    J = _support_set(f)
    xstar = _base_logvec(J, t)
    x = _log_coeffs(f, J)
    v = [a - b for a, b in zip(x, xstar)]
    return _psi_direction(J, xstar, v, tol, probe)


def _ones_complement_basis(J: MConvexSet) -> List[Tuple[Fraction, ...]]:
    """Deterministic basis of a complement of R*1 inside V_J."""
    m = len(J.points)
    ones = linalg.RowSpace()
    ones.add({k: Fraction(1) for k in range(m)})
    span = linalg.RowSpace()
    out: List[Tuple[Fraction, ...]] = []
    for vec in representations.v_space(J).basis:
        red = ones.reduce(linalg.dense_to_sparse(vec))
        if red and span.add(dict(red)):
            out.append(tuple(red.get(k, Fraction(0)) for k in range(m)))
    return out


def ball_coordinates(f: Polynomial, t: float = 1.0, tol: float = DEFAULT_TOL,
                     probe: float = DEFAULT_PROBE) -> BallPoint:
    """Coordinates of f in the unit-ball model of its Lorentzian space.

    log f - x_* is expressed in a fixed complement basis of R*1 in V_J (the
    constant component is projective slack and is dropped) and scaled by
    1/(1 - psi + sup-norm).
    """
    verdict = is_lorentzian(f)
    if not verdict:
        raise ValueError(f"polynomial is not Lorentzian ({verdict.reason})")
    J = _support_set(f)
    xstar = _base_logvec(J, t)
    x = _log_coeffs(f, J)
    v = [a - b for a, b in zip(x, xstar)]
    basis = _ones_complement_basis(J)
    cols = [[1.0] * len(J.points)] + [[float(x) for x in u] for u in basis]
    B = np.array(cols, dtype=float).T
    sol, *_ = np.linalg.lstsq(B, np.array(v, dtype=float), rcond=None)
    c = sol[1:]
    psi = float(_psi_direction(J, xstar, v, tol, probe))
    norm = float(max(np.abs(c), default=0.0)) if c.size else 0.0
    denom = 1.0 - psi + norm
    if denom <= 0:
        raise ValueError("degenerate gauge denominator")
    coords = tuple(float(ci) / denom for ci in c)
    return BallPoint(J, t, coords, psi)


def inverse_ball(b: BallPoint, tol: float = DEFAULT_TOL,
                 probe: float = DEFAULT_PROBE) -> Polynomial:
    """The polynomial whose ball coordinates are b (up to rescaling).

    Raises a domain error when b has norm beyond 1 or the recovered
    coefficient vector is not Lorentzian.
    """
    J = b.domain
    ny = b.norm
    if ny > 1 + 1e-9:
        raise ValueError("point lies outside the closed unit ball")
    xstar = _base_logvec(J, b.t)
    basis = _ones_complement_basis(J)
    if len(b.coords) != len(basis):
        raise ValueError("coordinate length does not match the model dimension")
    m = len(J.points)
    v_amb = [0.0] * m
    for yi, u in zip(b.coords, basis):
        if yi:
            for k in range(m):
                v_amb[k] += yi * float(u[k])
    psi_y = float(_psi_direction(J, xstar, v_amb, tol, probe))
    denom = 1.0 + psi_y - ny
    if denom <= 0:
        raise ValueError("degenerate gauge denominator")
    logvec = [xs + vi / denom for xs, vi in zip(xstar, v_amb)]
    shift = max(logvec)
    f = Polynomial(J.n, J.d, {p: math.exp(lv - shift)
                              for p, lv in zip(J.points, logvec)})
    if not is_lorentzian(f):
        raise ValueError("point is outside the image of the Lorentzian space")
    return f

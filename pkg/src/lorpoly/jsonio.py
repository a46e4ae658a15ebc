"""JSON readers and writers for the file formats the CLI speaks.

Scalars: integers and "p/q" strings parse exactly (Fraction); floats stay
floats; {"re": .., "im": ..} is a Gaussian rational and {"a": .., "b": ..}
is (a + b*sqrt(5))/2.  Polynomials carry a convention field — "normalized"
coefficients are the c_alpha of sum c_alpha x^alpha / alpha!, "monomial"
coefficients are multiplied by alpha! on load.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .combinatorics import MConvexSet, build_named
from .dressian import MConvexFunction
from .lorentzian import (ComplexRational, GoldenRational, Polynomial,
                         factorial_of)

Point = Tuple[int, ...]


def parse_scalar(v):
    if isinstance(v, bool):
        raise ValueError(f"not a number: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        return Fraction(v)           # accepts "p/q" and "p"
    if isinstance(v, dict):
        if set(v) == {"re", "im"}:
            return ComplexRational(Fraction(str(v["re"])), Fraction(str(v["im"])))
        if set(v) == {"a", "b"}:
            a, b = Fraction(str(v["a"])), Fraction(str(v["b"]))
            return GoldenRational(a / 2, b / 2)
        raise ValueError(f"unrecognized scalar object {v!r}")
    raise ValueError(f"unrecognized scalar {v!r}")


def dump_scalar(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, ComplexRational):
        return {"re": dump_scalar(v.re), "im": dump_scalar(v.im)}
    if isinstance(v, GoldenRational):
        return {"a": dump_scalar(2 * v.p), "b": dump_scalar(2 * v.q)}
    raise ValueError(f"cannot serialize {v!r}")


def _point(seq) -> Point:
    return tuple(int(x) for x in seq)


def load_mconvex(data: dict) -> MConvexSet:
    if "kind" in data:
        return build_named(data["kind"], **data.get("params", {}))
    try:
        n, d = int(data["n"]), int(data["d"])
        pts = [_point(p) for p in data["points"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed M-convex set object: {exc}") from exc
    return MConvexSet(n, d, pts)


def dump_mconvex(J: MConvexSet) -> dict:
    return {"n": J.n, "d": J.d, "points": [list(p) for p in J.points]}


def load_polynomial(data: dict) -> Polynomial:
    try:
        n, d = int(data["n"]), int(data["d"])
        terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polynomial object: {exc}") from exc
    convention = data.get("convention", "normalized")
    if convention not in ("normalized", "monomial"):
        raise ValueError(f"unknown convention {convention!r}")
    coeffs = {}
    for term in terms:
        alpha = _point(term["alpha"])
        c = parse_scalar(term["coeff"])
        if convention == "monomial":
            c = c * factorial_of(alpha)
        if alpha in coeffs:
            raise ValueError(f"duplicate term for {alpha}")
        coeffs[alpha] = c
    return Polynomial(n, d, coeffs)


def dump_polynomial(f: Polynomial) -> dict:
    return {"n": f.n, "d": f.d, "convention": "normalized",
            "terms": [{"alpha": list(p), "coeff": dump_scalar(c)}
                      for p, c in sorted(f.coeffs.items())]}


def load_values(data: dict, J: MConvexSet) -> Dict[Point, object]:
    """A points -> values map ({"points": [...], "values": [...]})."""
    try:
        pts = [_point(p) for p in data["points"]]
        vals = [parse_scalar(v) for v in data["values"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed value map: {exc}") from exc
    if len(pts) != len(vals):
        raise ValueError("points and values have different lengths")
    rho = dict(zip(pts, vals))
    if len(rho) != len(pts):
        raise ValueError("duplicate points in value map")
    if set(rho) != set(J.points):
        raise ValueError("value map is not aligned with the point set")
    return rho


def load_rays(data, J: MConvexSet) -> List[MConvexFunction]:
    """Rays as [{"values": [...]}] aligned with the lex-sorted points of J."""
    rays = []
    for i, entry in enumerate(data):
        vals = [parse_scalar(v) for v in entry["values"]]
        if len(vals) != len(J.points):
            raise ValueError(f"ray {i} has {len(vals)} values, "
                             f"expected {len(J.points)}")
        rays.append(MConvexFunction.from_vector(J, vals))
    return rays


def dump_rays(rays: Sequence[MConvexFunction]) -> list:
    return [{"values": [dump_scalar(v) for v in r.vector()]} for r in rays]


def read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc

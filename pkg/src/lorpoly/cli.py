"""Command-line front end: one JSON report per invocation.

Exit codes: 0 success (property true for the check-* commands), 1 property
false, 2 input error, 3 resource cap exceeded, 4 internal assertion failure.
The JSON report goes to stdout (or --out); a one-line human summary goes to
stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Tuple

from . import __version__
from . import combinatorics, dressian, euler, gauge, hyperfield, jsonio
from . import lorentzian, polytopes, representations
from .polytopes import ResourceLimitError


def _parse_q(text: str):
    if text in ("inf", "infinity", "oo"):
        return math.inf
    q = Fraction(text)
    return q if q.denominator != 1 else int(q)


def _coerce_mode(f: lorentzian.Polynomial, mode: str) -> lorentzian.Polynomial:
    if mode == "float":
        return lorentzian.Polynomial(
            f.n, f.d, {p: float(c) for p, c in f.coeffs.items()})
    if mode == "exact" and f.mode != "exact":
        raise ValueError("--mode exact requires exact (rational) coefficients")
    return f


def _jsonable_witness(witness):
    if witness is None:
        return None
    return [list(w) if isinstance(w, tuple) else w for w in witness]


def _verdict_payload(v: lorentzian.LorentzianVerdict) -> dict:
    out = {"lorentzian": v.ok}
    if v.reason:
        out["reason"] = v.reason
    if v.witness is not None:
        out["witness"] = _jsonable_witness(v.witness)
    if v.marginal:
        out["marginal"] = True
    return out


# -- command handlers (payload, property-verdict-or-None) --------------------------

def cmd_check_mconvex(args) -> Tuple[dict, Optional[bool]]:
    data = jsonio.read_json(args.set)
    if "kind" in data:
        J = jsonio.load_mconvex(data)
        return {"m_convex": True, "witness": None}, True
    try:
        n, d = int(data["n"]), int(data["d"])
        pts = [tuple(int(x) for x in p) for p in data["points"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed point-set object: {exc}") from exc
    ok, witness = combinatorics.is_m_convex(pts, n, d)
    payload = {"m_convex": ok, "witness": _jsonable_witness(witness)}
    return payload, ok


def cmd_check_null(args) -> Tuple[dict, Optional[bool]]:
    data = jsonio.read_json(args.values)
    values = [jsonio.parse_scalar(v) for v in data["values"]]
    q = _parse_q(args.q)
    ok = hyperfield.is_null(values, q)
    return {"null": ok, "q": args.q}, ok


def cmd_check_rep(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    rho = jsonio.load_values(jsonio.read_json(args.rep), J)
    q = _parse_q(args.q)
    if args.strong:
        ok = representations.is_strong_rep(rho, J, q)
    else:
        ok = representations.is_weak_rep(rho, J, q)
    return {"representation": ok, "q": args.q,
            "strength": "strong" if args.strong else "weak"}, ok


def cmd_check_lorentzian(args) -> Tuple[dict, Optional[bool]]:
    f = _coerce_mode(jsonio.load_polynomial(jsonio.read_json(args.poly)),
                     args.mode)
    verdict = (lorentzian.is_strictly_lorentzian(f) if args.strict
               else lorentzian.is_lorentzian(f))
    return _verdict_payload(verdict), verdict.ok


def cmd_tutte_rank(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    return {"tutte_rank": representations.tutte_rank(J),
            "reduced_dim": representations.reduced_dim(J)}, None


def cmd_dressian_rays(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    rays, complete = dressian.enumerate_rays(J, args.max_dim, args.budget)
    fan = dressian.is_fan_one_dimensional(J, rays, complete)
    return {"rays": jsonio.dump_rays(rays), "count": len(rays),
            "complete": complete, "fan_one_dimensional": fan}, None


def cmd_subdivide(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    vals = jsonio.load_values(jsonio.read_json(args.rep), J)
    nu = dressian.MConvexFunction(J, vals)
    sub = dressian.induced_subdivision(J, nu)
    return {"cells": [[list(p) for p in cell] for cell in sub],
            "count": len(sub)}, None


def cmd_faces(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    P = polytopes.base_polytope(J)
    lattice = polytopes.face_lattice(P, args.face_budget)
    return {"dim": P.dim, "f_vector": lattice.f_vector,
            "facets": len(P.facets)}, None


def cmd_euler(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    if args.rays:
        supplied = jsonio.read_json(args.rays)
        fixture = [[jsonio.parse_scalar(v) for v in entry["values"]]
                   for entry in supplied]
        rays, complete = dressian.enumerate_rays(J, fixture_values=fixture)
    else:
        rays, complete = dressian.enumerate_rays(J, args.max_dim, args.budget)
    report = euler.euler_characteristic(J, rays, complete, args.face_budget)
    return report.to_json(), None


def cmd_stable_euler(args) -> Tuple[dict, Optional[bool]]:
    J = jsonio.load_mconvex(jsonio.read_json(args.matroid))
    f_vec, noninj = euler.injectivity_profile(J, args.face_budget)
    chi = euler.two_orbit_stable_euler(J, args.face_budget)
    return {"chi": chi, "f_vector": f_vec, "noninjective": noninj,
            "assumption": "stable stratum consists of two rescaling orbits "
                          "(not machine-checked)"}, None


def cmd_grassmann(args) -> Tuple[dict, Optional[bool]]:
    rows = jsonio.read_json(args.matrix)
    matrix = [[jsonio.parse_scalar(v) for v in row] for row in rows]
    t = float(args.t) if "." in args.t else int(args.t)
    f = lorentzian.grassmann_map(matrix, t)
    return jsonio.dump_polynomial(f), None


def cmd_betsy(args) -> Tuple[dict, Optional[bool]]:
    t = float(args.t) if "." in args.t else int(args.t)
    f = lorentzian.betsy_polynomial(t)
    return jsonio.dump_polynomial(f), None


def cmd_ball_coords(args) -> Tuple[dict, Optional[bool]]:
    f = _coerce_mode(jsonio.load_polynomial(jsonio.read_json(args.poly)),
                     args.mode)
    point = gauge.ball_coordinates(f, float(args.t), args.tol)
    return point.to_json(), None


def cmd_simplify(args) -> Tuple[dict, Optional[bool]]:
    f = _coerce_mode(jsonio.load_polynomial(jsonio.read_json(args.poly)),
                     args.mode)
    simp = lorentzian.simplify_degree2(f)
    payload = {"g": jsonio.dump_polynomial(simp.g),
               "lambdas": [jsonio.dump_scalar(l) for l in simp.lambdas],
               "partition": [list(block) for block in simp.partition]}
    if lorentzian.is_lorentzian(f):
        position, image = lorentzian.classify_deg2(f)
        payload["position"] = position
        payload["image"] = image
    return payload, None


COMMANDS = {
    "check-mconvex": cmd_check_mconvex,
    "check-null": cmd_check_null,
    "check-rep": cmd_check_rep,
    "check-lorentzian": cmd_check_lorentzian,
    "tutte-rank": cmd_tutte_rank,
    "dressian-rays": cmd_dressian_rays,
    "subdivide": cmd_subdivide,
    "faces": cmd_faces,
    "euler": cmd_euler,
    "stable-euler": cmd_stable_euler,
    "grassmann": cmd_grassmann,
    "betsy": cmd_betsy,
    "ball-coords": cmd_ball_coords,
    "simplify": cmd_simplify,
}


def _summary(command: str, payload: dict) -> str:
    keys = ("m_convex", "null", "representation", "lorentzian", "tutte_rank",
            "count", "chi", "f_vector", "psi", "position")
    bits = [f"{k}={payload[k]}" for k in keys if k in payload]
    return f"{command}: " + (", ".join(bits) if bits else "ok")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorpoly",
        description="Exact computations with Lorentzian polynomials, "
                    "M-convex sets, and their tropical geometry.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--mode", choices=("auto", "exact", "float"),
                       default="auto", help="coefficient arithmetic mode")
        p.add_argument("--tol", type=float, default=1e-6,
                       help="bisection tolerance where applicable")
        p.add_argument("--max-dim", dest="max_dim", type=int, default=6,
                       help="reduced-dimension cap for ray enumeration")
        p.add_argument("--budget", type=int, default=1_000_000,
                       help="cone traversal node budget")
        p.add_argument("--face-budget", dest="face_budget", type=int,
                       default=polytopes.DEFAULT_FACE_BUDGET,
                       help="face lattice size cap")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for compatibility; execution is "
                            "sequential")
        p.add_argument("--assert", dest="do_assert", action="store_true",
                       help="exit 1 when the checked property is false "
                            "(default for the check-* commands)")
        p.add_argument("--out", help="write the JSON report to this file")

    p = sub.add_parser("check-mconvex", help="exchange-property test")
    p.add_argument("--set", required=True)
    common(p)

    p = sub.add_parser("check-null", help="hyperfield null-set membership")
    p.add_argument("--values", required=True)
    p.add_argument("--q", required=True)
    common(p)

    p = sub.add_parser("check-rep", help="Pluecker representation test")
    p.add_argument("--rep", required=True)
    p.add_argument("--matroid", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--strong", action="store_true")
    common(p)

    p = sub.add_parser("check-lorentzian", help="Lorentzian property test")
    p.add_argument("--poly", required=True)
    p.add_argument("--strict", action="store_true")
    common(p)

    p = sub.add_parser("tutte-rank", help="dim V_J - 1 and dim V_J/W_J")
    p.add_argument("--matroid", required=True)
    common(p)

    p = sub.add_parser("dressian-rays", help="rays of the reduced Dressian")
    p.add_argument("--matroid", required=True)
    common(p)

    p = sub.add_parser("subdivide", help="regular subdivision induced by nu")
    p.add_argument("--matroid", required=True)
    p.add_argument("--rep", required=True)
    common(p)

    p = sub.add_parser("faces", help="face numbers of the base polytope")
    p.add_argument("--matroid", required=True)
    common(p)

    p = sub.add_parser("euler", help="Euler characteristic of the closed stratum")
    p.add_argument("--matroid", required=True)
    p.add_argument("--rays", help="fixture rays (completeness assumed)")
    common(p)

    p = sub.add_parser("stable-euler", help="two-orbit stable-space Euler characteristic")
    p.add_argument("--matroid", required=True)
    common(p)

    p = sub.add_parser("grassmann", help="|minors|^t polynomial of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--t", default="2")
    common(p)

    p = sub.add_parser("betsy", help="the eleven-point star polynomial family")
    p.add_argument("--t", default="2")
    common(p)

    p = sub.add_parser("ball-coords", help="ball-model coordinates of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--t", default="1")
    common(p)

    p = sub.add_parser("simplify", help="degree-2 multipartite simplification")
    p.add_argument("--poly", required=True)
    common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, verdict = COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, RuntimeError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 4

    report = {"version": __version__, "command": args.command}
    report.update(payload)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(_summary(args.command, payload), file=sys.stderr)
    if verdict is not None and not verdict:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

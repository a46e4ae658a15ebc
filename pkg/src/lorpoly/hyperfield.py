"""Null-sum membership for the triangular hyperfields T_q, 0 <= q <= infinity.

A multiset of nonnegative reals is null in T_q (0 < q < infinity) when its
1/q-th powers satisfy the polygon inequality: every value is at most the sum
of the others.  The limits are combinatorial: in T_0 the maximum must occur
at least twice; in T_infinity it suffices that at least three values are
nonzero (or the maximum occurs twice).  All-zero multisets are null for
every q, a single nonzero value never is.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = ["is_null"]

# relative slack for the double-precision comparison at generic q
_REL_SLACK = 1e-12


def _check_q(q):
    if isinstance(q, float) and math.isnan(q):
        raise ValueError("q must be a nonnegative number or infinity")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    return q


def is_null(values, q) -> bool:
    """Whether the multiset of nonnegative values is a null sum in T_q.

    ``q`` may be 0, any positive rational/float, or ``math.inf``.  Exact
    rational arithmetic is used for q = 1 always and for q = 2 with at most
    three nonzero values; other finite q compare 1/q-th powers in double
    precision with a relative slack of 1e-12 (ties count as null).
    """
    _check_q(q)
    vals = []
    for v in values:
        if isinstance(v, float) and not math.isfinite(v):
            raise ValueError(f"values must be finite, got {v}")
        if v < 0:
            raise ValueError(f"values must be nonnegative, got {v}")
        if v != 0:
            vals.append(v)

    if not vals:
        return True  # the empty sum, and all-zero sums, are null
    if len(vals) == 1:
        return False

    if q == 0:
        m = max(vals)
        return sum(1 for v in vals if v == m) >= 2
    if q == math.inf:
        if len(vals) >= 3:
            return True
        m = max(vals)
        return sum(1 for v in vals if v == m) >= 2

    exact = all(isinstance(v, Rational) for v in vals)
    if exact and q == 1:
        m = max(vals)
        return m <= sum(vals) - m
    if exact and q == 2 and len(vals) <= 3:
        return _null_sqrt3(vals)

    # generic path: scale by the maximum so powers stay in (0, 1]
    m = max(vals)
    t = 1.0 / float(q)
    rest = [float(v) / float(m) for v in vals]
    rest.remove(1.0)  # one copy of the maximum is the left-hand side
    s = sum(r ** t for r in rest)
    return 1.0 <= s + _REL_SLACK * max(1.0, s)


def _null_sqrt3(vals) -> bool:
    """Exact test of sqrt(a) <= sqrt(b) + sqrt(c) for rational a >= b >= c >= 0.

    Squaring twice: the inequality holds iff a - b - c <= 0 or
    (a - b - c)^2 <= 4bc.
    """
    a, b, *rest = sorted((Fraction(v) for v in vals), reverse=True)
    c = rest[0] if rest else Fraction(0)
    lhs = a - b - c
    return lhs <= 0 or lhs * lhs <= 4 * b * c

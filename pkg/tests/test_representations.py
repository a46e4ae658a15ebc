import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

import oracles
from conftest import pair_point
from lorpoly.combinatorics import MConvexSet, from_nonbases, full_simplex
from lorpoly.lorentzian import grassmann_map
from lorpoly.representations import (degenerate_relations, full_relations,
                                     is_strong_rep, is_weak_rep, reduced_dim,
                                     restriction_injective,
                                     three_term_relations, tutte_rank,
                                     v_space, w_space)


@pytest.fixture(scope="module")
def whitney():
    # rank-2 matroid on four elements whose only nonbasis is {2,3}
    points = [p for p in full_simplex(2, 4).points
              if p != (0, 0, 1, 1) and max(p) == 1]
    return MConvexSet(4, 2, points)


@pytest.fixture(scope="module")
def parallel_u35():
    # U_{3,5} with an element duplicated: 2 and 3 are parallel
    nonbases = [t for t in combinations(range(6), 3) if {2, 3} <= set(t)]
    return from_nonbases(6, nonbases, rank=3)


def test_three_term_relation_counts(u24, u25):
    rels = three_term_relations(u24)
    assert len(rels) == 1
    assert rels[0].n_supported == 3
    assert len(rels[0].term_pairs) == 3
    assert len(three_term_relations(u25)) == 5
    assert len(three_term_relations(full_simplex(2, 2))) == 1


def test_three_term_relations_trivial_for_low_degree():
    assert three_term_relations(full_simplex(1, 3)) == []


def test_full_relations_s2_matches_three_term(u25):
    def canon(rels):
        # compare as unordered signed products, with the overall sign fixed by
        # making the lexicographically smallest product positive
        out = []
        for r in rels:
            terms = sorted((tuple(sorted((a, b))), s)
                           for (a, b), s in zip(r.term_pairs, r.signs))
            flip = -1 if terms and terms[0][1] < 0 else 1
            out.append((r.alpha, tuple((pair, flip * s) for pair, s in terms)))
        return sorted(out)

    assert canon(full_relations(u25, 2)) == canon(three_term_relations(u25))
    with pytest.raises(ValueError):
        full_relations(u25, 3)  # s must stay within 2..d


def test_full_relations_parallel_extension(parallel_u35):
    # the degenerate 4-term relation c_{012}c_{345} = c_{013}c_{245} appears
    # with exactly the two supported products (each factor splits the
    # parallel pair {2,3})
    def ind(*els):
        p = [0] * 6
        for e in els:
            p[e] = 1
        return tuple(p)

    target = {frozenset((ind(0, 1, 2), ind(3, 4, 5))),
              frozenset((ind(0, 1, 3), ind(2, 4, 5)))}
    rels = full_relations(parallel_u35, 3)
    assert any({frozenset(pair) for pair, ok
                in zip(r.term_pairs, r.supported_mask) if ok} == target
               for r in rels)


def test_weak_rep_examples(u24):
    ones = {p: 1 for p in u24.points}
    assert is_weak_rep(ones, u24, 1)
    assert is_weak_rep(ones, u24, 0)
    rho = {p: (5 if p in ((1, 1, 0, 0), (0, 0, 1, 1)) else 1)
           for p in u24.points}
    assert not is_weak_rep(rho, u24, 1)     # products (25, 1, 1)
    assert is_weak_rep(rho, u24, math.inf)  # three nonzero terms


def test_weak_rep_support_mismatch(u24):
    rho = {p: 1 for p in u24.points[:-1]}
    with pytest.raises(ValueError):
        is_weak_rep(rho, u24, 1)
    rho = dict.fromkeys(u24.points, 1)
    rho[u24.points[0]] = 0
    with pytest.raises(ValueError):
        is_weak_rep(rho, u24, 1)


def test_strong_rep_examples(u24, fano_m):
    rho = {p: (5 if p in ((1, 1, 0, 0), (0, 0, 1, 1)) else 1)
           for p in u24.points}
    for q in (0, 1, 2, math.inf):  # d = 2, so weak and strong coincide
        assert is_strong_rep(rho, u24, q) == is_weak_rep(rho, u24, q)
    assert is_strong_rep({p: 1 for p in fano_m.points}, fano_m, 0)


def test_squared_minors_are_strong_at_q2(u24):
    f = grassmann_map([[1, 0, 1, 1], [0, 1, 1, 2]], 2)
    rho = dict(f.coeffs)
    assert set(rho) == set(u24.points)
    assert is_strong_rep(rho, u24, 2)


def test_degenerate_relations(u24, whitney, parallel_u35):
    assert degenerate_relations(u24) == []
    found = degenerate_relations(whitney)
    assert {frozenset((pair_point(4, 0, 2), pair_point(4, 1, 3))),
            frozenset((pair_point(4, 0, 3), pair_point(4, 1, 2)))} in [
        {frozenset(lhs), frozenset(rhs)} for lhs, rhs in found]

    def ind(*els):
        p = [0] * 6
        for e in els:
            p[e] = 1
        return tuple(p)

    full = degenerate_relations(parallel_u35, use_full=True)
    assert {frozenset((ind(0, 1, 2), ind(3, 4, 5))),
            frozenset((ind(0, 1, 3), ind(2, 4, 5)))} in [
        {frozenset(lhs), frozenset(rhs)} for lhs, rhs in full]


def test_v_space_dimensions(u24, whitney, betsy):
    assert v_space(u24).dim == 6
    assert v_space(whitney).dim == 4
    assert v_space(betsy).dim == 12


def test_v_space_full_validation_agrees(whitney, fano_m):
    for J in (whitney, fano_m):
        assert v_space(J, validate_full=True).basis == v_space(J).basis


def test_w_space_dimensions(u24):
    assert w_space(u24).dim == 4
    assert w_space(full_simplex(3, 1)).dim == 1
    sum_of_two = MConvexSet(4, 2, [(1, 0, 1, 0), (1, 0, 0, 1),
                                   (0, 1, 1, 0), (0, 1, 0, 1)])
    assert w_space(sum_of_two).dim == 3


def test_w_inside_v_and_ones_in_w(u24, u25, whitney, fano_m):
    for J in (u24, u25, whitney, fano_m):
        v = v_space(J)
        w = w_space(J)
        for row in w.basis:
            assert oracles.in_span([list(r) for r in v.basis], list(row))
        ones = [Fraction(1)] * len(J)
        assert oracles.in_span([list(r) for r in w.basis], ones)


def test_rank_table(u24, u25, fano_m):
    assert tutte_rank(u24) == 5
    assert reduced_dim(u24) == 2
    assert tutte_rank(u25) == 9
    assert reduced_dim(u25) == 5
    assert reduced_dim(fano_m) == 0


def test_restriction_injective(u24):
    v, w = v_space(u24), w_space(u24)
    singleton = MConvexSet(4, 2, [u24.points[0]])
    assert not restriction_injective(u24, singleton, v, w)
    assert restriction_injective(u24, u24, v, w)
    outside = MConvexSet(4, 2, [(2, 0, 0, 0)], check=False)
    with pytest.raises(ValueError):
        restriction_injective(u24, outside, v, w)


def test_rescaled_minor_reps_stay_weak(u25):
    # coordinate rescalings act along W, so they preserve representability
    rng = random.Random(7)
    found = 0
    while found < 25:
        a = oracles.random_int_matrix(rng, 2, 5)
        f = grassmann_map(a, 2)
        if set(f.support()) != set(u25.points):
            continue
        found += 1
        scale = [Fraction(rng.randint(1, 5)) for _ in range(5)]
        rho = {p: c * math.prod(s ** x for s, x in zip(scale, p))
               for p, c in f.coeffs.items()}
        assert is_weak_rep(rho, u25, 2)


def test_star_shape_sampled(u24):
    rng = random.Random(8)
    checked = 0
    while checked < 30:
        a = oracles.random_int_matrix(rng, 2, 4)
        f = grassmann_map(a, 2)
        if set(f.support()) != set(u24.points):
            continue
        rho = dict(f.coeffs)
        assert is_weak_rep(rho, u24, 2)
        for t in (0.25, 0.5, 0.75):
            powered = {p: float(c) ** t for p, c in rho.items()}
            assert is_weak_rep(powered, u24, 2)
        checked += 1


def test_monotone_in_q_sampled(u24):
    rng = random.Random(9)
    chain = [Fraction(1, 2), 1, 2, 4, math.inf]
    for _ in range(40):
        rho = {p: Fraction(rng.randint(1, 9)) for p in u24.points}
        verdicts = [is_strong_rep(rho, u24, q) for q in chain]
        for earlier, later in zip(verdicts, verdicts[1:]):
            assert not (earlier and not later)

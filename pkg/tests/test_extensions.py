from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from newton_strata.extensions import (
    ext_contains,
    ext_enumerate,
    ext_semistable_pair,
    hong_conditions,
    tilde_ext_contains,
)
from newton_strata.polygon import Polygon, direct_sum, dual, leq_dominance, parse, strongly_slopewise_dominates
from oracles import bundles_between, tilde_ext_brute
from strategies import bundles, ext_pairs, integral_bundles, semistable_bundles, vectors

P = parse

INDUCTIVE_C, INDUCTIVE_D = P("(0,-1/6^(6))"), P("(-1/3^(3))")
INDUCTIVE_EXT = {
    P("(-1/5^(10))"),
    P("(-1/6^(6),-1/4^(4))"),
    P("(0,-2/9^(9))"),
    P("(0,-1/5^(5),-1/4^(4))"),
    P("(0,-1/6^(6),-1/3^(3))"),
}
GAP_A, GAP_C, GAP_D = P("(1,5/7^(7),4/7^(7),0)"), P("(3,3/5^(5))"), P("(5/9^(9),-1)")


def test_inductive_example():
    assert set(ext_enumerate(INDUCTIVE_C, INDUCTIVE_D)) == INDUCTIVE_EXT
    assert ext_contains(P("(-1/5^(10))"), INDUCTIVE_C, INDUCTIVE_D)


def test_gap_example():
    w = tilde_ext_contains(GAP_A, GAP_C, GAP_D)
    assert w is not None and w.verify(GAP_A, GAP_C, GAP_D)
    assert w.h_positions == (1, 9, 10, 11, 12, 13)
    assert not ext_contains(GAP_A, GAP_C, GAP_D)


def test_dominance_conditions_are_not_enough():
    a, c, d = P("(6,5,2,1)"), P("(10,4)"), P("(0^(2))")
    assert hong_conditions(a, c, d) == (True, True, True)
    assert tilde_ext_contains(a, c, d) is None
    assert not ext_contains(a, c, d)


def test_split_sum_always_has_a_witness():
    c, d = P("(3,3/5^(5))"), P("(5/9^(9),-1)")
    a = direct_sum(c, d)
    assert tilde_ext_contains(a, c, d).verify(a, c, d)
    assert ext_contains(a, c, d)


def test_semistable_pair_examples():
    # Frozen from bundles_between(4, 1, 1/2, 0) filtered by dominance.
    assert set(ext_semistable_pair(P("(1/2^(2))"), P("(0^(2))"))) == {
        P("(1/2^(2),0^(2))"), P("(1/3^(3),0)"), P("(1/4^(4))"),
    }
    assert set(ext_semistable_pair(P("(0)"), P("(-1/3^(3))"))) == {P("(-1/4^(4))"), P("(0,-1/3^(3))")}
    assert ext_semistable_pair(P("(0^(2))"), P("(1^(2))")) == (P("(1^(2),0^(2))"),)
    with pytest.raises(ValueError):
        ext_semistable_pair(P("(1,0)"), P("(0)"))


def test_empty_sides():
    d = P("(1/2^(2),-1)")
    assert ext_enumerate(Polygon(), d) == (d,)
    assert ext_enumerate(d, Polygon()) == (d,)
    assert ext_contains(d, Polygon(), d)


def test_mismatches_are_errors_not_false():
    with pytest.raises(ValueError, match="rank"):
        ext_contains(P("(1)"), P("(0)"), P("(0)"))
    with pytest.raises(ValueError, match="degree"):
        ext_contains(P("(1,0)"), P("(0)"), P("(0)"))
    with pytest.raises(ValueError):
        tilde_ext_contains(P("(1)"), P("(0)"), P("(0)"))


def test_non_bundle_inputs_give_no_extensions():
    half = Polygon.from_coords(["1/2", "-1/2"])
    assert ext_enumerate(half, P("(0)")) == ()
    assert not ext_contains(P("(0^(3))"), half, P("(0)"))


# -- properties -----------------------------------------------------------


@lru_cache(maxsize=None)
def _oracle_ext(c, d):
    """Bundles below c + d in the combinatorial set, by exhaustive search."""
    total = direct_sum(c, d)
    found = set()
    for a in bundles_between(total.rank, total.degree, total.coords[0], total.coords[-1]):
        if leq_dominance(a, total) and tilde_ext_brute(a, c, d):
            found.add(a)
    return found


@pytest.mark.property_suite("a")
@settings(max_examples=500, deadline=None)
@given(ext_pairs())
def test_ext_inside_tilde_ext(pair):
    c, d = pair
    for a in ext_enumerate(c, d):
        assert a.integral_breakpoints
        assert tilde_ext_contains(a, c, d) is not None
        assert strongly_slopewise_dominates(a, d)
        assert strongly_slopewise_dominates(dual(a), dual(c))
        assert leq_dominance(a, direct_sum(c, d))


@pytest.mark.property_suite("b")
@settings(max_examples=500, deadline=None)
@given(vectors(min_rank=1, max_rank=4), vectors(min_rank=1, max_rank=4), st.data())
def test_tilde_ext_duality_and_brute_force(c, d, data):
    total = direct_sum(c, d)
    # Move mass between coordinates of c + d without changing the total,
    # which lands on both sides of the membership question.
    moves = data.draw(st.lists(st.integers(-2, 2), min_size=total.rank, max_size=total.rank))
    mean = Fraction(sum(moves), total.rank)
    a = Polygon.from_coords(
        sorted((x + (m - mean) / 2 for x, m in zip(total.coords, moves)), reverse=True)
    )
    w = tilde_ext_contains(a, c, d)
    assert (w is not None) == tilde_ext_brute(a, c, d)
    if w is not None:
        assert w.verify(a, c, d)
    assert (w is not None) == (tilde_ext_contains(dual(a), dual(d), dual(c)) is not None)


@pytest.mark.property_suite("c")
@settings(max_examples=500, deadline=None)
@given(bundles(min_rank=1, max_rank=7), semistable_bundles(max_rank=7), st.booleans())
def test_semistable_side_matches_oracle(other, semi, semi_is_sub):
    c, d = (other, semi) if semi_is_sub else (semi, other)
    assume(c.rank + d.rank <= 8)
    got = set(ext_enumerate(c, d))
    assert got == _oracle_ext(c, d)
    for a in got:
        assert ext_contains(a, c, d)


@pytest.mark.property_suite("c")
@settings(max_examples=500, deadline=None)
@given(integral_bundles(min_rank=1, max_rank=7), integral_bundles(min_rank=1, max_rank=7))
def test_integer_inputs_match_oracle(c, d):
    assume(c.rank + d.rank <= 8)
    assert set(ext_enumerate(c, d)) == _oracle_ext(c, d)


@settings(max_examples=500, deadline=None)
@given(ext_pairs())
def test_peeling_side_independence(pair):
    c, d = pair
    via_dual = {dual(a) for a in ext_enumerate(dual(d), dual(c))}
    assert set(ext_enumerate(c, d)) == via_dual


@settings(max_examples=300, deadline=None)
@given(ext_pairs(), st.data())
def test_ext_contains_agrees_with_enumeration(pair, data):
    c, d = pair
    total = direct_sum(c, d)
    pool = sorted(bundles_between(total.rank, total.degree, total.coords[0], total.coords[-1]), key=str)
    a = data.draw(st.sampled_from(pool))
    expected = a in set(ext_enumerate(c, d))
    assert ext_contains(a, c, d) == expected
    assert ext_contains(dual(a), dual(d), dual(c)) == expected

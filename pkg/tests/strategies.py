"""Hypothesis strategies for small polygons (rank <= 8, slope denominators <= 4)."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from newton_strata.polygon import Polygon, direct_sum

MAX_RANK = 8
MAX_DEN = 4


@st.composite
def stable_summand(draw, max_rank=MAX_RANK, spread=2):
    """``O(q/p)`` with ``p <= min(4, max_rank)`` and ``|q/p| <= spread``."""
    p = draw(st.integers(1, min(MAX_DEN, max_rank)))
    q = draw(st.integers(-spread * p, spread * p))
    slope = Fraction(q, p)
    # A reduced denominator smaller than p means several stable pieces of
    # that slope; keep the summand stable so the rank is the denominator.
    return Polygon.constant(slope, slope.denominator)


@st.composite
def bundles(draw, min_rank=0, max_rank=MAX_RANK, spread=2):
    """Integral-breakpoint polygons built as sums of stable summands."""
    parts = []
    rank = 0
    target = draw(st.integers(min_rank, max_rank))
    while rank < target:
        piece = draw(stable_summand(max_rank=target - rank, spread=spread))
        parts.append(piece)
        rank += piece.rank
    return direct_sum(*parts)


@st.composite
def integral_bundles(draw, min_rank=0, max_rank=MAX_RANK, spread=2):
    coords = draw(st.lists(st.integers(-spread, spread), min_size=min_rank, max_size=max_rank))
    return Polygon.from_coords(sorted(coords, reverse=True))


@st.composite
def semistable_bundles(draw, min_rank=1, max_rank=MAX_RANK, spread=2):
    piece = draw(stable_summand(max_rank=max_rank, spread=spread))
    copies = draw(st.integers(max(1, -(-min_rank // piece.rank)), max(1, max_rank // piece.rank)))
    return Polygon.constant(piece.slopes[0], piece.rank * copies)


@st.composite
def vectors(draw, min_rank=0, max_rank=MAX_RANK, spread=2):
    """Arbitrary weakly decreasing rational vectors, not necessarily bundles."""
    den = st.integers(1, MAX_DEN)
    coords = draw(
        st.lists(
            st.builds(lambda q, p: Fraction(q, p), st.integers(-spread * MAX_DEN, spread * MAX_DEN), den),
            min_size=min_rank,
            max_size=max_rank,
        )
    )
    return Polygon.from_coords(sorted(coords, reverse=True))


@st.composite
def ext_pairs(draw, max_total=MAX_RANK, spread=2):
    """A non-empty quotient ``c`` and sub ``d`` with combined rank <= max_total."""
    c = draw(bundles(min_rank=1, max_rank=max_total - 1, spread=spread))
    d = draw(bundles(min_rank=1, max_rank=max_total - c.rank, spread=spread))
    return c, d

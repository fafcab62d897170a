"""Generalized Kottwitz sets for split GL_n.

For GL_n the Kottwitz invariant of a class is the total degree of its Newton
point, so ``B(GL_n, k, delta)`` is the set of concave polygons with integral
breakpoints, rank ``n`` and degree ``k`` lying on or below ``delta``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import Iterator

from .polygon import Polygon, canonical_order, dual, leq_dominance

__all__ = [
    "CACHE_SIZE_ENV",
    "kottwitz_set",
    "iter_kottwitz",
    "basic_element",
    "hn_cuts",
    "is_hn_decomposable",
    "involution_check",
]

CACHE_SIZE_ENV = "NEWTON_STRATA_CACHE_SIZE"


def _cache_size(default: int = 4096) -> int | None:
    raw = os.environ.get(CACHE_SIZE_ENV)
    if raw is None:
        return default
    value = int(raw)
    return None if value < 0 else value


def _check_query(n: int, delta: Polygon) -> None:
    if n <= 0:
        raise ValueError(f"rank must be positive, got {n}")
    if delta.rank != n:
        raise ValueError(f"bound has rank {delta.rank}, expected {n}")


def kottwitz_set(n: int, k: int, delta: Polygon) -> tuple[Polygon, ...]:
    """All Newton points of rank ``n`` and degree ``k`` lying on or below ``delta``.

    Returned in canonical order (lexicographically largest first).  The
    result is empty when ``k`` differs from the degree of ``delta``.
    """
    _check_query(n, delta)
    return _kottwitz_cached(n, Fraction(k), delta)


@lru_cache(maxsize=_cache_size())
def _kottwitz_cached(n: int, k: Fraction, delta: Polygon) -> tuple[Polygon, ...]:
    return tuple(canonical_order(iter_kottwitz(n, k, delta)))


def iter_kottwitz(n: int, k, delta: Polygon) -> Iterator[Polygon]:
    """Uncached, unordered stream of the same elements as :func:`kottwitz_set`."""
    _check_query(n, delta)
    k = Fraction(k)
    if k.denominator != 1 or k != delta.degree:
        return
    bound = delta.prefix_sums
    k = int(k)

    # Walk vertex to vertex.  Concavity keeps every prefix sum at or above
    # the chord k*l/n, and checking the bound at vertices is enough since
    # a segment under a concave bound at both ends stays under it.
    def extend(l: int, p: int, prev: Fraction | None, blocks: list):
        for nl in range(l + 1, n + 1):
            if nl == n:
                candidates = (k,)
            else:
                lo = ceil(Fraction(k * nl, n))
                hi = floor(bound[nl])
                candidates = range(hi, lo - 1, -1)
            for np_ in candidates:
                if np_ > bound[nl]:
                    continue
                slope = Fraction(np_ - p, nl - l)
                if prev is not None and slope >= prev:
                    continue
                if nl < n and Fraction(k - np_, n - nl) >= slope:
                    continue
                blocks.append((slope, nl - l))
                if nl == n:
                    yield Polygon(tuple(blocks))
                else:
                    yield from extend(nl, np_, slope, blocks)
                blocks.pop()

    yield from extend(0, 0, None, [])


def basic_element(n: int, k: int, delta: Polygon) -> Polygon:
    """The straight-line point ``(k/n)^(n)``, the unique minimum of the set."""
    _check_query(n, delta)
    k = Fraction(k)
    if k.denominator != 1 or k != delta.degree:
        raise ValueError(f"degree mismatch: k={k} but the bound has degree {delta.degree}")
    return Polygon.constant(k / n, n)


def hn_cuts(v: Polygon, delta: Polygon) -> tuple[int, ...]:
    """Interior vertices of ``v`` that lie on ``delta``."""
    if v.rank != delta.rank:
        raise ValueError(f"rank mismatch: {v.rank} != {delta.rank}")
    if not leq_dominance(v, delta):
        raise ValueError(f"{v} does not lie below {delta}")
    return tuple(l for l, p in v.breakpoints[1:-1] if p == delta.prefix(l))


def is_hn_decomposable(v: Polygon, delta: Polygon) -> tuple[bool, tuple[int, ...]]:
    """Whether ``v`` touches ``delta`` at one of its own interior vertices.

    Returns the flag together with every such cut position.
    """
    cuts = hn_cuts(v, delta)
    return bool(cuts), cuts


def involution_check(n: int, k: int, delta: Polygon) -> bool:
    """Duality sends ``B(n, k, delta)`` onto ``B(n, -k, dual(delta))``."""
    left = {dual(v) for v in kottwitz_set(n, k, delta)}
    right = set(kottwitz_set(n, -k, dual(delta)))
    return left == right

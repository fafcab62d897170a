"""Minute criteria for (weakly) fully Hodge-Newton decomposable pairs.

Everything reduces to pairings of a cocharacter with the fundamental
weights.  For ``GL_n`` and a dominant integral ``mu`` the pairing with the
m-th weight is ``P_mu(m) - m|mu|/n``; for the adjoint group of type
``A_n`` the pairing of the i-th fundamental coweight with the j-th weight
is ``min(i, j) - ij/(n+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "MinuteResult",
    "frac",
    "gl_pairing",
    "type_a_pairing",
    "fully_hn_gl",
    "weakly_fully_hn_gl",
    "fully_hn_typeA",
    "weakly_fully_hn_typeA",
]


@dataclass(frozen=True)
class MinuteResult:
    """Outcome of a criterion: truthy when it holds, with offending indices otherwise."""

    holds: bool
    violations: tuple[int, ...] = ()

    def __bool__(self):
        return self.holds


def _result(bad) -> MinuteResult:
    bad = tuple(bad)
    return MinuteResult(not bad, bad)


def frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _check_mu(n: int, mu: Sequence[int]) -> list[int]:
    mu = [int(x) for x in mu]
    if n <= 0 or len(mu) != n:
        raise ValueError(f"mu must have length n={n}")
    if any(x < y for x, y in zip(mu, mu[1:])):
        raise ValueError("mu must be weakly decreasing")
    return mu


def gl_pairing(mu: Sequence[int], m: int) -> Fraction:
    n = len(mu)
    return sum(mu[:m], Fraction(0)) - Fraction(m * sum(mu), n)


def fully_hn_gl(n: int, mu: Sequence[int]) -> MinuteResult:
    mu = _check_mu(n, mu)
    return _result(m for m in range(1, n) if gl_pairing(mu, m) > 1)


def weakly_fully_hn_gl(n: int, mu: Sequence[int]) -> MinuteResult:
    """Only the cuts where the pairing is an integer are constrained."""
    mu = _check_mu(n, mu)
    bad = []
    for m in range(1, n):
        value = gl_pairing(mu, m)
        if value.denominator == 1 and value > 1:
            bad.append(m)
    return _result(bad)


def _check_type_a(n: int, i: int, i_prime: int) -> None:
    if n <= 0:
        raise ValueError("rank must be positive")
    if not (0 <= i <= n and 0 <= i_prime <= n):
        raise ValueError(f"indices must lie in [0, {n}]")


def type_a_pairing(n: int, i: int, j: int) -> Fraction:
    return min(i, j) - Fraction(i * j, n + 1)


def fully_hn_typeA(n: int, i: int, i_prime: int = 0) -> MinuteResult:
    _check_type_a(n, i, i_prime)
    return _result(
        j
        for j in range(1, n + 1)
        if type_a_pairing(n, i, j) + frac(type_a_pairing(n, i_prime, j)) > 1
    )


def weakly_fully_hn_typeA(n: int, i: int, i_prime: int = 0) -> MinuteResult:
    _check_type_a(n, i, i_prime)
    return _result(
        j
        for j in range(1, n + 1)
        if ((i + i_prime) * j) % (n + 1) == 0 and type_a_pairing(n, i, j) > 1
    )

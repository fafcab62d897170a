"""Integral interpolation between two slope vectors.

Given ``c <= a`` coordinatewise and an integer ``m`` between their totals,
find a weakly decreasing ``b`` with integral breakpoints, ``c <= b <= a``
and ``|b| = m``.  Such a ``b`` always exists when ``c`` has integral
breakpoints, and also when ``c`` is constant; it can fail otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .polygon import Polygon

__all__ = ["interpolate_general", "interpolate_constant", "interpolate_shifted", "is_valid_interpolant"]


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _prefix(v):
    out = [Fraction(0)]
    for x in v:
        out.append(out[-1] + x)
    return out


def _in_coset(x: Fraction, eps: Fraction) -> bool:
    return (x - eps).denominator == 1


def is_valid_interpolant(b: Polygon, a: Polygon, c: Polygon, m: int) -> bool:
    return (
        b.rank == a.rank == c.rank
        and b.integral_breakpoints
        and b.degree == m
        and all(lo <= x <= hi for lo, x, hi in zip(c.coords, b.coords, a.coords))
    )


def _common_checks(a: Polygon, c: Polygon, m) -> int:
    if a.rank != c.rank:
        raise ValueError(f"rank mismatch: {a.rank} != {c.rank}")
    m = Fraction(m)
    if m.denominator != 1:
        raise ValueError(f"target total must be an integer, got {m}")
    if any(x < y for x, y in zip(a.coords, c.coords)):
        raise ValueError("upper vector must dominate the lower one coordinatewise")
    if not c.degree <= m <= a.degree:
        raise ValueError(f"target {m} outside [{c.degree}, {a.degree}]")
    if not a.has_breakpoints_in(a.epsilon):
        raise ValueError(f"{a} does not have epsilon-breakpoints")
    return int(m)


def _descend(a: list[Fraction], c: list[Fraction], m: int) -> list[Fraction]:
    """Lower ``a`` towards ``c`` one integer at a time until the total is ``m``.

    ``c`` must have integral breakpoints and ``a`` epsilon-breakpoints.
    """
    n = len(a)
    pc = _prefix(c)
    eps = _frac(sum(a, Fraction(0)))
    while True:
        pa = _prefix(a)
        total = pa[n]
        if total == m:
            return a
        if total - pc[n] <= 1:
            return list(c)
        step = eps + (1 if eps == 0 else 0)
        diff = [x - y for x, y in zip(pa, pc)]
        lo = max(j for j in range(n + 1) if pc[j].denominator == 1 and diff[j] < step)
        hi = min(j for j in range(n + 1) if _in_coset(pa[j], eps) and diff[j] >= step)
        level = (pa[hi] - step - pc[lo]) / (hi - lo)
        for i in range(lo, hi):
            if not c[i] <= level <= a[i]:
                raise AssertionError(f"interpolation level {level} escapes the band at {i + 1}")
        b = c[:lo] + [level] * (hi - lo) + a[hi:]
        a = sorted(b, reverse=True)
        eps = Fraction(0)


def interpolate_general(a: Polygon, c: Polygon, m: int) -> Polygon:
    """Interpolant for ``c`` with integral breakpoints.

    A constant ``c`` without integral breakpoints is routed to
    :func:`interpolate_constant`; any other ``c`` is rejected, since then
    no interpolant need exist.
    """
    m = _common_checks(a, c, m)
    if not c.integral_breakpoints:
        if c.rank and len(c.blocks) == 1:
            return interpolate_constant(a, c, m)
        raise ValueError(f"lower vector {c} needs integral breakpoints or a single slope")
    return Polygon.from_coords(_descend(list(a.coords), list(c.coords), m))


def _constant_core(a: list[Fraction], target: int) -> list[Fraction]:
    # Either the straight line at height target fits under a, or the last
    # stable run of a can be kept verbatim and the rest solved recursively.
    n = len(a)
    if n == 0:
        return []
    last = a[-1]
    if n * last >= target:
        return [Fraction(target, n)] * n
    r, s = last.denominator, last.numerator
    head = _constant_core(a[: n - r], target - s)
    return head + [last] * r


def interpolate_constant(a: Polygon, c: Polygon, m: int) -> Polygon:
    """Interpolant for a lower vector with a single repeated coordinate."""
    m = _common_checks(a, c, m)
    if len(c.blocks) > 1:
        raise ValueError(f"lower vector {c} is not constant")
    if c.is_empty:
        return Polygon()
    start = ceil(c.degree)
    base = _constant_core(list(a.coords), start)
    return Polygon.from_coords(_descend(list(a.coords), base, m))


def interpolate_shifted(a: Polygon, c: Polygon, m: int) -> Polygon:
    """Interpolant where ``c`` bounds only the last ``len(c)`` coordinates.

    Returns ``b`` with ``b <= a``, ``c_i <= b_{i+d}`` (``d = len(a) - len(c)``)
    and ``|b| = m``.  ``c`` must be constant or integer valued.
    """
    n, k = a.rank, c.rank
    d = n - k
    if not 0 < d < n:
        raise ValueError("lower vector must be strictly shorter and non-empty")
    first = c.coords[0]
    if len(c.blocks) == 1:
        padded = Polygon.constant(first, n)
    elif c.is_integral:
        padded = Polygon.from_coords((first,) * d + c.coords)
    else:
        raise ValueError(f"lower vector {c} must be constant or integral")
    if m < c.degree + d * first:
        raise ValueError(f"target {m} below {c.degree + d * first}")
    if len(padded.blocks) == 1:
        return interpolate_constant(a, padded, m)
    return interpolate_general(a, padded, m)

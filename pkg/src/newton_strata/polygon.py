"""Slope polygons: weakly decreasing rational vectors stored as run-length blocks.

A polygon ``(2/5^(6), -3/5^(4))`` is the vector with six coordinates 2/5
followed by four coordinates -3/5.  The same object serves as a Newton point,
as the HN slope vector of a bundle, and as an element of a Kottwitz set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Sequence

__all__ = [
    "Polygon",
    "PolygonSyntaxError",
    "parse",
    "format_polygon",
    "direct_sum",
    "dual",
    "bundle_vector",
    "leq_dominance",
    "strongly_slopewise_dominates",
    "canonical_order",
]


class PolygonSyntaxError(ValueError):
    pass


def _fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Polygon:
    """Element of N(n) in canonical block form.

    ``blocks`` is a tuple of ``(slope, multiplicity)`` pairs with strictly
    decreasing slopes and positive multiplicities.  Use :meth:`from_blocks`
    or :meth:`from_coords` to build one from unnormalized data.
    """

    blocks: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        prev = None
        for slope, mult in self.blocks:
            if not isinstance(slope, Fraction) or not isinstance(mult, int):
                raise TypeError("blocks must be (Fraction, int) pairs")
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if prev is not None and slope >= prev:
                raise ValueError("slopes must be strictly decreasing")
            prev = slope

    # -- construction -----------------------------------------------------

    @classmethod
    def from_blocks(cls, blocks: Iterable[tuple]) -> Polygon:
        """Build from ``(slope, mult)`` pairs in any order, fusing equal slopes."""
        acc: dict[Fraction, int] = {}
        for slope, mult in blocks:
            mult = int(mult)
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                s = _fraction(slope)
                acc[s] = acc.get(s, 0) + mult
        return cls(tuple(sorted(acc.items(), key=lambda b: b[0], reverse=True)))

    @classmethod
    def from_coords(cls, coords: Iterable) -> Polygon:
        """Build from a coordinate vector; it must already be weakly decreasing."""
        blocks: list[list] = []
        for x in coords:
            x = _fraction(x)
            if blocks and x > blocks[-1][0]:
                raise ValueError("coordinates must be weakly decreasing")
            if blocks and x == blocks[-1][0]:
                blocks[-1][1] += 1
            else:
                blocks.append([x, 1])
        return cls(tuple((s, m) for s, m in blocks))

    @classmethod
    def constant(cls, slope, mult: int) -> Polygon:
        if mult == 0:
            return cls()
        return cls(((_fraction(slope), int(mult)),))

    # -- basic invariants -------------------------------------------------

    @cached_property
    def rank(self) -> int:
        return sum(m for _, m in self.blocks)

    @cached_property
    def degree(self) -> Fraction:
        return sum((s * m for s, m in self.blocks), Fraction(0))

    @cached_property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(s for s, m in self.blocks for _ in range(m))

    @cached_property
    def prefix_sums(self) -> tuple[Fraction, ...]:
        """``(P(0), P(1), ..., P(n))``."""
        return (Fraction(0),) + tuple(accumulate(self.coords))

    def prefix(self, l: int) -> Fraction:
        return self.prefix_sums[l]

    @cached_property
    def breakpoints(self) -> tuple[tuple[int, Fraction], ...]:
        """Vertices ``(l, P(l))`` of the polygon, from ``(0, 0)`` to ``(n, degree)``."""
        pts = [(0, Fraction(0))]
        l, p = 0, Fraction(0)
        for s, m in self.blocks:
            l += m
            p += s * m
            pts.append((l, p))
        return tuple(pts)

    def has_breakpoints_in(self, epsilon=0) -> bool:
        """True if every vertex ordinate (other than the origin) lies in Z + epsilon."""
        eps = _fraction(epsilon)
        return all((p - eps).denominator == 1 for _, p in self.breakpoints[1:])

    @cached_property
    def integral_breakpoints(self) -> bool:
        return self.has_breakpoints_in(0)

    @cached_property
    def epsilon(self) -> Fraction:
        """Fractional part of the degree, i.e. the epsilon with epsilon-breakpoints (if any)."""
        d = self.degree
        return d - (d.numerator // d.denominator)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.blocks)

    @property
    def is_semistable(self) -> bool:
        return len(self.blocks) == 1

    @property
    def is_integral(self) -> bool:
        """All coordinates are integers (a sum of line bundles)."""
        return all(s.denominator == 1 for s, _ in self.blocks)

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    # -- slicing ----------------------------------------------------------

    def head(self, k: int) -> Polygon:
        """First ``k`` coordinates."""
        return Polygon.from_coords(self.coords[:k])

    def tail(self, k: int) -> Polygon:
        """Coordinates after position ``k``."""
        return Polygon.from_coords(self.coords[k:])

    # -- dunder -----------------------------------------------------------

    def __len__(self):
        return self.rank

    def __str__(self):
        return format_polygon(self)

    def __repr__(self):
        return f"Polygon({format_polygon(self)!r})"

    def __add__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return direct_sum(self, other)

    def sort_key(self):
        return self.coords


def canonical_order(polys: Iterable[Polygon]) -> list[Polygon]:
    """Sort by coordinate vector, lexicographically largest first.

    Lexicographic order on coordinates refines the dominance order, so every
    polygon precedes the polygons lying strictly below it.
    """
    return sorted(polys, key=Polygon.sort_key, reverse=True)


# -- text format ----------------------------------------------------------

_ITEM = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*(?:\^\s*\(\s*(\d+)\s*\))?\s*$")


def parse(text: str) -> Polygon:
    """Parse ``"(2/5^(6),-3/5^(4))"``.

    An item without an exponent stands for one stable summand, so its
    multiplicity is the denominator of the reduced slope.  Slopes must be
    strictly decreasing; repeat a slope via its exponent instead.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise PolygonSyntaxError(f"polygon must be parenthesized: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Polygon()
    blocks = []
    for item in body.split(","):
        m = _ITEM.match(item)
        if m is None:
            raise PolygonSyntaxError(f"malformed item {item.strip()!r} in {text!r}")
        num, den, mult = m.groups()
        if den is not None and int(den) == 0:
            raise PolygonSyntaxError(f"zero denominator in {item.strip()!r}")
        slope = Fraction(int(num), int(den) if den else 1)
        k = int(mult) if mult is not None else slope.denominator
        if k <= 0:
            raise PolygonSyntaxError(f"multiplicity must be positive in {item.strip()!r}")
        if blocks and slope >= blocks[-1][0]:
            raise PolygonSyntaxError(f"slopes must be strictly decreasing in {text!r}")
        blocks.append((slope, k))
    return Polygon(tuple(blocks))


def format_polygon(p: Polygon) -> str:
    """Canonical text: reduced slopes with explicit multiplicities.

    The exponent is dropped only for an integer slope of multiplicity one,
    where the parser's default reads it back identically.
    """
    parts = []
    for s, m in p.blocks:
        item = str(s)
        if not (m == 1 and s.denominator == 1):
            item += f"^({m})"
        parts.append(item)
    return "(" + ",".join(parts) + ")"


# -- algebra --------------------------------------------------------------


def direct_sum(*polys: Polygon) -> Polygon:
    return Polygon.from_blocks(b for p in polys for b in p.blocks)


def dual(p: Polygon) -> Polygon:
    return Polygon(tuple((-s, m) for s, m in reversed(p.blocks)))


def bundle_vector(v: Polygon) -> Polygon:
    """Translate a Newton point into the HN slope vector of its bundle (and back).

    The bundle attached to ``b`` has slope vector ``-w0(nu_b)``, which for GL_n
    is the dual polygon.
    """
    return dual(v)


def leq_dominance(p: Polygon, q: Polygon) -> bool:
    """``p`` lies on or below ``q`` with the same endpoints."""
    if p.rank != q.rank:
        raise ValueError(f"rank mismatch: {p.rank} != {q.rank}")
    if p.degree != q.degree:
        return False
    pp, qq = p.prefix_sums, q.prefix_sums
    return all(x <= y for x, y in zip(pp, qq))


def _count_at_least(coords: Sequence[Fraction], mu: Fraction) -> int:
    k = 0
    for x in coords:
        if x >= mu:
            k += 1
        else:
            break
    return k


def strongly_slopewise_dominates(a: Polygon, d: Polygon) -> bool:
    """For every rational mu, a has at least as many coordinates >= mu as d.

    When the counts agree the leading coordinates of ``a`` and ``d`` must
    coincide.  Only the finitely many mu among the coordinates matter.
    """
    ac, dc = a.coords, d.coords
    for mu in set(a.slopes) | set(d.slopes):
        na = _count_at_least(ac, mu)
        nd = _count_at_least(dc, mu)
        if na < nd:
            return False
        if na == nd and ac[:na] != dc[:na]:
            return False
    return True

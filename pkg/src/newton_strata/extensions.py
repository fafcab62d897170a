"""Extensions of vector bundles on the curve, in terms of HN polygons.

``Ext(c, d)`` is the set of polygons ``a`` such that ``O(a)`` is an extension
of ``O(c)`` by ``O(d)`` (so ``d`` is the sub, ``c`` the quotient).  The
combinatorial superset ``tilde-Ext(c, d)`` asks for a partition of positions
into an H part carrying ``c`` and a K part carrying ``d`` with
``b_i >= a_i`` on H, ``b_i <= a_i`` on K and the prefix sums of ``b``
dominating those of ``a``.  Since the coordinates of ``c`` and ``d`` may be
placed in their natural order, a partition is a monotone lattice path and
membership is a reachability question on an ``(r+1) x (s+1)`` grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .kottwitz import _cache_size, kottwitz_set
from .interpolation import interpolate_constant, interpolate_general, interpolate_shifted
from .polygon import Polygon, canonical_order, direct_sum, dual, strongly_slopewise_dominates

__all__ = [
    "PathWitness",
    "tilde_ext_contains",
    "ext_semistable_pair",
    "ext_enumerate",
    "ext_contains",
    "hong_conditions",
    "interpolate_general",
    "interpolate_constant",
    "interpolate_shifted",
]


@dataclass(frozen=True)
class PathWitness:
    """A partition ``H | K`` of ``1..n`` together with the arranged vector ``b``.

    Positions are 1-based.
    """

    h_positions: tuple[int, ...]
    k_positions: tuple[int, ...]
    b_vector: tuple[Fraction, ...]

    def verify(self, a: Polygon, c: Polygon, d: Polygon) -> bool:
        """Re-check every defining condition against ``a``, ``c`` and ``d``."""
        n = a.rank
        H, K, b = self.h_positions, self.k_positions, self.b_vector
        if len(H) != c.rank or len(K) != d.rank or len(b) != n:
            return False
        if sorted(H + K) != list(range(1, n + 1)):
            return False
        if sorted((b[i - 1] for i in H), reverse=True) != list(c.coords):
            return False
        if sorted((b[i - 1] for i in K), reverse=True) != list(d.coords):
            return False
        ac = a.coords
        if any(b[i - 1] < ac[i - 1] for i in H) or any(b[i - 1] > ac[i - 1] for i in K):
            return False
        pb = pa = Fraction(0)
        for x, y in zip(b, ac):
            pb += x
            pa += y
            if pb < pa:
                return False
        return pb == pa


def _check_ranks(a: Polygon, c: Polygon, d: Polygon) -> None:
    if a.rank != c.rank + d.rank:
        raise ValueError(f"rank mismatch: rank(a)={a.rank} but rank(c)+rank(d)={c.rank + d.rank}")


def tilde_ext_contains(a: Polygon, c: Polygon, d: Polygon) -> PathWitness | None:
    """Witness for ``a`` in tilde-Ext(c, d), or ``None``.

    The witness returned has the lexicographically least H.
    """
    _check_ranks(a, c, d)
    r, s = c.rank, d.rank
    if c.degree + d.degree != a.degree:
        return None
    ac, cc, dc = a.coords, c.coords, d.coords
    pa, pc, pd = a.prefix_sums, c.prefix_sums, d.prefix_sums

    def node_ok(h, k):
        return pc[h] + pd[k] >= pa[h + k]

    def h_step(h, k):  # from (h, k) to (h+1, k)
        return h < r and cc[h] >= ac[h + k] and node_ok(h + 1, k)

    def k_step(h, k):
        return k < s and dc[k] <= ac[h + k] and node_ok(h, k + 1)

    # reach[h][k]: (r, s) is reachable from (h, k)
    reach = [[False] * (s + 1) for _ in range(r + 1)]
    reach[r][s] = True
    for h in range(r, -1, -1):
        for k in range(s, -1, -1):
            if (h, k) == (r, s):
                continue
            reach[h][k] = (h_step(h, k) and reach[h + 1][k]) or (k_step(h, k) and reach[h][k + 1])
    if not reach[0][0]:
        return None

    h = k = 0
    H, K, b = [], [], []
    while (h, k) != (r, s):
        if h_step(h, k) and reach[h + 1][k]:
            b.append(cc[h])
            h += 1
            H.append(h + k)
        else:
            b.append(dc[k])
            k += 1
            K.append(h + k)
    return PathWitness(tuple(H), tuple(K), tuple(b))


def hong_conditions(a: Polygon, c: Polygon, d: Polygon) -> tuple[bool, bool, bool]:
    """The three necessary conditions: sub, quotient and dominance.

    ``a`` strongly slopewise dominates ``d``; the dual of ``a`` strongly
    slopewise dominates the dual of ``c``; ``a`` lies below ``c + d``.
    """
    _check_ranks(a, c, d)
    cd = direct_sum(c, d)
    below = a.degree == cd.degree and all(x <= y for x, y in zip(a.prefix_sums, cd.prefix_sums))
    return (
        strongly_slopewise_dominates(a, d),
        strongly_slopewise_dominates(dual(a), dual(c)),
        below,
    )


def _is_bundle(p: Polygon) -> bool:
    return p.integral_breakpoints


def ext_semistable_pair(c: Polygon, d: Polygon) -> tuple[Polygon, ...]:
    """Ext(c, d) when both sides have a single slope."""
    if not (c.is_semistable and d.is_semistable):
        raise ValueError("both arguments must have a single slope")
    if not (_is_bundle(c) and _is_bundle(d)):
        return ()
    total = direct_sum(c, d)
    if c.slopes[0] <= d.slopes[0]:
        return (total,)
    return kottwitz_set(total.rank, total.degree, total)


def _candidates(c_last: Polygon, e: Polygon):
    """Bundle polygons in tilde-Ext(c_last, e), where c_last has one slope."""
    total = direct_sum(c_last, e)
    for a in kottwitz_set(total.rank, total.degree, total):
        if not strongly_slopewise_dominates(a, e):
            continue
        if not strongly_slopewise_dominates(dual(a), dual(c_last)):
            continue
        if tilde_ext_contains(a, c_last, e) is not None:
            yield a


def ext_enumerate(c: Polygon, d: Polygon) -> tuple[Polygon, ...]:
    """Every bundle polygon in Ext(c, d), in canonical order.

    Peels the last stable summand off the quotient and recurses:
    ``a`` is an extension of ``c`` by ``d`` exactly when it extends the
    peeled summand by some extension ``e`` of the rest of ``c`` by ``d``.
    """
    return _ext_enumerate(c, d)


@lru_cache(maxsize=_cache_size())
def _ext_enumerate(c: Polygon, d: Polygon) -> tuple[Polygon, ...]:
    if not (_is_bundle(c) and _is_bundle(d)):
        return ()
    if c.is_empty:
        return (d,)
    if d.is_empty:
        return (c,)
    last = c.slopes[-1]
    p = last.denominator
    rest = c.head(c.rank - p)
    peeled = Polygon.constant(last, p)
    found: set[Polygon] = set()
    for e in _ext_enumerate(rest, d):
        found.update(_candidates(peeled, e))
    return tuple(canonical_order(found))


def ext_contains(a: Polygon, c: Polygon, d: Polygon) -> bool:
    """Whether ``O(a)`` is an extension of ``O(c)`` by ``O(d)``.

    Raises ``ValueError`` when ranks or degrees do not add up, since then
    the question is malformed rather than answered negatively.
    """
    _check_ranks(a, c, d)
    if a.degree != c.degree + d.degree:
        raise ValueError(f"degree mismatch: deg(a)={a.degree} but deg(c)+deg(d)={c.degree + d.degree}")
    if not (_is_bundle(a) and _is_bundle(c) and _is_bundle(d)):
        return False
    if c.is_empty or d.is_empty:
        return a == direct_sum(c, d)
    integral = sum(p.is_integral for p in (a, c, d))
    if c.is_semistable or d.is_semistable or integral >= 2:
        return tilde_ext_contains(a, c, d) is not None
    return a in set(_ext_enumerate(c, d))

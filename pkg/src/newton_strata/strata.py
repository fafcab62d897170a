"""Newton strata of the flag variety for GL_n and a minuscule cocharacter.

The setting is ``mu = (1^(r), 0^(n-r))`` and ``b`` basic with Newton point
``(r/n)^(n)``.  A stratum ``[b']`` is non-empty iff ``nu_{b'}`` lies in
``B(GL_n, 0, delta)`` with ``delta`` the dominant form of ``nu_b - mu``.
It misses the weakly admissible locus when it is HN-decomposable; otherwise
it meets the non-weakly-admissible part exactly when the bundle of ``b'`` is
an extension built from a Levi reduction of ``b`` and a mu-negative Weyl
translate of ``mu``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator

from .extensions import ext_contains, ext_enumerate, tilde_ext_contains
from .kottwitz import is_hn_decomposable, kottwitz_set
from .polygon import Polygon, bundle_vector, canonical_order, leq_dominance, strongly_slopewise_dominates

__all__ = [
    "WaStatus",
    "StrataConfig",
    "LeviSplit",
    "Witness",
    "StratumRecord",
    "StrataReport",
    "levi_reductions",
    "mu_negative_splits",
    "extension_union",
    "stratum_status",
    "stratification_report",
]


class WaStatus(str, enum.Enum):
    DISJOINT = "DISJOINT"
    PROPER_INTERSECT = "PROPER_INTERSECT"
    CONTAINED = "CONTAINED"


def _shifted_bound(size: int, ones: int, center: Fraction) -> Polygon:
    return Polygon.from_blocks([(center, size - ones), (center - 1, ones)])


@dataclass(frozen=True)
class StrataConfig:
    n: int
    r: int

    def __post_init__(self):
        if not 0 < self.r < self.n:
            raise ValueError(f"need 0 < r < n, got n={self.n}, r={self.r}")

    @property
    def center(self) -> Fraction:
        return Fraction(self.r, self.n)

    @cached_property
    def nu_b(self) -> Polygon:
        return Polygon.constant(self.center, self.n)

    @cached_property
    def delta(self) -> Polygon:
        return _shifted_bound(self.n, self.r, self.center)


@dataclass(frozen=True)
class LeviSplit:
    """Levi ``GL_m x GL_{n-m}`` with ``s`` of the ``r`` ones of ``w mu`` in the first block."""

    cfg: StrataConfig
    m: int
    s: int

    @property
    def k1(self) -> int:
        value = self.m * self.cfg.center - self.s
        assert value.denominator == 1
        return int(value)

    @property
    def k2(self) -> int:
        return -self.k1

    @property
    def delta1(self) -> Polygon:
        return _shifted_bound(self.m, self.s, self.cfg.center)

    @property
    def delta2(self) -> Polygon:
        return _shifted_bound(self.cfg.n - self.m, self.cfg.r - self.s, self.cfg.center)

    def pairs(self) -> Iterator[tuple[Polygon, Polygon]]:
        first = kottwitz_set(self.m, self.k1, self.delta1)
        second = kottwitz_set(self.cfg.n - self.m, self.k2, self.delta2)
        for x1 in first:
            for x2 in second:
                yield x1, x2


@dataclass(frozen=True)
class Witness:
    """A destabilizing extension: sub bundle from ``x1``, quotient from ``x2``."""

    m: int
    s: int
    x1: Polygon
    x2: Polygon

    @property
    def sub(self) -> Polygon:
        return bundle_vector(self.x1)

    @property
    def quotient(self) -> Polygon:
        return bundle_vector(self.x2)


@dataclass(frozen=True)
class StratumRecord:
    nu_b_prime: Polygon
    nonempty: bool
    hn_decomposable: bool
    wa_status: WaStatus | None
    witness: Witness | None = None
    cuts: tuple[int, ...] = ()


@dataclass
class StrataReport:
    cfg: StrataConfig
    records: list[StratumRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        recs = self.records
        return {
            "nonempty": len(recs),
            "hn_indecomposable": sum(not x.hn_decomposable for x in recs),
            "contained": sum(x.wa_status is WaStatus.CONTAINED for x in recs),
            "proper_intersect": sum(x.wa_status is WaStatus.PROPER_INTERSECT for x in recs),
            "disjoint": sum(x.wa_status is WaStatus.DISJOINT for x in recs),
        }


def levi_reductions(cfg: StrataConfig) -> list[int]:
    return [m for m in range(1, cfg.n) if (m * cfg.r) % cfg.n == 0]


def mu_negative_splits(cfg: StrataConfig, m: int) -> list[LeviSplit]:
    if (m * cfg.r) % cfg.n or not 0 < m < cfg.n:
        raise ValueError(f"b has no reduction to the Levi cut at m={m}")
    lo = max(0, cfg.r - (cfg.n - m))
    hi = min(m, cfg.r)
    share = m * cfg.center
    return [LeviSplit(cfg, m, s) for s in range(lo, hi + 1) if s > share]


def _all_splits(cfg: StrataConfig) -> list[LeviSplit]:
    return [sp for m in levi_reductions(cfg) for sp in mu_negative_splits(cfg, m)]


@lru_cache(maxsize=32)
def _union_with_witnesses(cfg: StrataConfig) -> dict[Polygon, Witness]:
    found: dict[Polygon, Witness] = {}
    for sp in _all_splits(cfg):
        for x1, x2 in sp.pairs():
            w = Witness(sp.m, sp.s, x1, x2)
            for a in ext_enumerate(w.quotient, w.sub):
                found.setdefault(a, w)
    return found


def extension_union(cfg: StrataConfig) -> frozenset[Polygon]:
    """All bundle slope vectors reachable as destabilizing extensions."""
    return frozenset(_union_with_witnesses(cfg))


def _find_witness(cfg: StrataConfig, target: Polygon) -> Witness | None:
    # Single-stratum path: test the target directly instead of building the
    # whole union, discarding pairs that fail the cheap necessary conditions.
    for sp in _all_splits(cfg):
        for x1, x2 in sp.pairs():
            w = Witness(sp.m, sp.s, x1, x2)
            sub, quot = w.sub, w.quotient
            if not strongly_slopewise_dominates(target, sub):
                continue
            if tilde_ext_contains(target, quot, sub) is None:
                continue
            if ext_contains(target, quot, sub):
                return w
    return None


def _is_newton_point(cfg: StrataConfig, v: Polygon) -> bool:
    return v.integral_breakpoints and v.degree == 0 and leq_dominance(v, cfg.delta)


def _classify(cfg: StrataConfig, v: Polygon, lookup) -> StratumRecord:
    if not _is_newton_point(cfg, v):
        return StratumRecord(v, False, False, None)
    decomposable, cuts = is_hn_decomposable(v, cfg.delta)
    if decomposable:
        return StratumRecord(v, True, True, WaStatus.DISJOINT, cuts=cuts)
    witness = lookup(bundle_vector(v))
    status = WaStatus.CONTAINED if witness is None else WaStatus.PROPER_INTERSECT
    return StratumRecord(v, True, False, status, witness)


def stratum_status(cfg: StrataConfig, nu_b_prime: Polygon, *, use_union: bool = False) -> StratumRecord:
    """Classify one stratum.

    By default the extension question is answered for this stratum alone;
    with ``use_union`` the cached union for ``cfg`` is built and consulted.
    """
    if nu_b_prime.rank != cfg.n:
        raise ValueError(f"rank mismatch: {nu_b_prime.rank} != {cfg.n}")
    if use_union:
        return _classify(cfg, nu_b_prime, _union_with_witnesses(cfg).get)
    return _classify(cfg, nu_b_prime, lambda t: _find_witness(cfg, t))


def stratification_report(cfg: StrataConfig) -> StrataReport:
    """One record per non-empty stratum, largest Newton point first."""
    union = _union_with_witnesses(cfg)
    report = StrataReport(cfg)
    for v in canonical_order(kottwitz_set(cfg.n, 0, cfg.delta)):
        report.records.append(_classify(cfg, v, union.get))
    return report

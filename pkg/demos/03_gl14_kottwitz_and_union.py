"""
GL_14 with mu = (1^(6), 0^(8))
==============================

Build the Kottwitz sets feeding the destabilizing extensions, then the
union of all extensions, then the stratum count.
"""

# %%
from newton_strata import StrataConfig, direct_sum, extension_union, kottwitz_set, mu_negative_splits, stratification_report
from newton_strata.strata import Witness

cfg = StrataConfig(14, 6)
for sp in mu_negative_splits(cfg, 7):
    first = kottwitz_set(7, sp.k1, sp.delta1)
    second = kottwitz_set(7, sp.k2, sp.delta2)
    print(f"s={sp.s}: B(7,{sp.k1},{sp.delta1}) has {len(first)}, B(7,{sp.k2},{sp.delta2}) has {len(second)}")

# %%
# The union of all extension vectors, minus those that are plain direct sums.
union = extension_union(cfg)
split = {
    direct_sum(Witness(7, sp.s, x1, x2).quotient, Witness(7, sp.s, x1, x2).sub)
    for sp in mu_negative_splits(cfg, 7)
    for x1, x2 in sp.pairs()
}
print(len(union), "extension vectors,", len(union - split), "non-split:")
for a in sorted(union - split, key=str):
    print("  ", a)

# %%
report = stratification_report(cfg)
basic = cfg.nu_b.__class__.constant(0, 14)
rest = [r for r in report.records if r.nu_b_prime != basic and not r.hn_decomposable]
print(report.summary)
print("non-basic HN-indecomposable:", len(rest), "contained:", sum(r.wa_status.value == "CONTAINED" for r in rest))

# %%
# One stratum with an explicit destabilizing extension.
rec = next(r for r in report.records if str(r.nu_b_prime) == "(1/4^(8),0^(2),-1/2^(4))")
print(rec.wa_status.value, "via sub", rec.witness.sub, "and quotient", rec.witness.quotient)

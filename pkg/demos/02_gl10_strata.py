"""
Newton strata for GL_10 with mu = (1^(4), 0^(6))
================================================

Classify every non-empty stratum of the flag variety against the weakly
admissible locus.
"""

# %%
from collections import Counter

from newton_strata import StrataConfig, levi_reductions, mu_negative_splits, stratification_report

cfg = StrataConfig(10, 4)
print("nu_b  =", cfg.nu_b)
print("delta =", cfg.delta)

# %%
# b reduces only to the Levi cutting at m = 5, and two distributions of the
# four ones of mu make the first block destabilizing.
for m in levi_reductions(cfg):
    for sp in mu_negative_splits(cfg, m):
        print(f"m={m} s={sp.s} k1={sp.k1} bounds {sp.delta1} | {sp.delta2}")

# %%
report = stratification_report(cfg)
for rec in report.records:
    extra = ""
    if rec.witness:
        extra = f"sub {rec.witness.sub}, quotient {rec.witness.quotient}"
    elif rec.cuts:
        extra = f"touches delta at {rec.cuts}"
    print(f"{str(rec.nu_b_prime):32} {rec.wa_status.value:17} {extra}")

# %%
print(report.summary)
print(Counter(r.wa_status.value for r in report.records))

"""
Minute criteria
===============

Tabulate which minuscule pairs pass the full and weak criteria.
"""

# %%
from newton_strata import fully_hn_gl, weakly_fully_hn_gl, weakly_fully_hn_typeA

print("GL_n, mu = (1^(r), 0^(n-r)):  F full, w weak only, . neither")
for n in range(2, 13):
    row = []
    for r in range(1, n):
        mu = [1] * r + [0] * (n - r)
        row.append("F" if fully_hn_gl(n, mu) else "w" if weakly_fully_hn_gl(n, mu) else ".")
    print(f"n={n:2}  " + " ".join(row))

# %%
# Type A_n inner forms: rows i, columns i' (the twist).
n = 5
print(f"A_{n}: weak criterion, rows i=1..{n}, columns i'=0..{n}")
for i in range(1, n + 1):
    print(f"i={i}  " + " ".join("w" if weakly_fully_hn_typeA(n, i, ip) else "." for ip in range(n + 1)))

# %%
res = weakly_fully_hn_typeA(5, 3, 3)
print("A_5, i=3, i'=3:", res.holds, "violations at", res.violations)

"""
Extensions of slope vectors
===========================

Walk through the combinatorial extension test and the exact inductive
enumeration, including a case where the two disagree.
"""

# %%
# Polygons are written in block form; a bare slope like -1/6 stands for one
# stable summand, so its multiplicity defaults to the denominator.
from newton_strata import direct_sum, ext_contains, ext_enumerate, hong_conditions, parse, tilde_ext_contains

c = parse("(0,-1/6^(6))")
d = parse("(-1/3^(3))")
print("quotient", c, "rank", c.rank, "degree", c.degree)
print("sub     ", d, "rank", d.rank, "degree", d.degree)

# %%
# Every extension of O(c) by O(d): peel the last stable summand of c and
# recurse.  The split sum is always among them.
for a in ext_enumerate(c, d):
    tag = "split" if a == direct_sum(c, d) else ""
    print(f"  {a} {tag}")

# %%
# The path test finds an arrangement b of the coordinates of c and d that
# sits above a in prefix sums.  Here it succeeds...
a = parse("(1,5/7^(7),4/7^(7),0)")
c2, d2 = parse("(3,3/5^(5))"), parse("(5/9^(9),-1)")
w = tilde_ext_contains(a, c2, d2)
print("H positions:", w.h_positions)
print("b vector:   ", [str(x) for x in w.b_vector])

# %%
# ...yet the exact enumeration shows no such extension exists.
print("is an extension:", ext_contains(a, c2, d2))

# %%
# Conversely the three slopewise dominance conditions can all hold while
# the path test already fails.
a3, c3, d3 = parse("(6,5,2,1)"), parse("(10,4)"), parse("(0^(2))")
print("dominance conditions:", hong_conditions(a3, c3, d3))
print("path witness:", tilde_ext_contains(a3, c3, d3))

"""
Growing the W-sets
==================

Start from the empty set and at level i extend every set by p - i + 1 new
indices.  However the indices are chosen, level i has at least C(p, i) sets.
"""

from math import comb

from bettibounds import build_w_sets
from bettibounds.constructions import first_free_chooser, random_chooser

p, n = 5, 9
greedy = build_w_sets(p, first_free_chooser(n), n)
random_fam = build_w_sets(p, random_chooser(n, seed=1), n)

print("i  C(p,i)  smallest-first  random")
for i in range(p + 1):
    print(f"{i}  {comb(p, i):6d}  {len(greedy[i]):14d}  {len(random_fam[i]):6d}")

# picking the smallest free indices every time hits the bound exactly
print([sorted(w) for w in greedy[2]])

"""
Extremal ideals with a linear resolution
========================================

Among ideals generated by k forms of degree d with a linear resolution, the
revlex segment I(d,k) has the smallest Betti numbers and the lex segment
J(d,k) the largest.  We look at both ends and at something in between.
"""

from bettibounds import (MonomialIdeal, check_sandwich, ek_betti, lex_segment_ideal,
                         rev_segment_ideal, revlex_exchange_walk, random_stable_ideal)

n, d, k = 4, 2, 5
low, high = rev_segment_ideal(n, d, k), lex_segment_ideal(n, d, k)
print("I(2,5) =", low)
print("J(2,5) =", high)

# a random stable ideal with the same shape
I = random_stable_ideal(n, d, k, seed=7)
report = check_sandwich(I)
print(report.render())

# walk from J(2,5) down to I(2,5), one generator swap at a time;
# no Betti number goes up along the way
for step in revlex_exchange_walk(high):
    t = ek_betti(step)
    print(f"{str(step):45s} totals {[t.total(i) for i in range(n)]}")

# equal tables do not force equal ideals: this one is not I(2,4)
twin = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1)])
print(twin, ek_betti(twin) == ek_betti(rev_segment_ideal(3, 2, 4)))

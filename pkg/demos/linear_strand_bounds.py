"""
Lower bounds on the linear strand
=================================

If the k-th linear strand of a module has length p, then its entries are at
least the binomial coefficients C(p, i).  For monomial ideals this always
holds; the report lists every inequality with its margin.
"""

from bettibounds import check_herzog_bounds, check_syzygy_bounds, koszul_betti, linear_strand
from bettibounds.monomial import random_monomial_ideal

I = random_monomial_ideal(4, 3, 6, seed=3)
table = koszul_betti(I)
print(I)
print(table.render())

for k in range(I.n + 1):
    s = linear_strand(table, k)
    print(f"k={k}: d_k={s.d_k} strand={s.as_list()} p={s.p}")

print(check_herzog_bounds(table).render())

# the same bounds seen from the quotient S/I, and shifted to syzygy modules
print(check_herzog_bounds(table.quotient()).passed)
print([check_syzygy_bounds(table, k).passed for k in range(I.n + 1)])

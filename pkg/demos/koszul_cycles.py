"""
Working with Koszul cycles
==========================

Chains of the Koszul complex are sums of m_F e_F.  We take a cycle, push it
off a variable while staying in the same homology class, and read off p + 1
independent coefficients from its witness chain.
"""

from bettibounds import (cycle_basis, differential, eliminate_variable, partial_k,
                         witness_chain)
from bettibounds.constructions import is_homologous
from bettibounds.monomial import MonomialIdeal
from bettibounds.strands import strand

I = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 1, 1)])
a = (2, 1, 1)
s = strand(I, a)
print("strand dims", s.dims, "homology", s.homology_dims())

# a cycle in homological degree 1
z = sum(cycle_basis(I, 1, a)[1:], cycle_basis(I, 1, a)[0])
print("z =", z)
print("d(z) = 0:", not differential(z))

# contracting against e_k keeps cycles cycles
for k in range(3):
    print(f"partial_{k + 1}(z) =", partial_k(z, k))

# remove e_3 from z without leaving its homology class
w = eliminate_variable(z, 2)
print("w =", w, "homologous:", is_homologous(z, w))

# p + 1 coefficients with strictly increasing initial terms
wc = witness_chain(z)
print("sets", wc.original_sets, "initial terms", wc.initial_terms, "rank", wc.coefficient_rank())

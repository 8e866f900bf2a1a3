"""Betti numbers of monomial ideals by two routes, and checks of their bounds.

The Eliahou-Kervaire formula gives the graded Betti numbers of a stable
ideal in closed form; the Koszul engine computes them for any monomial ideal
from the homology of multidegree slices over a prime field.  On top of both
sit verifiers for the linear-strand lower bounds and for the sandwich
table(I(d,k)) <= table(I) <= table(J(d,k)) of ideals with linear resolution.
"""

from .betti import (BettiTable, LinearStrand, MultigradedBettiTable, check_herzog_bounds,
                    check_sandwich, check_syzygy_bounds, d_k_degree, ek_betti,
                    has_linear_resolution, linear_strand, regularity, revlex_exchange_walk,
                    table_leq)
from .constructions import build_w_sets, eliminate_variable, witness_chain
from .field import PrimeField
from .groebner import Polynomial, buchberger, gin_probabilistic
from .koszul import CoefficientModule, KoszulChain, differential, partial_k, partial_set
from .monomial import (MonomialIdeal, TermOrder, cmp_lex, cmp_rlex, contains, is_stable,
                       is_strongly_stable, max_index, minimalize, random_monomial_ideal,
                       random_stable_ideal)
from .segments import enumerate_degree, lex_segment_ideal, rev_segment_ideal
from .strands import cycle_basis, koszul_betti, multigraded_betti, strand

__version__ = "0.1.0"

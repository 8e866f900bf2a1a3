"""
Betti numbers two ways
======================

A stable ideal has a closed-form Betti table.  The Koszul engine gets the
same numbers from linear algebra over a prime field, one multidegree at a
time, and it works for any monomial ideal.
"""

from bettibounds import MonomialIdeal, ek_betti, is_stable, koszul_betti, multigraded_betti

# x1^2, x1x2, x1x3, x2^2 in three variables
I = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0)])
print(I, "stable:", is_stable(I))

# closed form: each generator contributes binomial(m - 1, i) to column i
print(ek_betti(I).render())

# the Koszul route agrees, here over F_32003 and over F_2
print(koszul_betti(I, 32003) == ek_betti(I) == koszul_betti(I, 2))

# the edge ideal of a triangle is not stable, so only the Koszul route applies
triangle = MonomialIdeal.from_generators(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
print(triangle, "stable:", is_stable(triangle))
print(koszul_betti(triangle).render())

# the fine grading shows where the two first syzygies live
for (i, a), beta in multigraded_betti(triangle).items():
    print(f"beta_{i},{a} = {beta}")

# and the same table for the quotient S/I, shifted one column to the right
print(koszul_betti(triangle, kind="quotient").render())

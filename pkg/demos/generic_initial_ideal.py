"""
Generic initial ideals by random coordinates
============================================

Change coordinates by a random invertible matrix, compute a Groebner basis
in revlex, and keep the initial ideal if several independent trials agree.
For an ideal with a linear resolution the result is stable and has the same
Betti table.
"""

from bettibounds import gin_probabilistic, is_stable, koszul_betti
from bettibounds.groebner import Polynomial, buchberger, format_polynomial, initial_ideal
from bettibounds.monomial import MonomialIdeal

triangle = MonomialIdeal.from_generators(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
res = gin_probabilistic(triangle, trials=3, seed=2)
print("Gin", res.ideal, "stable:", is_stable(res.ideal), "agreed:", res.unanimous)
print(koszul_betti(triangle) == koszul_betti(res.ideal))

# a plain Groebner basis computation, over F_101 in lex
q = 101
x1 = Polynomial.monomial(2, q, (1, 0))
x2 = Polynomial.monomial(2, q, (0, 1))
f = x1 * x1 - x2
g = x1 * x2 - Polynomial.monomial(2, q, (0, 0))
for h in buchberger([f, g], "lex"):
    print(format_polynomial(h, "lex"))
print(initial_ideal(buchberger([f, g], "lex"), "lex"))

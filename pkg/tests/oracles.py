"""Independent reference computations used only by the tests.

None of this imports the package's linear algebra or Koszul code: Betti
numbers come from reduced homology of the upper Koszul simplicial complex
K^a(I) = {F squarefree : x^(a - F) in I}, computed over the rationals, and
the EK sums are written out from the closed form.
"""

from fractions import Fraction
from itertools import combinations
from math import comb


def _in_ideal(gens, b):
    return any(all(g[i] <= b[i] for i in range(len(b))) for g in gens)


def _rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _reduced_homology(faces):
    """dim H~_d for d >= -1 of a simplicial complex given by its faces."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        mat = []
        for f in by_dim.get(d, []):
            row = [0] * len(lower)
            for pos in range(len(f)):
                row[lower[f[:pos] + f[pos + 1:]]] = (-1) ** pos
            mat.append(row)
        ranks[d] = _rank(mat) if lower else 0
    out = {}
    for d in range(-1, top + 1):
        dim = len(by_dim.get(d, []))
        h = dim - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def lcm_closure(gens):
    n = len(gens[0])
    out = set()
    for r in range(1, len(gens) + 1):
        for sub in combinations(gens, r):
            out.add(tuple(max(g[i] for g in sub) for i in range(n)))
    return out


def simplicial_betti(gens, n):
    """Coarse table {(i, j): beta} of the ideal generated by ``gens``."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return {}
    table = {}
    for a in lcm_closure(gens):
        supp = [i for i in range(n) if a[i] > 0]
        faces = []
        for r in range(len(supp) + 1):
            for f in combinations(supp, r):
                b = tuple(a[i] - (i in f) for i in range(n))
                if _in_ideal(gens, b):
                    faces.append(f)
        for d, h in _reduced_homology(faces).items():
            key = (d + 1, sum(a))
            table[key] = table.get(key, 0) + h
    return table


def ek_by_hand(gens):
    """Sum of C(m - 1, i) over generators, m the largest variable index used."""
    table = {}
    for g in gens:
        m = max(i + 1 for i, e in enumerate(g) if e)
        for i in range(m):
            key = (i, i + sum(g))
            table[key] = table.get(key, 0) + comb(m - 1, i)
    return table


def all_monomials(n, d):
    if n == 1:
        return [(d,)]
    return [(e,) + rest for e in range(d, -1, -1) for rest in all_monomials(n - 1, d - e)]

"""A small Buchberger engine over F_q and probabilistic generic initial ideals."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import ArgumentError, DimensionError, InstabilityError
from .field import DEFAULT_PRIME, as_field
from .monomial import (MonomialIdeal, TermOrder, divides, format_monomial, lcm, minimalize,
                       multiply, quotient)

SMALL_FIELD_WARNING = 10007


class Polynomial:
    """Sparse polynomial over F_q: dict monomial -> nonzero residue."""

    __slots__ = ("n", "q", "terms")

    def __init__(self, n: int, q: int, terms: Mapping | None = None):
        self.n = n
        self.q = q
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise DimensionError(f"monomial {mono} is not over {n} variables")
            c = int(c) % q
            if c:
                clean[mono] = (clean.get(mono, 0) + c) % q
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def monomial(cls, n, q, mono, coeff=1):
        return cls(n, q, {tuple(mono): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % self.q
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return _raw(self.n, self.q, out)

    def __neg__(self):
        return _raw(self.n, self.q, {m: (-c) % self.q for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = multiply(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % self.q
        return _raw(self.n, self.q, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: int):
        c %= self.q
        if not c:
            return _raw(self.n, self.q, {})
        return _raw(self.n, self.q, {m: v * c % self.q for m, v in self.terms.items()})

    def shift(self, mono, c: int = 1):
        """c * x^mono * self."""
        c %= self.q
        return _raw(self.n, self.q, {multiply(m, mono): v * c % self.q for m, v in self.terms.items()})

    def leading_monomial(self, order=TermOrder.RLEX):
        return max(self.terms, key=TermOrder.parse(order).key)

    def leading_coefficient(self, order=TermOrder.RLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=TermOrder.RLEX):
        return self.scale(pow(self.leading_coefficient(order), self.q - 2, self.q))

    def sorted_terms(self, order=TermOrder.RLEX):
        return sorted(self.terms.items(), key=lambda t: TermOrder.parse(order).key(t[0]), reverse=True)

    def __repr__(self):
        return format_polynomial(self)


def _raw(n, q, terms):
    p = Polynomial.__new__(Polynomial)
    p.n, p.q, p.terms = n, q, terms
    return p


def format_polynomial(f: Polynomial, order=TermOrder.RLEX) -> str:
    if not f.terms:
        return "0"
    out = []
    for mono, c in f.sorted_terms(order):
        sym = c if c <= f.q // 2 else c - f.q
        body = format_monomial(mono)
        if body == "1":
            text = str(abs(sym))
        elif abs(sym) == 1:
            text = body
        else:
            text = f"{abs(sym)}*{body}"
        out.append(("- " if sym < 0 else "+ ") + text)
    s = " ".join(out)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


# coordinate changes

@dataclass
class CoordinateChange:
    """g in GL(n, F_q) acting by x_j -> sum_i g[i][j] x_i."""

    matrix: np.ndarray
    q: int = DEFAULT_PRIME
    seed: object = None

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.int64) % self.q
        n = self.matrix.shape[0]
        if self.matrix.shape != (n, n):
            raise DimensionError("coordinate change must be square")
        if as_field(self.q).det(self.matrix) == 0:
            raise ArgumentError("coordinate change is singular")

    @property
    def n(self):
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, n, q=DEFAULT_PRIME):
        return cls(np.eye(n, dtype=np.int64), q)

    @classmethod
    def random(cls, n, q=DEFAULT_PRIME, seed=None):
        """Uniform entries, redrawn until the matrix is invertible."""
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        fld = as_field(q)
        while True:
            m = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(n)], dtype=np.int64)
            if fld.det(m):
                return cls(m, q, seed if not isinstance(seed, random.Random) else None)

    def compose(self, other: "CoordinateChange") -> "CoordinateChange":
        """self . other: applying ``other`` and then ``self``."""
        return CoordinateChange(as_field(self.q).matmul(self.matrix, other.matrix), self.q)

    def image_of_variable(self, j: int) -> Polynomial:
        n = self.n
        return Polynomial(n, self.q, {tuple(int(i == r) for r in range(n)): int(self.matrix[i, j])
                                      for i in range(n)})


def apply_change(g: CoordinateChange, f: Polynomial) -> Polynomial:
    if g.n != f.n or g.q != f.q:
        raise DimensionError("coordinate change and polynomial disagree on ring")
    images = [g.image_of_variable(j) for j in range(f.n)]
    powers = [{0: Polynomial.monomial(f.n, f.q, (0,) * f.n)} for _ in range(f.n)]

    def power(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = power(j, e - 1) * images[j]
        return cache[e]

    out = _raw(f.n, f.q, {})
    for mono, c in f.terms.items():
        term = Polynomial.monomial(f.n, f.q, (0,) * f.n, c)
        for j, e in enumerate(mono):
            if e:
                term = term * power(j, e)
        out = out + term
    return out


# Buchberger

def reduce_polynomial(f: Polynomial, basis: list, order=TermOrder.RLEX) -> Polynomial:
    """Full remainder of f modulo ``basis`` (all monic)."""
    order = TermOrder.parse(order)
    key = order.key
    leads = [(g.leading_monomial(order), g) for g in basis]
    rem = {}
    f = _raw(f.n, f.q, dict(f.terms))
    q = f.q
    while f.terms:
        lm = max(f.terms, key=key)
        c = f.terms[lm]
        for glm, g in leads:
            if divides(glm, lm):
                shift = quotient(lm, glm)
                for m, v in g.terms.items():
                    mm = multiply(m, shift)
                    nv = (f.terms.get(mm, 0) - c * v) % q
                    if nv:
                        f.terms[mm] = nv
                    else:
                        f.terms.pop(mm, None)
                break
        else:
            rem[lm] = c
            del f.terms[lm]
    return _raw(f.n, q, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order=TermOrder.RLEX) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    m = lcm(lf, lg)
    return (f.shift(quotient(m, lf), pow(f.terms[lf], f.q - 2, f.q))
            - g.shift(quotient(m, lg), pow(g.terms[lg], g.q - 2, g.q)))


def buchberger(gens: list, order=TermOrder.RLEX) -> list:
    """Reduced Groebner basis (monic, sorted by leading monomial, descending)."""
    order = TermOrder.parse(order)
    key = order.key
    basis = [g.monic(order) for g in gens if g]
    if not basis:
        return []
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        # normal strategy: smallest lcm first
        i, j = min(pairs, key=lambda pr: (key(lcm(basis[pr[0]].leading_monomial(order),
                                                   basis[pr[1]].leading_monomial(order))), pr))
        pairs.discard((i, j))
        li, lj = basis[i].leading_monomial(order), basis[j].leading_monomial(order)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials: the S-polynomial reduces to zero
        r = reduce_polynomial(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.monic(order))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    return _interreduce(basis, order)


def _interreduce(basis, order):
    key = order.key
    basis = sorted(basis, key=lambda g: key(g.leading_monomial(order)))
    minimal = []
    for g in basis:
        lm = g.leading_monomial(order)
        if not any(divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lm = g.leading_monomial(order)
        tail = reduce_polynomial(_raw(g.n, g.q, {m: c for m, c in g.terms.items() if m != lm}), others, order)
        reduced.append(Polynomial.monomial(g.n, g.q, lm) + tail)
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return reduced


def is_groebner_basis(basis: list, order=TermOrder.RLEX) -> bool:
    for j in range(len(basis)):
        for i in range(j):
            if reduce_polynomial(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


def initial_ideal(basis: list, order=TermOrder.RLEX) -> MonomialIdeal:
    if not basis:
        raise ArgumentError("cannot infer n from an empty basis")
    return minimalize([g.leading_monomial(order) for g in basis if g], n=basis[0].n)


# generic initial ideals

def ideal_polynomials(ideal: MonomialIdeal, q=DEFAULT_PRIME) -> list:
    return [Polynomial.monomial(ideal.n, q, g) for g in ideal.generators]


@dataclass
class GinResult:
    ideal: MonomialIdeal
    q: int
    trials: int
    seed: object
    observed: list = field(default_factory=list)
    changes: list = field(default_factory=list)

    @property
    def unanimous(self) -> bool:
        return all(o == self.ideal for o in self.observed)

    def to_dict(self):
        ideal = {"n": self.ideal.n, "generators": [list(g) for g in self.ideal.generators]}
        return {"ideal": ideal, "field_prime": self.q, "trials": self.trials, "seed": self.seed,
                "unanimous": self.unanimous}


def gin_probabilistic(gens, trials: int = 3, seed=None, q=DEFAULT_PRIME,
                      order=TermOrder.RLEX) -> GinResult:
    """in(g(I)) for ``trials`` random g in GL(n, F_q); all trials must agree.

    ``gens`` is a MonomialIdeal or a list of Polynomials.  The answer
    approximates the generic initial ideal in characteristic q only.
    """
    if trials < 2:
        raise ArgumentError("need at least two trials to detect disagreement")
    q = as_field(q).q
    if q < SMALL_FIELD_WARNING:
        warnings.warn(f"field F_{q} is small; random coordinates may be special", stacklevel=2)
    if isinstance(gens, MonomialIdeal):
        polys = ideal_polynomials(gens, q)
        n = gens.n
    else:
        polys = list(gens)
        n = polys[0].n
    rng = random.Random(seed)
    observed, changes = [], []
    for _ in range(trials):
        g = CoordinateChange.random(n, q, random.Random(rng.getrandbits(64)))
        gb = buchberger([apply_change(g, f) for f in polys], order)
        observed.append(initial_ideal(gb, order) if gb else MonomialIdeal(n, ()))
        changes.append(g)
    if any(o != observed[0] for o in observed):
        raise InstabilityError(
            "random coordinate changes gave different initial ideals; rerun with more trials, "
            "another seed or a larger field prime", observed=observed)
    return GinResult(observed[0], q, trials, seed, observed, changes)

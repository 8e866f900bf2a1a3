"""Monomials, term orders and monomial ideals.

A monomial x^a is represented by its exponent vector, a plain tuple of
nonnegative ints.  Variable positions are 0-based internally; everything
printed for people (``format_monomial``, the CLI) uses x1 ... xn.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import ArgumentError, DimensionError, UndefinedInputError

Monomial = tuple  # tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    a = tuple(int(e) for e in exponents)
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """x_{i+1} in n variables (``i`` is 0-based)."""
    return tuple(1 if k == i else 0 for k in range(n))


def degree(a: Monomial) -> int:
    return sum(a)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def support(a: Monomial) -> tuple:
    return tuple(i for i, e in enumerate(a) if e)


def _check_same_n(a, b):
    if len(a) != len(b):
        raise DimensionError(f"monomials over {len(a)} and {len(b)} variables")


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def cmp_lex(a: Monomial, b: Monomial) -> int:
    """Degree first, then the larger exponent at the first differing position wins."""
    _check_same_n(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return _sign(da - db)
    for x, y in zip(a, b):
        if x != y:
            return _sign(x - y)
    return 0


def cmp_rlex(a: Monomial, b: Monomial) -> int:
    """Degree first, then the smaller exponent at the last differing position wins."""
    _check_same_n(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return _sign(da - db)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return _sign(y - x)
    return 0


def lex_key(a: Monomial):
    return (sum(a), a)


def rlex_key(a: Monomial):
    return (sum(a), tuple(-e for e in reversed(a)))


class TermOrder(enum.Enum):
    """Monomial orders with x1 > x2 > ... > xn.

    Both ``LEX`` and ``RLEX`` compare total degree first.  Since the lex order
    used here is already degree-first, ``GRLEX`` coincides with ``LEX``; it is
    kept as its own name because it is the order required on free-module
    monomials by the witness-chain construction.
    """

    LEX = "lex"
    RLEX = "rlex"
    GRLEX = "graded-lex"

    def key(self, a: Monomial):
        return rlex_key(a) if self is TermOrder.RLEX else lex_key(a)

    def cmp(self, a: Monomial, b: Monomial) -> int:
        return cmp_rlex(a, b) if self is TermOrder.RLEX else cmp_lex(a, b)

    @classmethod
    def parse(cls, value) -> "TermOrder":
        if isinstance(value, cls):
            return value
        for member in cls:
            if value in (member.value, member.name, member.name.lower()):
                return member
        raise ValueError(f"unknown term order {value!r}")


def max_index(a: Monomial) -> int:
    """m(x^a): the largest (1-based) i with x_i dividing x^a."""
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i + 1
    raise UndefinedInputError("m(x^a) is undefined for the unit monomial")


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Generators are stored deduplicated, pairwise non-dividing and in
    descending lex order.  ``generators == ()`` is the zero ideal and
    ``generators == ((0,)*n,)`` the unit ideal.  Prefer ``minimalize`` or
    ``MonomialIdeal.from_generators`` for construction.
    """

    n: int
    generators: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError("variable count must be nonnegative")
        for g in self.generators:
            if len(g) != self.n:
                raise DimensionError(f"generator {g} does not have {self.n} entries")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimalize(gens, n=n)

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def degrees(self) -> set:
        return {sum(g) for g in self.generators}

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    mons = {monomial(g) for g in gens}
    if n is None:
        if not mons:
            raise ArgumentError("n is required for an empty generator set")
        n = len(next(iter(mons)))
    for g in mons:
        if len(g) != n:
            raise DimensionError(f"generator {g} does not have {n} entries")
    # sorting by degree means a divisor is always seen before its multiples
    kept = []
    for g in sorted(mons, key=sum):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort(key=lex_key, reverse=True)
    return MonomialIdeal(n, tuple(kept))


def contains(ideal: MonomialIdeal, a: Monomial) -> bool:
    if len(a) != ideal.n:
        raise DimensionError(f"monomial {a} is not over {ideal.n} variables")
    return any(divides(g, a) for g in ideal.generators)


def stable_moves(a: Monomial):
    """x_i * x^a / x_{m(x^a)} for every i < m(x^a)."""
    m = max_index(a) - 1
    for i in range(m):
        b = list(a)
        b[i] += 1
        b[m] -= 1
        yield tuple(b)


def stability_violation(ideal: MonomialIdeal):
    """First (generator, exchanged monomial) breaking stability, or None."""
    for g in ideal.generators:
        if sum(g) == 0:
            continue
        for b in stable_moves(g):
            if not contains(ideal, b):
                return g, b
    return None


def is_stable(ideal: MonomialIdeal) -> bool:
    return stability_violation(ideal) is None


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    for g in ideal.generators:
        for j in support(g):
            for i in range(j):
                b = list(g)
                b[i] += 1
                b[j] -= 1
                if not contains(ideal, tuple(b)):
                    return False
    return True


def stable_closure(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Smallest stable ideal containing the given monomials."""
    ideal = minimalize(gens, n=n)
    while True:
        missing = [b for g in ideal.generators if sum(g) for b in stable_moves(g)
                   if not contains(ideal, b)]
        if not missing:
            return ideal
        ideal = minimalize(list(ideal.generators) + missing, n=ideal.n)


def _single_degree_stable(members: frozenset) -> bool:
    return all(b in members for a in members for b in stable_moves(a))


def random_stable_ideal(n: int, d: int, k: int, seed=None, steps: int | None = None) -> MonomialIdeal:
    """A stable ideal with exactly ``k`` generators, all of degree ``d``.

    Starts at the revlex segment ideal and performs ``steps`` (default 8k)
    random exchange attempts, each swapping one generator for a monomial
    outside the ideal while keeping the generator set stable.
    """
    from .segments import enumerate_degree, check_segment_args

    check_segment_args(n, d, k)
    if k == 0:
        return MonomialIdeal(n, ())
    rng = random.Random(seed)
    stratum = enumerate_degree(n, d, TermOrder.RLEX)
    current = set(stratum[:k])
    if d == 0:
        return minimalize(current, n=n)
    steps = 8 * k if steps is None else steps
    for _ in range(steps):
        # a generator can leave only if no other generator moves onto it
        targets = {b for a in current for b in stable_moves(a)}
        removable = sorted(current - targets)
        if not removable:
            continue
        out = rng.choice(removable)
        rest = current - {out}
        addable = [c for c in stratum if c not in rest and all(b in rest for b in stable_moves(c))]
        new = rng.choice(addable)
        current = rest | {new}
    return minimalize(current, n=n)


def random_monomial_ideal(n: int, d: int, k: int, seed=None, min_degree: int = 1) -> MonomialIdeal:
    """A random ideal with exactly ``k`` minimal generators of degree in [min_degree, d]."""
    if n < 1 or d < min_degree or min_degree < 0:
        raise ArgumentError("need n >= 1 and 0 <= min_degree <= d")
    cap = comb(n + d - 1, d)
    if not 0 <= k <= cap:
        raise ArgumentError(f"k must lie in [0, {cap}] for n={n}, d={d}")
    if min_degree == 0 and k > 1:
        raise ArgumentError("the unit ideal has a single generator")
    rng = random.Random(seed)
    for _ in range(50):
        gens = []
        for _ in range(40 * (k + 1)):
            if len(gens) == k:
                return minimalize(gens, n=n)
            deg = rng.randint(min_degree, d)
            cuts = sorted(rng.randint(0, deg) for _ in range(n - 1))
            a = tuple(b - c for b, c in zip(cuts + [deg], [0] + cuts))
            if not any(divides(g, a) or divides(a, g) for g in gens):
                gens.append(a)
    # any k distinct monomials of degree d are an antichain
    from .segments import enumerate_degree

    return minimalize(rng.sample(enumerate_degree(n, d, TermOrder.LEX), k), n=n)

"""Chains of the Koszul complex K(x_1, ..., x_n) tensored with a monomial module.

A chain is a finite sum of terms ``c * x^b e_F`` with ``F`` a sorted tuple of
0-based variable positions, ``x^b`` a monomial of the coefficient module and
``c`` a residue mod q.  The coefficient module is one of S, a monomial ideal
I, or the quotient S/I; only the quotient ever kills products.

Signs follow the inversion count alpha(F, G) = #{(f, g) : f > g, f in F, g in G}:
contracting e_f out of e_F costs (-1)^alpha({f}, F \\ {f}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ContractError, DimensionError
from .field import DEFAULT_PRIME
from .monomial import MonomialIdeal, contains, format_monomial, multiply, variable

RING, IDEAL, QUOTIENT = "ring", "ideal", "quotient"


def alpha(f_set: Iterable[int], g_set: Iterable[int]) -> int:
    g_list = list(g_set)
    return sum(1 for f in f_set for g in g_list if f > g)


@dataclass(frozen=True)
class CoefficientModule:
    """S, a monomial ideal I, or S/I, as the coefficient module M."""

    n: int
    kind: str = RING
    ideal: MonomialIdeal | None = None

    def __post_init__(self):
        if self.kind not in (RING, IDEAL, QUOTIENT):
            raise ValueError(f"unknown module kind {self.kind!r}")
        if self.kind != RING:
            if self.ideal is None:
                raise ValueError(f"{self.kind} module needs an ideal")
            if self.ideal.n != self.n:
                raise DimensionError("ideal and module disagree on n")

    @classmethod
    def ring(cls, n):
        return cls(n, RING, None)

    @classmethod
    def of_ideal(cls, ideal):
        return cls(ideal.n, IDEAL, ideal)

    @classmethod
    def quotient_by(cls, ideal):
        return cls(ideal.n, QUOTIENT, ideal)

    def has(self, b) -> bool:
        """Whether x^b is a nonzero basis monomial of M."""
        if self.kind == RING:
            return True
        inside = contains(self.ideal, b)
        return inside if self.kind == IDEAL else not inside

    def kills(self, b) -> bool:
        return self.kind == QUOTIENT and contains(self.ideal, b)

    @property
    def embeds_in_free(self) -> bool:
        return self.kind != QUOTIENT


@dataclass(frozen=True, eq=False)
class KoszulChain:
    module: CoefficientModule
    q: int = DEFAULT_PRIME
    terms: Mapping = field(default_factory=dict)  # (F, b) -> nonzero residue

    @classmethod
    def from_terms(cls, module, q, items) -> "KoszulChain":
        """Build from ``(F, b, c)`` triples; F may be any iterable of positions."""
        acc = {}
        for f_set, b, c in items:
            ordered = not isinstance(f_set, (set, frozenset))
            f_set = tuple(f_set)
            f_sorted = tuple(sorted(f_set))
            if len(set(f_sorted)) != len(f_sorted):
                continue  # e_f ^ e_f = 0
            if module.kind == IDEAL and not module.has(tuple(b)):
                raise ContractError(f"{format_monomial(tuple(b))} is not in {module.ideal}")
            sign = -1 if ordered and alpha_of_order(f_set) % 2 else 1
            _accumulate(acc, (f_sorted, tuple(b)), sign * c, q, module)
        return cls(module, q, acc)

    @classmethod
    def zero(cls, module, q=DEFAULT_PRIME):
        return cls(module, q, {})

    @property
    def n(self) -> int:
        return self.module.n

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, KoszulChain):
            return NotImplemented
        return self.q == other.q and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, scale):
        if self.q != other.q or self.n != other.n:
            raise DimensionError("chains over different rings")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(acc, key, scale * c, self.q, None)
        return KoszulChain(self.module, self.q, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c: int) -> "KoszulChain":
        c %= self.q
        if c == 0:
            return KoszulChain(self.module, self.q, {})
        return KoszulChain(self.module, self.q, {k: v * c % self.q for k, v in self.terms.items()})

    @property
    def hdeg(self) -> int | None:
        """Homological degree, or None for the zero chain or a mixed chain."""
        sizes = {len(f) for f, _ in self.terms}
        return sizes.pop() if len(sizes) == 1 else None

    @property
    def multidegree(self):
        """a with b + eps_F = a for every term, or None if not Z^n-homogeneous."""
        degs = set()
        for f_set, b in self.terms:
            a = list(b)
            for f in f_set:
                a[f] += 1
            degs.add(tuple(a))
        return degs.pop() if len(degs) == 1 else None

    @property
    def internal_degree(self):
        degs = {sum(b) + len(f) for f, b in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def index_sets(self):
        return sorted({f for f, _ in self.terms})

    def coefficient(self, f_set) -> dict:
        """m_F as a dict monomial -> residue."""
        f_set = tuple(sorted(f_set))
        return {b: c for (f, b), c in self.terms.items() if f == f_set}

    def with_module(self, module) -> "KoszulChain":
        return KoszulChain.from_terms(module, self.q, ((f, b, c) for (f, b), c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (f_set, b), c in sorted(self.terms.items()):
            c = c if c <= self.q // 2 else c - self.q
            e = "e_{" + ",".join(str(f + 1) for f in f_set) + "}"
            parts.append(f"{c}*{format_monomial(b)}*{e}")
        return " + ".join(parts)


def alpha_of_order(seq: Sequence[int]) -> int:
    """Inversions of a sequence: the sign needed to sort e_{s1} ^ ... ^ e_{sk}."""
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def _accumulate(acc, key, c, q, module):
    if module is not None and module.kills(key[1]):
        return
    v = (acc.get(key, 0) + c) % q
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _as_poly(value, n):
    """A ring element given as int (scalar) or dict monomial -> coefficient."""
    if isinstance(value, Mapping):
        return dict(value)
    return {(0,) * n: int(value)} if value else {}


def contract(z: KoszulChain, mu: Sequence) -> KoszulChain:
    """d_mu for mu in L*, given by the images mu(e_1), ..., mu(e_n)."""
    if len(mu) != z.n:
        raise DimensionError(f"mu has {len(mu)} entries, expected {z.n}")
    polys = [_as_poly(m, z.n) for m in mu]
    acc = {}
    for (f_set, b), c in z.terms.items():
        for pos, f in enumerate(f_set):
            if not polys[f]:
                continue
            rest = f_set[:pos] + f_set[pos + 1:]
            sign = -c if pos % 2 else c  # pos elements of F precede f
            for mono, coef in polys[f].items():
                _accumulate(acc, (rest, multiply(mono, b)), sign * coef, z.q, z.module)
    return KoszulChain(z.module, z.q, acc)


def variables_form(n: int):
    """mu with mu(e_i) = x_i; its contraction is the Koszul differential."""
    return [{variable(n, i): 1} for i in range(n)]


def differential(z: KoszulChain) -> KoszulChain:
    acc = {}
    for (f_set, b), c in z.terms.items():
        for pos, f in enumerate(f_set):
            rest = f_set[:pos] + f_set[pos + 1:]
            nb = b[:f] + (b[f] + 1,) + b[f + 1:]
            _accumulate(acc, (rest, nb), -c if pos % 2 else c, z.q, z.module)
    return KoszulChain(z.module, z.q, acc)


def partial_k(z: KoszulChain, k: int) -> KoszulChain:
    """Contraction against e_k^* (``k`` 0-based)."""
    acc = {}
    for (f_set, b), c in z.terms.items():
        if k in f_set:
            pos = f_set.index(k)
            rest = f_set[:pos] + f_set[pos + 1:]
            _accumulate(acc, (rest, b), -c if pos % 2 else c, z.q, None)
    return KoszulChain(z.module, z.q, acc)


def partial_set(z: KoszulChain, indices: Iterable[int]) -> KoszulChain:
    """d_I = d_{i1} o ... o d_{it} for I = {i1 < ... < it}; d_{it} acts first."""
    for k in sorted(indices, reverse=True):
        z = partial_k(z, k)
    return z


def wedge(z: KoszulChain, w: KoszulChain) -> KoszulChain:
    """z ^ w, multiplying coefficients in the ring."""
    if z.n != w.n or z.q != w.q:
        raise DimensionError("chains over different rings")
    acc = {}
    for (f1, b1), c1 in z.terms.items():
        s1 = set(f1)
        for (f2, b2), c2 in w.terms.items():
            if s1.intersection(f2):
                continue
            sign = -1 if alpha(f1, f2) % 2 else 1
            _accumulate(acc, (tuple(sorted(f1 + f2)), multiply(b1, b2)), sign * c1 * c2, z.q, z.module)
    return KoszulChain(z.module, z.q, acc)


def multiply_chain(z: KoszulChain, f) -> KoszulChain:
    """f * z for a ring element f (int or dict monomial -> coefficient)."""
    poly = _as_poly(f, z.n)
    acc = {}
    for (f_set, b), c in z.terms.items():
        for mono, coef in poly.items():
            _accumulate(acc, (f_set, multiply(mono, b)), c * coef, z.q, z.module)
    return KoszulChain(z.module, z.q, acc)


def is_cycle(z: KoszulChain) -> bool:
    return not differential(z)


def initial_index_set(z: KoszulChain):
    """J with in(z) = m_J e_J: the lex-largest e_J, i.e. the smallest sorted tuple of the largest size."""
    if not z.terms:
        return None
    sets = {f for f, _ in z.terms}
    top = max(len(f) for f in sets)
    return min(f for f in sets if len(f) == top)

"""Revlex and lex segment ideals I(d, k) and J(d, k)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import ArgumentError
from .monomial import MonomialIdeal, TermOrder, minimalize


def check_segment_args(n: int, d: int, k: int) -> None:
    if n < 1:
        raise ArgumentError("need at least one variable")
    if d < 0:
        raise ArgumentError("degree must be nonnegative")
    cap = comb(n + d - 1, d)
    if not 0 <= k <= cap:
        raise ArgumentError(f"k={k} outside [0, {cap}] for n={n}, d={d}")


@dataclass(frozen=True)
class SegmentSpec:
    n: int
    d: int
    k: int

    def __post_init__(self):
        check_segment_args(self.n, self.d, self.k)


def enumerate_degree(n: int, d: int, order=TermOrder.RLEX) -> list:
    """All degree-d monomials in n variables, strictly descending in ``order``."""
    order = TermOrder.parse(order)
    mons = []
    for combo in combinations_with_replacement(range(n), d):
        a = [0] * n
        for i in combo:
            a[i] += 1
        mons.append(tuple(a))
    mons.sort(key=order.key, reverse=True)
    return mons


def segment_ideal(n: int, d: int, k: int, order) -> MonomialIdeal:
    check_segment_args(n, d, k)
    return minimalize(enumerate_degree(n, d, order)[:k], n=n)


def rev_segment_ideal(n: int, d: int, k: int) -> MonomialIdeal:
    """I(d, k): generated by the k revlex-largest monomials of degree d."""
    return segment_ideal(n, d, k, TermOrder.RLEX)


def lex_segment_ideal(n: int, d: int, k: int) -> MonomialIdeal:
    """J(d, k): generated by the k lex-largest monomials of degree d."""
    return segment_ideal(n, d, k, TermOrder.LEX)


def from_spec(spec: SegmentSpec, kind: str = "rev") -> MonomialIdeal:
    if kind == "rev":
        return rev_segment_ideal(spec.n, spec.d, spec.k)
    if kind == "lex":
        return lex_segment_ideal(spec.n, spec.d, spec.k)
    raise ArgumentError(f"unknown segment kind {kind!r}")

"""Betti tables, the Eliahou-Kervaire formula, and the bound verifiers.

Tables are stored for the module they were computed for (normally the ideal
I).  Keys are (i, j) with i the homological and j the internal degree, so
beta_{i,i+j} lives at key (i, i + j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .errors import DimensionError, PreconditionError, UndefinedInputError
from .monomial import (MonomialIdeal, TermOrder, format_monomial, is_stable, max_index,
                       minimalize, stability_violation)


class BettiTable:
    """Finitely supported map (i, j) -> beta_{i,j} >= 0."""

    def __init__(self, n: int, entries: Mapping | None = None):
        self.n = n
        clean = {}
        for (i, j), v in (entries or {}).items():
            v = int(v)
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                clean[(int(i), int(j))] = v
        self._entries = dict(sorted(clean.items()))

    def __getitem__(self, key) -> int:
        return self._entries.get(tuple(key), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.n, tuple(self._entries.items())))

    def __bool__(self):
        return bool(self._entries)

    def __repr__(self):
        body = ", ".join(f"b[{i},{j}]={v}" for (i, j), v in self._entries.items())
        return f"BettiTable(n={self.n}: {body})"

    def items(self):
        return self._entries.items()

    def as_dict(self) -> dict:
        return dict(self._entries)

    @property
    def max_homological_degree(self) -> int:
        return max((i for i, _ in self._entries), default=-1)

    def row(self, i: int) -> dict:
        """{j: beta_{i,j}} for homological degree i."""
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    def total(self, i: int) -> int:
        return sum(self.row(i).values())

    def quotient(self) -> "BettiTable":
        """Table of S/I from the table of I: beta_{i+1,j}(S/I) = beta_{i,j}(I), plus beta_{0,0} = 1."""
        if self[(0, 0)]:
            return BettiTable(self.n)  # I = S, so S/I = 0
        entries = {(i + 1, j): v for (i, j), v in self._entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(self.n, entries)

    def ideal(self) -> "BettiTable":
        """Inverse of ``quotient``."""
        if not self:
            return BettiTable(self.n, {(0, 0): 1})
        return BettiTable(self.n, {(i - 1, j): v for (i, j), v in self._entries.items() if i > 0})

    def to_dict(self) -> dict:
        return {"n": self.n,
                "entries": [{"i": i, "j": j, "beta": v} for (i, j), v in self._entries.items()]}

    @classmethod
    def from_dict(cls, data) -> "BettiTable":
        return cls(int(data["n"]), {(e["i"], e["j"]): e["beta"] for e in data["entries"]})

    def render(self) -> str:
        """Betti diagram: column i, row j - i, entry beta_{i,j}."""
        if not self._entries:
            return "(zero table)"
        cols = range(0, self.max_homological_degree + 1)
        shifts = sorted({j - i for i, j in self._entries})
        rows = range(shifts[0], shifts[-1] + 1)
        cells = [[str(i) for i in cols]]
        cells.append([str(self.total(i)) for i in cols])
        for s in rows:
            cells.append([str(self[(i, i + s)]) if self[(i, i + s)] else "." for i in cols])
        labels = ["", "total:"] + [f"{s}:" for s in rows]
        width = max(len(c) for row in cells for c in row)
        lw = max(len(x) for x in labels)
        return "\n".join(label.rjust(lw) + " " + " ".join(c.rjust(width) for c in row)
                         for label, row in zip(labels, cells))


class MultigradedBettiTable:
    """beta_{i,a} keyed by (i, a) with a in N^n."""

    def __init__(self, n: int, entries: Mapping | None = None):
        self.n = n
        self._entries = {(int(i), tuple(a)): int(v) for (i, a), v in (entries or {}).items() if v}

    def __getitem__(self, key) -> int:
        i, a = key
        return self._entries.get((i, tuple(a)), 0)

    def __eq__(self, other):
        if not isinstance(other, MultigradedBettiTable):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def items(self):
        return sorted(self._entries.items())

    def coarse(self) -> BettiTable:
        out = {}
        for (i, a), v in self._entries.items():
            out[(i, sum(a))] = out.get((i, sum(a)), 0) + v
        return BettiTable(self.n, out)


@dataclass
class LinearStrand:
    k: int
    d_k: int
    values: dict  # i -> beta_{i, i + d_k}, i = k..n
    p: int | None

    def as_list(self) -> list:
        return [self.values[i] for i in sorted(self.values)]

    @property
    def empty(self) -> bool:
        return self.p is None


# Eliahou-Kervaire

def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """beta_{i,i+j}(I) = sum over generators x^a of degree j of C(m(x^a) - 1, i); I stable."""
    bad = stability_violation(ideal)
    if bad is not None:
        g, b = bad
        raise PreconditionError(
            f"ideal is not stable: generator {format_monomial(g)} exchanges to "
            f"{format_monomial(b)}, which is not in the ideal", witness=g)
    entries = {}
    for g in ideal.generators:
        deg = sum(g)
        m = max_index(g) if deg else 1
        for i in range(m):
            key = (i, i + deg)
            entries[key] = entries.get(key, 0) + comb(m - 1, i)
    return BettiTable(ideal.n, entries)


# strand statistics

def regularity(table: BettiTable) -> int:
    if not table:
        raise UndefinedInputError("regularity of the zero table is undefined")
    return max(j - i for (i, j), _ in table.items())


def d_k_degree(table: BettiTable, k: int) -> int:
    """min({j : beta_{k,k+j} != 0} together with reg)."""
    if not table:
        raise UndefinedInputError("d_k of the zero table is undefined")
    shifts = [j - k for j in table.row(k)]
    return min(shifts + [regularity(table)])


def linear_strand(table: BettiTable, k: int = 0) -> LinearStrand:
    d = d_k_degree(table, k)
    values = {i: table[(i, i + d)] for i in range(k, table.n + 1)}
    nonzero = [i for i, v in values.items() if v]
    return LinearStrand(k, d, values, max(nonzero) if nonzero else None)


def has_linear_resolution(table: BettiTable, d: int) -> bool:
    return all(j == i + d for (i, j), _ in table.items())


def table_leq(a: BettiTable, b: BettiTable) -> bool:
    if a.n != b.n:
        raise DimensionError(f"tables over {a.n} and {b.n} variables")
    keys = set(k for k, _ in a.items()) | set(k for k, _ in b.items())
    return all(a[key] <= b[key] for key in keys)


# reports

@dataclass
class BoundCheck:
    k: int
    i: int
    value: int
    bound: int
    claim: str

    @property
    def margin(self) -> int:
        return self.value - self.bound

    @property
    def passed(self) -> bool:
        return self.value >= self.bound

    def to_dict(self):
        return {"k": self.k, "i": self.i, "value": self.value, "bound": self.bound,
                "margin": self.margin, "claim": self.claim, "passed": self.passed}


@dataclass
class BoundReport:
    table: BettiTable
    checks: list = field(default_factory=list)
    vacuous: list = field(default_factory=list)  # strand offsets with nothing to check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def counterexample(self):
        """The offending table and failed checks, or None."""
        if self.passed:
            return None
        return {"table": self.table.to_dict(), "failed": [c.to_dict() for c in self.failures]}

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks],
                "vacuous": self.vacuous, "counterexample": self.counterexample()}

    def render(self) -> str:
        lines = [f"{'PASS' if self.passed else 'FAIL'}: {len(self.checks)} inequalities, "
                 f"vacuous strands {self.vacuous}"]
        for c in self.checks:
            flag = "ok " if c.passed else "BAD"
            lines.append(f"  {flag} k={c.k} i={c.i} [{c.claim}] {c.value} >= {c.bound} (margin {c.margin})")
        if not self.passed:
            lines.append(self.table.render())
        return "\n".join(lines)


def check_herzog_bounds(table: BettiTable) -> BoundReport:
    """beta^{k,lin}_i >= C(p, i) for k <= i <= p, every k = 0..n with a nonempty strand.

    Also records beta^{k,lin}_{p-1} >= p whenever p > k (claim ``adjacent``).
    """
    report = BoundReport(table)
    if not table:
        report.vacuous = list(range(table.n + 1))
        return report
    for k in range(table.n + 1):
        st = linear_strand(table, k)
        if st.empty:
            report.vacuous.append(k)
            continue
        for i in range(k, st.p + 1):
            report.checks.append(BoundCheck(k, i, st.values[i], comb(st.p, i), "binomial"))
        if st.p > k:
            report.checks.append(BoundCheck(k, st.p - 1, st.values[st.p - 1], st.p, "adjacent"))
    return report


def check_syzygy_bounds(table: BettiTable, k: int) -> BoundReport:
    """The bound for the k-th syzygy module Omega_k of the table's module N.

    With beta^{lin}_i(Omega_k) = beta^{k,lin}_{i+k}(N) and the syzygy strand of
    length p' = p - k, checks beta^{lin}_i(Omega_k) >= C(p' + k, i + k) for
    i = 0..p'.  Recorded rows use the syzygy index i.
    """
    report = BoundReport(table)
    if not table:
        report.vacuous = [k]
        return report
    st = linear_strand(table, k)
    if st.empty:
        report.vacuous = [k]
        return report
    p_syz = st.p - k
    for i in range(p_syz + 1):
        report.checks.append(BoundCheck(k, i, st.values[i + k], comb(p_syz + k, i + k), "syzygy"))
    if p_syz > 0:
        report.checks.append(BoundCheck(k, p_syz - 1, st.values[st.p - 1], p_syz + k, "syzygy-adjacent"))
    return report


# the minimal / maximal sandwich

def _table_of(ideal, field):
    if is_stable(ideal):
        return ek_betti(ideal)
    from .strands import koszul_betti

    return koszul_betti(ideal, field)


@dataclass
class SandwichReport:
    d: int
    k: int
    lower: BettiTable
    table: BettiTable
    upper: BettiTable

    @property
    def lower_ok(self) -> bool:
        return table_leq(self.lower, self.table)

    @property
    def upper_ok(self) -> bool:
        return table_leq(self.table, self.upper)

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok

    @property
    def attains_lower(self) -> bool:
        return self.table == self.lower

    @property
    def attains_upper(self) -> bool:
        return self.table == self.upper

    def to_dict(self):
        return {"d": self.d, "k": self.k, "passed": self.passed,
                "lower_ok": self.lower_ok, "upper_ok": self.upper_ok,
                "lower": self.lower.to_dict(), "table": self.table.to_dict(),
                "upper": self.upper.to_dict()}

    def render(self) -> str:
        parts = [f"{'PASS' if self.passed else 'FAIL'}: d={self.d} k={self.k} "
                 f"lower={'ok' if self.lower_ok else 'VIOLATED'} upper={'ok' if self.upper_ok else 'VIOLATED'}"]
        for name, t in (("I(d,k)", self.lower), ("I", self.table), ("J(d,k)", self.upper)):
            parts.append(f"{name}:\n{t.render()}")
        return "\n".join(parts)


def check_sandwich(ideal: MonomialIdeal, table: BettiTable | None = None, field=32003) -> SandwichReport:
    """table(I(d,k)) <= table(I) <= table(J(d,k)) for I with a d-linear resolution.

    ``table`` may be passed in; otherwise it comes from EK (stable I) or the
    Koszul engine.
    """
    from .segments import lex_segment_ideal, rev_segment_ideal

    if table is None:
        table = _table_of(ideal, field)
    if not table:
        raise PreconditionError("the zero ideal has no generation degree")
    d = min(j for i, j in (key for key, _ in table.items()) if i == 0)
    for (i, j), _ in table.items():
        if j != i + d:
            raise PreconditionError(
                f"no {d}-linear resolution: beta_{{{i},{j}}} = {table[(i, j)]} is off the diagonal",
                witness=(i, j))
    k = table[(0, d)]
    lower = ek_betti(rev_segment_ideal(ideal.n, d, k))
    upper = ek_betti(lex_segment_ideal(ideal.n, d, k))
    return SandwichReport(d, k, lower, table, upper)


# exchange walk toward I(d, k)

def revlex_exchange_step(ideal: MonomialIdeal):
    """One swap moving a single-degree ideal toward I(d, k), or None at I(d, k).

    Drops the revlex-smallest generator outside I(d, k) and adds the
    revlex-largest monomial of I(d, k) missing from the ideal.
    """
    from .segments import rev_segment_ideal

    degs = ideal.degrees()
    if len(degs) != 1:
        raise PreconditionError("the exchange walk needs an ideal generated in one degree")
    d = degs.pop()
    target = set(rev_segment_ideal(ideal.n, d, len(ideal)).generators)
    gens = set(ideal.generators)
    extra = gens - target
    if not extra:
        return None
    key = TermOrder.RLEX.key
    out = min(extra, key=key)
    new = max(target - gens, key=key)
    return minimalize((gens - {out}) | {new}, n=ideal.n)


def revlex_exchange_walk(ideal: MonomialIdeal) -> list:
    """[I, I_1, ..., I(d, k)] produced by repeated ``revlex_exchange_step``."""
    path = [ideal]
    while True:
        nxt = revlex_exchange_step(path[-1])
        if nxt is None:
            return path
        path.append(nxt)

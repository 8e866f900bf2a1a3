"""Seeded property sweeps over random ideals, cycles and choosers.

Every suite runs ``count`` independent instances.  Instance ``i`` of suite
``s`` with seed ``seed`` draws from ``random.Random(f"{s}:{seed}:{i}")``, so
any single failure can be replayed on its own.  The characteristic suite
reuses the ek-vs-koszul stream, so both see the same ideals.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from . import betti as bt
from .constructions import build_w_sets, random_chooser, witness_chain
from .errors import InstabilityError
from .field import CROSS_CHECK_PRIME, DEFAULT_PRIME
from .groebner import gin_probabilistic
from .io import ideal_to_dict
from .koszul import (CoefficientModule, KoszulChain, contract, differential, is_cycle,
                     multiply_chain, partial_k, wedge)
from .monomial import MonomialIdeal, is_stable, minimalize, random_monomial_ideal, random_stable_ideal
from .segments import lex_segment_ideal, rev_segment_ideal
from .strands import cycle_basis, koszul_betti, lcm_lattice

# desk-scale sweep bounds
N_MAX, D_MAX, GENS_MAX = 5, 4, 8


@dataclass
class Failure:
    index: int
    message: str
    ideal: MonomialIdeal | None = None


@dataclass
class SweepResult:
    suite: str
    seed: int
    count: int
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def passed_count(self) -> int:
        return self.count - len(self.failures)

    def render(self) -> str:
        head = f"{self.suite}: {'PASS' if self.passed else 'FAIL'}, {self.passed_count}/{self.count} ({self.elapsed:.1f}s)"
        lines = [head] + [f"  {note}" for note in self.notes]
        for f in self.failures[:20]:
            lines.append(f"  instance {f.index}: {f.message}" + (f" on {f.ideal}" if f.ideal else ""))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "count": self.count,
                "passed": self.passed, "passed_count": self.passed_count,
                "elapsed": round(self.elapsed, 3), "notes": self.notes,
                "failures": [{"index": f.index, "message": f.message,
                              "ideal": ideal_to_dict(f.ideal) if f.ideal else None}
                             for f in self.failures]}

    def dump_reproducers(self, directory) -> list:
        out = []
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        for f in self.failures:
            path = directory / f"{self.suite}-seed{self.seed}-{f.index}.json"
            path.write_text(json.dumps({"suite": self.suite, "seed": self.seed, "index": f.index,
                                        "message": f.message,
                                        "ideal": ideal_to_dict(f.ideal) if f.ideal else None}, indent=1))
            out.append(path)
        return out


# suites that replay another suite's random stream, and so see the same inputs
SHARED_CORPUS = {"characteristic": "ek-vs-koszul"}


def instance_rng(suite: str, seed, index: int) -> random.Random:
    return random.Random(f"{SHARED_CORPUS.get(suite, suite)}:{seed}:{index}")


# random inputs

def _weighted_size(rng, lo, hi):
    """Integer in [lo, hi]; the smallest value is drawn a third as often as the others."""
    if hi <= lo:
        return hi
    return rng.choice([lo] + [v for v in range(lo + 1, hi + 1) for _ in range(3)])


def random_single_degree_stable(rng: random.Random, n_max=N_MAX, d_max=D_MAX, gens_max=GENS_MAX):
    n = _weighted_size(rng, 2, n_max)
    d = _weighted_size(rng, 1, d_max)
    cap = min(gens_max, comb(n + d - 1, d))
    k = rng.randint(min(3, cap), cap)
    return random_stable_ideal(n, d, k, rng.getrandbits(32))


def random_stable_sample(rng: random.Random, n_max=N_MAX, d_max=D_MAX, gens_max=GENS_MAX) -> MonomialIdeal:
    """A stable ideal with at most ``gens_max`` generators.

    Half the draws are generated in one degree; the rest are sums of stable
    ideals in different degrees (a sum of stable ideals is stable).
    """
    if rng.random() < 0.5 or d_max < 2:
        return random_single_degree_stable(rng, n_max, d_max, gens_max)
    while True:
        n = _weighted_size(rng, 2, n_max)
        degrees = sorted(rng.sample(range(1, d_max + 1), rng.randint(2, min(3, d_max))))
        gens = []
        for d in degrees:
            k = rng.randint(1, min(gens_max, comb(n + d - 1, d)))
            gens += random_stable_ideal(n, d, k, rng.getrandbits(32)).generators
        ideal = minimalize(gens, n=n)
        if len(ideal) <= gens_max and len(ideal.degrees()) > 1:
            return ideal


def random_mixed_ideal(rng: random.Random, n_max=N_MAX, d_max=D_MAX, gens_max=GENS_MAX) -> MonomialIdeal:
    """A stable ideal about a third of the time, otherwise an arbitrary monomial ideal."""
    if rng.random() < 0.35:
        return random_stable_sample(rng, n_max, d_max, gens_max)
    n = _weighted_size(rng, 2, n_max)
    d = _weighted_size(rng, 1, d_max)
    k = rng.randint(1, min(gens_max, comb(n + d - 1, d)))
    return random_monomial_ideal(n, d, k, rng.getrandbits(32))


def random_chain(rng: random.Random, module: CoefficientModule, q=DEFAULT_PRIME, terms=4, max_exp=2):
    n = module.n
    items = []
    for _ in range(rng.randint(1, terms)):
        size = rng.randint(0, n)
        f_set = tuple(sorted(rng.sample(range(n), size)))
        b = tuple(rng.randint(0, max_exp) for _ in range(n))
        items.append((f_set, b, rng.randrange(1, q)))
    return KoszulChain.from_terms(module, q, items)


def random_form(rng: random.Random, n: int, q=DEFAULT_PRIME):
    """mu in L* with random polynomial images of degree <= 1."""
    mu = []
    for _ in range(n):
        poly = {}
        for _ in range(rng.randint(0, 2)):
            b = tuple(rng.randint(0, 1) for _ in range(n))
            poly[b] = rng.randrange(q)
        mu.append(poly)
    return mu


def random_cycle(rng: random.Random, kind="ideal", q=DEFAULT_PRIME, n_max=4, d_max=3, tries=200):
    """A nonzero Z^n-homogeneous cycle of some ideal or quotient, with its ideal.

    Homological degree 0 (where every chain is a cycle) is drawn rarely.
    """
    for _ in range(tries):
        n = rng.randint(2, n_max)
        d = rng.randint(1, d_max)
        k = rng.randint(1, min(5, comb(n + d - 1, d)))
        ideal = random_monomial_ideal(n, d, k, rng.getrandbits(32))
        lattice = lcm_lattice(ideal)
        a = list(rng.choice(lattice))
        for i in range(n):
            a[i] += rng.choice((0, 0, 1))
        p = rng.randint(0, n) if rng.random() < 0.15 else rng.randint(1, n)
        basis = cycle_basis(ideal, p, a, q, kind)
        if not basis:
            continue
        z = KoszulChain.zero(basis[0].module, q)
        for c in basis:
            z = z + c.scale(rng.randrange(q))
        if z:
            return z, ideal
    return None, None


# instance checks; each returns (ok, message, ideal)

def _ek_vs_koszul(rng, opts):
    ideal = random_stable_sample(rng)
    ek = bt.ek_betti(ideal)
    kz = koszul_betti(ideal, opts.get("q", DEFAULT_PRIME))
    return ek == kz, f"EK {ek} != Koszul {kz}", ideal


def _characteristic(rng, opts):
    ideal = random_stable_sample(rng)
    t2 = koszul_betti(ideal, CROSS_CHECK_PRIME)
    tq = koszul_betti(ideal, opts.get("q", DEFAULT_PRIME))
    return t2 == tq, f"q=2 gives {t2}, large prime gives {tq}", ideal


def _herzog(rng, opts):
    ideal = random_mixed_ideal(rng)
    q = opts.get("q", DEFAULT_PRIME)
    table = koszul_betti(ideal, q)
    reports = [bt.check_herzog_bounds(table), bt.check_herzog_bounds(table.quotient())]
    reports += [bt.check_syzygy_bounds(table, k) for k in range(ideal.n + 1)]
    bad = [c.to_dict() for r in reports for c in r.failures]
    return not bad, f"bounds violated: {bad}", ideal


def _sandwich(rng, opts):
    ideal = random_single_degree_stable(rng)
    report = bt.check_sandwich(ideal)
    if not report.passed:
        return False, "sandwich violated\n" + report.render(), ideal
    d, k = report.d, report.k
    lo = bt.check_sandwich(rev_segment_ideal(ideal.n, d, k))
    hi = bt.check_sandwich(lex_segment_ideal(ideal.n, d, k))
    if not (lo.attains_lower and hi.attains_upper):
        return False, f"extremal ideals do not attain the bounds for d={d}, k={k}", ideal
    return True, f"d={d} k={k}", ideal


def _walk(rng, opts):
    # EK only, so larger ideals are affordable; bigger k gives longer walks
    n = rng.randint(3, N_MAX)
    d = rng.randint(2, D_MAX)
    k = rng.randint(4, min(12, comb(n + d - 1, d)))
    ideal = random_stable_ideal(n, d, k, rng.getrandbits(32))
    path = bt.revlex_exchange_walk(ideal)
    tables = []
    for step in path:
        if not is_stable(step):
            return False, f"walk left the stable ideals at {step}", ideal
        tables.append(bt.ek_betti(step))
    for t_prev, t_next in zip(tables, tables[1:]):
        if not bt.table_leq(t_next, t_prev):
            return False, f"step increased an entry: {t_prev} -> {t_next}", ideal
    d = sum(ideal.generators[0])
    if path[-1] != rev_segment_ideal(ideal.n, d, len(ideal)):
        return False, "walk did not end at I(d,k)", ideal
    return True, f"{len(path) - 1} steps", ideal


def _differential_laws(rng, opts):
    q = opts.get("q", DEFAULT_PRIME)
    n = rng.randint(1, 5)
    ring = CoefficientModule.ring(n)
    z = random_chain(rng, ring, q)
    w = random_chain(rng, ring, q)
    if differential(differential(z)):
        return False, f"d(d(z)) != 0 for {z}", None
    mu, nu = random_form(rng, n, q), random_form(rng, n, q)
    if contract(contract(z, mu), nu) + contract(contract(z, nu), mu):
        return False, f"d_mu d_nu != -d_nu d_mu for {z}", None
    k1, k2 = rng.randrange(n), rng.randrange(n)
    if partial_k(partial_k(z, k1), k2) + partial_k(partial_k(z, k2), k1):
        return False, f"partial_{k1 + 1} and partial_{k2 + 1} do not anticommute on {z}", None
    # Leibniz needs z homogeneous in homological degree
    p = len(rng.choice(sorted(z.terms))[0])
    z_h = KoszulChain(ring, q, {k: c for k, c in z.terms.items() if len(k[0]) == p})
    lhs = contract(wedge(z_h, w), mu)
    sign = -1 if p % 2 else 1
    rhs = wedge(contract(z_h, mu), w) + wedge(z_h, contract(w, mu)).scale(sign)
    if lhs != rhs:
        return False, f"Leibniz rule fails for {z_h} ^ {w}", None
    f = rng.randrange(q)
    if contract(z, [dict((m, c * f) for m, c in poly.items()) for poly in mu]) != multiply_chain(contract(z, mu), f):
        return False, "f d_mu != d_{f mu}", None
    summed = [dict(a) for a in mu]
    for s, poly in zip(summed, nu):
        for m, c in poly.items():
            s[m] = (s.get(m, 0) + c) % q
    if contract(z, summed) != contract(z, mu) + contract(z, nu):
        return False, "d_mu + d_nu != d_{mu + nu}", None
    kind = rng.choice(("ideal", "quotient"))
    cyc, ideal = random_cycle(rng, kind, q)
    if cyc is None:
        return False, "could not draw a nonzero cycle", None
    a = cyc.multidegree
    for k in range(cyc.n):
        pk = partial_k(cyc, k)
        if not is_cycle(pk):
            return False, f"partial_{k + 1} of a cycle is not a cycle ({kind})", ideal
        if pk and pk.multidegree != tuple(x - (i == k) for i, x in enumerate(a)):
            return False, f"partial_{k + 1} has the wrong multidegree", ideal
    return True, "", None


def _witness(rng, opts):
    q = opts.get("q", DEFAULT_PRIME)
    z, ideal = random_cycle(rng, "ideal", q)
    if z is None:
        return False, "could not draw a nonzero cycle", None
    wc = witness_chain(z)
    p = z.hdeg
    if len(wc.sets) != p + 1:
        return False, f"{len(wc.sets)} sets for p={p}", ideal
    if not wc.increasing():
        return False, f"initial terms not increasing: {wc.initial_terms}", ideal
    if len(set(wc.new_indices)) != len(wc.new_indices):
        return False, f"repeated j_k: {wc.new_indices}", ideal
    if any(not c for c in wc.coefficients):
        return False, "a witness coefficient vanishes", ideal
    if wc.coefficient_rank() != p + 1:
        return False, f"coefficient rank {wc.coefficient_rank()} < {p + 1}", ideal
    return True, f"p={p}", ideal


def _wsets(rng, opts):
    n = rng.randint(1, 12)
    p = rng.randint(0, min(8, n))
    families = build_w_sets(p, random_chooser(n, rng.getrandbits(32)), n)
    sizes = [len(f) for f in families]
    bad = [i for i in range(p + 1) if sizes[i] < comb(p, i)]
    return not bad, f"p={p} n={n} sizes {sizes} below binomials at {bad}", None


def linear_resolution_sample(rng: random.Random, n_max=3, d_max=3):
    """A monomial ideal with a linear resolution, with its Koszul table."""
    while True:
        n = _weighted_size(rng, min(2, n_max), n_max)
        d = _weighted_size(rng, 1, d_max)
        cap = min(6, comb(n + d - 1, d))
        k = rng.randint(min(2, cap), cap)
        ideal = random_monomial_ideal(n, d, k, rng.getrandbits(32), min_degree=d)
        table = koszul_betti(ideal)
        if bt.has_linear_resolution(table, d):
            return ideal, table


def _gin(rng, opts):
    q = opts.get("q", DEFAULT_PRIME)
    ideal, table = linear_resolution_sample(rng)
    try:
        res = gin_probabilistic(ideal, trials=opts.get("trials", 3), seed=rng.getrandbits(32), q=q)
    except InstabilityError as exc:
        return False, str(exc), ideal
    gin = res.ideal
    if not is_stable(gin):
        return False, f"Gin {gin} is not stable", ideal
    gt = koszul_betti(gin, q)
    if gt != table:
        return False, f"Gin {gin} has table {gt}, source has {table}", ideal
    if bt.regularity(gt) != bt.regularity(table):
        return False, "regularity changed", ideal
    return True, f"Gin = {gin}", ideal


SUITES = {
    "ek-vs-koszul": _ek_vs_koszul,
    "characteristic": _characteristic,
    "herzog": _herzog,
    "sandwich": _sandwich,
    "walk": _walk,
    "differential-laws": _differential_laws,
    "witness": _witness,
    "wsets": _wsets,
    "gin": _gin,
}


_TALLIED = {"sandwich": "instances per (d,k): ", "walk": "walk lengths: ", "witness": "cycles per degree: "}


def _run_one(args):
    suite, seed, index, opts = args
    rng = instance_rng(suite, seed, index)
    try:
        ok, message, ideal = SUITES[suite](rng, opts)
    except Exception as exc:  # a crash is a failed instance, not a crashed sweep
        ok, message, ideal = False, f"{type(exc).__name__}: {exc}", None
    return index, ok, message, ideal


def run_suite(suite: str, count: int = 100, seed: int = 0, parallel: int = 0, **opts) -> SweepResult:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    jobs = [(suite, seed, i, opts) for i in range(count)]
    if parallel and parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            outcomes = list(pool.map(_run_one, jobs))
    else:
        outcomes = [_run_one(job) for job in jobs]
    outcomes.sort(key=lambda t: t[0])
    result = SweepResult(suite, seed, count)
    for index, ok, message, ideal in outcomes:
        if not ok:
            result.failures.append(Failure(index, message, ideal))
    if suite in _TALLIED:
        seen = {}
        for _, ok, message, _ in outcomes:
            if ok:
                seen[message] = seen.get(message, 0) + 1
        result.notes.append(_TALLIED[suite] + ", ".join(f"{k}: {v}" for k, v in sorted(seen.items())))
    result.elapsed = time.perf_counter() - start
    return result

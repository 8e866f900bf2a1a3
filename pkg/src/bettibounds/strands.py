"""Multidegree slices of the Koszul complex and the Betti numbers they compute.

For a monomial module M and a in N^n the slice K(a) has basis e_F (x) x^{a - eps_F}
over the sets F in supp(a) with x^{a - eps_F} a nonzero monomial of M.  It is a
finite complex and dim H_i(K(a)) = beta_{i,a}(M).  Only multidegrees in the lcm
lattice of the generators can carry homology, so those are the only slices
built.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .betti import BettiTable, MultigradedBettiTable
from .errors import ResourceError
from .field import DEFAULT_PRIME, as_field
from .koszul import IDEAL, QUOTIENT, CoefficientModule, KoszulChain
from .monomial import MonomialIdeal, lcm

DEFAULT_MAX_GENERATORS = 15


@dataclass
class StrandComplex:
    module: CoefficientModule
    multidegree: tuple
    q: int
    bases: list  # bases[p] = list of (F, b)
    boundaries: list  # boundaries[p]: C_p -> C_{p-1}, shape (len(bases[p-1]), len(bases[p]))
    variables: int

    def __post_init__(self):
        self._index = [{key: i for i, key in enumerate(basis)} for basis in self.bases]
        self._ranks = {}

    @property
    def dims(self):
        return [len(b) for b in self.bases]

    def rank(self, p: int) -> int:
        if p <= 0 or p >= len(self.bases):
            return 0
        if p not in self._ranks:
            self._ranks[p] = as_field(self.q).rank(self.boundaries[p])
        return self._ranks[p]

    def homology(self, p: int) -> int:
        if p < 0 or p >= len(self.bases):
            return 0
        return len(self.bases[p]) - self.rank(p) - self.rank(p + 1)

    def homology_dims(self):
        return [self.homology(p) for p in range(len(self.bases))]

    def vector(self, z: KoszulChain, p: int | None = None) -> np.ndarray:
        """Coordinates of a chain of degree p in the slice basis (p defaults to z's degree)."""
        if p is None:
            p = z.hdeg if z.terms else 0
        v = np.zeros(len(self.bases[p]) if p < len(self.bases) else 0, dtype=np.int64)
        for key, c in z.terms.items():
            if len(key[0]) != p:
                raise ValueError(f"term {key} does not have homological degree {p}")
            try:
                v[self._index[p][key]] = c
            except (KeyError, IndexError):
                raise ValueError(f"term {key} is not in the strand at {self.multidegree}") from None
        return v

    def chain(self, p: int, v) -> KoszulChain:
        terms = {}
        for (f_set, b), c in zip(self.bases[p], v):
            c = int(c) % self.q
            if c:
                terms[(f_set, b)] = c
        return KoszulChain(self.module, self.q, terms)

    def is_boundary(self, z: KoszulChain) -> bool:
        p = z.hdeg
        if not z.terms:
            return True
        if p + 1 >= len(self.bases):
            return False
        return as_field(self.q).solve(self.boundaries[p + 1], self.vector(z)) is not None

    def as_record(self) -> dict:
        return {"a": list(self.multidegree), "dims": self.dims, "homology": self.homology_dims()}


def _module_for(ideal, kind):
    if isinstance(ideal, CoefficientModule):
        return ideal
    if kind == IDEAL:
        return CoefficientModule.of_ideal(ideal)
    if kind == QUOTIENT:
        return CoefficientModule.quotient_by(ideal)
    raise ValueError(f"unknown module kind {kind!r}")


def strand(ideal, a, field=DEFAULT_PRIME, kind=IDEAL, variables=None, check=True) -> StrandComplex:
    """The slice of K(x_1..x_j) (x) M in multidegree a, j = ``variables`` (default n).

    ``ideal`` may also be a ready-made ``CoefficientModule``.
    """
    module = _module_for(ideal, kind)
    q = as_field(field).q
    a = tuple(int(x) for x in a)
    n = module.n
    j = n if variables is None else variables
    usable = [i for i in range(j) if a[i] > 0]
    bases = []
    for p in range(j + 1):
        basis = []
        for f_set in combinations(usable, p):
            b = list(a)
            for f in f_set:
                b[f] -= 1
            b = tuple(b)
            if module.has(b):
                basis.append((f_set, b))
        bases.append(basis)
    while len(bases) > 1 and not bases[-1]:
        bases.pop()
    boundaries = [np.zeros((0, len(bases[0])), dtype=np.int64)]
    for p in range(1, len(bases)):
        rows = {key: i for i, key in enumerate(bases[p - 1])}
        mat = np.zeros((len(bases[p - 1]), len(bases[p])), dtype=np.int64)
        for col, (f_set, b) in enumerate(bases[p]):
            for pos, f in enumerate(f_set):
                target = (f_set[:pos] + f_set[pos + 1:], b[:f] + (b[f] + 1,) + b[f + 1:])
                row = rows.get(target)
                if row is not None:
                    mat[row, col] = (q - 1) if pos % 2 else 1
        boundaries.append(mat)
    complex_ = StrandComplex(module, a, q, bases, boundaries, j)
    if check:
        fld = as_field(q)
        for p in range(2, len(bases)):
            if fld.matmul(boundaries[p - 1], boundaries[p]).any():
                raise AssertionError(f"d o d != 0 in strand {a}, degree {p}")
    return complex_


def lcm_lattice(ideal: MonomialIdeal) -> list:
    """Distinct lcms of nonempty generator subsets, built bottom-up."""
    seen = set()
    for g in ideal.generators:
        seen |= {lcm(m, g) for m in seen}
        seen.add(g)
    return sorted(seen)


def candidate_multidegrees(ideal: MonomialIdeal, kind=IDEAL) -> list:
    cands = lcm_lattice(ideal)
    if kind == QUOTIENT:
        zero = (0,) * ideal.n
        if zero not in cands:
            cands = [zero] + cands
    return cands


def _strand_homology(args):
    module, a, q = args
    return a, strand(module, a, q, check=False).homology_dims()


def multigraded_betti(ideal: MonomialIdeal, field=DEFAULT_PRIME, kind=IDEAL,
                      max_generators=DEFAULT_MAX_GENERATORS, parallel: int = 0) -> MultigradedBettiTable:
    """beta_{i,a} of I (or S/I) from Koszul homology over F_q.

    ``parallel`` > 1 fans the slices out over that many worker processes.
    """
    if len(ideal.generators) > max_generators:
        raise ResourceError(
            f"{len(ideal.generators)} generators exceed the cap of {max_generators}; "
            "raise it with --max-generators")
    module = _module_for(ideal, kind)
    q = as_field(field).q
    jobs = [(module, a, q) for a in candidate_multidegrees(ideal, kind)]
    if parallel and parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_strand_homology, jobs, chunksize=max(1, len(jobs) // (4 * parallel))))
    else:
        results = [_strand_homology(job) for job in jobs]
    entries = {}
    for a, dims in results:
        for i, h in enumerate(dims):
            if h:
                entries[(i, a)] = h
    return MultigradedBettiTable(ideal.n, entries)


def koszul_betti(ideal: MonomialIdeal, field=DEFAULT_PRIME, kind=IDEAL, **kwargs) -> BettiTable:
    """Coarse graded Betti table from the multigraded computation."""
    return multigraded_betti(ideal, field, kind, **kwargs).coarse()


def cycle_basis(ideal, p: int, a, field=DEFAULT_PRIME, kind=IDEAL) -> list:
    """Basis of the cycles of homological degree p in multidegree a."""
    cx = strand(ideal, a, field, kind)
    if p >= len(cx.bases) or not cx.bases[p]:
        return []
    if p == 0:
        kernel = np.eye(len(cx.bases[0]), dtype=np.int64)
    else:
        kernel = as_field(cx.q).nullspace(cx.boundaries[p])
    return [cx.chain(p, row) for row in kernel]

"""Constructive operations on Koszul cycles.

* ``eliminate_variable`` replaces a cycle by a homologous one with no e_j,
  or reports the nonzero class of d_j(z) that blocks this.
* ``witness_chain`` builds the chain of index sets J_0, ..., J_p whose
  coefficients have strictly increasing initial terms, so a nonzero cycle of
  degree p over a submodule of a free module has p + 1 independent coefficients.
* ``build_w_sets`` grows the families W_0, ..., W_p from a chooser and
  ``random_chooser`` / ``first_free_chooser`` are ready-made choosers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, ObstructionError, PreconditionError, UndefinedInputError
from .field import as_field
from .koszul import (CoefficientModule, KoszulChain, alpha_of_order, differential,
                     initial_index_set, partial_k, partial_set)
from .monomial import MonomialIdeal, TermOrder
from .strands import strand


def _check_cycle(z: KoszulChain):
    if differential(z):
        raise PreconditionError("chain is not a cycle", witness=z)


def eliminate_variable(z: KoszulChain, j: int) -> KoszulChain:
    """A cycle z + d(r) with d_j(z + d(r)) = 0 (``j`` 0-based).

    Raises ``ObstructionError`` carrying d_j(z) when that cycle is not a
    boundary, and also when it is a boundary but no correction r exists in
    this multidegree (the lower-degree vanishing hypothesis fails).
    """
    _check_cycle(z)
    w = partial_k(z, j)
    if not w:
        return z
    a = z.multidegree
    if a is None:
        raise PreconditionError("cycle is not Z^n-homogeneous", witness=z)
    p = z.hdeg
    fld = as_field(z.q)
    a_low = tuple(x - (i == j) for i, x in enumerate(a))
    low = strand(z.module, a_low, z.q)
    if not low.is_boundary(w):
        raise ObstructionError(f"[d_{j + 1}(z)] is a nonzero homology class", homology_class=w)
    top = strand(z.module, a, z.q)
    if p + 1 >= len(top.bases) or not top.bases[p + 1]:
        raise ObstructionError("d_j(z) is a boundary but no correction exists in this multidegree",
                               homology_class=w)
    # columns: d_j(d(basis element)) written in the basis of the lower strand
    size = len(top.bases[p + 1])
    unit = np.eye(size, dtype=np.int64)
    cols = [low.vector(partial_k(differential(top.chain(p + 1, unit[c])), j), p - 1) for c in range(size)]
    mat = np.stack(cols, axis=1) if cols else np.zeros((len(low.bases[p - 1]), 0), dtype=np.int64)
    r = fld.solve(mat, (-low.vector(w, p - 1)) % z.q)
    if r is None:
        raise ObstructionError("d_j(z) is a boundary but no correction exists in this multidegree",
                               homology_class=w)
    return z + differential(top.chain(p + 1, r))


def is_homologous(z: KoszulChain, w: KoszulChain) -> bool:
    diff = z - w
    if not diff:
        return True
    a = diff.multidegree
    if a is None:
        raise PreconditionError("difference is not Z^n-homogeneous")
    return strand(z.module, a, z.q).is_boundary(diff)


# witness chains

def initial_term(coeff: dict, order=TermOrder.GRLEX):
    """in_>(m) for a coefficient given as dict monomial -> residue."""
    if not coeff:
        return None
    return max(coeff, key=TermOrder.parse(order).key)


def permute_chain(z: KoszulChain, perm) -> KoszulChain:
    """Rename variable i to perm[i] in both the exterior and the polynomial part."""
    n = z.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old

    def move(b):
        return tuple(b[inv[i]] for i in range(n))

    module = z.module
    if module.ideal is not None:
        ideal = MonomialIdeal.from_generators(n, [move(g) for g in module.ideal.generators])
        module = CoefficientModule(n, module.kind, ideal)
    items = []
    for (f_set, b), c in z.terms.items():
        image = tuple(perm[f] for f in f_set)
        sign = -1 if alpha_of_order(image) % 2 else 1
        items.append((tuple(sorted(image)), move(b), sign * c))
    return KoszulChain.from_terms(module, z.q, items)


@dataclass
class WitnessChain:
    permutation: tuple  # permutation[old] = new position of each variable
    chain: KoszulChain  # the permuted cycle the sets refer to
    sets: list  # J_0, ..., J_p as sorted tuples in the permuted numbering
    coefficients: list  # m_{J_k} of the permuted cycle, dict monomial -> residue
    initial_terms: list
    new_indices: list  # j_1, ..., j_p
    order: TermOrder

    @property
    def original_sets(self) -> list:
        inv = {new: old for old, new in enumerate(self.permutation)}
        return [tuple(sorted(inv[i] for i in s)) for s in self.sets]

    def coefficient_matrix(self) -> np.ndarray:
        mons = sorted({b for c in self.coefficients for b in c})
        col = {b: i for i, b in enumerate(mons)}
        mat = np.zeros((len(self.coefficients), len(mons)), dtype=np.int64)
        for r, c in enumerate(self.coefficients):
            for b, v in c.items():
                mat[r, col[b]] = v
        return mat

    def coefficient_rank(self) -> int:
        return as_field(self.chain.q).rank(self.coefficient_matrix())

    def increasing(self) -> bool:
        key = self.order.key
        return all(key(s) < key(t) for s, t in zip(self.initial_terms, self.initial_terms[1:]))


def witness_chain(z: KoszulChain, order=TermOrder.GRLEX) -> WitnessChain:
    """Index sets J_k = {1..p-k} + {j_1..j_k} with in(m_{J_0}) < ... < in(m_{J_p}).

    Variables are first renumbered so that the initial exterior monomial of z
    is e_{1..p}; the renumbering is returned in ``permutation``.
    """
    order = TermOrder.parse(order)
    if not z:
        raise UndefinedInputError("the zero chain has no witness chain")
    if not z.module.embeds_in_free:
        raise PreconditionError("coefficients must lie in a submodule of a free module")
    _check_cycle(z)
    p = z.hdeg
    if p is None:
        raise PreconditionError("chain is not homogeneous in homological degree")
    if z.internal_degree is None:
        raise PreconditionError("chain is not homogeneous in internal degree")
    init = initial_index_set(z)
    rest = [i for i in range(z.n) if i not in init]
    perm = [0] * z.n
    for new, old in enumerate(list(init) + rest):
        perm[old] = new
    zp = permute_chain(z, perm)
    key = order.key

    sets = [tuple(range(p))]
    js = []
    for k in range(1, p + 1):
        contracted = list(range(p - k)) + js
        w = partial_set(zp, contracted)
        i = p - k
        lead = initial_index_set(w)
        if lead != (i,):
            raise AssertionError(f"unexpected initial term {lead} at step {k}")
        base = key(initial_term(w.coefficient((i,)), order))
        found = None
        for j in range(i + 1, z.n):
            c = w.coefficient((j,))
            if c and key(initial_term(c, order)) > base:
                found = j
                break
        if found is None:
            raise AssertionError(f"no exchange index at step {k}; the cycle property is violated")
        js.append(found)
        sets.append(tuple(sorted(list(range(p - k)) + js)))
    coeffs = [zp.coefficient(s) for s in sets]
    return WitnessChain(tuple(perm), zp, sets, coeffs,
                        [initial_term(c, order) for c in coeffs], js, order)


# W-sets

def build_w_sets(p: int, chooser, n: int | None = None) -> list:
    """W_0 = {{}} and W_i = {w + {c} : w in W_{i-1}, c in chooser(w, p - i + 1)}.

    ``chooser(w, count)`` must return ``count`` distinct indices outside ``w``
    (and inside range(n) when n is given).  Returns the list of families, each
    a sorted list of frozensets.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    families = [[frozenset()]]
    for i in range(1, p + 1):
        count = p - i + 1
        level = set()
        for w in families[-1]:
            picks = list(chooser(w, count))
            if len(picks) != count or len(set(picks)) != count:
                raise ContractError(f"chooser returned {picks} for {set(w)}; need {count} distinct indices")
            if any(c in w for c in picks):
                raise ContractError(f"chooser returned an element of {set(w)}")
            if n is not None and any(not 0 <= c < n for c in picks):
                raise ContractError(f"chooser returned an index outside range({n})")
            level.update(w | {c} for c in picks)
        families.append(sorted(level, key=lambda s: sorted(s)))
    return families


def random_chooser(n: int, seed=None):
    rng = random.Random(seed)

    def choose(w, count):
        return rng.sample([i for i in range(n) if i not in w], count)

    return choose


def first_free_chooser(n: int):
    def choose(w, count):
        return [i for i in range(n) if i not in w][:count]

    return choose

import random
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bettibounds.constructions import (build_w_sets, eliminate_variable, first_free_chooser,
                                       initial_term, is_homologous, permute_chain, random_chooser,
                                       witness_chain)
from bettibounds.errors import (ContractError, ObstructionError, PreconditionError,
                                UndefinedInputError)
from bettibounds.koszul import CoefficientModule, KoszulChain, differential, is_cycle, partial_k
from bettibounds.monomial import MonomialIdeal, TermOrder, random_monomial_ideal
from bettibounds.strands import cycle_basis, lcm_lattice, strand

Q = 32003
X1X2 = MonomialIdeal.from_generators(2, [(1, 0), (0, 1)])


def koszul_syzygy():
    mod = CoefficientModule.of_ideal(X1X2)
    return KoszulChain.from_terms(mod, Q, [((0,), (0, 1), 1), ((1,), (1, 0), -1)])


def test_eliminate_unchanged_when_free_of_j():
    mod = CoefficientModule.of_ideal(MonomialIdeal.from_generators(3, [(1, 0, 0), (0, 1, 0)]))
    free = KoszulChain.from_terms(mod, Q, [((0,), (0, 1, 1), 1), ((1,), (1, 0, 1), -1)])
    assert is_cycle(free)
    assert eliminate_variable(free, 2) == free


def test_eliminate_socle_is_obstructed():
    quo = CoefficientModule.quotient_by(X1X2)
    socle = KoszulChain.from_terms(quo, Q, [((0, 1), (0, 0), 1)])
    assert is_cycle(socle)
    with pytest.raises(ObstructionError) as exc:
        eliminate_variable(socle, 0)
    assert exc.value.homology_class == partial_k(socle, 0)


def test_eliminate_rejects_non_cycles():
    mod = CoefficientModule.of_ideal(X1X2)
    with pytest.raises(PreconditionError):
        eliminate_variable(KoszulChain.from_terms(mod, Q, [((0,), (1, 0), 1)]), 0)


def perturbed_cycles(seed, count):
    """(z, j) with z = z0 + d(r), z0 free of e_j and r a chain touching e_j."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        I = random_monomial_ideal(n, 3, rng.randint(1, min(4, n + 2)), rng.getrandbits(32))
        kind = rng.choice(("ideal", "quotient"))
        a = list(rng.choice(lcm_lattice(I)))
        for i in range(n):
            a[i] += rng.randint(0, 1)
        j = rng.randrange(n)
        s = strand(I, a, Q, kind)
        for p in range(len(s.dims) - 1):
            free = [c for c in cycle_basis(I, p, a, Q, kind) if not partial_k(c, j)]
            cols = [c for c, (f, _) in enumerate(s.bases[p + 1]) if j in f]
            if not cols:
                continue
            v = np.zeros(len(s.bases[p + 1]), dtype=np.int64)
            for c in cols:
                v[c] = rng.randrange(1, Q)
            r = s.chain(p + 1, v)
            z0 = KoszulChain.zero(r.module, Q)
            for c in free:
                z0 = z0 + c.scale(rng.randrange(Q))
            z = z0 + differential(r)
            if z and partial_k(z, j):
                out.append((z, j))
    return out


@pytest.mark.parametrize("seed", range(3))
def test_eliminate_perturbed_cycles(seed):
    for z, j in perturbed_cycles(seed, 15):
        w = eliminate_variable(z, j)
        assert is_cycle(w)
        assert not partial_k(w, j)
        assert is_homologous(z, w)


def test_eliminate_top_degree_nonzero_cycle():
    # p = n: every nonzero cycle leaves a nonzero class under each d_j
    quo = CoefficientModule.quotient_by(MonomialIdeal.from_generators(2, [(2, 0), (0, 1)]))
    z = KoszulChain.from_terms(quo, Q, [((0, 1), (1, 0), 1)])
    assert z and is_cycle(z)
    for j in range(2):
        with pytest.raises(ObstructionError):
            eliminate_variable(z, j)


def test_witness_of_koszul_syzygy():
    wc = witness_chain(koszul_syzygy())
    assert wc.permutation == (0, 1)
    assert wc.sets == [(0,), (1,)]
    assert wc.coefficients == [{(0, 1): 1}, {(1, 0): Q - 1}]
    assert wc.initial_terms == [(0, 1), (1, 0)]
    assert wc.new_indices == [1]
    assert wc.increasing() and wc.coefficient_rank() == 2


def test_witness_degree_zero():
    mod = CoefficientModule.of_ideal(X1X2)
    z = KoszulChain.from_terms(mod, Q, [((), (1, 1), 3)])
    wc = witness_chain(z)
    assert wc.sets == [()] and wc.coefficient_rank() == 1


def test_witness_errors():
    mod = CoefficientModule.of_ideal(X1X2)
    with pytest.raises(UndefinedInputError):
        witness_chain(KoszulChain.zero(mod, Q))
    with pytest.raises(PreconditionError):
        witness_chain(KoszulChain.from_terms(mod, Q, [((0,), (1, 0), 1)]))
    quo = CoefficientModule.quotient_by(X1X2)
    with pytest.raises(PreconditionError):
        witness_chain(KoszulChain.from_terms(quo, Q, [((0, 1), (0, 0), 1)]))


def test_witness_applies_permutation():
    # initial exterior monomial e_{2} forces a renumbering
    I = MonomialIdeal.from_generators(3, [(0, 1, 0), (0, 0, 1)])
    mod = CoefficientModule.of_ideal(I)
    z = KoszulChain.from_terms(mod, Q, [((1,), (0, 0, 1), 1), ((2,), (0, 1, 0), -1)])
    wc = witness_chain(z)
    assert wc.permutation[1] == 0
    assert wc.original_sets == [(1,), (2,)]
    assert wc.increasing()


def test_permute_chain_preserves_cycles():
    z = koszul_syzygy()
    w = permute_chain(z, (1, 0))
    assert is_cycle(w)
    assert permute_chain(w, (1, 0)) == z


def test_initial_term_orders():
    coeff = {(1, 0, 2): 1, (0, 3, 0): 1}
    assert initial_term(coeff, TermOrder.GRLEX) == (1, 0, 2)
    assert initial_term(coeff, TermOrder.RLEX) == (0, 3, 0)
    assert initial_term({}) is None


@pytest.mark.parametrize("seed", range(3))
def test_witness_on_kernel_cycles(seed):
    rng = random.Random(seed)
    seen = 0
    while seen < 20:
        n = rng.randint(2, 4)
        I = random_monomial_ideal(n, 3, rng.randint(1, min(5, n + 2)), rng.getrandbits(32))
        a = rng.choice(lcm_lattice(I))
        for p in range(1, n + 1):
            basis = cycle_basis(I, p, a, Q)
            if not basis:
                continue
            z = basis[0]
            for c in basis[1:]:
                z = z + c.scale(rng.randrange(Q))
            if not z:
                continue
            wc = witness_chain(z)
            assert len(wc.sets) == p + 1
            assert wc.increasing()
            assert len(set(wc.new_indices)) == p
            assert wc.coefficient_rank() == p + 1
            seen += 1


def test_w_sets_example():
    picks = {frozenset(): [0, 1], frozenset({0}): [2], frozenset({1}): [2]}
    families = build_w_sets(2, lambda w, count: picks[w])
    assert families == [[frozenset()], [frozenset({0}), frozenset({1})],
                        [frozenset({0, 2}), frozenset({1, 2})]]
    assert [len(f) for f in families] == [1, 2, 2]


def test_w_sets_base_case():
    assert build_w_sets(0, first_free_chooser(3)) == [[frozenset()]]


def test_w_sets_contract_errors():
    with pytest.raises(ContractError):
        build_w_sets(2, lambda w, count: [0] * count)
    with pytest.raises(ContractError):
        build_w_sets(2, lambda w, count: sorted(w)[:1] + [9] if w else [0, 1])
    with pytest.raises(ContractError):
        build_w_sets(1, lambda w, count: [5], n=3)


def test_first_free_chooser_meets_bound_exactly():
    # always picking the smallest free indices gives exactly the binomials
    families = build_w_sets(4, first_free_chooser(8))
    assert [len(f) for f in families] == [comb(4, i) for i in range(5)]


@given(st.integers(0, 8), st.integers(0, 4), st.integers(0, 2**32))
def test_w_sets_bound(p, extra, seed):
    n = min(12, p + extra)
    families = build_w_sets(p, random_chooser(n, seed), n)
    assert len(families) == p + 1
    for i, fam in enumerate(families):
        assert len(fam) >= comb(p, i)
        assert all(len(w) == i and max(w, default=-1) < n for w in fam)

import pytest
from hypothesis import given

from bettibounds.betti import ek_betti
from bettibounds.errors import ResourceError
from bettibounds.koszul import KoszulChain, differential, partial_k
from bettibounds.monomial import MonomialIdeal
from bettibounds.segments import lex_segment_ideal, rev_segment_ideal
from bettibounds.strands import (candidate_multidegrees, cycle_basis, koszul_betti, lcm_lattice,
                                 multigraded_betti, strand)
from conftest import monomial_ideals, stable_ideals
from oracles import lcm_closure, simplicial_betti

Q = 32003


def ideal(n, *gens):
    return MonomialIdeal.from_generators(n, gens)


X1X2 = ideal(2, (1, 0), (0, 1))
TRIANGLE = ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1))


def test_principal_strand():
    s = strand(ideal(2, (2, 0)), (2, 0), Q, "ideal")
    assert s.homology_dims()[0] == 1 and sum(s.homology_dims()[1:]) == 0
    s = strand(ideal(2, (2, 0)), (2, 0), Q, "quotient")
    assert s.homology(1) == 1 and s.homology(0) == 0


def test_strand_of_two_variables():
    s = strand(X1X2, (1, 1), Q, "ideal")
    assert s.dims == [1, 2]
    assert s.homology_dims() == [0, 1]
    s = strand(X1X2, (2, 0), Q, "ideal")
    assert s.dims == [1, 1] and s.homology_dims() == [0, 0]


def test_strand_record():
    rec = strand(X1X2, (1, 1), Q).as_record()
    assert rec == {"a": [1, 1], "dims": [1, 2], "homology": [0, 1]}


def test_multigraded_examples():
    assert koszul_betti(ideal(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))).as_dict() == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert koszul_betti(ideal(2, (2, 0))).as_dict() == {(0, 2): 1}
    assert koszul_betti(TRIANGLE).as_dict() == {(0, 2): 3, (1, 3): 2}


def test_triangle_multidegrees():
    mg = multigraded_betti(TRIANGLE, Q)
    assert dict(mg.items()) == {(0, (1, 1, 0)): 1, (0, (0, 1, 1)): 1, (0, (1, 0, 1)): 1,
                                (1, (1, 1, 1)): 2}


def test_quotient_table():
    t = koszul_betti(TRIANGLE, Q, "quotient")
    assert t.as_dict() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert t == koszul_betti(TRIANGLE).quotient()


def test_zero_ideal():
    zero = MonomialIdeal.from_generators(3, [])
    assert koszul_betti(zero).as_dict() == {}
    assert koszul_betti(zero, Q, "quotient").as_dict() == {(0, 0): 1}


def test_lcm_lattice():
    assert set(lcm_lattice(TRIANGLE)) == lcm_closure(TRIANGLE.generators)
    assert (0, 0, 0) in candidate_multidegrees(TRIANGLE, "quotient")


def test_generator_cap():
    big = rev_segment_ideal(4, 4, 35)
    with pytest.raises(ResourceError) as exc:
        multigraded_betti(big, Q)
    assert "max" in str(exc.value).lower()
    assert multigraded_betti(rev_segment_ideal(3, 2, 4), Q, max_generators=4)


def test_parallel_matches_serial():
    I = lex_segment_ideal(4, 2, 6)
    assert multigraded_betti(I, Q, parallel=2).coarse() == multigraded_betti(I, Q).coarse()


def test_cycle_basis_examples():
    (z,) = cycle_basis(X1X2, 1, (1, 1), Q)
    ref = KoszulChain.from_terms(z.module, Q, [((0,), (0, 1), 1), ((1,), (1, 0), -1)])
    c = z.coefficient((0,))[(0, 1)]
    assert z == ref.scale(c)
    zero_deg = cycle_basis(X1X2, 0, (1, 1), Q)
    assert len(zero_deg) == 1 and not differential(zero_deg[0])
    assert cycle_basis(X1X2, 1, (0, 0), Q) == []


def test_cycle_basis_spans_kernel():
    I = lex_segment_ideal(3, 2, 4)
    a = (2, 1, 1)
    s = strand(I, a, Q)
    for p in range(len(s.dims)):
        basis = cycle_basis(I, p, a, Q)
        assert len(basis) == s.dims[p] - s.rank(p)
        assert all(not differential(z) for z in basis)


def test_restricted_variables():
    # on x1 alone the strand of (x1, x2) at (1,1) loses the e2 column
    s = strand(X1X2, (1, 1), Q, variables=1)
    assert s.dims == [1, 1]


@given(monomial_ideals(max_gens=5))
def test_koszul_matches_simplicial_oracle(I):
    if I.is_zero:
        return
    assert koszul_betti(I, Q).as_dict() == simplicial_betti(I.generators, I.n)


@given(stable_ideals())
def test_koszul_matches_ek(I):
    assert koszul_betti(I, Q) == ek_betti(I)
    assert koszul_betti(I, 2) == ek_betti(I)


def test_characteristic_sensitive_ideal():
    # the Stanley-Reisner ideal of the six-vertex projective plane has 2-torsion
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5), (1, 2, 5), (1, 3, 4),
             (1, 4, 5), (2, 3, 4), (2, 3, 5)]
    from itertools import combinations
    non_faces = []
    for r in (2, 3):
        for f in combinations(range(6), r):
            if not any(set(f) <= set(g) for g in faces) and not any(set(h) < set(f) for h in non_faces):
                non_faces.append(f)
    I = MonomialIdeal.from_generators(6, [tuple(int(i in f) for i in range(6)) for f in non_faces])
    assert koszul_betti(I, 2) != koszul_betti(I, Q)

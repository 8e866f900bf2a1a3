import pytest
from hypothesis import given

from bettibounds import betti as bt
from bettibounds.betti import BettiTable
from bettibounds.errors import DimensionError, PreconditionError, UndefinedInputError
from bettibounds.monomial import MonomialIdeal, is_stable
from bettibounds.segments import lex_segment_ideal, rev_segment_ideal
from bettibounds.strands import koszul_betti
from conftest import monomial_ideals, stable_ideals
from oracles import ek_by_hand, simplicial_betti

MAXIMAL = MonomialIdeal.from_generators(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
I23 = rev_segment_ideal(3, 2, 3)
J23 = lex_segment_ideal(3, 2, 3)
PRINCIPAL = MonomialIdeal.from_generators(3, [(2, 0, 0)])


def table(n, **entries):
    out = {}
    for key, v in entries.items():
        i, j = key[1:].split("_")
        out[(int(i), int(j))] = v
    return BettiTable(n, out)


@pytest.mark.parametrize("ideal, expected", [
    (MAXIMAL, {(0, 1): 3, (1, 2): 3, (2, 3): 1}),
    (I23, {(0, 2): 3, (1, 3): 2}),
    (J23, {(0, 2): 3, (1, 3): 3, (2, 4): 1}),
])
def test_ek_examples(ideal, expected):
    t = bt.ek_betti(ideal)
    assert t.as_dict() == expected
    assert expected == ek_by_hand(ideal.generators) == simplicial_betti(ideal.generators, 3)


def test_ek_rejects_unstable_with_generator():
    with pytest.raises(PreconditionError) as exc:
        bt.ek_betti(MonomialIdeal.from_generators(2, [(0, 2)]))
    assert "x2^2" in str(exc.value)
    assert exc.value.witness == (0, 2)


def test_ek_unit_ideal():
    assert bt.ek_betti(MonomialIdeal.from_generators(2, [(0, 0)])).as_dict() == {(0, 0): 1}


def test_quotient_view():
    t = bt.ek_betti(I23)
    q = t.quotient()
    assert q.as_dict() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert q.ideal() == t


def test_regularity():
    assert bt.regularity(bt.ek_betti(I23)) == 2
    assert bt.regularity(bt.ek_betti(MonomialIdeal.from_generators(5, [(0,) * i + (1,) + (0,) * (4 - i)
                                                                          for i in range(5)]))) == 1
    assert bt.regularity(table(3, b0_4=1)) == 4
    with pytest.raises(UndefinedInputError):
        bt.regularity(BettiTable(3, {}))


def test_d_k_degree():
    t = bt.ek_betti(I23)
    assert bt.d_k_degree(t, 1) == 2
    assert bt.d_k_degree(t, 2) == 2  # empty row falls back to reg
    assert bt.d_k_degree(bt.ek_betti(MAXIMAL), 0) == 1
    with pytest.raises(UndefinedInputError):
        bt.d_k_degree(BettiTable(3, {}), 0)


def test_d_k_on_rows_and_fallback():
    t = table(3, b0_3=1, b1_3=1)
    assert bt.regularity(t) == 3
    assert bt.d_k_degree(t, 1) == 2
    assert bt.d_k_degree(t, 2) == 3
    t2 = table(3, b0_2=1, b1_4=1)
    assert bt.d_k_degree(t2, 1) == 3


def test_linear_strand():
    s = bt.linear_strand(bt.ek_betti(MAXIMAL), 0)
    assert s.as_list() == [3, 3, 1, 0] and s.p == 2 and s.d_k == 1
    s = bt.linear_strand(bt.ek_betti(PRINCIPAL), 0)
    assert s.values[0] == 1 and s.p == 0
    s = bt.linear_strand(bt.ek_betti(I23), 1)
    assert (s.values[1], s.values[2]) == (2, 0) and s.p == 1


def test_herzog_examples():
    r = bt.check_herzog_bounds(bt.ek_betti(MAXIMAL))
    assert r.passed
    k0 = {c.i: (c.value, c.bound) for c in r.checks if c.k == 0 and c.claim == "binomial"}
    assert k0 == {0: (3, 1), 1: (3, 2), 2: (1, 1)}
    r = bt.check_herzog_bounds(bt.ek_betti(PRINCIPAL))
    assert r.passed and [(c.k, c.i) for c in r.checks if c.claim == "binomial"] == [(0, 0)]
    assert bt.check_herzog_bounds(bt.ek_betti(J23)).passed


def test_herzog_detects_violations():
    # a fake table: strand of length 2 with a hole that the bound forbids
    fake = table(3, b0_1=1, b1_2=1, b2_3=1)
    r = bt.check_herzog_bounds(fake)
    assert not r.passed
    bad = r.failures[0]
    assert (bad.k, bad.i, bad.value, bad.bound) == (0, 1, 1, 2)
    assert r.counterexample()["table"] == fake.to_dict()
    assert "FAIL" in r.render()


def test_syzygy_bounds():
    r = bt.check_syzygy_bounds(bt.ek_betti(MAXIMAL), 1)
    assert r.passed
    assert bt.check_syzygy_bounds(bt.ek_betti(I23), 1).passed
    r = bt.check_syzygy_bounds(bt.ek_betti(I23), 3)
    assert r.passed and not [c for c in r.checks if c.claim.startswith("syzygy")]


def test_has_linear_resolution():
    assert bt.has_linear_resolution(bt.ek_betti(I23), 2)
    nonlinear = koszul_betti(MonomialIdeal.from_generators(2, [(3, 0), (0, 2)]))
    assert not bt.has_linear_resolution(nonlinear, 2)
    assert bt.has_linear_resolution(BettiTable(3, {}), 5)


def test_table_leq():
    a, b = bt.ek_betti(I23), bt.ek_betti(J23)
    assert bt.table_leq(a, b)
    assert bt.table_leq(a, a)
    assert not bt.table_leq(b, a)
    with pytest.raises(DimensionError):
        bt.table_leq(a, BettiTable(2, {}))


def test_sandwich_examples():
    lo = bt.check_sandwich(I23)
    assert lo.passed and lo.attains_lower and (lo.d, lo.k) == (2, 3)
    hi = bt.check_sandwich(J23)
    assert hi.passed and hi.attains_upper
    mid = bt.check_sandwich(MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]))
    assert mid.passed and mid.k == 4


def test_sandwich_equality_does_not_force_extremal():
    # same table as I(2,4) without being I(2,4)
    I = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1)])
    r = bt.check_sandwich(I)
    assert r.passed and r.attains_lower
    assert I != rev_segment_ideal(3, 2, 4)


def test_sandwich_strict_in_four_variables():
    I = MonomialIdeal.from_generators(4, [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (0, 2, 0, 0)])
    r = bt.check_sandwich(I)
    assert r.passed
    assert r.lower != r.upper


def test_sandwich_requires_linear_resolution():
    with pytest.raises(PreconditionError) as exc:
        bt.check_sandwich(MonomialIdeal.from_generators(2, [(3, 0), (0, 2)]))
    assert "b[0,3]" in str(exc.value) or "0,3" in str(exc.value) or "(0, 3)" in str(exc.value)


def test_exchange_walk_reaches_segment():
    I = lex_segment_ideal(4, 2, 5)
    path = bt.revlex_exchange_walk(I)
    assert path[0] == I and path[-1] == rev_segment_ideal(4, 2, 5)
    assert all(is_stable(step) and len(step) == 5 for step in path)
    tables = [bt.ek_betti(step) for step in path]
    assert all(bt.table_leq(b, a) for a, b in zip(tables, tables[1:]))
    assert bt.revlex_exchange_step(path[-1]) is None


def test_table_json_round_trip_and_render():
    t = bt.ek_betti(J23)
    d = t.to_dict()
    assert d == {"n": 3, "entries": [{"i": 0, "j": 2, "beta": 3}, {"i": 1, "j": 3, "beta": 3},
                                     {"i": 2, "j": 4, "beta": 1}]}
    assert BettiTable.from_dict(d) == t
    lines = t.render().splitlines()
    assert lines[0].split() == ["0", "1", "2"]
    assert lines[1].split() == ["total:", "3", "3", "1"]
    assert lines[2].split() == ["2:", "3", "3", "1"]


def test_render_marks_zero_entries():
    t = koszul_betti(MonomialIdeal.from_generators(2, [(1, 0), (0, 2)]))
    rows = t.render().splitlines()
    assert rows[2].split() == ["1:", "1", "."]
    assert rows[3].split() == ["2:", "1", "1"]


# properties

@given(stable_ideals())
def test_ek_matches_simplicial_oracle(I):
    assert bt.ek_betti(I).as_dict() == simplicial_betti(I.generators, I.n)


@given(stable_ideals())
def test_single_degree_stable_ideals_are_linear(I):
    if len(I):
        (d,) = I.degrees()
        assert bt.has_linear_resolution(bt.ek_betti(I), d)


@given(monomial_ideals())
def test_herzog_bounds_hold_for_every_monomial_ideal(I):
    if I.is_zero:
        return
    t = koszul_betti(I)
    assert bt.check_herzog_bounds(t).passed
    assert bt.check_herzog_bounds(t.quotient()).passed
    for k in range(I.n + 1):
        assert bt.check_syzygy_bounds(t, k).passed

import random

from hypothesis import HealthCheck, settings, strategies as st

from bettibounds.monomial import MonomialIdeal, minimalize, random_stable_ideal
from oracles import all_monomials

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def monomials(draw, n=None, max_exp=3):
    n = draw(st.integers(1, 5)) if n is None else n
    return tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))


@st.composite
def monomial_pairs(draw, same_degree=False):
    n = draw(st.integers(1, 5))
    a = draw(monomials(n))
    if same_degree:
        b = draw(st.sampled_from(all_monomials(n, sum(a))))
    else:
        b = draw(monomials(n))
    return a, b


@st.composite
def monomial_ideals(draw, max_n=4, max_gens=5, max_exp=2):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(monomials(n, max_exp), min_size=0, max_size=max_gens))
    gens = [g for g in gens if any(g)]
    return minimalize(gens, n=n)


@st.composite
def stable_ideals(draw, max_n=4, max_d=3, max_k=6):
    from math import comb
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    k = draw(st.integers(0, min(max_k, comb(n + d - 1, d))))
    return random_stable_ideal(n, d, k, draw(st.integers(0, 2**32)))


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.LINES):
            terminalreporter.write_line(line)

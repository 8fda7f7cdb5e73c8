import pytest
from hypothesis import given, settings, strategies as st

from hankelmoments.ring import as_poly, const, exact_div, substitute, var
from hankelmoments.weights import (CATALOG_IDS, CATALOG_NAMES, DYCK, MOTZKIN, catalog, constant_tail, describe,
                                   from_descriptor, q_binomial, q_pochhammer, rogers_szego, shift_weights,
                                   symbolic, weight_at)


def test_every_catalog_entry_has_a_name():
    assert set(CATALOG_IDS) == set(CATALOG_NAMES)
    for ident in CATALOG_IDS:
        ws = catalog(ident)
        assert ws.mode in (MOTZKIN, DYCK)


def test_unknown_catalog_id():
    with pytest.raises(KeyError):
        catalog("nope")


def test_constant_tail_weights():
    ws = constant_tail(1, 2, 3, 4)
    assert weight_at(ws, 0) == (const(1), const(3))
    assert all(weight_at(ws, i) == (const(2), const(4)) for i in range(1, 6))


def test_symbolic_weights_are_indexed_names():
    ws = symbolic()
    assert weight_at(ws, 3) == (var("s_3"), var("t_3"))
    assert weight_at(symbolic(DYCK), 2) == var("T_2")


@given(st.integers(0, 5), st.integers(0, 5))
def test_shift_weights_composes(a, b):
    ws = symbolic()
    assert weight_at(shift_weights(shift_weights(ws, a), b), 1) == weight_at(ws, 1 + a + b)


@pytest.mark.parametrize("desc", ["catalog:ii", "symbolic", "symbolic:dyck", "tail:s0,s,t0,t",
                                  '{"kind":"catalog","id":"v"}'])
def test_descriptor_roundtrip(desc):
    ws = from_descriptor(desc)
    again = from_descriptor(describe(ws))
    assert [weight_at(again, i) for i in range(4)] == [weight_at(ws, i) for i in range(4)]


def test_bad_descriptor():
    with pytest.raises(ValueError):
        from_descriptor("tail:1,2")
    with pytest.raises(ValueError):
        constant_tail(1, 1, 0, 1)


def test_q_pochhammer_values():
    assert q_pochhammer("q", 0) == const(1)
    assert q_pochhammer("q", 2) == as_poly("(1-q)*(1-q^2)")


@given(st.integers(0, 7), st.integers(0, 7))
@settings(max_examples=40, deadline=None)
def test_q_binomial_pascal_and_limit(n, k):
    # q-Pascal rule and q -> 1 gives the ordinary binomial
    if n >= 1:
        assert q_binomial(n, k) == q_binomial(n - 1, k - 1) + var("q") ** k * q_binomial(n - 1, k) \
            if k >= 1 else q_binomial(n, 0) == const(1)
    from math import comb
    assert substitute(q_binomial(n, k), {"q": 1}) == const(comb(n, k) if k <= n else 0)


def test_rogers_szego_small():
    assert rogers_szego(2) == as_poly("1 + t + q*t + t^2")
    # r_n(t) at q=1 is (1+t)^n
    assert substitute(rogers_szego(5), {"q": 1}) == (var("t") + 1) ** 5


def test_q_binomial_is_polynomial():
    # exact_div inside q_binomial would raise otherwise
    assert exact_div(q_binomial(6, 3) * (var("q") - 1), var("q") - 1) == q_binomial(6, 3)

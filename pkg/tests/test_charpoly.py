from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hankelmoments.charpoly import (SPECIAL_POINTS, chebyshev_special, chebyshev_u, f_closed_form,
                                    f_closed_form_two_term, f_poly, g_poly, gaussian_value,
                                    reference_sequence, scaled_chebyshev, u_at_rational)
from hankelmoments.hankel import det_bareiss, tridiagonal
from hankelmoments.moments import dyck_to_motzkin
from hankelmoments.oracle import enum_pillars
from hankelmoments.ring import as_poly, coefficient_of, const, eval_rational, substitute, var
from hankelmoments.weights import DYCK, catalog, constant_tail, dyck, symbolic

A = var("alpha")


def test_initial_values():
    ws = symbolic()
    assert f_poly(ws, -1) == const(0)
    assert f_poly(ws, 0) == const(1)
    assert f_poly(ws, 1) == A + var("s_0")
    wd = symbolic(DYCK)
    assert g_poly(wd, 0) == const(1)
    assert g_poly(wd, 2) == A + var("T_0")


def test_mode_errors():
    with pytest.raises(ValueError):
        f_poly(symbolic(DYCK), 2)
    with pytest.raises(ValueError):
        g_poly(symbolic(), 2)


def test_chebyshev_values():
    x = var("x")
    assert chebyshev_u(-2, x) == const(-1)
    assert chebyshev_u(-1, x) == const(0)
    assert chebyshev_u(1, x) == 2 * x
    assert chebyshev_u(2, x) == 4 * x * x - 1
    assert scaled_chebyshev(2, "a", "t") == as_poly("a^2 - t")
    with pytest.raises(ValueError):
        scaled_chebyshev(-2)


@given(st.integers(0, 9))
@settings(max_examples=10, deadline=None)
def test_scaled_specialises_to_u(n):
    assert substitute(scaled_chebyshev(n, "a", "t"), {"a": 2 * var("x"), "t": 1}) == chebyshev_u(n, "x")


@pytest.mark.parametrize("n", range(0, 11))
def test_motzkin_f_is_chebyshev(n):
    # 2^n f_n(alpha) = 2^n U_n((alpha+1)/2)
    f = f_poly(catalog("i"), n)
    u = substitute(chebyshev_u(n, "x"), {"x": (A + 1) * Fraction(1, 2)})
    assert f * 2 ** n == u * 2 ** n


@pytest.mark.parametrize("n", range(0, 9))
def test_g_under_unit_weights(n):
    ws = dyck(T=1)
    x = (A + 2) * Fraction(1, 2)
    U = lambda k: substitute(chebyshev_u(k, "x"), {"x": x})  # noqa: E731
    assert g_poly(ws, 2 * n + 1) == U(n)
    assert g_poly(ws, 2 * n) == U(n) - U(n - 1)


def test_g_chebyshev_fails_for_general_weights():
    x = (A + 2) * Fraction(1, 2)
    U = lambda k: substitute(chebyshev_u(k, "x"), {"x": x})  # noqa: E731
    assert g_poly(symbolic(DYCK), 4) != U(2) - U(1)


@pytest.mark.parametrize("n", range(0, 9))
def test_closed_forms_match_recurrence(n):
    ws = constant_tail("s0", "s", "t0", "t")
    want = f_poly(ws, n)
    assert f_closed_form("s0", "s", "t0", "t", n) == want
    if n >= 1:
        assert f_closed_form_two_term("s0", "s", "t0", "t", n) == want


@pytest.mark.parametrize("n", range(1, 9))
def test_central_binomial_f_at_one_is_lucas(n):
    assert eval_rational(f_poly(catalog("iv"), n), {"alpha": 1}) == reference_sequence("Lucas", 2 * n)


@pytest.mark.parametrize("n", range(0, 7))
def test_tridiagonal_determinant(n):
    ws = symbolic()
    if n == 0:
        return
    assert det_bareiss(tridiagonal(ws, n, "alpha")) == f_poly(ws, n)


@pytest.mark.parametrize("n", range(0, 9))
def test_pillars(n):
    assert enum_pillars(catalog("ii"), n) == f_poly(catalog("ii"), n)
    if n <= 5:
        assert enum_pillars(symbolic(), n) == f_poly(symbolic(), n)


@pytest.mark.parametrize("n", range(0, 6))
def test_dyck_bridge(n):
    ws = symbolic(DYCK)
    assert f_poly(dyck_to_motzkin(ws, "even"), n) == g_poly(ws, 2 * n)
    assert f_poly(dyck_to_motzkin(ws, "odd"), n) == g_poly(ws, 2 * n + 1)


@pytest.mark.parametrize("n", range(0, 9))
def test_leading_coefficient(n):
    assert coefficient_of(f_poly(symbolic(), n, "beta"), "beta", n) == const(1)


@pytest.mark.parametrize("point", SPECIAL_POINTS)
@pytest.mark.parametrize("n", range(0, 10))
def test_special_points_against_evaluation(point, n):
    # independent check: evaluate U_n by the recurrence over Q(i) represented as (re, im) pairs
    re, im = {"0": (0, 0), "1/2": (Fraction(1, 2), 0), "1": (1, 0), "3/2": (Fraction(3, 2), 0),
              "i/2": (0, Fraction(1, 2)), "i": (0, 1)}[point]
    prev, cur = (0, 0), (1, 0)
    for _ in range(n):
        nxt = (2 * (re * cur[0] - im * cur[1]) - prev[0], 2 * (re * cur[1] + im * cur[0]) - prev[1])
        prev, cur = cur, nxt
    assert gaussian_value(*chebyshev_special(point, n)) == cur


def test_special_point_examples():
    assert chebyshev_special("1", 5) == (6, 0)
    assert chebyshev_special("3/2", 3) == (21, 0)
    assert chebyshev_special("0", 2) == (-1, 0)
    with pytest.raises(ValueError):
        chebyshev_special("2", 1)


def test_reference_sequences():
    assert reference_sequence("Fibonacci", 7) == 13
    assert reference_sequence("Lucas", 0) == 2
    assert reference_sequence("Catalan", 3) == 5
    assert [reference_sequence("Pell", n) for n in range(6)] == [0, 1, 2, 5, 12, 29]
    assert [reference_sequence("Bell", n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert u_at_rational(4, Fraction(3, 2)) == reference_sequence("Fibonacci", 10)

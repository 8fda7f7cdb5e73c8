import pytest
from hypothesis import given, settings, strategies as st

from hankelmoments.moments import build_table, dyck_to_motzkin, moments
from hankelmoments.oracle import enum_paths
from hankelmoments.ring import as_poly, const, to_text
from hankelmoments.weights import DYCK, catalog, constant_tail, dyck, symbolic

# frozen from path enumeration (enum_paths) and the classical sequences
FROZEN = {
    "i": [1, 1, 2, 4, 9, 21, 51, 127, 323],
    "ii": [1, 1, 2, 5, 14, 42, 132, 429, 1430],
    "iii": [1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    "iv": [1, 2, 6, 20, 70, 252, 924, 3432, 12870],
    "v": [1, 1, 3, 7, 19, 51, 141, 393, 1107],
    "vi": [1, 3, 13, 63, 321, 1683, 8989, 48639, 265729],
    "vii": [1, 2, 6, 22, 90, 394, 1806, 8558, 41586],
    "viii": [1, 1, 3, 11, 45, 197, 903, 4279, 20793],
    "ix": [1, 0, 1, 2, 6, 18, 57, 186, 622],
    "x": [1, 0, 1, 1, 3, 6, 15, 36, 91],
    "xi": [1, 3, 10, 36, 137, 543, 2219, 9285, 39587],
    "xii": [1, 1, 2, 5, 15, 52, 203, 877, 4140],
    "xiii": [1, 1, 2, 6, 24, 120, 720, 5040, 40320],
    "xiv": [1, 3, 10, 35, 126, 462, 1716, 6435, 24310],
    "xv": [1, 1, 2, 3, 6, 10, 20, 35, 70],
    "xvi": [1, 0, 1, 0, 2, 0, 5, 0, 14],
    "xvii": [1, 0, 2, 0, 6, 0, 20, 0, 70],
    "xviii": [1, 0, 1, 0, 0, 0, 1, 0, -2, 0, 6],
}


@pytest.mark.parametrize("ident", sorted(FROZEN))
def test_catalog_moments(ident):
    want = FROZEN[ident]
    assert moments(catalog(ident), len(want) - 1) == [const(x) for x in want]


@pytest.mark.parametrize("ident", ["i", "ii", "v", "xii"])
def test_table_matches_path_oracle(ident):
    ws = catalog(ident)
    tbl = build_table(ws, 7)
    for n in range(8):
        for k in range(n + 1):
            assert tbl.entry(n, k) == enum_paths(ws, n, k)


def test_symbolic_small_moments():
    m = moments(symbolic(), 3)
    assert m[2] == as_poly("s_0^2 + t_0")
    assert m[3] == as_poly("s_0^3 + 2*s_0*t_0 + s_1*t_0")


def test_rogers_szego_moments():
    from hankelmoments.weights import rogers_szego
    assert moments(catalog("rogers_szego"), 6) == [rogers_szego(n) for n in range(7)]


def test_dyck_catalan():
    # c_n = c(2n, 0); the full table interleaves zeroes at odd lengths
    ws = dyck(T=1)
    assert [to_text(x) for x in moments(ws, 5)] == ["1", "1", "2", "5", "14", "42"]
    tbl = build_table(ws, 6)
    assert [tbl.entry(n, 0) for n in range(7)] == [const(x) for x in (1, 0, 1, 0, 2, 0, 5)]


@given(st.integers(0, 4))
@settings(max_examples=10, deadline=None)
def test_dyck_to_motzkin_even(n):
    ws = symbolic(DYCK)
    assert moments(dyck_to_motzkin(ws, "even"), n)[n] == moments(ws, n)[n]


def test_dyck_to_motzkin_odd():
    ws = symbolic(DYCK)
    tbl = build_table(ws, 9)
    odd = moments(dyck_to_motzkin(ws, "odd"), 4)
    assert odd == [tbl.entry(2 * n + 1, 1) for n in range(5)]


def test_table_bounds():
    tbl = build_table(catalog("i"), 3)
    assert tbl.entry(2, 5) == const(0)
    with pytest.raises(IndexError):
        tbl.entry(4, 0)


nonzero = st.integers(-3, 3).filter(bool)


@given(st.integers(-3, 3), st.integers(-3, 3), nonzero, nonzero)
@settings(max_examples=25, deadline=None)
def test_constant_tail_matches_substitution(s0, s, t0, t):
    from hankelmoments.ring import substitute
    sym = moments(constant_tail("s0", "s", "t0", "t"), 5)
    num = moments(constant_tail(s0, s, t0, t), 5)
    assert [substitute(x, {"s0": s0, "s": s, "t0": t0, "t": t}) for x in sym] == num

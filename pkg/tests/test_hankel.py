import pytest
from hypothesis import given, settings, strategies as st

from hankelmoments.hankel import (HankelSpec, SquareMatrix, build_hankel, det_bareiss, det_cofactor, determinant,
                                  elementary_symmetric, factorization_check, hankel_product_formula)
from hankelmoments.moments import moments
from hankelmoments.ring import as_poly, const
from hankelmoments.weights import DYCK, catalog, symbolic

small = st.integers(-6, 6)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
@settings(max_examples=80, deadline=None)
def test_bareiss_matches_cofactor(rows):
    m = SquareMatrix(rows)
    assert det_bareiss(m) == det_cofactor(m)


@given(st.lists(st.sampled_from(["a", "b", "c", "1", "a*b", "-2"]), min_size=9, max_size=9))
@settings(max_examples=40, deadline=None)
def test_bareiss_matches_cofactor_symbolic(cells):
    m = SquareMatrix([[as_poly(c) for c in cells[i * 3:i * 3 + 3]] for i in range(3)])
    assert det_bareiss(m) == det_cofactor(m)


@given(st.permutations(["alpha", "beta", "gamma"]), st.integers(1, 3))
@settings(max_examples=12, deadline=None)
def test_root_order_irrelevant(roots, n):
    seq = moments(symbolic(), 2 * n + 2)
    a = det_bareiss(build_hankel(seq, HankelSpec(0, tuple(roots)), n))
    b = det_bareiss(build_hankel(seq, HankelSpec(0, ("alpha", "beta", "gamma")), n))
    assert a == b


def test_zero_pivot_row_swap():
    m = SquareMatrix([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
    assert det_bareiss(m) == det_cofactor(m) == const(-2)
    assert det_bareiss(SquareMatrix([[0, 0], [0, 1]])) == const(0)


def test_coefficients_are_elementary_symmetric():
    assert elementary_symmetric(["a", "b"]) == [const(1), as_poly("a+b"), as_poly("a*b")]
    assert HankelSpec(0, ("a", "b")).coefficients() == [as_poly("a*b"), as_poly("a+b"), const(1)]


def test_catalan_example():
    seq = moments(catalog("ii"), 7)
    assert determinant(build_hankel(seq, HankelSpec(0, (1,)), 3)) == const(13)
    assert determinant(build_hankel(seq, HankelSpec(0, (1,)), 3), "cofactor") == const(13)


def test_build_errors():
    with pytest.raises(ValueError):
        build_hankel([1, 2], HankelSpec(), 2)
    with pytest.raises(ValueError):
        HankelSpec(-1)
    with pytest.raises(ValueError):
        determinant(SquareMatrix([[1]]), "lu")


@pytest.mark.parametrize("n", range(1, 5))
def test_product_formula_symbolic(n):
    ws = symbolic()
    assert det_bareiss(build_hankel(moments(ws, 2 * n), HankelSpec(), n)) == hankel_product_formula(ws, "base", n)
    wd = symbolic(DYCK)
    c = moments(wd, 2 * n)
    assert det_bareiss(build_hankel(c, HankelSpec(0), n)) == hankel_product_formula(wd, "dyck_even", n)
    assert det_bareiss(build_hankel(c, HankelSpec(1), n)) == hankel_product_formula(wd, "dyck_odd", n)


def test_matrix_algebra():
    a = SquareMatrix([[1, 2], [3, 4]])
    assert a @ SquareMatrix.identity(2) == a
    assert (a + a) == a.scale(2)
    assert a.transpose()[0, 1] == const(3)
    assert a.tolist()[1][1] == const(4)
    with pytest.raises(ValueError):
        SquareMatrix([[1, 2]])


@pytest.mark.parametrize("n", range(1, 5))
def test_factorization_symbolic(n):
    rep = factorization_check(symbolic(), n)
    assert rep.passed, rep.failures
    assert rep.to_dict()["n"] == n


def test_factorization_rejects_dyck():
    with pytest.raises(ValueError):
        factorization_check(symbolic(DYCK), 2)

import pytest

from hankelmoments.hankel import HankelSpec, build_hankel, det_bareiss
from hankelmoments.moments import build_table, moments
from hankelmoments.oracle import (LGV_DEFAULT_MAX, MODELS, bell_triangle, enum_paths, enum_pillars,
                                  factorial_product, iter_paths, iter_pillars, lgv_expand, reference_oracles,
                                  splitting_identity)
from hankelmoments.ring import const
from hankelmoments.weights import DYCK, catalog, dyck, symbolic


def test_path_counts():
    # Motzkin paths of length 4 ending at height 0: 9
    assert sum(1 for _ in iter_paths(catalog("i"), 4, 0)) == 9
    # Dyck paths of length 6: 5
    assert sum(1 for _ in iter_paths(dyck(T=1), 6, 0)) == 5


def test_path_vertices_stay_nonnegative():
    for p in iter_paths(catalog("i"), 6, 2):
        vs = p.vertices()
        assert vs[0] == (0, 0) and vs[-1] == (6, 2)
        assert min(y for _, y in vs) >= 0


@pytest.mark.parametrize("n", range(0, 7))
def test_symbolic_paths_match_table(n):
    ws = symbolic()
    tbl = build_table(ws, n)
    for k in range(n + 1):
        assert enum_paths(ws, n, k) == tbl.entry(n, k)


def test_pillar_count():
    # squares of two kinds and dominoes: 1, 2, 5, 12, 29 (Pell)
    assert [sum(1 for _ in iter_pillars(n)) for n in range(5)] == [1, 2, 5, 12, 29]
    with pytest.raises(ValueError):
        enum_pillars(symbolic(DYCK), 2)


@pytest.mark.parametrize("i,j", [(0, 0), (1, 2), (3, 3), (2, 5), (4, 6)])
def test_splitting(i, j):
    lhs, rhs = splitting_identity(symbolic(), i, j) if i + j <= 6 else splitting_identity(catalog("v"), i, j)
    assert lhs == rhs


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("n", range(1, LGV_DEFAULT_MAX + 1))
def test_lgv_matches_determinant(model, n):
    ws = dyck(T=1) if model.startswith("cor2") else catalog("ii")
    d = 3 if model == "thm5" else 2
    seq = moments(ws, 2 * n + d)
    roots = ("alpha", "beta", "gamma")[:d]
    det = det_bareiss(build_hankel(seq, HankelSpec(1 if model == "cor2_odd" else 0, roots), n))
    assert lgv_expand(ws, n, model) == det


def test_lgv_guards():
    with pytest.raises(ValueError):
        lgv_expand(catalog("i"), 4)
    with pytest.raises(ValueError):
        lgv_expand(catalog("i"), 2, "cor2_even")
    with pytest.raises(ValueError):
        lgv_expand(catalog("i"), 2, "nope")


def test_reference_oracles():
    assert [bell_triangle(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert factorial_product(6) == 720
    assert reference_oracles("Bell", 4) == 15
    assert moments(catalog("xii"), 7) == [const(bell_triangle(n)) for n in range(8)]
    assert moments(catalog("xiii"), 7) == [const(factorial_product(n)) for n in range(8)]

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hankelmoments.hankel import HankelSpec, build_hankel, det_bareiss
from hankelmoments.moments import moments
from hankelmoments.ring import const, eval_rational
from hankelmoments.verify import (CONJ_PASS, MISMATCH, NAMED_IDS, VERIFIED, VerificationReport, cor3_numerator,
                                  detect_recurrence, named_suite, random_weights, run_named, test_conjecture8,
                                  thm1_sum, umbral_numerator, verify_cor2, verify_cor3, verify_cor3_closed,
                                  verify_cor6, verify_limits, verify_recurrence, verify_thm1, verify_thm5)
from hankelmoments.weights import DYCK, catalog, constant_tail, dyck, symbolic


def _det(ws, n, shift=0, roots=()):
    seq = moments(ws, 2 * n + shift + len(roots))
    return det_bareiss(build_hankel(seq, HankelSpec(shift, roots), n))


def test_report_schema():
    rep = verify_thm1(symbolic(), range(1, 3))
    d = json.loads(rep.to_json())
    assert set(d) >= {"identity", "params", "n", "status", "elapsed_ms", "witnesses"}
    assert d["status"] == VERIFIED and d["n"] == [1, 2]


def test_mismatch_requires_witness():
    rep = VerificationReport("x", {}, [1])
    rep.add_witness(1, 2, 3)
    assert rep.finish().status == MISMATCH and not rep.ok
    with pytest.raises(ValueError):
        VerificationReport("x", {}, [1], status="maybe")


def test_thm1_example_values():
    # both sides at alpha = beta = 1 on Catalan weights give 1 + 4 + 25 + 169
    ws = catalog("ii")
    assert _det(ws, 3, 0, (1, 1)) == const(199)
    assert verify_thm1(ws, [3], {"alpha": 1, "beta": 1}).status == VERIFIED
    assert _det(catalog("i"), 2, 0, (1, 1)) == const(14)


def test_cor2_examples():
    ws = dyck(T=1)
    assert _det(ws, 3, 0, (1, 1)) == const(199)
    assert _det(ws, 2, 1, (1, 1)) == const(74)
    for parity in ("even", "odd"):
        assert verify_cor2(symbolic(DYCK), parity, [2]).status == VERIFIED


def test_limit_examples():
    assert _det(catalog("i"), 3, 0, (2,)) == const(21)
    assert verify_limits(catalog("i"), "3.2", [3], {"alpha": 2}).status == VERIFIED
    assert _det(dyck(T=1), 2, 0, (1,)) == const(5)
    assert verify_limits(symbolic(), "(3.1)", [2]).status == VERIFIED
    with pytest.raises(ValueError):
        verify_limits(symbolic(), "3.3", [1])


def test_cor3_against_limit_at_beta_zero():
    rep = verify_cor3(("s0", "s", "t0", "t"), [1, 2], bindings={"beta": 0})
    assert rep.status == VERIFIED
    with pytest.raises(ValueError):
        verify_cor3(("s0", "s", "t0", "t"), [1], bindings={"alpha": 1, "beta": 1})


def test_cor3_closed_numeric():
    assert verify_cor3_closed(catalog("iv"), range(0, 8)).status == VERIFIED


def test_thm5_examples():
    assert _det(catalog("i"), 1, 0, (1, 1, 1)) == const(14)
    assert _det(catalog("ii"), 3, 0, (-1, -1, -1)) == const(-9)
    assert verify_thm5(catalog("i"), [1, 2], {"alpha": 1, "beta": 1, "gamma": 1}).status == VERIFIED


def test_cor6_value_at_motzkin_parameters():
    # (n+1)(n+2)^2(n+3)(2n+3)(2n+5)/180 at n = 2
    assert _det(catalog("i"), 2, 0, (1, 1, 1)) == const(84)
    rep = verify_cor6(catalog("i"), [1, 2], roots=(1, 2, 3))
    assert rep.status == VERIFIED


def test_umbral_numerator_d1_is_closed_form():
    from hankelmoments.charpoly import f_closed_form
    from hankelmoments.ring import var
    num, k = umbral_numerator("s0", "s", "t0", "t", 3, ["alpha"])
    assert num == f_closed_form("s0", "s", "t0", "t", 3) * var("t") ** k


def test_umbral_d2_matches_cor3_numerator():
    from hankelmoments.ring import var
    num, k = umbral_numerator("s0", "s", "t0", "t", 2, ["alpha", "beta"])
    assert num == cor3_numerator("s0", "s", "t0", "t", 2, "alpha", "beta") * var("t") ** k


@pytest.mark.parametrize("d,roots", [(1, (3,)), (2, (1, 2)), (3, (1, 2, 4))])
def test_conjecture_harness_coherence(d, roots):
    rep = test_conjecture8(d, catalog("vii"), roots, range(1, 4))
    assert rep.status == CONJ_PASS
    assert not rep.notes


def test_conjecture_preconditions():
    with pytest.raises(ValueError):
        test_conjecture8(2, catalog("i"), (1, 1), [1])
    with pytest.raises(ValueError):
        test_conjecture8(3, catalog("i"), (1, 2), [1])


@given(st.integers(0, 10 ** 6))
@settings(max_examples=5, deadline=None)
def test_thm1_random_weights(seed):
    assert verify_thm1(random_weights(seed), [3]).status == VERIFIED


def test_random_weights_deterministic():
    from hankelmoments.weights import weight_at
    a, b = random_weights(5), random_weights(5)
    assert [weight_at(a, i) for i in range(6)] == [weight_at(b, i) for i in range(6)]
    assert all(weight_at(a, i)[1] for i in range(20))


def test_detect_recurrence_basics():
    rec = detect_recurrence([5] * 8, 3)
    assert rec.order == 1 and list(rec.coeffs) == [-1, 1]
    fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    rec = detect_recurrence(fib, 4)
    assert rec.order == 2 and list(rec.coeffs) == [-1, -1, 1]
    assert rec.extend(fib, 2) == [55, 89]
    with pytest.raises(ValueError):
        detect_recurrence(fib, 5)
    assert detect_recurrence([Fraction(1, k) for k in range(1, 11)], 2) is None


def test_recurrence_on_motzkin_weights():
    rep = verify_recurrence("rec_motzkin", 1, 1, 1, 1, (1, 2), range(1, 13), range(13, 17), 4)
    assert rep.status == VERIFIED


def test_named_registry_complete():
    want = {"1.1", "1.2", "1.3", "1.4", "4.30", "4.37", "4.39", "4.40", "7.3", "7.7"}
    assert want <= set(NAMED_IDS)
    assert [r.identity for r in named_suite("1")] == ["(1.1)", "(1.2)", "(1.3)", "(1.4)"]
    assert [r.identity for r in named_suite(["4.30", "(4.19)"])] == ["(4.19)", "(4.30)"]
    with pytest.raises(KeyError):
        run_named("9.9")


def test_named_examples():
    seq = moments(catalog("ii"), 5)
    m = build_hankel(seq, HankelSpec(1, (1,)), 2)
    assert [[int(eval_rational(x, {})) for x in row] for row in m.tolist()] == [[3, 7], [7, 19]]
    assert det_bareiss(m) == const(8)
    rep = run_named("4.30", range(1, 6))
    assert rep.status == VERIFIED and rep.params["matrix_n5"][4] == [2, -5, -5, 14, 14]


def test_erratum_4_26_is_reported():
    rep = run_named("4.26", range(1, 9))
    assert rep.status == MISMATCH
    assert sorted({w["n"] for w in rep.witnesses}) == [2, 5, 8]
    assert rep.notes


def test_literal_4_39_reading_flagged():
    rep = run_named("4.39", range(1, 5))
    assert rep.status == VERIFIED
    assert any("printed left side" in n for n in rep.notes)


def test_thm1_sum_at_zero_root():
    ws = constant_tail(1, 2, 1, 1)
    assert thm1_sum(ws, 2, 0, 0) == const(1 + 1 + 1)

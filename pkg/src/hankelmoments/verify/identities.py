"""Verifiers for the general identities: both sides computed independently,
compared in cross-multiplied form."""

from __future__ import annotations

from itertools import combinations
from math import comb

from ..charpoly import f_closed_form, f_closed_form_two_term, f_poly, g_poly, scaled_chebyshev
from ..hankel import HankelSpec, build_hankel, det_bareiss, hankel_product_formula
from ..moments import moments
from ..ring import DivisibilityError, Polynomial, as_poly, const, exact_div, var
from ..weights import DYCK, MOTZKIN, ConstantTail, WeightSystem, constant_tail, shift_weights, weight_at
from .report import (ConsistencyError, VerificationReport, bind_weights, params_of,
                     root_values, split_bindings, timed)

_ONE = const(1)
_ZERO = const(0)

LIMITS = ("3.1", "3.2", "3.3", "3.4", "3.5", "3.6")


def _prepare(ws, roots, mode):
    bindings, _ = split_bindings(mode)
    names = {r for r in roots if isinstance(r, str)}
    weight_b = {k: v for k, v in bindings.items() if k not in names}
    root_b = {k: v for k, v in bindings.items() if k in names}
    return bind_weights(ws, weight_b), root_values(roots, root_b), bindings


def _det(seq, n, shift=0, roots=()):
    return det_bareiss(build_hankel(seq, HankelSpec(shift, roots), n))


def _tprod(ws, lo, hi):
    """``prod_{l=lo}^{hi-1} t_l`` (Motzkin) or ``T_l`` (Dyck)."""
    acc = _ONE
    for l in range(lo, hi):
        w = weight_at(ws, l)
        acc = acc * (w[1] if ws.mode == MOTZKIN else w)
    return acc


def _check_denominator(rep, n, D, ws, variant):
    P = hankel_product_formula(ws, variant, n)
    if D != P:
        rep.add_witness(n, D, P, kind="denominator")


def _need(ws, mode):
    if ws.mode != mode:
        raise ValueError(f"this identity needs a {mode} weight system")


# -- thm1 (2.5) ---------------------------------------------------------------

def thm1_sum(ws, n, a, b) -> Polynomial:
    return sum((f_poly(ws, j, a) * f_poly(ws, j, b) * _tprod(ws, j, n) for j in range(n + 1)), _ZERO)


def verify_thm1(ws: WeightSystem, n_range, mode="symbolic", roots=("alpha", "beta")) -> VerificationReport:
    _need(ws, MOTZKIN)
    ws_b, (a, b), bindings = _prepare(ws, roots, mode)
    rep = VerificationReport("thm1", params_of(ws, bindings=bindings), list(n_range))
    with timed(rep):
        for n in n_range:
            seq = moments(ws_b, 2 * n)
            D = _det(seq, n)
            _check_denominator(rep, n, D, ws_b, "base")
            lhs = _det(seq, n, 0, (a, b))
            rhs = D * thm1_sum(ws_b, n, a, b)
            if lhs != rhs:
                rep.add_witness(n, lhs, rhs)
    return rep.finish()


# -- cor2 (2.9), (2.10) ---------------------------------------------------------------

def cor2_sum(ws, parity, n, a, b) -> Polynomial:
    off = 0 if parity == "even" else 1
    return sum((_tprod(ws, 2 * j + off, 2 * n + off) * g_poly(ws, 2 * j + off, a) * g_poly(ws, 2 * j + off, b)
                for j in range(n + 1)), _ZERO)


def verify_cor2(ws: WeightSystem, parity: str, n_range, mode="symbolic", roots=("alpha", "beta")) -> VerificationReport:
    _need(ws, DYCK)
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    ws_b, (a, b), bindings = _prepare(ws, roots, mode)
    rep = VerificationReport(f"cor2_{parity}", params_of(ws, bindings=bindings), list(n_range))
    shift = 0 if parity == "even" else 1
    with timed(rep):
        for n in n_range:
            seq = moments(ws_b, 2 * n + 1)
            D = _det(seq, n, shift)
            _check_denominator(rep, n, D, ws_b, f"dyck_{parity}")
            lhs = _det(seq, n, shift, (a, b))
            rhs = D * cor2_sum(ws_b, parity, n, a, b)
            if lhs != rhs:
                rep.add_witness(n, lhs, rhs)
    return rep.finish()


# -- section 3 limits -------------------------------------------------------------

def verify_limits(ws: WeightSystem, which: str, n_range, alpha="alpha") -> VerificationReport:
    which = which.strip("()")
    if which not in LIMITS:
        raise ValueError(f"unknown limit identity {which!r}")
    _need(ws, MOTZKIN if which in ("3.1", "3.2") else DYCK)
    bindings = alpha if isinstance(alpha, dict) else {}
    (a,) = root_values(["alpha"], bindings) if bindings else root_values([alpha], {})
    rep = VerificationReport(f"({which})", params_of(ws, alpha=a), list(n_range))
    with timed(rep):
        for n in n_range:
            if which in ("3.1", "3.2"):
                seq = moments(ws, 2 * n)
                D = _det(seq, n)
                _check_denominator(rep, n, D, ws, "base")
                if which == "3.1":
                    lhs = _det(seq, n, 1, (a,))
                    rhs = D * sum((f_poly(ws, j, a) * f_poly(ws, j, 0) * _tprod(ws, j, n)
                                   for j in range(n + 1)), _ZERO)
                else:
                    lhs = _det(seq, n, 0, (a,))
                    rhs = D * f_poly(ws, n, a)
            else:
                seq = moments(ws, 2 * n + 1)
                odd = which in ("3.4", "3.6")
                D = _det(seq, n, 1 if odd else 0)
                _check_denominator(rep, n, D, ws, "dyck_odd" if odd else "dyck_even")
                if which == "3.3":
                    lhs = _det(seq, n, 1, (a,))
                    rhs = D * sum((g_poly(ws, 2 * j, a) * g_poly(ws, 2 * j, 0) * _tprod(ws, 2 * j, 2 * n)
                                   for j in range(n + 1)), _ZERO)
                elif which == "3.4":
                    lhs = _det(seq, n, 2, (a,))
                    rhs = D * sum((g_poly(ws, 2 * j + 1, a) * g_poly(ws, 2 * j + 1, 0)
                                   * _tprod(ws, 2 * j + 1, 2 * n + 1) for j in range(n + 1)), _ZERO)
                elif which == "3.5":
                    lhs = _det(seq, n, 0, (a,))
                    rhs = D * g_poly(ws, 2 * n, a)
                else:
                    lhs = _det(seq, n, 1, (a,))
                    rhs = D * g_poly(ws, 2 * n + 1, a)
            if lhs != rhs:
                rep.add_witness(n, lhs, rhs)
    return rep.finish()


# -- cor3 (4.1)-(4.3) ----------------------------------------------------------------------

def _tail_params(params):
    if isinstance(params, WeightSystem):
        ws = params
        if ws.mode != MOTZKIN or not isinstance(ws.tail, ConstantTail) or len(ws.prefix) > 1 or ws.offset:
            raise ValueError("a constant-tail Motzkin system is required")
        s0, t0 = ws.prefix[0] if ws.prefix else (ws.tail.s, ws.tail.t)
        return s0, ws.tail.s, t0, ws.tail.t
    if isinstance(params, dict):
        return tuple(as_poly(params[k]) for k in ("s0", "s", "t0", "t"))
    return tuple(as_poly(x) for x in params)


def cor3_numerator(s0, s, t0, t, n, a, b) -> Polynomial:
    """The six-line numerator with ``t^{k/2} U_k`` rewritten as ``S_k``."""
    s0, s, t0, t, a, b = (as_poly(x) for x in (s0, s, t0, t, a, b))
    A = [scaled_chebyshev(k, a + s, t) for k in range(n + 2)]
    B = [scaled_chebyshev(k, b + s, t) for k in range(n + 2)]

    def S(vals, k):
        return _ZERO if k == -1 else vals[k]

    def pair(i, j):
        return S(A, i) * S(B, j) - S(A, j) * S(B, i)

    ds, dt = s - s0, t - t0
    return (pair(n + 1, n) - ds * pair(n + 1, n - 1) + (ds * ds - dt) * pair(n, n - 1)
            + dt * pair(n + 1, n - 2) - ds * dt * pair(n, n - 2) + dt * dt * pair(n - 1, n - 2))


def verify_cor3(params, n_range, roots=("alpha", "beta"), bindings=None) -> VerificationReport:
    s0, s, t0, t = _tail_params(params)
    ws = constant_tail(s0, s, t0, t)
    a, b = root_values(roots, bindings or {})
    if a == b:
        raise ValueError("coincident roots: the right-hand side has a removable singularity there")
    rep = VerificationReport("cor3_num", params_of(None, s0=s0, s=s, t0=t0, t=t, roots=[a, b]), list(n_range))
    diff = a - b
    with timed(rep):
        for n in n_range:
            seq = moments(ws, 2 * n)
            D = _det(seq, n)
            _check_denominator(rep, n, D, ws, "base")
            lhs = _det(seq, n, 0, (a, b))
            num = D * cor3_numerator(s0, s, t0, t, n, a, b)
            try:
                exact_div(num, diff)
            except DivisibilityError:
                rep.add_witness(n, num, diff, kind="divisibility")
            if lhs * diff != num:
                rep.add_witness(n, lhs * diff, num)
    return rep.finish()


def verify_cor3_closed(params, n_range, alpha="alpha") -> VerificationReport:
    """(4.1) and (4.2) against the recurrence for ``f_n``."""
    s0, s, t0, t = _tail_params(params)
    ws = constant_tail(s0, s, t0, t)
    (a,) = root_values([alpha], {})
    rep = VerificationReport("cor3_closed", params_of(None, s0=s0, s=s, t0=t0, t=t, alpha=a), list(n_range))
    with timed(rep):
        for n in n_range:
            want = f_poly(ws, n, a)
            got = f_closed_form(s0, s, t0, t, n, a)
            if got != want:
                rep.add_witness(n, got, want, form="(4.2)")
            if n >= 1:
                try:
                    got1 = f_closed_form_two_term(s0, s, t0, t, n, a)
                except DivisibilityError:
                    rep.add_witness(n, "not divisible by t", want, form="(4.1)")
                    continue
                if got1 != want:
                    rep.add_witness(n, got1, want, form="(4.1)")
    return rep.finish()


# -- thm5 (7.1) --------------------------------------------------------------------------

def thm5_sum(ws, n, a, b, c) -> Polynomial:
    """The double sum of (7.1), exactly as printed (shifted factor in the second root)."""
    f = lambda k, x: f_poly(ws, k, x)  # noqa: E731
    acc = _ZERO
    for j in range(n + 1):
        for k in range(j + 1):
            acc = acc + (f(j, a) * f(k, b) * f(k, c) * f_poly(shift_weights(ws, j + 1), n - j, b)
                         * _tprod(ws, k, n))
    for j in range(n + 1):
        for k in range(j + 1, n + 1):
            acc = acc + (f(j, a) * f(j, b) * f(k, c) * f_poly(shift_weights(ws, k + 1), n - k, b)
                         * _tprod(ws, j, n))
    return acc


def verify_thm5(ws: WeightSystem, n_range, mode="symbolic", roots=("alpha", "beta", "gamma")) -> VerificationReport:
    _need(ws, MOTZKIN)
    ws_b, (a, b, c), bindings = _prepare(ws, roots, mode)
    rep = VerificationReport("thm5", params_of(ws, bindings=bindings), list(n_range))
    with timed(rep):
        for n in n_range:
            seq = moments(ws_b, 2 * n + 1)
            D = _det(seq, n)
            _check_denominator(rep, n, D, ws_b, "base")
            lhs = _det(seq, n, 0, (a, b, c))
            rhs = D * thm5_sum(ws_b, n, a, b, c)
            if lhs != rhs:
                rep.add_witness(n, lhs, rhs)
    return rep.finish()


# -- umbral numerators (cor6, conj8) ---------------------------------------------

def vandermonde(xs) -> Polynomial:
    acc = _ONE
    for i, j in combinations(range(len(xs)), 2):
        acc = acc * (as_poly(xs[i]) - as_poly(xs[j]))
    return acc


def umbral_numerator(s0, s, t0, t, n: int, roots) -> tuple[Polynomial, int]:
    """Expand the umbral product and map it back to ``S``-values.

    Returns ``(num, k)`` meaning ``Num = num * t^{-k}``.  The auxiliary
    ``u`` stands for ``sqrt(t)``; an odd leftover power of ``u`` in any
    monomial raises ``ConsistencyError``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    s0, s, t0, t = (as_poly(x) for x in (s0, s, t0, t))
    roots = [as_poly(r) for r in roots]
    d = len(roots)
    u = var("_u")
    Us = [var(f"_U{i}") for i in range(d)]
    # each correction factor multiplied by u^2 U^2 so that all exponents stay non-negative
    prod = vandermonde(Us)
    for Ui in Us:
        prod = prod * (u * u * Ui * Ui - u * (s - s0) * Ui + (t - t0))
    base = d * n + comb(d, 2) - 2 * d
    S = [{} for _ in range(d)]

    def S_at(i, k):
        if k < -1:
            raise ConsistencyError(f"umbral index {k} below -1")
        if k not in S[i]:
            S[i][k] = scaled_chebyshev(k, roots[i] + s, t)
        return S[i][k]

    parts: dict[int, Polynomial] = {}
    for mono, coeff in prod.items():
        e = mono.pop("_u", 0) + base
        ks = [mono.pop(f"_U{i}", 0) + n - 2 for i in range(d)]
        rest = const(coeff)
        for name, p in mono.items():
            rest = rest * var(name) ** p
        r = e - sum(ks)
        if r % 2:
            raise ConsistencyError(f"odd residual power u^{r} for U-exponents {ks}")
        term = rest
        for i, k in enumerate(ks):
            term = term * S_at(i, k)
        parts[r // 2] = parts.get(r // 2, _ZERO) + term
    low = min(parts) if parts else 0
    shift = max(0, -low)
    num = _ZERO
    for h, p in parts.items():
        num = num + p * t ** (h + shift)
    return num, shift


def _umbral_check(rep, ws, s0, s, t0, t, n, roots, conjecture=False):
    seq = moments(ws, 2 * n + len(roots) - 1)
    D = _det(seq, n)
    _check_denominator(rep, n, D, ws, "base")
    lhs = _det(seq, n, 0, tuple(roots))
    num, k = umbral_numerator(s0, s, t0, t, n, roots)
    V = vandermonde(roots)
    left = lhs * V * as_poly(t) ** k
    right = D * num
    if left != right:
        rep.add_witness(n, left, right)
    return lhs, num, k, V, D


def verify_cor6(params, n_range, roots=("alpha", "beta", "gamma"), bindings=None) -> VerificationReport:
    s0, s, t0, t = _tail_params(params)
    ws = constant_tail(s0, s, t0, t)
    rts = root_values(roots, bindings or {})
    if len(rts) != 3:
        raise ValueError("cor6 needs three roots")
    if len(set(rts)) != 3:
        raise ValueError("coincident roots: the right-hand side has a removable singularity there")
    rep = VerificationReport("cor6", params_of(None, s0=s0, s=s, t0=t0, t=t, roots=list(rts)), list(n_range))
    with timed(rep):
        for n in n_range:
            _, num, k, V, _ = _umbral_check(rep, ws, s0, s, t0, t, n, rts)
            # independent recipe: the double sum (7.1)
            via_thm5 = V * thm5_sum(ws, n, *rts) * as_poly(t) ** k
            if via_thm5 != num:
                rep.add_witness(n, num, via_thm5, kind="thm5")
    return rep.finish()


def test_conjecture8(d: int, params, roots, n_range) -> VerificationReport:
    """Falsification harness: exact LHS against the umbral RHS at distinct roots."""
    s0, s, t0, t = _tail_params(params)
    rts = root_values(roots, {})
    if len(rts) != d:
        raise ValueError(f"expected {d} roots, got {len(rts)}")
    if len(set(rts)) != d:
        raise ValueError("roots must be pairwise distinct")
    if not as_poly(t) or not as_poly(t0):
        raise ValueError("t and t0 must be nonzero")
    ws = constant_tail(s0, s, t0, t)
    rep = VerificationReport("conj8", params_of(None, d=d, s0=s0, s=s, t0=t0, t=t, roots=list(rts)),
                             list(n_range))
    with timed(rep):
        for n in n_range:
            lhs, num, k, V, D = _umbral_check(rep, ws, s0, s, t0, t, n, rts)
            # coherence with the proven cases
            if d == 1:
                known = f_closed_form(s0, s, t0, t, n, rts[0]) * as_poly(t) ** k
                if num != known:
                    rep.add_witness(n, num, known, kind="d=1 vs (4.2)")
                    rep.notes.append(f"coherence failure at d=1, n={n}")
            elif d == 2:
                known = cor3_numerator(s0, s, t0, t, n, *rts) * as_poly(t) ** k
                if num != known:
                    rep.add_witness(n, num, known, kind="d=2 vs (4.3)")
                    rep.notes.append(f"coherence failure at d=2, n={n}")
            elif d == 3:
                known = V * thm5_sum(ws, n, *rts) * as_poly(t) ** k
                if num != known:
                    rep.add_witness(n, num, known, kind="d=3 vs (7.1)")
                    rep.notes.append(f"coherence failure at d=3, n={n}")
    return rep.finish(conjecture=True)


test_conjecture8.__test__ = False  # not a pytest test despite the name

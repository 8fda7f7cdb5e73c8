"""Constant-coefficient recurrences for scaled determinant sequences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..hankel import HankelSpec, build_hankel, det_bareiss
from ..moments import moments
from ..ring import as_poly
from ..weights import constant_tail
from .report import VerificationReport, timed


@dataclass(frozen=True)
class Recurrence:
    """``sum_i coeffs[i] * a_{n+i} = 0`` with ``coeffs[order] == 1``."""

    order: int
    coeffs: tuple

    def next_term(self, window) -> Fraction:
        window = list(window)[-self.order:]
        return -sum(c * a for c, a in zip(self.coeffs[:-1], window))

    def extend(self, seq, k: int) -> list:
        out = [Fraction(x) for x in seq]
        for _ in range(k):
            out.append(self.next_term(out))
        return out[len(seq):]

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def _solve(rows, rhs):
    """Gauss-Jordan over Q; returns one solution (free variables zero) or None."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in m):
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][-1]
    return sol


def detect_recurrence(seq, max_order: int) -> Recurrence | None:
    """Minimal-order monic recurrence fitting every window of ``seq``."""
    seq = [Fraction(x) for x in seq]
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if len(seq) < 2 * max_order + 2:
        raise ValueError(f"need at least {2 * max_order + 2} terms, got {len(seq)}")
    for r in range(1, max_order + 1):
        rows = [seq[n:n + r] for n in range(len(seq) - r)]
        rhs = [-seq[n + r] for n in range(len(seq) - r)]
        sol = _solve(rows, rhs)
        if sol is not None:
            return Recurrence(r, tuple(sol) + (Fraction(1),))
    return None


def scaled_determinants(s0, s, t0, t, roots, n_range) -> list[Fraction]:
    """``t0^{-(n-1)} t^{-binom(n-1,2)} det(...)`` at numeric parameters."""
    s0, s, t0, t = (Fraction(as_poly(x).constant_value()) for x in (s0, s, t0, t))
    ws = constant_tail(s0, s, t0, t)
    ns = list(n_range)
    seq = moments(ws, 2 * max(ns) + len(roots))
    out = []
    for n in ns:
        d = det_bareiss(build_hankel(seq, HankelSpec(0, tuple(roots)), n)).constant_value()
        out.append(Fraction(d) / (t0 ** (n - 1) * t ** comb(n - 1, 2)))
    return out


def verify_recurrence(identity: str, s0, s, t0, t, roots, fit_n, held_out, max_order) -> VerificationReport:
    """Fit on ``fit_n``, then predict the ``held_out`` terms exactly."""
    rep = VerificationReport(identity, {"s0": str(s0), "s": str(s), "t0": str(t0), "t": str(t),
                                        "roots": [str(r) for r in roots], "max_order": max_order},
                             list(fit_n) + list(held_out))
    with timed(rep):
        fit = scaled_determinants(s0, s, t0, t, roots, fit_n)
        rec = detect_recurrence(fit, max_order)
        if rec is None:
            rep.add_witness(max(fit_n), "no recurrence", f"order <= {max_order}")
            return rep.finish()
        rep.params["recurrence"] = rec.to_dict()
        actual = scaled_determinants(s0, s, t0, t, roots, held_out)
        for n, p, a in zip(held_out, rec.extend(fit, len(actual)), actual):
            if p != a:
                rep.add_witness(n, a, p, kind="prediction")
    return rep.finish()


def verify_cor4(s0=1, s=2, t0=1, t=1, roots=(1, 2)) -> VerificationReport:
    return verify_recurrence("rec_order4", s0, s, t0, t, roots, range(1, 15), range(15, 19), 4)


def verify_cor7(s0=1, s=2, t0=1, t=1, roots=(1, 2, 3)) -> VerificationReport:
    return verify_recurrence("rec_order8", s0, s, t0, t, roots, range(1, 19), range(19, 23), 8)

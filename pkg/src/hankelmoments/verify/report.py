"""Verification report type and shared helpers."""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..ring import Polynomial, as_poly, substitute, to_text
from ..weights import MOTZKIN, WeightSystem, closed_form, describe, weight_at

VERIFIED = "verified"
MISMATCH = "mismatch"
CONJ_PASS = "conjecture-pass"
CONJ_FAIL = "conjecture-fail"
STATUSES = (VERIFIED, MISMATCH, CONJ_PASS, CONJ_FAIL)


class ConsistencyError(RuntimeError):
    """Internal invariant of a right-hand-side recipe was violated."""


@dataclass
class VerificationReport:
    identity: str
    params: dict
    n: list
    status: str = VERIFIED
    elapsed_ms: int = 0
    witnesses: list = field(default_factory=list)
    seed: int | None = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != MISMATCH

    def add_witness(self, n: int, lhs, rhs, **extra) -> None:
        w = {"n": n, "lhs": _ser(lhs), "rhs": _ser(rhs)}
        w.update({k: _ser(v) for k, v in extra.items()})
        self.witnesses.append(w)

    def finish(self, conjecture: bool = False) -> VerificationReport:
        if conjecture:
            self.status = CONJ_FAIL if self.witnesses else CONJ_PASS
        else:
            self.status = MISMATCH if self.witnesses else VERIFIED
        return self

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "n": list(self.n),
               "status": self.status, "elapsed_ms": self.elapsed_ms, "witnesses": self.witnesses}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)


def _ser(v: Any):
    if isinstance(v, Polynomial):
        return to_text(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_ser(x) for x in v]
    return v


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)


def params_of(ws: WeightSystem | None = None, **extra) -> dict:
    out = {}
    if ws is not None:
        out["weights"] = describe(ws)
    for k, v in extra.items():
        if v is None:
            continue
        if isinstance(v, dict):
            v = {a: _ser(as_poly(b)) if not isinstance(b, str) else b for a, b in v.items()}
        out[k] = _ser(v)
    return out


# -- bindings ----------------------------------------------------------------

@dataclass(frozen=True)
class _BoundRule:
    source: WeightSystem
    bindings: tuple

    def __call__(self, i: int):
        b = dict(self.bindings)
        w = weight_at(self.source, i)
        if self.source.mode == MOTZKIN:
            return substitute(w[0], b), substitute(w[1], b)
        return substitute(w, b)


def bind_weights(ws: WeightSystem, bindings: dict) -> WeightSystem:
    """``ws`` with weight indeterminates replaced by the given values."""
    if not bindings:
        return ws
    key = tuple(sorted((k, as_poly(v)) for k, v in bindings.items()))
    return closed_form(ws.mode, f"{ws.label or 'weights'}|bound", _BoundRule(ws, key))


def _rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, 5))
        if x or not nonzero:
            return x


@dataclass(frozen=True)
class _RandomRule:
    seed: int
    mode: str

    def __call__(self, i: int):
        rng = random.Random(self.seed * 1_000_003 + i)
        if self.mode == MOTZKIN:
            return as_poly(_rand_fraction(rng)), as_poly(_rand_fraction(rng, nonzero=True))
        return as_poly(_rand_fraction(rng, nonzero=True))


def random_weights(seed: int, mode: str = MOTZKIN) -> WeightSystem:
    """Deterministic random rational weights (nonzero down steps)."""
    return closed_form(mode, f"random[{seed}]", _RandomRule(seed, mode))


def random_point(rng: random.Random, names, nonzero=(), distinct: bool = False) -> dict:
    """Random rational values for ``names``; ``distinct`` forces pairwise distinct values."""
    out: dict = {}
    for name in names:
        while True:
            v = _rand_fraction(rng, -20, 20, nonzero=name in nonzero)
            if not distinct or v not in out.values():
                break
        out[name] = v
    return out


def root_values(roots, bindings) -> tuple:
    """Roots as polynomials (texts are parsed) with ``bindings`` applied."""
    return tuple(substitute(as_poly(r), bindings or {}) for r in roots)


def split_bindings(mode) -> tuple[dict, int | None]:
    """Interpret a ``mode`` argument: ``"symbolic"`` or a binding dict."""
    if mode is None or mode == "symbolic":
        return {}, None
    if isinstance(mode, dict):
        return dict(mode), None
    raise ValueError(f"unknown mode {mode!r}")

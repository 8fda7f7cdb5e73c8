"""Weight systems for Motzkin and Dyck paths, the named catalog, q-helpers."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Union

from .ring import Polynomial, as_poly, const, exact_div, var

MOTZKIN = "motzkin"
DYCK = "dyck"

Weight = Union[tuple[Polynomial, Polynomial], Polynomial]


@dataclass(frozen=True)
class ConstantTail:
    """Weights beyond the prefix are all equal: ``(s, t)`` or ``T``."""

    s: Polynomial | None = None
    t: Polynomial | None = None
    T: Polynomial | None = None


@dataclass(frozen=True)
class SymbolicTail:
    """Index ``i`` maps to fresh indeterminates ``s_i``, ``t_i`` (or ``T_i``)."""


@dataclass(frozen=True)
class ClosedFormTail:
    """Weights given by a function of the index."""

    name: str
    rule: Callable[[int], Weight]


@dataclass(frozen=True)
class WeightSystem:
    mode: str
    prefix: tuple = ()
    tail: ConstantTail | SymbolicTail | ClosedFormTail = SymbolicTail()
    offset: int = 0
    label: str = ""

    def __post_init__(self):
        if self.mode not in (MOTZKIN, DYCK):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")
        for w in self.prefix:
            down = w[1] if self.mode == MOTZKIN else w
            if not down:
                raise ValueError("down-step weights must be nonzero")
        if isinstance(self.tail, ConstantTail):
            down = self.tail.t if self.mode == MOTZKIN else self.tail.T
            if down is None or not down:
                raise ValueError("constant tail needs a nonzero down-step weight")

    @property
    def is_motzkin(self) -> bool:
        return self.mode == MOTZKIN

    def __call__(self, i: int) -> Weight:
        return weight_at(self, i)

    def s(self, i: int) -> Polynomial:
        return weight_at(self, i)[0]

    def t(self, i: int) -> Polynomial:
        return weight_at(self, i)[1]

    def T(self, i: int) -> Polynomial:
        if self.mode != DYCK:
            raise ValueError("T_i is only defined for Dyck weight systems")
        return weight_at(self, i)


@lru_cache(maxsize=None)
def weight_at(ws: WeightSystem, i: int) -> Weight:
    """``(s_i, t_i)`` for Motzkin systems, ``T_i`` for Dyck systems."""
    if i < 0:
        raise ValueError("weight index must be non-negative")
    j = i + ws.offset
    if j < len(ws.prefix):
        return ws.prefix[j]
    tail = ws.tail
    if isinstance(tail, ConstantTail):
        return (tail.s, tail.t) if ws.mode == MOTZKIN else tail.T
    if isinstance(tail, SymbolicTail):
        if ws.mode == MOTZKIN:
            return var(f"s_{j}"), var(f"t_{j}")
        return var(f"T_{j}")
    w = tail.rule(j)
    if ws.mode == MOTZKIN:
        return as_poly(w[0]), as_poly(w[1])
    return as_poly(w)


def shift_weights(ws: WeightSystem, offset: int) -> WeightSystem:
    """System with ``weight_at(result, i) == weight_at(ws, i + offset)``."""
    if offset < 0:
        raise ValueError("shift must be non-negative")
    if offset == 0:
        return ws
    return replace(ws, offset=ws.offset + offset, label=f"{ws.label}>>{offset}" if ws.label else "")


# -- constructors -----------------------------------------------------------

def motzkin(prefix=(), s=None, t=None, label: str = "") -> WeightSystem:
    """Motzkin system from explicit ``(s_i, t_i)`` pairs and an optional constant tail."""
    pre = tuple((as_poly(a), as_poly(b)) for a, b in prefix)
    if s is None and t is None:
        return WeightSystem(MOTZKIN, pre, SymbolicTail(), label=label)
    return WeightSystem(MOTZKIN, pre, ConstantTail(s=as_poly(s), t=as_poly(t)), label=label)


def dyck(prefix=(), T=None, label: str = "") -> WeightSystem:
    pre = tuple(as_poly(x) for x in prefix)
    if T is None:
        return WeightSystem(DYCK, pre, SymbolicTail(), label=label)
    return WeightSystem(DYCK, pre, ConstantTail(T=as_poly(T)), label=label)


def symbolic(mode: str = MOTZKIN) -> WeightSystem:
    return WeightSystem(mode, (), SymbolicTail(), label="symbolic" if mode == MOTZKIN else "symbolic-dyck")


def constant_tail(s0, s, t0, t, label: str = "") -> WeightSystem:
    """``s_0, t_0`` free at height zero and ``s_i = s``, ``t_i = t`` for ``i >= 1``."""
    return motzkin([(s0, t0)], s=s, t=t, label=label)


def closed_form(mode: str, name: str, rule: Callable[[int], Weight]) -> WeightSystem:
    return WeightSystem(mode, (), ClosedFormTail(name, rule), label=name)


# -- q-arithmetic -----------------------------------------------------------

def _q(q) -> Polynomial:
    return var(q) if isinstance(q, str) else as_poly(q)


def q_pochhammer(a, n: int, q="q") -> Polynomial:
    """``(a; q)_n = (1 - a)(1 - a q)...(1 - a q^{n-1})``."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a, qq = as_poly(a), _q(q)
    out = const(1)
    for k in range(n):
        out = out * (1 - a * qq**k)
    return out


@lru_cache(maxsize=None)
def _qfact(n: int, q: str) -> Polynomial:
    qq = var(q)
    return q_pochhammer(qq, n, qq)


def q_binomial(n: int, k: int, q: str = "q") -> Polynomial:
    """Gaussian binomial coefficient, computed as an exact quotient of q-factorials."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return const(0)
    return exact_div(_qfact(n, q), _qfact(k, q) * _qfact(n - k, q))


def rogers_szego(n: int, t: str = "t", q: str = "q") -> Polynomial:
    """``r_n(t) = sum_k [n, k]_q t^k``."""
    if n < 0:
        raise ValueError("rogers_szego needs n >= 0")
    tt = var(t)
    out = const(0)
    for k in range(n + 1):
        out = out + q_binomial(n, k, q) * tt**k
    return out


def _rogers_szego_rule(i: int):
    q, t = var("q"), var("t")
    return q**i * (t + 1), q**i * t * (q ** (i + 1) - 1)


def _q_powers_rule(i: int):
    q = var("q")
    # q^{i-1}(q^{i+1} + q^i - 1) with the q^{-1} cancelling at i = 0
    s = const(1) if i == 0 else q ** (2 * i) + q ** (2 * i - 1) - q ** (i - 1)
    return s, q ** (3 * i) * (q ** (i + 1) - 1)


def _q_dyck_rule(i: int):
    q = var("q")
    return q ** ((i + 1) // 2) * (1 - q ** ((i + 2) // 2))


# -- catalog ----------------------------------------------------------------

def _const(s0, s, t0, t, label):
    return motzkin([(s0, t0)], s=s, t=t, label=label)


_CATALOG = {
    "i": lambda: _const(1, 1, 1, 1, "i"),
    "ii": lambda: _const(1, 2, 1, 1, "ii"),
    "iii": lambda: _const(2, 2, 1, 1, "iii"),
    "iv": lambda: _const(2, 2, 2, 1, "iv"),
    "v": lambda: _const(1, 1, 2, 1, "v"),
    "vi": lambda: _const(3, 3, 4, 2, "vi"),
    "vii": lambda: _const(2, 3, 2, 2, "vii"),
    "viii": lambda: _const(1, 3, 2, 2, "viii"),
    "ix": lambda: _const(0, 2, 1, 1, "ix"),
    "x": lambda: _const(0, 1, 1, 1, "x"),
    "xi": lambda: _const(3, 3, 1, 1, "xi"),
    "xii": lambda: closed_form(MOTZKIN, "xii", lambda i: (const(i + 1), const(i + 1))),
    "xiii": lambda: closed_form(MOTZKIN, "xiii", lambda i: (const(2 * i + 1), const((i + 1) ** 2))),
    "xiv": lambda: _const(3, 2, 1, 1, "xiv"),
    "xv": lambda: _const(1, 0, 1, 1, "xv"),
    "xvi": lambda: _const(0, 0, 1, 1, "xvi"),
    "xvii": lambda: _const(0, 0, 2, 1, "xvii"),
    "xviii": lambda: _const(0, 0, 1, -1, "xviii"),
    "rogers_szego": lambda: closed_form(MOTZKIN, "rogers_szego", _rogers_szego_rule),
    "q_powers": lambda: closed_form(MOTZKIN, "q_powers", _q_powers_rule),
    "q_dyck": lambda: closed_form(DYCK, "q_dyck", _q_dyck_rule),
}

_ALIASES = {"vii_q": "rogers_szego", "VII": "rogers_szego", "VIII": "q_powers", "IX": "q_dyck"}

CATALOG_IDS = tuple(_CATALOG)

CATALOG_NAMES = {
    "i": "Motzkin numbers",
    "ii": "Catalan numbers",
    "iii": "shifted Catalan numbers",
    "iv": "central binomial coefficients",
    "v": "central trinomial coefficients",
    "vi": "central Delannoy numbers",
    "vii": "large Schroeder numbers",
    "viii": "little Schroeder numbers",
    "ix": "Fine numbers",
    "x": "Riordan numbers",
    "xi": "restricted hexagonal polyominoes",
    "xii": "Bell numbers",
    "xiii": "factorials",
    "xiv": "half central binomial coefficients binom(2n+2,n+1)/2",
    "xv": "binom(n, floor(n/2))",
    "xvi": "Catalan numbers interleaved with zeroes",
    "xvii": "central binomials interleaved with zeroes",
    "xviii": "Fine numbers interleaved with zeroes",
    "rogers_szego": "Rogers-Szego polynomials",
    "q_powers": "q^binom(n,2)",
    "q_dyck": "(q;q)_n",
}


@lru_cache(maxsize=None)
def catalog(ident: str) -> WeightSystem:
    key = _ALIASES.get(ident, ident)
    key = key if key in _CATALOG else key.lower()
    if key not in _CATALOG:
        raise KeyError(f"unknown catalog id {ident!r}")
    return _CATALOG[key]()


# -- descriptors ------------------------------------------------------------

def from_descriptor(desc) -> WeightSystem:
    """Build a weight system from a JSON object, a JSON string, or a short form.

    Short forms: ``catalog:ID``, ``symbolic``, ``symbolic:dyck``,
    ``tail:s0,s,t0,t`` (polynomial texts).
    """
    if isinstance(desc, str):
        text = desc.strip()
        if text.startswith("{"):
            return from_descriptor(json.loads(text))
        if text.startswith("catalog:"):
            return catalog(text.split(":", 1)[1])
        if text == "symbolic":
            return symbolic(MOTZKIN)
        if text == "symbolic:dyck":
            return symbolic(DYCK)
        if text.startswith("tail:"):
            parts = text.split(":", 1)[1].split(",")
            if len(parts) != 4:
                raise ValueError("tail: needs four comma-separated values s0,s,t0,t")
            return constant_tail(*parts)
        raise ValueError(f"unrecognised weight descriptor {desc!r}")
    kind = desc.get("kind")
    if kind == "catalog":
        return catalog(desc["id"])
    mode = desc.get("mode", MOTZKIN)
    if kind == "symbolic":
        return symbolic(mode)
    prefix = desc.get("prefix", [])
    tail = desc.get("tail", {"kind": "symbolic"})
    if mode == MOTZKIN:
        pairs = [(as_poly(a), as_poly(b)) for a, b in prefix]
        if tail.get("kind") == "constant":
            return motzkin(pairs, s=tail["s"], t=tail["t"])
        if tail.get("kind") == "symbolic":
            return WeightSystem(MOTZKIN, tuple(pairs), SymbolicTail())
    elif mode == DYCK:
        vals = [as_poly(x) for x in prefix]
        if tail.get("kind") == "constant":
            return dyck(vals, T=tail["T"])
        if tail.get("kind") == "symbolic":
            return WeightSystem(DYCK, tuple(vals), SymbolicTail())
    raise ValueError(f"unsupported weight descriptor {desc!r}")


def describe(ws: WeightSystem) -> dict:
    """JSON-friendly descriptor (closed-form tails are named, not serialised)."""
    if ws.label in CATALOG_IDS and ws.offset == 0:
        return {"kind": "catalog", "id": ws.label}
    if isinstance(ws.tail, SymbolicTail) and not ws.prefix and ws.offset == 0:
        return {"kind": "symbolic", "mode": ws.mode}
    out: dict = {"mode": ws.mode}
    if ws.offset:
        out["offset"] = ws.offset
    if ws.mode == MOTZKIN:
        out["prefix"] = [[str(a), str(b)] for a, b in ws.prefix]
    else:
        out["prefix"] = [str(x) for x in ws.prefix]
    tail = ws.tail
    if isinstance(tail, ConstantTail):
        out["tail"] = {"kind": "constant", "s": str(tail.s), "t": str(tail.t)} if ws.mode == MOTZKIN else {"kind": "constant", "T": str(tail.T)}
    elif isinstance(tail, SymbolicTail):
        out["tail"] = {"kind": "symbolic"}
    else:
        out["tail"] = {"kind": "closed_form", "name": tail.name}
    return out

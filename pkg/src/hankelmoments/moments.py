"""Moment tables m(n, k) and c(n, k) from the path recurrences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import Polynomial, const
from .weights import DYCK, MOTZKIN, WeightSystem, closed_form, weight_at

_ZERO = const(0)


@dataclass(frozen=True)
class MomentTable:
    """Triangular table; ``rows[n][k]`` holds the entry for ``0 <= k <= n``."""

    mode: str
    rows: tuple[tuple[Polynomial, ...], ...]
    source: WeightSystem

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Polynomial:
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside table of depth {self.n_max}")
        if k < 0 or k > n:
            return _ZERO
        return self.rows[n][k]


@lru_cache(maxsize=256)
def build_table(ws: WeightSystem, n_max: int) -> MomentTable:
    """Run the Motzkin (or Dyck) recurrence up to row ``n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    rows = [(const(1),)]
    if ws.mode == MOTZKIN:
        weights = [weight_at(ws, k) for k in range(n_max + 1)]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = []
            for k in range(n + 1):
                acc = prev[k - 1] if k >= 1 else _ZERO
                if k < n:
                    s_k, t_k = weights[k]
                    acc = acc + s_k * prev[k]
                    if k + 1 < n:
                        acc = acc + t_k * prev[k + 1]
                row.append(acc)
            rows.append(tuple(row))
    else:
        Ts = [weight_at(ws, k) for k in range(n_max + 1)]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = []
            for k in range(n + 1):
                if (n - k) % 2:
                    row.append(_ZERO)
                    continue
                acc = prev[k - 1] if k >= 1 else _ZERO
                if k + 1 < n:
                    acc = acc + Ts[k] * prev[k + 1]
                row.append(acc)
            rows.append(tuple(row))
    return MomentTable(ws.mode, tuple(rows), ws)


def moment_sequence(tbl: MomentTable, n_max: int) -> list[Polynomial]:
    """``m_0..m_{n_max}`` (Motzkin) or ``c_0..c_{n_max}`` with ``c_n = c(2n, 0)`` (Dyck)."""
    need = n_max if tbl.mode == MOTZKIN else 2 * n_max
    if need > tbl.n_max:
        raise ValueError(f"table depth {tbl.n_max} too small, need {need}")
    if tbl.mode == MOTZKIN:
        return [tbl.entry(n, 0) for n in range(n_max + 1)]
    return [tbl.entry(2 * n, 0) for n in range(n_max + 1)]


def moments(ws: WeightSystem, n_max: int) -> list[Polynomial]:
    depth = n_max if ws.mode == MOTZKIN else 2 * n_max
    return moment_sequence(build_table(ws, depth), n_max)


def dyck_to_motzkin(ws: WeightSystem, parity: str = "even") -> WeightSystem:
    """Pair up Dyck steps: the result's moments are ``c(2n, 0)`` (even) or ``c(2n+1, 1)`` (odd)."""
    if ws.mode != DYCK:
        raise ValueError("dyck_to_motzkin needs a Dyck weight system")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")

    def T(i: int) -> Polynomial:
        return _ZERO if i < 0 else weight_at(ws, i)

    if parity == "even":
        def rule(k):
            return T(2 * k - 1) + T(2 * k), T(2 * k) * T(2 * k + 1)
    else:
        def rule(k):
            return T(2 * k) + T(2 * k + 1), T(2 * k + 1) * T(2 * k + 2)

    name = f"{ws.label or 'dyck'}/{parity}"
    return closed_form(MOTZKIN, name, _Rule(rule, ws, parity))


@dataclass(frozen=True)
class _Rule:
    # hashable wrapper so converted systems built from equal inputs compare equal
    fn: object
    source: WeightSystem
    parity: str

    def __call__(self, k):
        return self.fn(k)

    def __hash__(self):
        return hash((self.source, self.parity))

    def __eq__(self, other):
        return isinstance(other, _Rule) and (self.source, self.parity) == (other.source, other.parity)

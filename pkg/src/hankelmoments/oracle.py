"""Brute-force combinatorial oracles.

Everything here enumerates objects one by one (paths, pillars, families
of non-intersecting paths) and sums their weights.  Nothing is shared
with the recurrences in ``moments`` or ``charpoly``, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .ring import Polynomial, as_poly, const, var
from .weights import DYCK, MOTZKIN, WeightSystem, weight_at

_ZERO = const(0)
_ONE = const(1)

UP, DOWN, FLAT, ADD_A, ADD_B, ADD_G = "U", "D", "H", "A", "B", "G"
MODELS = ("thm1", "cor2_even", "cor2_odd", "thm5")
LGV_DEFAULT_MAX = 3
LGV_HARD_MAX = 4


def _down(ws, h):
    w = weight_at(ws, h)
    return w[1] if ws.mode == MOTZKIN else w


def _flat(ws, h):
    return weight_at(ws, h)[0]


# -- single paths ---------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    """A unit-step path from ``start`` with its weight."""

    start: tuple
    steps: tuple
    weight: Polynomial

    def vertices(self) -> list[tuple[int, int]]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            y += {UP: 1, DOWN: -1}.get(s, 0)
            x += 1
            out.append((x, y))
        return out


def iter_paths(ws: WeightSystem, n: int, k: int):
    """Yield every path of length ``n`` from height 0 to height ``k`` as ``LatticePath``."""
    steps = (UP, DOWN, FLAT) if ws.mode == MOTZKIN else (UP, DOWN)

    def rec(left, h, acc, trail):
        if left == 0:
            if h == k:
                yield LatticePath((0, 0), tuple(trail), acc)
            return
        if h - left > k or h + left < k:
            return
        for s in steps:
            if s == UP:
                nh, w = h + 1, _ONE
            elif s == DOWN:
                if h == 0:
                    continue
                nh, w = h - 1, _down(ws, h - 1)
            else:
                nh, w = h, _flat(ws, h)
            trail.append(s)
            yield from rec(left - 1, nh, acc * w, trail)
            trail.pop()

    yield from rec(n, 0, _ONE, [])


def enum_paths(ws: WeightSystem, n: int, k: int) -> Polynomial:
    """Sum of path weights, enumerated path by path."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    total = _ZERO
    for p in iter_paths(ws, n, k):
        total = total + p.weight
    return total


def splitting_identity(ws: WeightSystem, i: int, j: int) -> tuple[Polynomial, Polynomial]:
    """``(m_{i+j}, sum_k m(i,k) m(j,k) t_0...t_{k-1})`` from path enumeration."""
    lhs = enum_paths(ws, i + j, 0)
    rhs = _ZERO
    prod = _ONE
    for k in range(min(i, j) + 1):
        rhs = rhs + enum_paths(ws, i, k) * enum_paths(ws, j, k) * prod
        prod = prod * _down(ws, k)
    return lhs, rhs


# -- pillars ------------------------------------------------------------------------------

@dataclass(frozen=True)
class Brick:
    kind: str  # "s", "alpha" or "domino"
    bottom: int


def iter_pillars(n: int):
    """All tilings of a height-``n`` column by two kinds of squares and dominoes."""
    def rec(h, acc):
        if h == n:
            yield tuple(acc)
            return
        for kind in ("s", "alpha"):
            acc.append(Brick(kind, h))
            yield from rec(h + 1, acc)
            acc.pop()
        if h + 2 <= n:
            acc.append(Brick("domino", h))
            yield from rec(h + 2, acc)
            acc.pop()

    yield from rec(0, [])


def pillar_weight(ws: WeightSystem, pillar, x) -> Polynomial:
    a = var(x) if isinstance(x, str) else as_poly(x)
    w = _ONE
    for b in pillar:
        if b.kind == "s":
            w = w * _flat(ws, b.bottom)
        elif b.kind == "alpha":
            w = w * a
        else:
            w = w * (-_down(ws, b.bottom))
    return w


def enum_pillars(ws: WeightSystem, n: int, x="alpha") -> Polynomial:
    if ws.mode != MOTZKIN:
        raise ValueError("pillars need a Motzkin weight system")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = _ZERO
    for p in iter_pillars(n):
        total = total + pillar_weight(ws, p, x)
    return total


# -- non-intersecting families ----------------------------------------------------------------

def _model_geometry(model: str, n: int):
    if model == "thm1":
        return [(-i - 1, 0) for i in range(n)], [(j + 1, 0) for j in range(n)]
    if model == "thm5":
        return [(-i - 1, 0) for i in range(n)], [(j + 2, 0) for j in range(n)]
    if model == "cor2_even":
        return [(-2 * i - 2, 0) for i in range(n)], [(2 * j + 2, 0) for j in range(n)]
    if model == "cor2_odd":
        return [(-2 * i - 3, 0) for i in range(n)], [(2 * j + 3, 0) for j in range(n)]
    raise ValueError(f"unknown model {model!r}")


def _edges(ws: WeightSystem, model: str, roots, x: int, y: int, cap: int):
    """Outgoing edges ``(kind, (x', y'), weight)`` of vertex ``(x, y)``."""
    out = []
    if y < cap:
        out.append((UP, (x + 1, y + 1), _ONE))
    if y > 0:
        out.append((DOWN, (x + 1, y - 1), _down(ws, y - 1)))
    if model in ("thm1", "thm5"):
        out.append((FLAT, (x + 1, y), _flat(ws, y)))
        if x == -1:
            out.append((ADD_A, (0, y), roots[0]))
        if x == 0:
            out.append((ADD_B, (1, y), roots[1]))
        if x == 1 and model == "thm5":
            out.append((ADD_G, (2, y), roots[2]))
    else:
        if x == -2:
            out.append((ADD_A, (0, y), roots[0]))
        if x == 0:
            out.append((ADD_B, (2, y), roots[1]))
    return out


def _paths_between(ws, model, roots, a, e, cap):
    """All ``(vertex frozenset, weight)`` for paths from ``a`` to ``e``."""
    out = []

    def rec(v, verts, w):
        if v == e:
            out.append((frozenset(verts), w))
            return
        if v[0] >= e[0]:
            return
        for _, nv, ew in _edges(ws, model, roots, v[0], v[1], cap):
            # remaining horizontal distance must allow a return to height 0
            if nv[0] > e[0] or nv[1] > e[0] - nv[0]:
                continue
            verts.append(nv)
            rec(nv, verts, w * ew)
            verts.pop()

    rec(a, [a], _ONE)
    return out


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def lgv_expand(ws: WeightSystem, n: int, model: str = "thm1", roots=None,
               allow_extended: bool = False) -> Polynomial:
    """Signed sum over non-intersecting path families of the chosen model."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
    if n < 1:
        raise ValueError("n must be at least 1")
    limit = LGV_HARD_MAX if allow_extended else LGV_DEFAULT_MAX
    if n > limit:
        raise ValueError(f"LGV enumeration is exhaustive; n={n} exceeds the bound {limit}"
                         + ("" if allow_extended else " (pass allow_extended for n=4)"))
    need_mode = DYCK if model.startswith("cor2") else MOTZKIN
    if ws.mode != need_mode:
        raise ValueError(f"model {model} needs a {need_mode} weight system")
    names = ("alpha", "beta", "gamma")
    if roots is None:
        roots = names[: 3 if model == "thm5" else 2]
    roots = [var(r) if isinstance(r, str) else as_poly(r) for r in roots]
    starts, ends = _model_geometry(model, n)
    cap = n + 2 if not model.startswith("cor2") else 2 * n + 3
    table = [[_paths_between(ws, model, roots, a, e, cap) for e in ends] for a in starts]
    total = _ZERO
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        acc = _ZERO

        def rec(i, used, w):
            nonlocal acc
            if i == n:
                acc = acc + w
                return
            for verts, pw in table[i][perm[i]]:
                if used.isdisjoint(verts):
                    rec(i + 1, used | verts, w * pw)

        rec(0, frozenset(), _ONE)
        total = total + acc if sign > 0 else total - acc
    return total


# -- integer reference sequences -------------------------------------------------------------------

def bell_triangle(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return row[0]


def factorial_product(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def reference_oracles(kind: str, n: int) -> int:
    if kind == "Bell":
        return bell_triangle(n)
    if kind == "Factorial":
        return factorial_product(n)
    raise ValueError(f"unknown reference oracle {kind!r}")

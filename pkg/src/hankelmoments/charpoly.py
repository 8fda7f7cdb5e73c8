"""Polynomial sequences attached to weight systems, and Chebyshev helpers.

``f_n`` follows the three-term recurrence driven by ``(s_i, t_i)``, ``g_n``
the two-step recurrence driven by Dyck weights ``T_i``.  ``U_n`` is the
Chebyshev polynomial of the second kind and ``S_n(a, t) = t^{n/2} U_n(a / 2 sqrt t)``
its square-root-free rescaling, ``S_{n+1} = a S_n - t S_{n-1}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ring import Polynomial, as_poly, const, exact_div, var
from .weights import DYCK, MOTZKIN, WeightSystem, weight_at


def _arg(x) -> Polynomial:
    return var(x) if isinstance(x, str) else as_poly(x)


@lru_cache(maxsize=512)
def f_sequence(ws: WeightSystem, n: int, x="alpha") -> tuple[Polynomial, ...]:
    """``(f_0, ..., f_n)`` evaluated at ``x`` (an indeterminate name or a value)."""
    if ws.mode != MOTZKIN:
        raise ValueError("f_n needs a Motzkin weight system")
    a = _arg(x)
    prev, cur = const(0), const(1)
    out = [cur]
    for k in range(1, n + 1):
        s_prev = weight_at(ws, k - 1)[0]
        t_term = weight_at(ws, k - 2)[1] * prev if k >= 2 else const(0)
        prev, cur = cur, (a + s_prev) * cur - t_term
        out.append(cur)
    return tuple(out)


def f_poly(ws: WeightSystem, n: int, x="alpha") -> Polynomial:
    if n < -1:
        raise ValueError("f_n is defined for n >= -1")
    if n == -1:
        if ws.mode != MOTZKIN:
            raise ValueError("f_n needs a Motzkin weight system")
        return const(0)
    return f_sequence(ws, n, x)[n]


@lru_cache(maxsize=512)
def g_sequence(ws: WeightSystem, n: int, x="alpha") -> tuple[Polynomial, ...]:
    """``(g_0, ..., g_n)`` for a Dyck system, with ``g_{-1} = 0`` and ``T_{-1} = 0``."""
    if ws.mode != DYCK:
        raise ValueError("g_n needs a Dyck weight system")
    a = _arg(x)
    seq = {-1: const(0), 0: const(1)}
    for k in range(1, n + 1):
        T_prev = weight_at(ws, k - 2) if k >= 2 else const(0)
        lead = a * seq[k - 1] if k % 2 == 0 else seq[k - 1]
        seq[k] = lead + T_prev * seq[k - 2]
    return tuple(seq[k] for k in range(n + 1))


def g_poly(ws: WeightSystem, n: int, x="alpha") -> Polynomial:
    if ws.mode != DYCK:
        raise ValueError("g_n needs a Dyck weight system")
    if n < -1:
        raise ValueError("g_n is defined for n >= -1")
    if n == -1:
        return const(0)
    return g_sequence(ws, n, x)[n]


@lru_cache(maxsize=None)
def _u_table(n: int, x: Polynomial) -> tuple[Polynomial, ...]:
    vals = [const(1), 2 * x]
    for _ in range(2, n + 1):
        vals.append(2 * x * vals[-1] - vals[-2])
    return tuple(vals)


def chebyshev_u(n: int, x="x") -> Polynomial:
    """``U_n(x)`` for ``n >= -2`` (``U_{-1} = 0``, ``U_{-2} = -1``)."""
    if n < -2:
        raise ValueError("U_n is only extended down to n = -2")
    if n == -2:
        return const(-1)
    if n == -1:
        return const(0)
    return _u_table(max(n, 1), _arg(x))[n]


@lru_cache(maxsize=None)
def _s_table(n: int, a: Polynomial, t: Polynomial) -> tuple[Polynomial, ...]:
    vals = [const(1), a]
    for _ in range(2, n + 1):
        vals.append(a * vals[-1] - t * vals[-2])
    return tuple(vals)


def scaled_chebyshev(n: int, a="a", t="t") -> Polynomial:
    """``S_n(a, t)``: ``S_{-1} = 0``, ``S_0 = 1``, ``S_1 = a``, ``S_{n+1} = a S_n - t S_{n-1}``."""
    if n < -1:
        raise ValueError("S_n is not polynomial below n = -1")
    if n == -1:
        return const(0)
    return _s_table(max(n, 1), _arg(a), _arg(t))[n]


def f_closed_form(s0, s, t0, t, n: int, x="alpha") -> Polynomial:
    """``f_n`` for a constant-tail system as a combination of three ``S`` values."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s0, s, t0, t, a = (_arg(v) for v in (s0, s, t0, t, x))
    if n == 0:
        return const(1)
    if n == 1:
        return a + s0
    arg = a + s
    return (scaled_chebyshev(n, arg, t) - (s - s0) * scaled_chebyshev(n - 1, arg, t)
            + (t - t0) * scaled_chebyshev(n - 2, arg, t))


def f_closed_form_two_term(s0, s, t0, t, n: int, x="alpha") -> Polynomial:
    """The two-term variant ``(t0 S_n + ((t - t0)(x + s) - t(s - s0)) S_{n-1}) / t`` for ``n >= 1``.

    The division by ``t`` is exact; a failure raises ``DivisibilityError``.
    """
    if n < 1:
        raise ValueError("two-term closed form needs n >= 1")
    s0, s, t0, t, a = (_arg(v) for v in (s0, s, t0, t, x))
    arg = a + s
    num = t0 * scaled_chebyshev(n, arg, t) + ((t - t0) * arg - t * (s - s0)) * scaled_chebyshev(n - 1, arg, t)
    return exact_div(num, t)


# -- special values -------------------------------------------------------

SPECIAL_POINTS = ("0", "1/2", "1", "3/2", "i/2", "i")


def chebyshev_special(point: str, n: int) -> tuple[int, int]:
    """``U_n(point)`` as ``(value, k)`` meaning ``value * i**k`` with ``k`` in 0..3."""
    if n < 0:
        raise ValueError("n must be non-negative")
    point = str(point).replace(" ", "")
    if point == "0":
        return ((-1) ** (n // 2) if n % 2 == 0 else 0), 0
    if point == "1/2":
        r = n % 6
        return (1 if r in (0, 1) else 0 if r in (2, 5) else -1), 0
    if point == "1":
        return n + 1, 0
    if point == "3/2":
        return reference_sequence("Fibonacci", 2 * n + 2), 0
    if point == "i/2":
        return reference_sequence("Fibonacci", n + 1), n % 4
    if point == "i":
        return reference_sequence("Pell", n + 1), n % 4
    raise ValueError(f"unsupported special point {point!r}")


def gaussian_value(value: int, ipow: int) -> tuple[int, int]:
    """Convert a ``(value, i-power)`` pair to a Gaussian integer pair ``(re, im)``."""
    re_im = [(1, 0), (0, 1), (-1, 0), (0, -1)][ipow % 4]
    return value * re_im[0], value * re_im[1]


@lru_cache(maxsize=None)
def _linear(kind: str, n: int) -> int:
    if kind == "Fibonacci":
        a, b, mult = 0, 1, 1
    elif kind == "Lucas":
        a, b, mult = 2, 1, 1
    else:
        a, b, mult = 0, 1, 2
    for _ in range(n):
        a, b = b, mult * b + a
    return a


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for k in range(1, m + 1):
            new[k] = k * (row[k] if k < len(row) else 0) + row[k - 1]
        row = new
    return tuple(row)


def reference_sequence(kind: str, n: int) -> int:
    """Classical integer sequences used as right-hand sides."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind in ("Fibonacci", "Lucas", "Pell"):
        return _linear(kind, n)
    if kind == "Catalan":
        return comb(2 * n, n) // (n + 1)
    if kind == "Motzkin":
        return sum(comb(n, 2 * k) * comb(2 * k, k) // (k + 1) for k in range(n // 2 + 1))
    if kind == "Factorial":
        return factorial(n)
    if kind == "Bell":
        return sum(_stirling2_row(n))
    raise ValueError(f"unknown sequence {kind!r}")


def u_at_rational(n: int, x: Fraction) -> Fraction:
    """``U_n`` at a rational point by the recurrence (no closed forms)."""
    x = Fraction(x)
    if n == -1:
        return Fraction(0)
    a, b = Fraction(1), 2 * x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, 2 * x * b - a
    return b

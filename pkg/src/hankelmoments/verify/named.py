"""The fixed catalog of named determinant evaluations.

Left-hand sides are Hankel determinants of explicitly named sequences
(Catalan, Motzkin, binomial, q-sequences), built from closed formulas
rather than from path recurrences.  Right-hand sides are the printed
closed forms.  Ratios are compared multiplied through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from ..charpoly import chebyshev_special, chebyshev_u, reference_sequence
from ..hankel import HankelSpec, SquareMatrix, build_hankel, det_bareiss
from ..ring import Polynomial, as_poly, const, var
from ..weights import q_binomial, q_pochhammer, rogers_szego
from .report import VerificationReport, timed

_ZERO = const(0)
_ONE = const(1)
A, B = var("alpha"), var("beta")
Q, T = var("q"), var("t")


def F(n):
    return reference_sequence("Fibonacci", n)


def L(n):
    return reference_sequence("Lucas", n)


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def motzkin_number(k):
    return reference_sequence("Motzkin", k)


def central_binomial(k):
    return comb(2 * k, k)


def half_central(k):
    return comb(2 * k + 2, k + 1) // 2


def floor_binomial(k):
    return comb(k, k // 2)


def signed_catalan(k):
    return (-1) ** (k // 2) * catalan(k // 2) if k % 2 == 0 else 0


def u_half(j):
    return chebyshev_special("1/2", j)[0] if j >= 0 else 0


def _hdet(fn: Callable[[int], object], n: int, shift: int = 0, roots=()) -> Polynomial:
    seq = [as_poly(fn(k)) for k in range(2 * n + shift + len(roots))]
    return det_bareiss(build_hankel(seq, HankelSpec(shift, roots), n))


def _u(k, x):
    return _ZERO if k == -1 else chebyshev_u(k, x)


def _pairs(terms, x, y) -> Polynomial:
    """``sum c (U_i(x) U_j(y) - U_j(x) U_i(y))`` over ``(c, i, j)``."""
    acc = _ZERO
    for c, i, j in terms:
        acc = acc + c * (_u(i, x) * _u(j, y) - _u(j, x) * _u(i, y))
    return acc


def _qfacts(n):
    acc = _ONE
    for i in range(1, n):
        acc = acc * q_pochhammer(Q, i, Q)
    return acc


# -- registry -----------------------------------------------------------------------

@dataclass
class NamedIdentity:
    ident: str
    description: str
    checks: Callable[[int], list]
    n_default: tuple
    notes: list = field(default_factory=list)


REGISTRY: dict[str, NamedIdentity] = {}


def _register(ident, description, n_default, notes=()):
    def deco(fn):
        REGISTRY[ident] = NamedIdentity(ident, description, fn, tuple(n_default), list(notes))
        return fn
    return deco


INT_RANGE = range(1, 9)
SYM_RANGE = range(1, 6)


@_register("1.1", "det(C_{i+j}+C_{i+j+1}) = F_{2n+1}", range(1, 11))
def _e1_1(n):
    return [(_hdet(catalan, n, 0, (1,)), F(2 * n + 1))]


@_register("1.2", "det(C_{i+j+1}+C_{i+j+2}) = F_{2n+2}", range(1, 11))
def _e1_2(n):
    return [(_hdet(catalan, n, 1, (1,)), F(2 * n + 2))]


@_register("1.3", "det(C_{i+j}+2C_{i+j+1}+C_{i+j+2}) = sum F_{2j+1}^2", INT_RANGE)
def _e1_3(n):
    return [(_hdet(catalan, n, 0, (1, 1)), sum(F(2 * j + 1) ** 2 for j in range(n + 1)))]


@_register("1.4", "det(binomial combination) / 2^n = sum L_{2j+1}^2", range(1, 7),
           notes=["scaling 2^n taken as printed"])
def _e1_4(n):
    lhs = _hdet(lambda k: comb(2 * k + 2, k + 1), n, 0, (1, 1))
    return [(lhs, 2 ** n * sum(L(2 * j + 1) ** 2 for j in range(n + 1)))]


@_register("4.12", "det(C_{i+j+1}+2C_{i+j+2}+C_{i+j+3}) = sum F_{2j+2}^2", INT_RANGE)
def _e4_12(n):
    return [(_hdet(catalan, n, 1, (1, 1)), sum(F(2 * j + 2) ** 2 for j in range(n + 1)))]


@_register("4.13", "det(C_{i+j}-2C_{i+j+1}+C_{i+j+2}) = floor((2n+3)/3)", INT_RANGE)
def _e4_13(n):
    lhs = _hdet(catalan, n, 0, (-1, -1))
    return [(lhs, sum((u_half(j) - u_half(j - 1)) ** 2 for j in range(n + 1))),
            (lhs, (2 * n + 3) // 3)]


@_register("4.14", "det(C_{i+j+1}-2C_{i+j+2}+C_{i+j+3}) = floor((2n+4)/3)", INT_RANGE)
def _e4_14(n):
    lhs = _hdet(catalan, n, 1, (-1, -1))
    return [(lhs, sum(u_half(j) ** 2 for j in range(n + 1))), (lhs, (2 * n + 4) // 3)]


@_register("4.15", "Catalan, symbolic alpha, beta, x=(alpha+2)/2", SYM_RANGE)
def _e4_15(n):
    x, y = (A + 2) * Fraction(1, 2), (B + 2) * Fraction(1, 2)
    num = _pairs([(1, n + 1, n), (-1, n + 1, n - 1), (1, n, n - 1)], x, y)
    return [(_hdet(catalan, n, 0, (A, B)) * (A - B), num)]


@_register("4.16", "shifted Catalan, symbolic alpha, beta", SYM_RANGE)
def _e4_16(n):
    x, y = (A + 2) * Fraction(1, 2), (B + 2) * Fraction(1, 2)
    return [(_hdet(catalan, n, 1, (A, B)) * (A - B), _pairs([(1, n + 1, n)], x, y))]


@_register("4.17", "Motzkin, symbolic: sum U_j((alpha+1)/2) U_j((beta+1)/2)", SYM_RANGE)
def _e4_17(n):
    x, y = (A + 1) * Fraction(1, 2), (B + 1) * Fraction(1, 2)
    rhs = sum((chebyshev_u(j, x) * chebyshev_u(j, y) for j in range(n + 1)), _ZERO)
    return [(_hdet(motzkin_number, n, 0, (A, B)), rhs)]


@_register("4.18", "det(M+2M+M) = (n+1)(n+2)(2n+3)/6", INT_RANGE)
def _e4_18(n):
    lhs = _hdet(motzkin_number, n, 0, (1, 1))
    return [(lhs, (n + 1) * (n + 2) * (2 * n + 3) // 6), (lhs, sum((j + 1) ** 2 for j in range(n + 1)))]


@_register("4.19", "det(M-2M+M) = floor((n+2)/2)", INT_RANGE)
def _e4_19(n):
    return [(_hdet(motzkin_number, n, 0, (-1, -1)), (n + 2) // 2)]


@_register("4.20", "det(2M_{i+j}+M_{i+j+1}) = F_{2n+2}", INT_RANGE)
def _e4_20(n):
    return [(_hdet(motzkin_number, n, 0, (2,)), F(2 * n + 2))]


@_register("4.21", "det(4M+4M+M) = sum F_{2j+2}^2", INT_RANGE)
def _e4_21(n):
    return [(_hdet(motzkin_number, n, 0, (2, 2)), sum(F(2 * j + 2) ** 2 for j in range(n + 1)))]


@_register("4.22", "central binomials, symbolic, scaling 2^{n-1}", SYM_RANGE)
def _e4_22(n):
    x, y = (A + 2) * Fraction(1, 2), (B + 2) * Fraction(1, 2)
    num = _pairs([(1, n + 1, n), (1, n, n - 1), (-1, n + 1, n - 2), (1, n - 1, n - 2)], x, y)
    return [(_hdet(central_binomial, n, 0, (A, B)) * (A - B), 2 ** (n - 1) * num)]


@_register("4.23", "det(B+2B+B) / 2^{n-1} = -2 + sum L_{2j}^2", INT_RANGE)
def _e4_23(n):
    lhs = _hdet(central_binomial, n, 0, (1, 1))
    return [(lhs, 2 ** (n - 1) * (-2 + sum(L(2 * j) ** 2 for j in range(n + 1))))]


@_register("4.24", "half central binomials, symbolic, scaling 2^n", SYM_RANGE)
def _e4_24(n):
    x, y = (A + 2) * Fraction(1, 2), (B + 2) * Fraction(1, 2)
    num = _pairs([(1, n + 1, n), (1, n + 1, n - 1), (1, n, n - 1)], x, y)
    lhs = _hdet(lambda k: comb(2 * k + 2, k + 1), n, 0, (A, B))
    return [(lhs * (A - B), 2 ** n * num)]


@_register("4.25", "binom(n, floor(n/2)), symbolic, x=alpha/2", SYM_RANGE)
def _e4_25(n):
    x, y = A * Fraction(1, 2), B * Fraction(1, 2)
    num = _pairs([(1, n + 1, n), (1, n + 1, n - 1), (1, n, n - 1)], x, y)
    return [(_hdet(floor_binomial, n, 0, (A, B)) * (A - B), num)]


@_register("4.26", "det(b+2b+b), b_k = binom(k, floor(k/2)), three cases mod 3", INT_RANGE,
           notes=["printed case n = 2 (mod 3) is 2n+4; the determinant and the (2.5) sum give 2n+2 there"])
def _e4_26(n):
    rhs = {0: 2 * n + 1, 1: 2 * n + 3, 2: 2 * n + 4}[n % 3]
    return [(_hdet(floor_binomial, n, 0, (1, 1)), rhs)]


@_register("4.27", "det(b-2b+b) = floor((2n+3)/3)", INT_RANGE)
def _e4_27(n):
    return [(_hdet(floor_binomial, n, 0, (-1, -1)), (2 * n + 3) // 3)]


@_register("4.28", "det(2b+b) = 2n+1", INT_RANGE)
def _e4_28(n):
    return [(_hdet(floor_binomial, n, 0, (2,)), 2 * n + 1)]


@_register("4.29", "det(3b+b) = L_{2n+1}", INT_RANGE)
def _e4_29(n):
    return [(_hdet(floor_binomial, n, 0, (3,)), L(2 * n + 1))]


MATRIX_4_30_N5 = [[1, -1, -1, 2, 2], [-1, -1, 2, 2, -5], [-1, 2, 2, -5, -5],
                     [2, 2, -5, -5, 14], [2, -5, -5, 14, 14]]


@_register("4.30", "det(m+m), m_k = [k even](-1)^{k/2} C_{k/2}: (-1)^binom(n,2) F_{n+1}", INT_RANGE)
def _e4_30(n):
    lhs = _hdet(signed_catalan, n, 0, (1,))
    direct = det_bareiss(SquareMatrix([[(-1) ** ((i + j + 1) // 2) * catalan((i + j + 1) // 2)
                                        for j in range(n)] for i in range(n)]))
    out = [(lhs, (-1) ** comb(n, 2) * F(n + 1)), (direct, lhs)]
    if n == 5:
        out.append((det_bareiss(SquareMatrix(MATRIX_4_30_N5)), 8))
    return out


@_register("4.31", "det(m+2m+m) = (-1)^binom(n+1,2) sum (-1)^j F_{j+1}^2", INT_RANGE)
def _e4_31(n):
    rhs = (-1) ** comb(n + 1, 2) * sum((-1) ** j * F(j + 1) ** 2 for j in range(n + 1))
    return [(_hdet(signed_catalan, n, 0, (1, 1)), rhs)]


# -- q-analogues -------------------------------------------------------------------------

def _rs_inner(k, tt):
    return sum((Q ** (comb(j, 2) + comb(k - j, 2)) * q_binomial(k, j) * as_poly(tt) ** j
                for j in range(k + 1)), _ZERO)


@lru_cache(maxsize=None)
def rs_f(n, x, tt):
    """The closed form of f_n for the Rogers-Szego system."""
    return sum((q_binomial(n, k) * _rs_inner(k, tt) * as_poly(x) ** (n - k) for k in range(n + 1)), _ZERO)


def _rs_denominator(n, tt):
    return (-as_poly(tt)) ** comb(n, 2) * Q ** comb(n, 3) * _qfacts(n)


@_register("4.34", "Rogers-Szego: det(alpha r + r) ratio", range(1, 5))
def _e4_34(n):
    lhs = _hdet(rogers_szego, n, 0, (A,))
    return [(lhs, _rs_denominator(n, T) * rs_f(n, A, T))]


@_register("4.35", "Rogers-Szego: det(alpha beta r + (alpha+beta) r + r) ratio", range(1, 4),
           notes=["middle term t_{i+j+1}(t) read as r_{i+j+1}(t)"])
def _e4_35(n):
    lhs = _hdet(rogers_szego, n, 0, (A, B))
    rhs = sum((rs_f(j, A, T) * rs_f(j, B, T) * (-T) ** (n - j) * Q ** (comb(n, 2) - comb(j, 2))
               * q_pochhammer(Q ** (j + 1), n - j) for j in range(n + 1)), _ZERO)
    return [(lhs, _rs_denominator(n, T) * rhs)]


@lru_cache(maxsize=None)
def _r_at_minus_one(k):
    return sum(((-1) ** j * q_binomial(k, j) for j in range(k + 1)), _ZERO)


@_register("4.36", "Rogers-Szego at t=-1, symbolic alpha", range(1, 6))
def _e4_36(n):
    lhs = _hdet(_r_at_minus_one, n, 0, (A,))
    rhs = sum((q_binomial(n, 2 * k) * (-1) ** k * Q ** (k * k - k) * q_pochhammer(Q, k, Q ** 2)
               * A ** (n - 2 * k) for k in range(n // 2 + 1)), _ZERO)
    den = Q ** comb(n, 3) * _qfacts(n)
    # the t = -1 evaluation of the inner sum, checked on its own
    inner = [(_rs_inner(k, -1), (-1) ** (k // 2) * Q ** ((k * k - 2 * k) // 4) * q_pochhammer(Q, k // 2, Q ** 2)
              if k % 2 == 0 else _ZERO) for k in range(n + 1)]
    return [(lhs, den * rhs)] + inner


@_register("4.37", "Rogers-Szego at t=-1, alpha=1: ratio q^binom(n,2)", range(1, 6))
def _e4_37(n):
    lhs = _hdet(_r_at_minus_one, n, 0, (1,))
    return [(lhs, Q ** comb(n, 3) * _qfacts(n) * Q ** comb(n, 2))]


def _qp_f(n, x):
    return sum((q_binomial(n, k) * Q ** ((n - 1) * k) * as_poly(x) ** (n - k) for k in range(n + 1)), _ZERO)


@_register("4.38", "q^binom(n,2) moments, symbolic alpha, beta", range(1, 5))
def _e4_38(n):
    lhs = _hdet(lambda k: Q ** comb(k, 2), n, 0, (A, B))
    den = (-1) ** comb(n, 2) * Q ** (3 * comb(n, 3)) * _qfacts(n)
    rhs = sum(((-1) ** (n - j) * Q ** (3 * comb(n, 2) - 3 * comb(j, 2)) * q_pochhammer(Q ** (j + 1), n - j)
               * _qp_f(j, A) * _qp_f(j, B) for j in range(n + 1)), _ZERO)
    return [(lhs, den * rhs)]


def _qq(k):
    return q_pochhammer(Q, k, Q)


@_register("4.39", "q-Dyck, det(c_{i+j}+c_{i+j+1}) with c_k=(q;q)_k", range(1, 5),
           notes=["left side read as det(c_{i+j}+c_{i+j+1}), the alpha=1 case of (3.5); "
                  "the printed entries (q;q)_{floor((i+j+1)/2)} disagree already at n=1"])
def _e4_39(n):
    lhs = _hdet(_qq, n, 0, (1,))
    den = Q ** (n * (2 * n * n - 3 * n + 1) // 6) * _qfacts(n) ** 2
    rhs = sum((Q ** comb(k, 2) * _qq(k) * q_binomial(n, k) ** 2 for k in range(n + 1)), _ZERO)
    return [(lhs, den * rhs), (_hdet(_qq, n), den)]


@_register("4.40", "q-Dyck, det(c_{i+j+1}+c_{i+j+2}) with c_k=(q;q)_k", range(1, 5),
           notes=["left side read as det(c_{i+j+1}+c_{i+j+2}), the alpha=1 case of (3.6)"])
def _e4_40(n):
    lhs = _hdet(_qq, n, 1, (1,))
    den = Q ** (2 * comb(n + 1, 3)) * _qq(n) * _qfacts(n) ** 2
    rhs = sum((Q ** comb(k, 2) * _qq(k) * q_binomial(n + 1, k) * q_binomial(n, k) for k in range(n + 1)), _ZERO)
    return [(lhs, den * rhs), (_hdet(_qq, n, 1), den)]


def literal_4_39(n: int) -> tuple[Polynomial, Polynomial]:
    """The printed left side of (4.39) and its printed right side times the denominator."""
    lhs = det_bareiss(SquareMatrix([[_qq((i + j + 1) // 2) for j in range(n)] for i in range(n)]))
    den = Q ** (n * (2 * n * n - 3 * n + 1) // 6) * _qfacts(n) ** 2
    rhs = sum((Q ** comb(k, 2) * _qq(k) * q_binomial(n, k) ** 2 for k in range(n + 1)), _ZERO)
    return lhs, den * rhs


# -- section 7 examples ------------------------------------------------------------------------

@_register("7.3", "det(M+3M+3M+M) = (n+1)(n+2)^2(n+3)(2n+3)(2n+5)/180", range(1, 8))
def _e7_3(n):
    lhs = _hdet(motzkin_number, n, 0, (1, 1, 1))
    rhs = (n + 1) * (n + 2) ** 2 * (n + 3) * (2 * n + 3) * (2 * n + 5) // 180
    return [(lhs, rhs), (_hdet(catalan, n, 4), rhs)]


@_register("7.4", "det(-M+3M-3M+M) = [n even](-1)^{n/2}(n/2+1)^2", range(1, 8))
def _e7_4(n):
    rhs = (-1) ** (n // 2) * (n // 2 + 1) ** 2 if n % 2 == 0 else 0
    return [(_hdet(motzkin_number, n, 0, (-1, -1, -1)), rhs)]


@_register("7.5", "det(-M-M+M+M), cases n=2n0 and n=2n0-1", range(1, 8))
def _e7_5(n):
    if n % 2 == 0:
        n0 = n // 2
        rhs = (-1) ** n0 * (n0 + 1) ** 2
    else:
        n0 = (n + 1) // 2
        rhs = (-1) ** (n0 - 1) * comb(2 * n0 + 2, 3)
    return [(_hdet(motzkin_number, n, 0, (1, 1, -1)), rhs)]


@_register("7.6", "det(-C+3C-3C+C), three cases mod 3", range(1, 8))
def _e7_6(n):
    r = n % 3
    if r == 2:
        n0 = (n + 1) // 3
        rhs = (-1) ** n0 * n0 * (2 * n0 + 1)
    elif r == 0:
        n0 = n // 3
        rhs = (-1) ** n0 * (2 * n0 + 1) ** 2
    else:
        n0 = (n - 1) // 3
        rhs = (-1) ** n0 * (n0 + 1) * (2 * n0 + 1)
    return [(_hdet(catalan, n, 0, (-1, -1, -1)), rhs)]


@_register("7.7", "det(-C+3C-3C+C) shifted by one, three cases mod 3", range(1, 8))
def _e7_7(n):
    r = n % 3
    if r == 2:
        n0 = (n + 1) // 3
        rhs = (-1) ** (n0 - 1) * n0 * (2 * n0 + 1)
    elif r == 0:
        n0 = n // 3
        rhs = (-1) ** n0 * (n0 + 1) * (2 * n0 + 1)
    else:
        n0 = (n - 1) // 3
        rhs = (-1) ** n0 * (2 * n0 + 2) ** 2
    return [(_hdet(catalan, n, 1, (-1, -1, -1)), rhs)]


NAMED_IDS = tuple(REGISTRY)


def run_named(ident: str, n_range=None) -> VerificationReport:
    ident = ident.strip("()")
    if ident not in REGISTRY:
        raise KeyError(f"unknown named identity {ident!r}")
    entry = REGISTRY[ident]
    ns = list(entry.n_default if n_range is None else n_range)
    rep = VerificationReport(f"({ident})", {"description": entry.description}, ns, notes=list(entry.notes))
    with timed(rep):
        for n in ns:
            for idx, (lhs, rhs) in enumerate(entry.checks(n)):
                if as_poly(lhs) != as_poly(rhs):
                    rep.add_witness(n, as_poly(lhs), as_poly(rhs), check=idx)
        if ident == "4.30" and 5 in ns:
            mat = [[(-1) ** ((i + j + 1) // 2) * catalan((i + j + 1) // 2) for j in range(5)] for i in range(5)]
            rep.params["matrix_n5"] = mat
            if mat != MATRIX_4_30_N5:
                rep.add_witness(5, str(mat), str(MATRIX_4_30_N5), check="matrix")
        if ident == "4.39":
            lit_l, lit_r = literal_4_39(1)
            if lit_l != lit_r:
                rep.notes.append(f"printed left side at n=1 gives {lit_l}, right side {lit_r}")
    return rep.finish()


def named_suite(filter=None) -> list[VerificationReport]:
    """Run named identities; ``filter`` is None, an id, an id prefix, a list of ids, or a predicate."""
    if filter is None:
        ids = NAMED_IDS
    elif callable(filter):
        ids = [i for i in NAMED_IDS if filter(i)]
    elif isinstance(filter, str):
        f = filter.strip("()")
        ids = [i for i in NAMED_IDS if i == f or i.startswith(f + ".") or (f.endswith(".") and i.startswith(f))]
        if not ids:
            ids = [i for i in NAMED_IDS if i.startswith(f)]
    else:
        wanted = {str(x).strip("()") for x in filter}
        ids = [i for i in NAMED_IDS if i in wanted]
    return [run_named(i) for i in ids]

"""Hankel matrices of moment combinations, exact determinants, and the
transfer-matrix factorization checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from .charpoly import f_poly
from .moments import build_table
from .ring import Polynomial, as_poly, const, exact_div, var
from .weights import DYCK, MOTZKIN, WeightSystem, weight_at

_ZERO = const(0)
_ONE = const(1)


def _p(x) -> Polynomial:
    return var(x) if isinstance(x, str) else as_poly(x)


def elementary_symmetric(roots) -> list[Polynomial]:
    """``[e_0, e_1, ..., e_d]`` of ``roots``."""
    e = [_ONE]
    for r in roots:
        r = _p(r)
        e = [(e[k] if k < len(e) else _ZERO) + (r * e[k - 1] if k >= 1 else _ZERO)
             for k in range(len(e) + 1)]
    return e


@dataclass(frozen=True)
class HankelSpec:
    shift: int = 0
    roots: tuple = ()

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be non-negative")
        object.__setattr__(self, "roots", tuple(_p(r) for r in self.roots))

    @property
    def d(self) -> int:
        return len(self.roots)

    def coefficients(self) -> list[Polynomial]:
        """Coefficient of ``m_{i+j+shift+k}`` for ``k = 0..d``."""
        e = elementary_symmetric(self.roots)
        return [e[self.d - k] for k in range(self.d + 1)]


class SquareMatrix:
    """Dense square matrix of polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[_p(x) for x in row] for row in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        n = self.n
        if other.n != n:
            raise ValueError("order mismatch")
        cols = list(zip(*other.rows))
        return SquareMatrix([[reduce(lambda a, b: a + b, (x * y for x, y in zip(r, c)), _ZERO)
                              for c in cols] for r in self.rows])

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> SquareMatrix:
        c = _p(c)
        return SquareMatrix([[c * a for a in r] for r in self.rows])

    def transpose(self) -> SquareMatrix:
        return SquareMatrix([list(c) for c in zip(*self.rows)])

    def tolist(self) -> list[list[Polynomial]]:
        return [list(r) for r in self.rows]

    @classmethod
    def identity(cls, n: int) -> SquareMatrix:
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    def __repr__(self):
        return f"SquareMatrix({[[str(x) for x in r] for r in self.rows]})"


def build_hankel(seq, spec: HankelSpec, n: int) -> SquareMatrix:
    if n < 1:
        raise ValueError("order must be at least 1")
    need = 2 * n - 1 + spec.shift + spec.d
    if len(seq) < need:
        raise ValueError(f"sequence too short: need {need} terms, got {len(seq)}")
    seq = [_p(x) for x in seq]
    coeffs = spec.coefficients()
    diag = []
    for s in range(2 * n - 1):
        acc = _ZERO
        for k, c in enumerate(coeffs):
            acc = acc + c * seq[s + spec.shift + k]
        diag.append(acc)
    return SquareMatrix([[diag[i + j] for j in range(n)] for i in range(n)])


def det_bareiss(m: SquareMatrix) -> Polynomial:
    """Fraction-free elimination; every interior division is exact."""
    n = m.n
    a = [list(Polynomial.unify(r)) for r in m.rows]
    if n == 0:
        return _ONE
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = exact_div(num, prev) if k else num
        prev = pivot
    d = a[n - 1][n - 1]
    return (-d if sign < 0 else d).trim()


def det_cofactor(m: SquareMatrix) -> Polynomial:
    """Laplace expansion along the first row, minors memoized by column set."""
    n = m.n
    if n == 0:
        return _ONE
    rows = m.rows
    # minors of the bottom rows, keyed by the set of columns used
    memo = {(): _ONE}
    for depth in range(1, n + 1):
        r = n - depth
        new = {}
        for cols in combinations(range(n), depth):
            acc = _ZERO
            for pos, c in enumerate(cols):
                x = rows[r][c]
                if x.is_zero():
                    continue
                rest = cols[:pos] + cols[pos + 1:]
                term = x * memo[rest]
                acc = acc - term if pos % 2 else acc + term
            new[cols] = acc
        memo = new
    return memo[tuple(range(n))].trim()


def determinant(m: SquareMatrix, method: str = "bareiss") -> Polynomial:
    if method == "bareiss":
        return det_bareiss(m)
    if method in ("cofactor", "minors"):
        return det_cofactor(m)
    raise ValueError(f"unknown determinant method {method!r}")


# -- closed-form products -------------------------------------------------

def hankel_product_formula(ws: WeightSystem, variant: str, n: int) -> Polynomial:
    if n < 1:
        raise ValueError("n must be at least 1")
    if variant == "base":
        if ws.mode != MOTZKIN:
            raise ValueError("base variant needs a Motzkin weight system")
        acc = _ONE
        for i in range(n - 1):
            acc = acc * weight_at(ws, i)[1] ** (n - i - 1)
        return acc
    if variant not in ("dyck_even", "dyck_odd"):
        raise ValueError(f"unknown variant {variant!r}")
    if ws.mode != DYCK:
        raise ValueError(f"{variant} needs a Dyck weight system")
    T = lambda i: weight_at(ws, i)  # noqa: E731
    acc = _ONE
    for i in range(n):
        if variant == "dyck_even":
            acc = acc * (T(2 * i) * T(2 * i + 1)) ** (n - i - 1)
        else:
            acc = acc * T(0) * (T(2 * i + 1) * T(2 * i + 2)) ** (n - i - 1)
    return acc


# -- section-5 transfer matrices -------------------------------------------

def path_matrix(ws: WeightSystem, n: int, row_shift: int = 0) -> SquareMatrix:
    """``(m(i + row_shift, j))_{0 <= i, j < n}``."""
    tbl = build_table(ws, n - 1 + row_shift)
    return SquareMatrix([[tbl.entry(i + row_shift, j) for j in range(n)] for i in range(n)])


def diag_t(ws: WeightSystem, n: int) -> SquareMatrix:
    d = []
    acc = _ONE
    for i in range(n):
        d.append(acc)
        acc = acc * weight_at(ws, i)[1]
    return SquareMatrix([[d[i] if i == j else _ZERO for j in range(n)] for i in range(n)])


def tridiagonal(ws: WeightSystem, n: int, alpha=None) -> SquareMatrix:
    """``R_n`` (``alpha is None``) or ``G_n(alpha) = alpha I + R_n``."""
    w = [weight_at(ws, i) for i in range(n)]
    a = _ZERO if alpha is None else _p(alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(a + w[i][0])
            elif j == i + 1:
                row.append(_ONE)
            elif j == i - 1:
                row.append(w[j][1])
            else:
                row.append(_ZERO)
        rows.append(row)
    return SquareMatrix(rows)


def corner(n: int) -> SquareMatrix:
    return SquareMatrix([[_ONE if i == j == n - 1 else _ZERO for j in range(n)] for i in range(n)])


@dataclass
class FactorizationReport:
    n: int
    passed: bool
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"n": self.n, "passed": self.passed, "failures": self.failures}


def _compare(name, lhs: SquareMatrix, rhs: SquareMatrix, failures: list):
    for i in range(lhs.n):
        for j in range(lhs.n):
            if lhs[i, j] != rhs[i, j]:
                failures.append({"identity": name, "entry": [i, j],
                                 "lhs": str(lhs[i, j]), "rhs": str(rhs[i, j])})


def factorization_check(ws: WeightSystem, n: int, alpha="alpha", beta="beta") -> FactorizationReport:
    if ws.mode != MOTZKIN:
        raise ValueError("factorization_check needs a Motzkin weight system")
    if n < 1:
        raise ValueError("n must be at least 1")
    A = path_matrix(ws, n)
    At = A.transpose()
    D = diag_t(ws, n)
    R = tridiagonal(ws, n)
    E = corner(n)
    t_last = weight_at(ws, n - 1)[1]
    failures: list = []

    _compare("(5.2)", path_matrix(ws, n, 1), A @ R, failures)
    tbl = build_table(ws, 2 * n - 2)
    hank = SquareMatrix([[tbl.entry(i + j, 0) for j in range(n)] for i in range(n)])
    _compare("(5.3)", hank, A @ D @ At, failures)
    _compare("(5.4)", path_matrix(ws, n, 2), A @ (R @ R + E.scale(t_last)), failures)

    tbl2 = build_table(ws, 2 * n)
    a, b = _p(alpha), _p(beta)
    comb = SquareMatrix([[a * b * tbl2.entry(i + j, 0) + (a + b) * tbl2.entry(i + j + 1, 0)
                          + tbl2.entry(i + j + 2, 0) for j in range(n)] for i in range(n)])
    Ga, Gb = tridiagonal(ws, n, a), tridiagonal(ws, n, b)
    H = Ga @ Gb + E.scale(t_last)
    _compare("(5.5)", comb, A @ H @ D @ At, failures)

    # det H_n = f_n(a) f_n(b) + t_{n-1} det H_{n-1}
    prev = _ONE
    for k in range(1, n + 1):
        Gak, Gbk = tridiagonal(ws, k, a), tridiagonal(ws, k, b)
        Hk = Gak @ Gbk + corner(k).scale(weight_at(ws, k - 1)[1])
        dk = det_bareiss(Hk)
        expect = f_poly(ws, k, a) * f_poly(ws, k, b) + weight_at(ws, k - 1)[1] * prev
        if dk != expect:
            failures.append({"identity": "H-recursion", "entry": [k, k],
                             "lhs": str(dk), "rhs": str(expect)})
        if det_bareiss(Gak) != f_poly(ws, k, a):
            failures.append({"identity": "(5.1)", "entry": [k, k],
                             "lhs": str(det_bareiss(Gak)), "rhs": str(f_poly(ws, k, a))})
        prev = dk
    return FactorizationReport(n, not failures, failures)

"""Exact sparse multivariate polynomials with integer coefficients.

A polynomial is stored as a tuple of generator names (sorted, so the
monomial order is lexicographic on names) and a dict from packed exponent
vectors to nonzero coefficients.  An exponent vector ``(e_0, ..., e_{k-1})``
is packed into one Python int with ``e_0`` in the most significant field, so
monomial multiplication is integer addition and integer comparison is the lex
order on exponent tuples.

Binary operations between polynomials over different generator sets embed
both operands into the union of the generators first.

Coefficients are Python ints.  Substituting rational values produces
``Fraction`` coefficients; everything keeps working over the rationals in
that case, and ``Fraction`` values with denominator 1 are stored as ints.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "BindingError",
    "ContextError",
    "DivisibilityError",
    "Polynomial",
    "coefficient_of",
    "eval_rational",
    "exact_div",
    "parse",
    "poly_add",
    "poly_mul",
    "substitute",
    "var",
    "const",
]

FIELD_BITS = 32
_FIELD_MASK = (1 << FIELD_BITS) - 1
_GUARD_BIT = 1 << (FIELD_BITS - 1)

Coeff = Union[int, Fraction]


class ContextError(TypeError):
    """Operand is not a polynomial or coercible scalar."""


class DivisibilityError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


class BindingError(KeyError):
    """Raised when evaluation leaves an indeterminate unbound."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _guard_mask(k: int) -> int:
    g = 0
    for i in range(k):
        g |= _GUARD_BIT << (FIELD_BITS * i)
    return g


def _pack(exps: Iterable[int]) -> int:
    m = 0
    for e in exps:
        if e < 0 or e >= _GUARD_BIT:
            raise OverflowError(f"exponent {e} out of range")
        m = (m << FIELD_BITS) | e
    return m


def _unpack(m: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        out[i] = m & _FIELD_MASK
        m >>= FIELD_BITS
    return tuple(out)


class Polynomial:
    """Immutable sparse polynomial over named indeterminates."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: tuple[str, ...] = (), terms: Mapping[int, Coeff] | None = None):
        self.gens = tuple(gens)
        self.terms: dict[int, Coeff] = {} if terms is None else dict(terms)
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, gens: tuple[str, ...], terms: dict[int, Coeff]) -> Polynomial:
        p = cls.__new__(cls)
        p.gens = gens
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Coeff) -> Polynomial:
        c = _norm(c)
        return cls._raw((), {0: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        return cls._raw((name,), {1: 1})

    @classmethod
    def from_dict(cls, gens: Iterable[str], terms: Mapping[tuple[int, ...], Coeff]) -> Polynomial:
        """Build from ``{exponent_tuple: coeff}`` over ``gens`` (any order)."""
        gens = tuple(gens)
        order = sorted(range(len(gens)), key=lambda i: gens[i])
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        sgens = tuple(gens[i] for i in order)
        out: dict[int, Coeff] = {}
        for exps, c in terms.items():
            if len(exps) != len(gens):
                raise ValueError("exponent tuple length does not match generators")
            m = _pack(exps[i] for i in order)
            out[m] = out.get(m, 0) + c
        return cls._raw(sgens, {m: _norm(c) for m, c in out.items() if c})

    # -- context handling ---------------------------------------------
    def embed(self, gens: tuple[str, ...]) -> Polynomial:
        """Re-express over a sorted superset ``gens`` of ``self.gens``."""
        if gens == self.gens:
            return self
        k = len(self.gens)
        pos = {g: i for i, g in enumerate(gens)}
        try:
            shifts = [FIELD_BITS * (len(gens) - 1 - pos[g]) for g in self.gens]
        except KeyError as exc:
            raise ContextError(f"{exc.args[0]!r} missing from target context") from None
        out = {}
        for m, c in self.terms.items():
            e = _unpack(m, k)
            nm = 0
            for ei, sh in zip(e, shifts):
                nm |= ei << sh
            out[nm] = c
        return Polynomial._raw(gens, out)

    def trim(self) -> Polynomial:
        """Drop generators that do not occur."""
        k = len(self.gens)
        used = 0
        for m in self.terms:
            used |= m
        keep = [i for i in range(k) if (used >> (FIELD_BITS * (k - 1 - i))) & _FIELD_MASK]
        if len(keep) == k:
            return self
        gens = tuple(self.gens[i] for i in keep)
        out = {}
        for m, c in self.terms.items():
            e = _unpack(m, k)
            out[_pack(e[i] for i in keep)] = c
        return Polynomial._raw(gens, out)

    @staticmethod
    def common(polys: Iterable[Polynomial]) -> tuple[str, ...]:
        names: set[str] = set()
        for p in polys:
            names.update(p.gens)
        return tuple(sorted(names))

    @staticmethod
    def unify(polys: Iterable[Polynomial]) -> list[Polynomial]:
        polys = list(polys)
        gens = Polynomial.common(polys)
        return [p.embed(gens) for p in polys]

    def _pair(self, other) -> tuple[Polynomial, Polynomial]:
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.constant(other)
            else:
                raise ContextError(f"cannot combine Polynomial with {type(other).__name__}")
        if self.gens == other.gens:
            return self, other
        gens = tuple(sorted(set(self.gens) | set(other.gens)))
        return self.embed(gens), other.embed(gens)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> Polynomial:
        try:
            a, b = self._pair(other)
        except ContextError:
            return NotImplemented
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out = dict(a.terms)
        for m, c in b.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial._raw(a.gens, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.gens, {m: -c for m, c in self.terms.items()})

    def __pos__(self) -> Polynomial:
        return self

    def __sub__(self, other) -> Polynomial:
        try:
            a, b = self._pair(other)
        except ContextError:
            return NotImplemented
        out = dict(a.terms)
        for m, c in b.terms.items():
            v = out.get(m, 0) - c
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial._raw(a.gens, out)

    def __rsub__(self, other) -> Polynomial:
        return (-self).__add__(other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return Polynomial._raw(self.gens, {})
            return Polynomial._raw(self.gens, {m: _norm(c * other) for m, c in self.terms.items()})
        try:
            a, b = self._pair(other)
        except ContextError:
            return NotImplemented
        return Polynomial._raw(a.gens, _mul_terms(a.terms, b.terms, len(a.gens)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial._raw(self.gens, {0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other) -> Polynomial:
        return exact_div(self, other)

    def __floordiv__(self, other) -> Polynomial:
        return exact_div(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._pair(other)
        return a.terms == b.terms

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self) -> int:
        if self._hash is None:
            t = self.trim()
            self._hash = hash((t.gens, frozenset(t.terms.items())))
        return self._hash

    # -- inspection ---------------------------------------------------
    def items(self) -> list[tuple[dict[str, int], Coeff]]:
        """Terms as ``({name: exponent}, coeff)`` in descending lex order."""
        k = len(self.gens)
        out = []
        for m in sorted(self.terms, reverse=True):
            e = _unpack(m, k)
            out.append(({g: x for g, x in zip(self.gens, e) if x}, self.terms[m]))
        return out

    def degree(self, name: str) -> int:
        if name not in self.gens:
            return 0 if self.terms else -1
        i = self.gens.index(name)
        sh = FIELD_BITS * (len(self.gens) - 1 - i)
        return max(((m >> sh) & _FIELD_MASK for m in self.terms), default=-1)

    def variables(self) -> tuple[str, ...]:
        return self.trim().gens

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


def _mul_terms(ta: dict[int, Coeff], tb: dict[int, Coeff], k: int) -> dict[int, Coeff]:
    if not ta or not tb:
        return {}
    if len(ta) < len(tb):
        ta, tb = tb, ta
    out: dict[int, Coeff] = {}
    get = out.get
    items_b = list(tb.items())
    for ma, ca in ta.items():
        for mb, cb in items_b:
            m = ma + mb
            out[m] = get(m, 0) + ca * cb
    guard = _guard_mask(k)
    res = {}
    for m, c in out.items():
        if c:
            if m & guard:
                raise OverflowError("exponent overflow in polynomial product")
            res[m] = _norm(c) if type(c) is Fraction else c
    return res


def var(name: str) -> Polynomial:
    """The polynomial consisting of one indeterminate."""
    if not _IDENT.fullmatch(name):
        raise ValueError(f"invalid indeterminate name {name!r}")
    return Polynomial.variable(name)


def const(c: Coeff) -> Polynomial:
    return Polynomial.constant(c)


def as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    if isinstance(x, str):
        return parse(x)
    raise ContextError(f"cannot interpret {type(x).__name__} as a polynomial")


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return as_poly(a) + as_poly(b)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return as_poly(a) * as_poly(b)


def _coeff_div(c: Coeff, d: Coeff) -> Coeff:
    # coefficients live in Q, so only monomial divisibility can fail
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        if not r:
            return q
    return _norm(Fraction(c) / d)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``, raising ``DivisibilityError`` if ``b`` does not divide ``a``.

    Runs the lex-leading-term division with a max-heap over the remainder,
    so the cost is about ``len(quotient) * len(b) * log``.
    """
    a, b = as_poly(a)._pair(as_poly(b))
    if not b.terms:
        raise ZeroDivisionError("polynomial division by zero")
    k = len(a.gens)
    tb = b.terms
    lb = max(tb)
    cb = tb[lb]
    if len(tb) == 1:
        out = {}
        guard = _guard_mask(k)
        for m, c in a.terms.items():
            if ((m | guard) - lb) & guard != guard:
                raise DivisibilityError("monomial not divisible by divisor")
            out[m - lb] = _coeff_div(c, cb)
        return Polynomial._raw(a.gens, out)
    guard = _guard_mask(k)
    rest = [(m, c) for m, c in tb.items() if m != lb]
    rem = dict(a.terms)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    q: dict[int, Coeff] = {}
    while heap:
        m = -pop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        if ((m | guard) - lb) & guard != guard:
            raise DivisibilityError("leading monomial of remainder not divisible")
        qc = _coeff_div(c, cb)
        d = m - lb
        q[d] = qc
        for mb, c2 in rest:
            mm = d + mb
            old = rem.get(mm)
            if old is None:
                rem[mm] = -qc * c2
                push(heap, -mm)
            else:
                v = old - qc * c2
                if v:
                    rem[mm] = v
                else:
                    del rem[mm]
    return Polynomial._raw(a.gens, q)


def substitute(p: Polynomial, bindings: Mapping[str, object]) -> Polynomial:
    """Simultaneously replace indeterminates by polynomials (or numbers)."""
    p = as_poly(p)
    active = {g: as_poly(v) for g, v in bindings.items() if g in p.gens}
    if not active:
        return p
    k = len(p.gens)
    kept = tuple(g for g in p.gens if g not in active)
    keep_idx = [i for i, g in enumerate(p.gens) if g not in active]
    sub_idx = [(i, active[g]) for i, g in enumerate(p.gens) if g in active]
    gens = Polynomial.common([Polynomial._raw(kept, {})] + [v for _, v in sub_idx])
    # power caches per substituted indeterminate
    caches: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1).embed(gens), 1: v.embed(gens)} for _, v in sub_idx]

    def power(j: int, e: int) -> Polynomial:
        cache = caches[j]
        if e not in cache:
            cache[e] = power(j, e // 2) * power(j, e - e // 2)
        return cache[e]

    # group terms by the substituted part of the monomial
    groups: dict[tuple[int, ...], dict[tuple[int, ...], Coeff]] = {}
    for m, c in p.terms.items():
        e = _unpack(m, k)
        key = tuple(e[i] for i, _ in sub_idx)
        rest = tuple(e[i] for i in keep_idx)
        groups.setdefault(key, {})[rest] = c
    total = Polynomial._raw(gens, {})
    for key, rest_terms in groups.items():
        factor = Polynomial._raw(gens, {0: 1})
        for j, e in enumerate(key):
            if e:
                factor = factor * power(j, e)
        base = Polynomial.from_dict(kept, rest_terms).embed(gens)
        total = total + base * factor
    return total


def eval_rational(p: Polynomial, bindings: Mapping[str, object]) -> Fraction:
    """Exact value of ``p`` with every occurring indeterminate bound to a rational."""
    p = as_poly(p)
    k = len(p.gens)
    vals = []
    for g in p.gens:
        if g in bindings:
            vals.append(Fraction(bindings[g]))
        elif p.degree(g) > 0:
            raise BindingError(g)
        else:
            vals.append(Fraction(0))
    total = Fraction(0)
    for m, c in p.terms.items():
        e = _unpack(m, k)
        term = Fraction(c)
        for v, x in zip(vals, e):
            if x:
                term *= v**x
        total += term
    return total


def coefficient_of(p: Polynomial, name: str, k: int) -> Polynomial:
    """Coefficient of ``name**k`` in ``p``, as a polynomial in the other indeterminates."""
    p = as_poly(p)
    if name not in p.gens:
        return p if k == 0 else Polynomial.constant(0)
    i = p.gens.index(name)
    sh = FIELD_BITS * (len(p.gens) - 1 - i)
    out = {}
    for m, c in p.terms.items():
        if (m >> sh) & _FIELD_MASK == k:
            out[m - (k << sh)] = c
    return Polynomial._raw(p.gens, out).trim()


def coefficients_in(p: Polynomial, name: str) -> dict[int, Polynomial]:
    """All coefficients of ``p`` viewed as a polynomial in ``name``."""
    return {k: coefficient_of(p, name, k) for k in range(p.degree(name) + 1) if coefficient_of(p, name, k)}


# -- text form -----------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _fmt_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def to_text(p: Polynomial) -> str:
    """Canonical text: terms in descending lex order, ``c*x^e*y`` style."""
    if not p.terms:
        return "0"
    parts = []
    for expo, c in p.items():
        mono = "*".join(g if e == 1 else f"{g}^{e}" for g, e in expo.items())
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        parts.append(("-" if neg else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, ident, op = mt.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or not d:
                    raise ValueError("division only by nonzero constants")
                acc = acc * (Fraction(1) / Fraction(d.constant_value()))
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return Polynomial.constant(int(val))
        if kind == "id":
            return Polynomial.variable(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            k2, v2 = self.take()
            if v2 != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse(text: str) -> Polynomial:
    """Parse the text grammar produced by :func:`to_text` (parentheses allowed)."""
    p = _Parser(text)
    if not p.toks:
        raise ValueError("empty polynomial text")
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return out.trim()

"""Exact sparse multivariate polynomials over the rationals.

Monomials are exponent tuples of fixed length; coefficients are
:class:`fractions.Fraction`. All arithmetic is positional, variable names
only matter for parsing and printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, ExponentOverflow, ParseError

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


# ---------- monomials ----------

def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    w = tuple(a + b for a, b in zip(u, v))
    if w and max(w) > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
    return w


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def mono_divides(v: Monomial, u: Monomial) -> bool:
    return all(a <= b for a, b in zip(v, u))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_degree(u: Monomial) -> int:
    return sum(u)


# ---------- orders ----------

def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``lex``, ``grevlex`` or ``elim`` (block elimination).

    ``elim`` with ``block=k`` makes the first ``k`` variables dominate the
    rest; inside each block grevlex is used.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a positive block size")

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != len(v):
            raise ArityMismatch(f"cannot compare monomials of arity {len(u)} and {len(v)}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip().lower()
    m = re.fullmatch(r"elim(?:ination)?\((\d+)\)", name)
    if m:
        return elimination(int(m.group(1)))
    return MonomialOrder(name)


# ---------- polynomials ----------

class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``.

    Zero coefficients are never stored, so two polynomials are equal iff
    their term dictionaries are equal.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ArityMismatch(f"monomial {m} does not have arity {nvars}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if m and max(m) > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Polynomial:
        # trusted constructor: terms already clean and owned by the result
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> Polynomial:
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> Polynomial:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    # -- inspection --
    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.nvars
        return len({sum(a * b for a, b in zip(m, w)) for m in self._terms}) <= 1

    def support(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Fraction, Monomial]]:
        """Terms as ``(coefficient, monomial)`` pairs, descending in ``order``."""
        key = order.key
        return [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    # -- arithmetic --
    def _check(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise ArityMismatch(f"arity {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, m: Monomial, c=1) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars, {mono_mul(k, m): v * c for k, v in self._terms.items()}
        )

    def scale(self, c) -> Polynomial:
        return self.mul_term((0,) * self.nvars, c)

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def exact_divide(self, divisor: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        """Quotient of an exact division; raises ValueError if not exact."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lm = divisor.leading_monomial(order)
        lc = divisor._terms[lm]
        rest = dict(self._terms)
        quot: dict = {}
        while rest:
            m = max(rest, key=order.key)
            if not mono_divides(lm, m):
                raise ValueError("division is not exact")
            qm = mono_div(m, lm)
            qc = rest[m] / lc
            quot[qm] = qc
            for dm, dc in divisor._terms.items():
                k = mono_mul(dm, qm)
                v = rest.get(k, 0) - qc * dc
                if v:
                    rest[k] = v
                else:
                    rest.pop(k, None)
        return Polynomial._raw(self.nvars, quot)

    # -- variable bookkeeping --
    def extend(self, before: int = 0, after: int = 0) -> Polynomial:
        """Embed into a ring with extra variables prepended/appended."""
        pre, post = (0,) * before, (0,) * after
        return Polynomial._raw(
            self.nvars + before + after,
            {pre + m + post: c for m, c in self._terms.items()},
        )

    def drop(self, count: int) -> Polynomial:
        """Drop the first ``count`` variables; they must not occur."""
        out = {}
        for m, c in self._terms.items():
            if any(m[:count]):
                raise ValueError("polynomial involves a dropped variable")
            out[m[count:]] = c
        return Polynomial._raw(self.nvars - count, out)

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Ring map sending variable i to ``images[i]``."""
        if len(images) != self.nvars:
            raise ArityMismatch("one image per variable required")
        target = images[0].nvars if images else 0
        out = Polynomial.zero(target)
        for m, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for img, e in zip(images, m):
                if e:
                    term = term * img**e
            out = out + term
        return out

    # -- protocol --
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"Polynomial({format_polynomial(self, names)!r})"

    def canonical(self) -> Polynomial:
        return Polynomial(self.nvars, self._terms)


# ---------- text grammar ----------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.index = {n: i for i, n in enumerate(names)}
        self.n = len(names)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            if op == "/":
                tok = self.take()
                if not tok.isdigit() or int(tok) == 0:
                    raise ParseError(f"only division by a nonzero integer is allowed in {self.text!r}")
                acc = acc.scale(Fraction(1, int(tok)))
            else:
                acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        tok = self.take()
        if tok == "(":
            base = self.expr()
            if self.take() != ")":
                raise ParseError(f"unbalanced parenthesis in {self.text!r}")
        elif tok.isdigit():
            base = Polynomial.constant(self.n, int(tok))
        elif tok in self.index:
            base = Polynomial.variable(self.n, self.index[tok])
        elif tok[0].isalpha() or tok[0] == "_":
            raise ParseError(f"unknown variable {tok!r} in {self.text!r}")
        else:
            raise ParseError(f"unexpected token {tok!r} in {self.text!r}")
        if self.peek() in ("^", "**"):
            self.take()
            e = self.take()
            if not e.isdigit():
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            base = base ** int(e)
        return base


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse ``text`` such as ``3/2*x^2*y - y1`` over the variables ``names``."""
    return _Parser(text, names).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, names: Sequence[str], order: MonomialOrder = GREVLEX) -> str:
    if len(names) != p.nvars:
        raise ArityMismatch("one name per variable required")
    if p.is_zero():
        return "0"
    out = []
    for c, m in p.terms(order):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not any(m):
            body = _format_coeff(a)
        elif a == 1:
            body = format_monomial(m, names)
        else:
            body = f"{_format_coeff(a)}*{format_monomial(m, names)}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def compare(u: Monomial, v: Monomial, order: MonomialOrder) -> int:
    return order.compare(tuple(u), tuple(v))


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.variable(nvars, i) for i in range(nvars)]


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    """All exponent tuples of the given total degree."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest

"""Multivariate Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is an element of ``Z[t1^±1, ..., tmu^±1]`` stored as a
map from integer exponent vectors to nonzero integers.  Values are immutable.

>>> t = LaurentPoly.var(1, 1)
>>> print((1 - t) * (1 + t))
-t1^2 + 1
>>> print(normalize_unit(parse_laurent("t^-1 - 3")))
-3*t1 + 1
"""

import re
from types import MappingProxyType

from .errors import MuMismatchError, ParseError


class LaurentPoly:
    __slots__ = ("mu", "_terms", "_hash")

    def __init__(self, mu, terms=None):
        if mu < 1:
            raise ValueError("mu must be positive")
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != mu:
                raise MuMismatchError(f"monomial {mono} does not have {mu} exponents")
            c = int(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.mu = mu
        self._terms = clean
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c, mu):
        return cls(mu, {(0,) * mu: c})

    @classmethod
    def monomial(cls, exponents, coeff=1):
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @classmethod
    def var(cls, i, mu):
        """The variable ``t_i`` (1-based) of ``Lambda_mu``."""
        if not 1 <= i <= mu:
            raise ValueError(f"variable index {i} outside 1..{mu}")
        e = [0] * mu
        e[i - 1] = 1
        return cls(mu, {tuple(e): 1})

    @classmethod
    def _raw(cls, mu, terms):
        obj = cls.__new__(cls)
        obj.mu = mu
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection ---------------------------------------------------------
    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        """True for ``±t^k``, the units of the Laurent ring."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return abs(c) == 1

    def constant_value(self):
        if not self._terms:
            return 0
        if list(self._terms) != [(0,) * self.mu]:
            raise ValueError(f"{self} is not a constant")
        return self._terms[(0,) * self.mu]

    def sorted_terms(self, reverse=True):
        return sorted(self._terms.items(), reverse=reverse)

    def leading_term(self):
        mono = max(self._terms)
        return mono, self._terms[mono]

    def min_exponents(self):
        return tuple(min(m[i] for m in self._terms) for i in range(self.mu))

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.mu != self.mu:
                raise MuMismatchError(f"cannot combine polynomials in {self.mu} and {other.mu} variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.mu)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(self.mu, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.mu, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly._raw(self.mu, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise ValueError(f"{self} is not a unit; negative powers undefined")
            (m, c), = self._terms.items()
            return LaurentPoly._raw(self.mu, {tuple(e * k for e in m): c ** (-k)})
        result = LaurentPoly.constant(1, self.mu)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other):
        """Quotient ``self / other``, raising ``ArithmeticError`` unless it lies in the ring.

        Lex order is a group order on exponent vectors, so the usual
        leading-term division works for Laurent polynomials directly.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return self
        lm_b, lc_b = other.leading_term()
        floor = tuple(a - b for a, b in zip(min(self._terms), min(other._terms)))
        quotient = {}
        rem = self
        while not rem.is_zero():
            lm_r, lc_r = rem.leading_term()
            q_mono = tuple(a - b for a, b in zip(lm_r, lm_b))
            if lc_r % lc_b or q_mono < floor:
                raise ArithmeticError(f"{other} does not divide {self}")
            q_coeff = lc_r // lc_b
            quotient[q_mono] = q_coeff
            rem = rem - other * LaurentPoly._raw(self.mu, {q_mono: q_coeff})
        return LaurentPoly._raw(self.mu, quotient)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.mu)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.mu == other.mu and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mu, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self.mu}, {format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def lp_arith(op, a, b):
    """Apply ``op`` in {"add", "sub", "mul"} to two Laurent polynomials."""
    if a.mu != b.mu:
        raise MuMismatchError(f"mu mismatch: {a.mu} != {b.mu}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(a):
    """The automorphism ``t_i -> t_i^-1``."""
    return LaurentPoly._raw(a.mu, {tuple(-e for e in m): c for m, c in a.terms.items()})


def reduce_to_single_variable(a):
    """Image under ``t_i -> t`` for every ``i``; the result has ``mu == 1``."""
    out = {}
    for m, c in a.terms.items():
        k = (sum(m),)
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return LaurentPoly._raw(1, out)


def normalize_unit(a):
    """Canonical associate: min exponent 0 in each variable, lex-least coefficient positive."""
    if a.is_zero():
        return a
    low = a.min_exponents()
    shifted = {tuple(e - l for e, l in zip(m, low)): c for m, c in a.terms.items()}
    sign = 1 if shifted[min(shifted)] > 0 else -1
    return LaurentPoly._raw(a.mu, {m: sign * c for m, c in shifted.items()})


def swap_variables(a, perm):
    """Rename variables: ``t_i -> t_{perm[i-1]}`` (1-based permutation)."""
    out = {}
    for m, c in a.terms.items():
        e = [0] * a.mu
        for i, k in enumerate(m):
            e[perm[i] - 1] = k
        out[tuple(e)] = c
    return LaurentPoly._raw(a.mu, out)


# text format ----------------------------------------------------------------

def _format_monomial(mono):
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 0:
            continue
        parts.append(f"t{i}" if e == 1 else f"t{i}^{e}")
    return "*".join(parts)


def format_laurent(a):
    """Render as e.g. ``2*t1^2 - 5*t1 + 2``.

    Nonconstant terms come in descending lex order, the constant term last.
    """
    if a.is_zero():
        return "0"
    const = (0,) * a.mu
    items = [(m, c) for m, c in a.sorted_terms() if m != const]
    if const in a.terms:
        items.append((const, a.terms[const]))
    out = []
    for k, (m, c) in enumerate(items):
        mono = _format_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|([-+*^()]))")


class _Parser:
    # expr  := term (('+'|'-') term)*
    # term  := unary ('*' unary)*
    # unary := ('-'|'+') unary | power
    # power := atom ('^' ['-'|'+'] INT)?
    # atom  := INT | VAR | '(' expr ')'

    def __init__(self, text, mu):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r} in {text!r}", column=pos + 1)
            kind = "int" if m.group(1) else "var" if m.group(2) else m.group(3)
            value = m.group(1) or m.group(2) or m.group(3)
            self.tokens.append((kind, value, m.start(m.lastindex) + 1))
            pos = m.end()
        self.pos = 0
        indices = [int(v[1:] or 1) for k, v, _ in self.tokens if k == "var"]
        if any(i < 1 for i in indices):
            raise ParseError(f"variable index must be >= 1 in {text!r}")
        need = max(indices, default=1)
        if mu is None:
            mu = need
        elif need > mu:
            raise ParseError(f"variable t{need} used but only {mu} variables available in {text!r}")
        self.mu = mu

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text) + 1)

    def take(self, kind=None):
        tok = self.peek()
        if tok[0] is None or (kind is not None and tok[0] != kind):
            raise ParseError(f"expected {kind or 'token'} in {self.text!r}", column=tok[2])
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty polynomial")
        value = self.expr()
        if self.peek()[0] is not None:
            raise ParseError(f"trailing input in {self.text!r}", column=self.peek()[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] in ("-", "+"):
                sign = -1 if self.take()[0] == "-" else 1
            kind, value, col = self.take("int")
            try:
                return base ** (sign * int(value))
            except ValueError as exc:
                raise ParseError(str(exc), column=col) from None
        return base

    def atom(self):
        kind, value, col = self.take()
        if kind == "int":
            return LaurentPoly.constant(int(value), self.mu)
        if kind == "var":
            return LaurentPoly.var(int(value[1:] or 1), self.mu)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {value!r} in {self.text!r}", column=col)


def parse_laurent(text, mu=None):
    """Parse the rendering grammar; ``t`` is an alias for ``t1``."""
    return _Parser(text, mu).parse()

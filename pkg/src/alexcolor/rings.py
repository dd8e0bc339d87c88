"""Target rings for specializations of the Laurent ring.

Ring descriptors are small stateless objects in the style of computer algebra
"domains": elements are plain Python values (``int``, ``Fraction``,
:class:`PolyGF`, one-variable :class:`LaurentPoly`) and the descriptor knows
how to combine them.  Euclidean domains (``ZZ`` and ``GF(p)[t]``) additionally
provide ``divmod``, ``norm`` and ``canonical`` for Smith normal form.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import MuMismatchError, ParseError, SpecializationError
from .laurent import LaurentPoly, parse_laurent


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Ring:
    name = "?"
    is_field = False
    is_euclidean = False

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def is_zero(self, a):
        return a == self.zero

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class IntegerRing(Ring):
    name = "ZZ"
    is_euclidean = True
    zero = 0
    one = 1

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise SpecializationError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise ZeroDivisionError(f"{a} is not a unit of ZZ")
        return a

    def divmod(self, a, b):
        return divmod(a, b)

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def norm(self, a):
        return abs(a)

    def canonical(self, a):
        """Return ``(c, u)`` with ``c = u*a`` the nonnegative associate and ``u`` a unit."""
        return (-a, -1) if a < 0 else (a, 1)

    def gcd(self, a, b):
        return gcd(a, b)

    def normal(self, a):
        return abs(a)

    def format(self, a):
        return str(a)


class RationalField(Ring):
    name = "QQ"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        return Fraction(x)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / Fraction(a)

    def exact_div(self, a, b):
        return Fraction(a) / b

    def format(self, a):
        return str(a)


class IntegersMod(Ring):
    """``Z/n`` with canonical representatives ``0..n-1``."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n

    @property
    def name(self):
        return f"Z/{self.n}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.n

    @property
    def order(self):
        return self.n

    def convert(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.n)) % self.n
        return int(x) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inv(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            raise ZeroDivisionError(f"{a} is not invertible mod {self.n}") from None

    def exact_div(self, a, b):
        return (a * self.inv(b)) % self.n

    def format(self, a):
        return str(a)


class PrimeField(IntegersMod):
    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"GF({p}): only prime fields are supported")
        super().__init__(p)

    @property
    def p(self):
        return self.n

    @property
    def name(self):
        return f"GF({self.n})"


def GF(p):
    return PrimeField(p)


ZZ = IntegerRing()
QQ = RationalField()


class LaurentRing(Ring):
    """``Lambda_mu`` itself, for generic algorithms such as determinants."""

    def __init__(self, mu):
        self.mu = mu

    @property
    def name(self):
        return f"Lambda_{self.mu}"

    @property
    def zero(self):
        return LaurentPoly(self.mu)

    @property
    def one(self):
        return LaurentPoly.constant(1, self.mu)

    def convert(self, x):
        if isinstance(x, LaurentPoly):
            if x.mu != self.mu:
                raise MuMismatchError(f"expected mu = {self.mu}, got {x.mu}")
            return x
        if isinstance(x, str):
            return parse_laurent(x, self.mu)
        return LaurentPoly.constant(int(x), self.mu)

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return a.is_unit()

    def inv(self, a):
        return a ** -1

    def exact_div(self, a, b):
        return a.exact_div(b)

    def format(self, a):
        return str(a)


# GF(p)[t] ---------------------------------------------------------------------

class PolyGF:
    """Dense polynomial over GF(p); coefficients low degree first, no trailing zeros."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = [c % p for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.p = p
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other):
        if isinstance(other, int):
            return PolyGF(self.p, [other])
        if other.p != self.p:
            raise ValueError("characteristic mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyGF(self.p, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PolyGF(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return PolyGF(self.p, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyGF(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        inv = pow(other.lc(), -1, self.p)
        db = other.degree
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % self.p
            if c:
                q = c * inv % self.p
                quot[k - db] = q
                for i, b in enumerate(other.coeffs):
                    rem[k - db + i] -= q * b
        return PolyGF(self.p, quot), PolyGF(self.p, rem[:db] if db > 0 else [])

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == PolyGF(self.p, [other]).coeffs
        return isinstance(other, PolyGF) and (self.p, self.coeffs) == (other.p, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"PolyGF({self.p}, {self.coeffs})"

    def __str__(self):
        return format_gf_poly(self)


def format_gf_poly(f):
    if f.is_zero():
        return "0"
    as_laurent = LaurentPoly(1, {(k,): c for k, c in enumerate(f.coeffs) if c})
    return str(as_laurent).replace("t1", "t")


class PolyRingGF(Ring):
    """The Euclidean domain ``GF(p)[t]``."""

    is_euclidean = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"GF({p})[t]: p must be prime")
        self.p = p

    @property
    def name(self):
        return f"GF({self.p})[t]"

    @property
    def zero(self):
        return PolyGF(self.p, [])

    @property
    def one(self):
        return PolyGF(self.p, [1])

    def convert(self, x):
        if isinstance(x, PolyGF):
            return x
        if isinstance(x, int):
            return PolyGF(self.p, [x])
        if isinstance(x, LaurentPoly):
            if x.mu != 1 or any(m[0] < 0 for m in x.terms):
                raise SpecializationError(f"{x} is not a polynomial in t")
            coeffs = [0] * (max((m[0] for m in x.terms), default=-1) + 1)
            for (k,), c in x.terms.items():
                coeffs[k] = c
            return PolyGF(self.p, coeffs)
        if isinstance(x, str):
            return self.convert(parse_laurent(x, 1))
        raise TypeError(f"cannot convert {x!r} into {self.name}")

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return a.degree == 0

    def inv(self, a):
        if a.degree != 0:
            raise ZeroDivisionError(f"{a} is not a unit of {self.name}")
        return PolyGF(self.p, [pow(a.coeffs[0], -1, self.p)])

    def divmod(self, a, b):
        return divmod(a, b)

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if not r.is_zero():
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def norm(self, a):
        return a.degree

    def canonical(self, a):
        if a.is_zero():
            return a, self.one
        u = PolyGF(self.p, [pow(a.lc(), -1, self.p)])
        return a * u, u

    def gcd(self, a, b):
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        return self.normal(a)

    def normal(self, a):
        return self.canonical(a)[0]

    def format(self, a):
        return format_gf_poly(a)


class LaurentPIDGF(PolyRingGF):
    """``GF(p)[t^±1]`` viewed through polynomial representatives.

    Powers of ``t`` are units here, so :meth:`normal` strips them and makes the
    result monic.  Smith forms are still computed in ``GF(p)[t]``; this class
    only interprets their factors and hosts module orders.
    """

    @property
    def name(self):
        return f"GF({self.p})[t^±1]"

    def strip(self, a):
        k = 0
        while k < len(a.coeffs) and a.coeffs[k] == 0:
            k += 1
        return PolyGF(self.p, a.coeffs[k:])

    def normal(self, a):
        return PolyRingGF.normal(self, self.strip(a))

    def is_unit(self, a):
        return self.strip(a).degree == 0

    def gcd(self, a, b):
        return PolyRingGF.gcd(self, self.strip(a), self.strip(b))


class LaurentRingGF(Ring):
    """``GF(p)[t^±1]``; elements are one-variable :class:`LaurentPoly` with coefficients in ``0..p-1``."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"GF({p})[t^±1]: p must be prime")
        self.p = p

    @property
    def name(self):
        return f"GF({self.p})[t^±1]"

    def _reduce(self, a):
        return LaurentPoly(1, {m: c % self.p for m, c in a.terms.items()})

    @property
    def zero(self):
        return LaurentPoly(1)

    @property
    def one(self):
        return LaurentPoly.constant(1, 1)

    def convert(self, x):
        if isinstance(x, str):
            x = parse_laurent(x, 1)
        if isinstance(x, int):
            x = LaurentPoly.constant(x, 1)
        if isinstance(x, PolyGF):
            x = LaurentPoly(1, {(k,): c for k, c in enumerate(x.coeffs)})
        if not isinstance(x, LaurentPoly) or x.mu != 1:
            raise SpecializationError(f"cannot convert {x!r} into {self.name}")
        return self._reduce(x)

    def add(self, a, b):
        return self._reduce(a + b)

    def sub(self, a, b):
        return self._reduce(a - b)

    def mul(self, a, b):
        return self._reduce(a * b)

    def neg(self, a):
        return self._reduce(-a)

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return a.is_monomial()

    def inv(self, a):
        if not a.is_monomial():
            raise ZeroDivisionError(f"{a} is not a unit of {self.name}")
        ((k,), c), = a.terms.items()
        return LaurentPoly(1, {(-k,): pow(c, -1, self.p)})

    def shift_to_poly(self, a):
        """Split ``a = t^s * f`` with ``f`` a polynomial having nonzero constant term."""
        if a.is_zero():
            return 0, PolyGF(self.p, [])
        s = min(m[0] for m in a.terms)
        return s, self.poly_part(a, s)

    def poly_part(self, a, s):
        """The polynomial ``t^-s * a``; requires ``s`` at most the lowest exponent."""
        if a.is_zero():
            return PolyGF(self.p, [])
        top = max(m[0] for m in a.terms)
        coeffs = [0] * (top - s + 1)
        for (k,), c in a.terms.items():
            coeffs[k - s] = c
        return PolyGF(self.p, coeffs)

    def format(self, a):
        return str(a).replace("t1", "t")


def parse_ring(text):
    """Parse a ring descriptor: ``Z``, ``Q``, ``GF<p>`` / ``<p>``, ``Z/<n>``, ``GF<p>-t``."""
    s = text.strip()
    u = s.upper()
    if u in ("Z", "ZZ"):
        return ZZ
    if u in ("Q", "QQ"):
        return QQ
    if u.startswith("Z/") and u[2:].isdigit():
        return IntegersMod(int(u[2:]))
    if u.startswith("GF") and u.endswith("-T") and u[2:-2].isdigit():
        return LaurentRingGF(int(u[2:-2]))
    body = u[2:] if u.startswith("GF") else u
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if body.isdigit():
        return GF(int(body))
    raise ParseError(f"unrecognized ring {text!r}")


# specialization homomorphisms --------------------------------------------------

@dataclass(frozen=True)
class SpecializationHom:
    """A unital ring map out of ``Lambda_mu`` fixed by the images of ``t_1..t_mu``."""

    target: Ring
    images: tuple

    def __post_init__(self):
        images = tuple(self.target.convert(x) for x in self.images)
        if not images:
            raise SpecializationError("a specialization needs at least one image")
        for i, x in enumerate(images, start=1):
            if not self.target.is_unit(x):
                raise SpecializationError(f"image of t{i} ({self.target.format(x)}) is not a unit of {self.target.name}")
        object.__setattr__(self, "images", images)

    @property
    def mu(self):
        return len(self.images)

    def conjugate(self):
        """The specialization with every image inverted (precomposition with conjugation)."""
        return SpecializationHom(self.target, tuple(self.target.inv(x) for x in self.images))

    def __call__(self, a):
        return evaluate(self, a)

    def describe(self):
        return f"{self.target.name}: " + ", ".join(
            f"t{i}->{self.target.format(x)}" for i, x in enumerate(self.images, start=1))


def specialization(target, images):
    if isinstance(target, str):
        target = parse_ring(target)
    return SpecializationHom(target, tuple(images))


def parse_images(text, target):
    """Parse a comma-separated image list such as ``3,1`` or ``t,2*t^-1``."""
    items = [s.strip() for s in text.split(",")]
    if any(not s for s in items):
        raise ParseError(f"empty image in {text!r}")
    out = []
    for s in items:
        if isinstance(target, LaurentRingGF):
            out.append(target.convert(parse_laurent(s, 1)))
        else:
            try:
                value = Fraction(s) if "/" in s and target is QQ else int(s)
            except ValueError:
                raise ParseError(f"image {s!r} is not a number") from None
            out.append(target.convert(value))
    return tuple(out)


def evaluate(phi, a):
    """Ring-homomorphism image ``phi(a)``."""
    if a.mu != phi.mu:
        raise MuMismatchError(f"specialization has {phi.mu} images but polynomial has {a.mu} variables")
    R = phi.target
    cache = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = R.pow(phi.images[i], e)
        return cache[key]

    total = R.zero
    for mono, c in a.terms.items():
        term = R.convert(c)
        for i, e in enumerate(mono):
            if e:
                term = R.mul(term, power(i, e))
        total = R.add(total, term)
    return total

"""Dense univariate polynomials over an arbitrary coefficient parent.

A coefficient parent must expose ``zero``, ``one``, ``coerce(x)`` and an
``is_field`` flag; its elements must support ``+``, ``-``, ``*``, ``==`` and,
where an algorithm divides, ``** -1``.  Plain Python ints work through the
``IntRing`` singleton.  Polynomials are immutable; coefficients are stored
low degree first with trailing zeros stripped, and the zero polynomial has
degree -1.

Towers are built by using a ``PolyRing`` as the coefficient parent of an
outer ``Poly``: e.g. additive polynomials in x whose coefficients live in
F_q[T].
"""

from __future__ import annotations

from .errors import ParseError
from .fq import Fq, FqElem

__all__ = [
    "IntRing",
    "ZZ",
    "PolyRing",
    "Poly",
    "poly_parse",
    "poly_to_str",
    "monic_enumerate",
    "all_residues",
    "is_irreducible",
]


class IntRing:
    """Parent for plain Python integers."""

    is_field = False
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {x!r} into Z")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntRing)

    def __hash__(self) -> int:
        return hash("IntRing")

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntRing()


class Poly:
    __slots__ = ("ring", "var", "coeffs")

    def __init__(self, ring, var: str, coeffs) -> None:
        zero = ring.zero
        cs = list(coeffs)
        while cs and cs[-1] == zero:
            cs.pop()
        self.ring = ring
        self.var = var
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(ring, var: str, c) -> "Poly":
        return Poly(ring, var, [ring.coerce(c)])

    @staticmethod
    def gen(ring, var: str) -> "Poly":
        return Poly(ring, var, [ring.zero, ring.one])

    @staticmethod
    def zero_poly(ring, var: str) -> "Poly":
        return Poly(ring, var, [])

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.ring.one

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self):
        return self.coeff(0)

    def _check(self, other: "Poly") -> None:
        if self.var != other.var or self.ring != other.ring:
            raise ValueError(
                f"mixed polynomial arithmetic: {self.var}/{self.ring!r} vs "
                f"{other.var}/{other.ring!r}"
            )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ring, self.var, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, self.var, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.ring, self.var, [])
        zero = self.ring.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(self.ring, self.var, out)

    def mul_scalar(self, c) -> "Poly":
        c = self.ring.coerce(c)
        if c == self.ring.zero:
            return Poly(self.ring, self.var, [])
        return Poly(self.ring, self.var, [a * c for a in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly(self.ring, self.var, [self.ring.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by var^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly(self.ring, self.var, (self.ring.zero,) * k + self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = self.ring.zero
        if other.is_monic():
            linv = None
        elif self.ring.is_field:
            linv = other.leading ** -1
        else:
            raise ValueError("division needs a monic divisor over a non-field")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.ring, self.var, []), self
        quo = [zero] * (dq + 1)
        dcs = other.coeffs
        dn = len(dcs) - 1
        for k in range(dq, -1, -1):
            lead = rem[k + dn]
            if linv is not None:
                lead = lead * linv
            if lead == zero:
                continue
            quo[k] = lead
            for j, dj in enumerate(dcs):
                rem[k + j] = rem[k + j] - lead * dj
        return Poly(self.ring, self.var, quo), Poly(self.ring, self.var, rem[:dn])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"inexact polynomial division: remainder {r!r}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        if not self.ring.is_field:
            raise ValueError("cannot normalize over a non-field")
        return self.mul_scalar(self.leading ** -1)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; coefficient parent must be a field."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def egcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, u, v) with u*self + v*other = g, g monic."""
        self._check(other)
        one = Poly(self.ring, self.var, [self.ring.one])
        zero = Poly(self.ring, self.var, [])
        r0, r1 = self, other
        u0, u1 = one, zero
        v0, v1 = zero, one
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if r0.is_zero():
            return r0, u0, v0
        lc = r0.leading ** -1
        return r0.mul_scalar(lc), u0.mul_scalar(lc), v0.mul_scalar(lc)

    def derivative(self) -> "Poly":
        out = []
        for n in range(1, len(self.coeffs)):
            out.append(self.coeffs[n] * _int_in_ring(self.ring, n))
        return Poly(self.ring, self.var, out)

    def valuation(self, p: "Poly") -> int:
        """Multiplicity of the factor p; self must be nonzero."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        count, cur = 0, self
        while True:
            q, r = cur.divmod(p)
            if not r.is_zero():
                return count
            count += 1
            cur = q

    def eval(self, point, ring=None):
        """Horner evaluation; coefficients are coerced into the target parent."""
        if ring is None:
            ring = self.ring
        acc = ring.zero
        for c in reversed(self.coeffs):
            acc = acc * point + ring.coerce(c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        self._check(other)
        acc = Poly(self.ring, self.var, [])
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(self.ring, self.var, [c])
        return acc

    def map_coeffs(self, fn, ring=None) -> "Poly":
        return Poly(ring if ring is not None else self.ring, self.var,
                    [fn(c) for c in self.coeffs])

    def frobenius_twist(self, i: int, q: int) -> "Poly":
        """c_k X^k  ->  c_k^(q^i) X^(k q^i); the q^i-power map in char p."""
        if i == 0 or self.is_zero():
            return self
        step = q ** i
        zero = self.ring.zero
        out = [zero] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            if c != zero:
                out[k * step] = c ** step
        return Poly(self.ring, self.var, out)

    # -- ordering / text ----------------------------------------------------

    def sort_key(self):
        return (len(self.coeffs), tuple(c.sort_key() for c in self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.var == other.var and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        try:
            return poly_to_str(self)
        except (ValueError, AttributeError):
            return _poly_str_general(self)

    def __repr__(self) -> str:
        return self.__str__()


def _int_in_ring(ring, n: int):
    return ring.coerce(n)


class PolyRing:
    """F_q[T] (or any coefficient parent's polynomial ring) as a parent."""

    is_field = False

    def __init__(self, cring, var: str) -> None:
        self.cring = cring
        self.var = var
        self.zero = Poly(cring, var, [])
        self.one = Poly(cring, var, [cring.one])

    def coerce(self, x) -> Poly:
        if isinstance(x, Poly):
            if x.var != self.var or x.ring != self.cring:
                raise ValueError(f"polynomial {x!r} not in {self!r}")
            return x
        return Poly(self.cring, self.var, [self.cring.coerce(x)])

    def gen(self) -> Poly:
        return Poly.gen(self.cring, self.var)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PolyRing) and other.var == self.var
                and other.cring == self.cring)

    def __hash__(self) -> int:
        return hash(("PolyRing", self.var, self.cring))

    def __repr__(self) -> str:
        return f"PolyRing({self.cring!r}, {self.var!r})"


# -- parsing / printing ------------------------------------------------------

def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("uint", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    """expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := base ('^' uint)?; base := VAR | uint | '(' expr ')'."""

    def __init__(self, text: str, ring, var: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.var = var

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, object, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Poly:
        t = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            t = t + rhs if op == "+" else t - rhs
        return t

    def term(self) -> Poly:
        f = self.factor()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Poly:
        b = self.base()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "uint":
                raise ParseError("exponent must be an unsigned integer", pos)
            b = b ** val
        return b

    def base(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "name":
            if val != self.var:
                raise ParseError(
                    f"unknown variable {val!r}, expected {self.var!r}", pos)
            return Poly.gen(self.ring, self.var)
        if kind == "uint":
            return Poly.const(self.ring, self.var, val)
        if kind == "(":
            inner = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            return inner
        raise ParseError(f"unexpected token {kind!r}", pos)


def poly_parse(text: str, ring, var: str = "T") -> Poly:
    """Parse polynomial text over a coefficient parent (integers land in the
    prime field when the parent is F_q)."""
    parser = _Parser(text, ring, var)
    result = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input starting with {kind!r}", pos)
    return result


def _coeff_int(c) -> int:
    if isinstance(c, int):
        if c < 0:
            raise ValueError("no canonical text form for negative integers")
        return c
    if isinstance(c, FqElem):
        return c.prime_value()
    raise ValueError(f"no canonical text form for coefficient {c!r}")


def poly_to_str(poly: Poly) -> str:
    """Canonical text: terms highest degree first, '+'-separated, prime-field
    coefficients as integer literals.  Round-trips through poly_parse."""
    if poly.is_zero():
        return "0"
    parts = []
    for e in range(poly.degree, -1, -1):
        c = poly.coeff(e)
        if c == poly.ring.zero:
            continue
        v = _coeff_int(c)
        if e == 0:
            parts.append(str(v))
        else:
            head = "" if v == 1 else f"{v}*"
            xpart = poly.var if e == 1 else f"{poly.var}^{e}"
            parts.append(head + xpart)
    return "+".join(parts)


def _poly_str_general(poly: Poly) -> str:
    """Display-only form for coefficients with no canonical integer text
    (rational functions, tower elements); not meant to be re-parsed."""
    if poly.is_zero():
        return "0"
    parts = []
    for e in range(poly.degree, -1, -1):
        c = poly.coeff(e)
        if c == poly.ring.zero:
            continue
        cs = str(c)
        if e == 0:
            parts.append(cs if _is_factor(cs) else f"({cs})")
            continue
        xpart = poly.var if e == 1 else f"{poly.var}^{e}"
        if c == poly.ring.one:
            parts.append(xpart)
        elif _is_factor(cs):
            parts.append(f"{cs}*{xpart}")
        else:
            parts.append(f"({cs})*{xpart}")
    return "+".join(parts)


def _is_factor(s: str) -> bool:
    return not any(ch in s for ch in "+-*/")


# -- enumeration -------------------------------------------------------------

def monic_enumerate(fq: Fq, d: int, var: str = "T") -> list[Poly]:
    """All monic polynomials of degree exactly d over F_q, constant
    coefficient varying fastest (index order)."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    out = []
    one = fq.one
    for v in range(fq.q ** d):
        coeffs = []
        w = v
        for _ in range(d):
            coeffs.append(FqElem(fq, w % fq.q))
            w //= fq.q
        coeffs.append(one)
        out.append(Poly(fq, var, coeffs))
    return out


def all_residues(fq: Fq, bound: int, var: str = "T") -> list[Poly]:
    """All polynomials of degree < bound over F_q, in index order."""
    out = []
    for v in range(fq.q ** bound):
        coeffs = []
        w = v
        for _ in range(bound):
            coeffs.append(FqElem(fq, w % fq.q))
            w //= fq.q
        out.append(Poly(fq, var, coeffs))
    return out


# -- irreducibility ----------------------------------------------------------

def _poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly(base.ring, base.var, [base.ring.one])
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: Poly) -> bool:
    """Deterministic Rabin test over F_q; units and constants are not
    irreducible."""
    fq = poly.ring
    if not getattr(fq, "is_field", False) or not isinstance(fq, Fq):
        raise TypeError("irreducibility test expects F_q coefficients")
    if poly.is_zero():
        raise ValueError("zero polynomial")
    n = poly.degree
    if n == 0:
        return False
    f = poly.monic()
    q = fq.q
    x = Poly.gen(fq, poly.var)
    if _poly_powmod(x, q ** n, f) != x % f:
        return False
    for r in _prime_divisors(n):
        h = _poly_powmod(x, q ** (n // r), f) - x
        if f.gcd(h).degree > 0:
            return False
    return True

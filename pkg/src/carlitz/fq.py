"""Finite fields F_q, q = p^m, with a deterministic canonical modulus.

F_q is realized as F_p[s]/(modulus) where modulus is the lexicographically
smallest monic irreducible of degree m over F_p, coefficient vectors compared
highest degree first.  A given q therefore names the same field, with the same
element order, in every run and every process.

Elements carry a single integer index i = sum c_j p^j over the coordinate
vector (c_0, ..., c_{m-1}); index order is the canonical element order used
by every enumeration in the package.
"""

from __future__ import annotations

__all__ = ["Fq", "FqElem"]

_FIELD_CACHE: dict[int, "Fq"] = {}
_TABLE_LIMIT = 256  # full mul tables only for small q


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise ValueError."""
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    n, p = q, 0
    for cand in range(2, q + 1):
        if cand * cand > q:
            cand = q  # q itself prime
        if n % cand == 0:
            p = cand
            break
    m = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{q} is not a prime power")
        n //= p
        m += 1
    return p, m


# -- integer-coefficient polynomial helpers mod p (low-to-high lists) --------
# Only used to find the canonical modulus; everything else goes through Poly.

def _ip_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _ip_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_mod(out, f, p)


def _ip_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - lead * fj) % p
        a.pop()
    return _ip_trim(a)


def _ip_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _ip_mod(a, f, p)
    while e:
        if e & 1:
            result = _ip_mulmod(result, base, f, p)
        base = _ip_mulmod(base, base, f, p)
        e >>= 1
    return result


def _ip_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ip_trim(list(a)), _ip_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _ip_mod(a, bm, p)
    return a


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


def _ip_irreducible(f: list[int], p: int) -> bool:
    """Rabin test for a monic degree-n polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    if _ip_powmod(x, p ** n, f, p) != _ip_mod(x, f, p):
        return False
    for r in _prime_divisors(n):
        h = _ip_powmod(x, p ** (n // r), f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _ip_gcd(f, _ip_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)  # F_p[s]/(s)
    for v in range(p ** m):
        # digits of v, read highest-power-first, give (c_{m-1}, ..., c_0);
        # counting v upward scans candidates in lexicographic order
        hi_first = [(v // p ** k) % p for k in range(m - 1, -1, -1)]
        coeffs = list(reversed(hi_first)) + [1]  # low-to-high, monic
        if _ip_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ValueError(f"no irreducible of degree {m} over F_{p}")  # unreachable


class FqElem:
    """Element of F_q, identified by its integer index."""

    __slots__ = ("field", "i")

    def __init__(self, field: "Fq", i: int) -> None:
        self.field = field
        self.i = i

    # coordinates over F_p, constant first
    @property
    def coords(self) -> tuple[int, ...]:
        p, m = self.field.p, self.field.m
        w, out = self.i, []
        for _ in range(m):
            out.append(w % p)
            w //= p
        return tuple(out)

    def prime_value(self) -> int:
        """The element as an integer in [0, p) if it lies in F_p."""
        c = self.coords
        if any(c[1:]):
            raise ValueError(f"{self!r} is not in the prime field")
        return c[0]

    def sort_key(self) -> int:
        return self.i

    def __bool__(self) -> bool:
        return self.i != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqElem)
            and other.field.q == self.field.q
            and other.i == self.i
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.i))

    def __add__(self, other: "FqElem") -> "FqElem":
        return self.field.add(self, other)

    def __sub__(self, other: "FqElem") -> "FqElem":
        return self.field.add(self, self.field.neg(other))

    def __neg__(self) -> "FqElem":
        return self.field.neg(self)

    def __mul__(self, other: "FqElem") -> "FqElem":
        return self.field.mul(self, other)

    def __truediv__(self, other: "FqElem") -> "FqElem":
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, e: int) -> "FqElem":
        f = self.field
        if e < 0:
            return f.inv(self) ** (-e)
        if self.i == 0:
            return f.one if e == 0 else f.zero
        # element order divides q-1
        e %= f.q - 1
        result, base = f.one, self
        while e:
            if e & 1:
                result = f.mul(result, base)
            base = f.mul(base, base)
            e >>= 1
        return result

    def __repr__(self) -> str:
        if self.field.m == 1:
            return str(self.i)
        return f"Fq{self.field.q}[{','.join(map(str, self.coords))}]"


class Fq:
    """The field F_q.  Use :meth:`Fq.get` so equal q share one instance."""

    is_field = True

    def __init__(self, q: int) -> None:
        p, m = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        self.modulus = _canonical_modulus(p, m)
        self.zero = FqElem(self, 0)
        self.one = FqElem(self, 1)
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        # s^k mod modulus for k in [m, 2m-2], as coordinate tuples
        self._red: list[tuple[int, ...]] = []
        if m > 1:
            rows = []
            cur = [(-self.modulus[c]) % p for c in range(m)]
            rows.append(tuple(cur))  # s^m
            for _ in range(m - 2):
                nxt = [0] + cur[:-1]
                top = cur[-1]
                if top:
                    for c in range(m):
                        nxt[c] = (nxt[c] + top * rows[0][c]) % p
                rows.append(tuple(nxt))
                cur = nxt
            self._red = rows

    @staticmethod
    def get(q: int) -> "Fq":
        field = _FIELD_CACHE.get(q)
        if field is None:
            field = Fq(q)
            _FIELD_CACHE[q] = field
        return field

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Fq) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("Fq", self.q))

    def __repr__(self) -> str:
        return f"Fq({self.q})"

    # -- parent protocol ------------------------------------------------

    def coerce(self, x) -> FqElem:
        if isinstance(x, FqElem):
            if x.field.q != self.q:
                raise ValueError(f"element of F_{x.field.q} used in F_{self.q}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.q}")

    def from_int(self, n: int) -> FqElem:
        return FqElem(self, n % self.p)

    def from_coords(self, coords) -> FqElem:
        p = self.p
        i = 0
        for c in reversed(list(coords)):
            i = i * p + (c % p)
        return FqElem(self, i)

    def elements(self) -> list[FqElem]:
        return [FqElem(self, i) for i in range(self.q)]

    # -- arithmetic ------------------------------------------------------

    def add(self, a: FqElem, b: FqElem) -> FqElem:
        p = self.p
        if self.m == 1:
            return FqElem(self, (a.i + b.i) % p)
        i, j, out, mult = a.i, b.i, 0, 1
        while i or j:
            out += ((i % p + j % p) % p) * mult
            i //= p
            j //= p
            mult *= p
        return FqElem(self, out)

    def neg(self, a: FqElem) -> FqElem:
        p = self.p
        if self.m == 1:
            return FqElem(self, (-a.i) % p)
        i, out, mult = a.i, 0, 1
        while i:
            out += ((-i) % p) * mult
            i //= p
            mult *= p
        return FqElem(self, out)

    def mul(self, a: FqElem, b: FqElem) -> FqElem:
        if self.m == 1:
            return FqElem(self, (a.i * b.i) % self.p)
        if self.q <= _TABLE_LIMIT:
            if self._mul_table is None:
                self._build_tables()
            return FqElem(self, self._mul_table[a.i * self.q + b.i])
        return FqElem(self, self._mul_index(a.i, b.i))

    def inv(self, a: FqElem) -> FqElem:
        if a.i == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.q}")
        if self.m == 1:
            return FqElem(self, pow(a.i, -1, self.p))
        if self.q <= _TABLE_LIMIT:
            if self._inv_table is None:
                self._build_tables()
            return FqElem(self, self._inv_table[a.i])
        return a ** (self.q - 2)

    def _mul_index(self, i: int, j: int) -> int:
        p, m = self.p, self.m
        a = [(i // p ** k) % p for k in range(m)]
        b = [(j // p ** k) % p for k in range(m)]
        conv = [0] * (2 * m - 1)
        for u, au in enumerate(a):
            if au:
                for v, bv in enumerate(b):
                    conv[u + v] = (conv[u + v] + au * bv) % p
        out = conv[:m]
        for k in range(m, 2 * m - 1):
            ck = conv[k]
            if ck:
                row = self._red[k - m]
                for c in range(m):
                    out[c] = (out[c] + ck * row[c]) % p
        idx = 0
        for c in reversed(out):
            idx = idx * p + c
        return idx

    def _build_tables(self) -> None:
        q = self.q
        table = [0] * (q * q)
        for i in range(q):
            for j in range(i, q):
                v = self._mul_index(i, j)
                table[i * q + j] = v
                table[j * q + i] = v
        self._mul_table = table
        inv = [0] * q
        for i in range(1, q):
            for j in range(1, q):
                if table[i * q + j] == 1:
                    inv[i] = j
                    break
        self._inv_table = inv

"""Integral group rings Z[(A/pi^n)^*], integer cyclotomic models, and
character specifications.

Group-ring elements are coefficient maps keyed by canonical unit residues;
multiplication is convolution through the residue ring.  Characters take
values in Z[x]/(Phi_m) with Phi_m the classical m-th cyclotomic polynomial,
so every comparison stays exact.
"""

from __future__ import annotations

from .errors import CharacterError
from .poly import Poly, ZZ
from .quotient import ResidueRing

__all__ = [
    "GroupRing",
    "GroupRingElem",
    "cyclotomic_poly",
    "CycIntRing",
    "CycInt",
    "CharSpec",
    "character_table",
]


class GroupRing:
    """Z[G] for G = (A/pi^n)^*; n = 0 gives the trivial group (key 0)."""

    def __init__(self, pi: Poly, n: int) -> None:
        self.residues = ResidueRing(pi, n)
        self.pi = pi
        self.n = n

    @property
    def fq(self):
        return self.residues.fq

    def key(self, a: Poly) -> Poly:
        """Canonical dictionary key for the class of a; must be a unit."""
        r = self.residues.reduce(a)
        if not self.residues.is_unit_key(r):
            raise ValueError(f"{a!r} is not prime to {self.pi!r}")
        return r

    def zero(self) -> "GroupRingElem":
        return GroupRingElem(self, {})

    def one(self) -> "GroupRingElem":
        one_key = self.residues.reduce(Poly(self.fq, self.pi.var, [self.fq.one]))
        return GroupRingElem(self, {one_key: 1})

    def element(self, a: Poly, c: int = 1) -> "GroupRingElem":
        return GroupRingElem(self, {self.key(a): c})

    def group_order(self) -> int:
        if self.n == 0:
            return 1
        qd = self.fq.q ** self.pi.degree
        return (qd - 1) * qd ** (self.n - 1)

    def group_keys(self) -> list[Poly]:
        return self.residues.unit_residues()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRing) and other.pi == self.pi
                and other.n == self.n)

    def __hash__(self) -> int:
        return hash(("GroupRing", self.pi, self.n))

    def __repr__(self) -> str:
        return f"GroupRing({self.pi!r}, {self.n})"


class GroupRingElem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GroupRing, coeffs: dict) -> None:
        self.ring = ring
        self.coeffs = {k: c for k, c in coeffs.items() if c != 0}

    def coefficient(self, a: Poly) -> int:
        return self.coeffs.get(self.ring.key(a), 0)

    def augmentation(self) -> int:
        return sum(self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> list[tuple[Poly, int]]:
        """(key, coefficient) pairs in canonical key order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def _check(self, other: "GroupRingElem") -> None:
        if other.ring != self.ring:
            raise ValueError("mixed group rings")

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return GroupRingElem(self.ring, out)

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem(self.ring, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        rr = self.ring.residues
        out: dict[Poly, int] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                k = rr.mul_key(ka, kb)
                out[k] = out.get(k, 0) + ca * cb
        return GroupRingElem(self.ring, out)

    def scale(self, c: int) -> "GroupRingElem":
        return GroupRingElem(self.ring, {k: c * v for k, v in self.coeffs.items()})

    def act(self, a: Poly) -> "GroupRingElem":
        """Left translation by the class of a."""
        return self.ring.element(a) * self

    def project(self, m: int) -> "GroupRingElem":
        """Push down along (A/pi^n)^* -> (A/pi^m)^*, m <= n."""
        if m > self.ring.n:
            raise ValueError("projection target above current level")
        target = GroupRing(self.ring.pi, m)
        out: dict[Poly, int] = {}
        for k, c in self.coeffs.items():
            km = target.key(k)
            out[km] = out.get(km, 0) + c
        return GroupRingElem(target, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRingElem) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring.n, tuple(self.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}[{k}]")
        return " + ".join(parts)


# -- integer cyclotomics ---------------------------------------------------------

_CYC_POLY_CACHE: dict[int, Poly] = {1: Poly(ZZ, "x", [-1, 1])}


def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial over Z, by exact division of x^m - 1
    by the proper-divisor factors."""
    if m < 1:
        raise ValueError("index must be >= 1")
    got = _CYC_POLY_CACHE.get(m)
    if got is not None:
        return got
    xm1 = Poly(ZZ, "x", [-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            xm1 = xm1.exact_div(cyclotomic_poly(d))
    _CYC_POLY_CACHE[m] = xm1
    return xm1


class CycIntRing:
    """Z[x]/(Phi_m): exact integral model of the m-th roots of unity."""

    is_field = False

    def __init__(self, m: int) -> None:
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.zero = CycInt(self, Poly(ZZ, "x", []))
        self.one = CycInt(self, Poly(ZZ, "x", [1]) % self.modulus)

    def coerce(self, v) -> "CycInt":
        if isinstance(v, CycInt):
            if v.ring != self:
                raise ValueError("element of a different cyclotomic ring")
            return v
        if isinstance(v, int):
            return CycInt(self, Poly(ZZ, "x", [v]) % self.modulus)
        if isinstance(v, Poly) and v.ring == ZZ:
            return CycInt(self, v % self.modulus)
        raise TypeError(f"cannot coerce {v!r}")

    def root(self, e: int = 1) -> "CycInt":
        """The class of x^e, a primitive m-th root of unity for e = 1."""
        e %= self.m
        return CycInt(self, Poly(ZZ, "x", [0] * e + [1]) % self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycIntRing) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("CycIntRing", self.m))

    def __repr__(self) -> str:
        return f"Z[x]/(Phi_{self.m})"


class CycInt:
    __slots__ = ("ring", "rep")

    def __init__(self, ring: CycIntRing, rep: Poly) -> None:
        self.ring = ring
        self.rep = rep

    def __add__(self, other: "CycInt") -> "CycInt":
        return CycInt(self.ring, self.rep + other.rep)

    def __sub__(self, other: "CycInt") -> "CycInt":
        return CycInt(self.ring, self.rep - other.rep)

    def __neg__(self) -> "CycInt":
        return CycInt(self.ring, -self.rep)

    def __mul__(self, other: "CycInt") -> "CycInt":
        return CycInt(self.ring, (self.rep * other.rep) % self.ring.modulus)

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise ValueError("negative powers are not integral")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def as_int(self) -> int:
        """The value when it is a plain integer (degree <= 0)."""
        if self.rep.degree > 0:
            raise ValueError(f"{self!r} is not an integer")
        return self.rep.coeff(0)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CycInt) and other.ring == self.ring
                and other.rep == self.rep)

    def __hash__(self) -> int:
        return hash(("CycInt", self.ring.m, self.rep))

    def __repr__(self) -> str:
        return str(self.rep)


# -- characters ------------------------------------------------------------------

class CharSpec:
    """A character of (A/pi^n)^* of order dividing m, given by generator
    images: gens maps a residue (any representative) to the exponent e with
    chi(class) = zeta_m^e."""

    def __init__(self, order: int, gens: dict) -> None:
        if order < 1:
            raise ValueError("character order must be >= 1")
        self.order = order
        self.gens = dict(gens)

    def values(self) -> CycIntRing:
        return CycIntRing(self.order)


def character_table(ring: GroupRing, spec: CharSpec) -> dict:
    """Exponent of chi on every residue the generators reach.

    Breadth-first closure of the generated subgroup, carrying exponents mod
    the character order; any relation that maps the same residue to two
    different exponents means the data is not a homomorphism."""
    rr = ring.residues
    m = spec.order
    table: dict[Poly, int] = {ring.one().items()[0][0]: 0}
    frontier = list(table.items())
    gen_pairs = []
    for a, e in spec.gens.items():
        k = ring.key(a)
        gen_pairs.append((k, e % m))
    while frontier:
        nxt = []
        for k, e in frontier:
            for gk, ge in gen_pairs:
                k2 = rr.mul_key(k, gk)
                e2 = (e + ge) % m
                seen = table.get(k2)
                if seen is None:
                    table[k2] = e2
                    nxt.append((k2, e2))
                elif seen != e2:
                    raise CharacterError(
                        f"generator images are inconsistent at [{k2}]: "
                        f"exponent {seen} vs {e2} mod {m}")
        frontier = nxt
    return table

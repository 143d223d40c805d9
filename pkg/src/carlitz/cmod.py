"""The Carlitz module and its analytic series.

phi: A -> A{tau} is the F_q-algebra map with phi_T = T + tau, where tau is
the q-power Frobenius (tau x = x^q).  phi_a is an additive polynomial whose
linear coefficient is a itself; its roots for a = pi^n are the pi^n-torsion
of the module, and the quotients phi_{pi^n}/phi_{pi^(n-1)} are the minimal
polynomials of the torsion generators omega_n (Eisenstein at pi, constant
term exactly pi).

The Carlitz exponential e(z) is solved degree by degree from its functional
equation phi_T(e(z)) = e(Tz); the closed-form denominators D_i (D_0 = 1,
D_i = [i] D_{i-1}^q with [i] = T^(q^i) - T) are asserted against the solved
coefficients rather than trusted.  The logarithm is the series reverse of e.
The Carlitz factorial Pi(n) is the base-q digit product of the D_i, and
BC_n = Pi(n) * [z^(n-1)] (1/e(z)) are the Bernoulli-Carlitz numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fq import Fq
from .poly import Poly, PolyRing, is_irreducible
from .ratfun import RatFun, base_field
from .series import TruncSeries

__all__ = [
    "SkewPoly",
    "carlitz_phi",
    "torsion_poly",
    "omega_minpoly",
    "bracket",
    "d_sequence",
    "l_sequence",
    "carlitz_exp",
    "carlitz_log",
    "carlitz_factorial",
    "BCValue",
    "bernoulli_carlitz",
]


class SkewPoly:
    """Twisted polynomial sum c_i tau^i with c_i in F_q[T]; tau c = c^q tau."""

    __slots__ = ("fq", "coeffs")

    def __init__(self, fq: Fq, coeffs) -> None:
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.fq = fq
        self.coeffs = tuple(cs)

    @staticmethod
    def const(fq: Fq, a: Poly) -> "SkewPoly":
        return SkewPoly(fq, [a])

    @property
    def tau_degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly(self.fq, "T", [])

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return SkewPoly(self.fq, out)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + SkewPoly(other.fq, [-c for c in other.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """Composition product: tau^i c = c^(q^i) tau^i."""
        if not self.coeffs or not other.coeffs:
            return SkewPoly(self.fq, [])
        q = self.fq.q
        zero = Poly(self.fq, "T", [])
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                if cj.is_zero():
                    continue
                out[i + j] = out[i + j] + ci * _twist(cj, i, q)
        return SkewPoly(self.fq, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SkewPoly) and other.fq == self.fq
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def as_additive(self, coeff_parent=None, var: str = "x") -> Poly:
        """The additive polynomial sum c_i X^(q^i), default over F_q[T]."""
        parent = coeff_parent if coeff_parent is not None else PolyRing(self.fq, "T")
        q = self.fq.q
        if not self.coeffs:
            return Poly(parent, var, [])
        out = [parent.zero] * (q ** self.tau_degree + 1)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                out[q ** i] = parent.coerce(c)
        return Poly(parent, var, out)

    def eval(self, point, ring):
        """sum c_i * point^(q^i) in any parent that can absorb F_q[T]."""
        q = self.fq.q
        acc = ring.zero
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + ring.coerce(c) * point ** (q ** i)
        return acc

    def __repr__(self) -> str:
        terms = [f"({c!r})*tau^{i}" for i, c in enumerate(self.coeffs)
                 if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


def _twist(p: Poly, i: int, q: int) -> Poly:
    """p^(q^i) in F_q[T]: exponents scale by q^i, coefficients are
    Frobenius-fixed."""
    if i == 0 or p.is_zero():
        return p
    e = q ** i
    zero = p.ring.zero
    out = [zero] * (p.degree * e + 1)
    for k, c in enumerate(p.coeffs):
        if c != zero:
            out[k * e] = c ** e
    return Poly(p.ring, p.var, out)


def carlitz_phi(a: Poly) -> SkewPoly:
    """phi_a, by Horner in the twisted polynomial ring from phi_T = T + tau."""
    fq = a.ring
    if not isinstance(fq, Fq):
        raise TypeError("phi expects a polynomial over F_q")
    one = Poly(fq, a.var, [fq.one])
    tvar = Poly.gen(fq, a.var)
    phi_t = SkewPoly(fq, [tvar, one])
    acc = SkewPoly(fq, [])
    for c in reversed(a.coeffs):
        acc = acc * phi_t + SkewPoly.const(fq, Poly(fq, a.var, [c]))
    return acc


def torsion_poly(pi: Poly, n: int) -> Poly:
    """phi_{pi^n}(x) over F_q[T]; its roots are the pi^n-torsion points."""
    _require_prime(pi)
    if n < 1:
        raise ValueError("level must be >= 1")
    return carlitz_phi(pi ** n).as_additive()


def omega_minpoly(pi: Poly, n: int) -> Poly:
    """Minimal polynomial of a generator of the pi^n-torsion:
    phi_{pi^n}/phi_{pi^(n-1)} (phi_pi(x)/x for n = 1).  Monic, Eisenstein at
    pi, constant term exactly pi; checked before returning."""
    _require_prime(pi)
    if n < 1:
        raise ValueError("level must be >= 1")
    tn = torsion_poly(pi, n)
    if n == 1:
        m = Poly(tn.ring, tn.var, tn.coeffs[1:])
    else:
        m = tn.exact_div(torsion_poly(pi, n - 1))
    if not m.is_monic():
        raise AssertionError("torsion quotient failed to be monic")
    const = m.constant
    if const != pi:
        raise AssertionError(f"constant term {const!r} != {pi!r}")
    for i in range(m.degree):
        c = m.coeff(i)
        if not c.is_zero() and (c % pi).degree >= 0 and not (c % pi).is_zero():
            raise AssertionError(f"coefficient {i} not divisible by {pi!r}")
    return m


def _require_prime(pi: Poly) -> None:
    if not pi.is_monic() or not is_irreducible(pi):
        raise ValueError(f"{pi!r} must be monic irreducible")


# -- bracket / factorial sequences --------------------------------------------

def bracket(fq: Fq, i: int) -> Poly:
    """[i] = T^(q^i) - T."""
    if i < 1:
        raise ValueError("bracket index must be >= 1")
    q = fq.q
    coeffs = [fq.zero] * (q ** i + 1)
    coeffs[1] = -fq.one
    coeffs[q ** i] = fq.one
    return Poly(fq, "T", coeffs)


def d_sequence(fq: Fq, count: int) -> list[Poly]:
    """D_0, ..., D_{count-1} with D_i = [i] * D_{i-1}^q."""
    out = [Poly(fq, "T", [fq.one])]
    for i in range(1, count):
        out.append(bracket(fq, i) * _poly_qpow(out[-1], fq.q))
    return out


def l_sequence(fq: Fq, count: int) -> list[Poly]:
    """L_0, ..., L_{count-1} with L_i = [i] * L_{i-1}."""
    out = [Poly(fq, "T", [fq.one])]
    for i in range(1, count):
        out.append(bracket(fq, i) * out[-1])
    return out


def _poly_qpow(p: Poly, q: int) -> Poly:
    """p^q in char p: coefficients to the q, exponents times q."""
    zero = p.ring.zero
    if p.is_zero():
        return p
    out = [zero] * (p.degree * q + 1)
    for k, c in enumerate(p.coeffs):
        if c != zero:
            out[k * q] = c ** q
    return Poly(p.ring, p.var, out)


# -- exponential / logarithm ---------------------------------------------------

_EXP_CACHE: dict[int, TruncSeries] = {}
_LOG_CACHE: dict[int, TruncSeries] = {}


def carlitz_exp(fq: Fq, prec: int) -> TruncSeries:
    """e(z) with e(0)=0, e'(0)=1 solving phi_T(e(z)) = e(Tz), to O(z^prec)."""
    if prec < 2:
        raise ValueError("precision must be >= 2")
    cached = _EXP_CACHE.get(fq.q)
    if cached is not None and cached.prec >= prec:
        return cached.truncate(prec)
    F = base_field(fq)
    q = fq.q
    t_elem = F.gen()
    coeffs: list[RatFun] = [F.zero] * prec
    coeffs[1] = F.one
    for n in range(2, prec):
        partial = TruncSeries(F, "z", 0, coeffs[:n], None)  # exact so far
        lhs = partial.mul_scalar(t_elem) + partial ** q
        rhs = partial.scale_argument(t_elem)
        residual = (lhs - rhs).coefficient(n)
        if residual.is_zero():
            continue
        denom = t_elem ** n - t_elem
        coeffs[n] = residual / denom
    series = TruncSeries(F, "z", 0, coeffs, prec)
    _assert_exp_shape(fq, series)
    if cached is None or cached.prec < prec:
        _EXP_CACHE[fq.q] = series
    return series


def _assert_exp_shape(fq: Fq, e: TruncSeries) -> None:
    # solved coefficients must be exactly 1/D_i at z^(q^i), zero elsewhere
    F = base_field(fq)
    q = fq.q
    imax = 0
    while q ** (imax + 1) < e.prec:
        imax += 1
    ds = d_sequence(fq, imax + 1)
    qpows = {q ** i: i for i in range(imax + 1)}
    for n, c in e.items():
        i = qpows.get(n)
        assert i is not None, f"spurious exponential coefficient at z^{n}"
        assert c * F.coerce(ds[i]) == F.one, f"coefficient at z^{n} is not 1/D_{i}"


def carlitz_log(fq: Fq, prec: int) -> TruncSeries:
    """The series reverse of the exponential: e(log(z)) = z + O(z^prec)."""
    if prec < 2:
        raise ValueError("precision must be >= 2")
    cached = _LOG_CACHE.get(fq.q)
    if cached is not None and cached.prec >= prec:
        return cached.truncate(prec)
    F = base_field(fq)
    e = carlitz_exp(fq, prec)
    coeffs: list[RatFun] = [F.zero] * prec
    coeffs[1] = F.one
    for n in range(2, prec):
        partial = TruncSeries(F, "z", 0, coeffs[:n], None)  # exact so far
        comp = e.truncate(n + 1).compose(partial)
        coeffs[n] = -comp.coefficient(n)
    lam = TruncSeries(F, "z", 0, coeffs, prec)
    _assert_log_shape(fq, lam)
    roundtrip = e.compose(lam)
    z = TruncSeries.monomial(F, "z", F.one, 1)
    assert roundtrip.agrees_with(z), "e(log z) != z within precision"
    if cached is None or cached.prec < prec:
        _LOG_CACHE[fq.q] = lam
    return lam


def _assert_log_shape(fq: Fq, lam: TruncSeries) -> None:
    # log z = sum (-1)^i z^(q^i) / L_i
    F = base_field(fq)
    q = fq.q
    imax = 0
    while q ** (imax + 1) < lam.prec:
        imax += 1
    ls = l_sequence(fq, imax + 1)
    qpows = {q ** i: i for i in range(imax + 1)}
    for n, c in lam.items():
        i = qpows.get(n)
        assert i is not None, f"spurious logarithm coefficient at z^{n}"
        sign = F.one if i % 2 == 0 else -F.one
        assert c * F.coerce(ls[i]) == sign, f"coefficient at z^{n} is not (-1)^{i}/L_{i}"


# -- factorial and Bernoulli numbers -------------------------------------------

def carlitz_factorial(n: int, fq: Fq) -> Poly:
    """Pi(n) = prod D_i^(n_i) over the base-q digits n_i of n."""
    if n < 0:
        raise ValueError("factorial index must be >= 0")
    q = fq.q
    digits = []
    w = n
    while w:
        digits.append(w % q)
        w //= q
    ds = d_sequence(fq, len(digits) or 1)
    out = Poly(fq, "T", [fq.one])
    for i, ni in enumerate(digits):
        if ni:
            out = out * ds[i] ** ni
    return out


@dataclass(frozen=True)
class BCValue:
    """A Bernoulli-Carlitz number BC_n together with Pi(n)."""

    n: int
    value: RatFun
    factorial: Poly

    def __str__(self) -> str:
        return f"BC_{self.n} = {self.value}"


def bernoulli_carlitz(n: int, fq: Fq) -> BCValue:
    """BC_n = Pi(n) * [z^(n-1)] (1/e(z)); BC_0 = 1, and BC_n = 0 whenever
    q - 1 does not divide n > 0."""
    if n < 0:
        raise ValueError("index must be >= 0")
    F = base_field(fq)
    fact = carlitz_factorial(n, fq)
    e = carlitz_exp(fq, n + 2)
    inv = e.invert()
    c = inv.coefficient(n - 1)
    value = c * F.coerce(fact)
    if n > 0 and n % (fq.q - 1) != 0 and fq.q > 2:
        assert value.is_zero(), f"BC_{n} should vanish for q={fq.q}"
    return BCValue(n, value, fact)

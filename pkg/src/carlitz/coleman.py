"""The norm operator on Carlitz power series.

For a series or rational function f in x over F = F_q(T) and a monic prime
pi, the norm N f is pinned down by

    prod_{u in phi[pi]} f(x + u)  =  (N f)(phi_pi(x)),

the product running over all pi-torsion points of the Carlitz module.  The
product is computed without ever adjoining a torsion point: phi_pi(y) is
separable, so the multiplication-by-f(x+y) norm in F[y]/(phi_pi(y)) equals
the product over the roots.  The result is then rewritten as a polynomial in
phi_pi(x) (always possible, because the product is invariant under the
translations x |-> x + u).

Exact inputs are ratios of polynomials in x and stay exact.  Truncated
inputs are handled on their stored representative: the leading x-power is
split off (N x = x), the unit part is normed exactly, and the result keeps
the input's precision tag.
"""

from __future__ import annotations

from .cmod import carlitz_phi, torsion_poly, _require_prime
from .cyclo import CycloElem, CycloField
from .errors import DecompositionError, PrecisionError
from .fq import Fq
from .poly import Poly
from .quotient import QuotientRing, quotient_norm
from .ratfun import FracField, RatFun, base_field
from .series import TruncSeries

__all__ = [
    "ColemanSeries",
    "coleman_norm",
    "decompose_by_phi",
    "star_action",
    "eval_at_omega",
    "phi_poly",
    "cyclotomic_unit_series",
]

_XFIELD_CACHE: dict[int, FracField] = {}


def x_field(fq: Fq) -> FracField:
    """F(x) with F = F_q(T); rational functions in the series variable."""
    xf = _XFIELD_CACHE.get(fq.q)
    if xf is None:
        xf = FracField(base_field(fq), "x")
        _XFIELD_CACHE[fq.q] = xf
    return xf


def phi_poly(a: Poly, var: str = "x") -> Poly:
    """phi_a(x) as a plain polynomial in x with coefficients in F."""
    F = base_field(a.ring)
    add = carlitz_phi(a).as_additive()
    return Poly(F, var, [F.coerce(c) for c in add.coeffs])


class ColemanSeries:
    """A series-with-provenance: either an exact ratio of polynomials in x
    over F, or a truncated Laurent series.  ``pi`` is the prime the norm
    operator (and torsion evaluation) is taken at; it may be left unset for
    the operations that never use it."""

    __slots__ = ("fq", "value", "pi")

    def __init__(self, value, pi: Poly | None = None) -> None:
        if isinstance(value, (Poly, TruncSeries)) and isinstance(value.ring, Fq):
            F = base_field(value.ring)
            if isinstance(value, Poly):
                value = value.map_coeffs(F.coerce, ring=F)
            else:
                value = TruncSeries(F, value.var, value.order,
                                    [F.coerce(c) for c in value.coeffs],
                                    value.prec)
        if isinstance(value, (Poly, TruncSeries)) and value.var != "x":
            raise ValueError(f"the series variable must be x, got {value.var}")
        if isinstance(value, TruncSeries) and value.prec is None:
            # exact Laurent polynomial: fold into the rational form
            F = value.ring
            xf = x_field(_fq_of(F))
            num = Poly(F, "x", value.coeffs)
            if value.order >= 0:
                value = xf.from_pair(num.shift(value.order), xf.one.den)
            else:
                den = Poly(F, "x", [F.zero] * (-value.order) + [F.one])
                value = xf.from_pair(num, den)
        if isinstance(value, Poly):
            value = x_field(_fq_of(value.ring)).coerce(value)
        if isinstance(value, RatFun):
            self.fq = _fq_of(value.field.cring)
        elif isinstance(value, TruncSeries):
            self.fq = _fq_of(value.ring)
        else:
            raise TypeError(f"cannot build a Coleman series from {value!r}")
        if pi is not None:
            _require_prime(pi)
        self.value = value
        self.pi = pi

    @property
    def tag(self) -> str:
        if isinstance(self.value, RatFun):
            return "exact"
        return f"truncated at {self.value.prec}"

    def is_exact(self) -> bool:
        return isinstance(self.value, RatFun)

    def order(self) -> int:
        """x-adic order of the leading term."""
        if isinstance(self.value, TruncSeries):
            if not self.value.coeffs:
                raise ValueError("order of a series with no known terms")
            return self.value.order
        if self.value.is_zero():
            raise ValueError("order of the zero function")
        return _x_order(self.value.num) - _x_order(self.value.den)

    def as_series(self, prec: int) -> TruncSeries:
        """Expand at x = 0 through O(x^prec)."""
        if isinstance(self.value, TruncSeries):
            return self.value.truncate(prec)
        num, den = self.value.num, self.value.den
        if num.is_zero():
            return TruncSeries.zero(num.ring, num.var, prec)
        a, b = _x_order(num), _x_order(den)
        nu = TruncSeries(num.ring, num.var, 0, num.coeffs[a:], prec - a + b)
        de = TruncSeries(den.ring, den.var, 0, den.coeffs[b:], prec - a + b)
        return (nu * de.invert()).shift(a - b).truncate(prec)

    def _merge_pi(self, other: "ColemanSeries") -> Poly | None:
        if self.pi is None:
            return other.pi
        if other.pi is None or other.pi == self.pi:
            return self.pi
        raise ValueError("mixed primes in Coleman series arithmetic")

    def __mul__(self, other: "ColemanSeries") -> "ColemanSeries":
        pi = self._merge_pi(other)
        a, b = self.value, other.value
        if isinstance(a, RatFun) and isinstance(b, RatFun):
            return ColemanSeries(a * b, pi)
        prec = _finite_prec(a, b)
        return ColemanSeries(self.as_series(prec) * other.as_series(prec), pi)

    def __truediv__(self, other: "ColemanSeries") -> "ColemanSeries":
        pi = self._merge_pi(other)
        a, b = self.value, other.value
        if isinstance(a, RatFun) and isinstance(b, RatFun):
            return ColemanSeries(a / b, pi)
        prec = _finite_prec(a, b)
        return ColemanSeries(
            self.as_series(prec) * other.as_series(prec).invert(), pi)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ColemanSeries) and other.value == self.value
                and other.pi == self.pi)

    def __hash__(self) -> int:
        return hash(("ColemanSeries", self.value))

    def __repr__(self) -> str:
        return f"ColemanSeries({self.value!r}; {self.tag})"


def _fq_of(ring) -> Fq:
    if isinstance(ring, Fq):
        return ring
    if isinstance(ring, FracField):
        return _fq_of(ring.cring)
    raise TypeError(f"no finite base field under {ring!r}")


def _x_order(p: Poly) -> int:
    for i, c in enumerate(p.coeffs):
        if c != p.ring.zero:
            return i
    raise ValueError("order of the zero polynomial")


def _finite_prec(a, b) -> int:
    precs = [v.prec for v in (a, b)
             if isinstance(v, TruncSeries) and v.prec is not None]
    if not precs:
        raise ValueError("no finite precision on either operand")
    return min(precs)


def cyclotomic_unit_series(a: Poly, b: Poly, pi: Poly | None = None) -> ColemanSeries:
    """phi_a(x)/phi_b(x): evaluating at a torsion generator gives the
    cyclotomic unit c(a, b)."""
    if a.is_zero() or b.is_zero():
        raise ValueError("both indices must be nonzero")
    F = x_field(a.ring)
    return ColemanSeries(F.from_pair(phi_poly(a), phi_poly(b)), pi)


# -- the norm ------------------------------------------------------------------

def coleman_norm(f: ColemanSeries) -> ColemanSeries:
    """N f, with (N f)(phi_pi(x)) = prod over pi-torsion u of f(x + u).

    Multiplicative; fixes phi_a for a prime to pi; on truncated input the
    stored representative is normed exactly and the precision tag carried."""
    if f.pi is None:
        raise ValueError("Coleman norm needs the prime attached to the series")
    pi = f.pi
    if isinstance(f.value, RatFun):
        num = _norm_poly(f.value.num, pi)
        den = _norm_poly(f.value.den, pi)
        return ColemanSeries(RatFun.make(f.value.field, num, den), pi)
    ser = f.value
    if not ser.coeffs:
        raise ZeroDivisionError("norm of a series with no known terms")
    unit = Poly(ser.ring, ser.var, ser.coeffs)
    normed = _norm_poly(unit, pi)
    return ColemanSeries(
        TruncSeries(ser.ring, ser.var, ser.order, normed.coeffs, ser.prec), pi)


def _norm_poly(p: Poly, pi: Poly) -> Poly:
    """prod over torsion points of p(x+u), pushed back through phi_pi."""
    qr = _torsion_quotient(pi)
    if p.is_zero():
        return p
    xy = Poly.gen(qr, p.var) + Poly(qr, p.var, [qr.gen()])
    acc = Poly(qr, p.var, [])
    for c in reversed(p.coeffs):
        acc = acc * xy + Poly(qr, p.var, [qr.coerce(c)])
    product = quotient_norm(acc)
    return decompose_by_phi(product, pi)


_TORSION_QR_CACHE: dict[tuple[int, tuple], QuotientRing] = {}


def _torsion_quotient(pi: Poly) -> QuotientRing:
    """F[y]/(phi_pi(y)); not a field (y is a factor), but the norm never
    divides by y."""
    key = (pi.ring.q, pi.coeffs)
    qr = _TORSION_QR_CACHE.get(key)
    if qr is None:
        qr = QuotientRing(phi_poly(pi, var="y"))
        _TORSION_QR_CACHE[key] = qr
    return qr


def decompose_by_phi(g, pi: Poly):
    """The unique h with h(phi_pi(x)) = g(x), solved degree by degree.

    The lowest term of phi_pi(x)^k is pi^k x^k, so coefficient k of the
    residual determines h_k.  A nonzero residual after all stages means g is
    not a polynomial in phi_pi(x) and raises DecompositionError."""
    if isinstance(g, TruncSeries):
        return _decompose_series(g, pi)
    if not isinstance(g, Poly):
        raise TypeError(f"cannot decompose {g!r}")
    if g.is_zero():
        return g
    F = g.ring
    phi = phi_poly(pi, var=g.var)
    qd = phi.degree
    if g.degree % qd:
        raise DecompositionError(
            f"degree {g.degree} is not a multiple of {qd}")
    pi_inv = F.coerce(pi).inv()
    out = []
    r = g
    phi_pow = Poly(F, g.var, [F.one])
    for k in range(g.degree // qd + 1):
        if k:
            phi_pow = phi_pow * phi
        hk = r.coeff(k) * pi_inv ** k
        out.append(hk)
        if hk != F.zero:
            r = r - phi_pow.mul_scalar(hk)
    if not r.is_zero():
        raise DecompositionError(
            f"residual {r!r} is not a polynomial in phi_pi(x)")
    return Poly(F, g.var, out)


def _decompose_series(g: TruncSeries, pi: Poly) -> TruncSeries:
    if g.order < 0:
        raise DecompositionError(
            "a Laurent series with a pole cannot be phi-composed")
    if g.prec is None:
        h = decompose_by_phi(Poly(g.ring, g.var, (g.ring.zero,) * g.order
                                  + g.coeffs), pi)
        return TruncSeries.from_poly(h, None, var=g.var)
    F = g.ring
    phi = TruncSeries.from_poly(phi_poly(pi, var=g.var)).truncate(g.prec)
    pi_inv = F.coerce(pi).inv()
    out = []
    r = g
    phi_pow = TruncSeries.one(F, g.var, g.prec)
    for k in range(g.prec):
        if k:
            phi_pow = (phi_pow * phi).truncate(g.prec)
        hk = r.coefficient(k) * pi_inv ** k
        out.append(hk)
        if hk != F.zero:
            r = r - phi_pow.mul_scalar(hk)
    if not r.is_zero():
        raise DecompositionError(
            f"residual {r!r} is not a series in phi_pi(x)")
    return TruncSeries(F, g.var, 0, out, g.prec)


# -- Galois twisting and torsion evaluation ------------------------------------

def star_action(a: Poly, f: ColemanSeries) -> ColemanSeries:
    """(a * f)(x) = f(phi_a(x)); the series-level Galois action."""
    if a.is_zero():
        raise ValueError("the acting element must be nonzero")
    if isinstance(f.value, RatFun):
        pa = phi_poly(a, var=f.value.num.var)
        return ColemanSeries(
            RatFun.make(f.value.field, f.value.num.compose(pa),
                        f.value.den.compose(pa)), f.pi)
    ser = f.value
    inner = TruncSeries.from_poly(phi_poly(a, var=ser.var))
    if ser.order < 0:
        inner = inner.truncate(ser.prec + 2 * (-ser.order) + 2)
    return ColemanSeries(ser.compose(inner), f.pi)


def eval_at_omega(f: ColemanSeries, n: int) -> CycloElem:
    """f(omega_n) in the level-n cyclotomic field.

    Exact input always evaluates (the denominator must stay invertible).  A
    truncated input is evaluated on its representative once its precision
    covers a full power basis of the field, i.e. prec >= deg m_n."""
    if f.pi is None:
        raise ValueError("evaluation needs the prime attached to the series")
    field = CycloField.get(f.pi, n)
    point = field.omega.q
    if isinstance(f.value, RatFun):
        return CycloElem(field, f.value.eval(point, field.quot))
    ser = f.value
    if ser.prec is not None and ser.prec < field.degree:
        raise PrecisionError(
            f"evaluating at a level-{n} torsion point needs precision "
            f">= {field.degree}, have {ser.prec}",
            needed=field.degree,
        )
    acc = field.quot.zero
    for k, c in ser.items():
        acc = acc + field.quot.coerce(c) * point ** k
    return CycloElem(field, acc)

"""Coates-Wiles homomorphisms and the main identity verifier.

delta_k reads the x^(k-1) coefficient of (dlog f)(e_C(x)), where f is the
series attached to a unit (for the cyclotomic units c(a, b) this is
phi_a(x)/phi_b(x)).  The verifier compares, exactly in F = F_q(T),

    delta_k(c(a, b))  =  (a^k - b^k) * BC_k / Pi(k)

for k = 1..kmax.  Both sides are prime-free: the left is series algebra in
one composition with the Carlitz exponential, the right is the closed
Bernoulli-Carlitz form; nothing is shared between the pipelines.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .cmod import bernoulli_carlitz, carlitz_exp
from .coleman import ColemanSeries, _fq_of, cyclotomic_unit_series, phi_poly
from .fq import Fq
from .poly import Poly
from .ratfun import FracField, RatFun, base_field
from .series import TruncSeries

__all__ = [
    "lucas_binom",
    "ht_derivative",
    "dlog",
    "dlog_exp_series",
    "coates_wiles",
    "CWRow",
    "CWReport",
    "cw_verify",
]


def lucas_binom(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p for any integer n, by Lucas' theorem.

    Negative upper index goes through binom(n, k) = (-1)^k binom(k-n-1, k),
    which keeps the divided-power calculus on Laurent series exact."""
    if k < 0:
        return 0
    if n < 0:
        v = lucas_binom(k - n - 1, k, p)
        return (-v) % p if k % 2 else v
    if k > n:
        return 0
    out = 1
    while k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        num = den = 1
        for i in range(ki):
            num = num * (ni - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, -1, p) % p
        n //= p
        k //= p
    return out


def _characteristic(ring) -> int:
    if isinstance(ring, Fq):
        return ring.p
    if isinstance(ring, FracField):
        return _characteristic(ring.cring)
    raise TypeError(f"no characteristic known for {ring!r}")


def ht_derivative(j: int, f: TruncSeries) -> TruncSeries:
    """The jth divided-power derivative:
    sum c_n x^n  |->  sum binom(n+j, j) c_{n+j} x^n.

    Delta_0 is the identity; Delta_j eats j terms of precision."""
    if j < 0:
        raise ValueError("derivative index must be >= 0")
    if j == 0:
        return f
    p = _characteristic(f.ring)
    out = []
    for i, c in enumerate(f.coeffs):
        n = f.order + i - j
        b = lucas_binom(n + j, j, p)
        out.append(c * f.ring.coerce(b))
    prec = None if f.prec is None else f.prec - j
    return TruncSeries(f.ring, f.var, f.order - j, out, prec)


def dlog(f):
    """f'/f.  Rational input stays rational; truncated series input returns
    a truncated series (additive on products either way)."""
    if isinstance(f, ColemanSeries):
        f = f.value
    if isinstance(f, Poly):
        f = FracField(f.ring, f.var).coerce(f)
    if isinstance(f, RatFun):
        if f.is_zero():
            raise ZeroDivisionError("dlog of zero")
        return f.derivative() / f
    if isinstance(f, TruncSeries):
        if f.is_zero():
            raise ZeroDivisionError("dlog of zero")
        return f.derivative() * f.invert()
    raise TypeError(f"cannot take dlog of {f!r}")


def _exp_in_x(fq: Fq, prec: int) -> TruncSeries:
    e = carlitz_exp(fq, prec)
    return TruncSeries(e.ring, "x", e.order, e.coeffs, e.prec)


def _poly_at_series(p: Poly, s: TruncSeries) -> TruncSeries:
    # Horner with exact constants; p's coefficients must coerce into s.ring
    acc = TruncSeries.zero(s.ring, s.var)
    for c in reversed(p.coeffs):
        acc = acc * s + TruncSeries.const(s.ring, s.var, s.ring.coerce(c))
    return acc


def dlog_exp_series(f, prec: int) -> TruncSeries:
    """(dlog f)(e_C(x)) through O(x^prec); the generating series of the
    delta_k values, coefficient of x^(k-1) being delta_k."""
    val = f.value if isinstance(f, ColemanSeries) else f
    d = dlog(val)
    if isinstance(d, RatFun):
        fq = _fq_of(d.field.cring)
        margin = 2 * (_low_order(d.num) + _low_order(d.den)) + 2
        e = _exp_in_x(fq, max(prec + margin, 2))
        num = _poly_at_series(d.num, e)
        den = _poly_at_series(d.den, e)
        out = num * den.invert()
    else:
        fq = _fq_of(d.ring)
        margin = 2 * abs(min(d.order, 0)) + 2
        e = _exp_in_x(fq, max(prec + margin, 2))
        out = d.compose(e)
    return out.truncate(prec)


def _low_order(p: Poly) -> int:
    for i, c in enumerate(p.coeffs):
        if c != p.ring.zero:
            return i
    return 0


def coates_wiles(k: int, f) -> RatFun:
    """delta_k(f) = [x^(k-1)] (dlog f)(e_C(x)), exact in F."""
    if k < 1:
        raise ValueError("index must be >= 1")
    return dlog_exp_series(f, k + 1).coefficient(k - 1)


# -- the reciprocity-law verifier ------------------------------------------------

@dataclass(frozen=True)
class CWRow:
    k: int
    lhs: RatFun
    rhs: RatFun
    equal: bool


@dataclass(frozen=True)
class CWReport:
    """Row-by-row comparison delta_k(c(a,b)) vs (a^k - b^k) BC_k/Pi(k)."""

    q: int
    a: Poly
    b: Poly
    rows: list[CWRow] = field(default_factory=list)
    pi: Poly | None = None

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "a": str(self.a),
            "b": str(self.b),
            "rows": [
                {"k": r.k, "lhs": str(r.lhs), "rhs": str(r.rhs),
                 "equal": r.equal}
                for r in self.rows
            ],
        }


def cw_verify(a: Poly, b: Poly, kmax: int, threads: int | None = None) -> CWReport:
    """Run the identity for k = 1..kmax; one exponential composition total,
    then independent closed-form values per row."""
    fq = a.ring
    if not isinstance(fq, Fq):
        raise TypeError("indices must be polynomials over F_q")
    if b.ring != fq:
        raise ValueError("mixed coefficient fields")
    if a.is_zero() or b.is_zero():
        raise ValueError("both indices must be nonzero")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    F = base_field(fq)
    ser = dlog_exp_series(cyclotomic_unit_series(a, b), kmax + 2)
    av, bv = F.coerce(a), F.coerce(b)

    def row(k: int) -> CWRow:
        lhs = ser.coefficient(k - 1)
        bc = bernoulli_carlitz(k, fq)
        rhs = (av ** k - bv ** k) * bc.value / F.coerce(bc.factorial)
        return CWRow(k, lhs, rhs, lhs == rhs)

    ks = range(1, kmax + 1)
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, ks))
    else:
        rows = [row(k) for k in ks]
    return CWReport(q=fq.q, a=a, b=b, rows=rows)

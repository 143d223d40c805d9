"""Special values of the Carlitz-Goss zeta function and Stickelberger-type
group-ring series.

For A = F_q[T] the zeta values at negative integers are the finite sums

    zeta_A(-k) = sum_{d >= 0} S_d(k),   S_d(k) = sum_{a monic, deg a = d} a^k,

which lie in A because S_d(k) = 0 once d(q-1) > k.  The v-adic variant
removes the Euler factor at a finite prime, and the positive-k values are
expanded as series in t = 1/T.  Stickelberger-type elements live in the
integral group ring Z[(A/pi^n)^*] and are assembled degree by degree from
the classes of monic polynomials prime to a finite set of places.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cmod import bernoulli_carlitz
from .errors import CharacterError, PrecisionError, TailError
from .fq import Fq
from .groupring import CharSpec, CycIntRing, GroupRing, GroupRingElem, character_table
from .poly import Poly, is_irreducible, monic_enumerate, poly_to_str
from .series import TruncSeries


# -- power sums over monic polynomials ---------------------------------------

def power_sum(d: int, k: int, fq: Fq) -> Poly:
    """S_d(k) = sum of a^k over the q^d monic polynomials of degree d.

    Expanding a = T^d + c_{d-1} T^{d-1} + ... + c_0 multinomially and summing
    each free coefficient over F_q kills every term in which some c_i carries
    an exponent that is zero or not a positive multiple of q - 1 (the sum of
    c^j over F_q is -1 for such j and 0 otherwise).  What survives is

        S_d(k) = (-1)^d sum multinom(k; k_0,...,k_{d-1}, r) T^{dr + sum i k_i}

    over tuples with each k_i a positive multiple of q - 1 and r = k - sum k_i
    >= 0.  The sum is empty once d(q-1) > k, so S_d(k) = 0 there.
    """
    if d < 0 or k < 0:
        raise ValueError("need d >= 0 and k >= 0")
    if d == 0:
        return Poly(fq, "T", [fq.one])
    p, q = fq.p, fq.q
    step = q - 1
    acc: dict[int, int] = {}

    def descend(i: int, remaining: int, texp: int, mult: int) -> None:
        if i == d:
            e = texp + d * remaining
            acc[e] = (acc.get(e, 0) + mult) % p
            return
        slots_left = d - i - 1
        j = step
        while remaining - j >= slots_left * step:
            descend(i + 1, remaining - j, texp + i * j,
                    mult * math.comb(remaining, j) % p)
            j += step

    descend(0, k, 0, 1)
    sign = pow(p - 1, d, p)
    if not acc:
        return Poly(fq, "T", [])
    top = max(acc)
    coeffs = [fq.from_int(sign * acc.get(e, 0)) for e in range(top + 1)]
    return Poly(fq, "T", coeffs)


def power_sum_enum(d: int, k: int, fq: Fq) -> Poly:
    """S_d(k) by literal enumeration.  Oracle for power_sum; exponential in d."""
    total = Poly(fq, "T", [])
    for a in monic_enumerate(fq, d):
        total = total + a ** k
    return total


# -- zeta special values ------------------------------------------------------

def zeta_neg(k: int, fq: Fq, threads: int | None = None) -> Poly:
    """zeta_A(-k) = sum_d S_d(k) as an element of A = F_q[T].

    Strata with d(q-1) > k vanish; the sweep still computes every stratum up
    to d = k + 2 and checks the vanishing instead of assuming it.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    dmax = k + 2
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            strata = list(ex.map(lambda d: power_sum(d, k, fq), range(dmax + 1)))
    else:
        strata = [power_sum(d, k, fq) for d in range(dmax + 1)]
    total = Poly(fq, "T", [])
    for d, s in enumerate(strata):
        assert d * (fq.q - 1) <= k or s.is_zero(), \
            f"stratum d={d} fails the vanishing bound for k={k}"
        total = total + s
    return total


def zeta_v_adic_neg(k: int, pi: Poly) -> Poly:
    """The v-adic value (1 - pi^k) zeta_A(-k) at the place v = (pi).

    Computed twice: once through zeta_neg, once by enumerating monic
    polynomials prime to pi through degree k/(q-1) + deg(pi) + 1 (strata
    beyond that are differences of two vanishing power sums, which the
    function checks stratum by stratum up to k + 2).  A mismatch between the
    two routes is an arithmetic bug, not bad input.
    """
    fq = pi.ring
    if k < 1:
        raise ValueError("need k >= 1")
    if not (pi.is_monic() and is_irreducible(pi)):
        raise ValueError("pi must be monic irreducible")
    q, e = fq.q, pi.degree
    pik = pi ** k
    one = Poly(fq, pi.var, [fq.one])
    direct = (one - pik) * zeta_neg(k, fq)

    dbound = k // (q - 1) + e + 1
    total = Poly(fq, pi.var, [])
    for d in range(dbound + 1):
        for a in monic_enumerate(fq, d):
            if not (a % pi).is_zero():
                total = total + a ** k
    for d in range(dbound + 1, k + 3):
        s = power_sum(d, k, fq)
        s_low = power_sum(d - e, k, fq) if d >= e else Poly(fq, pi.var, [])
        assert (s - pik * s_low).is_zero(), \
            f"coprime stratum d={d} fails to vanish for k={k}"
    assert direct == total, "Euler-factor route disagrees with enumeration"
    return direct


def zeta_pos_trunc(k: int, fq: Fq, dmax: int, prec: int) -> TruncSeries:
    """zeta_A(k) = sum over monic a of 1/a^k as a series in t = 1/T.

    Each monic a of degree d is T^d u_a(t) with u_a a unit in F_q[[t]], so
    the stratum contributes t^{dk} sum u_a^{-k}.  Summing strata d <= dmax
    certifies the expansion only up to t^{(dmax+1)k}; a request beyond that
    bound raises PrecisionError rather than returning uncertified digits.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if dmax < 0:
        raise ValueError("need dmax >= 0")
    cap = (dmax + 1) * k
    if prec > cap:
        raise PrecisionError(
            f"strata through degree {dmax} certify only {cap} coefficients",
            needed=prec)
    if prec < 1:
        raise ValueError("need prec >= 1")
    total = TruncSeries(fq, "t", 0, [], prec)
    for d in range(dmax + 1):
        if d * k >= prec:
            break
        rel = prec - d * k
        for a in monic_enumerate(fq, d):
            unit = TruncSeries(fq, "t", 0, [a.coeff(d - i) for i in range(d + 1)],
                               None)
            total = total + (unit.truncate(rel).invert() ** k).shift(d * k)
    return total


# -- Stickelberger-type group-ring series -------------------------------------

def stickelberger_coefficient(pi: Poly, level: int, s_finite, n: int) -> GroupRingElem:
    """Degree-n coefficient before any auxiliary-place modification: the sum
    of [a mod pi^level] over monic a of degree n prime to every member of
    s_finite."""
    ring = GroupRing(pi, level)
    acc: dict = {}
    for a in monic_enumerate(pi.ring, n, pi.var):
        if any((a % v).is_zero() for v in s_finite):
            continue
        key = ring.key(a)
        acc[key] = acc.get(key, 0) + 1
    return GroupRingElem(ring, acc)


class ThetaPoly:
    """A polynomial in u with coefficients in Z[(A/pi^level)^*].

    Built by stickelberger_series: the coefficient of u^n collects the
    classes of monic polynomials of degree n prime to S, then each auxiliary
    place v multiplies by (1 - [v] q^{deg v} u^{deg v}) to force the series
    to terminate.
    """

    __slots__ = ("ring", "pi", "level", "s_finite", "t_aux", "coeffs")

    def __init__(self, ring: GroupRing, s_finite, t_aux, coeffs) -> None:
        self.ring = ring
        self.pi = ring.pi
        self.level = ring.n
        self.s_finite = tuple(s_finite)
        self.t_aux = tuple(t_aux)
        self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> GroupRingElem:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.zero()

    def at_one(self) -> GroupRingElem:
        """Evaluate at u = 1."""
        total = self.ring.zero()
        for c in self.coeffs:
            total = total + c
        return total

    def project(self, m: int) -> "ThetaPoly":
        """Push every coefficient down to Z[(A/pi^m)^*]."""
        target = GroupRing(self.pi, m)
        return ThetaPoly(target, self.s_finite, self.t_aux,
                         [c.project(m) for c in self.coeffs])

    def eval_char(self, spec: CharSpec) -> Poly:
        """Apply a character coefficientwise; the result is a polynomial in u
        over Z[x]/(Phi_m) for m the character order."""
        ring = CycIntRing(spec.order)
        table = character_table(self.ring, spec)
        out = []
        for c in self.coeffs:
            acc = ring.zero
            for key, coef in c.items():
                e = table.get(key)
                if e is None:
                    raise CharacterError(
                        f"character generators do not reach [{key}]")
                acc = acc + ring.root(e) * ring.coerce(coef)
            out.append(acc)
        return Poly(ring, "u", out)

    def as_dict(self) -> dict:
        fq = self.pi.ring
        places = [poly_to_str(v) for v in self.s_finite] + ["inf"]
        return {
            "q": fq.q,
            "pi": poly_to_str(self.pi),
            "level": self.level,
            "S": places,
            "T": [poly_to_str(v) for v in self.t_aux],
            "coeffs": [
                {"u": n,
                 "terms": [{"rep": poly_to_str(key), "c": coef}
                           for key, coef in c.items()]}
                for n, c in enumerate(self.coeffs)
            ],
        }

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ThetaPoly) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.coeffs)))

    def __repr__(self) -> str:
        inner = " + ".join(f"({c!r})*u^{n}" for n, c in enumerate(self.coeffs))
        return inner or "0"


def stickelberger_series(pi: Poly, level: int, s_extra=(), t_aux=(),
                         udeg: int = 12, threads: int | None = None) -> ThetaPoly:
    """The modified Stickelberger element at level pi^level as a ThetaPoly.

    S consists of pi, the infinite place, and any extra finite places; the
    raw series sums [a mod pi^level] u^{deg a} over monic a prime to the
    finite part of S.  Multiplying by (1 - [v] q^{deg v} u^{deg v}) for each
    auxiliary place v in t_aux turns the series into a polynomial.  The last
    B = level deg(pi) + sum deg(v) + 2 coefficients through degree udeg must
    come out zero; anything else raises TailError (the bound udeg is too
    small to certify termination, or the input does not terminate).
    """
    fq = pi.ring
    if not (pi.is_monic() and is_irreducible(pi)):
        raise ValueError("pi must be monic irreducible")
    if level < 1:
        raise ValueError("need level >= 1")
    s_finite = [pi]
    for v in s_extra:
        if not (v.is_monic() and is_irreducible(v)):
            raise ValueError("members of S must be monic irreducible")
        if v not in s_finite:
            s_finite.append(v)
    t_list = []
    for v in t_aux:
        if not (v.is_monic() and is_irreducible(v)):
            raise ValueError("members of T must be monic irreducible")
        if v in s_finite:
            raise ValueError("S and T must be disjoint")
        if v not in t_list:
            t_list.append(v)
    s_finite.sort(key=lambda v: v.sort_key())
    t_list.sort(key=lambda v: v.sort_key())

    tail = level * pi.degree + sum(v.degree for v in t_list) + 2
    if udeg < tail:
        raise TailError(
            f"degree bound {udeg} is below the tail window {tail}; raise it")

    ring = GroupRing(pi, level)
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            coeffs = list(ex.map(
                lambda n: stickelberger_coefficient(pi, level, s_finite, n),
                range(udeg + 1)))
    else:
        coeffs = [stickelberger_coefficient(pi, level, s_finite, n)
                  for n in range(udeg + 1)]

    for v in t_list:
        qd = fq.q ** v.degree
        gv = ring.element(v)
        out = []
        for n in range(udeg + 1):
            c = coeffs[n]
            if n >= v.degree:
                c = c - (gv * coeffs[n - v.degree]).scale(qd)
            out.append(c)
        coeffs = out

    for n in range(udeg - tail + 1, udeg + 1):
        if not coeffs[n].is_zero():
            raise TailError(
                f"coefficient of u^{n} is nonzero inside the tail window; "
                f"the series does not terminate by degree {udeg}")
    return ThetaPoly(ring, s_finite, t_list, coeffs)


# -- irregularity scan --------------------------------------------------------

@dataclass(frozen=True)
class OkadaReport:
    q: int
    pi: Poly
    kmax: int
    irregular: tuple[int, ...]
    denominator_hits: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "pi": poly_to_str(self.pi),
            "kmax": self.kmax,
            "irregular": list(self.irregular),
            "denominator_hits": list(self.denominator_hits),
        }


def okada_report(pi: Poly) -> OkadaReport:
    """Scan k in [1, q^{deg pi} - 2] with (q-1) | k for Bernoulli-Carlitz
    numerators divisible by pi (the irregular indices).  Indices where pi
    divides the denominator are reported separately rather than counted."""
    fq = pi.ring
    if not (pi.is_monic() and is_irreducible(pi)):
        raise ValueError("pi must be monic irreducible")
    kmax = fq.q ** pi.degree - 2
    irregular = []
    den_hits = []
    for k in range(1, kmax + 1):
        if k % (fq.q - 1) != 0:
            continue
        bc = bernoulli_carlitz(k, fq)
        if bc.value.is_zero():
            irregular.append(k)
            continue
        if bc.value.den.valuation(pi) > 0:
            den_hits.append(k)
        elif bc.value.num.valuation(pi) > 0:
            irregular.append(k)
    return OkadaReport(fq.q, pi, kmax, tuple(irregular), tuple(den_hits))

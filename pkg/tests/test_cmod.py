import random

import pytest

from carlitz.cmod import (
    SkewPoly, bernoulli_carlitz, bracket, carlitz_exp, carlitz_factorial,
    carlitz_log, carlitz_phi, d_sequence, l_sequence, omega_minpoly,
    torsion_poly,
)
from carlitz.fq import Fq, FqElem
from carlitz.poly import Poly, is_irreducible, monic_enumerate, poly_parse
from carlitz.ratfun import base_field
from carlitz.series import TruncSeries


def rand_poly(rng, fq, deg):
    return Poly(fq, "T", [FqElem(fq, rng.randrange(fq.q)) for _ in range(deg + 1)])


def test_skew_multiplication_twists_scalars():
    f3 = Fq.get(3)
    t = poly_parse("T", f3)
    tau = SkewPoly(f3, [Poly(f3, "T", []), Poly(f3, "T", [f3.one])])
    c = SkewPoly.const(f3, t)
    left = tau * c   # tau T = T^3 tau
    right = c * tau  # T tau
    assert left.coeff(1) == t ** 3
    assert right.coeff(1) == t
    assert left != right


def test_phi_T_is_the_defining_operator():
    f3 = Fq.get(3)
    phi_t = carlitz_phi(poly_parse("T", f3))
    assert phi_t.coeff(0) == poly_parse("T", f3)
    assert phi_t.coeff(1) == Poly(f3, "T", [f3.one])
    assert phi_t.tau_degree == 1


def test_phi_is_ring_homomorphism():
    rng = random.Random(41)
    for q in (2, 3, 4):
        fq = Fq.get(q)
        for _ in range(8):
            a = rand_poly(rng, fq, rng.randrange(4))
            b = rand_poly(rng, fq, rng.randrange(4))
            assert carlitz_phi(a + b) == carlitz_phi(a) + carlitz_phi(b)
            assert carlitz_phi(a * b) == carlitz_phi(a) * carlitz_phi(b)
            assert carlitz_phi(a * b) == carlitz_phi(b) * carlitz_phi(a)


def test_phi_degree_and_leading_coefficient():
    f2 = Fq.get(2)
    a = poly_parse("T^3+T+1", f2)
    sk = carlitz_phi(a)
    assert sk.tau_degree == 3
    assert sk.coeff(3) == Poly(f2, "T", [f2.one])  # monic a gives leading 1
    assert sk.coeff(0) == a


def test_torsion_poly_degree_and_additivity():
    f2 = Fq.get(2)
    pi = poly_parse("T^2+T+1", f2)
    for n in (1, 2):
        p = torsion_poly(pi, n)
        assert p.degree == 2 ** (2 * n)
        # additive polynomials have support only at q-power exponents
        for e, c in enumerate(p.coeffs):
            if not c.is_zero():
                assert e & (e - 1) == 0  # power of 2


def test_omega_minpoly_divides_torsion_tower():
    for q in (2, 3):
        fq = Fq.get(q)
        for pi in [p for d in (1, 2) for p in monic_enumerate(fq, d) if is_irreducible(p)]:
            for n in (1, 2):
                m = omega_minpoly(pi, n)
                below = torsion_poly(pi, n - 1) if n > 1 else Poly.gen(
                    m.ring, m.var)
                assert m * below == torsion_poly(pi, n)
                assert m.is_monic()
                assert m.constant == pi
                for c in m.coeffs[:-1]:
                    assert (c % pi).is_zero()  # Eisenstein


def test_brackets_and_factorial_sequences():
    f3 = Fq.get(3)
    t = poly_parse("T", f3)
    assert bracket(f3, 1) == t ** 3 - t
    assert bracket(f3, 2) == t ** 9 - t
    ds = d_sequence(f3, 3)
    assert ds[0] == Poly(f3, "T", [f3.one])
    assert ds[1] == bracket(f3, 1)
    assert ds[2] == bracket(f3, 2) * ds[1] ** 3
    ls = l_sequence(f3, 3)
    assert ls[2] == bracket(f3, 2) * bracket(f3, 1)


def test_factorial_digit_product():
    f3 = Fq.get(3)
    ds = d_sequence(f3, 3)
    # 14 = 112 base 3
    assert carlitz_factorial(14, f3) == ds[0] ** 2 * ds[1] ** 1 * ds[2] ** 1
    assert carlitz_factorial(0, f3) == Poly(f3, "T", [f3.one])
    for i in range(3):
        assert carlitz_factorial(3 ** i, f3) == ds[i]


def test_exp_coefficients_are_inverse_factorials():
    for q in (2, 3):
        fq = Fq.get(q)
        F = base_field(fq)
        e = carlitz_exp(fq, q ** 2 + 1)
        ds = d_sequence(fq, 3)
        for i in range(3):
            if q ** i < q ** 2 + 1:
                assert e.coefficient(q ** i) == F.one / F.coerce(ds[i])
        # everything off the q-power lattice vanishes
        for n in range(1, q ** 2 + 1):
            if n not in (q ** 0, q ** 1, q ** 2):
                assert e.coefficient(n).is_zero()


def test_exp_satisfies_the_functional_equation():
    for q in (2, 3):
        fq = Fq.get(q)
        F = base_field(fq)
        T = F.coerce(poly_parse("T", fq))
        e = carlitz_exp(fq, 12)
        lhs = e.mul_scalar(T) + e ** q
        assert lhs.agrees_with(e.scale_argument(T))


def test_log_is_compositional_inverse():
    for q in (2, 3):
        fq = Fq.get(q)
        e = carlitz_exp(fq, 11)
        lam = carlitz_log(fq, 11)
        z = TruncSeries.monomial(e.ring, "z", 1, 1, 11)
        assert e.compose(lam).agrees_with(z)
        assert lam.compose(e).agrees_with(z)


def test_log_coefficients_alternate_over_l_sequence():
    f3 = Fq.get(3)
    F = base_field(f3)
    lam = carlitz_log(f3, 10)
    ls = l_sequence(f3, 3)
    assert lam.coefficient(1) == F.one
    assert lam.coefficient(3) == -(F.one / F.coerce(ls[1]))
    assert lam.coefficient(9) == F.one / F.coerce(ls[2])


def test_bernoulli_known_values_q2():
    # from 1/e = z^-1 (1 - g + g^2 - ...) with g = z/D_1 + z^3/D_2 + ...:
    # BC_1 = 1/D_1 and BC_2 = Pi(2)/D_1^2 = 1/D_1
    f2 = Fq.get(2)
    F = base_field(f2)
    d1 = F.coerce(d_sequence(f2, 2)[1])
    assert bernoulli_carlitz(1, f2).value == F.one / d1
    assert bernoulli_carlitz(2, f2).value == F.one / d1
    assert bernoulli_carlitz(0, f2).value == F.one


def test_bernoulli_known_values_q3():
    # [z^1](1/e) = -1/D_1, [z^3](1/e) = 1/D_1^2, [z^5](1/e) = -1/D_1^3,
    # with Pi(2) = 1, Pi(4) = D_1, Pi(6) = D_1^2
    f3 = Fq.get(3)
    F = base_field(f3)
    d1 = F.coerce(d_sequence(f3, 2)[1])
    assert bernoulli_carlitz(2, f3).value == -(F.one / d1)
    assert bernoulli_carlitz(4, f3).value == F.one / d1
    assert bernoulli_carlitz(6, f3).value == -(F.one / d1)


def test_bernoulli_vanishing_and_factorials():
    for q in (3, 4):
        fq = Fq.get(q)
        for n in range(1, 12):
            bc = bernoulli_carlitz(n, fq)
            if n % (q - 1) != 0:
                assert bc.value.is_zero()
            assert bc.factorial == carlitz_factorial(n, fq)


def test_minpoly_rejects_reducible_modulus():
    f2 = Fq.get(2)
    with pytest.raises(ValueError):
        omega_minpoly(poly_parse("T^2+1", f2), 1)  # (T+1)^2
    with pytest.raises(ValueError):
        torsion_poly(poly_parse("T^2", f2), 1)

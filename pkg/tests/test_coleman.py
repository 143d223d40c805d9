import random

import pytest

from carlitz.coleman import (
    ColemanSeries, coleman_norm, cyclotomic_unit_series, decompose_by_phi,
    eval_at_omega, phi_poly, star_action, x_field,
)
from carlitz.cyclo import CycloField, cyclotomic_unit, galois_act
from carlitz.errors import DecompositionError, PrecisionError
from carlitz.fq import Fq
from carlitz.poly import Poly, poly_parse
from carlitz.series import TruncSeries


def rand_xpoly(rng, fq, deg, nonzero_const=False):
    Fb = x_field(fq).cring
    coeffs = [Fb.coerce(rng.randrange(fq.q)) for _ in range(deg + 1)]
    if nonzero_const and coeffs[0].is_zero():
        coeffs[0] = Fb.one
    if coeffs[deg].is_zero():
        coeffs[deg] = Fb.one
    return Poly(Fb, "x", coeffs)


def test_norm_against_literal_torsion_product():
    # For q = 2, pi = T the pi-torsion of x^2 + T x is rational: {0, T}.
    # So (N f)(phi_T(x)) must literally equal f(x) * f(x + T).
    rng = random.Random(20)
    f2 = Fq.get(2)
    pi = poly_parse("T", f2)
    xf = x_field(f2)
    phi = phi_poly(pi)
    shift = Poly.gen(xf.cring, "x") + Poly(xf.cring, "x",
                                           [xf.cring.coerce(pi)])
    for _ in range(10):
        num = rand_xpoly(rng, f2, rng.randrange(1, 4), nonzero_const=True)
        den = rand_xpoly(rng, f2, rng.randrange(1, 4), nonzero_const=True)
        f = ColemanSeries(xf.from_pair(num, den), pi)
        nf = coleman_norm(f).value
        lhs = xf.from_pair(nf.num.compose(phi), nf.den.compose(phi))
        rhs = xf.from_pair(num * num.compose(shift), den * den.compose(shift))
        assert lhs == rhs


def test_norm_fixes_phi_a_for_a_prime_to_pi():
    f2 = Fq.get(2)
    for pi_text in ("T", "T^2+T+1"):
        pi = poly_parse(pi_text, f2)
        for a_text in ("T", "T+1", "T^2", "T^2+T+1"):
            a = poly_parse(a_text, f2)
            if (a % pi).is_zero():
                continue
            f = ColemanSeries(phi_poly(a), pi)
            assert coleman_norm(f) == f


def test_norm_is_multiplicative():
    rng = random.Random(7)
    f3 = Fq.get(3)
    pi = poly_parse("T", f3)
    xf = x_field(f3)
    for _ in range(8):
        a = ColemanSeries(xf.from_pair(
            rand_xpoly(rng, f3, 2, True), rand_xpoly(rng, f3, 2, True)), pi)
        b = ColemanSeries(xf.from_pair(
            rand_xpoly(rng, f3, 2, True), rand_xpoly(rng, f3, 2, True)), pi)
        assert coleman_norm(a * b) == coleman_norm(a) * coleman_norm(b)


def test_norm_splits_off_x_powers():
    # N(x^v g) = x^v N(g): the norm of x is x itself
    f2 = Fq.get(2)
    pi = poly_parse("T^2+T+1", f2)
    xf = x_field(f2)
    x = Poly.gen(xf.cring, "x")
    g = phi_poly(poly_parse("T+1", f2))
    lhs = coleman_norm(ColemanSeries(xf.coerce(x ** 3 * g), pi))
    rhs = ColemanSeries(xf.coerce(x ** 3), pi) * \
        coleman_norm(ColemanSeries(xf.coerce(g), pi))
    assert lhs == rhs


def test_norm_on_truncated_series_keeps_precision():
    f2 = Fq.get(2)
    pi = poly_parse("T", f2)
    g = phi_poly(poly_parse("T+1", f2))
    exact = coleman_norm(ColemanSeries(g, pi))
    trunc = ColemanSeries(TruncSeries.from_poly(g).truncate(8), pi)
    out = coleman_norm(trunc)
    assert not out.is_exact()
    assert out.value.prec == 8
    assert exact.value.num.degree <= 8  # tail actually visible at this prec
    assert out.value.agrees_with(exact.as_series(8))


def test_decompose_by_phi_roundtrip():
    rng = random.Random(77)
    f3 = Fq.get(3)
    pi = poly_parse("T+1", f3)
    phi = phi_poly(pi)
    for _ in range(8):
        h = rand_xpoly(rng, f3, rng.randrange(4))
        assert decompose_by_phi(h.compose(phi), pi) == h


def test_decompose_by_phi_failures():
    f2 = Fq.get(2)
    pi = poly_parse("T", f2)
    xf = x_field(f2)
    x = Poly.gen(xf.cring, "x")
    with pytest.raises(DecompositionError):
        decompose_by_phi(x ** 3, pi)  # odd degree
    with pytest.raises(DecompositionError):
        decompose_by_phi(x ** 2, pi)  # x^2 alone is not h(x^2 + Tx)
    bad = TruncSeries(xf.cring, "x", -1, [xf.cring.one], 3)
    with pytest.raises(DecompositionError):
        decompose_by_phi(bad, pi)


def test_star_action_composes_phi():
    f2 = Fq.get(2)
    pi = poly_parse("T^2+T+1", f2)
    a = poly_parse("T", f2)
    b = poly_parse("T+1", f2)
    f = cyclotomic_unit_series(poly_parse("T", f2), poly_parse("1", f2), pi)
    ab = star_action(a, star_action(b, f))
    assert ab == star_action(a * b, f)


def test_star_action_on_truncated_series():
    f2 = Fq.get(2)
    pi = poly_parse("T", f2)
    a = poly_parse("T+1", f2)
    g = phi_poly(poly_parse("T^2+T+1", f2))
    exact = star_action(a, ColemanSeries(g, pi))
    trunc = star_action(a, ColemanSeries(TruncSeries.from_poly(g).truncate(9), pi))
    assert trunc.value.agrees_with(exact.as_series(trunc.value.prec))


def test_eval_at_omega_gives_cyclotomic_units():
    for q in (2, 3):
        fq = Fq.get(q)
        pi = poly_parse("T", fq)
        a = poly_parse("T+1", fq)
        b = Poly(fq, "T", [fq.one])
        for n in (1, 2):
            field = CycloField.get(pi, n)
            f = cyclotomic_unit_series(a, b, pi)
            assert eval_at_omega(f, n) == cyclotomic_unit(a, b, field)


def test_eval_at_omega_matches_galois_action():
    f2 = Fq.get(2)
    pi = poly_parse("T^2+T+1", f2)
    field = CycloField.get(pi, 1)
    a = poly_parse("T", f2)
    f = ColemanSeries(phi_poly(a), pi)
    assert eval_at_omega(f, 1) == galois_act(a, field.omega)


def test_eval_at_omega_precision_gate():
    f2 = Fq.get(2)
    pi = poly_parse("T^2+T+1", f2)
    field = CycloField.get(pi, 1)
    g = phi_poly(poly_parse("T+1", f2))
    short = ColemanSeries(TruncSeries.from_poly(g).truncate(field.degree - 1), pi)
    with pytest.raises(PrecisionError):
        eval_at_omega(short, 1)
    enough = ColemanSeries(TruncSeries.from_poly(g).truncate(field.degree), pi)
    exact = ColemanSeries(g, pi)
    # the representative is a polynomial of degree < deg m_1, so truncation
    # at the field degree loses nothing
    assert g.degree < field.degree
    assert eval_at_omega(enough, 1) == eval_at_omega(exact, 1)


def test_mixed_prime_arithmetic_rejected():
    f2 = Fq.get(2)
    g = phi_poly(poly_parse("T", f2))
    a = ColemanSeries(g, poly_parse("T", f2))
    b = ColemanSeries(g, poly_parse("T+1", f2))
    with pytest.raises(ValueError):
        a * b
    assert (a * ColemanSeries(g)).pi == poly_parse("T", f2)


def test_norm_requires_a_prime():
    f2 = Fq.get(2)
    f = ColemanSeries(phi_poly(poly_parse("T", f2)))
    with pytest.raises(ValueError):
        coleman_norm(f)

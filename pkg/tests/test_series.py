import random

import pytest

from carlitz.errors import PrecisionError
from carlitz.fq import Fq, FqElem
from carlitz.poly import Poly, poly_parse
from carlitz.series import TruncSeries


def rand_series(rng, fq, order, n, prec):
    return TruncSeries(fq, "z", order,
                       [FqElem(fq, rng.randrange(fq.q)) for _ in range(n)], prec)


def test_normalization():
    f3 = Fq.get(3)
    s = TruncSeries(f3, "z", 2, [f3.zero, f3.one, f3.zero], None)
    assert s.order == 3 and len(s.coeffs) == 1
    z = TruncSeries(f3, "z", 5, [f3.zero], 9)
    assert z.is_zero() and z.prec == 9


def test_coefficient_beyond_precision_raises():
    f2 = Fq.get(2)
    s = TruncSeries(f2, "z", 0, [f2.one], 4)
    assert s.coefficient(3) == f2.zero
    with pytest.raises(PrecisionError) as ei:
        s.coefficient(4)
    assert ei.value.needed == 5
    exact = TruncSeries(f2, "z", 0, [f2.one], None)
    assert exact.coefficient(100) == f2.zero  # exact data answers everything


def test_mul_precision_rule():
    f3 = Fq.get(3)
    # prec(fg) = min(ord f + prec g, ord g + prec f)
    f = TruncSeries(f3, "z", 2, [f3.one, f3.one], 7)
    g = TruncSeries(f3, "z", 1, [f3.one], 5)
    assert (f * g).prec == min(2 + 5, 1 + 7)
    assert (f * g).order == 3


def test_invert_precision_and_laurent():
    f3 = Fq.get(3)
    s = TruncSeries(f3, "z", 2, [f3.one, f3.from_int(2), f3.one], 8)
    inv = s.invert()
    assert inv.order == -2
    assert inv.prec == 8 - 2 * 2
    prod = s * inv
    one = TruncSeries.one(f3, "z")
    assert prod.agrees_with(one)


def test_invert_exact_polynomial_must_truncate_first():
    f2 = Fq.get(2)
    s = TruncSeries(f2, "z", 0, [f2.one, f2.one], None)  # 1 + z exactly
    with pytest.raises(ValueError):
        s.invert()
    assert s.truncate(6).invert().prec == 6
    # pure monomials invert exactly
    m = TruncSeries.monomial(f2, "z", 1, 3, None)
    assert m.invert().order == -3 and m.invert().prec is None


def test_compose_matches_polynomial_substitution():
    rng = random.Random(21)
    f3 = Fq.get(3)
    for _ in range(15):
        outer_poly = Poly(f3, "z", [FqElem(f3, rng.randrange(3)) for _ in range(5)])
        inner_poly = Poly(f3, "z", [f3.zero, FqElem(f3, rng.randrange(1, 3))]
                          + [FqElem(f3, rng.randrange(3)) for _ in range(2)])
        prec = 9
        outer = TruncSeries.from_poly(outer_poly, prec)
        inner = TruncSeries.from_poly(inner_poly, prec)
        direct = TruncSeries.from_poly(outer_poly.compose(inner_poly), None).truncate(prec)
        assert outer.compose(inner).agrees_with(direct)


def test_compose_precision_capped_by_inner_order():
    f2 = Fq.get(2)
    outer = TruncSeries(f2, "z", 0, [f2.one] * 4, 4)
    inner = TruncSeries(f2, "z", 2, [f2.one], None)  # z^2 exact
    out = outer.compose(inner)
    assert out.prec == 2 * 4


def test_compose_requires_positive_inner_order():
    f2 = Fq.get(2)
    outer = TruncSeries(f2, "z", 0, [f2.one], 4)
    bad = TruncSeries(f2, "z", 0, [f2.one], 4)
    with pytest.raises(ValueError):
        outer.compose(bad)


def test_laurent_compose_inverts_through_negative_powers():
    f3 = Fq.get(3)
    # f = z^-1 + 1, g = z + z^2: f(g) = 1/(z+z^2) + 1
    f = TruncSeries(f3, "z", -1, [f3.one, f3.one], 5)
    g = TruncSeries(f3, "z", 1, [f3.one, f3.one], 6)
    got = f.compose(g)
    direct = g.invert() + TruncSeries.one(f3, "z", 5)
    assert got.agrees_with(direct, upto=min(got.prec, direct.prec))


def test_derivative_and_shift():
    f5 = Fq.get(5)
    s = TruncSeries(f5, "z", -2, [f5.from_int(3), f5.zero, f5.from_int(1)], 4)
    d = s.derivative()
    assert d.coefficient(-3) == f5.from_int(-6 % 5)
    assert d.prec == 3
    sh = s.shift(4)
    assert sh.order == 2 and sh.prec == 8


def test_scale_argument():
    f5 = Fq.get(5)
    s = TruncSeries(f5, "z", 0, [f5.one, f5.one, f5.one], 5)
    t = s.scale_argument(f5.from_int(2))
    assert t.coefficient(2) == f5.from_int(4)


def test_add_alignment_and_cancellation():
    f2 = Fq.get(2)
    a = TruncSeries(f2, "z", 0, [f2.one, f2.one], 6)
    b = TruncSeries(f2, "z", 0, [f2.one], 8)
    c = a + b  # constant terms cancel in char 2
    assert c.order == 1 and c.prec == 6

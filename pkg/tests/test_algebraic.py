from fractions import Fraction

import pytest

from surfsym.arith import upoly
from surfsym.arith.algebraic import AlgElem, NumberField, eval_poly, same_value

from conftest import uv


def sqrt2():
    return NumberField([-2, 0, 1], 1, 2).gen()


def test_field_arithmetic():
    a = sqrt2()
    assert a * a == 2
    assert (a + 1) * (a - 1) == 1
    assert Fraction(1) / a == a / 2
    assert (a ** 5) == a * 4
    assert a.rational_value() is None
    assert (a * a).rational_value() == 2


def test_signs_and_order():
    a = sqrt2()
    assert a.sign() == 1
    assert (a - Fraction(3, 2)).sign() == -1
    assert a > Fraction(141, 100) and a < Fraction(142, 100)
    assert abs(float(a) - 2 ** 0.5) < 1e-12


def test_reducible_modulus_splits():
    # (w^2 - 2)(w - 5)(w + 3) with alpha = sqrt 2: zero tests shrink the modulus
    m = upoly.mul(upoly.mul([-2, 0, 1], [-5, 1]), [3, 1])
    K = NumberField(m, 1, 2)
    a = K.gen()
    assert a * a - 2 == 0
    assert K.m == [-2, 0, 1]
    assert a - 5 != 0
    assert Fraction(1) / (a - 5) * (a - 5) == 1


def test_reducible_modulus_cofactor_branch():
    # alpha = 5 is not a root of w^2 - 2, so the zero test keeps the cofactor
    m = upoly.mul([-2, 0, 1], [-7, 0, 1])
    K = NumberField(m, 2, 3)       # sqrt 7
    a = K.gen()
    assert a * a - 2 != 0
    assert K.m == [-7, 0, 1]
    assert a * a == 7


def test_charpoly_and_root_interval():
    a = sqrt2()
    x = a + 1
    assert x.charpoly() == [-1, -2, 1]
    iv = x.root_interval()
    assert iv.exact is None and list(iv.poly) == [-1, -2, 1]
    fine = iv.refine(Fraction(1, 10 ** 4))
    assert Fraction(24141, 10 ** 4) < fine.lo < fine.hi < Fraction(24144, 10 ** 4)


def test_same_value_across_fields():
    a = sqrt2()
    b = NumberField([-8, 0, 1], 2, 3).gen()     # sqrt 8 = 2 sqrt 2
    assert same_value(a * 2, b)
    assert not same_value(a * -2, b)
    assert same_value(a * a, Fraction(2))
    assert same_value(Fraction(1, 2), Fraction(2, 4))


def test_eval_poly_generic():
    a = sqrt2()
    p = uv("u**2 + u*v - 3")
    assert eval_poly(p, {"u": a, "v": a}) == 1
    assert eval_poly(p, {"u": Fraction(1), "v": Fraction(2)}) == 0


def test_bad_interval_rejected():
    with pytest.raises(ValueError):
        NumberField([-2, 0, 1], 2, 3)


def test_monkey_saddle_algebraic_elements(reports):
    from conftest import MONKEY
    from surfsym.classifier import is_zero
    rep = reports("monkey", MONKEY)
    assert len(rep.central) == 1 and rep.central[0].element.center == (0, 0, 0)
    assert len(rep.planar) == 3 and len(rep.axial) == 3
    irrational = [inv for inv in rep.involutions if not inv.exact]
    assert len(irrational) == 4
    for inv in irrational:
        # directions and normals are (1, +-1/sqrt 3, 0)
        vec = inv.element.direction if inv.kind == "axial" else inv.element.normal
        assert vec[0] == 1 and is_zero(vec[2])
        assert vec[1] * vec[1] * 3 == 1
    # the mirror planes and the axes sit at 60 degree steps: each axis is normal to a mirror
    for ax in rep.axial:
        assert any(same(ax.element.direction, pl.element.normal) for pl in rep.planar)


def same(p, q):
    from surfsym.arith.algebraic import same_value
    return all(same_value(a, b) for a, b in zip(p, q))

from fractions import Fraction

import pytest

from tuttelab.poly import MultiPoly
from tuttelab.series import SeriesError, TSeries, fixed_point

y = MultiPoly.var("y")


def geometric(order):
    return TSeries("t", order, [1] * (order + 1))


def test_arithmetic():
    g = geometric(5)
    t = TSeries.t("t", 5)
    assert (1 - t) * g == 1
    assert g - g == TSeries.zero("t", 5)
    assert (g * g).coeff(3) == 4
    assert g ** 2 == g * g


def test_inverse_and_division():
    g = geometric(6)
    assert g.inverse() == 1 - TSeries.t("t", 6)
    assert g / g == 1
    with pytest.raises(SeriesError):
        TSeries.t("t", 3).inverse()


def test_shift_and_divide_by_var():
    t = TSeries.t("t", 4)
    assert t.shift(2).coeff(3) == 1
    assert t.shift(1).divide_by_var(1) == t.truncate(3)
    with pytest.raises(SeriesError):
        geometric(3).divide_by_var(1)


def test_coefficient_operations():
    s = TSeries("t", 2, [1, y + 2, y ** 2])
    assert s.subs({"y": 3}).coeff(2) == 9
    assert s.coeff_of("y", 1).coeff(1) == 1
    assert s.diff_main() == TSeries("t", 1, [y + 2, 2 * y ** 2])
    assert s.positive_part("y") == TSeries("t", 2, [0, y, y ** 2])


def test_truncation_order_tracking():
    a = geometric(6)
    b = geometric(3)
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert a.truncate(3) == b
    assert a != b + TSeries.t("t", 3)


def test_fixed_point_catalan():
    t = TSeries.t("t", 8)
    cat = fixed_point(lambda f: 1 + t * f * f, "t", 8)
    assert [cat.coeff(n).constant_value() for n in range(6)] \
        == [1, 1, 2, 5, 14, 42]


def test_fixed_point_requires_contraction():
    with pytest.raises(SeriesError):
        fixed_point(lambda f: f + 1, "t", 3)


def test_compose_poly():
    t = TSeries.t("t", 5)
    p = MultiPoly.var("u") ** 2 + 1
    assert t.compose_poly(p, "u") == 1 + t * t


def test_eval_with_fractions():
    s = TSeries("t", 2, [Fraction(1, 2), Fraction(1, 3), 1])
    assert (s * 6).coeff(1) == 2
    assert (s / Fraction(1, 2)).coeff(0) == 1

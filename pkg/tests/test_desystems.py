from fractions import Fraction

import pytest

from tuttelab.desystems import (check_de_maps, check_de_tri, check_tutte_ode,
                                solve_de_maps, solve_de_tri, tri_t2_series)


def test_maps_system_small_order():
    assert check_de_maps(Fraction(2), Fraction(2), Fraction(1), 4)
    assert check_de_maps(Fraction(5, 2), Fraction(3), Fraction(1), 4)


def test_maps_system_returns_series():
    A, B, C, m11 = solve_de_maps(Fraction(2), Fraction(2), Fraction(1), 3)
    assert A.order == B.order == C.order == m11.order == 3
    # the map series starts 1 + ... with positive rational coefficients
    assert m11.coeff(0).constant_value() == 1
    assert m11.coeff(1).constant_value() > 0


def test_triangulation_system_small_order():
    assert check_de_tri(Fraction(2), 8)
    assert check_de_tri(Fraction(3), 8)


def test_tutte_ode_small_order():
    assert check_tutte_ode(Fraction(2), 8)
    assert check_tutte_ode(Fraction(3), 8)


def test_t2_series_leading_terms():
    # constant term q(q-1); only even z-powers appear (Euler parity)
    t2 = tri_t2_series(Fraction(3), 6)
    assert t2.coeff(0).constant_value() == 6
    assert all(t2.coeff(n).is_zero() for n in (1, 3, 5))
    assert t2.coeff(2).constant_value() == 6


def test_singular_parameters_raise():
    with pytest.raises(ValueError):
        solve_de_tri(Fraction(4), 4)

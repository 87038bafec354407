from tuttelab import closed_forms as cf
from tuttelab.equations import EquationId, expand
from tuttelab.kernels import (U_series, V_series, check_kernel_solutions,
                              check_tree_rooted, kernel_six_pair_invariance,
                              lagrange_U_coeff, lagrange_V_coeff,
                              trinomial_coeff, trinomial_expansion_check,
                              x_of_u_inverts)


def test_kernel_solution_checks():
    results = check_kernel_solutions(6)
    assert results and all(results.values())


def test_tree_rooted_checks():
    results = check_tree_rooted(6)
    assert results and all(results.values())


def test_substitution_series():
    assert V_series(4).coeff(0).is_zero()
    assert U_series(4).coeff(0).is_zero()
    assert x_of_u_inverts(6)
    assert kernel_six_pair_invariance()


def test_trinomial_expansion():
    assert trinomial_coeff(1, 0, 1) == 2  # u * zy/u, two orderings
    assert trinomial_coeff(1, 0, 0) == 0  # odd parity
    assert trinomial_expansion_check(3, 3)


def test_lagrange_coefficients_match_series():
    V = V_series(5)
    for n in range(1, 6):
        cn = V.coeff(n)
        for i in range(3):
            for j in range(1, 3):
                u_pow = n + 1 - 2 * i - 2 * j
                got = cn.coeff("w", i).coeff("z", j).coeff("u", u_pow)
                assert got.is_constant()
                assert got.constant_value() == lagrange_V_coeff(i, j, n)
    U = U_series(6)
    for n in range(1, 7):
        cn = U.coeff(n)
        for i in range(4):
            got = cn.coeff("y", 3 * i - n + 2)
            assert got.is_constant()
            assert got.constant_value() == lagrange_U_coeff(n, i)


def test_spanning_tree_weighted_maps_series():
    # Tutte polynomial at (1, 1) counts spanning trees
    N = expand(EquationId.TUTTE_MAPS, 3, {"mu": 1, "nu": 1, "w": 1, "z": 1})
    for n in range(4):
        total = N.coeff(n).subs({"x": 1, "y": 1})
        assert total.constant_value() == cf.spanning_tree_series_coeff(n)

import pytest

from tuttelab import closed_forms as cf


def test_maps_count():
    assert [cf.maps_count(n) for n in range(7)] \
        == [1, 2, 9, 54, 378, 2916, 24057]


def test_catalan_and_double_factorial():
    assert [cf.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert cf.odd_double_factorial(7) == 105
    assert cf.odd_double_factorial(0) == 1


def test_blossoming_counts():
    for n in range(6):
        assert cf.blossoming_count(n) == 3 ** n * cf.catalan(n)
        assert (n + 2) * cf.maps_count(n) == 2 * cf.blossoming_count(n)
    assert cf.balanced_blossoming_count(2) == 9


def test_quadrangulation_counts():
    for n in range(1, 6):
        assert cf.quadrangulation_count(n) == cf.maps_count(n)
        assert cf.four_valent_count(n) == cf.maps_count(n)
        assert cf.labelled_tree_count(n) == cf.blossoming_count(n)


def test_tree_rooted_equals_shuffle():
    for i in range(5):
        for j in range(5):
            assert cf.tree_rooted_count(i, j) == cf.shuffle_count(i, j)
    assert cf.tree_rooted_count(1, 1) == 6


def test_spanning_tree_series():
    assert [cf.spanning_tree_series_coeff(n) for n in range(4)] \
        == [1, 2, 10, 70]
    # diagonal sum of the two-index refinement
    for n in range(4):
        assert cf.spanning_tree_series_coeff(n) \
            == sum(cf.tree_rooted_count(i, n - i) for i in range(n + 1))


def test_nt1_small():
    assert cf.nt1_count(0) == 1
    assert cf.nt1_count(1) == 4


def test_tree_rooted_tri_duality():
    for i in range(1, 4):
        for d in range(1, 2 * i + 1):
            assert cf.tree_rooted_tri_count(i, d) \
                == cf.tree_rooted_tri_dual_count(i, d)


def test_bipolar_refinements_sum():
    # summing the refined counts over their ranges recovers the totals
    for n in range(2, 6):
        for m in range(1, n):
            total = cf.bipolar_count(n, m)
            by_j = sum(cf.bipolar_count(n, m, j=j) for j in range(2, m + 2))
            assert by_j == total
    for m in range(1, 4):
        total = cf.bipolar_tri_count(m)
        by_j = sum(cf.bipolar_tri_count(m, j=j) for j in range(2, m + 2))
        assert by_j == total


def test_dispatcher():
    assert cf.closed_form("maps", 2) == 9
    assert cf.closed_form("tree_rooted", 1, 1) == 6
    with pytest.raises(KeyError):
        cf.closed_form("nope", 1)
    with pytest.raises(ValueError):
        cf.closed_form("maps", 1, 2)


def test_argument_validation():
    with pytest.raises(ValueError):
        cf.maps_count(-1)
    with pytest.raises(ValueError):
        cf.tree_rooted_tri_count(1, 3)
    with pytest.raises(ValueError):
        cf.bipolar_count(2, 2)

import pytest

from tuttelab import closed_forms as cf
from tuttelab.generate import (CapExceeded, all_bipolar_orientations,
                               all_maps, all_spanning_trees, bipartite_maps,
                               colouring_sum, count_maps,
                               eulerian_near_triangulations, four_valent,
                               maps_count_formula, near_triangulations,
                               quadrangulations)
from tuttelab.maps import MapError, RootedMap
from tuttelab.poly import MultiPoly
from tuttelab.potts import potts, spanning_tree_count


def test_counts_match_formula():
    for n in range(5):
        assert len(all_maps(n)) == count_maps(n) == maps_count_formula(n)


def test_all_maps_distinct_and_sized():
    for n in range(4):
        maps = all_maps(n)
        assert len({m.code for m in maps}) == len(maps)
        assert all(m.n_edges == n for m in maps)


def test_cap():
    with pytest.raises(CapExceeded):
        all_maps(8)


def test_family_invariants():
    for m in bipartite_maps(3):
        assert m.is_bipartite() and m.n_edges == 3
    for m in quadrangulations(2):
        assert m.is_quadrangulation() and m.n_faces == 2
    for m in four_valent(2):
        assert m.is_4valent() and m.n_vertices == 2
    for m in near_triangulations(4):
        assert m.is_near_triangulation()
    for m in eulerian_near_triangulations(1):
        assert m.is_eulerian() and m.is_near_triangulation()
        assert m.n_edges == 3


def test_quadrangulation_counts():
    for n in range(1, 5):
        assert len(quadrangulations(n)) == cf.quadrangulation_count(n)


def test_spanning_trees_match_tutte():
    for n in range(1, 4):
        for m in all_maps(n):
            assert len(all_spanning_trees(m)) == spanning_tree_count(m)
    with pytest.raises(MapError):
        all_spanning_trees(RootedMap.atomic())


def test_bipolar_orientations():
    # a loop admits none; the link admits exactly one
    assert all_bipolar_orientations(RootedMap.loop()) == []
    assert len(all_bipolar_orientations(RootedMap.link())) == 1


def test_colouring_sum_matches_potts():
    for n in range(3):
        for m in all_maps(n):
            assert colouring_sum(m, 3, 2) == potts(m).eval({"q": 3, "nu": 2})


def test_proper_colourings_of_an_edge():
    m = RootedMap.link()
    # proper colourings of a single edge with q colours: q(q-1)
    q = MultiPoly.var("q")
    assert potts(m).subs({"nu": 0}) == q * (q - 1)
    assert colouring_sum(m, 3, 0) == 6

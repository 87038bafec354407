import pytest

from tuttelab.generate import all_maps
from tuttelab.maps import MapError, RootedMap


def test_constructors():
    assert RootedMap.atomic().is_atomic
    assert RootedMap.loop().n_vertices == 1
    assert RootedMap.loop().n_faces == 2
    assert RootedMap.link().n_vertices == 2
    assert RootedMap.link().n_faces == 1


def test_validation():
    with pytest.raises(MapError):
        RootedMap([0, 1], [1, 0], 0)  # alpha has fixed points
    with pytest.raises(MapError):
        RootedMap([1, 0, 3, 2], [0, 1, 2, 3], 0)  # disconnected
    with pytest.raises(MapError):
        RootedMap([1, 0], [0, 1], 5)  # root out of range


def test_euler_formula():
    for n in range(5):
        for m in all_maps(n):
            assert m.n_vertices - m.n_edges + m.n_faces == 2


def test_json_roundtrip():
    for m in all_maps(3):
        assert RootedMap.from_json(m.to_json()) == m
    with pytest.raises(MapError):
        RootedMap.from_json("not json")
    with pytest.raises(MapError):
        RootedMap.from_json('{"alpha": [1, 0]}')


def test_code_is_label_invariant():
    m = RootedMap([1, 0, 3, 2], [0, 2, 1, 3], 0)
    perm = [2, 3, 0, 1]
    alpha = [0] * 4
    sigma = [0] * 4
    for d in range(4):
        alpha[perm[d]] = perm[m.alpha[d]]
        sigma[perm[d]] = perm[m.sigma[d]]
    assert RootedMap(alpha, sigma, perm[0]) == m
    assert m.relabelled() == m


def test_dual_involution():
    for m in all_maps(3):
        if m.is_atomic:
            continue
        d = m.dual()
        assert d.n_vertices == m.n_faces and d.n_faces == m.n_vertices
        assert d.dual() == m


def test_radial_is_4valent():
    for m in all_maps(3):
        if m.is_atomic:
            continue
        r = m.radial()
        assert r.is_4valent()
        assert r.n_vertices == m.n_edges
        assert r.dual().is_quadrangulation()


def test_root_edge_surgery():
    loop = RootedMap.loop()
    m = loop.insert_root_edge(1)
    assert m.n_edges == 2 and m.root_face_degree == 2
    kind, (m1, k) = m.delete_root_edge()
    assert kind == "single" and m1 == loop and m1.insert_root_edge(k) == m
    j = RootedMap.join_by_root_edge(loop, loop)
    assert j.n_edges == 3
    assert j.is_separable()
    kind, (a, b) = j.delete_root_edge()
    assert kind == "pair" and a == loop and b == loop
    link = RootedMap.link()
    assert link.contract_root_edge() == RootedMap.atomic()


def test_predicates():
    assert RootedMap.link().is_bipartite()
    assert not RootedMap.loop().is_bipartite()
    assert RootedMap.loop().is_eulerian()
    assert RootedMap.loop().has_loop()
    assert not RootedMap.loop().is_separable()

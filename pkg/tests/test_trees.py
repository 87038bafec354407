import pytest

from tuttelab import closed_forms as cf
from tuttelab.trees import (LEAF, BlossomingTree, DyckShuffle, LabelledTree,
                            TreeError)


def test_blossoming_string_roundtrip():
    for n in range(4):
        for t in BlossomingTree.all_trees(n):
            assert BlossomingTree.from_string(t.to_string()) == t


def test_blossoming_counts():
    for n in range(5):
        trees = BlossomingTree.all_trees(n)
        assert len(trees) == cf.blossoming_count(n)
        assert len(set(trees)) == len(trees)
        assert all(t.n_nodes == n for t in trees)


def test_blossoming_dart_roundtrip():
    for n in range(1, 4):
        for t in BlossomingTree.all_trees(n):
            sigma, alpha, kind, root = t.to_darts()
            assert BlossomingTree.from_darts(sigma, alpha, kind, root) == t


def test_blossoming_trivial_tree():
    t = BlossomingTree(LEAF)
    assert t.n_nodes == 0
    assert t.to_string() == "l"
    with pytest.raises(TreeError):
        t.to_darts()


def test_blossoming_parse_errors():
    for bad in ("x", "n5(l,l)", "n0(l)", "n0(l,l)l"):
        with pytest.raises(TreeError):
            BlossomingTree.from_string(bad)


def test_labelled_tree_roundtrip_and_counts():
    for n in range(4):
        trees = LabelledTree.all_labelled_trees(n)
        assert len(trees) == cf.labelled_tree_count(n)
        assert len(set(trees)) == len(trees)
        for t in trees:
            assert t.n_edges == n
            assert t.is_valid()
            assert LabelledTree.from_string(t.to_string()) == t


def test_labelled_tree_validity():
    assert LabelledTree(1, [LabelledTree(2)]).is_valid(well=True)
    assert not LabelledTree(2, [LabelledTree(1)]).is_valid(well=True)
    assert not LabelledTree(1, [LabelledTree(3)]).is_valid()  # jump of 2
    assert not LabelledTree(2, [LabelledTree(3)]).is_valid()  # min is not 1


def test_shuffle_validation():
    DyckShuffle("bbaaBBAbBA")
    with pytest.raises(TreeError):
        DyckShuffle("ab")  # unbalanced
    with pytest.raises(TreeError):
        DyckShuffle("Aa")  # closes before opening
    with pytest.raises(TreeError):
        DyckShuffle("ac")  # bad letter


def test_shuffle_counts():
    for i in range(3):
        for j in range(3):
            shuffles = DyckShuffle.all_shuffles(i, j)
            assert len(shuffles) == cf.shuffle_count(i, j)
            assert len(set(shuffles)) == len(shuffles)
            assert all(s.n_tree_edges == i and s.n_nontree_edges == j
                       for s in shuffles)

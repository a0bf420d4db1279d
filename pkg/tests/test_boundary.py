import random

import pytest
from hypothesis import given, settings, strategies as st

from strata.boundary import (
    Boundary,
    BoundaryConfig,
    BoundarySet,
    Rule,
    cliff_rule,
    detect_boundaries,
    format_boundaries,
    merge_points,
    notch_rule,
    outline_depths,
)
from strata.hac import Leaf, Merge, make_merge

from oracles import leaf_lists, reference_boundaries, tree_from_nested


def node(size, depth):
    """Stand-in subtree with the given size and depth."""
    return Merge(Leaf(0), Leaf(0), 0.0, size, depth)


def found(tree, **cfg):
    return {(b.gap, b.rule) for b in detect_boundaries(tree, BoundaryConfig(**cfg))}


def test_notch_rule():
    assert notch_rule(node(2, 1), node(2, 1), 1)
    assert not notch_rule(node(5, 3), Leaf(1), 1)
    assert not notch_rule(node(2, 1), node(2, 1), 2)


def test_cliff_rule():
    assert cliff_rule(node(6, 4), Leaf(1), 1, 1.0)
    assert not cliff_rule(node(6, 4), Leaf(1), 1, 4.0)
    assert not cliff_rule(node(2, 1), node(2, 0), 1, 0.0)


def test_balanced_tree_notch():
    assert found(tree_from_nested(((1, 2), (3, 4)))) == {(2, Rule.NOTCH)}


def test_chain_tree():
    chain = tree_from_nested((((1, 2), 3), 4))
    # depth 3; m = 2 keeps both depth gaps (1 and 2) from firing
    assert found(chain, n=1, m_fraction=2 / 3) == set()
    # default m = 0.6: both single-paragraph attachments are cliffs
    assert found(chain) == {(2, Rule.CLIFF), (3, Rule.CLIFF)}


def test_cliff_on_deep_subtree():
    tree = tree_from_nested((((((1, 2), 3), 4), 5), 6))
    assert tree.depth == 5 and tree.left.size == 5 and tree.left.depth == 4
    # m = 1: attachments with depth gap 2, 3 and 4 fire; gap 1 does not
    assert found(tree) == {(3, Rule.CLIFF), (4, Rule.CLIFF), (5, Rule.CLIFF)}


def test_right_heavy_orientation():
    # S1 is the bigger (right) child; gap is still left|right
    tree = tree_from_nested((1, (((2, 3), 4), 5)))
    assert (1, Rule.CLIFF) in found(tree)


def test_single_leaf():
    assert detect_boundaries(Leaf(1)) == BoundarySet()
    assert outline_depths(Leaf(1)) == [0]


def test_outline_depths():
    assert outline_depths(tree_from_nested((1, 2))) == [1, 1]
    assert outline_depths(tree_from_nested(((1, 2), 3))) == [2, 2, 1]


def test_boundary_set_validation():
    with pytest.raises(ValueError):
        BoundarySet((Boundary(3, Rule.NOTCH), Boundary(2, Rule.NOTCH)))
    with pytest.raises(ValueError):
        BoundarySet((Boundary(0, Rule.NOTCH),))
    merged = BoundarySet.from_records([Boundary(3, Rule.CLIFF), Boundary(1, Rule.NOTCH), Boundary(3, Rule.NOTCH)])
    assert merged.gaps == (1, 3)
    assert merged.boundaries[1].rule is Rule.CLIFF


def test_format_boundaries():
    assert format_boundaries([5, 2]) == "2 5\n"
    assert format_boundaries(BoundarySet()) == ""


def random_tree(rng, lo, hi):
    if lo == hi:
        return Leaf(lo)
    cut = rng.randint(lo, hi - 1)
    return make_merge(random_tree(rng, lo, cut), random_tree(rng, cut + 1, hi), rng.random())


trees = st.builds(
    lambda seed, p: random_tree(random.Random(seed), 1, p),
    st.integers(0, 2**32 - 1),
    st.integers(1, 40),
)


@settings(max_examples=200)
@given(trees, st.integers(0, 4), st.sampled_from([0.1, 0.2, 0.5, 1.0]))
def test_boundaries_match_independent_walk(tree, n, m_fraction):
    result = detect_boundaries(tree, BoundaryConfig(n, m_fraction))
    expected = reference_boundaries(tree, n, m_fraction)
    assert {b.gap: b.rule.value for b in result} == expected
    assert all(1 <= g <= tree.size - 1 for g in result.gaps)


@settings(max_examples=200)
@given(trees, st.integers(0, 4))
def test_notch_segments_are_large(tree, n):
    notches = {b.gap for b in detect_boundaries(tree, BoundaryConfig(n)) if b.rule is Rule.NOTCH}
    for merge, gap in merge_points(tree):
        if gap in notches:
            assert len(leaf_lists(merge.left)) >= n + 1
            assert len(leaf_lists(merge.right)) >= n + 1


@settings(max_examples=200)
@given(trees, st.integers(0, 4), st.floats(0.0, 10.0))
def test_rules_mutually_exclusive(tree, n, m):
    for merge, _ in merge_points(tree):
        s1, s2 = (merge.left, merge.right) if merge.left.size >= merge.right.size else (merge.right, merge.left)
        assert not (notch_rule(s1, s2, n) and cliff_rule(s1, s2, n, m))


@given(trees)
def test_outline_depth_max_is_tree_depth(tree):
    depths = outline_depths(tree)
    assert len(depths) == tree.size
    assert max(depths) == tree.depth


@given(trees)
def test_merge_points_cover_every_gap_once(tree):
    gaps = sorted(g for _, g in merge_points(tree))
    assert gaps == list(range(1, tree.size))

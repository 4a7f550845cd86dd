import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primegraphs.configs import ConfigKind, verify_witness
from primegraphs.errors import InputError, InvariantViolation, Refusal
from primegraphs.graph import (complete_graph, disjoint_union, empty_graph, induced_subgraph, is_complete,
                               is_independent, path_graph, random_graph)
from primegraphs.typetree import (TypeTree, all_one_spine, arrange_full, build_tree_graph, element_rank,
                                  extract_config_from_tree, extract_homogeneous, full_addresses,
                                  homogeneous_lower_bound, longest_branch, max_element_rank, spine_coloring,
                                  spine_pairs, tree_height_exact, tree_rank_witness, verify_rank_height)

from .conftest import graphs

K = ConfigKind
MATCHING = disjoint_union(complete_graph(2), complete_graph(2))


def test_arrange_full_examples():
    assert arrange_full(empty_graph(3)).mapping == {"": 0, "0": 1, "00": 2}
    assert arrange_full(complete_graph(3)).mapping == {"": 0, "1": 1, "11": 2}
    t = arrange_full(MATCHING)
    assert t.children("") == ["0", "1"]
    assert t.vertex("1") == 1


@given(graphs(min_order=1, max_order=9), st.one_of(st.none(), st.integers(0, 100)))
def test_arrange_full_is_valid(g, seed):
    t = arrange_full(g, "min" if seed is None else "random", seed)
    assert t.violations() == []
    assert t.is_total and sorted(t.mapping.values()) == list(range(g.order))


def test_random_large_graphs_arrange_validly():
    for seed in range(20):
        g = random_graph(64, Fraction(seed % 9 + 1, 10), seed=seed)
        t = arrange_full(g)
        assert t.violations() == []
        assert verify_rank_height(g, t).holds


def test_violations_catch_bad_trees():
    g = path_graph(3)
    bad = TypeTree.from_mapping(g, {"": 0, "0": 1})  # 1 is adjacent to 0, so it cannot be a 0-child
    assert bad.violations()
    orphan = TypeTree.from_mapping(g, {"": 0, "00": 2})
    assert any("parent" in v for v in orphan.violations())
    with pytest.raises(InvariantViolation):
        TypeTree.from_mapping(g, {"": 0, "1": 0}).check()


def test_tree_json_round_trip():
    t = arrange_full(MATCHING)
    assert TypeTree.from_json(MATCHING, t.to_json()) == t
    assert "->" in t.to_dot()


def test_longest_branch_examples():
    for k in range(1, 6):
        assert len(longest_branch(arrange_full(empty_graph(k)))) == k
    g, tree = build_tree_graph(3, lambda i, j: (0, 0))
    assert len(longest_branch(tree)) == 4


def test_element_rank_examples():
    t = arrange_full(MATCHING)
    assert element_rank(t, "01") == 1
    assert element_rank(t, "") == 2
    assert max_element_rank(arrange_full(path_graph(1))) == 1
    assert max_element_rank(arrange_full(empty_graph(6))) == 1


def test_tree_rank_examples():
    assert tree_rank_witness(empty_graph(5)).rank == 1
    r = tree_rank_witness(MATCHING)
    assert (r.rank, r.exact) == (2, True)
    assert set(r.tree.mapping) == set(full_addresses(2)) and r.tree.violations() == []
    for t in range(1, 5):
        g, _ = build_tree_graph(t, lambda i, j: (1, 0))
        assert tree_rank_witness(g).rank >= t


@given(graphs(min_order=1, max_order=7))
def test_tree_rank_spine_is_independent(g):
    r = tree_rank_witness(g)
    assert r.exact
    spine = [r.tree.vertex("0" * k) for k in range(r.rank)]
    assert len(set(spine)) == r.rank and is_independent(g, spine)
    assert is_complete(g, all_one_spine(r.tree))


@given(graphs(min_order=1, max_order=7))
def test_max_element_rank_at_most_tree_rank(g):
    assert max_element_rank(arrange_full(g)) <= tree_rank_witness(g).rank


def test_tree_height_exact_examples():
    for k in range(1, 6):
        assert tree_height_exact(complete_graph(k)) == k
        assert tree_height_exact(empty_graph(k)) == k
    with pytest.raises(Refusal):
        tree_height_exact(path_graph(9))


@given(graphs(min_order=1, max_order=6))
def test_exact_height_at_most_any_arrangement(g):
    assert tree_height_exact(g) <= len(longest_branch(arrange_full(g)))


def test_rank_height_examples():
    r = verify_rank_height(complete_graph(5), arrange_full(complete_graph(5)))
    assert (r.order, r.max_element_rank, r.longest_branch, r.bound) == (5, 1, 5, 100)
    r = verify_rank_height(path_graph(1), arrange_full(path_graph(1)))
    assert (r.bound, r.holds) == (4, True)
    assert r.height_lower_bound() <= r.longest_branch


def test_extract_homogeneous_examples():
    h = extract_homogeneous(complete_graph(6))
    assert h.complete and len(h.vertices) >= 3
    h = extract_homogeneous(empty_graph(6))
    assert not h.complete and len(h.vertices) >= 3


@given(graphs(min_order=1, max_order=8))
def test_extract_homogeneous_bounds(g):
    h = extract_homogeneous(g)
    vs = h.vertices
    assert is_complete(g, vs) if h.complete else is_independent(g, vs)
    t = max(h.rank_found, 1)
    assert len(vs) >= max(h.rank_found, math.ceil(h.report.longest_branch / 2))
    assert len(vs) >= homogeneous_lower_bound(g.order, t)


def test_spine_pairs_on_matching():
    sp = spine_pairs(arrange_full(MATCHING))
    assert sp.x == (0, 2) and sp.y == (1, 3)
    assert sp.violations(MATCHING) == []
    with pytest.raises(InputError):
        spine_pairs(arrange_full(MATCHING), 3)


def test_single_pair_needs_the_one_child():
    tree = arrange_full(empty_graph(2))
    assert len(spine_pairs(tree)) == 0
    tree = arrange_full(complete_graph(2))
    assert len(spine_pairs(tree)) == 1


def test_build_tree_graph_basics():
    g, tree = build_tree_graph(1, lambda i, j: (0, 0))
    assert g.order == 3 and tree.violations() == []
    g, tree = build_tree_graph(4, lambda i, j: ((i + j) % 2, i % 2))
    assert tree.violations() == [] and spine_pairs(tree).violations(g) == []
    col = spine_coloring(g, spine_pairs(tree))
    assert col[(0, 1)] == 3  # colour (1, 1) at spine indices 1, 2


@pytest.mark.parametrize("colour, kind", [((0, 0), K.InducedMatching), ((0, 1), K.ThinSpider),
                                          ((1, 0), K.BipartiteHalfGraph), ((1, 1), K.HalfSplitGraph)])
def test_constant_colourings_give_the_matching_outcome(colour, kind):
    g, tree = build_tree_graph(6, lambda i, j: colour)
    w = extract_config_from_tree(tree, 6, 6, 6, require_threshold=False)
    assert w.kind is kind and w.height == 6 and verify_witness(g, w)


def test_small_threshold_extraction():
    g, tree = build_tree_graph(2, lambda i, j: (0, 1))
    w = extract_config_from_tree(tree, 2, 2, 2)
    assert w.kind is K.ThinSpider and w.height == 2 and verify_witness(g, w)
    g, tree = build_tree_graph(3, lambda i, j: (0, 0))
    w = extract_config_from_tree(tree, 3, 3, 3, require_threshold=False)
    assert w.kind is K.InducedMatching and w.height == 3


def test_extraction_refuses_unknown_thresholds():
    _, tree = build_tree_graph(6, lambda i, j: (1, 1))
    with pytest.raises(Refusal):
        extract_config_from_tree(tree, 6, 6, 6)
    _, tree = build_tree_graph(1, lambda i, j: (1, 1))
    with pytest.raises(InputError):
        extract_config_from_tree(tree, 0, 2, 2)
    with pytest.raises(InputError):  # one spine pair is below R(2,2,2,2) = 2
        extract_config_from_tree(tree, 2, 2, 2)
    with pytest.raises(InputError):
        arrange_full(empty_graph(0))


@given(st.integers(2, 6), st.data())
def test_random_colourings_at_size_two(t, data):
    table = {(i, j): data.draw(st.sampled_from([(0, 0), (0, 1), (1, 0), (1, 1)]))
             for i in range(1, t + 1) for j in range(i + 1, t + 1)}
    g, tree = build_tree_graph(t, lambda i, j: table[(i, j)])
    w = extract_config_from_tree(tree, 2, 2, 2)
    assert w.height == 2 and verify_witness(g, w)


def test_subtree_of_arrangement_stays_consistent():
    g = random_graph(30, Fraction(1, 2), seed=3)
    t = arrange_full(g)
    keep = [t.vertex(a) for a in longest_branch(t)]
    h, _ = induced_subgraph(g, keep)
    assert h.order == len(keep)

from fractions import Fraction

import pytest

from ghkit import capgraph
from ghkit.capacity import Cap
from ghkit.generators import split_seed
from ghkit.ghtree import (
    GHEdge,
    GHTree,
    build_gh_tree,
    merge_terminal,
    tree_lambda,
    verify_encoding,
)
from ghkit.graph import GraphError, deperturb_value, perturb
from ghkit.maxflow import brute_min_cut
from ghkit.suiteutil import random_connected_graph

from conftest import ONE, unit_k23, unit_k33


def test_k23_pairwise_cut_values(k23_graph):
    t = build_gh_tree(k23_graph, (0, 1, 2, 3, 4))
    # The two degree-3 vertices are 3-connected; every degree-2 vertex
    # is separated from everything by its own two edges.
    assert tree_lambda(t, 0, 1) == Cap(3)
    for v in (2, 3, 4):
        for u in range(5):
            if u != v:
                assert tree_lambda(t, u, v) == Cap(2)


def test_k33_tree_is_five_star(k33_graph):
    t = build_gh_tree(k33_graph, tuple(range(6)))
    assert t.is_star()
    gp = perturb(k33_graph)
    tp = build_gh_tree(gp, tuple(range(6)))
    assert tp.is_star()
    for e in tp.edges:
        assert deperturb_value(gp, e.cap) == Cap(3)


def test_tree_input_reproduces_itself():
    # GH tree of a capacitated path is the path with the same capacities.
    g = capgraph(4, [(0, 1, Cap(5)), (1, 2, Cap(2)), (2, 3, Cap(7))])
    t = build_gh_tree(g, (0, 1, 2, 3))
    got = {(min(e.s, e.t), max(e.s, e.t)): e.cap for e in t.edges}
    assert got == {(0, 1): Cap(5), (1, 2): Cap(2), (2, 3): Cap(7)}


def test_bags_partition_vertices():
    for i in range(15):
        g = random_connected_graph(split_seed(41, i), max_n=8)
        z = tuple(range(0, g.n, 2))
        if len(z) < 2:
            continue
        t = build_gh_tree(g, z)
        seen = set()
        for zz in z:
            assert zz in t.bags[zz]
            assert not (seen & t.bags[zz])
            seen |= t.bags[zz]
        assert seen == set(range(g.n))


def test_tree_lambda_matches_oracle_with_partial_terminals():
    for i in range(15):
        g = random_connected_graph(split_seed(43, i), max_n=8)
        z = tuple(range(min(4, g.n)))
        gp = perturb(g)
        t = build_gh_tree(gp, z)
        for a in range(len(z)):
            for b in range(a + 1, len(z)):
                assert tree_lambda(t, z[a], z[b]) == brute_min_cut(gp, z[a], z[b]).capacity


def test_verify_encoding_passes_on_built_trees():
    for i in range(10):
        g = perturb(random_connected_graph(split_seed(47, i), max_n=8))
        t = build_gh_tree(g)
        assert all(c.ok for c in verify_encoding(g, t))


def test_verify_encoding_detects_tampered_capacity():
    g = perturb(unit_k23())
    t = build_gh_tree(g)
    bad_edges = list(t.edges)
    e = bad_edges[0]
    bad_edges[0] = GHEdge(e.s, e.t, e.cap + Cap(1))
    bad = GHTree(t.terminals, t.bags, tuple(bad_edges), t.certificates)
    checks = verify_encoding(g, bad)
    assert not all(c.ok for c in checks)


def test_verify_encoding_detects_bad_partition():
    g = perturb(unit_k23())
    t = build_gh_tree(g)
    bags = dict(t.bags)
    bags[0] = bags[0] | {1}  # overlaps the bag of terminal 1
    bad = GHTree(t.terminals, bags, t.edges, t.certificates)
    with pytest.raises(GraphError):
        verify_encoding(g, bad)


def test_merge_terminal_path_example():
    g = capgraph(3, [(0, 1, Cap(5)), (1, 2, Cap(2))])
    t = build_gh_tree(g, (0, 1, 2))
    merged = merge_terminal(t, 2)
    assert set(merged.terminals) == {0, 1}
    assert 2 in merged.bags[1]  # absorbed along its unique incident edge
    assert len(merged.edges) == 1 and merged.edges[0].cap == Cap(5)


def test_merge_terminal_preserves_encoding():
    for i in range(10):
        g = perturb(random_connected_graph(split_seed(53, i), max_n=7, min_n=4))
        t = build_gh_tree(g)
        merged = merge_terminal(t, t.terminals[-1])
        assert all(c.ok for c in verify_encoding(g, merged))


def test_merge_terminal_tie_error_without_perturbation():
    # Unit triangle: both edges at any terminal have equal weight.
    g = capgraph(3, [(0, 1, ONE), (1, 2, ONE), (0, 2, ONE)])
    t = GHTree(
        (0, 1, 2),
        {0: frozenset({0}), 1: frozenset({1}), 2: frozenset({2})},
        (GHEdge(0, 1, Cap(2)), GHEdge(1, 2, Cap(2))),
        (),
    )
    with pytest.raises(GraphError):
        merge_terminal(t, 1)


def test_path_edges_and_fundamental_shore():
    g = perturb(unit_k33())
    t = build_gh_tree(g)
    for idx, e in enumerate(t.edges):
        shore = t.fundamental_shore(idx)
        assert (e.s in shore) != (e.t in shore)
    path = t.path_edges(t.terminals[0], t.terminals[-1])
    assert path, "terminals must be connected in the tree"

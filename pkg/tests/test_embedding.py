import pytest

from ghkit import capgraph
from ghkit.capacity import Cap
from ghkit.embedding import (
    Inconclusive,
    check_bag_minor,
    check_weak_bag_minor,
    embedding_verdict,
    four_terminal_structure,
    is_gh_subgraph,
)
from ghkit.generators import gen_onesum, split_seed
from ghkit.ghtree import build_gh_tree
from ghkit.graph import GraphError, perturb

from conftest import ONE, unit_k23


def test_k23_has_no_gh_subtree(k23_graph):
    # The all-vertex tree needs an edge between the two degree-3
    # vertices, which are not adjacent.
    ok, witness = is_gh_subgraph(k23_graph)
    assert not ok and witness is None


def test_k23_all_terminals_not_even_weak(k23_graph):
    t = build_gh_tree(k23_graph, tuple(range(5)))
    assert not check_bag_minor(k23_graph, t)[0]
    ok, deleted, _ = check_weak_bag_minor(k23_graph, t)
    assert not ok
    assert embedding_verdict(k23_graph, t).mode == "none"


def test_k23_four_terminals_is_weak_bag_minor():
    # Terminals: both degree-3 vertices and two degree-2 vertices; the
    # leftover degree-2 vertex can be deleted to realize the star.
    g = unit_k23(terminals=(0, 1, 2, 3))
    verdict = four_terminal_structure(g, (0, 1, 2, 3))
    assert verdict.mode in ("bag_minor", "weak_bag_minor")
    if verdict.shape == "star":
        t = build_gh_tree(perturb(g), (0, 1, 2, 3))
        ok, deleted, witness = check_weak_bag_minor(g, t)
        assert ok
        assert witness is not None


def test_path_shaped_trees_are_bag_minors():
    g = capgraph(4, [(0, 1, Cap(3)), (1, 2, Cap(2)), (2, 3, Cap(4))], (0, 1, 2, 3))
    verdict = four_terminal_structure(g, (0, 1, 2, 3))
    assert verdict.shape == "path"
    assert verdict.mode == "bag_minor"


def test_four_terminal_limit():
    g = unit_k23()
    with pytest.raises(GraphError):
        four_terminal_structure(g, (0, 1, 2, 3, 4))


def test_subgraph_check_requires_all_vertex_tree():
    g = unit_k23()
    t = build_gh_tree(g, (0, 1, 2))
    with pytest.raises(GraphError):
        is_gh_subgraph(g, t)


def test_onesum_trees_are_subgraphs():
    for i in range(10):
        g = gen_onesum([("outerplanar", 5), ("k4",)], split_seed(61, i))
        ok, witness = is_gh_subgraph(g)
        assert ok
        # the witness realizes every tree edge by an actual graph edge
        for (s, t), eid in witness.items():
            u, v, _ = g.edges[eid]
            assert {u, v} == {s, t}


def test_subgraph_implies_bag_minor():
    for i in range(5):
        g = gen_onesum([("outerplanar", 4), ("outerplanar", 5)], split_seed(67, i))
        t = build_gh_tree(g, tuple(range(g.n)))
        assert is_gh_subgraph(g, t)[0]
        assert check_bag_minor(g, t)[0]


def test_weak_bag_minor_exhaustive_search_and_bound():
    # Bag of terminal 0 is {0, 3} with 0 isolated: the bag is
    # disconnected, pruning 3 removes the only connecting edge 3-4, and
    # no deletion subset can fix it either.
    from ghkit.ghtree import GHEdge, GHTree

    g = capgraph(5, [(1, 2, ONE), (1, 4, ONE), (2, 4, ONE), (3, 4, ONE)], (0, 1))
    t = GHTree(
        (0, 1),
        {0: frozenset({0, 3}), 1: frozenset({1, 2, 4})},
        (GHEdge(0, 1, ONE),),
        (),
    )
    assert not check_bag_minor(g, t)[0]
    with pytest.raises(Inconclusive):
        check_weak_bag_minor(g, t, deletion_bound=0)
    ok, deleted, witness = check_weak_bag_minor(g, t)
    assert not ok and deleted is None and witness is None

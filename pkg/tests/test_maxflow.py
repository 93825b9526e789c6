from fractions import Fraction

import pytest

from ghkit import capgraph
from ghkit.capacity import INF, Cap
from ghkit.generators import split_seed
from ghkit.graph import cut_capacity, perturb
from ghkit.maxflow import (
    BoundExceeded,
    all_shore_capacities,
    brute_min_cut,
    lambda_matrix,
    max_flow,
)
from ghkit.suiteutil import random_connected_graph

from conftest import ONE, unit_k23


def test_single_edge():
    g = capgraph(2, [(0, 1, Cap(Fraction(5, 3)))])
    r = max_flow(g, 0, 1)
    assert r.value == Cap(Fraction(5, 3))
    assert r.min_cut.shore in ({0}, frozenset({0}))


def test_flow_value_equals_min_cut_shore_capacity():
    for i in range(40):
        g = random_connected_graph(split_seed(5, i), max_n=8)
        for t in range(1, g.n):
            r = max_flow(g, 0, t)
            assert r.value == cut_capacity(g, r.min_cut.shore)
            assert 0 in r.min_cut.shore and t not in r.min_cut.shore


def test_flow_matches_brute_oracle():
    for i in range(40):
        g = random_connected_graph(split_seed(31, i), max_n=7)
        for t in range(1, g.n):
            assert max_flow(g, 0, t).value == brute_min_cut(g, 0, t).capacity


def test_flow_conservation():
    g = unit_k23()
    r = max_flow(g, 0, 1)
    net = [Cap(0)] * g.n
    for eid, f in r.flows.items():
        u, v, _ = g.edges[eid]
        net[u] = net[u] - f
        net[v] = net[v] + f
    assert net[0] == -r.value and net[1] == r.value
    for v in (2, 3, 4):
        assert net[v] == Cap(0)


def test_infinite_edge_participates():
    # 0 -inf- 1 -1- 2: the bottleneck is the finite edge.
    g = capgraph(3, [(0, 1, INF), (1, 2, ONE)])
    assert max_flow(g, 0, 2).value == ONE
    assert max_flow(g, 0, 1).value == INF


def test_brute_min_cut_bound():
    g = random_connected_graph(3, max_n=8)
    with pytest.raises(BoundExceeded):
        brute_min_cut(g, 0, 1, bound=g.n - 1)


def test_all_shore_capacities_agrees_with_cut_capacity():
    g = unit_k23()
    caps = all_shore_capacities(g)
    assert caps[0] is None and caps[(1 << g.n) - 1] is None
    for mask in range(1, (1 << g.n) - 1):
        shore = frozenset(v for v in range(g.n) if mask >> v & 1)
        assert caps[mask] == cut_capacity(g, shore)


def test_lambda_matrix_symmetry():
    g = perturb(unit_k23())
    lam = lambda_matrix(g)
    for (s, t), v in lam.items():
        assert lam[(t, s)] == v
        assert v == max_flow(g, s, t).value

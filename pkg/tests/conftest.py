from fractions import Fraction

import pytest

from ghkit import capgraph
from ghkit.capacity import Cap

ONE = Cap(Fraction(1))


def unit_k23(terminals=(0, 1, 2, 3, 4)):
    """Complete bipartite K2,3: vertices 0,1 have degree 3; 2,3,4 degree 2."""
    edges = [(u, v, ONE) for u in (0, 1) for v in (2, 3, 4)]
    return capgraph(5, edges, terminals)


def unit_k33(terminals=(0, 1, 2, 3, 4, 5)):
    edges = [(u, v, ONE) for u in (0, 1, 2) for v in (3, 4, 5)]
    return capgraph(6, edges, terminals)


@pytest.fixture
def k23_graph():
    return unit_k23()


@pytest.fixture
def k33_graph():
    return unit_k33()

"""Small shared helpers for the property suites and tests."""

from __future__ import annotations

import random

from .generators import random_capacity
from .graph import CapGraph, capgraph


def random_connected_graph(seed: int, max_n: int = 8, min_n: int = 3) -> CapGraph:
    """Random connected graph with random positive rational capacities.

    A random spanning tree guarantees connectivity; every other pair
    becomes an edge with probability ~0.35.
    """
    rng = random.Random(seed)
    n = rng.randint(min_n, max_n)
    edges = []
    present = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        present.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < 0.35:
                present.add((u, v))
    for u, v in sorted(present):
        edges.append((u, v, random_capacity(rng)))
    return capgraph(n, edges, tuple(range(n)))

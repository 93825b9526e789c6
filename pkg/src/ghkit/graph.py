"""Undirected capacitated multigraph core: cuts, centrality, perturbation.

Vertices are dense integers 0..n-1.  Parallel input edges are merged by
capacity summation; self-loops are rejected.  Graphs are immutable after
construction, so they can be shared freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from .capacity import Cap, INF


class GraphError(ValueError):
    pass


class Edge(NamedTuple):
    u: int
    v: int
    cap: Cap


@dataclass(frozen=True)
class Cut:
    """A vertex shore together with its exact cut capacity."""

    shore: frozenset
    capacity: Cap
    central: bool | None = None


@dataclass(frozen=True)
class CapGraph:
    n: int
    edges: tuple  # tuple[Edge, ...], edge id == index
    terminals: tuple = ()
    perturbed: bool = False
    grid: int = 1  # common denominator of the pre-perturbation capacities

    def __post_init__(self):
        seen = {}
        for e in self.edges:
            u, v, cap = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} out of range")
            if cap <= Cap(0):
                raise GraphError(f"non-positive capacity on edge {u}-{v}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"parallel edge {u}-{v}; merge before construction")
            seen[key] = True
        for t in self.terminals:
            if not 0 <= t < self.n:
                raise GraphError(f"terminal {t} out of range")
        if len(set(self.terminals)) != len(self.terminals):
            raise GraphError("duplicate terminals")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self):
        """adj[v] = list of (neighbor, edge_id)."""
        a = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            a[u].append((v, i))
            a[v].append((u, i))
        return a

    @cached_property
    def edge_index(self):
        return {(min(u, v), max(u, v)): i for i, (u, v, _) in enumerate(self.edges)}

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edge_index

    def cap_between(self, u, v):
        i = self.edge_index.get((min(u, v), max(u, v)))
        return None if i is None else self.edges[i].cap

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(self.component_of(0)) == self.n

    def component_of(self, start, within=None):
        """Vertex set reachable from start, optionally restricted to `within`."""
        allowed = None if within is None else set(within)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in self.adj[x]:
                if y in seen or (allowed is not None and y not in allowed):
                    continue
                seen.add(y)
                stack.append(y)
        return seen

    def components(self, within):
        within = set(within)
        out = []
        while within:
            c = self.component_of(next(iter(within)), within)
            out.append(c)
            within -= c
        return out

    def induced_connected(self, vertices) -> bool:
        vs = set(vertices)
        if not vs:
            return False
        return self.component_of(next(iter(vs)), vs) == vs


def capgraph(n, edges, terminals=(), perturbed=False, grid=None) -> CapGraph:
    """Build a CapGraph, merging parallel edges and normalizing capacities."""
    merged = {}
    order = []
    for item in edges:
        u, v, cap = item
        cap = Cap.of(cap)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in merged:
            merged[key] = merged[key] + cap
        else:
            merged[key] = cap
            order.append(key)
    out = tuple(Edge(u, v, merged[(u, v)]) for u, v in order)
    if grid is None:
        grid = 1
        for e in out:
            grid = math.lcm(grid, e.cap.fin.denominator)
    return CapGraph(n, out, tuple(terminals), perturbed, grid)


def cut_capacity(g: CapGraph, shore) -> Cap:
    """Exact capacity of delta(shore)."""
    s = set(shore)
    if not s or len(s) >= g.n:
        raise GraphError("shore must be a proper nonempty vertex subset")
    total = Cap(0)
    for u, v, cap in g.edges:
        if (u in s) != (v in s):
            total = total + cap
    return total


def cross_capacity(g: CapGraph, x, y) -> Cap:
    """Sum of capacities of edges with one end in x and the other in y."""
    xs, ys = set(x), set(y)
    if xs & ys:
        raise GraphError("cross_capacity requires disjoint sets")
    total = Cap(0)
    for u, v, cap in g.edges:
        if (u in xs and v in ys) or (v in xs and u in ys):
            total = total + cap
    return total


def has_crossing_edge(g: CapGraph, x, y) -> bool:
    xs, ys = set(x), set(y)
    for u, v, _ in g.edges:
        if (u in xs and v in ys) or (v in xs and u in ys):
            return True
    return False


def is_central(g: CapGraph, shore) -> bool:
    """True iff both shores induce connected subgraphs (the cut is a bond)."""
    s = set(shore)
    if not s or len(s) >= g.n:
        raise GraphError("shore must be a proper nonempty vertex subset")
    rest = set(range(g.n)) - s
    return g.induced_connected(s) and g.induced_connected(rest)


def make_cut(g: CapGraph, shore) -> Cut:
    s = frozenset(shore)
    return Cut(s, cut_capacity(g, s), is_central(g, s))


def perturb(g: CapGraph) -> CapGraph:
    """Add 2^i / (2^(2m) * L) to edge i, L the input capacity grid.

    Subset sums of distinct powers of two are injective, so every two
    distinct edge subsets get distinct total capacity: all cuts become
    pairwise distinct and every minimum cut is unique (hence central).
    The total added over any subset is below 1/L, so original cut values
    are recovered by rounding down to the 1/L grid.
    """
    m = g.m
    if m == 0:
        raise GraphError("cannot perturb an edgeless graph")
    if g.perturbed:
        return g
    base = 1
    for e in g.edges:
        base = math.lcm(base, e.cap.fin.denominator)
    denom = (1 << (2 * m)) * base
    edges = tuple(
        Edge(u, v, cap + Cap(Fraction(1 << i, denom)))
        for i, (u, v, cap) in enumerate(g.edges)
    )
    return CapGraph(g.n, edges, g.terminals, perturbed=True, grid=base)


def deperturb_value(g: CapGraph, value: Cap) -> Cap:
    """Round a perturbed cut value down to the original capacity grid."""
    l = g.grid
    fin = Fraction(math.floor(value.fin * l), l)
    return Cap(fin, value.inf)


def contract(g: CapGraph, groups, terminals=()) -> tuple:
    """Contract each vertex group to a single vertex.

    `groups` is a list of disjoint vertex sets covering V.  Returns
    (graph, mapping) where mapping[old_vertex] = new vertex id.  Edges
    inside a group vanish; parallel edges between groups merge.
    """
    mapping = {}
    for i, grp in enumerate(groups):
        for v in grp:
            if v in mapping:
                raise GraphError("overlapping contraction groups")
            mapping[v] = i
    if len(mapping) != g.n:
        raise GraphError("contraction groups must cover all vertices")
    edges = []
    for u, v, cap in g.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.append((a, b, cap))
    return capgraph(len(groups), edges, terminals), mapping


def articulation_points(g: CapGraph):
    """Cut vertices, by iterative DFS lowpoint computation."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    points = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w, _ in it:
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        children += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        points.add(p)
        if children > 1:
            points.add(root)
    return points


def blocks(g: CapGraph):
    """Biconnected components, each as a set of vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    out = []
    edge_stack = []
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            out.append({root})
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for w, _ in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != pv and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        comp = set()
                        while edge_stack:
                            a, b = edge_stack.pop()
                            comp.add(a)
                            comp.add(b)
                            if (a, b) == (p, v):
                                break
                        if comp:
                            out.append(comp)
    return out


def is_two_connected(g: CapGraph) -> bool:
    return g.n >= 3 and g.is_connected() and not articulation_points(g)

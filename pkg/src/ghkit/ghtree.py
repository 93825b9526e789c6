"""Gomory-Hu trees on terminal sets: construction, queries, verification.

Construction follows the classical split procedure: pick a tree node
holding two or more terminals, contract every other subtree hanging off
it to a supervertex, compute the exact minimum cut between the two
lowest-id terminals, and split the node along that cut.  On perturbed
inputs every minimum cut is unique, so the result is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .capacity import Cap, cap_min
from .graph import CapGraph, GraphError, capgraph, cut_capacity, deperturb_value, perturb
from .maxflow import max_flow


@dataclass(frozen=True)
class GHEdge:
    s: int
    t: int
    cap: Cap


@dataclass(frozen=True)
class GHTree:
    terminals: tuple  # ordered terminal ids, tree vertices
    bags: dict  # terminal -> frozenset of graph vertices, a partition of V
    edges: tuple  # tuple[GHEdge, ...]
    certificates: tuple  # per edge: frozenset shore (side containing edge.s)

    def neighbors(self, z):
        out = []
        for i, e in enumerate(self.edges):
            if e.s == z:
                out.append((e.t, i))
            elif e.t == z:
                out.append((e.s, i))
        return out

    def path_edges(self, s, t):
        """Edge indices on the unique tree path from s to t."""
        prev = {s: None}
        stack = [s]
        while stack:
            x = stack.pop()
            if x == t:
                break
            for y, i in self.neighbors(x):
                if y not in prev:
                    prev[y] = (x, i)
                    stack.append(y)
        if t not in prev:
            raise GraphError(f"terminals {s} and {t} not connected in tree")
        out = []
        y = t
        while prev[y] is not None:
            x, i = prev[y]
            out.append(i)
            y = x
        return out

    def fundamental_shore(self, edge_index):
        """Union of bags on the edge.s side of the tree edge."""
        e = self.edges[edge_index]
        side = {e.s}
        stack = [e.s]
        while stack:
            x = stack.pop()
            for y, i in self.neighbors(x):
                if i != edge_index and y not in side:
                    side.add(y)
                    stack.append(y)
        shore = set()
        for z in side:
            shore |= self.bags[z]
        return frozenset(shore)

    def degree(self, z):
        return len(self.neighbors(z))

    def is_star(self):
        if len(self.terminals) < 3:
            return False
        centers = [z for z in self.terminals if self.degree(z) == len(self.terminals) - 1]
        return len(centers) == 1

    def is_path(self):
        return all(self.degree(z) <= 2 for z in self.terminals)


def build_gh_tree(g: CapGraph, z=None) -> GHTree:
    """Build the GH tree over terminals z (all vertices if omitted).

    Unperturbed inputs are perturbed internally so all minimum cuts are
    unique, and the reported edge capacities are rounded back to the
    input capacity grid.  Already-perturbed inputs are used as-is.
    """
    if z is None:
        z = g.terminals if g.terminals else tuple(range(g.n))
    z = tuple(z)
    if len(z) < 2:
        raise GraphError("need at least two terminals")
    if not g.is_connected():
        raise GraphError("graph must be connected")

    need_deperturb = not g.perturbed
    gp = perturb(g) if need_deperturb else g

    # Tree nodes hold vertex sets; adjacency via explicit edge records.
    nodes = [set(range(g.n))]
    node_terms = [sorted(z)]
    tree = []  # (a, b, cap) with a, b node indices

    def side_vertices(node, banned_edge, via):
        """Vertices of all nodes reachable from `via` without crossing node."""
        seen = {via}
        stack = [via]
        while stack:
            x = stack.pop()
            for k, (a, b, _) in enumerate(tree):
                if k == banned_edge:
                    continue
                other = b if a == x else a if b == x else None
                if other is not None and other != node and other not in seen:
                    seen.add(other)
                    stack.append(other)
        verts = set()
        for i in seen:
            verts |= nodes[i]
        return verts

    while True:
        target = None
        for i, terms in enumerate(node_terms):
            if len(terms) >= 2:
                target = i
                break
        if target is None:
            break
        s, t = node_terms[target][0], node_terms[target][1]

        # Contract each neighboring subtree to a single supervertex.
        nbr_edges = [k for k, (a, b, _) in enumerate(tree) if target in (a, b)]
        groups = [[v] for v in sorted(nodes[target])]
        group_sets = []
        for k in nbr_edges:
            a, b, _ = tree[k]
            via = b if a == target else a
            verts = side_vertices(target, k, via)
            group_sets.append(verts)
            groups.append(sorted(verts))
        local_of = {}
        for gi, grp in enumerate(groups):
            for v in grp:
                local_of[v] = gi
        edges = []
        for u, v, cap in gp.edges:
            a, b = local_of[u], local_of[v]
            if a != b:
                edges.append((a, b, cap))
        cg = capgraph(len(groups), edges)
        res = max_flow(cg, local_of[s], local_of[t])

        # Lift the shore back to original vertices.
        shore = set()
        for v in nodes[target]:
            if local_of[v] in res.min_cut.shore:
                shore.add(v)
        side_a = shore  # contains s
        side_b = nodes[target] - shore

        new_idx = len(nodes)
        nodes.append(side_b)
        node_terms.append([x for x in node_terms[target] if x in side_b])
        nodes[target] = side_a
        node_terms[target] = [x for x in node_terms[target] if x in side_a]

        # Reattach neighbor subtrees to whichever side their supervertex fell.
        for k, verts in zip(nbr_edges, group_sets):
            a, b, cap = tree[k]
            gi = local_of[next(iter(verts))]
            on_s_side = gi in res.min_cut.shore
            keep = target if on_s_side else new_idx
            if a == target:
                tree[k] = (keep, b, cap)
            else:
                tree[k] = (a, keep, cap)
        tree.append((target, new_idx, res.value))

    term_of_node = {}
    for i, terms in enumerate(node_terms):
        assert len(terms) == 1
        term_of_node[i] = terms[0]
    bags = {term_of_node[i]: frozenset(nodes[i]) for i in range(len(nodes))}
    edges = []
    for a, b, cap in tree:
        if need_deperturb:
            cap = deperturb_value(gp, cap)
        edges.append(GHEdge(term_of_node[a], term_of_node[b], cap))
    t = GHTree(z, bags, tuple(edges), ())
    certs = tuple(t.fundamental_shore(i) for i in range(len(edges)))
    return GHTree(z, bags, tuple(edges), certs)


def tree_lambda(t: GHTree, s, u) -> Cap:
    """Minimum edge capacity on the unique tree path between two terminals."""
    if s == u:
        raise GraphError("identical terminals")
    return cap_min(t.edges[i].cap for i in t.path_edges(s, u))


@dataclass(frozen=True)
class EdgeCheck:
    edge: GHEdge
    cut_ok: bool
    flow_ok: bool

    @property
    def ok(self):
        return self.cut_ok and self.flow_ok


def verify_encoding(g: CapGraph, t: GHTree):
    """Per-edge encoding check: fundamental-cut capacity and max-flow value
    must both equal the stored tree capacity."""
    covered = set()
    for z in t.terminals:
        bag = t.bags[z]
        if z not in bag or covered & bag:
            raise GraphError("bags do not partition V")
        covered |= bag
    if covered != set(range(g.n)):
        raise GraphError("bags do not partition V")
    report = []
    for i, e in enumerate(t.edges):
        shore = t.certificates[i] if t.certificates else t.fundamental_shore(i)
        cut_ok = cut_capacity(g, shore) == e.cap
        flow_ok = max_flow(g, e.s, e.t).value == e.cap
        report.append(EdgeCheck(e, cut_ok, flow_ok))
    return report


def merge_terminal(t: GHTree, v) -> GHTree:
    """Drop terminal v, merging its bag into the neighbor across the
    max-capacity incident edge.  The result is a GH tree on Z minus v."""
    if len(t.terminals) < 3:
        raise GraphError("need at least three terminals to merge")
    if v not in t.terminals:
        raise GraphError(f"{v} is not a terminal")
    incident = t.neighbors(v)
    best = max(incident, key=lambda p: t.edges[p[1]].cap)
    ties = [p for p in incident if t.edges[p[1]].cap == t.edges[best[1]].cap]
    if len(ties) > 1:
        raise GraphError("tie on max-weight incident edge; perturb first")
    u, drop = best
    terminals = tuple(x for x in t.terminals if x != v)
    bags = {x: t.bags[x] for x in terminals}
    bags[u] = t.bags[u] | t.bags[v]
    edges = []
    for i, e in enumerate(t.edges):
        if i == drop:
            continue
        s2 = u if e.s == v else e.s
        t2 = u if e.t == v else e.t
        edges.append(GHEdge(s2, t2, e.cap))
    out = GHTree(terminals, bags, tuple(edges), ())
    certs = tuple(out.fundamental_shore(i) for i in range(len(edges)))
    return GHTree(terminals, bags, tuple(edges), certs)

"""Exact max-flow / min-cut oracle plus the brute-force validation oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .capacity import Cap
from .graph import CapGraph, Cut, GraphError, make_cut


DEFAULT_ORACLE_BOUND = 16


class BoundExceeded(RuntimeError):
    """An exhaustive search was asked to run beyond its configured bound."""


@dataclass(frozen=True)
class FlowResult:
    value: Cap
    min_cut: Cut
    flows: dict  # edge_id -> signed Cap, positive in the stored u->v direction


def max_flow(g: CapGraph, s: int, t: int) -> FlowResult:
    """Shortest-augmenting-path max flow with exact arithmetic.

    The returned cut shore is the set of vertices residual-reachable from
    s, which on perturbed inputs is the unique minimum st-cut (and is
    central).
    """
    if s == t:
        raise GraphError("source equals sink")
    n, m = g.n, g.m
    # Each undirected edge becomes a pair of arcs, each with the full capacity.
    fwd = [Cap(0)] * m  # flow on arc u->v
    bwd = [Cap(0)] * m  # flow on arc v->u
    value = Cap(0)

    def residual(eid, from_u):
        u, v, cap = g.edges[eid]
        if from_u:
            return cap - fwd[eid] + bwd[eid]
        return cap - bwd[eid] + fwd[eid]

    while True:
        # BFS for a shortest augmenting path in the residual graph.
        prev = [None] * n
        prev[s] = (s, -1, True)
        q = deque([s])
        while q and prev[t] is None:
            x = q.popleft()
            for y, eid in g.adj[x]:
                if prev[y] is None and residual(eid, g.edges[eid].u == x) > Cap(0):
                    prev[y] = (x, eid, g.edges[eid].u == x)
                    q.append(y)
        if prev[t] is None:
            break
        # Bottleneck.
        bott = None
        y = t
        while y != s:
            x, eid, from_u = prev[y]
            r = residual(eid, from_u)
            if bott is None or r < bott:
                bott = r
            y = x
        # Augment, cancelling opposite flow first.
        y = t
        while y != s:
            x, eid, from_u = prev[y]
            if from_u:
                cancel = bwd[eid] if bwd[eid] < bott else bott
                bwd[eid] = bwd[eid] - cancel
                fwd[eid] = fwd[eid] + (bott - cancel)
            else:
                cancel = fwd[eid] if fwd[eid] < bott else bott
                fwd[eid] = fwd[eid] - cancel
                bwd[eid] = bwd[eid] + (bott - cancel)
            y = x
        value = value + bott

    # Min-cut shore: residual-reachable set from s.
    reach = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y, eid in g.adj[x]:
            if y not in reach and residual(eid, g.edges[eid].u == x) > Cap(0):
                reach.add(y)
                stack.append(y)
    shore = frozenset(reach)
    flows = {i: fwd[i] - bwd[i] for i in range(m)}
    return FlowResult(value, make_cut(g, shore), flows)


def all_shore_capacities(g: CapGraph):
    """Capacity of delta(S) for every bitmask S, computed edge by edge.

    Index is the bitmask of the shore; entries for the empty and full
    shore are None.
    """
    n = g.n
    caps = [Cap(0)] * (1 << n)
    for u, v, cap in g.edges:
        bu, bv = 1 << u, 1 << v
        for mask in range(1 << n):
            if bool(mask & bu) != bool(mask & bv):
                caps[mask] = caps[mask] + cap
    caps[0] = None
    caps[(1 << n) - 1] = None
    return caps


def brute_min_cut(g: CapGraph, s: int, t: int, bound: int = DEFAULT_ORACLE_BOUND) -> Cut:
    """Minimum st-cut by enumerating every shore containing s but not t."""
    if s == t:
        raise GraphError("source equals sink")
    n = g.n
    if n > bound:
        raise BoundExceeded(f"brute_min_cut bound {bound} exceeded (n={n})")
    best_mask = None
    best_cap = None
    bs, bt = 1 << s, 1 << t
    free = [i for i in range(n) if i not in (s, t)]
    for sub in range(1 << len(free)):
        mask = bs
        for j, v in enumerate(free):
            if sub >> j & 1:
                mask |= 1 << v
        cap = Cap(0)
        for u, v, c in g.edges:
            if bool(mask & (1 << u)) != bool(mask & (1 << v)):
                cap = cap + c
        if best_cap is None or cap < best_cap:
            best_cap = cap
            best_mask = mask
    shore = frozenset(v for v in range(n) if best_mask >> v & 1)
    return make_cut(g, shore)


def lambda_matrix(g: CapGraph, z=None):
    """All-pairs minimum-cut values over the terminal set, via max_flow."""
    if z is None:
        z = g.terminals
    z = tuple(z)
    if len(z) < 2:
        raise GraphError("need at least two terminals")
    out = {}
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            s, t = z[i], z[j]
            val = max_flow(g, s, t).value
            out[(s, t)] = val
            out[(t, s)] = val
    return out

"""Cut-condition checking and exact multicommodity-flow feasibility.

Feasibility and the maximum concurrent flow are decided by one exact LP
(edge-flow formulation); the cut condition and gap numerator come from
shore enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .capacity import Cap
from .graph import CapGraph, GraphError, is_central
from .maxflow import BoundExceeded
from .simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


DEFAULT_CUT_BOUND = 18


@dataclass(frozen=True)
class MultiflowInstance:
    supply: CapGraph
    demands: tuple  # tuple of (s, t, Fraction), endpoints are terminals

    def __post_init__(self):
        zset = set(self.supply.terminals)
        for s, t, d in self.demands:
            if s not in zset or t not in zset:
                raise GraphError(f"demand endpoint {s}-{t} is not a terminal")
            if d <= 0:
                raise GraphError("demand values must be positive")


@dataclass(frozen=True)
class CutConditionResult:
    holds: bool
    shore: frozenset | None = None
    capacity: Cap | None = None
    demand: Fraction | None = None


def _separated_demand(inst, shore):
    total = Fraction(0)
    for s, t, d in inst.demands:
        if (s in shore) != (t in shore):
            total += d
    return total


def cut_condition(inst: MultiflowInstance, bound: int = DEFAULT_CUT_BOUND):
    """Check c(delta(S)) >= separated demand for every shore.

    Returns the first violated central shore, else holds.  (A violated
    shore always yields a violated central one.)
    """
    g = inst.supply
    n = g.n
    if n > bound:
        raise BoundExceeded(f"cut enumeration bound {bound} exceeded (n={n})")
    for mask in range(1, 1 << (n - 1)):  # vertex n-1 stays on the far side
        shore = frozenset(v for v in range(n - 1) if mask >> v & 1)
        dem = _separated_demand(inst, shore)
        if dem == 0:
            continue
        cap = Cap(0)
        for u, v, c in g.edges:
            if (u in shore) != (v in shore):
                cap = cap + c
        if cap < Cap(dem):
            if not is_central(g, shore):
                shore = _centralize_violation(inst, shore)
            return CutConditionResult(False, shore, cap, dem)
    return CutConditionResult(True)


def _centralize_violation(inst, shore):
    """Some component of a violated shore (or of its complement) is itself
    violated; descend until the violating shore is central."""
    g = inst.supply
    shore = set(shore)
    while not is_central(g, shore):
        comps = g.components(shore) + g.components(set(range(g.n)) - shore)
        for c in comps:
            if len(c) >= g.n:
                continue
            from .graph import cut_capacity

            if cut_capacity(g, c) < Cap(_separated_demand(inst, frozenset(c))):
                shore = c
                break
        else:
            break
    return frozenset(shore)


@dataclass(frozen=True)
class FeasibilityCert:
    feasible: bool
    flows: dict | None = None  # (commodity, edge_id, dir) -> Fraction
    violated_cut: CutConditionResult | None = None
    concurrent_value: Fraction | None = None  # LP certificate when no cut violated


def _concurrent_lp(inst: MultiflowInstance):
    """Build and solve the concurrent-flow LP; returns (lambda*, flows).

    Variables: lambda, then per commodity and edge two directed flows.
    Conservation holds at every vertex except the commodity sink; the
    source is required to emit lambda * demand net flow.  Capacity rows
    couple all commodities; infinite edges get no capacity row.
    """
    g = inst.supply
    k = len(inst.demands)
    m = g.m
    nv = 1 + 2 * m * k  # + slacks appended below

    def var(ki, eid, forward):
        return 1 + ki * 2 * m + eid * 2 + (0 if forward else 1)

    rows = []
    rhs = []
    # conservation
    for ki, (s, t, d) in enumerate(inst.demands):
        for v in range(g.n):
            if v == t:
                continue
            row = {}
            for eid, (a, b, _) in enumerate(g.edges):
                if a == v:
                    row[var(ki, eid, True)] = row.get(var(ki, eid, True), Fraction(0)) + 1
                    row[var(ki, eid, False)] = row.get(var(ki, eid, False), Fraction(0)) - 1
                elif b == v:
                    row[var(ki, eid, False)] = row.get(var(ki, eid, False), Fraction(0)) + 1
                    row[var(ki, eid, True)] = row.get(var(ki, eid, True), Fraction(0)) - 1
            if v == s:
                row[0] = -Fraction(d)
            rows.append(row)
            rhs.append(Fraction(0))
    # capacity, with slacks
    slack_rows = []
    for eid, (a, b, cap) in enumerate(g.edges):
        if not cap.is_finite:
            continue
        row = {}
        for ki in range(k):
            row[var(ki, eid, True)] = Fraction(1)
            row[var(ki, eid, False)] = Fraction(1)
        slack_rows.append((row, cap.fin))
    total_vars = nv + len(slack_rows)
    dense = []
    for row in rows:
        vec = [Fraction(0)] * total_vars
        for j, val in row.items():
            vec[j] = val
        dense.append(vec)
    for i, (row, capval) in enumerate(slack_rows):
        vec = [Fraction(0)] * total_vars
        for j, val in row.items():
            vec[j] = val
        vec[nv + i] = Fraction(1)
        dense.append(vec)
        rhs.append(capval)
    c = [Fraction(0)] * total_vars
    c[0] = Fraction(-1)  # maximize lambda
    res = solve_lp(c, dense, rhs, total_vars)
    if res.status == UNBOUNDED:
        raise GraphError("concurrent flow unbounded (demands routable at any scale)")
    assert res.status == OPTIMAL  # lambda = 0, zero flow is always feasible
    lam = res.x[0]
    flows = {}
    for ki in range(k):
        for eid in range(m):
            f = res.x[var(ki, eid, True)]
            r = res.x[var(ki, eid, False)]
            if f or r:
                flows[(ki, eid)] = (f, r)
    return lam, flows


def max_concurrent_flow(inst: MultiflowInstance) -> Fraction:
    """Largest lambda such that lambda-scaled demands route exactly."""
    lam, _ = _concurrent_lp(inst)
    return lam


def feasible(inst: MultiflowInstance) -> FeasibilityCert:
    """Exact feasibility of the multiflow instance.

    Feasible certificates carry per-commodity directed edge flows (scaled
    down from the concurrent optimum).  Infeasible ones carry a violated
    cut when one exists, else the concurrent value lambda* < 1 as the LP
    certificate.
    """
    lam, flows = _concurrent_lp(inst)
    if lam >= 1:
        scale = Fraction(1) / lam
        scaled = {
            key: (f * scale, r * scale) for key, (f, r) in flows.items()
        }
        return FeasibilityCert(True, flows=scaled, concurrent_value=lam)
    try:
        cc = cut_condition(inst)
    except BoundExceeded:
        cc = CutConditionResult(True)
    if not cc.holds:
        return FeasibilityCert(False, violated_cut=cc, concurrent_value=lam)
    return FeasibilityCert(False, concurrent_value=lam)


def min_cut_ratio(inst: MultiflowInstance, bound: int = DEFAULT_CUT_BOUND) -> Fraction:
    """min over demand-separating shores of capacity / separated demand."""
    g = inst.supply
    n = g.n
    if n > bound:
        raise BoundExceeded(f"cut enumeration bound {bound} exceeded (n={n})")
    best = None
    for mask in range(1, 1 << (n - 1)):
        shore = frozenset(v for v in range(n - 1) if mask >> v & 1)
        dem = _separated_demand(inst, shore)
        if dem == 0:
            continue
        cap = Cap(0)
        for u, v, c in g.edges:
            if (u in shore) != (v in shore):
                cap = cap + c
        if not cap.is_finite:
            continue
        ratio = cap.fin / dem
        if best is None or ratio < best:
            best = ratio
    if best is None:
        raise GraphError("no cut separates any demand")
    return best


def flow_cut_gap(inst: MultiflowInstance, bound: int = DEFAULT_CUT_BOUND) -> Fraction:
    """(best cut bound) / (max concurrent flow); 1 iff cuts are achievable."""
    ratio = min_cut_ratio(inst, bound)
    lam = max_concurrent_flow(inst)
    if lam == 0:
        raise GraphError("zero concurrent flow")
    return ratio / lam


def k4_demand_route(f_graph: CapGraph, triple, d_xy, d_yz, d_zx):
    """Route triangle demands on the attachment triple inside a
    3-separated graph; the flow-mapping step of the reduction proof.

    Returns a FeasibilityCert; a violated cut signals caller error since
    demands produced by a feasible reduced flow always satisfy the cut
    condition inside F.
    """
    x, y, z = triple
    demands = []
    for (s, t), d in (((x, y), d_xy), ((y, z), d_yz), ((z, x), d_zx)):
        if d > 0:
            demands.append((s, t, Fraction(d)))
    if not demands:
        return FeasibilityCert(True, flows={})
    g = f_graph
    if set(g.terminals) != {x, y, z} and not set((x, y, z)) <= set(g.terminals):
        g = CapGraph(g.n, g.edges, (x, y, z), g.perturbed, g.grid)
    inst = MultiflowInstance(g, tuple(demands))
    cc = cut_condition(inst)
    if not cc.holds:
        return FeasibilityCert(False, violated_cut=cc)
    return feasible(inst)

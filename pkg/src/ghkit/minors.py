"""Terminal-minor detection for fixed patterns, by branch-set search.

A pattern H occurs as a terminal minor of (G, Z) if there are pairwise
disjoint connected branch sets, one per pattern vertex, each containing
a distinct terminal, with a G-edge between the branch sets of every
pattern edge.  The search fixes the pattern-vertex -> terminal seeding
first (up to pattern automorphisms), then grows branch sets only when a
pending pattern edge demands it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import CapGraph, GraphError
from .maxflow import BoundExceeded


DEFAULT_MINOR_BOUND = 20


@dataclass(frozen=True)
class MinorPattern:
    name: str
    k: int
    edges: tuple  # tuple of (i, j) with i < j

    def degree(self, i):
        return sum(1 for a, b in self.edges if i in (a, b))

    def automorphisms(self):
        """All vertex permutations preserving the edge set."""
        eset = set(self.edges)
        out = []
        for perm in permutations(range(self.k)):
            if all(
                (min(perm[a], perm[b]), max(perm[a], perm[b])) in eset
                for a, b in self.edges
            ):
                out.append(perm)
        return out


def k23() -> MinorPattern:
    # vertices 0,1 = degree-3 side; 2,3,4 = degree-2 side
    return MinorPattern("k23", 5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)))


def k4() -> MinorPattern:
    return MinorPattern("k4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def k4_plus() -> MinorPattern:
    # K4 on 0..3 with edge (0,1) subdivided by vertex 4
    return MinorPattern(
        "k4plus", 5, ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4))
    )


def cycle(k: int) -> MinorPattern:
    if k < 3:
        raise GraphError("cycle pattern needs k >= 3")
    return MinorPattern(f"cycle{k}", k, tuple(
        (i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)
    ))


PATTERNS = {"k23": k23, "k4": k4, "k4plus": k4_plus}


@dataclass(frozen=True)
class MinorEmbedding:
    pattern: MinorPattern
    branch_sets: tuple  # tuple of frozensets, indexed by pattern vertex
    seeds: tuple  # terminal assigned to each pattern vertex


def verify_embedding(g: CapGraph, z, pattern: MinorPattern, emb: MinorEmbedding) -> bool:
    """Re-check all four branch-set invariants against g."""
    sets = emb.branch_sets
    if len(sets) != pattern.k:
        return False
    seen = set()
    zset = set(z)
    for i, s in enumerate(sets):
        if not s or (seen & s):
            return False
        seen |= s
        if not g.induced_connected(s):
            return False
        if emb.seeds[i] not in s or emb.seeds[i] not in zset:
            return False
    if len(set(emb.seeds)) != pattern.k:
        return False
    for a, b in pattern.edges:
        if not any(
            (u in sets[a] and v in sets[b]) or (v in sets[a] and u in sets[b])
            for u, v, _ in g.edges
        ):
            return False
    return True


def _seed_assignments(pattern: MinorPattern, z):
    """Injections pattern vertex -> terminal, deduplicated by automorphism."""
    auts = pattern.automorphisms()
    seen = set()
    for perm in permutations(z, pattern.k):
        rep = min(tuple(perm[a[i]] for i in range(pattern.k)) for a in auts)
        if rep in seen:
            continue
        seen.add(rep)
        yield perm


def _search(g: CapGraph, pattern, seeds):
    """Grow branch sets from seeds until every pattern edge is realized.

    Branches only when the currently pending pattern edge has no
    connecting graph edge yet: every free vertex adjacent to either
    endpoint's branch set may be added to that set.  Complete because any
    valid embedding extends some branch explored here.
    """
    k = pattern.k
    init = tuple(frozenset([s]) for s in seeds)
    visited = set()

    adj = g.adj

    def realized(sets, a, b):
        sa, sb = sets[a], sets[b]
        for u in sa:
            for v, _ in adj[u]:
                if v in sb:
                    return True
        return False

    def rec(sets, used):
        if sets in visited:
            return None
        visited.add(sets)
        pending = [(a, b) for a, b in pattern.edges if not realized(sets, a, b)]
        if not pending:
            return sets
        # Expand the pending edge with the fewest growth options.
        best = None
        best_moves = None
        for a, b in pending:
            moves = []
            for side in (a, b):
                for u in sets[side]:
                    for v, _ in adj[u]:
                        if v not in used:
                            moves.append((side, v))
            if not moves:
                return None  # this edge can never be realized
            if best_moves is None or len(moves) < len(best_moves):
                best, best_moves = (a, b), moves
        seen_moves = set()
        for side, v in best_moves:
            if (side, v) in seen_moves:
                continue
            seen_moves.add((side, v))
            nsets = tuple(
                s | {v} if i == side else s for i, s in enumerate(sets)
            )
            res = rec(nsets, used | {v})
            if res is not None:
                return res
        return None

    return rec(init, set(seeds))


def detect_terminal_minor(
    g: CapGraph, z, pattern: MinorPattern, bound: int = DEFAULT_MINOR_BOUND
):
    """Exhaustively search for a terminal minor; None certifies absence."""
    if g.n > bound:
        raise BoundExceeded(f"minor search bound {bound} exceeded (n={g.n})")
    z = tuple(z)
    if len(z) < pattern.k:
        return None
    for seeds in _seed_assignments(pattern, z):
        sets = _search(g, pattern, seeds)
        if sets is not None:
            emb = MinorEmbedding(pattern, sets, seeds)
            assert verify_embedding(g, z, pattern, emb)
            return emb
    return None


def slow_detect_terminal_minor(g: CapGraph, z, pattern: MinorPattern, bound: int = 9):
    """Independent slow enumerator used as an oracle for the fast search.

    Precomputes every connected vertex subset as a bitmask, then picks
    one per pattern vertex (disjoint, each holding that vertex's seed
    terminal), checking pattern edges as soon as both ends are placed.
    """
    if g.n > bound:
        raise BoundExceeded(f"slow minor search bound {bound} exceeded (n={g.n})")
    z = tuple(z)
    k = pattern.k
    n = g.n
    if len(z) < k:
        return None

    # All connected induced subsets, as bitmasks.
    connected = []
    for mask in range(1, 1 << n):
        verts = [v for v in range(n) if mask >> v & 1]
        if g.component_of(verts[0], verts) == set(verts):
            connected.append(mask)

    # Adjacency between masks: precompute per-vertex neighbor masks.
    nbr_mask = [0] * n
    for u, v, _ in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u

    def masks_adjacent(a, b):
        for v in range(n):
            if a >> v & 1 and nbr_mask[v] & b:
                return True
        return False

    by_seed = {}
    for mask in connected:
        for t in z:
            if mask >> t & 1:
                by_seed.setdefault(t, []).append(mask)

    edges_to_prev = [
        [(a, b) for a, b in pattern.edges if max(a, b) == p] for p in range(k)
    ]

    def rec(p, chosen, used_mask, seeds):
        if p == k:
            sets = tuple(
                frozenset(v for v in range(n) if chosen[i] >> v & 1) for i in range(k)
            )
            return MinorEmbedding(pattern, sets, tuple(seeds))
        for t in z:
            if t in seeds or used_mask >> t & 1:
                continue
            for mask in by_seed.get(t, ()):
                if mask & used_mask:
                    continue
                ok = True
                for a, b in edges_to_prev[p]:
                    other = chosen[a] if b == p else chosen[b]
                    if not masks_adjacent(mask, other):
                        ok = False
                        break
                if not ok:
                    continue
                chosen.append(mask)
                seeds.append(t)
                res = rec(p + 1, chosen, used_mask | mask, seeds)
                chosen.pop()
                seeds.pop()
                if res is not None:
                    return res
        return None

    return rec(0, [], 0, [])


def two_disjoint_paths(g: CapGraph, s1, t1, s2, t2, bound: int = DEFAULT_MINOR_BOUND):
    """Do vertex-disjoint paths s1-t1 and s2-t2 exist?  Exhaustive search
    over simple s1-t1 paths, checking s2-t2 connectivity in the rest."""
    if g.n > bound:
        raise BoundExceeded(f"linkage search bound {bound} exceeded (n={g.n})")
    if len({s1, t1, s2, t2}) != 4:
        raise GraphError("the four endpoints must be distinct")

    def connected_avoiding(a, b, banned):
        if a in banned or b in banned:
            return False
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for y, _ in g.adj[x]:
                if y not in seen and y not in banned:
                    seen.add(y)
                    stack.append(y)
        return False

    path = [s1]
    on_path = {s1}

    def rec(x):
        if x == t1:
            return connected_avoiding(s2, t2, on_path)
        for y, _ in g.adj[x]:
            if y in on_path or y in (s2, t2):
                continue
            on_path.add(y)
            path.append(y)
            if connected_avoiding(s2, t2, on_path) and rec(y):
                return True
            path.pop()
            on_path.remove(y)
        return False

    return rec(s1)


def crossing_linkage(g: CapGraph, z, i, j, i2, j2, bound: int = DEFAULT_MINOR_BOUND):
    """Crossing 2-linkage over the cyclic terminal order: disjoint paths
    t_i..t_i2 and t_j..t_j2 with i < j < i2 < j2."""
    if not (i < j < i2 < j2):
        raise GraphError("indices must interleave: i < j < i2 < j2")
    z = tuple(z)
    return two_disjoint_paths(g, z[i], z[i2], z[j], z[j2], bound)


@dataclass(frozen=True)
class ImpliedMinorReport:
    k4_found: bool
    k23_found: bool
    cycle_found: bool
    two_connected: bool
    k4_implies_k23_ok: bool
    spanning_cycle_ok: bool

    @property
    def ok(self):
        return self.k4_implies_k23_ok and self.spanning_cycle_ok


def implied_minor_checks(g: CapGraph, z, bound: int = DEFAULT_MINOR_BOUND):
    """Cross-check the structural implications on one instance:
    (a) |Z| >= 5 and terminal-K4 implies terminal-K2,3;
    (b) 2-connected, |Z| >= 5, K2,3-free implies a spanning terminal cycle.
    Violations indicate implementation bugs, not instance properties."""
    from .graph import is_two_connected

    z = tuple(z)
    k4_emb = detect_terminal_minor(g, z, k4(), bound) if len(z) >= 4 else None
    k23_emb = detect_terminal_minor(g, z, k23(), bound) if len(z) >= 5 else None
    two_conn = is_two_connected(g)
    cyc_emb = None
    if len(z) >= 3 and two_conn:
        cyc_emb = detect_terminal_minor(g, z, cycle(len(z)), bound)
    a_ok = True
    if len(z) >= 5 and k4_emb is not None:
        a_ok = k23_emb is not None
    b_ok = True
    if two_conn and len(z) >= 5 and k23_emb is None:
        b_ok = cyc_emb is not None
    return ImpliedMinorReport(
        k4_found=k4_emb is not None,
        k23_found=k23_emb is not None,
        cycle_found=cyc_emb is not None,
        two_connected=two_conn,
        k4_implies_k23_ok=a_ok,
        spanning_cycle_ok=b_ok,
    )

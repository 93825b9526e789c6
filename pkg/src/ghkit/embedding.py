"""Structural embeddings of GH trees: subgraph, bag minor, weak bag minor."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import CapGraph, GraphError, has_crossing_edge
from .ghtree import GHTree, build_gh_tree
from .maxflow import BoundExceeded


DEFAULT_DELETION_BOUND = 12


@dataclass(frozen=True)
class EmbeddingVerdict:
    mode: str  # subgraph | bag_minor | weak_bag_minor | none
    witness: object = None


def is_gh_subgraph(g: CapGraph, t: GHTree = None):
    """Is the (unique) all-vertex GH tree a subgraph of g?

    Returns (bool, witness); the witness maps each tree edge to the graph
    edge id realizing it.
    """
    if t is None:
        t = build_gh_tree(g, tuple(range(g.n)))
    if set(t.terminals) != set(range(g.n)):
        raise GraphError("subgraph check needs a tree on all vertices")
    witness = {}
    for e in t.edges:
        i = g.edge_index.get((min(e.s, e.t), max(e.s, e.t)))
        if i is None:
            return False, None
        witness[(e.s, e.t)] = i
    return True, witness


def _bag_minor_witness(g: CapGraph, t: GHTree, deleted=frozenset()):
    """Check the two bag-minor conditions after deleting `deleted` vertices.

    Returns a witness dict or None.  Condition (i): each pruned bag
    induces a connected subgraph still containing its terminal.
    Condition (ii): each tree edge has a connecting graph edge between
    the pruned bags.
    """
    pruned = {}
    for z in t.terminals:
        bag = set(t.bags[z]) - deleted
        if z not in bag:
            return None
        if not g.induced_connected(bag):
            return None
        pruned[z] = bag
    connectors = {}
    for e in t.edges:
        found = None
        for u, v, _ in g.edges:
            if u in deleted or v in deleted:
                continue
            if (u in pruned[e.s] and v in pruned[e.t]) or (
                v in pruned[e.s] and u in pruned[e.t]
            ):
                found = (u, v)
                break
        if found is None:
            return None
        connectors[(e.s, e.t)] = found
    return {"bags": pruned, "connectors": connectors}


def check_bag_minor(g: CapGraph, t: GHTree):
    """Does the GH Z-tree occur as a bag minor of g?

    (i) every bag induces a connected subgraph and (ii) every tree edge
    is realized by an edge of g between the two bags.
    """
    w = _bag_minor_witness(g, t)
    if w is None:
        return False, None
    return True, w


class Inconclusive(RuntimeError):
    """The bounded exhaustive search ran out of budget without a verdict."""


def check_weak_bag_minor(g: CapGraph, t: GHTree, deletion_bound=DEFAULT_DELETION_BOUND):
    """Does the tree occur as a bag minor after deleting non-terminals?

    Tries the pruning heuristic first (drop, in each bag, the vertices
    outside the terminal's component), then falls back to exhaustive
    search over deletion subsets of non-terminal vertices.

    Returns (True, deleted_set, witness) or (False, None, None).
    """
    w = _bag_minor_witness(g, t)
    if w is not None:
        return True, frozenset(), w

    # Heuristic: keep only the terminal's component inside each bag.
    pruned_away = set()
    for z in t.terminals:
        bag = set(t.bags[z])
        comp = g.component_of(z, bag)
        pruned_away |= bag - comp
    if pruned_away:
        w = _bag_minor_witness(g, t, frozenset(pruned_away))
        if w is not None:
            return True, frozenset(pruned_away), w

    nonterminals = sorted(set(range(g.n)) - set(t.terminals))
    if len(nonterminals) > deletion_bound:
        raise Inconclusive(
            f"{len(nonterminals)} non-terminals exceeds deletion bound {deletion_bound}"
        )
    for k in range(1, len(nonterminals) + 1):
        for combo in combinations(nonterminals, k):
            deleted = frozenset(combo)
            w = _bag_minor_witness(g, t, deleted)
            if w is not None:
                return True, deleted, w
    return False, None, None


def embedding_verdict(g: CapGraph, t: GHTree, deletion_bound=DEFAULT_DELETION_BOUND):
    """Strongest embedding mode this tree achieves in g."""
    if set(t.terminals) == set(range(g.n)):
        ok, w = is_gh_subgraph(g, t)
        if ok:
            return EmbeddingVerdict("subgraph", w)
    ok, w = check_bag_minor(g, t)
    if ok:
        return EmbeddingVerdict("bag_minor", w)
    ok, deleted, w = check_weak_bag_minor(g, t, deletion_bound)
    if ok:
        return EmbeddingVerdict("weak_bag_minor", {"deleted": deleted, **w})
    return EmbeddingVerdict("none")


@dataclass(frozen=True)
class FourTerminalVerdict:
    shape: str  # "path" or "star"
    mode: str  # "bag_minor" or "weak_bag_minor"
    tree: GHTree
    deleted: frozenset = frozenset()


def four_terminal_structure(g: CapGraph, z) -> FourTerminalVerdict:
    """Classify the GH Z-tree of a <=4-terminal instance.

    A path-shaped tree must occur as a bag minor; a star-shaped tree is
    guaranteed only as a weak bag minor.
    """
    z = tuple(z)
    if len(z) > 4:
        raise GraphError("at most four terminals")
    t = build_gh_tree(g, z)
    shape = "star" if t.is_star() and len(z) == 4 else "path"
    ok, w = check_bag_minor(g, t)
    if ok:
        return FourTerminalVerdict(shape, "bag_minor", t)
    ok, deleted, w = check_weak_bag_minor(g, t)
    if not ok:
        raise AssertionError("four-terminal instance without a weak bag minor")
    return FourTerminalVerdict(shape, "weak_bag_minor", t, deleted)

"""Deterministic DOT emission for graphs, GH trees, and witnesses."""

from __future__ import annotations

from .graph import CapGraph
from .ghtree import GHTree
from .io import format_capacity


def graph_dot(g: CapGraph, highlight_edges=(), name="G") -> str:
    terms = set(g.terminals)
    hl = set(highlight_edges)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        shape = ' [shape=doublecircle]' if v in terms else ""
        lines.append(f"  {v}{shape};")
    for i, (u, v, cap) in enumerate(g.edges):
        attrs = [f'label="{format_capacity(cap)}"']
        if i in hl:
            attrs.append("penwidth=3")
            attrs.append("color=red")
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_dot(t: GHTree, name="T") -> str:
    lines = [f"graph {name} {{", "  compound=true;"]
    for z in t.terminals:
        lines.append(f"  subgraph cluster_{z} {{")
        lines.append(f'    label="B({z})";')
        lines.append(f"    {z} [shape=doublecircle];")
        for v in sorted(t.bags[z]):
            if v != z:
                lines.append(f"    {v};")
        lines.append("  }")
    for e in t.edges:
        lines.append(f'  {e.s} -- {e.t} [label="{format_capacity(e.cap)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_dot(g: CapGraph, branch_sets, name="M") -> str:
    terms = set(g.terminals)
    lines = [f"graph {name} {{"]
    assigned = {}
    for i, s in enumerate(branch_sets):
        lines.append(f"  subgraph cluster_b{i} {{")
        lines.append(f'    label="branch {i}";')
        for v in sorted(s):
            assigned[v] = i
            shape = " [shape=doublecircle]" if v in terms else ""
            lines.append(f"    {v}{shape};")
        lines.append("  }")
    for v in range(g.n):
        if v not in assigned:
            lines.append(f"  {v} [style=dotted];")
    for u, v, cap in g.edges:
        lines.append(f'  {u} -- {v} [label="{format_capacity(cap)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

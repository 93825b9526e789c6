"""Text interchange format for graphs, demands, and 3-separated sets.

    # comment lines start with '#'
    n m k
    t1 t2 ... tk
    u v cap          (m lines; cap is `p`, `p/q`, or `inf`)
    D s t val        (optional demand lines)
    F: x y z : i1 i2 ...   (optional 3-separated set declarations)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .capacity import Cap
from .graph import CapGraph, GraphError, capgraph
from .generators import ThreeSeparatedSet


@dataclass(frozen=True)
class ParsedInstance:
    graph: CapGraph
    demands: tuple = ()
    tsets: tuple = ()


def parse_capacity(token: str) -> Cap:
    token = token.strip()
    if token == "inf":
        return Cap(0, 1)
    if "inf" in token:
        # e.g. "2*inf+5/3"
        head, _, tail = token.partition("*inf")
        fin = Fraction(tail.lstrip("+")) if tail else Fraction(0)
        return Cap(fin, int(head))
    return Cap(Fraction(token))


def format_capacity(cap: Cap) -> str:
    if cap.inf == 0:
        return str(cap.fin)
    if cap.fin == 0:
        return "inf" if cap.inf == 1 else f"{cap.inf}*inf"
    return f"{cap.inf}*inf+{cap.fin}"


def parse_instance(text: str) -> ParsedInstance:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise GraphError("empty input")
    try:
        n, m, k = (int(x) for x in lines[0].split())
    except ValueError as e:
        raise GraphError(f"bad header line: {lines[0]!r}") from e
    idx = 1
    terminals = ()
    if k > 0:
        terminals = tuple(int(x) for x in lines[idx].split())
        if len(terminals) != k:
            raise GraphError(f"expected {k} terminals, got {len(terminals)}")
        idx += 1
    edges = []
    for _ in range(m):
        parts = lines[idx].split()
        if len(parts) != 3:
            raise GraphError(f"bad edge line: {lines[idx]!r}")
        edges.append((int(parts[0]), int(parts[1]), parse_capacity(parts[2])))
        idx += 1
    demands = []
    tsets = []
    while idx < len(lines):
        ln = lines[idx]
        idx += 1
        if ln.startswith("D "):
            parts = ln.split()
            demands.append((int(parts[1]), int(parts[2]), Fraction(parts[3])))
        elif ln.startswith("F:"):
            body = ln[2:]
            head, _, tail = body.partition(":")
            attach = tuple(int(x) for x in head.split())
            if len(attach) != 3:
                raise GraphError(f"3-separated set needs 3 attachment vertices: {ln!r}")
            interior = frozenset(int(x) for x in tail.split())
            tsets.append(ThreeSeparatedSet(attach, interior))
        else:
            raise GraphError(f"unrecognized trailer line: {ln!r}")
    g = capgraph(n, edges, terminals)
    return ParsedInstance(g, tuple(demands), tuple(tsets))


def format_instance(
    g: CapGraph, demands=(), tsets=(), comment: str | None = None
) -> str:
    out = []
    if comment:
        for ln in comment.splitlines():
            out.append(f"# {ln}")
    out.append(f"{g.n} {g.m} {len(g.terminals)}")
    if g.terminals:
        out.append(" ".join(str(t) for t in g.terminals))
    for u, v, cap in g.edges:
        out.append(f"{u} {v} {format_capacity(cap)}")
    for s, t, d in demands:
        out.append(f"D {s} {t} {d}")
    for ts in tsets:
        out.append(
            "F: "
            + " ".join(str(x) for x in ts.attachment)
            + " : "
            + " ".join(str(v) for v in sorted(ts.interior))
        )
    return "\n".join(out) + "\n"


def load(path) -> ParsedInstance:
    with open(path) as fh:
        return parse_instance(fh.read())


def dump(path, g, demands=(), tsets=(), comment=None):
    with open(path, "w") as fh:
        fh.write(format_instance(g, demands, tsets, comment))

"""Graphviz DOT rendering of (optionally labeled) graphs."""

from __future__ import annotations

from .graph import Graph
from .labeling import TotalLabeling


def _q(text) -> str:
    return '"' + str(text).replace('"', '\\"') + '"'


def to_dot(g: Graph, lab: TotalLabeling | None = None, name: str = "G") -> str:
    lines = [f"graph {_q(name)} {{"]
    for x in g.vertices:
        if lab is None:
            lines.append(f"  {_q(x)};")
        else:
            lines.append(f"  {_q(x)} [label={_q(f'{x}: {lab.vertex_labels[x]}')}];")
    for a, b in g.edges:
        attr = "" if lab is None else f" [label={_q(lab.edge_labels[(a, b)])}]"
        lines.append(f"  {_q(a)} -- {_q(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"

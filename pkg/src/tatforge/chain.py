"""Concatenate super-labeled blocks into a chain graph.

Block ``i`` and block ``i+1`` share one cut vertex: the vertex labeled ``1`` in
block ``i`` is identified with the vertex labeled ``p_{i+1}`` (its order) in
block ``i+1``.  Labels of block ``i >= 2`` are shifted by

* vertices: ``S_i - (i-2)``
* edges:    ``S_i - (i-1)``

where ``S_i`` is the total number of elements in blocks ``1..i-1``.  The merged
vertex keeps the shifted label of block ``i``'s vertex labeled ``1``; the label
of block ``i+1``'s vertex is dropped.  The composite labeling need not be a
bijection, so it is judged by the verifier like any other labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError, InvalidParameterError
from .graph import Edge, Family, Graph, VertexId, build_path, make_edge, plain
from .labeling import TotalLabeling, read_labeling
from .search import SearchOptions, find_tat
from .verifier import check_super

Block = tuple[Graph, TotalLabeling]


@dataclass
class ChainResult:
    graph: Graph
    labeling: TotalLabeling
    vertex_maps: list[dict[VertexId, VertexId]]
    edge_maps: list[dict[Edge, Edge]]
    cut_vertices: list[VertexId]
    offsets: list[tuple[int, int]]

    def is_cut(self, x: VertexId) -> bool:
        return x in self.cut_vertices


def block_offsets(sizes: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """``(vertex_shift, edge_shift)`` per block, from ``(p_i, q_i)`` sizes."""
    out = []
    before = 0
    for i, (p, q) in enumerate(sizes, 1):
        out.append((0, 0) if i == 1 else (before - (i - 2), before - (i - 1)))
        before += p + q
    return out


def _vertex_labeled(g: Graph, lab: TotalLabeling, value: int) -> VertexId:
    return next(x for x in g.vertices if lab.vertex_labels[x] == value)


def chain_compose(blocks: list[Block]) -> ChainResult:
    if not blocks:
        raise InvalidParameterError("chain needs at least one block")
    for k, (g, lab) in enumerate(blocks, 1):
        ok, ws = check_super(g, lab)
        if not ok:
            raise InvalidParameterError(f"block {k} is not super bijective ({ws[0]})")
    offsets = block_offsets([(g.p, g.q) for g, _ in blocks])
    if len(blocks) == 1:
        g, lab = blocks[0]
        return ChainResult(g, lab, [{x: x for x in g.vertices}], [{e: e for e in g.edges}], [], offsets)

    vertices: list[VertexId] = []
    edges: list[Edge] = []
    vlabels: dict[VertexId, int] = {}
    elabels: dict[Edge, int] = {}
    vmaps, emaps, cuts = [], [], []
    prev_one: VertexId | None = None
    for k, ((g, lab), (voff, eoff)) in enumerate(zip(blocks, offsets)):
        merge_src = _vertex_labeled(g, lab, g.p) if k > 0 else None
        vmap = {}
        for x in g.vertices:
            if x == merge_src:
                vmap[x] = prev_one
                continue
            y = plain(len(vertices) + 1)
            vertices.append(y)
            vlabels[y] = lab.vertex_labels[x] + voff
            vmap[x] = y
        if merge_src is not None:
            cuts.append(prev_one)
        emap = {}
        for e in g.edges:
            f = make_edge(vmap[e[0]], vmap[e[1]])
            edges.append(f)
            elabels[f] = lab.edge_labels[e] + eoff
            emap[e] = f
        vmaps.append(vmap)
        emaps.append(emap)
        prev_one = vmap[_vertex_labeled(g, lab, 1)]

    graph = Graph(tuple(vertices), tuple(edges), Family("chain", len(blocks)))
    return ChainResult(graph, TotalLabeling(vlabels, elabels), vmaps, emaps, cuts, offsets)


def path_block(n: int, opts: SearchOptions | None = None) -> Block:
    """Super TAT path on ``n`` vertices with label ``n`` on one end and ``1`` on the other."""
    g = build_path(n)
    opts = opts or SearchOptions(require_super=True)
    out = find_tat(g, opts, pinned={plain(1): n, plain(n): 1})
    if not out.found:
        raise InvalidParameterError(f"no end-pinned super TAT labeling of P_{n} ({out.status})")
    return g, out.labeling


def chain_paths(lengths: list[int], opts: SearchOptions | None = None) -> ChainResult:
    """Chain of paths joined end to start; the result is itself a path."""
    if not lengths:
        raise InvalidParameterError("need at least one path")
    for n in lengths:
        if n < 2:
            raise InvalidParameterError(f"path length must be >= 2, got {n}")
    return chain_compose([path_block(n, opts) for n in lengths])


def read_manifest(path) -> list[Block]:
    """Block labeling files, one path per line, relative to the manifest."""
    path = Path(path)
    blocks = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        target = (path.parent / line).resolve()
        if not target.is_file():
            raise FormatError(f"{path}:{lineno}: no such block file {line!r}")
        try:
            g, lab, _ = read_labeling(target)
        except FormatError as exc:
            raise FormatError(f"{target}: {exc}") from None
        blocks.append((g, lab))
    if not blocks:
        raise FormatError(f"{path}: manifest lists no blocks")
    return blocks

"""Total labelings, edge/vertex weights, and the JSON labeling file format.

File schema (``tatforge-labeling/1``)::

    {
      "format": "tatforge-labeling/1",
      "family": {"name": "ladder", "n": 3, "m": null},   # or null for custom graphs
      "vertex_labels": [1, 3, 2, 4, 6, 5],               # family: u_1..u_n then v_1..v_n
      "edge_labels": [["u_1", "u_2", 10], ...],          # one entry per edge
      "meta": {...}                                      # optional, free-form, round-tripped
    }

For custom graphs ``vertex_labels`` is a list of ``[name, label]`` pairs and the
edge set is taken from ``edge_labels``.  Vertex names are ``u_i`` / ``v_i`` for
family graphs and bare positive integers (as strings) otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import FormatError, IncompleteLabelingError, TatError
from .graph import CUSTOM, Edge, Family, Graph, VertexId, build_family, make_edge

FORMAT_TAG = "tatforge-labeling/1"


@dataclass
class TotalLabeling:
    vertex_labels: dict[VertexId, int] = field(default_factory=dict)
    edge_labels: dict[Edge, int] = field(default_factory=dict)

    def __getitem__(self, x) -> int:
        if isinstance(x, VertexId):
            return self.vertex_labels[x]
        return self.edge_labels[make_edge(*x)]

    def missing(self, g: Graph) -> list:
        return [x for x in g.vertices if x not in self.vertex_labels] + [
            e for e in g.edges if e not in self.edge_labels
        ]

    def require_complete(self, g: Graph) -> None:
        gaps = self.missing(g)
        if gaps:
            raise IncompleteLabelingError(f"{len(gaps)} element(s) unlabeled, first: {gaps[0]}")
        bad = [(x, lab) for x, lab in self.items(g) if not isinstance(lab, int) or lab < 1]
        if bad:
            raise IncompleteLabelingError(f"label {bad[0][1]!r} on {bad[0][0]} is not a positive integer")

    def items(self, g: Graph):
        """(element, label) pairs in the graph's canonical element order."""
        for x in g.vertices:
            yield x, self.vertex_labels[x]
        for e in g.edges:
            yield e, self.edge_labels[e]

    def labels(self, g: Graph) -> list[int]:
        return [lab for _, lab in self.items(g)]


@dataclass
class WeightProfile:
    vertex_weights: dict[VertexId, int]
    edge_weights: dict[Edge, int]


def _label(mapping: Mapping, key) -> int:
    try:
        return mapping[key]
    except KeyError:
        raise IncompleteLabelingError(f"no label on {key}") from None


def edge_weight(g: Graph, lab: TotalLabeling, e: Edge) -> int:
    a, b = g.edge(*e)
    return _label(lab.vertex_labels, a) + _label(lab.vertex_labels, b) + _label(lab.edge_labels, (a, b))


def vertex_weight(g: Graph, lab: TotalLabeling, x: VertexId) -> int:
    inc = g.incident(x)
    return _label(lab.vertex_labels, x) + sum(_label(lab.edge_labels, e) for e in inc)


def weight_profile(g: Graph, lab: TotalLabeling) -> WeightProfile:
    lab.require_complete(g)
    vl, el = lab.vertex_labels, lab.edge_labels
    vw = {x: vl[x] for x in g.vertices}
    ew = {}
    for e in g.edges:
        a, b = e
        vw[a] += el[e]
        vw[b] += el[e]
        ew[e] = vl[a] + vl[b] + el[e]
    return WeightProfile(vw, ew)


def is_family_layout(g: Graph) -> bool:
    return g.family.name in ("ladder", "prism", "petersen")


def to_document(g: Graph, lab: TotalLabeling, meta: dict | None = None) -> dict[str, Any]:
    lab.require_complete(g)
    doc: dict[str, Any] = {"format": FORMAT_TAG}
    if g.family != CUSTOM:
        doc["family"] = {"name": g.family.name, "n": g.family.n, "m": g.family.m}
    else:
        doc["family"] = None
    if is_family_layout(g):
        doc["vertex_labels"] = [lab.vertex_labels[x] for x in g.vertices]
    else:
        doc["vertex_labels"] = [[str(x), lab.vertex_labels[x]] for x in g.vertices]
    doc["edge_labels"] = [[str(a), str(b), lab.edge_labels[(a, b)]] for a, b in g.edges]
    if meta:
        doc["meta"] = meta
    return doc


def dumps(g: Graph, lab: TotalLabeling, meta: dict | None = None) -> str:
    doc = to_document(g, lab, meta)
    # one edge per line keeps diffs readable
    lines = ["{", f'  "format": {json.dumps(doc["format"])},', f'  "family": {json.dumps(doc["family"])},']
    lines.append(f'  "vertex_labels": {json.dumps(doc["vertex_labels"])},')
    edge_lines = ",\n".join("    " + json.dumps(x) for x in doc["edge_labels"])
    tail = "," if "meta" in doc else ""
    lines.append(f'  "edge_labels": [\n{edge_lines}\n  ]{tail}')
    if "meta" in doc:
        lines.append(f'  "meta": {json.dumps(doc["meta"], sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _expect(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise FormatError(f"field {where}: {msg}")


def _positive_int(x, where: str) -> int:
    _expect(isinstance(x, int) and not isinstance(x, bool) and x >= 1, where, f"expected positive integer, got {x!r}")
    return x


def _vertex(name, where: str) -> VertexId:
    _expect(isinstance(name, str), where, f"expected vertex name string, got {name!r}")
    try:
        return VertexId.parse(name)
    except TatError as exc:
        raise FormatError(f"field {where}: {exc}") from None


def from_document(doc: Any) -> tuple[Graph, TotalLabeling, dict]:
    _expect(isinstance(doc, dict), "<root>", "expected an object")
    _expect(doc.get("format") == FORMAT_TAG, "format", f"expected {FORMAT_TAG!r}, got {doc.get('format')!r}")
    for key in ("family", "vertex_labels", "edge_labels"):
        _expect(key in doc, key, "missing")
    fam = doc["family"]
    raw_edges = doc["edge_labels"]
    _expect(isinstance(raw_edges, list), "edge_labels", "expected a list")
    edge_entries = []
    for k, item in enumerate(raw_edges):
        where = f"edge_labels[{k}]"
        _expect(isinstance(item, list) and len(item) == 3, where, "expected [a, b, label]")
        a, b = _vertex(item[0], where + "[0]"), _vertex(item[1], where + "[1]")
        edge_entries.append((a, b, _positive_int(item[2], where + "[2]")))

    if fam is not None:
        _expect(isinstance(fam, dict) and "name" in fam, "family", "expected {name, n, m}")
        family = Family(fam["name"], fam.get("n"), fam.get("m"))
    else:
        family = CUSTOM

    if family.name in ("ladder", "prism", "petersen"):
        try:
            g = build_family(family.name, family.n, family.m)
        except (TatError, TypeError) as exc:
            raise FormatError(f"field family: {exc}") from None
        vl = doc["vertex_labels"]
        _expect(isinstance(vl, list) and len(vl) == g.p, "vertex_labels", f"expected {g.p} labels")
        vertex_labels = {x: _positive_int(lab, f"vertex_labels[{k}]") for k, (x, lab) in enumerate(zip(g.vertices, vl))}
    else:
        vl = doc["vertex_labels"]
        _expect(isinstance(vl, list), "vertex_labels", "expected a list of [name, label]")
        vertex_labels = {}
        for k, item in enumerate(vl):
            where = f"vertex_labels[{k}]"
            _expect(isinstance(item, list) and len(item) == 2, where, "expected [name, label]")
            x = _vertex(item[0], where + "[0]")
            _expect(x not in vertex_labels, where, f"duplicate vertex {x}")
            vertex_labels[x] = _positive_int(item[1], where + "[1]")
        try:
            g = Graph(tuple(vertex_labels), tuple((a, b) for a, b, _ in edge_entries), family)
        except TatError as exc:
            raise FormatError(f"field edge_labels: {exc}") from None

    edge_labels = {}
    for k, (a, b, lab) in enumerate(edge_entries):
        e = make_edge(a, b)
        _expect(e in g, f"edge_labels[{k}]", f"edge {a}-{b} is not in {family}")
        _expect(e not in edge_labels, f"edge_labels[{k}]", f"duplicate edge {a}-{b}")
        edge_labels[e] = lab
    _expect(len(edge_labels) == g.q, "edge_labels", f"expected {g.q} edges, got {len(edge_labels)}")
    meta = doc.get("meta") or {}
    return g, TotalLabeling(vertex_labels, edge_labels), meta


def loads(text: str) -> tuple[Graph, TotalLabeling, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def read_labeling(path) -> tuple[Graph, TotalLabeling, dict]:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_labeling(path, g: Graph, lab: TotalLabeling, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g, lab, meta))


def labeling_from_sequence(g: Graph, seq) -> TotalLabeling:
    """Labels given in canonical element order (vertices, then edges)."""
    seq = list(seq)
    if len(seq) != g.p + g.q:
        raise IncompleteLabelingError(f"expected {g.p + g.q} labels, got {len(seq)}")
    return TotalLabeling(dict(zip(g.vertices, seq[: g.p])), dict(zip(g.edges, seq[g.p :])))

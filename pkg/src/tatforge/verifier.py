"""Decide bijectivity, super-ness, EAT, VAT, TAT and (weak) orderedness.

All checks work from the labels alone and return explicit witnesses.
Antimagic properties are decided for the labeling as given, whether or not it
is a bijection.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParameterError, NotFoundError
from .graph import U, V, Graph, VertexId, edge_str
from .labeling import TotalLabeling, weight_profile

BIJECTIVE = "bijective"
SUPER = "super"
EAT = "eat"
VAT = "vat"
SHARP = "sharp_ordered"
WEAK = "weak_ordered"
COMPLETE = "complete"


def element_key(x):
    """Total order over vertices and edges: vertices first."""
    if isinstance(x, VertexId):
        return (0, x)
    return (1, x)


def element_str(x) -> str:
    return str(x) if isinstance(x, VertexId) else edge_str(x)


@dataclass(frozen=True)
class Witness:
    """A reason a property fails.

    For distinctness properties ``elements`` is a colliding pair and ``value``
    the shared label or weight.  A missing label has no elements; an
    out-of-range label has a single element.
    """

    property: str
    elements: tuple
    value: int

    def __str__(self) -> str:
        els = ",".join(element_str(x) for x in self.elements)
        return f"{self.property}: ({els}) {self.value}"


PROPERTY_RANK = {p: k for k, p in enumerate((COMPLETE, BIJECTIVE, SUPER, EAT, VAT, SHARP, WEAK))}


def _sorted_witnesses(ws: Iterable[Witness]) -> list[Witness]:
    return sorted(ws, key=lambda w: (PROPERTY_RANK[w.property], [element_key(x) for x in w.elements], w.value))


def _collisions(prop: str, values: dict) -> list[Witness]:
    groups = defaultdict(list)
    for x, val in values.items():
        groups[val].append(x)
    out = []
    for val, xs in groups.items():
        xs.sort(key=element_key)
        out.extend(Witness(prop, pair, val) for pair in combinations(xs, 2))
    return _sorted_witnesses(out)


def check_bijective_total(g: Graph, lab: TotalLabeling) -> tuple[bool, list[Witness]]:
    lab.require_complete(g)
    total = g.p + g.q
    by_label = dict(lab.items(g))
    ws = _collisions(BIJECTIVE, by_label)
    present = set(by_label.values())
    for x, val in by_label.items():
        if val > total:
            ws.append(Witness(BIJECTIVE, (x,), val))
    ws += [Witness(BIJECTIVE, (), k) for k in range(1, total + 1) if k not in present]
    ws = _sorted_witnesses(ws)
    return not ws, ws


def check_super(g: Graph, lab: TotalLabeling) -> tuple[bool, list[Witness]]:
    ok, ws = check_bijective_total(g, lab)
    if not ok:
        return False, ws
    ws = [Witness(SUPER, (x,), lab.vertex_labels[x]) for x in g.vertices if lab.vertex_labels[x] > g.p]
    return not ws, _sorted_witnesses(ws)


def check_eat(g: Graph, lab: TotalLabeling) -> tuple[bool, list[Witness]]:
    ws = _collisions(EAT, weight_profile(g, lab).edge_weights)
    return not ws, ws


def check_vat(g: Graph, lab: TotalLabeling) -> tuple[bool, list[Witness]]:
    ws = _collisions(VAT, weight_profile(g, lab).vertex_weights)
    return not ws, ws


def check_sharp_ordered(
    g: Graph, lab: TotalLabeling, subset: Sequence[VertexId] | None = None, *, _weights=None
) -> tuple[bool, list[Witness]]:
    """``g(a) < g(b)`` must imply ``wt(a) < wt(b)`` for all a, b in ``subset``.

    Witnesses are pairs ``(a, b)`` with ``g(a) < g(b)`` and ``wt(a) >= wt(b)``;
    the value is ``wt(a)``.
    """
    subset = list(g.vertices if subset is None else subset)
    for x in subset:
        if x not in g.vertices:
            raise NotFoundError(f"vertex {x} not in graph")
    wt = _weights if _weights is not None else weight_profile(g, lab).vertex_weights
    vl = lab.vertex_labels
    ordered = sorted(subset, key=lambda x: (vl[x], x))
    ws = []
    for a, b in combinations(ordered, 2):
        if vl[a] < vl[b] and wt[a] >= wt[b]:
            ws.append(Witness(SHARP, (a, b), wt[a]))
    ws = _sorted_witnesses(ws)
    return not ws, ws


def _validate_partition(g: Graph, partition: Sequence[Sequence[VertexId]]) -> None:
    seen: set[VertexId] = set()
    for part in partition:
        for x in part:
            if x not in g.vertices:
                raise InvalidParameterError(f"partition names unknown vertex {x}")
            if x in seen:
                raise InvalidParameterError(f"vertex {x} appears in two parts")
            seen.add(x)
    if len(seen) != g.p:
        raise InvalidParameterError(f"partition misses {g.p - len(seen)} vertex(es)")


def check_weak_ordered(
    g: Graph, lab: TotalLabeling, partition: Sequence[Sequence[VertexId]]
) -> tuple[bool, list[Witness]]:
    _validate_partition(g, partition)
    wt = weight_profile(g, lab).vertex_weights
    ws = []
    for part in partition:
        ws += check_sharp_ordered(g, lab, part, _weights=wt)[1]
    ws = [Witness(WEAK, w.elements, w.value) for w in ws]
    ws = _sorted_witnesses(ws)
    return not ws, ws


def class_partition(g: Graph) -> list[list[VertexId]]:
    """The ``{u_i}``, ``{v_i}`` split used for family graphs."""
    return [[x for x in g.vertices if x.kind == U], [x for x in g.vertices if x.kind == V]]


def singleton_partition(g: Graph) -> list[list[VertexId]]:
    return [[x] for x in g.vertices]


@dataclass
class VerificationReport:
    is_complete: bool
    is_bijective_total: bool
    is_super: bool
    is_eat: bool
    is_vat: bool
    is_tat: bool
    sharp_ordered: bool
    weak_ordered: bool | None = None
    weak_ordered_partition: list[list[VertexId]] | None = None
    witnesses: list[Witness] = field(default_factory=list)

    FLAGS = ("is_complete", "is_bijective_total", "is_super", "is_eat", "is_vat", "is_tat", "sharp_ordered")

    def failing(self, prop: str) -> list[Witness]:
        return [w for w in self.witnesses if w.property == prop]

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in self.FLAGS}
        d["weak_ordered"] = self.weak_ordered
        d["weak_ordered_partition"] = (
            None if self.weak_ordered_partition is None else [[str(x) for x in part] for part in self.weak_ordered_partition]
        )
        d["witnesses"] = [
            {"property": w.property, "elements": [element_str(x) for x in w.elements], "value": w.value}
            for w in self.witnesses
        ]
        return d

    def verdict(self) -> str:
        """One-line summary such as ``TAT`` or ``VAT FAIL (v_2,v_5)``."""
        if not self.is_complete:
            return "INCOMPLETE"
        if self.is_tat:
            return "TAT"
        parts = []
        for prop, flag in ((EAT, self.is_eat), (VAT, self.is_vat)):
            if not flag:
                w = self.failing(prop)[0]
                parts.append(f"{prop.upper()} FAIL ({','.join(element_str(x) for x in w.elements)})")
        return "; ".join(parts)


def full_report(
    g: Graph, lab: TotalLabeling, partition: Sequence[Sequence[VertexId]] | None = None
) -> VerificationReport:
    missing = lab.missing(g)
    if missing:
        ws = [Witness(COMPLETE, (x,), 0) for x in missing]
        return VerificationReport(False, False, False, False, False, False, False, None, None, _sorted_witnesses(ws))
    lab.require_complete(g)
    prof = weight_profile(g, lab)
    bij, ws_b = check_bijective_total(g, lab)
    sup, ws_s = check_super(g, lab) if bij else (False, [])
    ws_e = _collisions(EAT, prof.edge_weights)
    ws_v = _collisions(VAT, prof.vertex_weights)
    sharp, ws_sh = check_sharp_ordered(g, lab, _weights=prof.vertex_weights)
    witnesses = ws_b + (ws_s if bij else []) + ws_e + ws_v + ws_sh
    if not bij:
        # super needs bijectivity; the bijectivity witnesses explain both
        witnesses.append(Witness(SUPER, (), 0))

    weak = None
    part = None
    if partition is None and g.family.name in ("ladder", "prism", "petersen"):
        partition = class_partition(g)
    if partition is not None:
        weak, ws_w = check_weak_ordered(g, lab, partition)
        witnesses += ws_w
        part = [list(p) for p in partition]
    return VerificationReport(
        is_complete=True,
        is_bijective_total=bij,
        is_super=sup,
        is_eat=not ws_e,
        is_vat=not ws_v,
        is_tat=not ws_e and not ws_v,
        sharp_ordered=sharp,
        weak_ordered=weak,
        weak_ordered_partition=part,
        witnesses=_sorted_witnesses(witnesses),
    )

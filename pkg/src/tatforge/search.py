"""Exact depth-first search for TAT labelings of small graphs.

Elements (vertices and edges) are labeled one at a time in a fixed order, with
labels tried in increasing order, so the first labeling found is the
lexicographically smallest label sequence in that order.  An edge weight is
checked as soon as the edge and both endpoints carry labels; a vertex weight as
soon as the vertex and all its incident edges do.

Every placed label counts as one node against ``node_budget``.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InvalidParameterError
from .graph import Graph, VertexId
from .labeling import TotalLabeling, labeling_from_sequence
from .verifier import full_report

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "TATFORGE_BUDGET"

DEGREE_DESCENDING = "degree-descending"
INPUT_ORDER = "input-order"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if value <= 0:
        raise InvalidParameterError(f"{BUDGET_ENV} must be positive")
    return value


class Status(str, enum.Enum):
    FOUND = "Found"
    EXHAUSTED = "ExhaustedNoSolution"
    BUDGET_EXCEEDED = "BudgetExceeded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SearchOptions:
    require_super: bool = False
    require_bijective: bool = True
    node_budget: int = field(default_factory=default_budget)
    element_order: str = DEGREE_DESCENDING
    # False: weights are only checked on complete labelings (brute force)
    prune: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.node_budget <= 0:
            raise InvalidParameterError("node_budget must be positive")
        if self.element_order not in (DEGREE_DESCENDING, INPUT_ORDER):
            raise InvalidParameterError(f"unknown element order {self.element_order!r}")
        if self.require_super and not self.require_bijective:
            raise InvalidParameterError("a super labeling is bijective by definition")
        if self.workers < 1:
            raise InvalidParameterError("workers must be >= 1")


@dataclass
class SearchOutcome:
    status: Status
    labeling: TotalLabeling | None
    nodes_visited: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def element_order(g: Graph, strategy: str = DEGREE_DESCENDING) -> list:
    elements = g.elements()
    if strategy == INPUT_ORDER:
        return elements
    rank = {x: k for k, x in enumerate(elements)}

    def key(x):
        if isinstance(x, VertexId):
            return (-g.degree(x), 0, rank[x])
        return (-2, 1, rank[x])

    return sorted(elements, key=key)


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, opts: SearchOptions, pinned: Mapping | None = None):
        self.g = g
        self.opts = opts
        order = element_order(g, opts.element_order)
        self.order = order
        n = len(order)
        self.n = n
        pos = {x: k for k, x in enumerate(order)}
        total = g.p + g.q
        pinned = dict(pinned or {})
        for x, val in pinned.items():
            if x not in pos:
                raise InvalidParameterError(f"pinned element {x} not in graph")
            if not 1 <= val <= total:
                raise InvalidParameterError(f"pinned label {val} outside 1..{total}")
        pinned_pos = {pos[x]: val for x, val in pinned.items()}
        taken = set(pinned_pos.values()) if opts.require_bijective else set()
        if opts.require_bijective and len(taken) != len(pinned_pos):
            raise InvalidParameterError("pinned labels repeat")

        self.cands: list[list[int]] = []
        for k, x in enumerate(order):
            if k in pinned_pos:
                self.cands.append([pinned_pos[k]])
                continue
            if opts.require_super:
                rng = range(1, g.p + 1) if isinstance(x, VertexId) else range(g.p + 1, total + 1)
            else:
                rng = range(1, total + 1)
            self.cands.append([val for val in rng if val not in taken])

        last = n - 1
        self.edge_close: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        self.vertex_close: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for e in g.edges:
            comps = (pos[e[0]], pos[e[1]], pos[e])
            self.edge_close[max(comps) if opts.prune else last].append(comps)
        for x in g.vertices:
            comps = (pos[x], *(pos[e] for e in g.incident(x)))
            self.vertex_close[max(comps) if opts.prune else last].append(comps)

    def run(self, root_values: list[int] | None = None) -> SearchOutcome:
        if root_values is not None:
            self.cands[0] = [val for val in self.cands[0] if val in root_values]
        n = self.n
        budget = self.opts.node_budget
        bijective = self.opts.require_bijective
        cands, edge_close, vertex_close = self.cands, self.edge_close, self.vertex_close
        labels = [0] * n
        used = [False] * (self.g.p + self.g.q + 1)
        ew: set[int] = set()
        vw: set[int] = set()
        nodes = 0

        def dfs(k: int) -> bool:
            nonlocal nodes
            if k == n:
                return True
            for val in cands[k]:
                if bijective and used[val]:
                    continue
                nodes += 1
                if nodes > budget:
                    raise _BudgetExceeded
                labels[k] = val
                used[val] = True
                added_e = []
                added_v = []
                ok = True
                for a, b, c in edge_close[k]:
                    w = labels[a] + labels[b] + labels[c]
                    if w in ew:
                        ok = False
                        break
                    ew.add(w)
                    added_e.append(w)
                if ok:
                    for comps in vertex_close[k]:
                        w = 0
                        for i in comps:
                            w += labels[i]
                        if w in vw:
                            ok = False
                            break
                        vw.add(w)
                        added_v.append(w)
                if ok and dfs(k + 1):
                    return True
                ew.difference_update(added_e)
                vw.difference_update(added_v)
                used[val] = False
            labels[k] = 0
            return False

        try:
            found = dfs(0)
        except _BudgetExceeded:
            return SearchOutcome(Status.BUDGET_EXCEEDED, None, nodes)
        if not found:
            return SearchOutcome(Status.EXHAUSTED, None, nodes)
        by_elem = dict(zip(self.order, labels))
        lab = labeling_from_sequence(self.g, [by_elem[x] for x in self.g.elements()])
        return SearchOutcome(Status.FOUND, lab, nodes)


def _run_branch(args) -> SearchOutcome:
    g, opts, pinned, root = args
    return _Search(g, opts, pinned).run([root])


def find_tat(g: Graph, opts: SearchOptions | None = None, pinned: Mapping | None = None) -> SearchOutcome:
    """Search for a TAT labeling of ``g``.

    ``pinned`` fixes labels on chosen elements.  With ``opts.workers > 1`` the
    first decision level is split across processes; the combined outcome
    (status, labeling and node count) equals the single-worker one.
    """
    opts = opts or SearchOptions()
    if g.p == 0:
        raise InvalidParameterError("graph has no vertices")
    search = _Search(g, opts, pinned)
    if opts.workers == 1 or len(search.cands[0]) < 2:
        out = search.run()
    else:
        roots = list(search.cands[0])
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            branches = list(pool.map(_run_branch, [(g, opts, pinned, r) for r in roots]))
        out = _merge_branches(branches, opts.node_budget)
    if out.found:
        report = full_report(g, out.labeling)
        if not report.is_tat or (opts.require_bijective and not report.is_bijective_total):
            raise AssertionError(f"search produced an invalid labeling: {report.verdict()}")
        if opts.require_super and not report.is_super:
            raise AssertionError("search produced a non-super labeling")
    return out


def _merge_branches(branches: list[SearchOutcome], budget: int) -> SearchOutcome:
    # replay the root level in order, as a single worker would have
    total = 0
    for br in branches:
        total += br.nodes_visited
        if br.status is Status.BUDGET_EXCEEDED or total > budget:
            return SearchOutcome(Status.BUDGET_EXCEEDED, None, budget + 1)
        if br.found:
            return SearchOutcome(Status.FOUND, br.labeling, total)
    return SearchOutcome(Status.EXHAUSTED, None, total)

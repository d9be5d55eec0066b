"""Free trees up to 8 vertices and the all-trees-are-TAT harness."""

from __future__ import annotations

import csv
import heapq
import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InvalidParameterError
from .graph import Family, Graph, from_edges
from .search import SearchOptions, SearchOutcome, find_tat

MAX_TREE_ORDER = 8


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``1..n`` with Prüfer sequence ``seq``."""
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(1, n + 1) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def tree_centers(n: int, adj) -> list[int]:
    deg = [len(adj[i]) for i in range(n + 1)]
    layer = [i for i in range(1, n + 1) if deg[i] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def ahu_encode(adj, root: int, parent: int = 0) -> str:
    return "(" + "".join(sorted(ahu_encode(adj, c, root) for c in adj[root] if c != parent)) + ")"


def canonical_form(n: int, edges) -> str:
    """AHU string of the tree rooted at its center (the smaller one if bicentral)."""
    if n == 1:
        return "()"
    adj = _adjacency(n, edges)
    return min(ahu_encode(adj, c) for c in tree_centers(n, adj))


@dataclass(frozen=True)
class TreeEntry:
    tree_id: str
    n: int
    canonical: str
    graph: Graph


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[TreeEntry, ...]:
    reps: dict[str, list[tuple[int, int]]] = {}
    if n == 2:
        reps[canonical_form(2, [(1, 2)])] = [(1, 2)]
    else:
        for seq in product(range(1, n + 1), repeat=n - 2):
            edges = prufer_decode(seq, n)
            reps.setdefault(canonical_form(n, edges), edges)
    out = []
    for k, canon in enumerate(sorted(reps), 1):
        edges = sorted(tuple(sorted(e)) for e in reps[canon])
        g = from_edges(edges)
        g = Graph(g.vertices, g.edges, Family("tree", n))
        out.append(TreeEntry(f"T{n}.{k}", n, canon, g))
    return tuple(out)


def enumerate_trees(n: int) -> list[TreeEntry]:
    """Pairwise non-isomorphic trees on ``n`` vertices, ``2 <= n <= 8``."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise InvalidParameterError(f"tree order must be in 2..{MAX_TREE_ORDER}, got {n}")
    return list(_trees(n))


@dataclass
class HarnessRow:
    tree_id: str
    n: int
    outcome: SearchOutcome


def conjecture_harness(max_n: int, opts: SearchOptions | None = None) -> list[HarnessRow]:
    if not 2 <= max_n <= MAX_TREE_ORDER:
        raise InvalidParameterError(f"max_n must be in 2..{MAX_TREE_ORDER}, got {max_n}")
    opts = opts or SearchOptions(require_super=False, require_bijective=True)
    rows = []
    for n in range(2, max_n + 1):
        for entry in enumerate_trees(n):
            rows.append(HarnessRow(entry.tree_id, n, find_tat(entry.graph, opts)))
    return rows


def harness_csv(rows: list[HarnessRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tree_id", "n", "status", "nodes_visited"])
    for r in rows:
        w.writerow([r.tree_id, r.n, r.outcome.status.value, r.outcome.nodes_visited])
    return buf.getvalue()

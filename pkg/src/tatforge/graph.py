"""Simple undirected graphs with stable 1-based vertex identities.

Vertices of the named families are ``u_i`` / ``v_i``; ingested graphs, trees
and chain outputs use plain integer names.  Edges are stored as ordered pairs
``(a, b)`` with ``a < b`` under the ``VertexId`` ordering, so an edge has one
canonical spelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import FormatError, InvalidParameterError, NotFoundError

U = "u"
V = "v"
PLAIN = "x"


class VertexId(NamedTuple):
    kind: str
    index: int

    def __str__(self) -> str:
        if self.kind == PLAIN:
            return str(self.index)
        return f"{self.kind}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        text = text.strip()
        if text.isdigit():
            return cls(PLAIN, int(text))
        kind, sep, idx = text.partition("_")
        if sep and kind in (U, V) and idx.isdigit() and int(idx) >= 1:
            return cls(kind, int(idx))
        raise FormatError(f"bad vertex name {text!r}")


def u(i: int) -> VertexId:
    return VertexId(U, i)


def v(i: int) -> VertexId:
    return VertexId(V, i)


def plain(i: int) -> VertexId:
    return VertexId(PLAIN, i)


Edge = tuple[VertexId, VertexId]


def make_edge(a: VertexId, b: VertexId) -> Edge:
    return (a, b) if a < b else (b, a)


def edge_str(e: Edge) -> str:
    return f"{e[0]}{e[1]}" if e[0].kind != PLAIN else f"{e[0]}-{e[1]}"


class Family(NamedTuple):
    """Which constructor produced a graph; ``n``/``m`` are its parameters."""

    name: str
    n: int | None = None
    m: int | None = None

    def __str__(self) -> str:
        args = [str(x) for x in (self.n, self.m) if x is not None]
        return f"{self.name}({','.join(args)})" if args else self.name


CUSTOM = Family("custom")


def wrap(x: int, n: int) -> int:
    """Reduce an index into ``[1, n]``."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class Graph:
    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]
    family: Family = CUSTOM

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InvalidParameterError("duplicate vertex")
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidParameterError(f"loop at {a}")
            if a not in vset or b not in vset:
                raise InvalidParameterError(f"edge {a}-{b} has an undeclared endpoint")
            e = make_edge(a, b)
            if e in seen:
                raise InvalidParameterError(f"duplicate edge {a}-{b}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(make_edge(a, b) for a, b in self.edges))

    @property
    def p(self) -> int:
        return len(self.vertices)

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def _incident(self) -> dict[VertexId, list[Edge]]:
        inc: dict[VertexId, list[Edge]] = {x: [] for x in self.vertices}
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return inc

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __contains__(self, x) -> bool:
        return x in self._incident or x in self._edge_set

    def incident(self, x: VertexId) -> list[Edge]:
        try:
            return self._incident[x]
        except KeyError:
            raise NotFoundError(f"vertex {x} not in graph") from None

    def degree(self, x: VertexId) -> int:
        return len(self.incident(x))

    def neighbors(self, x: VertexId) -> list[VertexId]:
        return [a if a != x else b for a, b in self.incident(x)]

    def edge(self, a: VertexId, b: VertexId) -> Edge:
        e = make_edge(a, b)
        if e not in self._edge_set:
            raise NotFoundError(f"edge {a}-{b} not in graph")
        return e

    def elements(self) -> list:
        """Vertices followed by edges, in canonical order."""
        return [*self.vertices, *self.edges]


def degree(g: Graph, x: VertexId) -> int:
    return g.degree(x)


def build_ladder(n: int) -> Graph:
    if n < 2:
        raise InvalidParameterError(f"ladder needs n >= 2, got {n}")
    verts = [u(i) for i in range(1, n + 1)] + [v(i) for i in range(1, n + 1)]
    edges = [(u(i), u(i + 1)) for i in range(1, n)]
    edges += [(v(i), v(i + 1)) for i in range(1, n)]
    edges += [(u(i), v(i)) for i in range(1, n + 1)]
    return Graph(tuple(verts), tuple(edges), Family("ladder", n))


def build_prism(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"prism needs n >= 3, got {n}")
    verts = [u(i) for i in range(1, n + 1)] + [v(i) for i in range(1, n + 1)]
    edges = [(u(i), u(wrap(i + 1, n))) for i in range(1, n + 1)]
    edges += [(v(i), v(wrap(i + 1, n))) for i in range(1, n + 1)]
    edges += [(u(i), v(i)) for i in range(1, n + 1)]
    return Graph(tuple(verts), tuple(edges), Family("prism", n))


def check_petersen_params(n: int, m: int) -> None:
    if n < 3 or not 1 <= m <= (n - 1) // 2:
        raise InvalidParameterError(
            f"generalized Petersen P(n,m) needs n >= 3 and 1 <= m <= {max((n - 1) // 2, 1)}; got ({n},{m})"
        )


def build_petersen(n: int, m: int) -> Graph:
    check_petersen_params(n, m)
    verts = [u(i) for i in range(1, n + 1)] + [v(i) for i in range(1, n + 1)]
    edges = [(u(i), u(wrap(i + 1, n))) for i in range(1, n + 1)]
    edges += [(u(i), v(i)) for i in range(1, n + 1)]
    edges += [(v(i), v(wrap(i + m, n))) for i in range(1, n + 1)]
    return Graph(tuple(verts), tuple(edges), Family("petersen", n, m))


def build_path(n: int) -> Graph:
    if n < 2:
        raise InvalidParameterError(f"path needs n >= 2, got {n}")
    verts = tuple(plain(i) for i in range(1, n + 1))
    return Graph(verts, tuple((plain(i), plain(i + 1)) for i in range(1, n)), Family("path", n))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    verts = tuple(plain(i) for i in range(1, n + 1))
    edges = tuple((plain(i), plain(wrap(i + 1, n))) for i in range(1, n + 1))
    return Graph(verts, edges, Family("cycle", n))


def build_family(name: str, n: int, m: int | None = None) -> Graph:
    builders = {"ladder": build_ladder, "prism": build_prism, "path": build_path, "cycle": build_cycle}
    if name == "petersen":
        if m is None:
            raise InvalidParameterError("petersen needs m")
        return build_petersen(n, m)
    if name not in builders:
        raise InvalidParameterError(f"unknown family {name!r}")
    return builders[name](n)


def from_edges(pairs: Iterable[tuple[int, int]], extra_vertices: Iterable[int] = ()) -> Graph:
    """Custom graph on plain vertices; vertex order is ascending by name."""
    pairs = list(pairs)
    names = set(extra_vertices)
    for a, b in pairs:
        names.update((a, b))
    verts = tuple(plain(i) for i in sorted(names))
    return Graph(verts, tuple((plain(a), plain(b)) for a, b in pairs))


def parse_edge_list(text: str) -> Graph:
    pairs = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() and int(p) > 0 for p in parts):
            raise FormatError(f"line {lineno}: expected two positive integers, got {line!r}")
        a, b = int(parts[0]), int(parts[1])
        if a == b:
            raise FormatError(f"line {lineno}: loop {a}-{b}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {a}-{b}")
        seen.add(key)
        pairs.append((a, b))
    if not pairs:
        raise FormatError("edge list is empty")
    return from_edges(pairs)

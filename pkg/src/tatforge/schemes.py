"""Closed-form super labelings of ladders, prisms and generalized Petersen graphs.

Each constructor evaluates the published piecewise formulas as written, except
for a fixed set of named repairs where the printed formula is undefined or not a
bijection:

``LAD-RUNG-RANGE``
    the second rung branch stops at ``i = n-1`` in print; it is extended to
    ``i = n`` so that ``u_n v_n`` gets a label.
``PRI-RUNG-INDEX``
    the rung branch printed as the constant ``2(2n-1)+3`` is read as
    ``2(2n-i)+3``; the constant collides with the inner-cycle labels.
``GP-VLABEL``
    the inner-vertex labels are garbled in print; ``v_i = n+1+i`` for
    ``i < n`` and ``v_n = n+1``.  This is the super assignment that reproduces
    the printed spoke weights ``4(n+1)``, ``5n+3+i`` and ``5n+3``.

Nothing here checks antimagic-ness.  Run the results through
:mod:`tatforge.verifier`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError
from .graph import Graph, make_edge, build_ladder, build_petersen, build_prism, check_petersen_params, u, v, wrap
from .labeling import TotalLabeling

LAD_RUNG_RANGE = "LAD-RUNG-RANGE"
PRI_RUNG_INDEX = "PRI-RUNG-INDEX"
GP_VLABEL = "GP-VLABEL"

REPAIR_NOTES = {
    LAD_RUNG_RANGE: "rung label 2(2n-i+1) extended from i<=n-1 to i<=n",
    PRI_RUNG_INDEX: "rung label 2(2n-1)+3 read as 2(2n-i)+3 for 2<=i<=floor(n/2)+1",
    GP_VLABEL: "inner vertex labels set to v_i=n+1+i (i<n), v_n=n+1",
}


@dataclass
class SchemeResult:
    graph: Graph
    labeling: TotalLabeling
    source: str
    repairs_applied: list[str] = field(default_factory=list)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def ladder_labeling(n: int) -> SchemeResult:
    g = build_ladder(n)
    c, f = _ceil_half(n), n // 2
    lab = TotalLabeling()
    vl, el = lab.vertex_labels, lab.edge_labels
    for i in range(1, n + 1):
        if i <= c:
            vl[u(i)] = 2 * i - 1
            vl[v(i)] = n + 2 * i - 1
            el[u(i), v(i)] = 2 * (n + i) - 1
        else:
            vl[u(i)] = 2 * (n - i + 1)
            vl[v(i)] = 3 * n + 2 * (1 - i)
            el[u(i), v(i)] = 2 * (2 * n - i + 1)
    for i in range(1, n):
        if i <= f:
            el[u(i), u(i + 1)] = 3 * n + 2 * i - 1
            el[v(i), v(i + 1)] = 2 * (2 * n + i - 1)
        else:
            el[u(i), u(i + 1)] = 5 * n - 2 * i
            el[v(i), v(i + 1)] = 2 * (3 * n - i) - 1
    return SchemeResult(g, lab, "closed-form:ladder", [LAD_RUNG_RANGE])


def prism_labeling(n: int) -> SchemeResult:
    g = build_prism(n)
    c, f = _ceil_half(n), n // 2
    lab = TotalLabeling()
    vl, el = lab.vertex_labels, lab.edge_labels
    vl[u(1)] = 1
    vl[v(1)] = n + 1
    el[u(1), v(1)] = 4 * n
    for i in range(2, n + 1):
        if i <= f + 1:
            vl[u(i)] = 2 * (i - 1)
            vl[v(i)] = n + 2 * (i - 1)
            el[u(i), v(i)] = 2 * (2 * n - i) + 3
        else:
            vl[u(i)] = 2 * (n - i) + 3
            vl[v(i)] = 3 * (n + 1) - 2 * i
            el[u(i), v(i)] = 2 * (n - 1 + i)
    for i in range(1, n + 1):
        j = wrap(i + 1, n)
        if i <= c:
            el[make_edge(u(i), u(j))] = 2 * (n + i) - 1
            el[make_edge(v(i), v(j))] = 2 * (2 * n + i) - 1
        else:
            el[make_edge(u(i), u(j))] = 2 * (2 * n + 1 - i)
            el[make_edge(v(i), v(j))] = 2 * (3 * n - i + 1)
    return SchemeResult(g, lab, "closed-form:prism", [PRI_RUNG_INDEX])


def petersen_labeling(n: int, m: int) -> SchemeResult:
    check_petersen_params(n, m)
    g = build_petersen(n, m)
    lab = TotalLabeling()
    vl, el = lab.vertex_labels, lab.edge_labels
    for i in range(1, n + 1):
        vl[u(i)] = i
        vl[v(i)] = n + 1 + i if i < n else n + 1
        el[make_edge(u(i), u(wrap(i + 1, n)))] = 3 * n - (i - 1)
        el[u(i), v(i)] = 3 * n + 1 if i == 1 else 4 * n - (i - 2)
        el[make_edge(v(i), v(wrap(i + m, n)))] = 5 * n - (i - 1)
    return SchemeResult(g, lab, "closed-form:petersen", [GP_VLABEL])


def scheme_for(family: str, n: int, m: int | None = None) -> SchemeResult:
    if family == "ladder":
        return ladder_labeling(n)
    if family == "prism":
        return prism_labeling(n)
    if family == "petersen":
        if m is None:
            raise InvalidParameterError("petersen needs m")
        return petersen_labeling(n, m)
    raise InvalidParameterError(f"no closed-form scheme for family {family!r}")

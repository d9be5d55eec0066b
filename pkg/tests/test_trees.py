import networkx as nx
import pytest

from oracles import to_nx
from tatforge.errors import InvalidParameterError
from tatforge.search import SearchOptions, Status
from tatforge.trees import canonical_form, conjecture_harness, enumerate_trees, harness_csv, prufer_decode

FREE_TREES = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


@pytest.mark.parametrize("n", range(2, 9))
def test_free_tree_counts(n):
    trees = enumerate_trees(n)
    assert len(trees) == FREE_TREES[n]
    graphs = [to_nx(t.graph) for t in trees]
    assert all(nx.is_tree(g) and g.number_of_nodes() == n for g in graphs)
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not nx.is_isomorphic(graphs[i], graphs[j])


def test_n4_is_path_and_star():
    degs = sorted(sorted(t.graph.degree(x) for x in t.graph.vertices) for t in enumerate_trees(4))
    assert degs == [[1, 1, 1, 3], [1, 1, 2, 2]]


def test_prufer_decode():
    assert sorted(prufer_decode((4, 4, 4), 5)) == [(1, 4), (2, 4), (3, 4), (4, 5)]
    assert len(prufer_decode((1, 2, 3), 5)) == 4


def test_canonical_form_relabel_invariant():
    a = [(1, 2), (2, 3), (3, 4), (2, 5)]
    b = [(5, 4), (4, 3), (3, 2), (4, 1)]
    assert canonical_form(5, a) == canonical_form(5, b)
    assert canonical_form(5, a) != canonical_form(5, [(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.mark.parametrize("n", [1, 9])
def test_out_of_range(n):
    with pytest.raises(InvalidParameterError):
        enumerate_trees(n)
    with pytest.raises(InvalidParameterError):
        conjecture_harness(n)


def test_harness_small():
    rows = conjecture_harness(2)
    assert [(r.tree_id, r.outcome.status) for r in rows] == [("T2.1", Status.FOUND)]
    rows = conjecture_harness(5)
    assert all(r.outcome.status is Status.FOUND for r in rows)
    csv = harness_csv(rows)
    assert csv.splitlines()[0] == "tree_id,n,status,nodes_visited"
    assert len(csv.splitlines()) == 1 + 1 + 1 + 2 + 3


def test_harness_super_reading():
    rows = conjecture_harness(6, SearchOptions(require_super=True))
    assert all(r.outcome.found for r in rows)

import pytest

from oracles import naive_weights
from tatforge.errors import InvalidParameterError
from tatforge.graph import u, v, wrap
from tatforge.labeling import weight_profile
from tatforge.schemes import (
    GP_VLABEL,
    LAD_RUNG_RANGE,
    PRI_RUNG_INDEX,
    ladder_labeling,
    petersen_labeling,
    prism_labeling,
    scheme_for,
)
from tatforge.verifier import check_super, full_report


def labels_of(lab, elems):
    return tuple(lab[x] for x in elems)


def test_ladder3_table():
    lab = ladder_labeling(3).labeling
    assert labels_of(lab, [u(1), u(2), u(3)]) == (1, 3, 2)
    assert labels_of(lab, [v(1), v(2), v(3)]) == (4, 6, 5)
    assert labels_of(lab, [(u(i), v(i)) for i in (1, 2, 3)]) == (7, 9, 8)
    assert labels_of(lab, [(u(1), u(2)), (u(2), u(3))]) == (10, 11)
    assert labels_of(lab, [(v(1), v(2)), (v(2), v(3))]) == (12, 13)


def test_ladder2_table():
    lab = ladder_labeling(2).labeling
    assert labels_of(lab, [u(1), u(2), v(1), v(2)]) == (1, 2, 3, 4)
    assert labels_of(lab, [(u(1), v(1)), (u(2), v(2))]) == (5, 6)
    assert lab[(u(1), u(2))] == 7
    assert lab[(v(1), v(2))] == 8


@pytest.mark.parametrize("n", range(2, 13))
def test_ladder_first_label(n):
    assert ladder_labeling(n).labeling[u(1)] == 1


def test_prism3_table():
    lab = prism_labeling(3).labeling
    assert labels_of(lab, [u(1), u(2), u(3)]) == (1, 2, 3)
    assert labels_of(lab, [v(1), v(2), v(3)]) == (4, 5, 6)
    assert labels_of(lab, [(u(1), u(2)), (u(2), u(3)), (u(3), u(1))]) == (7, 9, 8)
    assert labels_of(lab, [(v(1), v(2)), (v(2), v(3)), (v(3), v(1))]) == (13, 15, 14)
    assert labels_of(lab, [(u(i), v(i)) for i in (1, 2, 3)]) == (12, 11, 10)


def test_prism4_ranges():
    res = prism_labeling(4)
    assert sorted(res.labeling.edge_labels.values()) == list(range(9, 21))
    assert sorted(res.labeling.vertex_labels.values()) == list(range(1, 9))


@pytest.mark.parametrize("n", range(3, 13))
def test_prism_first_rung(n):
    assert prism_labeling(n).labeling[(u(1), v(1))] == 4 * n


def test_petersen_5_2_table():
    res = petersen_labeling(5, 2)
    lab = res.labeling
    assert labels_of(lab, [u(i) for i in range(1, 6)]) == (1, 2, 3, 4, 5)
    assert labels_of(lab, [v(i) for i in range(1, 6)]) == (7, 8, 9, 10, 6)
    assert labels_of(lab, [(u(i), u(wrap(i + 1, 5))) for i in range(1, 6)]) == (15, 14, 13, 12, 11)
    assert labels_of(lab, [(u(i), v(i)) for i in range(1, 6)]) == (16, 20, 19, 18, 17)
    assert labels_of(lab, [(v(i), v(wrap(i + 2, 5))) for i in range(1, 6)]) == (25, 24, 23, 22, 21)
    ew = weight_profile(res.graph, lab).edge_weights
    assert tuple(ew[(u(i), v(i))] for i in range(1, 6)) == (24, 30, 31, 32, 28)


def petersen_params(limit=12):
    return [(n, m) for n in range(3, limit + 1) for m in range(1, (n - 1) // 2 + 1)]


@pytest.mark.parametrize("n,m", petersen_params())
def test_petersen_printed_edge_weights(n, m):
    res = petersen_labeling(n, m)
    ew = weight_profile(res.graph, res.labeling).edge_weights
    assert ew[(u(1), v(1))] == 4 * (n + 1)
    for i in range(1, n + 1):
        outer = res.graph.edge(u(i), u(wrap(i + 1, n)))
        assert ew[outer] == (3 * n + 2 + i if i < n else 3 * n + 2)
        if i >= 2:
            assert ew[(u(i), v(i))] == (5 * n + 3 + i if i < n else 5 * n + 3)


def all_schemes():
    for n in range(2, 13):
        yield ladder_labeling(n)
    for n in range(3, 13):
        yield prism_labeling(n)
    for n, m in petersen_params():
        yield petersen_labeling(n, m)


@pytest.mark.parametrize("res", list(all_schemes()), ids=lambda r: str(r.graph.family))
def test_every_scheme_is_super_bijective(res):
    ok, ws = check_super(res.graph, res.labeling)
    assert ok, ws
    p, q = res.graph.p, res.graph.q
    assert sorted(res.labeling.vertex_labels.values()) == list(range(1, p + 1))
    assert sorted(res.labeling.edge_labels.values()) == list(range(p + 1, p + q + 1))


def test_repair_ledgers():
    assert ladder_labeling(4).repairs_applied == [LAD_RUNG_RANGE]
    assert prism_labeling(4).repairs_applied == [PRI_RUNG_INDEX]
    assert petersen_labeling(7, 2).repairs_applied == [GP_VLABEL]
    assert [ladder_labeling(3).source, prism_labeling(3).source, petersen_labeling(5, 1).source] == [
        "closed-form:ladder", "closed-form:prism", "closed-form:petersen"]


def test_prism_rung_constant_reading_collides():
    # the printed constant 2(2n-1)+3 = 4n+1 equals the v-cycle label of v_1v_2
    n = 6
    lab = prism_labeling(n).labeling
    assert 2 * (2 * n - 1) + 3 == lab[(v(1), v(2))]


@pytest.mark.parametrize("n", range(3, 13))
def test_prism_is_tat(n):
    res = prism_labeling(n)
    assert full_report(res.graph, res.labeling).is_tat


@pytest.mark.parametrize("n,m", [(n, 1) for n in range(3, 13)] + [p for p in petersen_params(11) if p[0] % 2])
def test_petersen_tat_where_claimed(n, m):
    res = petersen_labeling(n, m)
    assert full_report(res.graph, res.labeling).is_tat


def _naive_vertex_weights(res):
    g = res.graph
    idx = {x: k for k, x in enumerate(g.vertices)}
    vw, _ = naive_weights(g.p, [(idx[a], idx[b]) for a, b in g.edges], res.labeling.labels(g))
    return dict(zip(g.vertices, vw))


def test_petersen_6_2_collision_brute():
    res = petersen_labeling(6, 2)
    vw = _naive_vertex_weights(res)
    assert vw[v(2)] == vw[v(5)] == 87 == 9 + 24 + 29 + 25 == 12 + 21 + 28 + 26
    values = list(vw.values())
    assert sum(values.count(w) > 1 for w in values) == 2


def test_ladder_11_collision_brute():
    # the closed-form ladder labeling is not vertex-antimagic at n = 11
    res = ladder_labeling(11)
    vw = _naive_vertex_weights(res)
    assert vw[u(6)] == vw[v(2)] == 129 == 12 * 11 - 3
    rep = full_report(res.graph, res.labeling)
    assert rep.is_eat and not rep.is_vat
    assert [w.elements for w in rep.failing("vat")] == [(u(6), v(2))]


@pytest.mark.parametrize("n", [n for n in range(2, 13) if n != 11])
def test_ladder_tat_and_weak_ordered(n):
    rep = full_report(ladder_labeling(n).graph, ladder_labeling(n).labeling)
    assert rep.is_tat and rep.weak_ordered


def test_invalid_parameters():
    for call in (lambda: ladder_labeling(1), lambda: prism_labeling(2), lambda: petersen_labeling(6, 3),
                 lambda: scheme_for("cycle", 5), lambda: scheme_for("petersen", 5)):
        with pytest.raises(InvalidParameterError):
            call()

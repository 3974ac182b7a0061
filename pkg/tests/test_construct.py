import pytest

from matroidkit.construct import (
    GF2Matrix,
    Multigraph,
    PointedMatroid,
    cycle_matroid,
    direct_sum,
    free_extension,
    from_gf2,
    g_family,
    k23_graph,
    l_family,
    n5,
    n5_from_triangle,
    named,
    named_matroid,
    parallel_connection,
    parallel_extension,
    parse_named_id,
    registry,
    series_connection,
    series_extension,
    su,
    uniform,
)
from matroidkit.core import Matroid, are_isomorphic, is_binary, to_mask
from matroidkit.errors import ConstructionError, InputError
from matroidkit.props import has_k_skew, series_minor_keys


def _pointed_sides():
    sides = [
        uniform(1, 2),
        uniform(1, 3),
        uniform(2, 3),
        uniform(2, 4),
        n5().matroid,
        named("MK4"),
        direct_sum(uniform(1, 2), uniform(1, 2)),
    ]
    out = []
    for m in sides:
        for b in range(m.n):
            if not (m.loops() | m.coloops()) >> b & 1:
                out.append(PointedMatroid(m, b))
    return out


POINTED = _pointed_sides()


def test_uniform_circuits():
    m = uniform(2, 4)
    assert len(m.circuits) == 4
    assert all(c.bit_count() == 3 for c in m.circuits)
    assert uniform(4, 4).circuits == ()
    assert uniform(0, 0).n == 0


def test_uniform_rejects_bad_parameters():
    with pytest.raises(InputError):
        uniform(3, 2)


def test_from_gf2_triangle():
    m = from_gf2(GF2Matrix.from_rows([[1, 0, 1], [0, 1, 1]]))
    assert m == uniform(2, 3)


def test_from_gf2_zero_column_is_a_loop():
    m = from_gf2(GF2Matrix.from_rows([[1, 0, 1]]))
    assert m.loops() == 0b010
    assert to_mask([0, 2]) in m.circuits


def test_gf2_matrix_rejects_non_binary_entries():
    with pytest.raises(InputError):
        GF2Matrix.from_rows([[0, 2]])


# -------------------------------------------------
# Graphs
# -------------------------------------------------
def test_parallel_edges_form_a_two_circuit():
    m = cycle_matroid(Multigraph.from_edges(2, [(0, 1), (0, 1)]))
    assert m.circuits == (0b11,)


def test_graph_loop_is_a_matroid_loop():
    m = cycle_matroid(Multigraph.from_edges(1, [(0, 0)]))
    assert m.circuits == (0b1,)


def test_multigraph_components():
    g = Multigraph.from_edges(3, [(0, 1)])
    assert g.num_components() == 2
    assert not g.is_connected()
    assert g.to_networkx().number_of_edges() == 1


def test_multigraph_rejects_foreign_vertex():
    with pytest.raises(InputError):
        Multigraph.from_edges(2, [(0, 2)])


def test_k23_circuits():
    m = cycle_matroid(k23_graph())
    assert set(m.circuits) == {to_mask([0, 1, 2, 3]), to_mask([2, 3, 4, 5]), to_mask([0, 1, 4, 5])}
    assert m.labels == ("e1", "a", "e", "e2", "b", "c")
    assert m.rank() == 4


def test_mk4_labels_name_edges():
    assert named("MK4").labels == ("01", "02", "03", "12", "13", "23")


# -------------------------------------------------
# Sums, extensions, connections
# -------------------------------------------------
def test_direct_sum_is_disconnected():
    m = direct_sum(uniform(1, 3), uniform(1, 3))
    assert m.n == 6
    assert len(m.circuits) == 6
    assert not m.is_connected()


def test_n5_two_ways():
    assert are_isomorphic(n5_from_triangle(), n5().matroid)
    assert n5_from_triangle().labels == ("e1", "e2", "e", "f1", "f2")


def test_parallel_extension_adds_a_two_circuit():
    m = parallel_extension(uniform(2, 3), 0)
    assert 0b1001 in m.circuits
    assert m.rank() == 2


def test_series_extension_adds_a_series_pair():
    m = series_extension(uniform(1, 3), 0)
    assert m.series_classes().block_of(0) == 0b1001
    assert m.rank() == 2


def test_n5_circuits_and_basepoint():
    pm = n5()
    assert pm.basepoint == 2
    assert pm.matroid.labels == ("e1", "f1", "e", "e2", "f2")
    assert set(pm.matroid.circuits) == {0b11, 0b11000, 0b01101, 0b10101, 0b01110, 0b10110}


def test_parallel_connection_of_parallel_classes():
    side = PointedMatroid(uniform(1, 3), 2)
    assert parallel_connection(side, side).matroid == uniform(1, 5)


def test_connections_reject_loop_and_coloop_basepoints():
    good = PointedMatroid(uniform(1, 3), 2)
    with pytest.raises(ConstructionError):
        series_connection(PointedMatroid(Matroid(2, [{0}]), 0), good)
    with pytest.raises(ConstructionError):
        parallel_connection(good, PointedMatroid(uniform(2, 2), 0))


def test_series_connection_dualises_to_parallel_connection():
    for p1 in POINTED:
        for p2 in POINTED:
            left = series_connection(p1, p2).matroid.dual()
            right = parallel_connection(
                PointedMatroid(p1.matroid.dual(), p1.basepoint),
                PointedMatroid(p2.matroid.dual(), p2.basepoint),
            ).matroid
            assert left == right, (p1, p2)


def test_series_connection_minus_basepoint_is_a_direct_sum():
    for p1 in POINTED:
        for p2 in POINTED:
            joined = series_connection(p1, p2)
            expected = direct_sum(p1.matroid.delete(1 << p1.basepoint), p2.matroid.delete(1 << p2.basepoint))
            assert joined.matroid.delete(1 << joined.basepoint) == expected, (p1, p2)


def test_parallel_connection_of_two_triangles_is_k4_minus_an_edge():
    triangle = PointedMatroid(uniform(2, 3), 2)
    diamond = Multigraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert are_isomorphic(parallel_connection(triangle, triangle).matroid, cycle_matroid(diamond))


def test_pointed_matroid_checks_basepoint():
    with pytest.raises(InputError):
        PointedMatroid(uniform(1, 3), 3)


def test_free_extension_of_two_parallel_pairs_is_n5():
    pm = free_extension(direct_sum(uniform(1, 2), uniform(1, 2)))
    assert pm.basepoint == 4
    assert are_isomorphic(pm.matroid, n5().matroid)


def test_free_extension_needs_positive_rank():
    with pytest.raises(ConstructionError):
        free_extension(uniform(0, 2))


# -------------------------------------------------
# Named families
# -------------------------------------------------
def test_su_family():
    assert are_isomorphic(su(3, 3).matroid, n5().matroid)
    assert su(3, 4).matroid.n == 6
    with pytest.raises(InputError):
        su(2, 3)


@pytest.mark.parametrize("i, size", [(1, 5), (2, 6), (3, 7), (4, 8), (5, 7)])
def test_g_family_sizes(i, size):
    assert g_family(i).matroid.n == size
    assert l_family(i).matroid.n == size + 2


def test_g3_and_g5_are_isomorphic():
    assert are_isomorphic(g_family(3).matroid, g_family(5).matroid)
    assert g_family(3).basepoint != g_family(5).basepoint


def test_l1_circuits():
    m = l_family(1).matroid
    sizes = sorted(c.bit_count() for c in m.circuits)
    assert sizes == [2, 2, 2] + [4] * 8


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_l_family_is_a_minimal_three_skew_obstruction(i):
    m = l_family(i).matroid
    assert m.is_connected()
    assert is_binary(m)
    assert has_k_skew(m, 3)[0]
    # three disjoint circuits of a connected matroid need six elements
    for key in series_minor_keys(m, 6):
        smaller = Matroid.from_key(key)
        if smaller.n == m.n:
            continue
        assert not (smaller.is_connected() and has_k_skew(smaller, 3)[0]), key


def test_g_family_rejects_unknown_index():
    with pytest.raises(InputError):
        g_family(6)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("N5", ("N5", ())),
        ("U:2,4", ("U", (2, 4))),
        ("SU(3,4)", ("SU", (3, 4))),
        ("SU:3,4", ("SU", (3, 4))),
        ("G:3", ("G", (3,))),
        ("L1", ("L", (1,))),
        ("mk4", ("MK4", ())),
    ],
)
def test_parse_named_id(text, expected):
    assert parse_named_id(text) == expected


def test_parse_named_id_rejects_unknown():
    with pytest.raises(InputError):
        parse_named_id("Fano")


def test_named_matroid_lookup():
    assert named_matroid("U:2,4") == uniform(2, 4)
    assert named_matroid("G:1").matroid == n5().matroid


def test_registry_contents():
    names = [name for name, _ in registry()]
    assert names[:3] == ["N5", "MK4", "K23"]
    assert "G:5" in names and "L:5" in names
    assert [n for n in names if n.startswith("SU")] == [
        "SU:3,3", "SU:3,4", "SU:3,5", "SU:3,6", "SU:4,4", "SU:4,5",
    ]

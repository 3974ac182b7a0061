import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from matroidkit.construct import as_matroid, cycle_matroid, g_family, k23_graph, l_family, n5, named, uniform
from matroidkit.core import CircuitFamily, Matroid, are_isomorphic, to_mask
from matroidkit.errors import InputError, SearchLimitError
from matroidkit.props import (
    SkewFamily,
    axiom_check,
    has_k_skew,
    has_series_minor,
    has_su_series_minor,
    is_circuit_difference,
    is_direct_sum_of_members,
    is_unbreakable,
    rank_is_additive,
    series_minor_keys,
    series_moves,
    skew_circuit_pairs,
    ssce_check,
    ssce_resolve,
)

E1, F1, E, E2, F2 = range(5)
CROSS_C1 = to_mask([E1, F2, E])
CROSS_C2 = to_mask([E2, F1, E])

POOL = [
    n5().matroid,
    named("MK4"),
    named("K23"),
    uniform(2, 4),
    uniform(1, 3),
    as_matroid(named("G", 2)),
    as_matroid(named("G", 4)),
    as_matroid(named("L", 1)),
]


# -------------------------------------------------
# SSCE
# -------------------------------------------------
def test_ssce_fails_on_n5_with_the_crossing_circuits():
    result = ssce_check(n5().matroid)
    assert not result.holds
    assert any({w.c1, w.c2} == {CROSS_C1, CROSS_C2} for w in result.violations)
    for w in result.violations:
        assert w.c1 >> w.e1 & 1 and not w.c2 >> w.e1 & 1
        assert w.c2 >> w.e2 & 1 and not w.c1 >> w.e2 & 1
        assert w.c1 & w.c2 >> w.e & 1


def test_ssce_holds_on_mk4_and_u24():
    assert ssce_check(named("MK4")).holds
    assert ssce_check(uniform(2, 4)).holds


def test_ssce_violation_cap_keeps_total():
    result = ssce_check(n5().matroid, limit=1)
    assert len(result.violations) == 1
    assert result.total > 1


def test_ssce_resolve_finds_the_third_circuit():
    m = uniform(2, 4)
    w = ssce_resolve(m, 0b0111, 0b1011, 2, 3, 0)
    assert w.resolved == 0b1110


@settings(max_examples=40)
@given(st.sampled_from(POOL), st.data())
def test_ssce_is_invariant_under_relabelling(m, data):
    perm = data.draw(st.permutations(range(m.n)))
    assert ssce_check(m.relabel(perm)).holds == ssce_check(m).holds


def test_ssce_survives_series_moves():
    for m in POOL:
        if not ssce_check(m).holds:
            continue
        for _, _, child in series_moves(m):
            assert ssce_check(child).holds


# -------------------------------------------------
# Skew circuits
# -------------------------------------------------
def test_n5_has_exactly_one_skew_pair():
    pairs = skew_circuit_pairs(n5().matroid)
    assert [p.circuits for p in pairs] == [(to_mask([E1, F1]), to_mask([E2, F2]))]


def test_mk4_has_no_skew_pair():
    assert skew_circuit_pairs(named("MK4")) == []


def test_l1_skew_pairs_include_its_parallel_pairs():
    m = l_family(1).matroid
    twos = [c for c in m.circuits if c.bit_count() == 2]
    found = {frozenset(p.circuits) for p in skew_circuit_pairs(m)}
    for i, a in enumerate(twos):
        for b in twos[i + 1:]:
            assert frozenset((a, b)) in found


@given(st.sampled_from(POOL))
def test_skew_pairs_are_disjoint_and_additive(m):
    for pair in skew_circuit_pairs(m):
        a, b = pair.circuits
        assert not a & b
        assert rank_is_additive(m, pair)
        assert is_direct_sum_of_members(m, pair)


def test_disjoint_parallel_pairs_are_not_a_direct_sum():
    family = SkewFamily((to_mask([0, 1]), to_mask([2, 3])))
    assert not is_direct_sum_of_members(uniform(1, 4), family)
    assert is_direct_sum_of_members(Matroid(4, [{0, 1}, {2, 3}]), family)


def test_skew_pairs_avoiding_an_element():
    assert skew_circuit_pairs(n5().matroid, avoiding=E1) == []
    assert len(skew_circuit_pairs(n5().matroid, avoiding=E)) == 1


@pytest.mark.parametrize("i, sizes", [(1, (2, 2)), (2, (2, 2)), (3, (2, 3)), (4, (2, 4)), (5, (2, 2))])
def test_g_family_unique_skew_pair(i, sizes):
    pointed = g_family(i)
    pairs = skew_circuit_pairs(pointed.matroid, avoiding=pointed.basepoint)
    assert len(pairs) == 1
    assert pairs[0].sizes == sizes


def test_k_skew():
    found, family = has_k_skew(l_family(1).matroid, 3)
    assert found
    assert family.sizes == (2, 2, 2)
    assert rank_is_additive(l_family(1).matroid, family)
    assert has_k_skew(n5().matroid, 3) == (False, None)
    assert has_k_skew(n5().matroid, 2)[0]
    assert has_k_skew(uniform(2, 4), 1)[0]
    assert not has_k_skew(uniform(4, 4), 1)[0]


def test_k_skew_rejects_k_below_one():
    with pytest.raises(InputError):
        has_k_skew(n5().matroid, 0)


# -------------------------------------------------
# Unbreakable, circuit-difference
# -------------------------------------------------
def test_unbreakable():
    assert is_unbreakable(named("MK4"))
    assert is_unbreakable(uniform(2, 4))
    assert not is_unbreakable(n5().matroid.dual())
    assert not is_unbreakable(Matroid(4, [{0, 1}, {2, 3}]))


def test_circuit_difference():
    assert is_circuit_difference(named("MK4"))
    assert not is_circuit_difference(n5().matroid)
    assert not is_circuit_difference(uniform(2, 4))


@settings(max_examples=20)
@given(st.sampled_from(POOL))
def test_four_way_equivalence_on_connected_pool(m):
    if not m.is_connected():
        return
    verdicts = {
        ssce_check(m).holds,
        not skew_circuit_pairs(m),
        not has_su_series_minor(m).found,
        is_unbreakable(m.dual()),
    }
    assert len(verdicts) == 1


# -------------------------------------------------
# Series minors
# -------------------------------------------------
def test_series_minor_is_reflexive():
    result = has_series_minor(named("K23"), named("K23"))
    assert result.found
    assert result.moves == ()


def test_mk4_has_no_n5_series_minor():
    assert not has_series_minor(named("MK4"), n5().matroid).found


def test_l1_has_n5_series_minor():
    result = has_series_minor(l_family(1).matroid, n5().matroid)
    assert result.found
    assert [op for op, _ in result.moves] == ["delete", "contract"]


def test_series_minor_moves_replay():
    host = l_family(1).matroid
    result = has_series_minor(host, n5().matroid)
    current = host
    for op, label in result.moves:
        index = current.labels.index(label)
        current = current.delete(1 << index) if op == "delete" else current.contract(1 << index)
    assert are_isomorphic(current, n5().matroid)


def test_series_minor_is_transitive_on_a_chain():
    l2 = l_family(2).matroid
    g2 = g_family(2).matroid
    assert has_series_minor(l2, g2).found
    assert has_series_minor(g2, n5().matroid).found
    assert has_series_minor(l2, n5().matroid).found


def test_series_minor_keys_agree_with_search():
    host = l_family(1).matroid
    keys = series_minor_keys(host, 5)
    assert n5().matroid.canonical_key() in keys
    assert host.canonical_key() in keys


def test_series_minor_cap():
    with pytest.raises(SearchLimitError):
        has_series_minor(uniform(1, 13), uniform(1, 3))
    with pytest.raises(SearchLimitError):
        has_series_minor(uniform(1, 5), uniform(1, 4), cap=4)
    assert has_series_minor(uniform(1, 5), uniform(1, 4), cap=4, allow_large=True).found


def test_results_are_truthy_only_when_they_hold():
    assert not has_series_minor(named("MK4"), n5().matroid)
    assert has_series_minor(l_family(1).matroid, n5().matroid)
    assert not ssce_check(n5().matroid)
    assert ssce_check(named("MK4"))
    assert not has_su_series_minor(named("MK4"))
    assert has_su_series_minor(n5().matroid)
    assert not axiom_check([{1, 2}, {1, 3}], 4, "C3pp")


def test_su_series_minor():
    assert has_su_series_minor(n5().matroid) == (True, 3, 3)
    assert not has_su_series_minor(named("MK4")).found
    assert has_su_series_minor(l_family(1).matroid).found


# -------------------------------------------------
# Circuit axiom systems
# -------------------------------------------------
@pytest.mark.parametrize("system", ["C3", "C3-strong", "C3pp", "C3pp-unique"])
def test_matroid_families_pass_every_system(system):
    for m in POOL:
        assert axiom_check(m.family, m.n, system).holds


def test_u23_passes_unique_form():
    m = uniform(1, 3)
    assert axiom_check(m.family, 3, "C3pp-unique").holds


def test_non_matroid_fails_c3pp_with_named_witness():
    family = CircuitFamily.from_sets(4, [{1, 2}, {1, 3}])
    result = axiom_check(family, 4, "C3pp")
    assert not result.holds
    v = result.violations[0]
    assert (v.e1, v.e2, v.e) == (2, 3, 1)
    assert not axiom_check(family, 4, "C3").holds


def test_weak_variant_fails_on_k23():
    m = cycle_matroid(k23_graph())
    result = axiom_check(m.family, m.n, "C3pp-weak")
    assert not result.holds
    witness = (to_mask([0, 1, 2, 3]), to_mask([2, 3, 4, 5]), 0, 3, 2)
    assert any((v.c1, v.c2, v.e1, v.e2, v.e) == witness for v in result.violations)
    assert all("literal premise holds" in v.note for v in result.violations)


def test_axiom_check_rejects_non_antichain():
    with pytest.raises(InputError):
        axiom_check([{0}, {0, 1}], 2, "C3")


def test_axiom_check_rejects_unknown_system():
    with pytest.raises(InputError):
        axiom_check([{0}], 1, "C4")


def test_axiom_check_stops_early_when_not_exhaustive():
    family = CircuitFamily.from_sets(5, [{1, 2}, {1, 3}, {1, 4}])
    assert axiom_check(family, 5, "C3", exhaustive=False).total == 1
    assert axiom_check(family, 5, "C3").total == 3

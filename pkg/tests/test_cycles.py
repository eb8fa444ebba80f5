from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, strategies as st

from zetaprop import load_preset, parse
from zetaprop.cycles import (
    AlCycle,
    Edge,
    TransferGraph,
    based_trace_oracle,
    build_transfer_graph,
    canonical_rotation,
    enumerate_cycles,
    verify_gamma_zeta,
)
from zetaprop.errors import EnumerationBudgetExceeded
from zetaprop.linalg import MatrixQ, trace_power
from zetaprop.presentation import transfer_matrices

ANOSOV_L = [-1, -5, -16, -45, -121, -320, -841, -2205]


def census(name, P):
    p = load_preset(name)
    return enumerate_cycles(build_transfer_graph(p), p, P)


# -- transfer graph ---------------------------------------------------------


def test_anosov_graph():
    g = build_transfer_graph(load_preset("anosov"))
    assert len(g.edges) == 5
    assert g.adjacency() == MatrixQ([[2, 1], [1, 1]])
    pairs = sorted((e.source, e.target) for e in g.edges)
    assert pairs == [("p1", "p1"), ("p1", "p1"), ("p1", "p2"), ("p2", "p1"), ("p2", "p2")]
    assert all(e.sign == 1 for e in g.edges)


def test_sphere_graph_is_empty():
    g = build_transfer_graph(load_preset("sphere"))
    assert g.vertices == () and g.edges == ()


def test_single_negative_slide_graph():
    p = parse(
        """
[surface]
index0 = ["m"]
index1 = ["q", "p"]
index2 = ["M"]

[monodromy]
events = [{ slide = { mover = "p", over = "q", sign = -1 } }]
"""
    )
    g = build_transfer_graph(p)
    assert sorted((e.source, e.target, e.sign) for e in g.edges) == [
        ("p", "p", 1),
        ("p", "q", -1),
        ("q", "q", 1),
    ]
    assert [e.label for e in g.edges] == ["p>p:0", "p>q:1", "q>q:0"]


def test_parallel_edges_have_distinct_itineraries(random_suite):
    for p in random_suite:
        g = build_transfer_graph(p)
        keys = [(e.source, e.target, e.itinerary) for e in g.edges]
        assert len(keys) == len(set(keys))
        assert g.adjacency() == transfer_matrices(p).theta1


# -- based walks ------------------------------------------------------------


def test_based_oracle_examples():
    g = build_transfer_graph(load_preset("anosov"))
    assert [based_trace_oracle(g, k) for k in (1, 2)] == [3, 7]
    empty = TransferGraph((), ())
    assert based_trace_oracle(empty, 5) == 0
    loop = TransferGraph(("v",), (Edge("v", "v", -1, ("slide",)),))
    assert based_trace_oracle(loop, 3) == -1
    with pytest.raises(ValueError):
        based_trace_oracle(loop, 0)


# -- census -----------------------------------------------------------------


def test_sphere_census():
    c = census("sphere", 4)
    assert c.series.coefficients == [0, 2, 2, 2, 2]
    for k in range(1, 5):
        cyc = c.of_period(k)
        assert sorted(x.index for x in cyc) == [0, 2]
        assert all(x.primitive_period == 1 and x.sign == 1 for x in cyc)


def test_identity_torus_census_cancels():
    c = census("torus_id", 3)
    assert c.series.coefficients == [0, 0, 0, 0]
    for k in range(1, 4):
        assert sum(x.weight for x in c.of_period(k) if x.index == 1) == -2


def test_anosov_census():
    assert census("anosov", 3).series.coefficients[1:] == [-1, -5, -16]
    c = census("anosov", 8)
    assert c.series.coefficients[1:] == ANOSOV_L
    A = transfer_matrices(load_preset("anosov")).theta1
    assert all(c.series[k] == 2 - trace_power(A, k) for k in range(1, 9))


@pytest.mark.parametrize("name", ["anosov", "sphere", "torus_id"])
def test_verify_gamma_zeta_presets(name):
    r = verify_gamma_zeta(load_preset(name), 6)
    assert r.ok, r.failures()
    assert len(r.log_derivative) == 6 and len(r.exponential) == 7


def test_nontrivial_closure_cycles():
    c = census("sphere_rotate", 4)
    index0 = c.of_index(0)
    assert [(x.period, x.primitive_period, x.itinerary) for x in index0] == [
        (2, 2, ("u", "v")),
        (4, 2, ("u", "v", "u", "v")),
    ]
    c = census("sphere_flip", 4)
    assert [x.period for x in c.of_index(2)] == [2, 4]


def test_census_invariants(preset_name):
    c = census(preset_name, 6)
    for x in c.cycles:
        assert x.period % x.primitive_period == 0
        reps = x.period // x.primitive_period
        assert x.itinerary == x.itinerary[: x.primitive_period] * reps
        assert canonical_rotation(x.itinerary) == x.itinerary
        if x.index != 1:
            assert x.sign == 1
    for k in range(1, 7):
        assert c.series[k] == sum(x.weight for x in c.of_period(k))
    assert c.iterates_consistent()


def test_index1_sign_is_product_of_edge_signs(random_suite):
    for p in random_suite[:30]:
        g = build_transfer_graph(p)
        by_label = {e.label: e for e in g.edges}
        for x in enumerate_cycles(g, p, 4).of_index(1):
            sign = 1
            for lab in x.itinerary:
                sign *= by_label[lab].sign
            assert x.sign == sign


def _unsigned_closed_walks(g, k):
    out = g.out_edges()
    count = 0
    for v in g.vertices:
        for word in itertools.product(range(len(g.edges)), repeat=k):
            cur, ok = v, True
            for i in word:
                if i not in out[cur]:
                    ok = False
                    break
                cur = g.edges[i].target
            count += ok and cur == v
    return count


def test_each_unbased_cycle_has_primitive_period_base_points():
    p = load_preset("anosov")
    g = build_transfer_graph(p)
    c = enumerate_cycles(g, p, 4)
    for k in range(1, 5):
        assert sum(x.primitive_period for x in c.of_period(k) if x.index == 1) == _unsigned_closed_walks(g, k)


def test_necklace_identity_random(random_suite):
    for p in random_suite:
        g = build_transfer_graph(p)
        c = enumerate_cycles(g, p, 5)
        theta1 = transfer_matrices(p).theta1
        for k in range(1, 6):
            unbased = sum(x.sign * x.primitive_period for x in c.of_period(k) if x.index == 1)
            assert unbased == based_trace_oracle(g, k) == trace_power(theta1, k)


def test_gamma_zeta_random(random_suite):
    for p in random_suite:
        r = verify_gamma_zeta(p, 6)
        assert r.ok, r.failures()


@given(st.lists(st.sampled_from("abc"), min_size=1, max_size=8), st.integers(0, 7))
def test_rotation_canonical(word, shift):
    shift %= len(word)
    rotated = word[shift:] + word[:shift]
    assert canonical_rotation(rotated) == canonical_rotation(word)


def test_smaller_bound_gives_prefix(preset_name):
    big = census(preset_name, 6).cycles
    for P in range(1, 6):
        small = census(preset_name, P).cycles
        assert big[: len(small)] == small


def test_census_is_deterministic():
    a = census("anosov_cancel", 6).dumps()
    b = census("anosov_cancel", 6).dumps()
    assert a == b


def test_census_json():
    c = census("anosov", 3)
    data = json.loads(c.dumps())
    assert data["series"] == ["0", "-1", "-5", "-16"]
    assert set(data["cycles"][0]) == {"index", "period", "primitive_period", "sign", "itinerary"}


def test_period_cap_and_budget():
    p = load_preset("anosov")
    g = build_transfer_graph(p)
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_cycles(g, p, 13)
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_cycles(g, p, 8, walk_budget=100)
    with pytest.raises(ValueError):
        enumerate_cycles(g, p, 0)
    lucas = [2, 1]
    while len(lucas) <= 26:
        lucas.append(lucas[-1] + lucas[-2])
    assert enumerate_cycles(g, p, 13, max_period_cap=13, walk_budget=10**8).series[13] == 2 - lucas[26]


def test_al_cycle_weight():
    assert AlCycle(1, 4, 2, -1, ("x", "y", "x", "y")).weight == 2
    assert AlCycle(0, 3, 1, 1, ("m",) * 3).weight == 1

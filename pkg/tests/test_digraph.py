import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_strongly_connected
from dowkerrel import (
    NotSelfRelationError,
    NotStronglyConnectedError,
    connected_components,
    down_set,
    eventual_period,
    fixtures,
    from_matrix,
    from_pairs,
    graph_period_q,
    has_positive_trace,
    is_acyclic,
    is_simple,
    is_strongly_connected,
    maxima,
    minima,
    q_classes,
    strongly_connected_components,
    up_set,
)


@st.composite
def self_relations(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    p = draw(st.sampled_from([0.15, 0.3, 0.5]))
    bits = [[draw(st.floats(0, 1)) < p for _ in range(n)] for _ in range(n)]
    return from_matrix(bits)


def chain_with_sink_loop():
    return from_pairs([("x1", "x2"), ("x2", "x3"), ("x3", "x3")], ("x1", "x2", "x3"))


class TestComponents:
    def test_nilpotent_one_component(self, fix_n):
        assert len(connected_components(fix_n)) == 1

    def test_identity_components(self, fix_i3):
        cc = connected_components(fix_i3)
        assert cc.blocks == (frozenset({"x1"}), frozenset({"x2"}), frozenset({"x3"}))
        assert cc.block_of("x2") == frozenset({"x2"})

    def test_cycle_strongly_connected(self, fix_c3):
        assert is_strongly_connected(fix_c3)
        assert len(strongly_connected_components(fix_c3)) == 1

    def test_nilpotent_sccs_are_singletons(self, fix_n):
        assert len(strongly_connected_components(fix_n)) == 3
        assert not is_strongly_connected(fix_n)

    def test_requires_self_relation(self, fix_a):
        with pytest.raises(NotSelfRelationError):
            connected_components(fix_a)

    @given(self_relations())
    def test_match_bruteforce(self, R):
        P, X = oracles.pairs_of(R), R.source_labels
        assert set(strongly_connected_components(R).blocks) == oracles.scc_bruteforce(P, X)
        assert set(connected_components(R).blocks) == oracles.cc_bruteforce(P, X)


class TestCycleStructure:
    def test_acyclic_allows_loops(self, fix_i3, fix_n):
        assert is_acyclic(fix_i3)
        assert is_acyclic(fix_n)
        assert is_acyclic(chain_with_sink_loop())

    def test_cycle_not_acyclic(self, fix_c3):
        assert not is_acyclic(fix_c3)

    def test_simple(self, fix_c3, fix_i3):
        assert is_simple(fix_c3)
        assert is_simple(fix_i3)
        assert is_simple(fixtures.simple_10())

    def test_all_ones_not_simple(self, fix_j3):
        assert not is_simple(fix_j3)

    def test_cycle_with_loop_not_simple(self):
        R = from_pairs([("a", "b"), ("b", "a"), ("a", "a")], ("a", "b"))
        assert not is_simple(R)

    def test_trace(self, fix_i3, fix_c3):
        assert has_positive_trace(fix_i3)
        assert not has_positive_trace(fix_c3)

    @given(self_relations())
    def test_match_bruteforce(self, R):
        P, X = oracles.pairs_of(R), R.source_labels
        assert is_acyclic(R) == (not oracles.has_long_cycle(P, X))
        assert is_simple(R) == oracles.simple_bruteforce(P, X)


class TestQ:
    def test_cycle_3(self, fix_c3):
        qs = q_classes(fix_c3)
        assert qs.q == 3
        assert sorted(map(sorted, qs.classes)) == [["x1"], ["x2"], ["x3"]]

    def test_all_ones(self, fix_j3):
        qs = q_classes(fix_j3)
        assert qs.q == 1
        assert qs.classes == (frozenset({"x1", "x2", "x3"}),)

    def test_cycle_4(self):
        qs = q_classes(fixtures.cycle(4))
        assert qs.q == 4
        assert all(len(c) == 1 for c in qs.classes)

    def test_not_strongly_connected(self, fix_n):
        with pytest.raises(NotStronglyConnectedError):
            graph_period_q(fix_n)

    def test_lone_vertex_without_loop(self):
        with pytest.raises(NotStronglyConnectedError):
            graph_period_q(from_matrix([[0]]))

    def test_edges_step_between_classes(self):
        rng = random.Random(11)
        for _ in range(100):
            R = random_strongly_connected(rng, 6)
            qs = q_classes(R)
            cls = {v: c for c, block in enumerate(qs.classes) for v in block}
            for x, y in R.pairs():
                assert cls[y] == (cls[x] + 1) % qs.q

    def test_matches_cycle_and_walk_gcd(self):
        rng = random.Random(5)
        for _ in range(150):
            R = random_strongly_connected(rng, 6)
            P, X = oracles.pairs_of(R), R.source_labels
            q = graph_period_q(R)
            assert q == oracles.cycle_gcd(P, X) == oracles.closed_walk_gcd(P, X)
            assert set(q_classes(R).classes) == oracles.q_classes_bruteforce(P, X, q)

    def test_q_need_not_divide_stabilization_index(self):
        # q = 2 yet the powers settle only from j = 3 on
        R = from_matrix([[0, 0, 1, 0, 1], [0, 0, 1, 1, 0], [0, 1, 0, 0, 0], [1, 1, 0, 0, 0], [1, 1, 0, 0, 0]])
        assert graph_period_q(R) == 2
        assert eventual_period(R) == (3, 2)
        P, X = oracles.pairs_of(R), R.source_labels
        assert oracles.eventual_period_bruteforce(P, X) == (3, 2)
        assert oracles.cycle_gcd(P, X) == 2


class TestOrder:
    def test_chain(self):
        R = chain_with_sink_loop()
        assert eventual_period(R) == (2, 1)
        assert down_set(R, "x1") == {"x3"}
        assert up_set(R, "x3") == {"x1", "x2", "x3"}
        assert minima(R) == {"x3"}
        assert maxima(R) == {"x1", "x2"}

    def test_nilpotent_everything_extremal(self, fix_n):
        assert minima(fix_n) == {"x1", "x2", "x3"}
        assert maxima(fix_n) == {"x1", "x2", "x3"}

    @settings(max_examples=60)
    @given(self_relations(max_n=5))
    def test_down_set_is_limit_image(self, R):
        j, p = eventual_period(R)
        if p != 1:
            return
        P, X = oracles.pairs_of(R), R.source_labels
        Pj = oracles.power_pairs(P, X, j)
        for x in X:
            assert down_set(R, x) == {y for (a, y) in Pj if a == x}

import random

import pytest

from romandom import (Graph, enumerate_minimal_rdf_refined, gen_cycle,
                      gen_null, gen_random, is_minimal_rdf)
from romandom.enum_refined import (RULE_EDGES, RULE_LPN, RULE_NPD, RULE_V2,
                                   apply_reductions, branch_deny_two,
                                   branch_set_two,
                                   check_phase_properties, pick_branch_vertex,
                                   replay, undo)
from romandom.grdf import (ACTIVE, NOT_ONE, NOT_TWO, Grdf, consistent_with,
                           measure, violated_invariants)
from romandom.oracle import brute_minimal_rdfs


def _adj(g: Graph) -> list[set[int]]:
    return [set(s) for s in g.adj]


def test_measure_all_active():
    assert measure(Grdf.all_active(7)) == 7.0


def test_measure_leaf_zero():
    assert measure(Grdf([0, 1, 2, 2])) == 0.0


def test_measure_default_weights():
    got = measure(Grdf([NOT_ONE, NOT_TWO]))
    assert got == pytest.approx(2 / 3 + 0.38488)


def test_measure_rejects_bad_weights():
    with pytest.raises(ValueError):
        measure(Grdf.all_active(1), w1=1.5)


def test_consistent_with():
    assert consistent_with((2, 0), [ACTIVE, NOT_TWO])
    assert not consistent_with((1,), [NOT_ONE])
    assert consistent_with((0, 1, 2), [0, 1, 2])


def test_violated_invariants(p2):
    adj = _adj(p2)
    assert violated_invariants(adj, [0, NOT_TWO]) == ["I1", "I4"]
    assert violated_invariants(adj, [2, 1]) == ["I2", "I3"]
    assert violated_invariants(adj, [2, 0]) == []


def test_reductions_two_next_to_active(p2):
    # the active ray is the 2-vertex's last candidate private neighbor
    adj = _adj(p2)
    grdf = Grdf([2, ACTIVE])
    trace = apply_reductions(adj, grdf)
    assert trace.steps[0] == (RULE_LPN, 1, ACTIVE, 0)
    assert grdf.labels == [2, 0]


def test_reductions_two_next_to_several_active(k13):
    adj = _adj(k13)
    grdf = Grdf([2, ACTIVE, ACTIVE, ACTIVE])
    trace = apply_reductions(adj, grdf)
    assert trace.steps[0] == (RULE_V2, 1, ACTIVE, NOT_ONE)
    assert grdf.labels == [2, 0, 0, 0]


def test_reductions_trapped_not_two(p2):
    adj = _adj(p2)
    grdf = Grdf([NOT_TWO, NOT_TWO])
    trace = apply_reductions(adj, grdf)
    assert grdf.labels == [1, 1]
    rules = [step[0] for step in trace.steps]
    assert RULE_NPD in rules and RULE_EDGES in rules
    assert adj == [set(), set()]
    undo(trace, adj, grdf)
    assert grdf.labels == [NOT_TWO, NOT_TWO]
    assert adj == _adj(p2)


def test_reductions_fixpoint_is_stable(p2):
    adj = _adj(p2)
    grdf = Grdf([2, 0])
    assert len(apply_reductions(adj, grdf)) == 0
    assert grdf.labels == [2, 0]


def test_trace_replay_roundtrip():
    rng = random.Random(5)
    for _ in range(25):
        g = gen_random(7, 0.35, rng.randrange(10**6))
        labels = [rng.choice((ACTIVE, ACTIVE, 2, NOT_TWO)) for _ in range(g.n)]
        adj = _adj(g)
        grdf = Grdf(list(labels))
        trace = apply_reductions(adj, grdf)
        post_labels = list(grdf.labels)
        post_adj = [set(s) for s in adj]
        undo(trace, adj, grdf)
        assert grdf.labels == labels and adj == _adj(g)
        replay(trace, adj, grdf)
        assert grdf.labels == post_labels and adj == post_adj


def test_pick_branch_all_active_cycle():
    g = gen_cycle(5)
    assert pick_branch_vertex(_adj(g), Grdf.all_active(5)) == (0, 1)


def test_pick_branch_priority_two(p2):
    # a lone active vertex with no qualifying neighbors
    assert pick_branch_vertex(_adj(p2), Grdf([ACTIVE, 0])) == (0, 2)


def test_pick_branch_priority_three():
    g = gen_null(4)
    grdf = Grdf([0, 1, 0, NOT_ONE])
    assert pick_branch_vertex(_adj(g), grdf) == (3, 3)


def test_pick_branch_leaf_none(p2):
    assert pick_branch_vertex(_adj(p2), Grdf([2, 0])) is None


def test_branch_operations():
    grdf = Grdf([ACTIVE, NOT_ONE, 0])
    branch_set_two(grdf, 0)
    assert grdf.labels[0] == 2
    grdf.labels[0] = ACTIVE
    branch_deny_two(grdf, 0)
    assert grdf.labels[0] == NOT_TWO
    branch_set_two(grdf, 1)
    assert grdf.labels[1] == 2
    grdf.labels[1] = NOT_ONE
    branch_deny_two(grdf, 1)
    assert grdf.labels[1] == 0
    with pytest.raises(ValueError):
        branch_set_two(grdf, 2)
    with pytest.raises(ValueError):
        branch_deny_two(grdf, 2)


def test_phase_properties(p2):
    adj = _adj(p2)
    assert check_phase_properties(adj, Grdf([2, 0]), 3)
    assert not check_phase_properties(adj, Grdf([2, NOT_ONE]), 3)
    assert not check_phase_properties(adj, Grdf([ACTIVE, 0]), 2)
    assert check_phase_properties(adj, Grdf.all_active(2), 0)
    with pytest.raises(ValueError):
        check_phase_properties(adj, Grdf([2, 0]), 4)


def _run(g, **kwargs):
    out = []
    stats = enumerate_minimal_rdf_refined(g, out.append, **kwargs)
    return out, stats


def test_refined_c5(c5):
    out, stats = _run(c5)
    assert len(out) == 16 and stats.solutions == 16
    assert sorted(out) == brute_minimal_rdfs(c5)


def test_refined_null4_single_solution():
    out, _ = _run(gen_null(4))
    assert out == [(1, 1, 1, 1)]


def test_refined_order_zero_graph():
    out, stats = _run(Graph.from_edges(0, []))
    assert out == [()] and stats.solutions == 1


def test_refined_matches_oracle_with_assertions(catalog5):
    for g in catalog5:
        out, stats = _run(g, assert_invariants=True)
        assert sorted(out) == brute_minimal_rdfs(g)
        assert len(set(out)) == len(out)
        assert all(is_minimal_rdf(g, f) for f in out)
        assert stats.max_gap <= 2 * g.n


def test_refined_random_graphs_with_assertions():
    rng = random.Random(9)
    for _ in range(15):
        g = gen_random(8, 0.3, rng.randrange(10**6))
        out, stats = _run(g, assert_invariants=True)
        assert sorted(out) == brute_minimal_rdfs(g)
        assert stats.max_gap <= 2 * g.n


def test_reduction_soundness_against_oracle():
    # a reduction pass must not change which minimal rdfs remain reachable
    rng = random.Random(17)
    for _ in range(10):
        g = gen_random(6, 0.35, rng.randrange(10**6))
        minimal = brute_minimal_rdfs(g)
        records = []
        _run(g, reduction_observer=lambda pre, post: records.append((pre, post)))
        assert records
        for pre, post in records:
            before = {f for f in minimal if consistent_with(f, pre)}
            after = {f for f in minimal if consistent_with(f, post)}
            assert before == after, (pre, post)


def test_refined_stats_phase_transitions(c5):
    _, stats = _run(c5)
    assert sum(stats.phase_transitions.values()) > 0
    assert stats.tree_nodes > 0

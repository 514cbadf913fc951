import pytest
from hypothesis import given, strategies as st

from radzero import (
    QuiverError,
    Valuation,
    a_matrix,
    b_matrix,
    classify,
    gen_cycle,
    gen_loops,
    gen_random,
    validate,
)
from radzero.quiver import is_permutation_matrix


def kinds(err):
    return {d.kind for d in err.value.diagnostics}


def test_single_loop_gets_weight_one():
    Q = validate({"vertices": [1], "arrows": [(1, 1)]})
    assert Q.weights == {"1": 1}
    assert Q.arrows[("1", "1")] == Valuation(1, 1)


def test_inconsistent_symmetrizer():
    with pytest.raises(QuiverError) as err:
        validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 1, 2)]})
    assert kinds(err) == {"symmetrizer"}


def test_consistent_valued_two_cycle():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]})
    assert Q.weight_list == (1, 2)


def test_minimal_symmetrizer_is_per_component():
    Q = validate({"vertices": ["a", "b", "c", "d"], "arrows": [("a", "b", 3, 1), ("c", "d", 1, 2)]})
    # a*f_b = b*f_a: 3 f_b = f_a
    assert Q.weights == {"a": 3, "b": 1, "c": 1, "d": 2}


@pytest.mark.parametrize(
    "raw, kind",
    [
        ({"vertices": [1], "arrows": [(1, 2)]}, "dangling"),
        ({"vertices": [1, 2], "arrows": [(1, 2, 0, 1)]}, "nonpositive-valuation"),
        ({"vertices": [1], "arrows": [(1, 1, 1, 2)]}, "loop-valuation"),
        ({"vertices": [1, 2], "arrows": [(1, 2), (1, 2)]}, "duplicate-arrow"),
        ({"vertices": [1, 1]}, "duplicate-vertex"),
        ({"vertices": [1, 2], "weights": {1: 1}}, "missing-weight"),
        ({"vertices": [1], "weights": {1: 0}}, "nonpositive-weight"),
        ({"vertices": [1, 2], "weights": {1: 1, 2: 1}, "arrows": [(1, 2, 1, 2)]}, "symmetrizer"),
    ],
)
def test_validation_errors(raw, kind):
    with pytest.raises(QuiverError) as err:
        validate(raw)
    assert kind in kinds(err)


def test_all_problems_reported_together():
    with pytest.raises(QuiverError) as err:
        validate({"vertices": [1, 1], "arrows": [(1, 3), (1, 1, 2, 1)]})
    assert {"duplicate-vertex", "dangling", "loop-valuation"} <= kinds(err)


def test_a_matrix_examples():
    assert a_matrix(gen_cycle(3)) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert a_matrix(gen_loops(2)) == [[2]]
    assert a_matrix(validate({"vertices": [1, 2]})) == [[0, 0], [0, 0]]


def test_b_matrix_is_transposed_convention():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]})
    assert a_matrix(Q) == [[0, 1], [2, 0]]
    assert b_matrix(Q) == [[0, 2], [1, 0]]


def test_classify_path():
    c = classify(validate({"vertices": [1, 2, 3], "arrows": [(1, 2), (2, 3)]}))
    assert c.sources == {"1"} and c.sinks == {"3"}
    assert not c.cyclic and not c.cyclic_like


def test_classify_cycle_with_tail():
    Q = validate({"vertices": [1, 2, 4], "arrows": [(1, 2), (2, 1), (2, 4)]})
    c = classify(Q)
    assert c.cyclic == {"1", "2"} and c.cyclic_like == {"1", "2"}
    assert c.sinks == {"4"} and c.reaches_cycle == {"1", "2"}
    assert c.reached_by_cycle == {"1", "2", "4"}


def test_classify_single_loop():
    c = classify(gen_loops(1))
    assert c.cyclic == c.cyclic_like == {"1"}
    assert not c.sources and not c.sinks


def test_cyclic_like_includes_bridges_between_cycles():
    Q = validate({"vertices": [1, 2, 3], "arrows": [(1, 1), (1, 2), (2, 3), (3, 3)]})
    c = classify(Q)
    assert c.cyclic == {"1", "3"}
    assert c.cyclic_like == {"1", "2", "3"}


def test_quiver_is_hashable_and_name_ignored():
    Q1 = gen_cycle(3)
    Q2 = validate({**Q1.to_raw(), "name": "other"})
    assert Q1 == Q2 and hash(Q1) == hash(Q2)


seeds = st.integers(0, 10_000)


@given(seeds, st.booleans())
def test_symmetrizer_holds(seed, valued):
    Q = gen_random(seed, 6, 3, valued=valued)
    for s, t, val in Q.arrow_list:
        assert val.a * Q.weights[t] == val.b * Q.weights[s]


@given(seeds)
def test_classification_consistency(seed):
    Q = gen_random(seed, 7, 2)
    c = classify(Q)
    assert c.cyclic <= c.cyclic_like
    assert c.cyclic_like == c.reaches_cycle & c.reached_by_cycle
    assert sorted(v for comp in c.scc for v in comp) == sorted(Q.vertices)
    connected = all(Q.out_arrows[v] or Q.in_arrows[v] for v in Q.vertices)
    if connected and Q.vertices:
        no_ends = not c.sources and not c.sinks
        assert no_ends == (c.cyclic_like == set(Q.vertices))


@given(seeds)
def test_permutation_matrix_criterion(seed):
    Q = gen_random(seed, 5, 2, density=0.3)
    one_in_one_out = all(
        len(Q.out_arrows[v]) == 1
        and len(Q.in_arrows[v]) == 1
        and Q.out_arrows[v][0][1].a == 1
        for v in Q.vertices
    )
    assert is_permutation_matrix(a_matrix(Q)) == (one_in_one_out and len(Q) > 0)


@given(seeds)
def test_raw_round_trip(seed):
    Q = gen_random(seed, 6, 3, valued=True)
    assert validate(Q.to_raw()) == Q

import random

from hypothesis import given, strategies as st

from radzero import classify, cyclicize, gen_cycle, gen_loops, gen_random, is_cyclic_like, validate
from radzero.constructions import adjoin_sink, adjoin_source


def test_cycle_is_its_own_core():
    res = cyclicize(gen_cycle(3))
    assert res.core == gen_cycle(3)
    assert res.trace == ()
    assert not res.is_simple


def test_path_peels_completely():
    res = cyclicize(validate({"vertices": [1, 2, 3], "arrows": [(1, 2), (2, 3)]}))
    assert res.is_simple and len(res.core) == 0
    assert len(res.trace) == 3


def test_cycle_with_source_and_sink():
    Q = adjoin_sink(adjoin_source(gen_cycle(2), "s", [("1", (1, 1))]), "t", [("2", (1, 1))])
    res = cyclicize(Q)
    assert res.core == gen_cycle(2)
    assert set(res.trace) == {("s", "source"), ("t", "sink")}


def test_isolated_vertex_recorded_as_source():
    res = cyclicize(validate({"vertices": ["x"]}))
    assert res.trace == (("x", "source"),)


def test_trace_is_in_declaration_order():
    Q = validate({"vertices": [3, 1, 2], "arrows": [(3, 1), (1, 2)]})
    assert [v for v, _ in cyclicize(Q).trace] == ["3", "1", "2"]


def test_core_keeps_weights_and_valuations():
    Q = validate({"vertices": [1, 2, "s"], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1), ("s", 1, 2, 1)]})
    core = cyclicize(Q).core
    assert Q.weights == {"1": 1, "2": 2, "s": 2}
    assert core.weights == {"1": 1, "2": 2}
    assert dict(core.arrows) == {("1", "2"): Q.arrows[("1", "2")], ("2", "1"): Q.arrows[("2", "1")]}


def test_is_cyclic_like_examples():
    assert is_cyclic_like(gen_cycle(5))
    assert is_cyclic_like(gen_loops(3))
    assert not is_cyclic_like(validate({"vertices": [1]}))
    assert not is_cyclic_like(validate({"vertices": []}))


def test_empty_quiver():
    res = cyclicize(validate({"vertices": []}))
    assert res.is_simple and res.trace == ()


seeds = st.integers(0, 10_000)


@given(seeds, st.integers(0, 1000))
def test_order_independence(seed, order_seed):
    Q = gen_random(seed, 8, 2, density=0.2)
    assert cyclicize(Q, random.Random(order_seed)).core == cyclicize(Q).core


@given(seeds)
def test_core_is_cyclic_like_part(seed):
    Q = gen_random(seed, 8, 2)
    res = cyclicize(Q)
    assert set(res.core.vertices) == classify(Q).cyclic_like
    assert len(res.trace) + len(res.core) == len(Q)
    assert all(res.embedding[v] == v for v in res.core.vertices)
    c = classify(res.core)
    assert res.is_simple or (not c.sources and not c.sinks)


@given(seeds)
def test_idempotent(seed):
    core = cyclicize(gen_random(seed, 8, 2)).core
    again = cyclicize(core)
    assert again.core == core and again.trace == ()

import pytest
from hypothesis import given, strategies as st

from radzero import (
    HomStatus,
    cyclicize,
    disjoint_union,
    gen_cycle,
    gen_labelled,
    gen_loops,
    gen_random,
    k_dim,
    omega_iterate,
    sg_hom_dim,
    sg_is_zero,
    stable_hom_dim,
    syzygy_step,
    unit,
    validate,
)
from radzero.constructions import adjoin_sink, adjoin_source
from radzero.gamma import core_successor, perm_power
from radzero.syzygy import core_vectors, pairing_growth

PATH2 = validate({"vertices": [1, 2], "arrows": [(1, 2)]})
PATH3 = validate({"vertices": [1, 2, 3], "arrows": [(1, 2), (2, 3)]})


def test_syzygy_step_examples():
    assert syzygy_step(gen_loops(2), unit("1")) == {"1": 2}
    assert syzygy_step(gen_cycle(3), unit("1")) == {"2": 1}
    assert syzygy_step(PATH2, unit("2")) == {}


def test_syzygy_step_uses_first_valuation_component():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]})
    assert syzygy_step(Q, unit("1")) == {"2": 1}
    assert syzygy_step(Q, unit("2")) == {"1": 2}


def test_omega_iterate_examples():
    assert omega_iterate(gen_loops(3), unit("1"), 4) == {"1": 81}
    assert omega_iterate(gen_cycle(4), {"2": 5}, 0) == {"2": 5}
    assert omega_iterate(gen_cycle(2), unit("1"), 2) == {"1": 1}
    with pytest.raises(ValueError):
        omega_iterate(gen_cycle(2), unit("1"), -1)


def test_big_integers_are_exact():
    assert omega_iterate(gen_loops(5), unit("1"), 100) == {"1": 5**100}


def test_stable_hom_dim_examples():
    assert stable_hom_dim(gen_cycle(3), unit("1"), unit("1")) == 1
    assert stable_hom_dim(PATH2, unit("2"), unit("2")) == 0
    assert stable_hom_dim(gen_loops(2), {"1": 4}, {"1": 4}) == 16


def test_stable_hom_dim_weighted():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]})
    assert stable_hom_dim(Q, {"1": 3, "2": 1}, {"1": 1, "2": 5}) == 3 * 1 + 1 * 5 * 2


def test_sg_is_zero_examples():
    assert sg_is_zero(PATH3, "1")
    tail = adjoin_sink(gen_cycle(2), "t", [("2", (1, 1))])
    assert sg_is_zero(tail, "t")
    head = adjoin_source(gen_cycle(2), "s", [("1", (1, 1))])
    assert not sg_is_zero(head, "s")
    with pytest.raises(KeyError):
        sg_is_zero(PATH3, "9")


def test_sg_hom_dim_on_cycle():
    r = sg_hom_dim(gen_cycle(3), "1", "2", 1)
    assert (r.status, r.value, r.certified) == (HomStatus.FINITE, 1, True)
    assert sg_hom_dim(gen_cycle(3), "1", "2", 0).value == 0


def test_sg_hom_dim_loops_unbounded():
    r = sg_hom_dim(gen_loops(2), "1", "1", 0)
    assert r.status is HomStatus.UNBOUNDED and r.certified
    assert r.level_dims[:4] == (1, 4, 16, 64)


def test_sg_hom_dim_zero_on_path():
    r = sg_hom_dim(PATH2, "1", "1", 0)
    assert (r.status, r.value, r.certified) == (HomStatus.ZERO, 0, True)


def test_sg_hom_dim_errors():
    with pytest.raises(ValueError):
        sg_hom_dim(gen_cycle(2), "1", "1", 0, horizon=0)
    with pytest.raises(KeyError):
        sg_hom_dim(gen_cycle(2), "1", "7", 0)


def test_horizon_controls_level_count():
    assert len(sg_hom_dim(gen_cycle(2), "1", "1", 0, horizon=3).level_dims) == 4


# a core that is not a permutation but still has bounded pairings
MIXED = disjoint_union(gen_cycle(2), gen_loops(2))


def test_bounded_pairing_off_the_permutation_case():
    r = sg_hom_dim(MIXED, "1", "2", 1)
    assert (r.status, r.value, r.certified) == (HomStatus.FINITE, 1, True)
    assert sg_hom_dim(MIXED, "1", "1'", 0).value == 0
    assert sg_hom_dim(MIXED, "1'", "1'", 0).status is HomStatus.UNBOUNDED


def test_linear_growth_two_loops_in_series():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 1), (1, 2), (2, 2)]})
    r = sg_hom_dim(Q, "1", "1", 0)
    assert r.status is HomStatus.UNBOUNDED
    assert r.level_dims[:5] == (1, 2, 5, 10, 17)  # 1 + i^2


def test_oversized_pair_graph_falls_back():
    r = sg_hom_dim(MIXED, "1", "2", 1, max_pair_nodes=0)
    assert r.status is HomStatus.HORIZON and not r.certified
    r = sg_hom_dim(gen_loops(2), "1", "1", 0, max_pair_nodes=0)
    assert r.status is HomStatus.UNBOUNDED and r.certified


def test_pairing_growth_reports_size():
    core, v, w = core_vectors(MIXED, "1", "2", 1)
    g = pairing_growth(core, v, w)
    assert not g.unbounded and g.size > 0


def test_k_dim_examples():
    assert k_dim(gen_cycle(3), 0).value == 3
    assert k_dim(gen_cycle(3), 7).value == 3
    assert k_dim(gen_loops(2), 0).status is HomStatus.UNBOUNDED
    assert k_dim(PATH3, 0).status is HomStatus.ZERO


def test_k_dim_sums_level_dims():
    Q = gen_cycle(2)
    parts = [sg_hom_dim(Q, a, b, 1, 5).level_dims for a in Q.vertices for b in Q.vertices]
    assert k_dim(Q, 1, 5).level_dims == tuple(map(sum, zip(*parts)))


seeds = st.integers(0, 10_000)
vectors = st.dictionaries(st.sampled_from("12345"), st.integers(0, 50), max_size=5)


@given(seeds, vectors, vectors)
def test_linearity(seed, v, w):
    Q = validate({**gen_random(seed, 5, 3).to_raw(), "vertices": list("12345"), "weights": None})
    total = {k: v.get(k, 0) + w.get(k, 0) for k in set(v) | set(w)}
    lhs = syzygy_step(Q, total)
    a, b = syzygy_step(Q, v), syzygy_step(Q, w)
    rhs = {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)}
    assert {k: x for k, x in lhs.items() if x} == {k: x for k, x in rhs.items() if x}


@given(seeds, st.integers(0, 5), st.integers(0, 5))
def test_iterate_composes(seed, m1, m2):
    Q = gen_random(seed, 5, 2)
    v = unit(Q.vertices[0])
    assert omega_iterate(Q, v, m1 + m2) == omega_iterate(Q, omega_iterate(Q, v, m1), m2)


@given(seeds)
def test_length_nondecreasing_on_cyclic_like(seed):
    core = cyclicize(gen_random(seed, 6, 2, valued=seed % 2 == 1)).core
    for u in core.vertices:
        v = unit(u)
        for _ in range(8):
            nxt = syzygy_step(core, v)
            assert sum(core.weights[j] * x for j, x in nxt.items()) >= sum(core.weights[j] * x for j, x in v.items())
            v = nxt


@given(seeds, st.integers(-3, 3))
def test_level_dims_nondecreasing_and_stabilized(seed, n):
    Q = gen_random(seed, 5, 2)
    for a in Q.vertices[:2]:
        for b in Q.vertices[:2]:
            r = sg_hom_dim(Q, a, b, n)
            assert r.certified
            # from level |V| on the pairing lives on the cyclic-like core
            tail = r.level_dims[len(Q) :]
            assert all(x <= y for x, y in zip(tail, tail[1:]))
            if r.status is HomStatus.FINITE and r.stabilized_at is not None:
                assert all(d == r.value for d in r.level_dims[max(r.stabilized_at, len(Q)) :])


@given(seeds, st.integers(-3, 3))
def test_shift_identity(seed, n):
    Q, _, _ = gen_labelled(seed)
    a, b = Q.vertices[0], Q.vertices[-1]
    r = sg_hom_dim(Q, a, b, n, horizon=len(Q) + 12)
    if sg_is_zero(Q, a) or sg_is_zero(Q, b):
        return
    core, v, w = core_vectors(Q, a, b, n, extra_depth=5)
    for i in range(8):
        assert stable_hom_dim(core, v, w) == r.level_dims[len(Q) + 5 + i]
        v, w = syzygy_step(core, v), syzygy_step(core, w)


@given(st.integers(0, 5000).map(lambda s: 2 * s), st.integers(-6, 6))
def test_hom_finite_closed_form(seed, n):
    Q, label, _ = gen_labelled(seed)
    assert label
    sigma = core_successor(Q)
    shifted = perm_power(sigma, n)
    for a in sigma:
        for b in sigma:
            r = sg_hom_dim(Q, a, b, n)
            assert r.certified and r.status is HomStatus.FINITE
            assert r.value == Q.weights[a] * (shifted[a] == b)

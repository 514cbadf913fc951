import numpy as np
import pytest
from hypothesis import given, strategies as st

from radzero import HomStatus, gen_cycle, gen_labelled, gen_loops, gen_random, sg_hom_dim, stable_hom_dim, syzygy_step, unit, validate
from radzero.oracle import (
    OracleError,
    RepModule,
    build_simple,
    colimit_hom_dim,
    hom_space,
    omega_morphism,
    projective_cover,
    stable_hom_space,
    syzygy_rep,
)
from radzero.oracle import gfp
from radzero.oracle.checks import verify_quiver
from radzero.oracle.rep import _layout, hom_basis, projective_part, vectorize

PATH2 = validate({"vertices": [1, 2], "arrows": [(1, 2)]})


def test_build_simple():
    assert build_simple(gen_cycle(2), "1").dims == {"1": 1, "2": 0}
    L = build_simple(gen_loops(2), "1")
    assert L.dims == {"1": 1}
    assert all(not m.any() for m in L.maps.values()) and len(L.maps) == 2
    with pytest.raises(OracleError):
        build_simple(gen_cycle(2), "7")


def test_valued_quivers_refused():
    Q = validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]})
    with pytest.raises(OracleError, match="trivially valued"):
        build_simple(Q, "1")


def test_projective_cover_examples():
    c = projective_cover(build_simple(gen_cycle(2), "1"))
    assert c.P.dims == {"1": 1, "2": 1}
    assert projective_cover(build_simple(gen_loops(2), "1")).P.dims == {"1": 3}
    P = c.P
    again = projective_cover(P)
    assert again.P.dims == P.dims
    assert all(gfp.rank(again.pi[v], 2) == P.dims[v] for v in P.dims if P.dims[v])


def test_syzygy_rep_examples():
    assert syzygy_rep(build_simple(gen_cycle(3), "1")).dim_vector == {"2": 1}
    K = syzygy_rep(build_simple(gen_loops(2), "1"))
    assert K.dim_vector == {"1": 2}
    assert all(not m.any() for m in K.maps.values())  # semisimple
    P = projective_cover(build_simple(gen_cycle(2), "1")).P
    assert syzygy_rep(P).total_dim == 0


def test_hom_space_examples():
    C2 = gen_cycle(2)
    s1, s2 = build_simple(C2, "1"), build_simple(C2, "2")
    assert hom_space(s1, s1).dim == 1
    assert hom_space(s1, s2).dim == 0
    P1 = projective_cover(s1).P
    H = hom_space(P1, s1)
    assert H.dim == 1 and all(P1.is_morphism(s1, f) for f in H.basis)


def test_stable_hom_space_examples():
    assert stable_hom_space(build_simple(PATH2, "2"), build_simple(PATH2, "2")) == 0
    s = build_simple(gen_cycle(3), "1")
    assert stable_hom_space(s, s) == 1


def test_stable_hom_space_semisimple_sums():
    Q = gen_cycle(3)
    M = RepModule(Q, 2, {"1": 2, "2": 1})
    N = RepModule(Q, 2, {"1": 3, "3": 4})
    assert stable_hom_space(M, N) == 6 == stable_hom_dim(Q, M.dims, N.dims)


def test_colimit_examples():
    assert colimit_hom_dim(gen_cycle(3), "1", "2", 1, 6).value == 1
    assert colimit_hom_dim(gen_cycle(2), "1", "1", 0, 6).value == 1
    assert colimit_hom_dim(PATH2, "1", "1", 0, 3).value == 0
    with pytest.raises(OracleError, match="depth"):
        colimit_hom_dim(gen_cycle(2), "1", "1", 3, 4)


def test_colimit_flags_growth():
    r = colimit_hom_dim(gen_loops(2), "1", "1", 0, 5)
    assert not r.stable and r.value is None and r.reason
    assert r.level_dims == {i: 4**i for i in range(6)}


def test_colimit_shift_direction():
    # Hom(q S_1, q S_1[1]) over cycle(2) pairs 1 with sigma^1(1) = 2 ... not 1
    assert colimit_hom_dim(gen_cycle(2), "1", "1", 1, 6).value == 0
    assert colimit_hom_dim(gen_cycle(2), "1", "2", 1, 6).value == 1
    assert colimit_hom_dim(gen_cycle(3), "1", "2", -1, 6).value == 0
    assert colimit_hom_dim(gen_cycle(3), "1", "3", -1, 6).value == 1


def test_omega_of_identity_is_stably_identity():
    Q = gen_random(11, 4, 2)
    M = syzygy_rep(build_simple(Q, Q.vertices[0]))
    cm = projective_cover(M)
    ident = {v: np.eye(M.dims[v], dtype=np.int64) for v in Q.vertices}
    K = cm.omega
    f = omega_morphism(cm, cm, ident)
    assert K.is_morphism(K, f)
    lay = _layout(K, K)
    diff = (vectorize(f, lay) - vectorize({v: np.eye(K.dims[v], dtype=np.int64) for v in Q.vertices}, lay)) % 2
    proj = projective_part(K, K)
    assert gfp.rank(np.vstack([proj, diff]), 2) == gfp.rank(proj, 2)


seeds = st.integers(0, 10_000)


@given(seeds)
def test_syzygy_dims_and_radical_square_zero(seed):
    Q = gen_random(seed, 4, 2)
    for v in Q.vertices:
        M = build_simple(Q, v)
        want = unit(v)
        for _ in range(4):
            M = syzygy_rep(M)
            want = syzygy_step(Q, want)
            assert M.dim_vector == want
            assert M.check_radical_square_zero()
            if M.total_dim > 60:
                break


@given(seeds)
def test_hom_basis_elements_are_morphisms(seed):
    Q = gen_random(seed, 3, 2)
    v = Q.vertices[0]
    M = syzygy_rep(build_simple(Q, v))
    P = projective_cover(build_simple(Q, v)).P
    for f in hom_space(P, M).basis:
        assert P.is_morphism(M, f)
    rows, _ = hom_basis(M, P)
    assert rows.shape[0] == hom_space(M, P).dim


@given(st.integers(0, 400))
def test_colimit_matches_closed_form(seed):
    Q, _, _ = gen_labelled(seed)
    if not Q.is_trivially_valued or len(Q) > 6:
        return
    a, b = Q.vertices[0], Q.vertices[-1]
    r = sg_hom_dim(Q, a, b, 1)
    if r.status not in (HomStatus.FINITE, HomStatus.ZERO):
        return
    col = colimit_hom_dim(Q, a, b, 1, 2 * len(Q) + 5, max_hom_dim=2000)
    if col.stable:
        assert col.value == r.value


def test_verify_quiver_on_mixed_core():
    Q = validate({"vertices": [1, 2, 3, "s"], "arrows": [(1, 2), (2, 1), (3, 3, 2, 2), ("s", 1)]})
    checks = verify_quiver(Q, 2, 8)
    assert not [c for c in checks if c.ok is False]
    assert any(c.check == "colimit" and c.ok for c in checks)


# -- row-reduction kernels -------------------------------------------------------------

matrices = st.tuples(st.integers(1, 9), st.integers(1, 9), st.sampled_from([2, 3, 5, 7]), seeds)


def _random(shape_p_seed):
    r, c, p, seed = shape_p_seed
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=(r, c)), p


@pytest.mark.skipif("compiled" not in gfp.available_backends(), reason="extension not built")
@given(matrices)
def test_backends_agree(case):
    a, p = _random(case)
    prev = gfp.use_backend("python")
    try:
        r_py, piv_py = gfp.rref(a, p)
        gfp.use_backend("compiled")
        r_c, piv_c = gfp.rref(a, p)
    finally:
        gfp.use_backend(prev)
    assert piv_py == piv_c
    assert np.array_equal(r_py, r_c)


@pytest.mark.parametrize("backend", gfp.available_backends())
@given(case=matrices)
def test_rank_nullity_and_solve(backend, case):
    a, p = _random(case)
    prev = gfp.use_backend(backend)
    try:
        null = gfp.nullspace(a, p)
        assert gfp.rank(a, p) + null.shape[0] == a.shape[1]
        assert not (a @ null.T % p).any()
        x = np.arange(a.shape[1]) % p
        sol = gfp.solve(a, a @ x % p, p)
        assert np.array_equal(a @ sol[:, 0] % p, a @ x % p)
    finally:
        gfp.use_backend(prev)


def test_solve_inconsistent():
    with pytest.raises(ValueError):
        gfp.solve(np.array([[1, 0], [1, 0]]), np.array([0, 1]), 2)


def test_unknown_backend():
    with pytest.raises(ValueError):
        gfp.use_backend("fortran")


def test_compiled_backend_is_default_when_built():
    if "compiled" in gfp.available_backends():
        assert gfp.BACKEND == "compiled"


def test_backend_attribute_follows_switch():
    import radzero.oracle as oracle

    prev = oracle.use_backend("python")
    try:
        assert oracle.BACKEND == "python"
    finally:
        oracle.use_backend(prev)
    assert oracle.BACKEND == prev


def test_matmul_matches_integer_product():
    rng = np.random.default_rng(3)
    for p in (2, 3, 7):
        a, b = rng.integers(0, p, (40, 70)), rng.integers(0, p, (70, 9))
        assert np.array_equal(gfp.matmul(a, b, p), a @ b % p)

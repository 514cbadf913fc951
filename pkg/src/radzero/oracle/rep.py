"""Explicit representations of ``kQ/J^2`` over GF(p).

Only trivially valued quivers are supported: an arrow with valuation
``(m, m)`` stands for ``m`` parallel arrows, each acting by its own matrix.
Morphisms are dicts ``vertex -> matrix`` (target dim x source dim).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..quiver import ValuedQuiver, VertexId
from . import gfp

ArrowKey = tuple[VertexId, VertexId, int]
Morphism = dict[VertexId, np.ndarray]


class OracleError(ValueError):
    pass


def arrow_keys(Q: ValuedQuiver) -> list[ArrowKey]:
    return [(s, t, k) for s, t, val in Q.arrow_list for k in range(val.a)]


def _require_field_case(Q: ValuedQuiver) -> None:
    if not Q.is_trivially_valued:
        raise OracleError("the oracle needs a trivially valued quiver (all weights 1)")


@dataclass
class RepModule:
    quiver: ValuedQuiver
    p: int
    dims: dict[VertexId, int]
    maps: dict[ArrowKey, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        for v in self.quiver.vertices:
            self.dims.setdefault(v, 0)
        for key in arrow_keys(self.quiver):
            s, t, _ = key
            shape = (self.dims[t], self.dims[s])
            if key not in self.maps:
                self.maps[key] = np.zeros(shape, dtype=np.int64)
            elif self.maps[key].shape != shape:
                raise OracleError(f"map {key} has shape {self.maps[key].shape}, expected {shape}")

    @property
    def dim_vector(self) -> dict[VertexId, int]:
        return {v: d for v, d in self.dims.items() if d}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def check_radical_square_zero(self) -> bool:
        for s, t, k in self.maps:
            for t2, u, k2 in self.maps:
                if t2 != t:
                    continue
                prod = gfp.matmul(self.maps[(t, u, k2)], self.maps[(s, t, k)], self.p)
                if prod.any():
                    return False
        return True

    def is_morphism(self, other: RepModule, f: Morphism) -> bool:
        for (s, t, k), m in self.maps.items():
            lhs = gfp.matmul(other.maps[(s, t, k)], f[s], self.p)
            rhs = gfp.matmul(f[t], m, self.p)
            if not np.array_equal(lhs, rhs):
                return False
        return True


def build_simple(Q: ValuedQuiver, v: VertexId, p: int = 2) -> RepModule:
    _require_field_case(Q)
    if v not in Q:
        raise OracleError(f"unknown vertex {v}")
    return RepModule(Q, p, {v: 1})


def zero_morphism(M: RepModule, N: RepModule) -> Morphism:
    return {v: np.zeros((N.dims[v], M.dims[v]), dtype=np.int64) for v in M.quiver.vertices}


# -- projective covers and syzygies -----------------------------------------------


@dataclass
class Cover:
    """Projective cover ``pi: P -> M`` with its generators and kernel."""

    module: RepModule
    P: RepModule
    pi: Morphism
    gens: list[tuple[VertexId, int, np.ndarray]]  # (vertex, index in P_t, top element in M_t)
    rad_pos: dict[tuple[int, ArrowKey], int]  # (generator, arrow) -> index in P_target
    kernel: Morphism  # columns: basis of ker pi_v inside P_v
    _right_inv: dict[VertexId, np.ndarray] = field(default_factory=dict, repr=False)
    _omega: RepModule | None = field(default=None, repr=False)

    def right_inverse(self, v: VertexId) -> np.ndarray:
        if v not in self._right_inv:
            p = self.module.p
            d = self.module.dims[v]
            self._right_inv[v] = gfp.solve(self.pi[v], np.eye(d, dtype=np.int64), p)
        return self._right_inv[v]

    @property
    def omega(self) -> RepModule:
        """The syzygy as a representation in the kernel bases."""
        if self._omega is None:
            M = self.module
            maps = {}
            for key, pa in self.P.maps.items():
                s, t, _ = key
                # pa places each generator's arrow image: a row gather
                rows, cols = np.nonzero(pa)
                src = np.zeros((pa.shape[0], self.kernel[s].shape[1]), dtype=np.int64)
                src[rows] = self.kernel[s][cols]
                maps[key] = _coords(self.kernel[t], src, M.p)
            self._omega = RepModule(
                M.quiver, M.p, {v: self.kernel[v].shape[1] for v in M.quiver.vertices}, maps
            )
        return self._omega


def _coords(basis: np.ndarray, vecs: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of the columns of ``vecs`` in the column basis ``basis``."""
    if basis.shape[1] == 0 or vecs.shape[1] == 0:
        return np.zeros((basis.shape[1], vecs.shape[1]), dtype=np.int64)
    return gfp.solve(basis, vecs, p)


def projective_cover(M: RepModule) -> Cover:
    Q, p = M.quiver, M.p
    keys = arrow_keys(Q)
    gens: list[tuple[VertexId, int, np.ndarray]] = []
    pdims = {v: 0 for v in Q.vertices}
    # top of M_t: a complement of the arrow images, taken from standard vectors
    for t in Q.vertices:
        d = M.dims[t]
        if d == 0:
            continue
        images = [M.maps[key] for key in keys if key[1] == t and M.maps[key].size]
        taken: set[int] = set()
        if images:
            _, piv = gfp.rref(np.hstack(images).T, p)
            taken = set(piv)
        for k in range(d):
            if k not in taken:
                x = np.zeros(d, dtype=np.int64)
                x[k] = 1
                gens.append((t, -1, x))
    placed = []
    rad_pos: dict[tuple[int, ArrowKey], int] = {}
    for g, (t, _, x) in enumerate(gens):
        placed.append((t, pdims[t], x))
        pdims[t] += 1
    for g, (t, _, _) in enumerate(placed):
        for key in keys:
            if key[0] == t:
                rad_pos[(g, key)] = pdims[key[1]]
                pdims[key[1]] += 1
    pmaps = {key: np.zeros((pdims[key[1]], pdims[key[0]]), dtype=np.int64) for key in keys}
    pi = {v: np.zeros((M.dims[v], pdims[v]), dtype=np.int64) for v in Q.vertices}
    for g, (t, idx, x) in enumerate(placed):
        pi[t][:, idx] = x
        for key in keys:
            if key[0] != t:
                continue
            j = rad_pos[(g, key)]
            pmaps[key][j, idx] = 1
            pi[key[1]][:, j] = M.maps[key][:, int(np.argmax(x))]
    P = RepModule(Q, p, pdims, pmaps)
    kernel = {}
    for v in Q.vertices:
        if pdims[v] == 0:
            kernel[v] = np.zeros((0, 0), dtype=np.int64)
        elif M.dims[v] == 0:
            kernel[v] = np.eye(pdims[v], dtype=np.int64)
        else:
            kernel[v] = gfp.nullspace(pi[v], p).T.copy()
    return Cover(M, P, pi, placed, rad_pos, kernel)


def syzygy_rep(M: RepModule) -> RepModule:
    return projective_cover(M).omega


def omega_morphism(cm: Cover, cn: Cover, f: Morphism) -> Morphism:
    """Syzygy of ``f: M -> N``: lift to the projective covers, restrict to kernels."""
    M, N = cm.module, cn.module
    p = M.p
    keys = arrow_keys(M.quiver)
    g = {v: np.zeros((cn.P.dims[v], cm.P.dims[v]), dtype=np.int64) for v in M.quiver.vertices}
    for gi, (t, idx, x) in enumerate(cm.gens):
        y = gfp.matmul(cn.right_inverse(t), gfp.matmul(f[t], x[:, None], p), p)[:, 0]
        g[t][:, idx] = y
        for key in keys:
            if key[0] == t:
                g[key[1]][:, cm.rad_pos[(gi, key)]] = gfp.matmul(cn.P.maps[key], y[:, None], p)[:, 0]
    out = {}
    for v in M.quiver.vertices:
        out[v] = _coords(cn.kernel[v], gfp.matmul(g[v], cm.kernel[v], p), p)
    return out


# -- Hom spaces ------------------------------------------------------------------


def _layout(M: RepModule, N: RepModule) -> dict[VertexId, tuple[int, int, int]]:
    """vertex -> (offset, rows, cols) for row-major vectorized morphisms."""
    out, off = {}, 0
    for v in M.quiver.vertices:
        out[v] = (off, N.dims[v], M.dims[v])
        off += N.dims[v] * M.dims[v]
    return out


def _size(layout) -> int:
    return sum(r * c for _, r, c in layout.values())


def vectorize(f: Morphism, layout) -> np.ndarray:
    vec = np.zeros(_size(layout), dtype=np.int64)
    for v, (off, r, c) in layout.items():
        vec[off : off + r * c] = f[v].reshape(-1)
    return vec


def unvectorize(vec: np.ndarray, layout) -> Morphism:
    return {v: vec[off : off + r * c].reshape(r, c).copy() for v, (off, r, c) in layout.items()}


def hom_basis(M: RepModule, N: RepModule) -> tuple[np.ndarray, dict]:
    """Rows of the returned matrix span ``Hom(M, N)`` in the layout returned alongside."""
    if M.quiver != N.quiver or M.p != N.p:
        raise OracleError("modules over different quivers or primes")
    layout = _layout(M, N)
    size = _size(layout)
    blocks = []
    for (s, t, k), ma in M.maps.items():
        na = N.maps[(s, t, k)]
        rows = N.dims[t] * M.dims[s]
        if rows == 0:
            continue
        eq = np.zeros((rows, size), dtype=np.int64)
        off_s, ns, ms = layout[s]
        off_t, nt, mt = layout[t]
        if ns * ms:
            eq[:, off_s : off_s + ns * ms] += np.kron(na, np.eye(ms, dtype=np.int64))
        if nt * mt:
            eq[:, off_t : off_t + nt * mt] -= np.kron(np.eye(nt, dtype=np.int64), ma.T)
        blocks.append(eq)
    if size == 0:
        return np.zeros((0, 0), dtype=np.int64), layout
    if not blocks:
        return np.eye(size, dtype=np.int64), layout
    return gfp.nullspace(np.vstack(blocks), M.p), layout


@dataclass
class HomSpace:
    dim: int
    basis: list[Morphism]


def hom_space(M: RepModule, N: RepModule) -> HomSpace:
    rows, layout = hom_basis(M, N)
    return HomSpace(rows.shape[0], [unvectorize(r, layout) for r in rows])


def projective_part(M: RepModule, N: RepModule, cn: Cover | None = None) -> np.ndarray:
    """Rows spanning the maps ``M -> N`` that factor through the projective cover of ``N``."""
    cn = cn or projective_cover(N)
    rows, lay_p = hom_basis(M, cn.P)
    layout = _layout(M, N)
    out = np.zeros((rows.shape[0], _size(layout)), dtype=np.int64)
    for i, r in enumerate(rows):
        h = unvectorize(r, lay_p)
        out[i] = vectorize({v: gfp.matmul(cn.pi[v], h[v], M.p) for v in h}, layout)
    return out


def stable_hom_space(M: RepModule, N: RepModule) -> int:
    """``dim Hom(M, N) - dim p(M, N)``."""
    rows, _ = hom_basis(M, N)
    proj = projective_part(M, N)
    return rows.shape[0] - (gfp.rank(proj, M.p) if proj.size else 0)


# -- Keller-Vossieck colimit ---------------------------------------------------------


@dataclass
class ColimitResult:
    value: int | None
    stable: bool
    ranks: dict[tuple[int, int], int]  # (m, K) -> rank of V_m -> V_K in the stable quotient
    level_dims: dict[int, int]  # m -> dim of the stable Hom space at level m
    reason: str = ""


def colimit_hom_dim(
    Q: ValuedQuiver,
    a: VertexId,
    b: VertexId,
    n: int,
    depth: int,
    p: int = 2,
    max_hom_dim: int = 3000,
    max_module_dim: int = 400,
) -> ColimitResult:
    """Dimension of ``colim_m stHom(Omega^m S_a, Omega^(m-n) S_b)`` by explicit linear algebra.

    Levels run over ``m = max(0, n) .. depth``.  The connecting maps apply
    the syzygy functor to explicit homomorphisms.  ``value`` is the rank of
    the image of a middle level in the last level; it is reported only when
    the ranks agree across neighbouring source and target levels.  Inputs
    whose syzygies outgrow ``max_module_dim`` are reported as unstable.
    """
    m0 = max(0, n)
    if depth - m0 < 2:
        raise OracleError(f"depth {depth} too small for shift {n}: need at least {m0 + 2}")
    covers_a = _syzygy_chain(build_simple(Q, a, p), depth, max_module_dim)
    covers_b = _syzygy_chain(build_simple(Q, b, p), depth - n, max_module_dim)
    if covers_a is None or covers_b is None:
        return ColimitResult(None, False, {}, {}, f"a syzygy exceeds dimension {max_module_dim}")
    levels = list(range(m0, depth + 1))
    hom: dict[int, np.ndarray] = {}
    lay: dict[int, dict] = {}
    proj: dict[int, np.ndarray] = {}
    for m in levels:
        X, Y = covers_a[m].module, covers_b[m - n].module
        if _size(_layout(X, Y)) > max_hom_dim:
            return ColimitResult(None, False, {}, {}, f"Hom ambient space at level {m} too large")
        hom[m], lay[m] = hom_basis(X, Y)
        pr = projective_part(X, Y, covers_b[m - n])
        proj[m] = _coords(hom[m].T, pr.T, p) if hom[m].shape[0] else np.zeros((0, pr.shape[0]), np.int64)
    trans: dict[int, np.ndarray] = {}
    for m in levels[:-1]:
        cx, cy = covers_a[m], covers_b[m - n]
        images = []
        for row in hom[m]:
            f = omega_morphism(cx, cy, unvectorize(row, lay[m]))
            images.append(vectorize(f, lay[m + 1]))
        if images:
            trans[m] = _coords(hom[m + 1].T, np.array(images, dtype=np.int64).T, p)
        else:
            trans[m] = np.zeros((hom[m + 1].shape[0], 0), dtype=np.int64)
    stable_dim = {}
    ranks: dict[tuple[int, int], int] = {}
    for m in levels:
        base = gfp.rank(proj[m], p) if proj[m].size else 0
        stable_dim[m] = hom[m].shape[0] - base
        acc = np.eye(hom[m].shape[0], dtype=np.int64)
        for K in range(m, depth + 1):
            if K > m:
                acc = gfp.matmul(trans[K - 1], acc, p)
            pk = proj[K]
            base_k = gfp.rank(pk, p) if pk.size else 0
            stacked = np.hstack([acc, pk]) if pk.size else acc
            ranks[(m, K)] = (gfp.rank(stacked, p) if stacked.size else 0) - base_k
    g = (depth - m0) // 2
    mid = m0 + g
    value = ranks[(mid, depth)]
    probe = [
        ranks[(m, K)]
        for m in range(max(m0, mid - 2), mid + 1)
        for K in range(mid + (g + 1) // 2, depth + 1)
    ]
    stable = all(r == value for r in probe)
    return ColimitResult(
        value if stable else None,
        stable,
        ranks,
        stable_dim,
        "" if stable else "ranks have not stabilized; increase depth",
    )


def _syzygy_chain(M: RepModule, length: int, max_dim: int) -> list[Cover] | None:
    covers = [projective_cover(M)]
    for _ in range(length):
        if covers[-1].P.total_dim > max_dim:
            return None
        covers.append(projective_cover(covers[-1].omega))
    return covers

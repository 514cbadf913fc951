"""Syzygy iteration on dimension vectors and Hom dimensions in D_sg(A).

A semisimple module ``M = (+) S_j^{m_j}`` is a dimension vector ``{j: m_j}``
(zero entries omitted).  Its syzygy is ``r (x) M``, whose ``S_j``-multiplicity
is ``sum_l a_lj * m_l``.  All arithmetic is on Python integers.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Mapping

import networkx as nx

from .cyclicize import cyclicize
from .quiver import ValuedQuiver, VertexId, a_matrix, classify, is_permutation_matrix

DimVector = dict[VertexId, int]

#: pair graphs larger than this fall back to the window certificate
MAX_PAIR_NODES = 250_000


def unit(v: VertexId, mult: int = 1) -> DimVector:
    return {v: mult} if mult else {}


def syzygy_step(Q: ValuedQuiver, v: Mapping[VertexId, int]) -> DimVector:
    out: DimVector = {}
    for src, m in v.items():
        if not m:
            continue
        for dst, val in Q.out_arrows[src]:
            out[dst] = out.get(dst, 0) + val.a * m
    return out


def omega_iterate(Q: ValuedQuiver, v: Mapping[VertexId, int], m: int) -> DimVector:
    if m < 0:
        raise ValueError("iteration count must be nonnegative")
    cur = {k: x for k, x in v.items() if x}
    for _ in range(m):
        if not cur:
            break
        cur = syzygy_step(Q, cur)
    return cur


def stable_hom_dim(Q: ValuedQuiver, v: Mapping[VertexId, int], w: Mapping[VertexId, int]) -> int:
    """Base-field dimension of the stable Hom space between two semisimple modules.

    Components at sinks vanish: the identity of a simple projective factors
    through a projective.
    """
    total = 0
    for j, m in v.items():
        if m and Q.out_arrows[j]:
            total += m * w.get(j, 0) * Q.weights[j]
    return total


def sg_is_zero(Q: ValuedQuiver, a: VertexId) -> bool:
    """True iff ``q(S_a) = 0``, i.e. no path from ``a`` meets an oriented cycle."""
    if a not in Q:
        raise KeyError(f"unknown vertex {a}")
    return a not in classify(Q).reaches_cycle


class HomStatus(str, Enum):
    FINITE = "finite"
    ZERO = "zero"
    UNBOUNDED = "unbounded"
    HORIZON = "horizon"


@dataclass(frozen=True)
class HomDimResult:
    status: HomStatus
    value: int | None
    level_dims: tuple[int, ...]
    certified: bool
    stabilized_at: int | None = None
    reason: str = ""

    @property
    def is_finite(self) -> bool:
        return self.status in (HomStatus.FINITE, HomStatus.ZERO)


def default_horizon(Q: ValuedQuiver, n: int) -> int:
    return 4 * len(Q) + abs(n) + 8


def core_vectors(Q: ValuedQuiver, a: VertexId, b: VertexId, n: int, extra_depth: int = 0):
    """Dimension vectors of ``Omega^m S_a`` and ``Omega^(m-n) S_b`` restricted to the core.

    ``m = |V| + max(0, n) + extra_depth``.  Both depths are at least ``|V|``,
    so every surviving summand sits on a cyclic-like vertex.
    """
    core = cyclicize(Q).core
    mstar = len(Q) + max(0, n) + extra_depth
    v = omega_iterate(Q, unit(a), mstar)
    w = omega_iterate(Q, unit(b), mstar - n)
    keep = set(core.vertices)
    return (
        core,
        {j: x for j, x in v.items() if j in keep},
        {j: x for j, x in w.items() if j in keep},
    )


@dataclass(frozen=True)
class PairingGrowth:
    unbounded: bool
    size: int  # number of relevant pair nodes; bounds the pre-period
    witness: str = ""


def pairing_growth(
    core: ValuedQuiver, v: DimVector, w: DimVector, max_nodes: int = MAX_PAIR_NODES
) -> PairingGrowth | None:
    """Decide whether ``d_i = sum_j f_j (Omega^i v)_j (Omega^i w)_j`` is bounded.

    ``d_i`` counts weighted walks of length ``i`` in the pair graph (nodes are
    vertex pairs, steps move both coordinates along arrows) from
    ``supp v x supp w`` to the diagonal.  On the relevant subgraph the count
    is unbounded iff some cyclic component is not a weight-one simple cycle,
    or two distinct cyclic components lie on a common path.  Returns ``None``
    if the pair graph exceeds ``max_nodes``.
    """
    succ = {x: [(y, val.a) for y, val in core.out_arrows[x]] for x in core.vertices}
    start = [(j, k) for j in v for k in w]
    seen = set(start)
    queue = deque(start)
    edges: dict[tuple, list[tuple[tuple, int]]] = {}
    while queue:
        node = queue.popleft()
        j, k = node
        out = [((y1, y2), w1 * w2) for y1, w1 in succ[j] for y2, w2 in succ[k]]
        edges[node] = out
        for nxt, _ in out:
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_nodes:
                    return None
                queue.append(nxt)
    preds: dict[tuple, list[tuple]] = {node: [] for node in edges}
    for node, out in edges.items():
        for nxt, _ in out:
            preds[nxt].append(node)
    relevant = {node for node in edges if node[0] == node[1]}
    queue = deque(relevant)
    while queue:
        node = queue.popleft()
        for prev in preds[node]:
            if prev not in relevant:
                relevant.add(prev)
                queue.append(prev)
    if not relevant:
        return PairingGrowth(False, 0)
    h = nx.DiGraph()
    h.add_nodes_from(relevant)
    for node in relevant:
        for nxt, wt in edges[node]:
            if nxt in relevant:
                h.add_edge(node, nxt, weight=wt)
    cond = nx.condensation(h)
    members = cond.graph["mapping"]  # node -> component id
    comp_nodes: dict[int, list] = {}
    for node, cid in members.items():
        comp_nodes.setdefault(cid, []).append(node)
    cyclic = {}
    for cid, nodes in comp_nodes.items():
        inside = set(nodes)
        if len(nodes) == 1 and not h.has_edge(nodes[0], nodes[0]):
            continue
        expanding = False
        for node in nodes:
            wsum = sum(d["weight"] for _, nxt, d in h.out_edges(node, data=True) if nxt in inside)
            if wsum != 1:
                expanding = True
                break
        if expanding:
            return PairingGrowth(True, len(relevant), f"expanding component at pair {nodes[0]}")
        cyclic[cid] = nodes
    # longest chain of cyclic components in the condensation DAG
    chain: dict[int, int] = {}
    for cid in reversed(list(nx.topological_sort(cond))):
        best = max((chain[nxt] for nxt in cond.successors(cid)), default=0)
        chain[cid] = best + (1 if cid in cyclic else 0)
        if chain[cid] >= 2:
            return PairingGrowth(
                True, len(relevant), f"two cyclic components in sequence from pair {comp_nodes[cid][0]}"
            )
    return PairingGrowth(False, len(relevant))


def _window_certificate(core: ValuedQuiver, v: DimVector, w: DimVector, count: int) -> bool:
    """Two window hits on a vertex of an expanding cyclic component."""
    mat = a_matrix(core)
    expanding = set()
    for comp in classify(core).scc:
        idx = [core.index[u] for u in comp]
        sub = [[mat[i][j] for j in idx] for i in idx]
        is_cyclic = len(comp) > 1 or sub[0][0] > 0
        if is_cyclic and not is_permutation_matrix(sub):
            expanding.update(comp)
    hits: dict[VertexId, int] = {}
    for _ in range(count):
        for u in expanding:
            if v.get(u) and w.get(u):
                hits[u] = hits.get(u, 0) + 1
                if hits[u] >= 2:
                    return True
        v = syzygy_step(core, v)
        w = syzygy_step(core, w)
    return False


class _Orbit:
    """``Omega^i S_a`` for ``i = 0, 1, ...``: full vectors and their core parts, grown on demand."""

    def __init__(self, Q: ValuedQuiver, a: VertexId):
        self.Q = Q
        self.keep = frozenset(cyclicize(Q).core.vertices)
        self.full = [unit(a)]
        self.core = [{a: 1} if a in self.keep else {}]
        self.lock = threading.Lock()

    def upto(self, i: int) -> list[DimVector]:
        """Core parts for indices ``0..i`` (a shared list; do not mutate)."""
        with self.lock:
            while len(self.core) <= i:
                nxt = syzygy_step(self.Q, self.full[-1])
                self.full.append(nxt)
                self.core.append({j: x for j, x in nxt.items() if j in self.keep})
            return self.core

    def __getitem__(self, i: int) -> DimVector:
        return self.upto(i)[i]


@lru_cache(maxsize=4096)
def _orbit(Q: ValuedQuiver, a: VertexId) -> _Orbit:
    return _Orbit(Q, a)


@lru_cache(maxsize=256)
def _core_hom_weights(Q: ValuedQuiver) -> dict[VertexId, int]:
    """``f_j`` on core vertices that are not sinks of the core (for the core, that is all of them)."""
    core = cyclicize(Q).core
    return {j: core.weights[j] for j in core.vertices if core.out_arrows[j]}


def _pairing(weights: Mapping[VertexId, int], v: Mapping[VertexId, int], w: Mapping[VertexId, int]) -> int:
    if len(w) < len(v):
        v, w = w, v
    return sum(m * w.get(j, 0) * weights.get(j, 0) for j, m in v.items())


def sg_hom_dim(
    Q: ValuedQuiver,
    a: VertexId,
    b: VertexId,
    n: int,
    horizon: int | None = None,
    *,
    max_pair_nodes: int = MAX_PAIR_NODES,
) -> HomDimResult:
    """Dimension of ``Hom(q(S_a), q(S_b)[n])`` in the singularity category.

    ``level_dims[i]`` is the stable Hom dimension between ``Omega^(m0+i) S_a``
    and ``Omega^(m0+i-n) S_b`` (``m0 = max(0, n)``), counted on the
    cyclicization, where the connecting maps are injective; the sequence is
    nondecreasing and holds ``horizon + 1`` terms.  From level ``|V|`` on the
    core part evolves on its own, so the colimit is decided on the core.
    """
    if horizon is None:
        horizon = default_horizon(Q, n)
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    for x in (a, b):
        if x not in Q:
            raise KeyError(f"unknown vertex {x}")
    core = cyclicize(Q).core
    offset = len(Q)
    fw = _core_hom_weights(Q)
    m0 = max(0, n)
    oa, ob = _orbit(Q, a), _orbit(Q, b)
    dims: list[int] = []

    def extend(upto: int) -> None:
        va, wb = oa.upto(m0 + upto), ob.upto(m0 - n + upto)
        dims.extend(_pairing(fw, va[m0 + i], wb[m0 - n + i]) for i in range(len(dims), upto + 1))

    extend(max(horizon, offset))

    def result(status, value, stab, reason, certified=True):
        return HomDimResult(status, value, tuple(dims[: horizon + 1]), certified, stab, reason)

    if sg_is_zero(Q, a) or sg_is_zero(Q, b):
        return result(HomStatus.ZERO, 0, 0, "q(S) = 0")
    v, w = oa[m0 + offset], ob[m0 - n + offset]
    if is_permutation_matrix(a_matrix(core)):
        value = dims[offset]
        first = next(i for i, d in enumerate(dims) if d == value)
        return result(HomStatus.FINITE, value, first, "core is a union of trivial cycles")
    growth = pairing_growth(core, v, w, max_pair_nodes)
    if growth is None:
        if _window_certificate(core, v, w, horizon + 1):
            return result(HomStatus.UNBOUNDED, None, None, "expanding component hit twice")
        return result(HomStatus.HORIZON, None, None, "pair graph too large", certified=False)
    if growth.unbounded:
        return result(HomStatus.UNBOUNDED, None, None, growth.witness)
    # bounded, nondecreasing, periodic from core index growth.size on: constant there
    extend(offset + growth.size)
    value = dims[offset + growth.size]
    first = next(i for i, d in enumerate(dims) if d == value)
    return result(HomStatus.FINITE, value, first, "bounded pairing")


def k_dim(Q: ValuedQuiver, n: int, horizon: int | None = None) -> HomDimResult:
    """Total dimension of ``K^n(A) = Hom(q(A/r), q(A/r)[n])``."""
    if horizon is None:
        horizon = default_horizon(Q, n)
    parts = [sg_hom_dim(Q, a, b, n, horizon) for a in Q.vertices for b in Q.vertices]
    dims = tuple(sum(col) for col in zip(*(p.level_dims for p in parts))) if parts else (0,) * (horizon + 1)
    if any(p.status is HomStatus.UNBOUNDED for p in parts):
        return HomDimResult(HomStatus.UNBOUNDED, None, dims, True, None, "some summand unbounded")
    if any(not p.certified for p in parts):
        return HomDimResult(HomStatus.HORIZON, None, dims, False, None, "some summand uncertified")
    total = sum(p.value for p in parts)
    if all(p.status is HomStatus.ZERO for p in parts):
        return HomDimResult(HomStatus.ZERO, 0, dims, True, 0, "D_sg(A) = 0")
    stab = max((p.stabilized_at or 0) for p in parts)
    return HomDimResult(HomStatus.FINITE, total, dims, True, stab, "sum over vertex pairs")

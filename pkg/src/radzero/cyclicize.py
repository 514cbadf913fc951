"""Cyclicization: peel sources and sinks until none remain."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .quiver import ValuedQuiver, VertexId


@dataclass(frozen=True)
class CyclicizationResult:
    core: ValuedQuiver
    trace: tuple[tuple[VertexId, str], ...]  # (vertex, "source" | "sink")
    embedding: dict[VertexId, VertexId]

    @property
    def is_simple(self) -> bool:
        return len(self.core) == 0


def _peel(Q: ValuedQuiver, rng: random.Random | None):
    alive = set(Q.vertices)
    indeg = {v: 0 for v in Q.vertices}
    outdeg = {v: 0 for v in Q.vertices}
    for s, t, _ in Q.arrow_list:
        outdeg[s] += 1
        indeg[t] += 1
    trace: list[tuple[VertexId, str]] = []
    while True:
        candidates = [v for v in Q.vertices if v in alive and (indeg[v] == 0 or outdeg[v] == 0)]
        if not candidates:
            break
        v = rng.choice(candidates) if rng is not None else candidates[0]
        # an isolated vertex is recorded as a source
        trace.append((v, "source" if indeg[v] == 0 else "sink"))
        alive.discard(v)
        for t, _ in Q.out_arrows[v]:
            if t != v:
                indeg[t] -= 1
        for s, _ in Q.in_arrows[v]:
            if s != v:
                outdeg[s] -= 1
    return alive, tuple(trace)


@lru_cache(maxsize=256)
def _cyclicize_default(Q: ValuedQuiver) -> CyclicizationResult:
    alive, trace = _peel(Q, None)
    core = Q.subquiver(alive, name=f"{Q.name}_c")
    return CyclicizationResult(core, trace, {v: v for v in core.vertices})


def cyclicize(Q: ValuedQuiver, rng: random.Random | None = None) -> CyclicizationResult:
    """Repeatedly delete a current source or sink.

    The default order scans vertices in declaration order and rescans after
    every removal.  Passing ``rng`` picks uniformly among the current
    candidates instead; the resulting core does not depend on the order.
    """
    if rng is None:
        return _cyclicize_default(Q)
    alive, trace = _peel(Q, rng)
    core = Q.subquiver(alive, name=f"{Q.name}_c")
    return CyclicizationResult(core, trace, {v: v for v in core.vertices})


def is_cyclic_like(Q: ValuedQuiver) -> bool:
    if len(Q) == 0:
        return False
    has_in = {t for _, t, _ in Q.arrow_list}
    has_out = {s for s, _, _ in Q.arrow_list}
    return all(v in has_in and v in has_out for v in Q.vertices)

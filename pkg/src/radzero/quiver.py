"""Valued quivers presenting artin algebras with radical square zero.

A quiver is stored immutably: vertices in declaration order, one positive
weight per vertex (the length ``f_i`` of the division algebra at ``i``) and at
most one valued arrow per ordered pair of vertices.  Parallel arrows over a
field are encoded as a valuation ``(m, m)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Any, Iterable, Mapping

import networkx as nx

VertexId = str
Arrow = tuple[VertexId, VertexId]


class QuiverError(ValueError):
    """Raised when raw quiver data does not describe a valid valued quiver.

    ``diagnostics`` holds one :class:`Diagnostic` per problem found, so callers
    (the DSL parser in particular) can attach source positions.
    """

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(d.message for d in diagnostics))


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    subject: Any = None  # a vertex id, an arrow pair, or None


@dataclass(frozen=True, order=True)
class Valuation:
    a: int = 1
    b: int = 1

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("valuation components must be integers")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"valuation components must be >= 1, got ({self.a},{self.b})")

    @property
    def trivial(self) -> bool:
        return self.a == 1 and self.b == 1

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class ValuedQuiver:
    """Validated valued quiver.  Build instances through :func:`validate`."""

    vertices: tuple[VertexId, ...]
    weight_list: tuple[int, ...]
    arrow_list: tuple[tuple[VertexId, VertexId, Valuation], ...]
    name: str = field(default="Q", compare=False)

    def __hash__(self) -> int:
        # quivers key several caches; hashing the arrow tuple each time is wasteful
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((self.vertices, self.weight_list, self.arrow_list))
            self.__dict__["_hash"] = h
            return h

    # -- lookups -----------------------------------------------------------
    @cached_property
    def index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def weights(self) -> dict[VertexId, int]:
        return dict(zip(self.vertices, self.weight_list))

    @cached_property
    def arrows(self) -> dict[Arrow, Valuation]:
        return {(s, t): val for s, t, val in self.arrow_list}

    @cached_property
    def out_arrows(self) -> dict[VertexId, list[tuple[VertexId, Valuation]]]:
        out: dict[VertexId, list[tuple[VertexId, Valuation]]] = {v: [] for v in self.vertices}
        for s, t, val in self.arrow_list:
            out[s].append((t, val))
        return out

    @cached_property
    def in_arrows(self) -> dict[VertexId, list[tuple[VertexId, Valuation]]]:
        inc: dict[VertexId, list[tuple[VertexId, Valuation]]] = {v: [] for v in self.vertices}
        for s, t, val in self.arrow_list:
            inc[t].append((s, val))
        return inc

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    @property
    def is_trivially_valued(self) -> bool:
        """Field case: every weight is 1, so every valuation is ``(m, m)``."""
        return all(f == 1 for f in self.weight_list)

    @cached_property
    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((s, t) for s, t, _ in self.arrow_list)
        return g

    def subquiver(self, keep: Iterable[VertexId], name: str | None = None) -> ValuedQuiver:
        """Full subquiver on ``keep``; declaration order and data are inherited."""
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return ValuedQuiver(
            vertices=verts,
            weight_list=tuple(self.weights[v] for v in verts),
            arrow_list=tuple(
                (s, t, val) for s, t, val in self.arrow_list if s in keep and t in keep
            ),
            name=name or self.name,
        )

    def to_raw(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "weights": dict(self.weights),
            "arrows": [[s, t, val.a, val.b] for s, t, val in self.arrow_list],
        }


def _sorted_arrows(vertices, arrows: Mapping[Arrow, Valuation]):
    idx = {v: i for i, v in enumerate(vertices)}
    return tuple(
        (s, t, arrows[(s, t)]) for s, t in sorted(arrows, key=lambda e: (idx[e[0]], idx[e[1]]))
    )


def _parse_arrow(entry: Any) -> tuple[Any, Any, Any, Any]:
    if isinstance(entry, Mapping):
        return entry["source"], entry["target"], entry.get("a", 1), entry.get("b", 1)
    entry = tuple(entry)
    if len(entry) == 2:
        return entry[0], entry[1], 1, 1
    if len(entry) == 3:
        val = entry[2]
        if isinstance(val, Valuation):
            return entry[0], entry[1], val.a, val.b
        return entry[0], entry[1], val[0], val[1]
    if len(entry) == 4:
        return entry
    raise ValueError(f"cannot read arrow entry {entry!r}")


def validate(raw: Mapping[str, Any] | ValuedQuiver) -> ValuedQuiver:
    """Check raw quiver data and return a :class:`ValuedQuiver`.

    ``raw`` has keys ``vertices`` (ordered ids), ``arrows`` (entries
    ``(s, t)``, ``(s, t, a, b)``, ``(s, t, (a, b))`` or mappings with
    ``source``/``target``/``a``/``b``) and optionally ``weights`` and ``name``.
    Without weights the minimal integer symmetrizer is derived per weakly
    connected component.  Raises :class:`QuiverError` listing every problem.
    """
    if isinstance(raw, ValuedQuiver):
        raw = raw.to_raw()
    diags: list[Diagnostic] = []
    vertices: list[VertexId] = []
    for v in raw.get("vertices", []):
        v = str(v)
        if v in vertices:
            diags.append(Diagnostic("duplicate-vertex", f"vertex {v} declared twice", v))
        else:
            vertices.append(v)
    vset = set(vertices)

    arrows: dict[Arrow, Valuation] = {}
    for entry in raw.get("arrows", []):
        s, t, a, b = _parse_arrow(entry)
        s, t = str(s), str(t)
        for end in (s, t):
            if end not in vset:
                diags.append(
                    Diagnostic("dangling", f"arrow {s} -> {t}: undeclared vertex {end}", (s, t))
                )
        if (s, t) in arrows:
            diags.append(Diagnostic("duplicate-arrow", f"second arrow {s} -> {t}", (s, t)))
            continue
        if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
            diags.append(
                Diagnostic("nonpositive-valuation", f"arrow {s} -> {t}: valuation ({a},{b})", (s, t))
            )
            continue
        if s == t and a != b:
            diags.append(
                Diagnostic("loop-valuation", f"loop at {s} has valuation ({a},{b}) with a != b", (s, t))
            )
            continue
        arrows[(s, t)] = Valuation(a, b)
    # drop arrows with bad endpoints before symmetrizer analysis
    arrows = {e: val for e, val in arrows.items() if e[0] in vset and e[1] in vset}

    raw_weights = raw.get("weights") or {}
    weights: dict[VertexId, int] = {}
    if raw_weights:
        raw_weights = {str(k): w for k, w in raw_weights.items()}
        for v in raw_weights:
            if v not in vset:
                diags.append(Diagnostic("dangling", f"weight given for undeclared vertex {v}", v))
        for v in vertices:
            if v not in raw_weights:
                diags.append(Diagnostic("missing-weight", f"no weight for vertex {v}", v))
                continue
            f = raw_weights[v]
            if not isinstance(f, int) or f < 1:
                diags.append(Diagnostic("nonpositive-weight", f"weight of {v} is {f}", v))
                continue
            weights[v] = f
        if not diags:
            for (s, t), val in arrows.items():
                if val.a * weights[t] != val.b * weights[s]:
                    diags.append(
                        Diagnostic(
                            "symmetrizer",
                            f"arrow {s} -> {t} {val}: a*f_{t} = {val.a * weights[t]}"
                            f" != b*f_{s} = {val.b * weights[s]}",
                            (s, t),
                        )
                    )
    elif not diags:
        weights, bad = minimal_symmetrizer(vertices, arrows)
        if bad is not None:
            diags.append(
                Diagnostic(
                    "symmetrizer",
                    f"no positive symmetrizer: arrow {bad[0]} -> {bad[1]} closes a cycle whose"
                    " product of b/a ratios is not 1",
                    bad,
                )
            )
    if diags:
        raise QuiverError(diags)
    return ValuedQuiver(
        vertices=tuple(vertices),
        weight_list=tuple(weights[v] for v in vertices),
        arrow_list=_sorted_arrows(vertices, arrows),
        name=str(raw.get("name", "Q")),
    )


def minimal_symmetrizer(
    vertices: list[VertexId], arrows: Mapping[Arrow, Valuation]
) -> tuple[dict[VertexId, int], Arrow | None]:
    """Propagate ``f_j / f_i = b_ij / a_ij`` along a spanning forest.

    Returns the minimal positive integer weights per weakly connected
    component, or ``({}, arrow)`` naming an arrow that contradicts the
    propagated ratios.
    """
    nbrs: dict[VertexId, list[tuple[VertexId, Fraction, Arrow]]] = {v: [] for v in vertices}
    for (s, t), val in arrows.items():
        nbrs[s].append((t, Fraction(val.b, val.a), (s, t)))
        nbrs[t].append((s, Fraction(val.a, val.b), (s, t)))
    ratio: dict[VertexId, Fraction] = {}
    weights: dict[VertexId, int] = {}
    for root in vertices:
        if root in ratio:
            continue
        ratio[root] = Fraction(1)
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, r, _ in nbrs[u]:
                if w not in ratio:
                    ratio[w] = ratio[u] * r
                    comp.append(w)
                    queue.append(w)
        for u in comp:
            for w, r, arrow in nbrs[u]:
                if ratio[w] != ratio[u] * r:
                    return {}, arrow
        scale = lcm(*(ratio[u].denominator for u in comp))
        ints = [int(ratio[u] * scale) for u in comp]
        g = gcd(*ints)
        for u, x in zip(comp, ints):
            weights[u] = x // g
    return weights, None


def a_matrix(Q: ValuedQuiver) -> list[list[int]]:
    """``M[i][j] = a_ij`` for the arrow ``i -> j``, 0 otherwise."""
    n = len(Q)
    m = [[0] * n for _ in range(n)]
    for s, t, val in Q.arrow_list:
        m[Q.index[s]][Q.index[t]] = val.a
    return m


def b_matrix(Q: ValuedQuiver) -> list[list[int]]:
    n = len(Q)
    m = [[0] * n for _ in range(n)]
    for s, t, val in Q.arrow_list:
        m[Q.index[s]][Q.index[t]] = val.b
    return m


def is_permutation_matrix(m: list[list[int]]) -> bool:
    n = len(m)
    if any(sorted(row) != [0] * (n - 1) + [1] for row in m):
        return False
    return all(sum(m[i][j] for i in range(n)) == 1 for j in range(n))


@dataclass(frozen=True)
class VertexClassification:
    sources: frozenset[VertexId]
    sinks: frozenset[VertexId]
    cyclic: frozenset[VertexId]
    cyclic_like: frozenset[VertexId]
    reaches_cycle: frozenset[VertexId]
    reached_by_cycle: frozenset[VertexId]
    scc: tuple[tuple[VertexId, ...], ...]


def strongly_connected_components(Q: ValuedQuiver) -> tuple[tuple[VertexId, ...], ...]:
    """SCCs in declaration order (members sorted, components by first member)."""
    idx = Q.index
    comps = [tuple(sorted(c, key=idx.__getitem__)) for c in nx.strongly_connected_components(Q.digraph)]
    return tuple(sorted(comps, key=lambda c: idx[c[0]]))


@lru_cache(maxsize=256)
def classify(Q: ValuedQuiver) -> VertexClassification:
    g = Q.digraph
    cyclic: set[VertexId] = set()
    sccs = strongly_connected_components(Q)
    for comp in sccs:
        if len(comp) > 1 or g.has_edge(comp[0], comp[0]):
            cyclic.update(comp)
    reaches: set[VertexId] = set(cyclic)
    reached: set[VertexId] = set(cyclic)
    for c in cyclic:
        reaches.update(nx.ancestors(g, c))
        reached.update(nx.descendants(g, c))
    return VertexClassification(
        sources=frozenset(v for v in Q.vertices if g.in_degree(v) == 0),
        sinks=frozenset(v for v in Q.vertices if g.out_degree(v) == 0),
        cyclic=frozenset(cyclic),
        cyclic_like=frozenset(reaches & reached),
        reaches_cycle=frozenset(reaches),
        reached_by_cycle=frozenset(reached),
        scc=sccs,
    )

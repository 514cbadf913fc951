"""Quiver-level constructions: one-point (co)extensions, trivial-extension powers,
disjoint unions, and seeded generators for test families."""

from __future__ import annotations

import random
from math import lcm
from typing import Iterable

from .quiver import Diagnostic, QuiverError, Valuation, ValuedQuiver, VertexId, a_matrix, b_matrix, validate

ArrowSpec = tuple[VertexId, "Valuation | tuple[int, int]"]


def _val(x) -> Valuation:
    return x if isinstance(x, Valuation) else Valuation(*x)


def _adjoin(Q: ValuedQuiver, new: VertexId, arrows: list[tuple[VertexId, Valuation]], weight, *, outgoing: bool):
    new = str(new)
    if new in Q:
        raise QuiverError([Diagnostic("duplicate-vertex", f"vertex {new} already exists", new)])
    arrows = [(str(x), _val(val)) for x, val in arrows]
    for x, _ in arrows:
        if x not in Q:
            raise QuiverError([Diagnostic("dangling", f"unknown vertex {x}", x)])
    if weight is None:
        # a f_t = b f_s with the new vertex on one side
        cands = set()
        for x, val in arrows:
            num, den = (val.a * Q.weights[x], val.b) if outgoing else (val.b * Q.weights[x], val.a)
            if num % den:
                raise QuiverError(
                    [Diagnostic("symmetrizer", f"arrow at {x} {val} forces a non-integer weight", x)]
                )
            cands.add(num // den)
        if len(cands) > 1:
            raise QuiverError(
                [Diagnostic("symmetrizer", f"arrows at {new} force different weights {sorted(cands)}", new)]
            )
        weight = cands.pop() if cands else 1
    raw = Q.to_raw()
    raw["vertices"].append(new)
    raw["weights"][new] = weight
    for x, val in arrows:
        raw["arrows"].append([new, x, val.a, val.b] if outgoing else [x, new, val.a, val.b])
    return validate(raw)


def adjoin_source(
    Q: ValuedQuiver, new_vertex: VertexId, out_arrows: Iterable[ArrowSpec] = (), weight: int | None = None
) -> ValuedQuiver:
    """Add a vertex with arrows starting at it (a one-point extension).

    Without ``weight`` the weight is derived from the arrows and must be a
    positive integer shared by all of them.
    """
    return _adjoin(Q, new_vertex, list(out_arrows), weight, outgoing=True)


def adjoin_sink(
    Q: ValuedQuiver, new_vertex: VertexId, in_arrows: Iterable[ArrowSpec] = (), weight: int | None = None
) -> ValuedQuiver:
    """Add a vertex with arrows ending at it (a one-point coextension)."""
    return _adjoin(Q, new_vertex, list(in_arrows), weight, outgoing=False)


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _matpow(m: list[list[int]], e: int) -> list[list[int]]:
    n = len(m)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    base = m
    while e:
        if e & 1:
            out = _matmul(out, base)
        base = _matmul(base, base)
        e >>= 1
    return out


def trivial_ext_power(Q: ValuedQuiver, n: int) -> ValuedQuiver:
    """Quiver of ``A/r (+) r^{(x)n}``: valuations come from the n-th powers of the a- and b-matrices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    am = _matpow(a_matrix(Q), n)
    bm = _matpow(b_matrix(Q), n)
    vs = Q.vertices
    arrows = [
        [vs[i], vs[j], am[i][j], bm[i][j]]
        for i in range(len(vs))
        for j in range(len(vs))
        if am[i][j]
    ]
    return validate(
        {"name": f"{Q.name}^{n}", "vertices": list(vs), "weights": dict(Q.weights), "arrows": arrows}
    )


def disjoint_union(Q1: ValuedQuiver, Q2: ValuedQuiver) -> ValuedQuiver:
    """Componentwise union; vertices of ``Q2`` clashing with ``Q1`` get primes appended."""
    taken = set(Q1.vertices) | set(Q2.vertices)
    rename: dict[VertexId, VertexId] = {}
    for v in Q2.vertices:
        if v in Q1:
            new = v + "'"
            while new in taken:
                new += "'"
            taken.add(new)
            rename[v] = new
        else:
            rename[v] = v
    raw = Q1.to_raw()
    raw["name"] = f"{Q1.name}+{Q2.name}"
    raw["vertices"] += [rename[v] for v in Q2.vertices]
    raw["weights"].update({rename[v]: f for v, f in Q2.weights.items()})
    raw["arrows"] += [[rename[s], rename[t], val.a, val.b] for s, t, val in Q2.arrow_list]
    return validate(raw)


# -- generators -----------------------------------------------------------------


def gen_cycle(length: int) -> ValuedQuiver:
    if length < 1:
        raise ValueError("cycle length must be >= 1")
    vs = [str(i) for i in range(1, length + 1)]
    arrows = [(vs[i], vs[(i + 1) % length]) for i in range(length)]
    return validate({"name": f"C{length}", "vertices": vs, "arrows": arrows})


def gen_loops(n: int) -> ValuedQuiver:
    """One vertex with ``n`` loops: the algebra ``k[x_1..x_n]/(x_i x_j)``."""
    if n < 1:
        raise ValueError("number of loops must be >= 1")
    return validate({"name": f"L{n}", "vertices": ["1"], "arrows": [("1", "1", n, n)]})


def gen_random(
    seed: int, max_vertices: int, max_a: int, *, valued: bool = False, density: float | None = None
) -> ValuedQuiver:
    """Seed-deterministic symmetrizable quiver.

    Trivially valued (valuations ``(m, m)``, ``m <= max_a``) unless ``valued``;
    then weights in ``{1, 2}`` are drawn first and each arrow gets the minimal
    compatible valuation times a multiplier.
    """
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    vs = [str(i) for i in range(1, n + 1)]
    p = density if density is not None else rng.uniform(0.15, 0.45)
    weights = {v: (rng.choice([1, 2]) if valued else 1) for v in vs}
    arrows = []
    for s in vs:
        for t in vs:
            if rng.random() >= p:
                continue
            k = rng.randint(1, max_a)
            if s == t or not valued:
                arrows.append([s, t, k, k])
            else:
                fs, ft = weights[s], weights[t]
                g = lcm(fs, ft)
                arrows.append([s, t, k * g // ft, k * g // fs])
    return validate({"name": f"R{seed}", "vertices": vs, "weights": weights if valued else None, "arrows": arrows})


def _random_extension(rng: random.Random, Q: ValuedQuiver, count: int, max_mult: int, prefix: str) -> ValuedQuiver:
    for i in range(count):
        targets = rng.sample(list(Q.vertices), rng.randint(1, min(2, len(Q))))
        weight = lcm(*(Q.weights[x] for x in targets))
        k = [rng.randint(1, max_mult) for _ in targets]
        name, bump = f"{prefix}{i}", 0
        while name in Q:
            bump += 1
            name = f"{prefix}{i}_{bump}"
        if rng.random() < 0.5:
            arrows = [(x, (kk * weight // Q.weights[x], kk)) for x, kk in zip(targets, k)]
            Q = adjoin_source(Q, name, arrows, weight)
        else:
            arrows = [(x, (kk, kk * weight // Q.weights[x])) for x, kk in zip(targets, k)]
            Q = adjoin_sink(Q, name, arrows, weight)
    return Q


def gen_cycle_union(rng: random.Random, max_cycles: int = 3, max_len: int = 5) -> ValuedQuiver:
    Q = gen_cycle(rng.randint(1, max_len))
    for _ in range(rng.randint(0, max_cycles - 1)):
        Q = disjoint_union(Q, gen_cycle(rng.randint(1, max_len)))
    return Q


def random_extension(seed: int, Q: ValuedQuiver, max_new: int = 4, max_mult: int = 2) -> ValuedQuiver:
    """Adjoin up to ``max_new`` random sources/sinks (each with 1-2 arrows)."""
    rng = random.Random(seed)
    return _random_extension(rng, Q, rng.randint(0, max_new), max_mult, "x")


def gen_labelled(seed: int) -> tuple[ValuedQuiver, bool, str]:
    """A quiver with its Hom-finiteness known by construction.

    Even seeds: disjoint union of trivial cycles (lengths 1-5) plus up to four
    adjoined sources/sinks.  Odd seeds: the same after one mutation of the
    cycles (an extra arrow between cycle vertices, a multiplied cycle arrow,
    or a non-trivially valued cycle) so the core violates the criterion.
    """
    rng = random.Random(seed)
    Q = gen_cycle_union(rng)
    label, kind = True, "trivial cycles"
    if seed % 2:
        label = False
        raw = Q.to_raw()
        cycle_vs = list(Q.vertices)
        kind = rng.choice(["chord", "multiple", "valued"])
        long_arrows = [e for e in raw["arrows"] if e[0] != e[1]]
        if kind == "valued" and len(long_arrows) < 2:
            kind = "multiple"
        if kind == "chord":
            s, t = rng.choice(cycle_vs), rng.choice(cycle_vs)
            existing = {(e[0], e[1]): e for e in raw["arrows"]}
            if (s, t) in existing:
                existing[(s, t)][2] = existing[(s, t)][3] = 2
            else:
                raw["arrows"].append([s, t, 1, 1])
        elif kind == "multiple":
            e = rng.choice(raw["arrows"])
            e[2] = e[3] = rng.randint(2, 3)
        else:
            # weights along one cycle: f doubles across one arrow and halves across another
            e1 = rng.choice(long_arrows)
            comp = _cycle_of(Q, e1[0])
            if len(comp) < 2:
                e1[2] = e1[3] = 2
                kind = "multiple"
            else:
                others = [e for e in raw["arrows"] if e[0] in comp and e is not e1]
                e2 = rng.choice(others)
                e1[2], e1[3] = 1, 2
                e2[2], e2[3] = 2, 1
        raw["weights"] = None
        Q = validate(raw)
    Q = _random_extension(rng, Q, rng.randint(0, 4), 2, "x")
    return Q, label, kind


def _cycle_of(Q: ValuedQuiver, v: VertexId) -> list[VertexId]:
    out, x = [v], Q.out_arrows[v][0][0]
    while x != v:
        out.append(x)
        x = Q.out_arrows[x][0][0]
    return out

"""Compare the combinatorial formulas against explicit modules on one quiver."""

from __future__ import annotations

from dataclasses import dataclass

from ..quiver import ValuedQuiver
from ..syzygy import HomStatus, omega_iterate, sg_hom_dim, stable_hom_dim, unit
from .rep import build_simple, colimit_hom_dim, stable_hom_space, syzygy_rep


@dataclass(frozen=True)
class Check:
    check: str
    subject: str
    expected: int | None
    actual: int | dict | None
    ok: bool | None  # None: the oracle could not decide within its depth


def default_depth(Q: ValuedQuiver) -> int:
    return 2 * len(Q) + 4


def verify_quiver(
    Q: ValuedQuiver,
    p: int = 2,
    depth: int | None = None,
    shifts: tuple[int, ...] = (-1, 0, 1),
    max_hom_dim: int = 3000,
) -> list[Check]:
    depth = default_depth(Q) if depth is None else depth
    out: list[Check] = []
    for v in Q.vertices:
        M = build_simple(Q, v, p)
        for m in range(1, depth + 1):
            M = syzygy_rep(M)
            want = omega_iterate(Q, unit(v), m)
            got = M.dim_vector
            out.append(Check("syzygy", f"Omega^{m} S_{v}", None, None, got == want))
            if not M.check_radical_square_zero():
                out.append(Check("radical-square-zero", f"Omega^{m} S_{v}", None, None, False))
            if sum(got.values()) > max_hom_dim:
                break
    simples = {v: build_simple(Q, v, p) for v in Q.vertices}
    for a in Q.vertices:
        for b in Q.vertices:
            want = stable_hom_dim(Q, unit(a), unit(b))
            got = stable_hom_space(simples[a], simples[b])
            out.append(Check("stable-hom", f"S_{a}, S_{b}", want, got, want == got))
    for n in shifts:
        for a in Q.vertices:
            for b in Q.vertices:
                res = sg_hom_dim(Q, a, b, n)
                if res.status not in (HomStatus.FINITE, HomStatus.ZERO):
                    continue
                col = colimit_hom_dim(Q, a, b, n, max(0, n) + depth, p, max_hom_dim=max_hom_dim)
                ok = (col.value == res.value) if col.stable else None
                out.append(Check("colimit", f"({a},{b},{n})", res.value, col.value, ok))
    return out

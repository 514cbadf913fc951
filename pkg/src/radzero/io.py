"""JSON reports, quiver dictionaries and Graphviz export."""

from __future__ import annotations

import json
from enum import Enum
from typing import Any, Mapping

from .gamma import BratteliDiagram
from .quiver import ValuedQuiver, validate

SCHEMA_VERSION = "radzero/1"
# integers beyond this are written as decimal strings
SAFE_INT = 2**53 - 1


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= SAFE_INT else str(obj)
    if isinstance(obj, Enum):
        return jsonable(obj.value)
    if isinstance(obj, ValuedQuiver):
        return quiver_to_dict(obj)
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [jsonable(x) for x in sorted(obj, key=str)]
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__} as JSON")


def to_json(report: Mapping[str, Any], command: str | None = None) -> bytes:
    body: dict[str, Any] = {"schema": SCHEMA_VERSION}
    if command is not None:
        body["command"] = command
    body.update(jsonable(report))
    return json.dumps(body, ensure_ascii=False).encode("utf-8")


def quiver_to_dict(Q: ValuedQuiver) -> dict[str, Any]:
    return {
        "name": Q.name,
        "vertices": list(Q.vertices),
        "weights": dict(Q.weights),
        "arrows": [{"source": s, "target": t, "a": val.a, "b": val.b} for s, t, val in Q.arrow_list],
    }


def quiver_from_dict(data: Mapping[str, Any]) -> ValuedQuiver:
    """Inverse of :func:`quiver_to_dict`; also accepts ``{"quiver": {...}}`` reports."""
    if "quiver" in data and isinstance(data["quiver"], Mapping):
        data = data["quiver"]
    weights = data.get("weights")
    if weights:
        weights = {k: int(v) for k, v in weights.items()}
    return validate(
        {
            "name": data.get("name", "Q"),
            "vertices": data.get("vertices", []),
            "weights": weights,
            "arrows": data.get("arrows", []),
        }
    )


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj: ValuedQuiver | BratteliDiagram, name: str | None = None) -> str:
    if isinstance(obj, BratteliDiagram):
        return _bratteli_dot(obj, name or "bratteli")
    Q = obj
    lines = [f"digraph {_q(name or Q.name)} {{"]
    for v in Q.vertices:
        f = Q.weights[v]
        label = v if f == 1 else f"{v} (f={f})"
        lines.append(f"  {_q(v)} [label={_q(label)}];")
    for s, t, val in Q.arrow_list:
        lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(str(val))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _bratteli_dot(B: BratteliDiagram, name: str) -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=TB;"]

    def node(i: int, v: str) -> str:
        return _q(f"L{i}:{v}")

    for i, level in enumerate(B.levels):
        members = [v for v in B.vertices if level.get(v)]
        lines.append(f"  subgraph {_q(f'level{i}')} {{")
        lines.append("    rank=same;")
        for v in members:
            lines.append(f"    {node(i, v)} [label={_q(f'{v}: {level[v]}')}];")
        lines.append("  }")
    for i in range(len(B.levels) - 1):
        here, nxt = B.levels[i], B.levels[i + 1]
        for s, t, mult in B.edges:
            if here.get(s) and nxt.get(t):
                attr = f" [label={_q(str(mult))}]" if mult > 1 else ""
                lines.append(f"  {node(i, s)} -> {node(i + 1, t)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"

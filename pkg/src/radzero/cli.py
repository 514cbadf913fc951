"""Command-line interface: ``radzero <command> [file] [options]``.

Exit codes: 0 success, 1 the computation was refused (or a verification
failed), 2 the input could not be parsed or validated.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import constructions, dsl, io
from .cyclicize import cyclicize
from .gamma import (
    NotHomFiniteError,
    VanishingSingularityCategory,
    bratteli,
    gamma_blocks,
    hom_finite,
    verify_theorem_a,
)
from .quiver import QuiverError, ValuedQuiver, a_matrix, b_matrix, classify
from .syzygy import HomDimResult, k_dim, sg_hom_dim

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


class Refusal(Exception):
    pass


class InputError(Exception):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.line, self.col = line, col


# -- input ----------------------------------------------------------------------


def read_text(path: str | None) -> tuple[str, str]:
    if path in (None, "-"):
        return "<stdin>", sys.stdin.read()
    try:
        return path, Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(f"{path}: {err.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None


def parse_quiver(label: str, text: str) -> dsl.QuiverDocument:
    """``.qv`` text, or a JSON object as written by ``--json`` quiver reports."""
    if text.lstrip().startswith("{"):
        try:
            Q = io.quiver_from_dict(json.loads(text))
        except json.JSONDecodeError as err:
            raise InputError(f"{label}:{err.lineno}:{err.colno}: {err.msg}", err.lineno, err.colno) from None
        except QuiverError as err:
            raise InputError(f"{label}: {err}") from None
        return dsl.QuiverDocument(Q.name, Q)
    try:
        return dsl.parse(text)
    except dsl.ParseError as err:
        raise InputError(f"{label}:{err.line}:{err.col}: {err.message}", err.line, err.col) from None


def load(path: str | None) -> ValuedQuiver:
    return parse_quiver(*read_text(path)).body


# -- helpers --------------------------------------------------------------------


def _result_dict(res: HomDimResult) -> dict:
    return {
        "status": res.status.value,
        "value": res.value,
        "certified": res.certified,
        "level_dims": list(res.level_dims),
        "stabilized_at": res.stabilized_at,
        "reason": res.reason,
    }


def _result_text(res: HomDimResult) -> str:
    shown = ", ".join(str(d) for d in res.level_dims[:8]) + (", ..." if len(res.level_dims) > 8 else "")
    head = f"{res.status.value}" + (f" {res.value}" if res.value is not None else "")
    return f"{head}\nlevel dims: {shown}" + (f"\n{res.reason}" if res.reason else "")


def _quiver_out(Q: ValuedQuiver) -> tuple[dict, str]:
    text = dsl.serialize(Q)
    return {"quiver": io.quiver_to_dict(Q), "text": text}, text.rstrip("\n")


def _int_range(arg: str) -> list[int]:
    for sep in ("..", ":"):
        if sep in arg[1:]:
            i = arg.index(sep, 1)
            lo, hi = int(arg[:i]), int(arg[i + len(sep) :])
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {arg}")
            return list(range(lo, hi + 1))
    return [int(x) for x in arg.split(",")]


def _range_arg(arg: str) -> list[int]:
    try:
        return _int_range(arg)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {arg!r}; use LO:HI, LO..HI or a,b,c") from None


def _arrow_arg(arg: str) -> tuple[str, tuple[int, int]]:
    vertex, _, val = arg.partition(":")
    if not val:
        return vertex, (1, 1)
    try:
        a, b = (int(x) for x in val.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad arrow {arg!r}; use VERTEX or VERTEX:a,b") from None
    return vertex, (a, b)


# -- commands -------------------------------------------------------------------


def _validate_one(path: str) -> dict:
    try:
        Q = load(path)
    except InputError as err:
        return {"file": path, "ok": False, "error": str(err), "line": err.line, "col": err.col}
    return {"file": path, "ok": True, "name": Q.name, "vertices": len(Q), "arrows": len(Q.arrow_list)}


def cmd_validate(args) -> tuple[dict, str, int]:
    files = args.files or ["-"]
    if len(files) == 1:
        results = [_validate_one(files[0])]
    else:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(_validate_one, files))
    lines = [
        f"{r['file']}: ok ({r['vertices']} vertices, {r['arrows']} arrows)" if r["ok"] else r["error"]
        for r in results
    ]
    code = EXIT_OK if all(r["ok"] for r in results) else EXIT_INPUT
    return {"results": results}, "\n".join(lines), code


def cmd_info(args):
    Q = load(args.file)
    c = classify(Q)
    rep = {
        "quiver": io.quiver_to_dict(Q),
        "a_matrix": a_matrix(Q),
        "b_matrix": b_matrix(Q),
        "classification": {
            "sources": c.sources,
            "sinks": c.sinks,
            "cyclic": c.cyclic,
            "cyclic_like": c.cyclic_like,
            "reaches_cycle": c.reaches_cycle,
            "reached_by_cycle": c.reached_by_cycle,
            "scc": [list(s) for s in c.scc],
        },
    }

    def fmt(s):
        return "{" + ", ".join(sorted(s)) + "}"

    text = "\n".join(
        [
            f"quiver {Q.name}: {len(Q)} vertices, {len(Q.arrow_list)} arrows",
            "weights: " + " ".join(f"{v}={f}" for v, f in Q.weights.items()),
            f"sources: {fmt(c.sources)}",
            f"sinks: {fmt(c.sinks)}",
            f"cyclic: {fmt(c.cyclic)}",
            f"cyclic-like: {fmt(c.cyclic_like)}",
            "scc: " + " ".join(fmt(s) for s in c.scc),
        ]
    )
    return rep, text, EXIT_OK


def cmd_cyclicize(args):
    Q = load(args.file)
    res = cyclicize(Q)
    rep = {
        "core": io.quiver_to_dict(res.core),
        "trace": [{"vertex": v, "kind": k} for v, k in res.trace],
        "simple": res.is_simple,
    }
    peeled = ", ".join(f"{v} ({k})" for v, k in res.trace) or "nothing"
    text = f"removed: {peeled}\n" + (
        "cyclicization is simple" if res.is_simple else dsl.serialize(res.core).rstrip("\n")
    )
    return rep, text, EXIT_OK


def cmd_hom_finite(args):
    res = hom_finite(load(args.file))
    off = res.offending
    rep = {"hom_finite": res.value, "explanation": res.explanation, "offending": list(off) if isinstance(off, tuple) else off}
    return rep, f"{'true' if res else 'false'}: {res.explanation}", EXIT_OK


def cmd_bratteli(args):
    Q = load(args.file)
    B = bratteli(Q, args.depth)
    rep = {
        "depth": B.depth,
        "vertices": list(B.vertices),
        "weights": B.weights,
        "levels": list(B.levels),
        "sizes": {v: B.sizes(v) for v in B.vertices},
        "level_dims": list(B.level_dims),
        "injective": list(B.injective_flags),
        "edges": [list(e) for e in B.edges],
    }
    text = "\n".join(
        [f"{v}: " + " ".join(str(x) for x in B.sizes(v)) for v in B.vertices]
        + ["dim: " + " ".join(str(d) for d in B.level_dims)]
    )
    return rep, text, EXIT_OK


def cmd_hom_dim(args):
    Q = load(args.file)
    for v in (args.source, args.target):
        if v not in Q:
            raise Refusal(f"unknown vertex {v}")
    res = sg_hom_dim(Q, args.source, args.target, args.shift, args.horizon)
    rep = {"from": args.source, "to": args.target, "shift": args.shift, **_result_dict(res)}
    return rep, _result_text(res), EXIT_OK


def cmd_k_dim(args):
    res = k_dim(load(args.file), args.shift, args.horizon)
    return {"shift": args.shift, **_result_dict(res)}, _result_text(res), EXIT_OK


def _gamma(Q):
    try:
        return gamma_blocks(Q)
    except (NotHomFiniteError, VanishingSingularityCategory) as err:
        raise Refusal(str(err)) from None


def cmd_sigma(args):
    S = _gamma(load(args.file))
    rep = {
        "blocks": [{"vertex": u, "size": c, "weight": f} for u, c, f in S.blocks],
        "sigma_perm": S.sigma_perm,
        "order": S.order,
        "conjugacy_class": list(S.conjugacy_class),
        "dimension": S.dimension,
    }
    text = "\n".join(
        ["blocks: " + " ".join(f"{u}:{c}" for u, c, _ in S.blocks)]
        + ["sigma: " + " ".join(f"{u}->{v}" for u, v in S.sigma_perm.items())]
        + [f"order: {S.order}", f"dimension: {S.dimension}"]
    )
    return rep, text, EXIT_OK


def cmd_verify_theorem_a(args):
    Q = load(args.file)
    _gamma(Q)
    r = verify_theorem_a(Q, args.range)
    rep = {
        "range": list(r.n_range),
        "passed": r.passed,
        "bijective": r.bijective,
        "composition": r.composition,
        "matches_power": r.matches_power,
        "kdim": r.kdim,
        "pairing": r.pairing,
        "kdim_matches_pairing": r.kdim_matches_pairing,
        "kdim_constant": r.kdim_constant,
        "failures": r.failures,
    }
    text = "\n".join(
        [
            f"{'passed' if r.passed else 'FAILED'} on n in {r.n_range[0]}..{r.n_range[-1]}",
            "k_dim: " + " ".join(f"{n}:{d}" for n, d in r.kdim.items()),
            f"k_dim constant in n: {'yes' if r.kdim_constant else 'no'}",
        ]
        + r.failures
    )
    return rep, text, EXIT_OK if r.passed else EXIT_REFUSED


def _adjoin(args, fn):
    Q = load(args.file)
    try:
        R = fn(Q, args.vertex, args.arrow, args.weight)
    except QuiverError as err:
        raise Refusal(str(err)) from None
    return (*_quiver_out(R), EXIT_OK)


def cmd_adjoin_source(args):
    return _adjoin(args, constructions.adjoin_source)


def cmd_adjoin_sink(args):
    return _adjoin(args, constructions.adjoin_sink)


def cmd_trivial_ext(args):
    if args.n < 1:
        raise Refusal("--n must be >= 1")
    return (*_quiver_out(constructions.trivial_ext_power(load(args.file), args.n)), EXIT_OK)


def cmd_union(args):
    if args.first == "-" and args.second == "-":
        raise InputError("at most one input may come from stdin")
    Q = constructions.disjoint_union(load(args.first), load(args.second))
    return (*_quiver_out(Q), EXIT_OK)


def cmd_gen(args):
    try:
        if args.family == "cycle":
            Q = constructions.gen_cycle(args.size)
        elif args.family == "loops":
            Q = constructions.gen_loops(args.size)
        else:
            Q = constructions.gen_random(args.seed, args.size, args.max_a, valued=args.valued)
    except ValueError as err:
        raise Refusal(str(err)) from None
    return (*_quiver_out(Q), EXIT_OK)


def cmd_verify(args):
    from .oracle import OracleError
    from .oracle.checks import default_depth, verify_quiver

    Q = load(args.file)
    depth = args.depth if args.depth is not None else default_depth(Q)
    try:
        checks = verify_quiver(Q, args.prime, depth)
    except OracleError as err:
        raise Refusal(str(err)) from None
    failed = [c for c in checks if c.ok is False]
    open_ = [c for c in checks if c.ok is None]
    rep = {
        "prime": args.prime,
        "depth": depth,
        "passed": not failed,
        "inconclusive": len(open_),
        "checks": [
            {"check": c.check, "subject": c.subject, "expected": c.expected, "actual": c.actual, "ok": c.ok}
            for c in checks
        ],
    }
    summary = f"{len(checks) - len(failed) - len(open_)} checks agree, {len(failed)} disagree, {len(open_)} inconclusive"
    text = "\n".join([summary] + [f"MISMATCH {c.check} {c.subject}: {c.expected} vs {c.actual}" for c in failed])
    return rep, text, EXIT_OK if not failed else EXIT_REFUSED


def cmd_export(args):
    Q = load(args.file)
    if args.bratteli is not None:
        if args.bratteli < 1:
            raise Refusal("--bratteli depth must be >= 1")
        text = io.to_dot(bratteli(Q, args.bratteli), f"{Q.name}-bratteli")
    else:
        text = io.to_dot(Q)
    return {"format": "dot", "text": text}, text.rstrip("\n"), EXIT_OK


def cmd_schema(args):
    from .schemas import schema_for

    return None, json.dumps(schema_for(args.name), indent=2), EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="radzero", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help, file=True):
        sp = sub.add_parser(name, parents=[common], help=help, description=help)
        if file:
            sp.add_argument("file", nargs="?", help="quiver file (.qv or JSON); stdin if omitted")
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", cmd_validate, "check one or more quiver files", file=False)
    sp.add_argument("files", nargs="*", help="quiver files; stdin if omitted")
    add("info", cmd_info, "vertices, weights, matrices and vertex classification")
    add("cyclicize", cmd_cyclicize, "remove sources and sinks until none are left")
    add("hom-finite", cmd_hom_finite, "decide Hom-finiteness of the singularity category")
    sp = add("bratteli", cmd_bratteli, "block sizes of the levels of the associated regular algebra")
    sp.add_argument("--depth", type=int, required=True)
    sp = add("hom-dim", cmd_hom_dim, "dim Hom(q S_a, q S_b[n]) in the singularity category")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--shift", type=int, default=0)
    sp.add_argument("--horizon", type=int)
    sp = add("k-dim", cmd_k_dim, "dimension of the shift bimodule K^n")
    sp.add_argument("--shift", type=int, default=0)
    sp.add_argument("--horizon", type=int)
    add("sigma", cmd_sigma, "blocks and shift permutation (Hom-finite input only)")
    sp = add("verify-theorem-a", cmd_verify_theorem_a, "check invertibility of the shift bimodules by permutations")
    sp.add_argument("--range", type=_range_arg, default=_int_range("-6:6"), help="LO:HI (default -6:6)")
    for name, fn, what in (
        ("adjoin-source", cmd_adjoin_source, "add a source with arrows to existing vertices"),
        ("adjoin-sink", cmd_adjoin_sink, "add a sink with arrows from existing vertices"),
    ):
        sp = add(name, fn, what)
        sp.add_argument("--vertex", required=True, help="name of the new vertex")
        sp.add_argument("--arrow", type=_arrow_arg, action="append", default=[], metavar="V[:a,b]")
        sp.add_argument("--weight", type=int)
    sp = add("trivial-ext", cmd_trivial_ext, "quiver of the trivial extension A/r + r^(x)n")
    sp.add_argument("--n", type=int, required=True)
    sp = add("union", cmd_union, "disjoint union of two quivers", file=False)
    sp.add_argument("first")
    sp.add_argument("second")
    sp = add("gen", cmd_gen, "generate a quiver", file=False)
    sp.add_argument("family", choices=["cycle", "loops", "random"])
    sp.add_argument("size", type=int, help="cycle length, number of loops, or max vertices")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-a", type=int, default=2)
    sp.add_argument("--valued", action="store_true")
    sp = add("verify", cmd_verify, "cross-check formulas against explicit modules over GF(p)")
    sp.add_argument("--prime", type=int, default=2, choices=[2, 3, 5, 7])
    sp.add_argument("--depth", type=int)
    sp = add("export", cmd_export, "Graphviz export")
    sp.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    sp.add_argument("--bratteli", type=int, metavar="DEPTH", help="export the Bratteli diagram instead")
    sp = add("schema", cmd_schema, "print the JSON schema of a command's --json output", file=False)
    sp.add_argument("name")
    return p


def _emit(args, rep, text) -> None:
    if args.json and rep is not None:
        sys.stdout.buffer.write(io.to_json(rep, args.command) + b"\n")
        sys.stdout.flush()
    elif text:
        print(text)


def _error(args, kind: str, message: str, code: int, line=None, col=None) -> int:
    if getattr(args, "json", False):
        err = {"kind": kind, "message": message}
        if line is not None:
            err.update(line=line, col=col)
        sys.stdout.buffer.write(io.to_json({"error": err}, args.command) + b"\n")
        sys.stdout.flush()
    print(f"radzero {args.command}: {message}", file=sys.stderr)
    return code


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--range -6:6" would otherwise read "-6:6" as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            if nxt is not None:
                tok = f"--range={nxt}"
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        rep, text, code = args.func(args)
    except InputError as err:
        return _error(args, "input", str(err), EXIT_INPUT, err.line, err.col)
    except Refusal as err:
        return _error(args, "refused", str(err), EXIT_REFUSED)
    except ValueError as err:  # bad parameter for the computation, e.g. a horizon below 1
        return _error(args, "refused", str(err), EXIT_REFUSED)
    _emit(args, rep, text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""The ``.qv`` text format.

::

    # comments run to the end of the line
    quiver C3
    vertex 1 2 3
    arrow 1 -> 2
    arrow 2 -> 3 [1,1]
    arrow 3 -> 1
    weight 1 = 1

``quiver`` (optional, at most once) names the document, ``vertex`` lines
declare vertices in order, ``arrow u -> v [a,b]`` adds a valued arrow
(default ``[1,1]``) and ``weight v = f`` fixes a weight.  Weights are either
given for every vertex or for none, in which case the minimal symmetrizer
is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .quiver import Diagnostic, QuiverError, ValuedQuiver, validate

Span = tuple[int, int]  # 1-based line, column

_TOKEN = re.compile(
    r"(?P<ws>[ \t]+)|(?P<comment>#.*)|(?P<arrow>->)|(?P<punct>[\[\],=])|(?P<word>[A-Za-z0-9_.'+^]+)"
)
_WORD = re.compile(r"[A-Za-z0-9_.'+^]+")
KEYWORDS = ("quiver", "vertex", "arrow", "weight")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, kind: str = "syntax", diagnostics=()):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.kind = kind
        self.diagnostics = list(diagnostics)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


@dataclass
class QuiverDocument:
    name: str
    body: ValuedQuiver
    spans: dict[tuple, Span] = field(default_factory=dict, compare=False, repr=False)


def tokenize(text: str) -> list[list[Token]]:
    lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        pos, toks = 0, []
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if m is None:
                raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1, "lexical")
            kind = m.lastgroup
            if kind not in ("ws", "comment"):
                toks.append(Token(kind, m.group(), lineno, pos + 1))
            pos = m.end()
        if toks:
            lines.append(toks)
    return lines


class _Line:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.i = 1

    def _end(self) -> ParseError:
        last = self.toks[-1]
        return ParseError("unexpected end of line", last.line, last.col + len(last.text))

    def word(self, what: str) -> Token:
        if self.i >= len(self.toks):
            raise self._end()
        tok = self.toks[self.i]
        if tok.kind != "word":
            raise ParseError(f"expected {what}, found {tok.text!r}", tok.line, tok.col)
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.i >= len(self.toks):
            raise self._end()
        tok = self.toks[self.i]
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        self.i += 1
        return tok

    def peek(self) -> Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def integer(self, what: str) -> int:
        tok = self.word(what)
        if not tok.text.isdigit():
            raise ParseError(f"expected {what}, found {tok.text!r}", tok.line, tok.col)
        return int(tok.text)

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)


def parse(text: str) -> QuiverDocument:
    name = "Q"
    vertices: list[str] = []
    arrows: list[tuple[str, str, int, int]] = []
    weights: dict[str, int] = {}
    spans: dict[tuple, Span] = {}
    refs: list[Token] = []
    for toks in tokenize(text):
        head = toks[0]
        ln = _Line(toks)
        if head.text == "quiver":
            if ("quiver",) in spans:
                raise ParseError("second quiver header", head.line, head.col)
            name = ln.word("a quiver name").text
            spans[("quiver",)] = (head.line, head.col)
        elif head.text == "vertex":
            if ln.peek() is None:
                raise ln._end()
            while ln.peek() is not None:
                tok = ln.word("a vertex id")
                if ("vertex", tok.text) in spans:
                    raise ParseError(f"vertex {tok.text} declared twice", tok.line, tok.col, "validation")
                vertices.append(tok.text)
                spans[("vertex", tok.text)] = (tok.line, tok.col)
        elif head.text == "arrow":
            s = ln.word("a source vertex")
            ln.expect("->")
            t = ln.word("a target vertex")
            a = b = 1
            if ln.peek() is not None:
                ln.expect("[")
                a = ln.integer("a valuation entry")
                ln.expect(",")
                b = ln.integer("a valuation entry")
                ln.expect("]")
            ln.done()
            key = ("arrow", s.text, t.text)
            if key in spans:
                raise ParseError(f"duplicate arrow {s.text} -> {t.text}", s.line, s.col, "validation")
            spans[key] = (s.line, s.col)
            arrows.append((s.text, t.text, a, b))
            refs += [s, t]
        elif head.text == "weight":
            v = ln.word("a vertex id")
            ln.expect("=")
            f = ln.integer("a positive weight")
            ln.done()
            if ("weight", v.text) in spans:
                raise ParseError(f"weight of {v.text} given twice", v.line, v.col, "validation")
            spans[("weight", v.text)] = (v.line, v.col)
            weights[v.text] = f
            refs.append(v)
        else:
            raise ParseError(
                f"unknown keyword {head.text!r} (expected one of {', '.join(KEYWORDS)})", head.line, head.col
            )
    declared = set(vertices)
    for tok in refs:
        if tok.text not in declared:
            raise ParseError(f"unknown vertex {tok.text}", tok.line, tok.col, "unknown-vertex")
    raw = {"name": name, "vertices": vertices, "arrows": arrows, "weights": weights or None}
    try:
        body = validate(raw)
    except QuiverError as err:
        line, col = _locate(err.diagnostics[0], spans)
        raise ParseError(err.diagnostics[0].message, line, col, "validation", err.diagnostics) from None
    return QuiverDocument(name, body, spans)


def _locate(diag: Diagnostic, spans: dict[tuple, Span]) -> Span:
    subj = diag.subject
    candidates = []
    if isinstance(subj, tuple):
        candidates.append(("arrow", *subj))
    elif subj is not None:
        candidates += [("weight", subj), ("vertex", subj)]
    candidates.append(("quiver",))
    for key in candidates:
        if key in spans:
            return spans[key]
    return (1, 1)


def serialize(doc: QuiverDocument | ValuedQuiver) -> str:
    """Canonical text: vertices and arrows in declaration order, weights only when some f != 1."""
    if isinstance(doc, QuiverDocument):
        name, Q = doc.name, doc.body
    else:
        name, Q = doc.name, doc
    name = re.sub(r"[^A-Za-z0-9_.'+^]", "_", name) or "Q"
    for v in Q.vertices:
        if not _WORD.fullmatch(v):
            raise ValueError(f"vertex id {v!r} cannot be written in the text format")
    out = [f"quiver {name}"]
    if Q.vertices:
        out.append("vertex " + " ".join(Q.vertices))
    if any(f != 1 for f in Q.weight_list):
        out += [f"weight {v} = {f}" for v, f in zip(Q.vertices, Q.weight_list)]
    for s, t, val in Q.arrow_list:
        out.append(f"arrow {s} -> {t}" + ("" if val.trivial else f" [{val.a},{val.b}]"))
    return "\n".join(out) + "\n"

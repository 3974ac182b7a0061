"""Line-oriented text formats for matroids, multigraphs and GF(2) matrices.

    matroid            graph              gf2
    n 3                vertices 2         cols 3
    c 0 1              edge 0 1           row 1 0 1
    c 0 2              edge 0 1           row 0 1 1
    tag e 2

Blank lines and ``#`` comments are ignored; indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .construct import GF2Matrix, Multigraph, cycle_matroid, from_gf2
from .core import CircuitFamily, Matroid, Subset, canonical_order, elements, format_subset, to_mask
from .errors import AxiomError, InputError, ParseError

HEADERS = ("matroid", "graph", "gf2")


@dataclass
class InputDocument:
    kind: str
    n: int = 0
    circuits: CircuitFamily | None = None
    graph: Multigraph | None = None
    matrix: GF2Matrix | None = None
    tags: dict[str, int] = field(default_factory=dict)
    header_line: int = 1

    def to_matroid(self) -> Matroid:
        if self.kind == "graph":
            return cycle_matroid(self.graph)
        if self.kind == "gf2":
            return from_gf2(self.matrix)
        try:
            return Matroid(self.n, self.circuits)
        except AxiomError as exc:
            raise ParseError(self.header_line, f"circuits do not form a matroid: {exc}") from exc

    def family(self) -> CircuitFamily:
        return self.circuits if self.kind == "matroid" else self.to_matroid().family


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_input(text: str) -> InputDocument:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    header_line, head = lines[0]
    if len(head) != 1 or head[0] not in HEADERS:
        raise ParseError(header_line, f"unknown header {' '.join(head)!r}; expected one of {', '.join(HEADERS)}")
    doc = InputDocument(kind=head[0], header_line=header_line)
    body = lines[1:]
    if doc.kind == "matroid":
        _parse_matroid(doc, body)
    elif doc.kind == "graph":
        _parse_graph(doc, body)
    else:
        _parse_gf2(doc, body)
    return doc


def _tag(doc: InputDocument, tokens: list[str], lineno: int, size: int) -> None:
    if len(tokens) != 3:
        raise ParseError(lineno, "expected 'tag NAME INDEX'")
    (index,) = _ints(tokens[2:], lineno)
    if not 0 <= index < size:
        raise ParseError(lineno, f"tag index {index} outside 0..{size - 1}")
    doc.tags[tokens[1]] = index


def _parse_matroid(doc: InputDocument, body) -> None:
    n = None
    masks: list[Subset] = []
    pending_tags = []
    for lineno, tokens in body:
        word = tokens[0]
        if word == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate 'n' line")
            values = _ints(tokens[1:], lineno)
            if len(values) != 1 or values[0] < 0:
                raise ParseError(lineno, "expected 'n N' with N >= 0")
            n = values[0]
            doc.header_line = lineno
        elif word == "c":
            if n is None:
                raise ParseError(lineno, "'c' before 'n'")
            items = _ints(tokens[1:], lineno)
            if not items:
                raise ParseError(lineno, "empty circuit")
            bad = [i for i in items if not 0 <= i < n]
            if bad:
                raise ParseError(lineno, f"index {bad[0]} out of range 0..{n - 1}")
            mask = to_mask(items)
            for prior, prior_line in masks:
                if prior & mask == prior or prior & mask == mask:
                    raise ParseError(
                        lineno, f"not an antichain: {format_subset(mask)} against line {prior_line}"
                    )
            masks.append((mask, lineno))
        elif word == "tag":
            pending_tags.append((tokens, lineno))
        else:
            raise ParseError(lineno, f"unexpected {word!r} in a matroid document")
    if n is None:
        raise ParseError(doc.header_line, "missing 'n' line")
    doc.n = n
    doc.circuits = CircuitFamily(n, canonical_order(m for m, _ in masks))
    for tokens, lineno in pending_tags:
        _tag(doc, tokens, lineno, n)


def _parse_graph(doc: InputDocument, body) -> None:
    vertices = None
    edges = []
    pending_tags = []
    for lineno, tokens in body:
        word = tokens[0]
        if word == "vertices":
            values = _ints(tokens[1:], lineno)
            if vertices is not None or len(values) != 1 or values[0] < 0:
                raise ParseError(lineno, "expected a single 'vertices V' line")
            vertices = values[0]
        elif word == "edge":
            if vertices is None:
                raise ParseError(lineno, "'edge' before 'vertices'")
            ends = _ints(tokens[1:], lineno)
            if len(ends) != 2:
                raise ParseError(lineno, "expected 'edge U V'")
            if not all(0 <= v < vertices for v in ends):
                raise ParseError(lineno, f"vertex out of range 0..{vertices - 1}")
            edges.append(tuple(ends))
        elif word == "tag":
            pending_tags.append((tokens, lineno))
        else:
            raise ParseError(lineno, f"unexpected {word!r} in a graph document")
    if vertices is None:
        raise ParseError(doc.header_line, "missing 'vertices' line")
    doc.graph = Multigraph.from_edges(vertices, edges)
    doc.n = len(edges)
    for tokens, lineno in pending_tags:
        _tag(doc, tokens, lineno, doc.n)


def _parse_gf2(doc: InputDocument, body) -> None:
    cols = None
    rows = []
    pending_tags = []
    for lineno, tokens in body:
        word = tokens[0]
        if word == "cols":
            values = _ints(tokens[1:], lineno)
            if cols is not None or len(values) != 1 or values[0] < 0:
                raise ParseError(lineno, "expected a single 'cols C' line")
            cols = values[0]
        elif word == "row":
            if cols is None:
                raise ParseError(lineno, "'row' before 'cols'")
            entries = _ints(tokens[1:], lineno)
            if len(entries) != cols or any(x not in (0, 1) for x in entries):
                raise ParseError(lineno, f"malformed row: expected {cols} entries of 0 or 1")
            rows.append(entries)
        elif word == "tag":
            pending_tags.append((tokens, lineno))
        else:
            raise ParseError(lineno, f"unexpected {word!r} in a gf2 document")
    if cols is None:
        raise ParseError(doc.header_line, "missing 'cols' line")
    try:
        doc.matrix = GF2Matrix.from_rows(rows) if rows else GF2Matrix.from_rows([[0] * cols])
    except InputError as exc:
        raise ParseError(doc.header_line, str(exc)) from exc
    doc.n = cols
    for tokens, lineno in pending_tags:
        _tag(doc, tokens, lineno, cols)


# -------------------------------------------------
# Emitters
# -------------------------------------------------
def emit_matroid(m: Matroid, tags: dict[str, int] | None = None) -> str:
    out = ["matroid"]
    if m.labels != tuple(str(i) for i in range(m.n)):
        out.append("# labels: " + " ".join(m.labels))
    out.append(f"n {m.n}")
    out += ["c " + " ".join(str(e) for e in elements(c)) for c in m.circuits]
    out += [f"tag {name} {index}" for name, index in (tags or {}).items()]
    return "\n".join(out) + "\n"


def emit_graph(g: Multigraph, tags: dict[str, int] | None = None) -> str:
    out = ["graph", f"vertices {g.vertex_count}"]
    out += [f"edge {u} {v}" for u, v in g.edges]
    out += [f"tag {name} {index}" for name, index in (tags or {}).items()]
    return "\n".join(out) + "\n"


def emit_gf2(matrix: GF2Matrix) -> str:
    out = ["gf2", f"cols {matrix.cols}"]
    out += ["row " + " ".join(str(int(x)) for x in row) for row in matrix.entries]
    return "\n".join(out) + "\n"


# -------------------------------------------------
# Compact instance codes for reports
# -------------------------------------------------
def encode_instance(m: Matroid) -> str:
    """``5:0,1;3,4`` -- size, then circuits; replayable with decode_instance."""
    return f"{m.n}:" + ";".join(",".join(str(e) for e in elements(c)) for c in m.circuits)


def decode_instance(code: str) -> Matroid:
    head, _, body = code.partition(":")
    try:
        n = int(head)
        circuits = [to_mask(int(x) for x in part.split(",")) for part in body.split(";") if part]
    except ValueError:
        raise InputError(f"malformed instance code {code!r}") from None
    return Matroid(n, circuits)

"""Reading matroids from circuits documents, graph edge lists and matrices."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .constructions import Graph, PrimeFieldMatrix, RationalMatrix, graphic, linear_prime, linear_rational
from .errors import MatroidError, ParseError
from .matroid import Matroid, from_circuits, label_key

FORMATS = ("circuits", "graph", "matrix")
_EXTENSIONS = {".json": "circuits", ".circuits": "circuits",
               ".graph": "graph", ".edges": "graph",
               ".mat": "matrix", ".matrix": "matrix"}


@dataclass(frozen=True)
class MatroidFile:
    """A parsed input: which format it came from and the matroid it describes."""

    format: str
    matroid: Matroid
    source: str = "<input>"


def sniff_format(path: str | Path) -> str:
    ext = Path(path).suffix.lower()
    try:
        return _EXTENSIONS[ext]
    except KeyError:
        raise ParseError(f"cannot infer format from extension {ext!r}; pass --format",
                         source=str(path)) from None


def _label(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_circuits(text: str, source: str = "<input>") -> Matroid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, source) from None
    if not isinstance(doc, dict) or "ground" not in doc or "circuits" not in doc:
        raise ParseError("expected an object with 'ground' and 'circuits'", 1, 1, source)
    ground, circuits = doc["ground"], doc["circuits"]
    if not isinstance(ground, list) or not all(isinstance(c, list) for c in circuits):
        raise ParseError("'ground' must be a list and 'circuits' a list of lists", 1, 1, source)
    for x in ground + [y for c in circuits for y in c]:
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise ParseError(f"labels must be integers or strings, got {x!r}", 1, 1, source)
    try:
        return from_circuits(ground, circuits)
    except MatroidError as exc:
        raise ParseError(str(exc), 1, 1, source) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, raw, line


def _column(raw: str, tok: str) -> int:
    return raw.find(tok) + 1


def parse_graph(text: str, source: str = "<input>") -> Matroid:
    """Lines ``u v [label]`` with 1-based vertices; unlabelled edges get 1, 2, ..."""
    edges = []
    n = 0
    for lineno, raw, line in _content_lines(text):
        toks = line.split()
        if len(toks) not in (2, 3):
            raise ParseError(f"expected 'u v [label]', got {len(toks)} fields", lineno, 1, source)
        ends = []
        for tok in toks[:2]:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"vertex {tok!r} is not an integer", lineno,
                                 _column(raw, tok), source) from None
            if v < 1:
                raise ParseError("vertices are 1-based", lineno, _column(raw, tok), source)
            ends.append(v - 1)
        label = _label(toks[2]) if len(toks) == 3 else len(edges) + 1
        if any(label == e[2] for e in edges):
            raise ParseError(f"duplicate edge label {label!r}", lineno,
                             _column(raw, toks[2]) if len(toks) == 3 else 1, source)
        edges.append((ends[0], ends[1], label))
        n = max(n, ends[0] + 1, ends[1] + 1)
    try:
        return graphic(Graph(n, tuple(edges)))
    except MatroidError as exc:
        raise ParseError(str(exc), None, None, source) from None


def parse_matrix(text: str, source: str = "<input>") -> Matroid:
    """Whitespace-separated rows of integers or ``p/q``; optional ``mod p`` header."""
    p = None
    rows = []
    width = None
    for lineno, raw, line in _content_lines(text):
        toks = line.split()
        if toks[0] == "mod":
            if rows or p is not None or len(toks) != 2:
                raise ParseError("'mod p' must be a single header line", lineno, 1, source)
            try:
                p = int(toks[1])
            except ValueError:
                raise ParseError(f"bad modulus {toks[1]!r}", lineno,
                                 _column(raw, toks[1]), source) from None
            continue
        row = []
        for tok in toks:
            try:
                row.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad entry {tok!r}", lineno, _column(raw, tok), source) from None
        if width is not None and len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno, 1, source)
        width = len(row)
        rows.append(row)
    try:
        if p is None:
            return linear_rational(RationalMatrix(rows))
        return linear_prime(PrimeFieldMatrix([[_mod(x, p) for x in r] for r in rows], p))
    except ZeroDivisionError as exc:
        raise ParseError(str(exc), None, None, source) from None
    except MatroidError as exc:
        raise ParseError(str(exc), None, None, source) from None


def _mod(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


_PARSERS = {"circuits": parse_circuits, "graph": parse_graph, "matrix": parse_matrix}


def parse_text(text: str, fmt: str, source: str = "<input>") -> MatroidFile:
    if fmt not in _PARSERS:
        raise ParseError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}", source=source)
    return MatroidFile(fmt, _PARSERS[fmt](text, source), source)


def load(path: str | Path, fmt: str | None = None) -> MatroidFile:
    path = Path(path)
    fmt = fmt or sniff_format(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", source=str(path)) from None
    return parse_text(text, fmt, str(path))


def circuits_document(M: Matroid) -> dict:
    """The ``{"ground", "circuits"}`` form; circuits sorted for stable output."""
    circuits = sorted((sorted(c, key=label_key) for c in M.circuits),
                      key=lambda c: (len(c), [label_key(x) for x in c]))
    return {"ground": list(M.ground), "circuits": circuits}


def dump_circuits(M: Matroid) -> str:
    doc = circuits_document(M)
    rows = ",\n".join("    " + json.dumps(c) for c in doc["circuits"])
    return f'{{\n  "ground": {json.dumps(doc["ground"])},\n  "circuits": [\n{rows}\n  ]\n}}\n'

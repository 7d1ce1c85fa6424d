"""Reading and writing input documents.

Text format, one declaration per line (``#`` starts a comment)::

    n=5
    generators: x1*x2 x2*x3 x3*x4 x4*x5 x5*x1
    fields: q f2

or ``facets: {1,3} {3,5} ...`` instead of ``generators:``.  The same fields
are accepted as a JSON object: ``{"n": 5, "generators": [[1, 2], ...]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .complex import ComplexError, SimplicialComplex, from_facets, from_nonfaces, support_family
from .homology import FieldSpec

Terms = tuple[tuple[int, ...], ...]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class InputDocument:
    n: int
    facets: Terms | None = None
    generators: Terms | None = None
    fields: tuple[str, ...] = ()

    def complex(self) -> SimplicialComplex:
        if self.facets is not None:
            return from_facets(self.n, self.facets)
        return from_nonfaces(support_family(self.n, self.generators))

    def field_specs(self) -> list[FieldSpec]:
        return [FieldSpec.parse(f) for f in self.fields]


_KEY = re.compile(r"\s*(n)\s*=\s*|\s*(facets|generators|fields)\s*:\s*")
_FACET = re.compile(r"\{\s*(\d+(?:\s*,\s*\d+)*)\s*\}")
_MONOMIAL = re.compile(r"[xX](\d+)(?:\*[xX]\d+)*")


def parse_input(text: str) -> InputDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    decl: dict[str, tuple[object, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _KEY.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'n=', 'facets:', 'generators:' or 'fields:'", lineno, col)
        key = m.group(1) or m.group(2)
        if key in decl:
            raise ParseError(f"duplicate declaration of {key!r}", lineno, m.start(1 if m.group(1) else 2) + 1)
        body_start = m.end()
        body = line[body_start:]
        if key == "n":
            value = body.strip()
            if not value.isdigit():
                raise ParseError(f"n must be a nonnegative integer, got {value!r}", lineno, body_start + 1)
            decl[key] = (int(value), lineno)
        else:
            decl[key] = (_terms(key, body, lineno, body_start), lineno)
    if "n" not in decl:
        raise ParseError("missing 'n=' declaration", 1, 1)
    n, _ = decl["n"]
    has_f, has_g = "facets" in decl, "generators" in decl
    if has_f == has_g:
        where = decl["generators"][1] if has_f else 1
        raise ParseError("exactly one of 'facets:' or 'generators:' is required", where, 1)
    key = "facets" if has_f else "generators"
    terms_with_cols, lineno = decl[key]
    fields_with_cols, _ = decl.get("fields", ((), 0))
    _validate(n, key, terms_with_cols, lineno)
    terms = tuple(t for t, _ in terms_with_cols)
    fields = tuple(f for f, _ in fields_with_cols)
    doc = InputDocument(n, terms if has_f else None, None if has_f else terms, fields)
    _check_builds(doc, lineno)
    return doc


def _terms(key: str, body: str, lineno: int, offset: int):
    out = []
    if key == "facets":
        # facet terms may contain spaces, so scan the body brace by brace
        text = body.rstrip()
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _FACET.match(text, pos)
            if not m:
                raise ParseError("bad facet; expected {a,b,...}", lineno, offset + pos + 1)
            out.append((tuple(int(x) for x in m.group(1).split(",")), offset + pos + 1))
            pos = m.end()
        return out
    for tok in re.finditer(r"\S+", body):
        col = offset + tok.start() + 1
        word = tok.group()
        if key == "fields":
            try:
                FieldSpec.parse(word)
            except ValueError as e:
                raise ParseError(str(e), lineno, col) from None
            out.append((word.lower(), col))
        else:
            if not _MONOMIAL.fullmatch(word):
                raise ParseError(f"bad generator {word!r}; expected x<i>*x<j>*...", lineno, col)
            out.append((tuple(int(p[1:]) for p in word.split("*")), col))
    return out


def _validate(n: int, key: str, terms, lineno: int) -> None:
    seen = {}
    for term, col in terms:
        for v in term:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} out of range 1..{n}", lineno, col)
        if len(set(term)) != len(term):
            raise ParseError(f"repeated vertex in {term}", lineno, col)
        if key == "generators" and len(term) < 2:
            raise ParseError(f"singleton generator x{term[0]} would delete a vertex", lineno, col)
        canon = frozenset(term)
        if canon in seen:
            raise ParseError(f"duplicate term {term}", lineno, col)
        seen[canon] = col


def _check_builds(doc: InputDocument, lineno: int) -> None:
    try:
        doc.complex()
    except ComplexError as e:
        raise ParseError(str(e), lineno, 1) from None


def _parse_json(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    unknown = set(data) - {"n", "facets", "generators", "fields"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", 1, 1)
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("'n' must be a nonnegative integer", 1, 1)
    if ("facets" in data) == ("generators" in data):
        raise ParseError("exactly one of 'facets' or 'generators' is required", 1, 1)
    key = "facets" if "facets" in data else "generators"
    raw = data[key]
    if not isinstance(raw, list) or not all(
            isinstance(t, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in t) for t in raw):
        raise ParseError(f"'{key}' must be a list of integer lists", 1, 1)
    terms = tuple(tuple(t) for t in raw)
    fields = data.get("fields", [])
    if not isinstance(fields, list) or not all(isinstance(f, str) for f in fields):
        raise ParseError("'fields' must be a list of strings", 1, 1)
    for f in fields:
        try:
            FieldSpec.parse(f)
        except ValueError as e:
            raise ParseError(str(e), 1, 1) from None
    _validate(n, key, [(t, 1) for t in terms], 1)
    doc = InputDocument(n, terms if key == "facets" else None, terms if key == "generators" else None,
                        tuple(f.lower() for f in fields))
    _check_builds(doc, 1)
    return doc


def format_document(doc: InputDocument) -> str:
    lines = [f"n={doc.n}"]
    if doc.facets is not None:
        lines.append("facets: " + " ".join("{" + ",".join(map(str, t)) + "}" for t in doc.facets))
    else:
        lines.append("generators: " + " ".join("*".join(f"x{v}" for v in t) for t in doc.generators))
    if doc.fields:
        lines.append("fields: " + " ".join(doc.fields))
    return "\n".join(lines) + "\n"


def document_to_json(doc: InputDocument) -> str:
    data: dict[str, object] = {"n": doc.n}
    key = "facets" if doc.facets is not None else "generators"
    data[key] = [list(t) for t in (doc.facets if doc.facets is not None else doc.generators)]
    if doc.fields:
        data["fields"] = list(doc.fields)
    return json.dumps(data)

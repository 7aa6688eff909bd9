"""Line-oriented universe description files.

::

    universe U            # optional, at most once
    object a b c          # any number of object lines
    concept F = { a b }
    relation R = { (a,b) (b,c) }

Objects must be declared before a concept or relation uses them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .model import Concept, DirectedRelation, EquinumError, ObjectId, Universe

NAME = r"[A-Za-z_][A-Za-z0-9_]*"

_TOKEN = re.compile(rf"\s*(?:(?P<name>{NAME})|(?P<punct>[={{}}(),])|(?P<bad>\S))")


class DslError(EquinumError):
    """A located syntax or semantic error in a universe document."""

    def __init__(self, kind: str, message: str, line: int, column: int, token: str = ""):
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"{line}:{column}: {kind} error: {message}")

    def as_dict(self):
        return {
            "kind": self.kind,
            "message": self.message,
            "line": self.line,
            "column": self.column,
            "token": self.token,
        }


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass
class UniverseDocument:
    source: str
    universe: Universe
    locations: Dict[Tuple[str, str], Tuple[int, int]] = field(default_factory=dict)


def _tokenize(line: str, lineno: int) -> List[Token]:
    line = line.split("#", 1)[0]
    tokens = []
    pos = 0
    while line[pos:].strip():
        m = _TOKEN.match(line, pos)
        col = m.start(m.lastgroup) + 1
        if m.lastgroup == "bad":
            raise DslError("syntax", f"unexpected character {m.group('bad')!r}", lineno, col, m.group("bad"))
        tokens.append(Token(m.lastgroup, m.group(m.lastgroup), lineno, col))
        pos = m.end()
    return tokens


class _Line:
    """Cursor over the tokens of one declaration."""

    def __init__(self, tokens: List[Token], lineno: int, length: int):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = length + 1

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, expected: str):
        tok = self.peek()
        if tok is None:
            raise DslError("syntax", f"expected {expected}, found end of line", self.lineno, self.end_col)
        raise DslError("syntax", f"expected {expected}, found {tok.text!r}", tok.line, tok.column, tok.text)

    def take(self, text=None, kind=None) -> Token:
        tok = self.peek()
        if tok is None or (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            self.error(repr(text) if text else "a name")
        self.i += 1
        return tok

    def done(self):
        if self.peek() is not None:
            self.error("end of line")


class _Parser:
    def __init__(self):
        self.name: Optional[str] = None
        self.objects: Dict[str, ObjectId] = {}
        self.concepts: Dict[str, Concept] = {}
        self.relations: Dict[str, DirectedRelation] = {}
        self.locations: Dict[Tuple[str, str], Tuple[int, int]] = {}

    def resolve(self, tok: Token) -> ObjectId:
        try:
            return self.objects[tok.text]
        except KeyError:
            raise DslError("semantic", f"undeclared object {tok.text!r}", tok.line, tok.column, tok.text) from None

    def declare(self, category: str, tok: Token, table) -> None:
        if tok.text in table:
            raise DslError("semantic", f"duplicate {category} {tok.text!r}", tok.line, tok.column, tok.text)
        self.locations[(category, tok.text)] = (tok.line, tok.column)

    def statement(self, cur: _Line):
        head = cur.take(kind="name")
        if head.text == "universe":
            name = cur.take(kind="name")
            cur.done()
            if self.name is not None:
                raise DslError("semantic", "duplicate universe declaration", head.line, head.column, head.text)
            self.name = name.text
            self.locations[("universe", name.text)] = (name.line, name.column)
        elif head.text == "object":
            if cur.peek() is None:
                cur.error("an object name")
            while cur.peek() is not None:
                tok = cur.take(kind="name")
                self.declare("object", tok, self.objects)
                self.objects[tok.text] = ObjectId(tok.text, len(self.objects))
        elif head.text == "concept":
            name = cur.take(kind="name")
            cur.take("=")
            cur.take("{")
            members = set()
            while cur.peek() is not None and cur.peek().text != "}":
                tok = cur.take(kind="name")
                obj = self.resolve(tok)
                if obj in members:
                    raise DslError("semantic", f"duplicate member {tok.text!r}", tok.line, tok.column, tok.text)
                members.add(obj)
            cur.take("}")
            cur.done()
            self.declare("concept", name, self.concepts)
            self.concepts[name.text] = Concept(name.text, frozenset(members))
        elif head.text == "relation":
            name = cur.take(kind="name")
            cur.take("=")
            cur.take("{")
            pairs = set()
            while cur.peek() is not None and cur.peek().text != "}":
                start = cur.take("(")
                s = self.resolve(cur.take(kind="name"))
                cur.take(",")
                t = self.resolve(cur.take(kind="name"))
                cur.take(")")
                if (s, t) in pairs:
                    raise DslError("semantic", f"duplicate pair ({s.symbol},{t.symbol})", start.line, start.column, "(")
                pairs.add((s, t))
            cur.take("}")
            cur.done()
            self.declare("relation", name, self.relations)
            self.relations[name.text] = DirectedRelation(pairs)
        else:
            raise DslError("syntax", f"unknown declaration {head.text!r}", head.line, head.column, head.text)


def parse_universe(text: str) -> UniverseDocument:
    """Parse a universe description; raises :class:`DslError` with a location."""
    parser = _Parser()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, lineno)
        if tokens:
            parser.statement(_Line(tokens, lineno, len(line.split("#", 1)[0].rstrip())))
    universe = Universe(
        tuple(parser.objects.values()), parser.concepts, parser.relations, name=parser.name
    )
    return UniverseDocument(text, universe, parser.locations)


def serialize(universe: Universe) -> str:
    """Canonical text: members and pairs sorted by ordinal, declarations in order."""
    lines = []
    if universe.name is not None:
        lines.append(f"universe {universe.name}")
    if universe.objects:
        lines.append("object " + " ".join(o.symbol for o in universe.objects))
    for name, c in universe.concepts.items():
        body = " ".join(o.symbol for o in c.objects())
        lines.append(f"concept {name} = {{ {body} }}" if body else f"concept {name} = {{ }}")
    for name, r in universe.relations.items():
        body = " ".join(f"({s.symbol},{t.symbol})" for s, t in r.sorted_pairs())
        lines.append(f"relation {name} = {{ {body} }}" if body else f"relation {name} = {{ }}")
    return "\n".join(lines) + "\n"


def format_document(text: str) -> str:
    return serialize(parse_universe(text).universe)

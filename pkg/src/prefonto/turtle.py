"""Turtle subset reader and writer.

Supported syntax: ``@prefix`` and ``@base`` directives, IRIs in angle
brackets, prefixed names (with PN_LOCAL backslash escapes and digit-leading
local parts), the ``a`` keyword, predicate lists with ``;``, object lists with
``,``, plain and typed string literals, bare integers, ``true``/``false``,
``#`` comments, anonymous nodes ``[ ... ]`` and collections ``( ... )``.

Deliberately rejected: language tags, triple-quoted strings, non-integer
numeric literals, labelled blank nodes (``_:x``) and SPARQL-style directives.
Datatypes are closed: ``xsd:string``, ``xsd:boolean``, ``xsd:integer`` (plus
``xsd:int`` as an alias); anything else is a vocabulary error.

Layers:

* :func:`parse_graph` - text or bytes to a triple :class:`Graph`.
* :func:`recognize` - triples to a :class:`~prefonto.model.KnowledgeBase`
  plus diagnostics (strict mode upgrades unknown-vocabulary notes to errors).
* :func:`serialize` - knowledge base back to canonical Turtle text: sorted
  prefixes, sorted subject blocks, ``a`` first, fixed spacing, so equal bases
  yield identical bytes.
* :func:`isomorphic` - graph comparison modulo blank node identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple, Union

from .model import (
    Annotation,
    And,
    ClassAssertion,
    ClassExpression,
    CompareOp,
    DataAssertion,
    DataCompare,
    DataPropertyDomain,
    DataPropertyRange,
    Datatype,
    Diagnostic,
    DisjointClasses,
    EntityKind,
    EquivalentClasses,
    InverseProperties,
    Iri,
    KindConflict,
    KnowledgeBase,
    Literal,
    Named,
    Not,
    ObjectAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Or,
    Severity,
    Some,
    SubClassOf,
    ValueData,
    ValueObj,
)

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF + "type"
RDF_FIRST = RDF + "first"
RDF_REST = RDF + "rest"
RDF_NIL = RDF + "nil"

STANDARD_PREFIXES: Dict[str, str] = {
    "owl": OWL,
    "rdf": RDF,
    "rdfs": RDFS,
    "xsd": XSD,
}

_KIND_IRIS: Dict[str, EntityKind] = {
    OWL + "Class": EntityKind.CLASS,
    OWL + "ObjectProperty": EntityKind.OBJECT_PROPERTY,
    OWL + "DatatypeProperty": EntityKind.DATA_PROPERTY,
    OWL + "NamedIndividual": EntityKind.INDIVIDUAL,
}
_KIND_TO_IRI = {kind: iri for iri, kind in _KIND_IRIS.items()}

_DATATYPE_IRIS: Dict[str, Datatype] = {
    XSD + "string": Datatype.STRING,
    XSD + "boolean": Datatype.BOOLEAN,
    XSD + "integer": Datatype.INTEGER,
    XSD + "int": Datatype.INTEGER,
}
_DATATYPE_TO_IRI = {
    Datatype.STRING: XSD + "string",
    Datatype.BOOLEAN: XSD + "boolean",
    Datatype.INTEGER: XSD + "integer",
}

_RESERVED_NAMESPACES = (RDF, RDFS, OWL, XSD)

_FACET_TO_OP = {
    XSD + "minInclusive": CompareOp.GE,
    XSD + "minExclusive": CompareOp.GT,
    XSD + "maxInclusive": CompareOp.LE,
    XSD + "maxExclusive": CompareOp.LT,
}
_OP_TO_FACET = {op: facet for facet, op in _FACET_TO_OP.items()}

_MAX_DEPTH = 64


class ParseError(Exception):
    """Rejected input, with a 1-based source position.

    category is "lexical" (bad characters, malformed tokens), "syntactic"
    (bad token sequence) or "vocabulary" (datatype outside the closed set).
    """

    def __init__(self, line: int, column: int, message: str, category: str) -> None:
        assert category in ("lexical", "syntactic", "vocabulary")
        self.line = line
        self.column = column
        self.message = message
        self.category = category
        super().__init__(f"{line}:{column}: {category}: {message}")


# ---------------------------------------------------------------------------
# Terms and graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IriRef:
    iri: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BlankNode:
    id: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Lit:
    value: Union[bool, int, str]
    datatype: Datatype
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def to_literal(self) -> Literal:
        return Literal(self.value, self.datatype)


Term = Union[IriRef, BlankNode, Lit]


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: IriRef
    obj: Term


@dataclass
class Graph:
    triples: List[Triple] = field(default_factory=list)
    prefixes: Dict[str, str] = field(default_factory=dict)
    blank_count: int = 0


def merge_graphs(*graphs: Graph) -> Graph:
    """Concatenate graphs, relabelling blank nodes so they stay distinct."""
    out = Graph()
    for g in graphs:
        offset = out.blank_count

        def shift(t: Term) -> Term:
            if isinstance(t, BlankNode):
                return BlankNode(t.id + offset, t.line, t.col)
            return t

        for tr in g.triples:
            out.triples.append(Triple(shift(tr.subject), tr.predicate, shift(tr.obj)))
        out.blank_count += g.blank_count
        out.prefixes.update(g.prefixes)
    return out


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

# Token kinds: iriref pname string integer boolean a dot semi comma
#              lbracket rbracket lparen rparen caretcaret prefix_kw base_kw eof
@dataclass
class _Token:
    kind: str
    value: object
    line: int
    col: int


_PN_SAFE = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-.")
_PN_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")
_WORD_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_HEX = set("0123456789abcdefABCDEF")

# Raw control characters are illegal everywhere, even in comments and string
# bodies; escaped forms (\n, \uXXXX) are the only way to carry them.
_FORBIDDEN = {chr(c) for c in range(0x20)} - {"\t", "\n", "\r"}


class _Lexer:
    def __init__(self, text: str) -> None:
        self.text = text
        self.n = len(text)
        self.i = 0
        self.line = 1
        self.col = 1

    def error(self, message: str, category: str = "lexical",
              line: Optional[int] = None, col: Optional[int] = None) -> ParseError:
        return ParseError(line if line is not None else self.line,
                          col if col is not None else self.col, message, category)

    def _advance(self, k: int = 1) -> None:
        for _ in range(k):
            if self.i < self.n and self.text[self.i] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.i += 1

    def _peek(self, off: int = 0) -> str:
        j = self.i + off
        return self.text[j] if j < self.n else ""

    def _check_forbidden(self, ch: str) -> None:
        if ch in _FORBIDDEN:
            raise self.error(f"control character U+{ord(ch):04X} is not allowed")

    def tokens(self) -> List[_Token]:
        out: List[_Token] = []
        while True:
            tok = self._next()
            out.append(tok)
            if tok.kind == "pname":
                # trailing dots were scanned with the name but belong to the
                # statement; re-emit them as dot tokens
                dots = tok.value[2]
                for k in range(dots):
                    out.append(_Token("dot", None, self.line, self.col - dots + k))
            if tok.kind == "eof":
                return out

    def _next(self) -> _Token:
        # skip whitespace and comments
        while self.i < self.n:
            ch = self.text[self.i]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.i < self.n and self.text[self.i] != "\n":
                    self._check_forbidden(self.text[self.i])
                    self._advance()
            else:
                self._check_forbidden(ch)
                break
        if self.i >= self.n:
            return _Token("eof", None, self.line, self.col)

        line, col = self.line, self.col
        ch = self.text[self.i]

        if ch == "<":
            return self._iriref(line, col)
        if ch == '"':
            return self._string(line, col)
        if ch == "@":
            return self._directive(line, col)
        if ch in "0123456789" or (ch in "+-" and self._peek(1) in "0123456789"):
            return self._number(line, col)
        if ch == ".":
            self._advance()
            return _Token("dot", None, line, col)
        if ch == ";":
            self._advance()
            return _Token("semi", None, line, col)
        if ch == ",":
            self._advance()
            return _Token("comma", None, line, col)
        if ch == "[":
            self._advance()
            return _Token("lbracket", None, line, col)
        if ch == "]":
            self._advance()
            return _Token("rbracket", None, line, col)
        if ch == "(":
            self._advance()
            return _Token("lparen", None, line, col)
        if ch == ")":
            self._advance()
            return _Token("rparen", None, line, col)
        if ch == "^":
            if self._peek(1) == "^":
                self._advance(2)
                return _Token("caretcaret", None, line, col)
            raise self.error("expected '^^'")
        if ch == "_" and self._peek(1) == ":":
            raise self.error("labelled blank nodes are not supported", "syntactic")
        if ch == "'":
            raise self.error("single-quoted strings are not supported")
        if ch == ":" or ch in _WORD_START or ch in "0123456789":
            return self._name(line, col)
        raise self.error(f"unexpected character {ch!r}")

    def _iriref(self, line: int, col: int) -> _Token:
        self._advance()  # <
        parts: List[str] = []
        while True:
            if self.i >= self.n:
                raise self.error("unterminated IRI", line=line, col=col)
            ch = self.text[self.i]
            if ch == ">":
                self._advance()
                return _Token("iriref", "".join(parts), line, col)
            if ch == "\\":
                parts.append(self._uchar())
                continue
            if ch in ' "{}|^`<':
                raise self.error(f"character {ch!r} is not allowed in an IRI")
            self._check_forbidden(ch)
            if ch == "\n":
                raise self.error("unterminated IRI", line=line, col=col)
            parts.append(ch)
            self._advance()

    def _uchar(self) -> str:
        # at a backslash inside an IRI or string: only \uXXXX / \UXXXXXXXX here
        line, col = self.line, self.col
        esc = self._peek(1)
        if esc == "u":
            width = 4
        elif esc == "U":
            width = 8
        else:
            raise self.error("invalid escape sequence", line=line, col=col)
        digits = self.text[self.i + 2 : self.i + 2 + width]
        if len(digits) != width or any(d not in _HEX for d in digits):
            raise self.error("invalid unicode escape", line=line, col=col)
        code = int(digits, 16)
        if 0xD800 <= code <= 0xDFFF or code > 0x10FFFF:
            raise self.error("escape is not a unicode scalar value", line=line, col=col)
        self._advance(2 + width)
        return chr(code)

    def _string(self, line: int, col: int) -> _Token:
        if self._peek(1) == '"' and self._peek(2) == '"':
            raise self.error("multiline strings are not supported", line=line, col=col)
        self._advance()  # opening quote
        parts: List[str] = []
        while True:
            if self.i >= self.n:
                raise self.error("unterminated string", line=line, col=col)
            ch = self.text[self.i]
            if ch == '"':
                self._advance()
                if self._peek() == "@":
                    raise self.error("language tags are not supported")
                return _Token("string", "".join(parts), line, col)
            if ch == "\n":
                raise self.error("unterminated string", line=line, col=col)
            self._check_forbidden(ch)
            if ch == "\\":
                nxt = self._peek(1)
                simple = {"t": "\t", "b": "\b", "n": "\n", "r": "\r",
                          "f": "\f", '"': '"', "'": "'", "\\": "\\"}
                if nxt in simple:
                    parts.append(simple[nxt])
                    self._advance(2)
                else:
                    parts.append(self._uchar())
                continue
            parts.append(ch)
            self._advance()

    def _directive(self, line: int, col: int) -> _Token:
        word = ""
        j = self.i + 1
        while j < self.n and self.text[j].isalpha():
            word += self.text[j]
            j += 1
        if word == "prefix":
            self._advance(1 + len(word))
            return _Token("prefix_kw", None, line, col)
        if word == "base":
            self._advance(1 + len(word))
            return _Token("base_kw", None, line, col)
        raise self.error(f"unknown directive '@{word}'", line=line, col=col)

    def _number(self, line: int, col: int) -> _Token:
        j = self.i
        if self.text[j] in "+-":
            j += 1
        while j < self.n and self.text[j].isdigit():
            j += 1
        nxt = self.text[j] if j < self.n else ""
        follower = self.text[j + 1] if j + 1 < self.n else ""
        if nxt in "eE" or (nxt == "." and follower.isdigit()):
            raise self.error("non-integer numeric literals are not supported",
                             line=line, col=col)
        text = self.text[self.i : j]
        self._advance(j - self.i)
        return _Token("integer", int(text), line, col)

    def _name(self, line: int, col: int) -> _Token:
        # prefix part: unescaped PN characters up to an optional colon
        j = self.i
        while j < self.n and self.text[j] in _PN_SAFE:
            j += 1
        if j >= self.n or self.text[j] != ":":
            word = self.text[self.i : j]
            # trailing dots belong to the statement, not the bareword
            while word.endswith("."):
                word = word[:-1]
                j -= 1
            if word == "a":
                self._advance(j - self.i)
                return _Token("a", None, line, col)
            if word in ("true", "false"):
                self._advance(j - self.i)
                return _Token("boolean", word == "true", line, col)
            raise self.error(f"unexpected name {word!r}", line=line, col=col)
        prefix = self.text[self.i : j]
        if prefix.endswith("."):
            raise self.error("prefix may not end with '.'", line=line, col=col)
        self._advance(j - self.i + 1)  # prefix and colon
        # local part: PN characters plus backslash escapes
        parts: List[str] = []
        escaped: List[bool] = []
        while self.i < self.n:
            ch = self.text[self.i]
            if ch == "\\":
                esc = self._peek(1)
                if esc in _PN_ESCAPABLE:
                    parts.append(esc)
                    escaped.append(True)
                    self._advance(2)
                    continue
                raise self.error("invalid escape in prefixed name")
            if ch in _PN_SAFE:
                parts.append(ch)
                escaped.append(False)
                self._advance()
                continue
            break
        # a trailing run of unescaped dots terminates the statement instead
        dots = 0
        while parts and parts[-1] == "." and not escaped[-1]:
            parts.pop()
            escaped.pop()
            dots += 1
        return _Token("pname", (prefix, "".join(parts), dots), line, col)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_ABSOLUTE_SCHEME = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+.-")


def _is_absolute(iri: str) -> bool:
    head, sep, _ = iri.partition(":")
    return bool(sep) and bool(head) and head[0].isalpha() and all(c in _ABSOLUTE_SCHEME for c in head)


class _Parser:
    def __init__(self, tokens: List[_Token], base: Optional[str]) -> None:
        self.toks = tokens
        self.pos = 0
        self.prefixes: Dict[str, str] = {}
        self.base = base
        self.graph = Graph()
        self.depth = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self._err(tok, f"expected {what}")
        return self.take()

    def _err(self, tok: _Token, message: str, category: str = "syntactic") -> ParseError:
        return ParseError(tok.line, tok.col, message, category)

    def _fresh_blank(self, tok: _Token) -> BlankNode:
        b = BlankNode(self.graph.blank_count, tok.line, tok.col)
        self.graph.blank_count += 1
        return b

    def _emit(self, s: Term, p: IriRef, o: Term) -> None:
        self.graph.triples.append(Triple(s, p, o))

    # -- names ---------------------------------------------------------------

    def _resolve_pname(self, tok: _Token) -> IriRef:
        prefix, local, _dots = tok.value
        if prefix not in self.prefixes:
            raise self._err(tok, f"undefined prefix '{prefix}:'")
        return IriRef(self.prefixes[prefix] + local, tok.line, tok.col)

    def _resolve_iriref(self, tok: _Token) -> IriRef:
        iri = tok.value
        if _is_absolute(iri):
            return IriRef(iri, tok.line, tok.col)
        if self.base is None:
            raise self._err(tok, f"relative IRI <{iri}> without a base")
        base = self.base.split("#", 1)[0]
        if iri.startswith("#") or iri == "":
            return IriRef(base + iri, tok.line, tok.col)
        return IriRef(base.rsplit("/", 1)[0] + "/" + iri, tok.line, tok.col)

    def _iri_from(self, tok: _Token) -> IriRef:
        if tok.kind == "iriref":
            return self._resolve_iriref(tok)
        if tok.kind == "pname":
            return self._resolve_pname(tok)
        raise self._err(tok, "expected an IRI")

    # -- grammar -------------------------------------------------------------

    def document(self) -> Graph:
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self.graph.prefixes = dict(self.prefixes)
                return self.graph
            if tok.kind == "prefix_kw":
                self.take()
                name = self.expect("pname", "a prefix name")
                prefix, local, _ = name.value
                if local:
                    raise self._err(name, "prefix declaration must end with ':'")
                target = self.expect("iriref", "an IRI")
                self.prefixes[prefix] = self._resolve_iriref(target).iri
                self.expect("dot", "'.'")
            elif tok.kind == "base_kw":
                self.take()
                target = self.expect("iriref", "an IRI")
                self.base = self._resolve_iriref(target).iri
                self.expect("dot", "'.'")
            else:
                self._triples()

    def _triples(self) -> None:
        tok = self.peek()
        if tok.kind in ("iriref", "pname"):
            subject: Term = self._iri_from(self.take())
            self._predicate_object_list(subject)
            self.expect("dot", "'.'")
        elif tok.kind == "lbracket":
            subject = self._blank_props()
            if self.peek().kind != "dot":
                self._predicate_object_list(subject)
            self.expect("dot", "'.'")
        elif tok.kind == "lparen":
            subject = self._collection()
            self._predicate_object_list(subject)
            self.expect("dot", "'.'")
        else:
            raise self._err(tok, "expected a subject")

    def _predicate_object_list(self, subject: Term) -> None:
        while True:
            tok = self.peek()
            if tok.kind == "a":
                self.take()
                pred = IriRef(RDF_TYPE, tok.line, tok.col)
            elif tok.kind in ("iriref", "pname"):
                pred = self._iri_from(self.take())
            else:
                raise self._err(tok, "expected a predicate")
            while True:
                self._emit(subject, pred, self._object())
                if self.peek().kind == "comma":
                    self.take()
                    continue
                break
            if self.peek().kind == "semi":
                while self.peek().kind == "semi":
                    self.take()
                if self.peek().kind in ("a", "iriref", "pname"):
                    continue
            return

    def _object(self) -> Term:
        tok = self.peek()
        if tok.kind in ("iriref", "pname"):
            return self._iri_from(self.take())
        if tok.kind == "integer":
            self.take()
            return Lit(tok.value, Datatype.INTEGER, tok.line, tok.col)
        if tok.kind == "boolean":
            self.take()
            return Lit(tok.value, Datatype.BOOLEAN, tok.line, tok.col)
        if tok.kind == "string":
            return self._literal()
        if tok.kind == "lbracket":
            return self._blank_props()
        if tok.kind == "lparen":
            return self._collection()
        raise self._err(tok, "expected an object")

    def _literal(self) -> Lit:
        tok = self.take()
        text: str = tok.value
        if self.peek().kind != "caretcaret":
            return Lit(text, Datatype.STRING, tok.line, tok.col)
        self.take()
        dt_tok = self.peek()
        dt = self._iri_from(self.take())
        datatype = _DATATYPE_IRIS.get(dt.iri)
        if datatype is None:
            raise self._err(dt_tok, f"unsupported datatype <{dt.iri}>", "vocabulary")
        if datatype is Datatype.STRING:
            return Lit(text, Datatype.STRING, tok.line, tok.col)
        if datatype is Datatype.BOOLEAN:
            if text not in ("true", "false"):
                raise self._err(tok, f"invalid boolean literal {text!r}", "vocabulary")
            return Lit(text == "true", Datatype.BOOLEAN, tok.line, tok.col)
        body = text[1:] if text[:1] in "+-" else text
        if not body or not body.isascii() or not body.isdigit():
            raise self._err(tok, f"invalid integer literal {text!r}", "vocabulary")
        return Lit(int(text), Datatype.INTEGER, tok.line, tok.col)

    def _blank_props(self) -> BlankNode:
        open_tok = self.expect("lbracket", "'['")
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise self._err(open_tok, "nesting too deep")
        blank = self._fresh_blank(open_tok)
        if self.peek().kind != "rbracket":
            self._predicate_object_list(blank)
        self.expect("rbracket", "']'")
        self.depth -= 1
        return blank

    def _collection(self) -> Term:
        open_tok = self.expect("lparen", "'('")
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise self._err(open_tok, "nesting too deep")
        items: List[Term] = []
        while self.peek().kind != "rparen":
            if self.peek().kind == "eof":
                raise self._err(self.peek(), "unterminated collection")
            items.append(self._object())
        self.take()  # rparen
        self.depth -= 1
        if not items:
            return IriRef(RDF_NIL, open_tok.line, open_tok.col)
        cells = [self._fresh_blank(open_tok) for _ in items]
        nil: Term = IriRef(RDF_NIL, open_tok.line, open_tok.col)
        for cell, item, rest in zip(cells, items, cells[1:] + [nil]):
            self._emit(cell, IriRef(RDF_FIRST), item)
            self._emit(cell, IriRef(RDF_REST), rest)
        return cells[0]


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        prefix = data[: exc.start].decode("utf-8", errors="replace")
        line = prefix.count("\n") + 1
        col = len(prefix) - (prefix.rfind("\n") + 1) + 1
        raise ParseError(line, col, "invalid UTF-8", "lexical") from None


def parse_graph(data: Union[str, bytes], *, base: Optional[str] = None) -> Graph:
    """Parse Turtle text (or UTF-8 bytes) into a triple graph."""
    text = _decode(data) if isinstance(data, bytes) else data
    tokens = _Lexer(text).tokens()
    return _Parser(tokens, base).document()


# ---------------------------------------------------------------------------
# Recognizer: triples to knowledge base
# ---------------------------------------------------------------------------

def _in_reserved_ns(iri: str) -> bool:
    return any(iri.startswith(ns) for ns in _RESERVED_NAMESPACES)


class _Recognizer:
    def __init__(self, graph: Graph, strict: bool) -> None:
        self.graph = graph
        self.strict = strict
        self.kb = KnowledgeBase()
        self.diags: List[Diagnostic] = []
        self.bmap: Dict[BlankNode, List[Tuple[str, Term]]] = {}
        self.consumed: Set[BlankNode] = set()
        for tr in graph.triples:
            if isinstance(tr.subject, BlankNode):
                self.bmap.setdefault(tr.subject, []).append((tr.predicate.iri, tr.obj))

    def diag(self, severity: Severity, message: str, subject: Optional[Iri] = None) -> None:
        self.diags.append(Diagnostic(severity, message, subject))

    def _consume_tree(self, b: BlankNode) -> None:
        if b in self.consumed:
            return
        self.consumed.add(b)
        for _, obj in self.bmap.get(b, []):
            if isinstance(obj, BlankNode):
                self._consume_tree(obj)

    # -- blank node structure helpers ----------------------------------------

    def _props(self, b: BlankNode) -> Dict[str, List[Term]]:
        out: Dict[str, List[Term]] = {}
        for pred, obj in self.bmap.get(b, []):
            out.setdefault(pred, []).append(obj)
        return out

    def _single(self, props: Dict[str, List[Term]], pred: str) -> Optional[Term]:
        vals = props.get(pred, [])
        return vals[0] if len(vals) == 1 else None

    def _list_items(self, head: Term, subject: Iri) -> Optional[List[Term]]:
        items: List[Term] = []
        seen: Set[BlankNode] = set()
        node = head
        while True:
            if isinstance(node, IriRef) and node.iri == RDF_NIL:
                return items
            if not isinstance(node, BlankNode) or node in seen:
                self.diag(Severity.ERROR, "malformed list", subject)
                return None
            seen.add(node)
            self.consumed.add(node)
            props = self._props(node)
            first = self._single(props, RDF_FIRST)
            rest = self._single(props, RDF_REST)
            if first is None or rest is None or set(props) != {RDF_FIRST, RDF_REST}:
                self.diag(Severity.ERROR, "malformed list", subject)
                return None
            items.append(first)
            node = rest

    # -- class expressions -----------------------------------------------------

    def _decode_expr(self, term: Term, subject: Iri) -> Optional[ClassExpression]:
        if isinstance(term, IriRef):
            if _in_reserved_ns(term.iri):
                self.diag(Severity.ERROR,
                          f"<{term.iri}> cannot be used as a class expression", subject)
                return None
            return Named(term.iri)
        if isinstance(term, Lit):
            self.diag(Severity.ERROR, "literal used as a class expression", subject)
            return None
        self._consume_tree(term)
        props = self._props(term)
        rtype = self._single(props, RDF_TYPE)
        type_iri = rtype.iri if isinstance(rtype, IriRef) else None
        if type_iri == OWL + "Restriction":
            return self._decode_restriction(props, subject)
        if type_iri == OWL + "Class":
            return self._decode_boolean(props, subject)
        self.diag(Severity.ERROR, "malformed class expression", subject)
        return None

    def _decode_boolean(self, props: Dict[str, List[Term]], subject: Iri) -> Optional[ClassExpression]:
        operands = {k: v for k, v in props.items() if k != RDF_TYPE}
        if set(operands) == {OWL + "intersectionOf"} or set(operands) == {OWL + "unionOf"}:
            pred = next(iter(operands))
            head = self._single(props, pred)
            if head is None:
                self.diag(Severity.ERROR, "malformed class expression", subject)
                return None
            items = self._list_items(head, subject)
            if items is None:
                return None
            children = [self._decode_expr(t, subject) for t in items]
            if any(c is None for c in children):
                return None
            if len(children) < 2:
                self.diag(Severity.ERROR,
                          "intersection or union needs at least two operands", subject)
                return None
            ctor = And if pred == OWL + "intersectionOf" else Or
            return ctor(tuple(children))  # type: ignore[arg-type]
        if set(operands) == {OWL + "complementOf"}:
            inner = self._single(props, OWL + "complementOf")
            if inner is None:
                self.diag(Severity.ERROR, "malformed class expression", subject)
                return None
            child = self._decode_expr(inner, subject)
            return Not(child) if child is not None else None
        self.diag(Severity.ERROR, "malformed class expression", subject)
        return None

    def _decode_restriction(self, props: Dict[str, List[Term]], subject: Iri) -> Optional[ClassExpression]:
        on_prop = self._single(props, OWL + "onProperty")
        if not isinstance(on_prop, IriRef):
            self.diag(Severity.ERROR, "restriction without a single onProperty", subject)
            return None
        prop = on_prop.iri
        rest = {k: v for k, v in props.items() if k not in (RDF_TYPE, OWL + "onProperty")}
        if set(rest) == {OWL + "hasValue"}:
            val = self._single(props, OWL + "hasValue")
            if isinstance(val, IriRef):
                return ValueObj(prop, val.iri)
            if isinstance(val, Lit):
                return ValueData(prop, val.to_literal())
            self.diag(Severity.ERROR, "restriction without a single hasValue", subject)
            return None
        if set(rest) == {OWL + "someValuesFrom"}:
            filler = self._single(props, OWL + "someValuesFrom")
            if filler is None:
                self.diag(Severity.ERROR, "restriction without a single someValuesFrom", subject)
                return None
            if isinstance(filler, IriRef) and filler.iri in _DATATYPE_IRIS:
                self.diag(Severity.ERROR,
                          "existential restriction over a bare datatype is not supported",
                          subject)
                return None
            if isinstance(filler, BlankNode):
                ftype = self._single(self._props(filler), RDF_TYPE)
                if isinstance(ftype, IriRef) and ftype.iri == RDFS + "Datatype":
                    self._consume_tree(filler)
                    return self._decode_data_range(prop, self._props(filler), subject)
            inner = self._decode_expr(filler, subject)
            return Some(prop, inner) if inner is not None else None
        self.diag(Severity.ERROR, "unsupported restriction", subject)
        return None

    def _decode_data_range(self, prop: Iri, props: Dict[str, List[Term]],
                           subject: Iri) -> Optional[ClassExpression]:
        body = {k: v for k, v in props.items() if k != RDF_TYPE}
        if set(body) == {OWL + "oneOf"}:
            lit = self._one_literal(self._single(props, OWL + "oneOf"), subject)
            return DataCompare(prop, CompareOp.EQ, lit) if lit is not None else None
        if set(body) == {OWL + "datatypeComplementOf"}:
            inner = self._single(props, OWL + "datatypeComplementOf")
            if isinstance(inner, BlankNode):
                self._consume_tree(inner)
                iprops = self._props(inner)
                itype = self._single(iprops, RDF_TYPE)
                ibody = {k: v for k, v in iprops.items() if k != RDF_TYPE}
                if (isinstance(itype, IriRef) and itype.iri == RDFS + "Datatype"
                        and set(ibody) == {OWL + "oneOf"}):
                    lit = self._one_literal(self._single(iprops, OWL + "oneOf"), subject)
                    return DataCompare(prop, CompareOp.NE, lit) if lit is not None else None
            self.diag(Severity.ERROR, "malformed datatype complement", subject)
            return None
        if set(body) == {OWL + "onDatatype", OWL + "withRestrictions"}:
            on_dt = self._single(props, OWL + "onDatatype")
            if (not isinstance(on_dt, IriRef)
                    or _DATATYPE_IRIS.get(on_dt.iri) is not Datatype.INTEGER):
                self.diag(Severity.ERROR,
                          "ordering facets require the integer datatype", subject)
                return None
            head = self._single(props, OWL + "withRestrictions")
            items = self._list_items(head, subject) if head is not None else None
            if items is None or len(items) != 1 or not isinstance(items[0], BlankNode):
                self.diag(Severity.ERROR, "expected exactly one facet", subject)
                return None
            facet_node = items[0]
            self._consume_tree(facet_node)
            fprops = self._props(facet_node)
            if len(fprops) != 1:
                self.diag(Severity.ERROR, "expected exactly one facet", subject)
                return None
            facet_iri, vals = next(iter(fprops.items()))
            op = _FACET_TO_OP.get(facet_iri)
            val = vals[0] if len(vals) == 1 else None
            if op is None or not isinstance(val, Lit) or val.datatype is not Datatype.INTEGER:
                self.diag(Severity.ERROR, "unsupported facet", subject)
                return None
            return DataCompare(prop, op, val.to_literal())
        self.diag(Severity.ERROR, "malformed data range", subject)
        return None

    def _one_literal(self, head: Optional[Term], subject: Iri) -> Optional[Literal]:
        items = self._list_items(head, subject) if head is not None else None
        if items is None or len(items) != 1 or not isinstance(items[0], Lit):
            self.diag(Severity.ERROR, "expected a one-literal list", subject)
            return None
        return items[0].to_literal()

    # -- main pass -------------------------------------------------------------

    def run(self) -> Tuple[KnowledgeBase, List[Diagnostic]]:
        for tr in self.graph.triples:
            if (isinstance(tr.subject, IriRef) and tr.predicate.iri == RDF_TYPE
                    and isinstance(tr.obj, IriRef) and tr.obj.iri in _KIND_IRIS):
                try:
                    self.kb.declare(tr.subject.iri, _KIND_IRIS[tr.obj.iri])
                except KindConflict as exc:
                    self.diag(Severity.ERROR, str(exc), tr.subject.iri)

        for tr in self.graph.triples:
            if isinstance(tr.subject, BlankNode):
                continue
            self._statement(tr.subject, tr.predicate.iri, tr.obj)

        for blank in self.bmap:
            if blank not in self.consumed:
                self.diag(Severity.WARNING, "unreferenced anonymous node")
                break

        order = {Severity.ERROR: 0, Severity.WARNING: 1, Severity.INFO: 2}
        self.diags.sort(key=lambda d: (order[d.severity], d.message, d.subject or ""))
        return self.kb, self.diags

    def _statement(self, subject: IriRef, pred: Iri, obj: Term) -> None:
        s = subject.iri
        if pred == RDF_TYPE:
            self._type_statement(s, obj)
        elif pred == RDFS + "subClassOf":
            if isinstance(obj, IriRef) and not _in_reserved_ns(obj.iri):
                self.kb.add_axiom(SubClassOf(s, obj.iri))
            elif isinstance(obj, BlankNode):
                self._consume_tree(obj)
                self.diag(Severity.ERROR,
                          "anonymous superclasses are not supported; "
                          "use an equivalence definition", s)
            else:
                self.diag(Severity.ERROR, "malformed subclass statement", s)
        elif pred == OWL + "equivalentClass":
            if isinstance(obj, IriRef) and not _in_reserved_ns(obj.iri):
                self.kb.add_axiom(EquivalentClasses(s, Named(obj.iri)))
            else:
                expr = self._decode_expr(obj, s)
                if expr is not None:
                    self.kb.add_axiom(EquivalentClasses(s, expr))
        elif pred == OWL + "disjointWith":
            if isinstance(obj, IriRef) and not _in_reserved_ns(obj.iri):
                self.kb.add_axiom(DisjointClasses(s, obj.iri))
            else:
                self.diag(Severity.ERROR, "malformed disjointness statement", s)
        elif pred == RDFS + "domain":
            self._domain_statement(s, obj)
        elif pred == RDFS + "range":
            self._range_statement(s, obj)
        elif pred == OWL + "inverseOf":
            if isinstance(obj, IriRef) and not _in_reserved_ns(obj.iri):
                self.kb.add_axiom(InverseProperties(s, obj.iri))
            else:
                self.diag(Severity.ERROR, "malformed inverse statement", s)
        elif pred in (RDFS + "label", RDFS + "comment"):
            if isinstance(obj, Lit):
                self.kb.add_annotation(Annotation(s, pred, obj.to_literal()))
            elif isinstance(obj, IriRef):
                self.kb.add_annotation(Annotation(s, pred, obj.iri))
            else:
                self.diag(Severity.ERROR, "malformed annotation", s)
        elif _in_reserved_ns(pred):
            if self.strict:
                self.diag(Severity.ERROR, f"vocabulary outside the subset: <{pred}>", s)
            elif isinstance(obj, BlankNode):
                self._consume_tree(obj)
                self.diag(Severity.WARNING,
                          f"ignoring anonymous object of <{pred}>", s)
            else:
                value = obj.iri if isinstance(obj, IriRef) else obj.to_literal()
                self.kb.add_annotation(Annotation(s, pred, value))
                self.diag(Severity.INFO,
                          f"keeping <{pred}> as an uninterpreted annotation", s)
        else:
            self._domain_predicate(s, pred, obj)

    def _type_statement(self, s: Iri, obj: Term) -> None:
        if isinstance(obj, IriRef):
            if obj.iri in _KIND_IRIS:
                return  # handled in the declaration pass
            if obj.iri == OWL + "Ontology":
                self.kb.add_annotation(Annotation(s, RDF_TYPE, obj.iri))
                return
            if _in_reserved_ns(obj.iri):
                if self.strict:
                    self.diag(Severity.ERROR,
                              f"vocabulary outside the subset: <{obj.iri}>", s)
                else:
                    self.kb.add_annotation(Annotation(s, RDF_TYPE, obj.iri))
                    self.diag(Severity.INFO,
                              f"keeping <{obj.iri}> as an uninterpreted annotation", s)
                return
            self.kb.add_assertion(ClassAssertion(obj.iri, s))
        elif isinstance(obj, BlankNode):
            self._consume_tree(obj)
            self.diag(Severity.ERROR,
                      "anonymous classes are not supported in type assertions", s)
        else:
            self.diag(Severity.ERROR, "literal used as a type", s)

    def _domain_statement(self, s: Iri, obj: Term) -> None:
        kind = self.kb.kind_of(s)
        if not isinstance(obj, IriRef) or _in_reserved_ns(obj.iri):
            self.diag(Severity.ERROR, "domain must be a named class", s)
        elif kind is EntityKind.OBJECT_PROPERTY:
            self.kb.add_axiom(ObjectPropertyDomain(s, obj.iri))
        elif kind is EntityKind.DATA_PROPERTY:
            self.kb.add_axiom(DataPropertyDomain(s, obj.iri))
        else:
            self.diag(Severity.ERROR, "domain on an undeclared property", s)

    def _range_statement(self, s: Iri, obj: Term) -> None:
        kind = self.kb.kind_of(s)
        if kind is EntityKind.OBJECT_PROPERTY:
            if isinstance(obj, IriRef) and not _in_reserved_ns(obj.iri):
                self.kb.add_axiom(ObjectPropertyRange(s, obj.iri))
            else:
                self.diag(Severity.ERROR, "object property range must be a named class", s)
        elif kind is EntityKind.DATA_PROPERTY:
            datatype = _DATATYPE_IRIS.get(obj.iri) if isinstance(obj, IriRef) else None
            if datatype is None:
                self.diag(Severity.ERROR,
                          "data property range must be xsd:string, xsd:boolean "
                          "or xsd:integer", s)
            else:
                self.kb.add_axiom(DataPropertyRange(s, datatype))
        else:
            self.diag(Severity.ERROR, "range on an undeclared property", s)

    def _domain_predicate(self, s: Iri, pred: Iri, obj: Term) -> None:
        kind = self.kb.kind_of(pred)
        if kind is EntityKind.OBJECT_PROPERTY:
            if isinstance(obj, IriRef):
                self.kb.add_assertion(ObjectAssertion(pred, s, obj.iri))
            elif isinstance(obj, Lit):
                self.diag(Severity.ERROR,
                          "literal value for an object property", pred)
            else:
                self._consume_tree(obj)
                self.diag(Severity.ERROR,
                          "anonymous individuals are not supported", pred)
        elif kind is EntityKind.DATA_PROPERTY:
            if isinstance(obj, Lit):
                self.kb.add_assertion(DataAssertion(pred, s, obj.to_literal()))
            else:
                self.diag(Severity.ERROR,
                          "data property needs a literal value", pred)
        elif kind in (EntityKind.CLASS, EntityKind.INDIVIDUAL):
            self.diag(Severity.ERROR,
                      f"declared as {kind.value} but used as a predicate", pred)
        else:
            # Undeclared: fall back on the object's shape so a data file can be
            # read without its schema; the merge resolves the real kind.
            if isinstance(obj, IriRef):
                self.kb.add_assertion(ObjectAssertion(pred, s, obj.iri))
                self.diag(Severity.WARNING,
                          "undeclared predicate treated as an object property", pred)
            elif isinstance(obj, Lit):
                self.kb.add_assertion(DataAssertion(pred, s, obj.to_literal()))
                self.diag(Severity.WARNING,
                          "undeclared predicate treated as a data property", pred)
            else:
                self._consume_tree(obj)
                self.diag(Severity.ERROR,
                          "anonymous individuals are not supported", pred)


def recognize(graph: Graph, *, strict: bool = False) -> Tuple[KnowledgeBase, List[Diagnostic]]:
    """Interpret a triple graph as a knowledge base.

    Returns the base plus diagnostics; error-level diagnostics mean parts of
    the input were dropped or contradictory.
    """
    return _Recognizer(graph, strict).run()


def parse_kb(data: Union[str, bytes], *, strict: bool = False,
             base: Optional[str] = None) -> Tuple[KnowledgeBase, List[Diagnostic]]:
    """Parse Turtle straight into a knowledge base."""
    return recognize(parse_graph(data, base=base), strict=strict)


# ---------------------------------------------------------------------------
# Serializer
# ---------------------------------------------------------------------------

def _escape_string(value: str) -> str:
    out: List[str] = []
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def _encode_local(local: str) -> Optional[str]:
    out: List[str] = []
    last = len(local) - 1
    for idx, ch in enumerate(local):
        plain_ok = ch in _PN_SAFE
        if idx == 0 and ch in "-.":
            plain_ok = False
        if idx == last and ch == ".":
            plain_ok = False
        if plain_ok:
            out.append(ch)
        elif ch in _PN_ESCAPABLE:
            out.append("\\" + ch)
        else:
            return None
    return "".join(out)


class _Writer:
    def __init__(self, prefixes: Dict[str, str]) -> None:
        # longest namespace wins when several prefixes could apply
        self.by_ns = sorted(prefixes.items(), key=lambda kv: -len(kv[1]))
        self.prefixes = prefixes

    def iri(self, iri: Iri) -> str:
        for prefix, ns in self.by_ns:
            if iri.startswith(ns) and len(iri) > 0:
                local = _encode_local(iri[len(ns):])
                if local is not None:
                    return f"{prefix}:{local}"
        return f"<{iri}>"

    def literal(self, lit: Literal) -> str:
        if lit.datatype is Datatype.STRING:
            return _escape_string(lit.value)  # type: ignore[arg-type]
        return lit.lexical()

    def expr(self, e: ClassExpression) -> str:
        if isinstance(e, Named):
            return self.iri(e.iri)
        if isinstance(e, (And, Or)):
            pred = "owl:intersectionOf" if isinstance(e, And) else "owl:unionOf"
            inner = " ".join(self.expr(c) for c in e.children)
            return f"[ a owl:Class ; {pred} ( {inner} ) ]"
        if isinstance(e, Not):
            return f"[ a owl:Class ; owl:complementOf {self.expr(e.child)} ]"
        if isinstance(e, Some):
            return (f"[ a owl:Restriction ; owl:onProperty {self.iri(e.prop)} ; "
                    f"owl:someValuesFrom {self.expr(e.filler)} ]")
        if isinstance(e, ValueObj):
            return (f"[ a owl:Restriction ; owl:onProperty {self.iri(e.prop)} ; "
                    f"owl:hasValue {self.iri(e.individual)} ]")
        if isinstance(e, ValueData):
            return (f"[ a owl:Restriction ; owl:onProperty {self.iri(e.prop)} ; "
                    f"owl:hasValue {self.literal(e.literal)} ]")
        if isinstance(e, DataCompare):
            return (f"[ a owl:Restriction ; owl:onProperty {self.iri(e.prop)} ; "
                    f"owl:someValuesFrom {self._data_range(e)} ]")
        raise TypeError(f"unknown expression node {e!r}")

    def _data_range(self, e: DataCompare) -> str:
        lit = self.literal(e.literal)
        if e.op is CompareOp.EQ:
            return f"[ a rdfs:Datatype ; owl:oneOf ( {lit} ) ]"
        if e.op is CompareOp.NE:
            return (f"[ a rdfs:Datatype ; owl:datatypeComplementOf "
                    f"[ a rdfs:Datatype ; owl:oneOf ( {lit} ) ] ]")
        facet = self.iri(_OP_TO_FACET[e.op])
        return (f"[ a rdfs:Datatype ; owl:onDatatype xsd:integer ; "
                f"owl:withRestrictions ( [ {facet} {lit} ] ) ]")


# Fixed predicate ordering inside a subject block, schema statements first.
_PRED_PRIORITY = {
    RDF_TYPE: 0,
    RDFS + "subClassOf": 1,
    OWL + "equivalentClass": 2,
    OWL + "disjointWith": 3,
    RDFS + "domain": 4,
    RDFS + "range": 5,
    OWL + "inverseOf": 6,
}


def serialize(kb: KnowledgeBase, prefixes: Optional[Dict[str, str]] = None) -> str:
    """Write a knowledge base as canonical Turtle.

    Output is deterministic: prefixes, subjects, predicates and objects are
    sorted, declarations come first in each block, expressions are inlined.
    """
    all_prefixes = dict(STANDARD_PREFIXES)
    if prefixes:
        all_prefixes.update(prefixes)
    w = _Writer(all_prefixes)

    # subject -> predicate -> list of (sort_key, rendered object)
    blocks: Dict[Iri, Dict[Iri, List[Tuple[Tuple, str]]]] = {}

    def put(subject: Iri, pred: Iri, key: Tuple, rendered: str) -> None:
        blocks.setdefault(subject, {}).setdefault(pred, []).append((key, rendered))

    for iri, kind in kb.declarations.items():
        put(iri, RDF_TYPE, (0, _KIND_TO_IRI[kind]), w.iri(_KIND_TO_IRI[kind]))

    for ax in kb.axioms:
        if isinstance(ax, SubClassOf):
            put(ax.sub, RDFS + "subClassOf", (0, ax.sup), w.iri(ax.sup))
        elif isinstance(ax, EquivalentClasses):
            rendered = w.expr(ax.expr)
            put(ax.name, OWL + "equivalentClass", (0, rendered), rendered)
        elif isinstance(ax, DisjointClasses):
            put(ax.a, OWL + "disjointWith", (0, ax.b), w.iri(ax.b))
        elif isinstance(ax, (ObjectPropertyDomain, DataPropertyDomain)):
            put(ax.prop, RDFS + "domain", (0, ax.cls), w.iri(ax.cls))
        elif isinstance(ax, ObjectPropertyRange):
            put(ax.prop, RDFS + "range", (0, ax.cls), w.iri(ax.cls))
        elif isinstance(ax, DataPropertyRange):
            dt = _DATATYPE_TO_IRI[ax.datatype]
            put(ax.prop, RDFS + "range", (0, dt), w.iri(dt))
        elif isinstance(ax, InverseProperties):
            put(ax.a, OWL + "inverseOf", (0, ax.b), w.iri(ax.b))
        else:
            raise TypeError(f"unknown axiom {ax!r}")

    for fact in kb.assertions:
        if isinstance(fact, ClassAssertion):
            put(fact.individual, RDF_TYPE, (1, fact.cls), w.iri(fact.cls))
        elif isinstance(fact, ObjectAssertion):
            put(fact.subject, fact.prop, (0, fact.obj), w.iri(fact.obj))
        elif isinstance(fact, DataAssertion):
            lit = fact.literal
            put(fact.subject, fact.prop,
                (1, lit.datatype.value, str(lit.value)), w.literal(lit))
        else:
            raise TypeError(f"unknown assertion {fact!r}")

    for ann in kb.annotations:
        if isinstance(ann.value, Literal):
            put(ann.subject, ann.prop,
                (1, ann.value.datatype.value, str(ann.value.value)),
                w.literal(ann.value))
        else:
            put(ann.subject, ann.prop, (0, ann.value), w.iri(ann.value))

    lines: List[str] = []
    for prefix in sorted(all_prefixes):
        lines.append(f"@prefix {prefix}: <{all_prefixes[prefix]}> .")
    for subject in sorted(blocks):
        lines.append("")
        preds = sorted(blocks[subject],
                       key=lambda p: (_PRED_PRIORITY.get(p, 7), p))
        parts: List[str] = []
        for pred in preds:
            shown = "a" if pred == RDF_TYPE else w.iri(pred)
            objects = ", ".join(r for _, r in sorted(set(blocks[subject][pred])))
            parts.append(f"{shown} {objects}")
        first, rest = parts[0], parts[1:]
        if not rest:
            lines.append(f"{w.iri(subject)} {first} .")
        else:
            lines.append(f"{w.iri(subject)} {first} ;")
            for part in rest[:-1]:
                lines.append(f"    {part} ;")
            lines.append(f"    {rest[-1]} .")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Graph isomorphism (blank nodes are tree-shaped in this subset)
# ---------------------------------------------------------------------------

def _canonical(graph: Graph) -> List[Tuple]:
    by_subject: Dict[BlankNode, List[Triple]] = {}
    for tr in graph.triples:
        if isinstance(tr.subject, BlankNode):
            by_subject.setdefault(tr.subject, []).append(tr)

    memo: Dict[BlankNode, Tuple] = {}
    in_progress: Set[BlankNode] = set()

    def key(term: Term) -> Tuple:
        if isinstance(term, IriRef):
            return ("i", term.iri)
        if isinstance(term, Lit):
            return ("l", term.datatype.value, repr(term.value))
        return ("b", signature(term))

    def signature(b: BlankNode) -> Tuple:
        if b in memo:
            return memo[b]
        if b in in_progress:  # cyclic blanks cannot be produced by the parser
            return ("cycle",)
        in_progress.add(b)
        sig = tuple(sorted((tr.predicate.iri, key(tr.obj)) for tr in by_subject.get(b, [])))
        in_progress.discard(b)
        memo[b] = sig
        return sig

    return sorted((key(tr.subject), tr.predicate.iri, key(tr.obj)) for tr in graph.triples)


def isomorphic(a: Graph, b: Graph) -> bool:
    """True when the graphs match up to blank node renaming."""
    return _canonical(a) == _canonical(b)

"""Class-expression query language: parser, printer, resolver, evaluator.

Grammar (whitespace between tokens, keywords lowercase and reserved)::

    expr        := or
    or          := and ("or" and)*
    and         := unary ("and" unary)*
    unary       := "not" unary | primary
    primary     := "(" expr ")" | restriction | NAME
    restriction := NAME "some" primary
                 | NAME "value" (NAME | literal)
                 | NAME CMP literal
    CMP         := "=" | "!=" | "<" | "<=" | ">" | ">="
    literal     := INTEGER | "true" | "false" | STRING

``and`` binds tighter than ``or``; ``not`` binds tightest.  Names are plain
local names resolved against the knowledge base; ``<full-iri>`` works where a
local name would be ambiguous or unlexable.  ``not`` is closed-world: the
complement is taken over the declared individuals.
"""

from __future__ import annotations

import operator
from typing import Callable, Dict, List, Optional, Set, Tuple

from .model import (
    And,
    ClassExpression,
    CompareOp,
    DataCompare,
    Datatype,
    EntityKind,
    EquivalentClasses,
    Iri,
    KnowledgeBase,
    Literal,
    Named,
    Not,
    Or,
    Some,
    ValueData,
    ValueObj,
    local_name,
)
from .reasoner import MaterializedKB

_KEYWORDS = ("and", "or", "not", "some", "value")
_MAX_DEPTH = 64


class QueryParseError(Exception):
    """Syntax error in a query, with a 1-based character position."""

    def __init__(self, position: int, message: str) -> None:
        self.position = position
        self.message = message
        super().__init__(f"column {position}: {message}")


class ResolutionError(Exception):
    """A name in a query does not denote a suitable entity."""


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")
_NAME_CHARS = _NAME_START | set("-.'/")


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value: object, pos: int) -> None:
        self.kind = kind  # name int bool string cmp lparen rparen iri eof
        self.value = value
        self.pos = pos  # 1-based


def _lex(text: str) -> List[_Token]:
    out: List[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        pos = i + 1
        if ch == "(":
            out.append(_Token("lparen", None, pos))
            i += 1
        elif ch == ")":
            out.append(_Token("rparen", None, pos))
            i += 1
        elif ch in "=<>!":
            if ch == "!":
                if text[i : i + 2] != "!=":
                    raise QueryParseError(pos, "expected '!='")
                out.append(_Token("cmp", CompareOp.NE, pos))
                i += 2
            elif ch == "=":
                out.append(_Token("cmp", CompareOp.EQ, pos))
                i += 1
            else:
                two = text[i : i + 2]
                if two in ("<=", ">="):
                    out.append(_Token("cmp", CompareOp.LE if two == "<=" else CompareOp.GE, pos))
                    i += 2
                elif ch == "<" and i + 1 < n and (text[i + 1].isalnum() or text[i + 1] in ":/_"):
                    j = text.find(">", i)
                    if j < 0:
                        raise QueryParseError(pos, "unterminated IRI")
                    out.append(_Token("iri", text[i + 1 : j], pos))
                    i = j + 1
                else:
                    out.append(_Token("cmp", CompareOp.LT if ch == "<" else CompareOp.GT, pos))
                    i += 1
        elif ch == '"':
            value, i = _lex_string(text, i)
            out.append(_Token("string", value, pos))
        elif ch.isdigit() or (ch in "+-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            # digit-leading names like 2p-NSGA-II: fall through to a name
            if ch.isdigit() and j < n and text[j] in _NAME_CHARS and text[j] != ".":
                while j < n and text[j] in _NAME_CHARS:
                    j += 1
                out.append(_Token("name", text[i:j], pos))
            else:
                out.append(_Token("int", int(text[i:j]), pos))
            i = j
        elif ch in _NAME_START:
            j = i
            while j < n and text[j] in _NAME_CHARS:
                j += 1
            word = text[i:j]
            if word == "true" or word == "false":
                out.append(_Token("bool", word == "true", pos))
            else:
                out.append(_Token("name", word, pos))
            i = j
        else:
            raise QueryParseError(pos, f"unexpected character {ch!r}")
    out.append(_Token("eof", None, n + 1))
    return out


def _lex_string(text: str, i: int) -> Tuple[str, int]:
    start = i
    i += 1
    parts: List[str] = []
    while i < len(text):
        ch = text[i]
        if ch == '"':
            return "".join(parts), i + 1
        if ch == "\\":
            nxt = text[i + 1 : i + 2]
            simple = {"t": "\t", "n": "\n", "r": "\r", '"': '"', "\\": "\\"}
            if nxt in simple:
                parts.append(simple[nxt])
                i += 2
                continue
            if nxt == "u":
                digits = text[i + 2 : i + 6]
                if len(digits) == 4 and all(d in "0123456789abcdefABCDEF" for d in digits):
                    parts.append(chr(int(digits, 16)))
                    i += 6
                    continue
            raise QueryParseError(i + 1, "invalid escape in string")
        parts.append(ch)
        i += 1
    raise QueryParseError(start + 1, "unterminated string")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _QueryParser:
    def __init__(self, tokens: List[_Token]) -> None:
        self.toks = tokens
        self.i = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def _at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "name" and tok.value == word

    def parse(self) -> ClassExpression:
        expr = self.or_expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise QueryParseError(tok.pos, "unexpected trailing input")
        return expr

    def or_expr(self) -> ClassExpression:
        children = [self.and_expr()]
        while self._at_keyword("or"):
            self.take()
            children.append(self.and_expr())
        return children[0] if len(children) == 1 else Or(tuple(children))

    def and_expr(self) -> ClassExpression:
        children = [self.unary()]
        while self._at_keyword("and"):
            self.take()
            children.append(self.unary())
        return children[0] if len(children) == 1 else And(tuple(children))

    def unary(self) -> ClassExpression:
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise QueryParseError(self.peek().pos, "nesting too deep")
        try:
            if self._at_keyword("not"):
                self.take()
                return Not(self.unary())
            return self.primary()
        finally:
            self.depth -= 1

    def primary(self) -> ClassExpression:
        tok = self.peek()
        if tok.kind == "lparen":
            self.take()
            self.depth += 1
            if self.depth > _MAX_DEPTH:
                raise QueryParseError(tok.pos, "nesting too deep")
            expr = self.or_expr()
            self.depth -= 1
            closing = self.peek()
            if closing.kind != "rparen":
                raise QueryParseError(closing.pos, "expected ')'")
            self.take()
            return expr
        if tok.kind in ("name", "iri"):
            if tok.kind == "name" and tok.value in _KEYWORDS:
                raise QueryParseError(tok.pos, f"unexpected keyword '{tok.value}'")
            self.take()
            name: str = tok.value  # type: ignore[assignment]
            nxt = self.peek()
            if nxt.kind == "name" and nxt.value == "some":
                self.take()
                return Some(name, self.primary())
            if nxt.kind == "name" and nxt.value == "value":
                self.take()
                return self._value_restriction(name)
            if nxt.kind == "cmp":
                self.take()
                lit = self._literal("comparison")
                return DataCompare(name, nxt.value, lit)  # type: ignore[arg-type]
            return Named(name)
        raise QueryParseError(tok.pos, "expected a name, '(' or 'not'")

    def _value_restriction(self, prop: str) -> ClassExpression:
        tok = self.peek()
        if tok.kind in ("name", "iri"):
            if tok.kind == "name" and tok.value in _KEYWORDS:
                raise QueryParseError(tok.pos, f"unexpected keyword '{tok.value}'")
            self.take()
            return ValueObj(prop, tok.value)  # type: ignore[arg-type]
        return ValueData(prop, self._literal("value restriction"))

    def _literal(self, where: str) -> Literal:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Literal(tok.value, Datatype.INTEGER)
        if tok.kind == "bool":
            self.take()
            return Literal(tok.value, Datatype.BOOLEAN)
        if tok.kind == "string":
            self.take()
            return Literal(tok.value, Datatype.STRING)
        raise QueryParseError(tok.pos, f"expected a literal in {where}")


def parse_query(text: str) -> ClassExpression:
    """Parse query text into an unresolved expression (names stay as written)."""
    return _QueryParser(_lex(text)).parse()


# ---------------------------------------------------------------------------
# Name resolution
# ---------------------------------------------------------------------------

def _index_names(kb: KnowledgeBase) -> Dict[str, List[Iri]]:
    by_local: Dict[str, List[Iri]] = {}
    for iri in sorted(kb.declarations):
        by_local.setdefault(local_name(iri), []).append(iri)
    return by_local


def resolve(expr: ClassExpression, kb: KnowledgeBase) -> ClassExpression:
    """Replace written names with declared IRIs, checking entity kinds."""
    by_local = _index_names(kb)

    def lookup(name: str, kind: EntityKind, role: str) -> Iri:
        if name in kb.declarations:  # already a full IRI
            candidates = [name]
        else:
            candidates = by_local.get(name, [])
        fitting = [c for c in candidates if kb.declarations[c] is kind]
        if not fitting:
            if candidates:
                raise ResolutionError(f"'{name}' is not {role}")
            raise ResolutionError(f"unknown name '{name}'")
        if len(fitting) > 1:
            listed = ", ".join(f"<{c}>" for c in fitting)
            raise ResolutionError(f"'{name}' is ambiguous: {listed}")
        return fitting[0]

    def walk(e: ClassExpression) -> ClassExpression:
        if isinstance(e, Named):
            return Named(lookup(e.iri, EntityKind.CLASS, "a class"))
        if isinstance(e, And):
            return And(tuple(walk(c) for c in e.children))
        if isinstance(e, Or):
            return Or(tuple(walk(c) for c in e.children))
        if isinstance(e, Not):
            return Not(walk(e.child))
        if isinstance(e, Some):
            return Some(lookup(e.prop, EntityKind.OBJECT_PROPERTY, "an object property"),
                        walk(e.filler))
        if isinstance(e, ValueObj):
            return ValueObj(lookup(e.prop, EntityKind.OBJECT_PROPERTY, "an object property"),
                            lookup(e.individual, EntityKind.INDIVIDUAL, "an individual"))
        if isinstance(e, ValueData):
            return ValueData(lookup(e.prop, EntityKind.DATA_PROPERTY, "a data property"),
                             e.literal)
        if isinstance(e, DataCompare):
            return DataCompare(lookup(e.prop, EntityKind.DATA_PROPERTY, "a data property"),
                               e.op, e.literal)
        raise TypeError(f"unknown expression node {e!r}")

    return walk(expr)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

_ORDER_FN: Dict[CompareOp, Callable[[int, int], bool]] = {
    CompareOp.LT: operator.lt,
    CompareOp.LE: operator.le,
    CompareOp.GT: operator.gt,
    CompareOp.GE: operator.ge,
}


def evaluate(mkb: MaterializedKB, expr: ClassExpression) -> Set[Iri]:
    """Individuals satisfying the (resolved) expression, closed-world."""
    if isinstance(expr, Named):
        return mkb.instances_of(expr.iri)
    if isinstance(expr, And):
        result = evaluate(mkb, expr.children[0])
        for child in expr.children[1:]:
            result &= evaluate(mkb, child)
        return result
    if isinstance(expr, Or):
        result = evaluate(mkb, expr.children[0])
        for child in expr.children[1:]:
            result |= evaluate(mkb, child)
        return result
    if isinstance(expr, Not):
        return set(mkb.kb.individuals) - evaluate(mkb, expr.child)
    if isinstance(expr, Some):
        filler = evaluate(mkb, expr.filler)
        return {s for s, o in mkb.object_pairs(expr.prop) if o in filler}
    if isinstance(expr, ValueObj):
        return {s for s, o in mkb.object_pairs(expr.prop) if o == expr.individual}
    if isinstance(expr, ValueData):
        return {s for s, lit in mkb.data_pairs(expr.prop) if lit == expr.literal}
    if isinstance(expr, DataCompare):
        want = expr.literal
        if expr.op is CompareOp.EQ:
            return {s for s, lit in mkb.data_pairs(expr.prop) if lit == want}
        if expr.op is CompareOp.NE:
            # existential: some value of the same datatype that differs
            return {s for s, lit in mkb.data_pairs(expr.prop)
                    if lit.datatype is want.datatype and lit.value != want.value}
        fn = _ORDER_FN[expr.op]
        return {s for s, lit in mkb.data_pairs(expr.prop)
                if lit.datatype is Datatype.INTEGER and want.datatype is Datatype.INTEGER
                and fn(lit.value, want.value)}
    raise TypeError(f"unknown expression node {expr!r}")


def class_operands(expr: ClassExpression) -> Optional[List[Iri]]:
    """The named conjuncts if the expression is a name or a conjunction of
    names, else None.  Class-level reasoning is only defined for these."""
    if isinstance(expr, Named):
        return [expr.iri]
    if isinstance(expr, And) and all(isinstance(c, Named) for c in expr.children):
        return [c.iri for c in expr.children]  # type: ignore[union-attr]
    return None


def subclass_closure(mkb: MaterializedKB, expr: ClassExpression) -> List[Iri]:
    """Named classes at or below every conjunct of a named conjunction."""
    ops = class_operands(expr)
    if ops is None:
        raise ResolutionError("class-level queries need a name or a conjunction of names")
    result = mkb.subclasses_of(ops[0])
    for op in ops[1:]:
        result &= mkb.subclasses_of(op)
    return sorted(result)


def superclass_closure(mkb: MaterializedKB, expr: ClassExpression) -> List[Iri]:
    """Named classes at or above some conjunct of a named conjunction."""
    ops = class_operands(expr)
    if ops is None:
        raise ResolutionError("class-level queries need a name or a conjunction of names")
    result: Set[Iri] = set()
    for op in ops:
        result |= mkb.superclasses_of(op)
    return sorted(result)


def define_class(kb: KnowledgeBase, name: Iri, expr: ClassExpression) -> None:
    """Declare a class defined equivalent to an expression (resolved IRIs)."""
    kb.declare(name, EntityKind.CLASS)
    kb.add_axiom(EquivalentClasses(name, expr))


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

def _render_literal(lit: Literal) -> str:
    if lit.datatype is Datatype.STRING:
        out = []
        for ch in lit.value:  # type: ignore[union-attr]
            if ch == "\\":
                out.append("\\\\")
            elif ch == '"':
                out.append('\\"')
            elif ch == "\n":
                out.append("\\n")
            elif ch == "\t":
                out.append("\\t")
            elif ch == "\r":
                out.append("\\r")
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        return '"' + "".join(out) + '"'
    return lit.lexical()


def _lexable(name: str) -> bool:
    return (bool(name) and name[0] in _NAME_START
            and all(c in _NAME_CHARS for c in name)
            and name not in _KEYWORDS and name not in ("true", "false"))


def pretty(expr: ClassExpression, kb: Optional[KnowledgeBase] = None) -> str:
    """Render an expression in query syntax; parses back to the same tree."""
    by_local = _index_names(kb) if kb is not None else {}

    def name_of(iri: Iri) -> str:
        short = local_name(iri)
        if _lexable(short) and (kb is None or len(by_local.get(short, [iri])) == 1):
            return short
        return f"<{iri}>"

    # precedence levels: or=0, and=1, unary=2, primary=3
    def render(e: ClassExpression) -> Tuple[str, int]:
        if isinstance(e, Named):
            return name_of(e.iri), 3
        if isinstance(e, Or):
            return " or ".join(wrap(c, 1) for c in e.children), 0
        if isinstance(e, And):
            return " and ".join(wrap(c, 2) for c in e.children), 1
        if isinstance(e, Not):
            return "not " + wrap(e.child, 2), 2
        if isinstance(e, Some):
            return f"{name_of(e.prop)} some {wrap(e.filler, 3)}", 3
        if isinstance(e, ValueObj):
            return f"{name_of(e.prop)} value {name_of(e.individual)}", 3
        if isinstance(e, ValueData):
            return f"{name_of(e.prop)} value {_render_literal(e.literal)}", 3
        if isinstance(e, DataCompare):
            return f"{name_of(e.prop)} {e.op.value} {_render_literal(e.literal)}", 3
        raise TypeError(f"unknown expression node {e!r}")

    def wrap(e: ClassExpression, need: int) -> str:
        text, level = render(e)
        return f"({text})" if level < need else text

    return render(expr)[0]

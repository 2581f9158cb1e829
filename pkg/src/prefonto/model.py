"""Core data model: entities, literals, class expressions, axioms, assertions.

The vocabulary is a small OWL-flavoured fragment: named classes, object and
data properties, named individuals, three datatypes, and class expressions
built from intersection, union, complement, existential restriction, value
restriction and data-range comparison.  Expressions, axioms and assertions are
frozen dataclasses so they hash, compare structurally and can live in sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple, Union

# An IRI is stored as its full string form, e.g. "http://purl.org/pmomh#MOGA".
Iri = str


def local_name(iri: Iri) -> str:
    """Fragment after the last '#', else after the last '/', else the IRI."""
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    if "/" in iri:
        return iri.rsplit("/", 1)[1]
    return iri


def namespace(iri: Iri) -> str:
    """Prefix up to and including the last '#' or '/'."""
    if "#" in iri:
        return iri.rsplit("#", 1)[0] + "#"
    if "/" in iri:
        return iri.rsplit("/", 1)[0] + "/"
    return ""


class EntityKind(Enum):
    CLASS = "Class"
    OBJECT_PROPERTY = "ObjectProperty"
    DATA_PROPERTY = "DataProperty"
    INDIVIDUAL = "NamedIndividual"


class Datatype(Enum):
    BOOLEAN = "boolean"
    INTEGER = "integer"
    STRING = "string"


@dataclass(frozen=True)
class Literal:
    value: Union[bool, int, str]
    datatype: Datatype

    def __post_init__(self) -> None:
        # bool is a subclass of int, so check it first.
        ok = {
            Datatype.BOOLEAN: lambda v: isinstance(v, bool),
            Datatype.INTEGER: lambda v: isinstance(v, int) and not isinstance(v, bool),
            Datatype.STRING: lambda v: isinstance(v, str),
        }[self.datatype](self.value)
        if not ok:
            raise TypeError(f"literal value {self.value!r} does not fit datatype {self.datatype.value}")

    def lexical(self) -> str:
        if self.datatype is Datatype.BOOLEAN:
            return "true" if self.value else "false"
        return str(self.value)


class KindConflict(Exception):
    """The same IRI was declared (or merged) with two different entity kinds."""

    def __init__(self, iri: Iri, existing: EntityKind, incoming: EntityKind) -> None:
        self.iri = iri
        self.existing = existing
        self.incoming = incoming
        super().__init__(f"{iri} already declared as {existing.value}, cannot redeclare as {incoming.value}")


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------

class ClassExpression:
    """Marker base; concrete nodes are the frozen dataclasses below."""


@dataclass(frozen=True)
class Named(ClassExpression):
    iri: Iri


@dataclass(frozen=True)
class And(ClassExpression):
    children: Tuple[ClassExpression, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("intersection needs at least two operands")


@dataclass(frozen=True)
class Or(ClassExpression):
    children: Tuple[ClassExpression, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("union needs at least two operands")


@dataclass(frozen=True)
class Not(ClassExpression):
    child: ClassExpression


@dataclass(frozen=True)
class Some(ClassExpression):
    """Existential restriction over an object property."""

    prop: Iri
    filler: ClassExpression


@dataclass(frozen=True)
class ValueObj(ClassExpression):
    """Object property has a specific named individual as value."""

    prop: Iri
    individual: Iri


@dataclass(frozen=True)
class ValueData(ClassExpression):
    """Data property has a specific literal as value."""

    prop: Iri
    literal: Literal


class CompareOp(Enum):
    EQ = "="
    NE = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    @property
    def is_ordering(self) -> bool:
        return self in (CompareOp.LT, CompareOp.LE, CompareOp.GT, CompareOp.GE)


@dataclass(frozen=True)
class DataCompare(ClassExpression):
    """Data property has some value standing in `op` relation to `literal`.

    Ordering operators are only meaningful for integer literals; validation
    flags anything else.
    """

    prop: Iri
    op: CompareOp
    literal: Literal


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

class Axiom:
    """Marker base for schema-level statements."""


@dataclass(frozen=True)
class SubClassOf(Axiom):
    sub: Iri
    sup: Iri


@dataclass(frozen=True)
class EquivalentClasses(Axiom):
    """A named class defined equivalent to a class expression."""

    name: Iri
    expr: ClassExpression


@dataclass(frozen=True)
class DisjointClasses(Axiom):
    a: Iri
    b: Iri

    def __post_init__(self) -> None:
        # Unordered pair: store in lexicographic order so the symmetric
        # duplicate collapses in a set.
        if self.b < self.a:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)


@dataclass(frozen=True)
class ObjectPropertyDomain(Axiom):
    prop: Iri
    cls: Iri


@dataclass(frozen=True)
class ObjectPropertyRange(Axiom):
    prop: Iri
    cls: Iri


@dataclass(frozen=True)
class DataPropertyDomain(Axiom):
    prop: Iri
    cls: Iri


@dataclass(frozen=True)
class DataPropertyRange(Axiom):
    prop: Iri
    datatype: Datatype


@dataclass(frozen=True)
class InverseProperties(Axiom):
    a: Iri
    b: Iri

    def __post_init__(self) -> None:
        if self.b < self.a:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)


# ---------------------------------------------------------------------------
# Assertions
# ---------------------------------------------------------------------------

class Assertion:
    """Marker base for instance-level statements."""


@dataclass(frozen=True)
class ClassAssertion(Assertion):
    cls: Iri
    individual: Iri


@dataclass(frozen=True)
class ObjectAssertion(Assertion):
    prop: Iri
    subject: Iri
    obj: Iri


@dataclass(frozen=True)
class DataAssertion(Assertion):
    prop: Iri
    subject: Iri
    literal: Literal


@dataclass(frozen=True)
class Annotation:
    """Uninterpreted triple kept for round-tripping (labels, comments, ...)."""

    subject: Iri
    prop: Iri
    value: Union[Iri, Literal]


# ---------------------------------------------------------------------------
# Diagnostics
# ---------------------------------------------------------------------------

class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    message: str
    subject: Optional[Iri] = None

    def __str__(self) -> str:
        if self.subject is not None:
            return f"{self.severity.value}: {self.message} [{self.subject}]"
        return f"{self.severity.value}: {self.message}"


# Expression constructors eligible to drive defined-class inference: the
# conjunctive-positive fragment (no union, complement or data comparison).
_INFERABLE_NODES = (Named, And, Some, ValueObj, ValueData)


def is_inferable_definition(expr: ClassExpression) -> bool:
    if isinstance(expr, Named):
        return True
    if isinstance(expr, And):
        return all(is_inferable_definition(c) for c in expr.children)
    if isinstance(expr, Some):
        return is_inferable_definition(expr.filler)
    if isinstance(expr, (ValueObj, ValueData)):
        return True
    return False


# ---------------------------------------------------------------------------
# Knowledge base
# ---------------------------------------------------------------------------

@dataclass
class KnowledgeBase:
    """Mutable container for declarations, axioms and assertions.

    Axioms and assertions are kept as sets: re-adding a fact is idempotent and
    two bases compare equal independent of insertion order.
    """

    declarations: Dict[Iri, EntityKind] = field(default_factory=dict)
    axioms: Set[Axiom] = field(default_factory=set)
    assertions: Set[Assertion] = field(default_factory=set)
    annotations: Set[Annotation] = field(default_factory=set)

    # -- construction -------------------------------------------------------

    def declare(self, iri: Iri, kind: EntityKind) -> None:
        existing = self.declarations.get(iri)
        if existing is None:
            self.declarations[iri] = kind
        elif existing is not kind:
            raise KindConflict(iri, existing, kind)

    def add_axiom(self, axiom: Axiom) -> None:
        self.axioms.add(axiom)

    def add_assertion(self, assertion: Assertion) -> None:
        self.assertions.add(assertion)

    def add_annotation(self, annotation: Annotation) -> None:
        self.annotations.add(annotation)

    # -- views ---------------------------------------------------------------

    def _of_kind(self, kind: EntityKind) -> List[Iri]:
        return sorted(i for i, k in self.declarations.items() if k is kind)

    @property
    def classes(self) -> List[Iri]:
        return self._of_kind(EntityKind.CLASS)

    @property
    def object_properties(self) -> List[Iri]:
        return self._of_kind(EntityKind.OBJECT_PROPERTY)

    @property
    def data_properties(self) -> List[Iri]:
        return self._of_kind(EntityKind.DATA_PROPERTY)

    @property
    def individuals(self) -> List[Iri]:
        return self._of_kind(EntityKind.INDIVIDUAL)

    def kind_of(self, iri: Iri) -> Optional[EntityKind]:
        return self.declarations.get(iri)

    def data_range(self, prop: Iri) -> Optional[Datatype]:
        for ax in self.axioms:
            if isinstance(ax, DataPropertyRange) and ax.prop == prop:
                return ax.datatype
        return None

    # -- validation ----------------------------------------------------------

    def validate(self) -> List[Diagnostic]:
        """Referential and typing checks; returns diagnostics, worst first."""
        diags: List[Diagnostic] = []

        def check(iri: Iri, kind: EntityKind, role: str) -> None:
            actual = self.declarations.get(iri)
            if actual is None:
                diags.append(Diagnostic(Severity.ERROR, f"undeclared {role}", iri))
            elif actual is not kind:
                diags.append(Diagnostic(
                    Severity.ERROR,
                    f"declared as {actual.value} but used as {role}", iri))

        def check_expr(expr: ClassExpression) -> None:
            if isinstance(expr, Named):
                check(expr.iri, EntityKind.CLASS, "class")
            elif isinstance(expr, (And, Or)):
                for child in expr.children:
                    check_expr(child)
            elif isinstance(expr, Not):
                check_expr(expr.child)
            elif isinstance(expr, Some):
                check(expr.prop, EntityKind.OBJECT_PROPERTY, "object property")
                check_expr(expr.filler)
            elif isinstance(expr, ValueObj):
                check(expr.prop, EntityKind.OBJECT_PROPERTY, "object property")
                check(expr.individual, EntityKind.INDIVIDUAL, "individual")
            elif isinstance(expr, ValueData):
                check(expr.prop, EntityKind.DATA_PROPERTY, "data property")
                check_lit(expr.prop, expr.literal)
            elif isinstance(expr, DataCompare):
                check(expr.prop, EntityKind.DATA_PROPERTY, "data property")
                check_lit(expr.prop, expr.literal)
                if expr.op.is_ordering and expr.literal.datatype is not Datatype.INTEGER:
                    diags.append(Diagnostic(
                        Severity.ERROR,
                        f"ordering comparison {expr.op.value} requires an integer literal",
                        expr.prop))

        def check_lit(prop: Iri, lit: Literal) -> None:
            declared = self.data_range(prop)
            if declared is not None and declared is not lit.datatype:
                diags.append(Diagnostic(
                    Severity.ERROR,
                    f"literal of datatype {lit.datatype.value} conflicts with declared range {declared.value}",
                    prop))

        for ax in sorted(self.axioms, key=repr):
            if isinstance(ax, SubClassOf):
                check(ax.sub, EntityKind.CLASS, "class")
                check(ax.sup, EntityKind.CLASS, "class")
            elif isinstance(ax, EquivalentClasses):
                check(ax.name, EntityKind.CLASS, "class")
                check_expr(ax.expr)
                if not is_inferable_definition(ax.expr):
                    diags.append(Diagnostic(
                        Severity.INFO,
                        "definition uses union, complement or comparison; "
                        "membership is not inferred for it", ax.name))
            elif isinstance(ax, DisjointClasses):
                check(ax.a, EntityKind.CLASS, "class")
                check(ax.b, EntityKind.CLASS, "class")
            elif isinstance(ax, (ObjectPropertyDomain, ObjectPropertyRange)):
                check(ax.prop, EntityKind.OBJECT_PROPERTY, "object property")
                check(ax.cls, EntityKind.CLASS, "class")
            elif isinstance(ax, DataPropertyDomain):
                check(ax.prop, EntityKind.DATA_PROPERTY, "data property")
                check(ax.cls, EntityKind.CLASS, "class")
            elif isinstance(ax, DataPropertyRange):
                check(ax.prop, EntityKind.DATA_PROPERTY, "data property")
            elif isinstance(ax, InverseProperties):
                check(ax.a, EntityKind.OBJECT_PROPERTY, "object property")
                check(ax.b, EntityKind.OBJECT_PROPERTY, "object property")

        for fact in sorted(self.assertions, key=repr):
            if isinstance(fact, ClassAssertion):
                check(fact.cls, EntityKind.CLASS, "class")
                check(fact.individual, EntityKind.INDIVIDUAL, "individual")
            elif isinstance(fact, ObjectAssertion):
                check(fact.prop, EntityKind.OBJECT_PROPERTY, "object property")
                check(fact.subject, EntityKind.INDIVIDUAL, "individual")
                check(fact.obj, EntityKind.INDIVIDUAL, "individual")
            elif isinstance(fact, DataAssertion):
                check(fact.prop, EntityKind.DATA_PROPERTY, "data property")
                check(fact.subject, EntityKind.INDIVIDUAL, "individual")
                check_lit(fact.prop, fact.literal)

        order = {Severity.ERROR: 0, Severity.WARNING: 1, Severity.INFO: 2}
        diags.sort(key=lambda d: (order[d.severity], d.message, d.subject or ""))
        return diags


def merge(*bases: KnowledgeBase) -> KnowledgeBase:
    """Union several bases into a fresh one; raises KindConflict on punning."""
    out = KnowledgeBase()
    for kb in bases:
        for iri, kind in kb.declarations.items():
            out.declare(iri, kind)
        out.axioms |= kb.axioms
        out.assertions |= kb.assertions
        out.annotations |= kb.annotations
    return out

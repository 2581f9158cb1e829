"""Forward-chaining materialization and consistency checking.

Seven monotone rules are applied to a fixpoint:

* R1  subclass reflexivity and transitivity over the named hierarchy
* R2  members of a class are members of its superclasses
* R3  property domains type the subject of a fact
* R4  object property ranges type the object of a fact
* R5  inverse properties propagate facts in both directions
* R6  a class defined equivalent to a named class subsumes it both ways
* R7  individuals satisfying a conjunctive-positive definition join the
      defined class (closed-world evaluation against the current state)

The rules are confluent, so the fixpoint does not depend on the order in
which they fire; ``rule_order`` exists so tests can shuffle it.  Every
derived fact records the rule and premises that first produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .model import (
    And,
    ClassAssertion,
    ClassExpression,
    DataAssertion,
    DataPropertyDomain,
    DisjointClasses,
    EquivalentClasses,
    InverseProperties,
    Iri,
    KnowledgeBase,
    Literal,
    Named,
    ObjectAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Some,
    SubClassOf,
    ValueData,
    ValueObj,
    is_inferable_definition,
    local_name,
)

DEFAULT_RULE_ORDER: Tuple[str, ...] = ("R1", "R2", "R3", "R4", "R5", "R6", "R7")


@dataclass(frozen=True)
class Inference:
    """How a fact entered the closure: a rule name and its premises."""

    rule: str
    premises: Tuple[object, ...] = ()


def class_universe(kb: KnowledgeBase) -> Set[Iri]:
    """Declared classes plus every class an axiom or assertion mentions."""
    out: Set[Iri] = set(kb.classes)

    def from_expr(expr: ClassExpression) -> None:
        if isinstance(expr, Named):
            out.add(expr.iri)
        elif isinstance(expr, And):
            for c in expr.children:
                from_expr(c)
        elif isinstance(expr, Some):
            from_expr(expr.filler)

    for ax in kb.axioms:
        if isinstance(ax, SubClassOf):
            out.update((ax.sub, ax.sup))
        elif isinstance(ax, EquivalentClasses):
            out.add(ax.name)
            from_expr(ax.expr)
        elif isinstance(ax, DisjointClasses):
            out.update((ax.a, ax.b))
        elif isinstance(ax, (ObjectPropertyDomain, ObjectPropertyRange, DataPropertyDomain)):
            out.add(ax.cls)
    for fact in kb.assertions:
        if isinstance(fact, ClassAssertion):
            out.add(fact.cls)
    return out


class MaterializedKB:
    """A knowledge base together with its rule closure and fact indexes."""

    def __init__(self, kb: KnowledgeBase, subclass_pairs: Set[Tuple[Iri, Iri]],
                 type_facts: Set[ClassAssertion], object_facts: Set[ObjectAssertion],
                 data_facts: Set[DataAssertion],
                 provenance: Dict[object, Inference]) -> None:
        self.kb = kb
        self.subclass_pairs = subclass_pairs
        self.type_facts = type_facts
        self.object_facts = object_facts
        self.data_facts = data_facts
        self.provenance = provenance

        self._subs: Dict[Iri, Set[Iri]] = {}
        self._sups: Dict[Iri, Set[Iri]] = {}
        for a, b in subclass_pairs:
            self._subs.setdefault(b, set()).add(a)
            self._sups.setdefault(a, set()).add(b)
        self._members: Dict[Iri, Set[Iri]] = {}
        self._types: Dict[Iri, Set[Iri]] = {}
        for fact in type_facts:
            self._members.setdefault(fact.cls, set()).add(fact.individual)
            self._types.setdefault(fact.individual, set()).add(fact.cls)
        self._obj_values: Dict[Tuple[Iri, Iri], Set[Iri]] = {}
        self._obj_pairs: Dict[Iri, Set[Tuple[Iri, Iri]]] = {}
        for fact in object_facts:
            self._obj_values.setdefault((fact.subject, fact.prop), set()).add(fact.obj)
            self._obj_pairs.setdefault(fact.prop, set()).add((fact.subject, fact.obj))
        self._data_values: Dict[Tuple[Iri, Iri], Set[Literal]] = {}
        self._data_pairs: Dict[Iri, Set[Tuple[Iri, Literal]]] = {}
        for fact in data_facts:
            self._data_values.setdefault((fact.subject, fact.prop), set()).add(fact.literal)
            self._data_pairs.setdefault(fact.prop, set()).add((fact.subject, fact.literal))

    # -- hierarchy -----------------------------------------------------------

    def is_subclass_of(self, sub: Iri, sup: Iri) -> bool:
        return (sub, sup) in self.subclass_pairs

    def subclasses_of(self, cls: Iri) -> Set[Iri]:
        """All classes at or below cls in the closure (includes cls itself)."""
        return set(self._subs.get(cls, set())) | {cls}

    def superclasses_of(self, cls: Iri) -> Set[Iri]:
        return set(self._sups.get(cls, set())) | {cls}

    # -- instances -----------------------------------------------------------

    def instances_of(self, cls: Iri) -> Set[Iri]:
        return set(self._members.get(cls, set()))

    def types_of(self, individual: Iri) -> Set[Iri]:
        return set(self._types.get(individual, set()))

    def object_values(self, subject: Iri, prop: Iri) -> Set[Iri]:
        return set(self._obj_values.get((subject, prop), set()))

    def data_values(self, subject: Iri, prop: Iri) -> Set[Literal]:
        return set(self._data_values.get((subject, prop), set()))

    def object_pairs(self, prop: Iri) -> Set[Tuple[Iri, Iri]]:
        return set(self._obj_pairs.get(prop, set()))

    def data_pairs(self, prop: Iri) -> Set[Tuple[Iri, Literal]]:
        return set(self._data_pairs.get(prop, set()))

    @property
    def individuals(self) -> List[Iri]:
        return self.kb.individuals


def materialize(kb: KnowledgeBase,
                rule_order: Sequence[str] = DEFAULT_RULE_ORDER) -> MaterializedKB:
    """Compute the rule closure of a knowledge base."""
    if sorted(rule_order) != sorted(DEFAULT_RULE_ORDER):
        raise ValueError("rule_order must be a permutation of the seven rules")

    universe = sorted(class_universe(kb))
    individuals = kb.individuals

    pairs: Set[Tuple[Iri, Iri]] = set()
    pairs_by_sub: Dict[Iri, Set[Iri]] = {}
    types: Set[ClassAssertion] = set()
    objs: Set[ObjectAssertion] = set()
    datas: Set[DataAssertion] = set()
    prov: Dict[object, Inference] = {}

    def add_pair(a: Iri, b: Iri, rule: str, premises: Tuple[object, ...]) -> bool:
        if (a, b) in pairs:
            return False
        pairs.add((a, b))
        pairs_by_sub.setdefault(a, set()).add(b)
        prov.setdefault(SubClassOf(a, b), Inference(rule, premises))
        return True

    def add_type(fact: ClassAssertion, rule: str, premises: Tuple[object, ...]) -> bool:
        if fact in types:
            return False
        types.add(fact)
        prov.setdefault(fact, Inference(rule, premises))
        return True

    def add_obj(fact: ObjectAssertion, rule: str, premises: Tuple[object, ...]) -> bool:
        if fact in objs:
            return False
        objs.add(fact)
        prov.setdefault(fact, Inference(rule, premises))
        return True

    # asserted facts and axioms seed the closure
    for fact in kb.assertions:
        if isinstance(fact, ClassAssertion):
            add_type(fact, "asserted", ())
        elif isinstance(fact, ObjectAssertion):
            add_obj(fact, "asserted", ())
        elif isinstance(fact, DataAssertion):
            datas.add(fact)
            prov.setdefault(fact, Inference("asserted", ()))

    sub_axioms: List[SubClassOf] = []
    equiv_named: List[EquivalentClasses] = []
    defined: List[EquivalentClasses] = []
    obj_domains: Dict[Iri, List[ObjectPropertyDomain]] = {}
    data_domains: Dict[Iri, List[DataPropertyDomain]] = {}
    obj_ranges: Dict[Iri, List[ObjectPropertyRange]] = {}
    inverses: List[InverseProperties] = []
    for ax in sorted(kb.axioms, key=repr):
        if isinstance(ax, SubClassOf):
            sub_axioms.append(ax)
        elif isinstance(ax, EquivalentClasses):
            if isinstance(ax.expr, Named):
                equiv_named.append(ax)
            elif is_inferable_definition(ax.expr):
                defined.append(ax)
        elif isinstance(ax, ObjectPropertyDomain):
            obj_domains.setdefault(ax.prop, []).append(ax)
        elif isinstance(ax, DataPropertyDomain):
            data_domains.setdefault(ax.prop, []).append(ax)
        elif isinstance(ax, ObjectPropertyRange):
            obj_ranges.setdefault(ax.prop, []).append(ax)
        elif isinstance(ax, InverseProperties):
            inverses.append(ax)

    for ax in sub_axioms:
        add_pair(ax.sub, ax.sup, "asserted", ())

    def rule_r1() -> bool:
        added = False
        for c in universe:
            added |= add_pair(c, c, "R1", ())
        for a, b in list(pairs):
            for c in list(pairs_by_sub.get(b, ())):
                if (a, c) not in pairs:
                    added |= add_pair(a, c, "R1",
                                      (SubClassOf(a, b), SubClassOf(b, c)))
        return added

    def rule_r2() -> bool:
        added = False
        for fact in list(types):
            for sup in list(pairs_by_sub.get(fact.cls, ())):
                if sup != fact.cls:
                    added |= add_type(ClassAssertion(sup, fact.individual), "R2",
                                      (fact, SubClassOf(fact.cls, sup)))
        return added

    def rule_r3() -> bool:
        added = False
        for fact in list(objs):
            for ax in obj_domains.get(fact.prop, ()):
                added |= add_type(ClassAssertion(ax.cls, fact.subject), "R3", (fact, ax))
        for dfact in datas:
            for dax in data_domains.get(dfact.prop, ()):
                added |= add_type(ClassAssertion(dax.cls, dfact.subject), "R3", (dfact, dax))
        return added

    def rule_r4() -> bool:
        added = False
        for fact in list(objs):
            for ax in obj_ranges.get(fact.prop, ()):
                added |= add_type(ClassAssertion(ax.cls, fact.obj), "R4", (fact, ax))
        return added

    def rule_r5() -> bool:
        added = False
        for fact in list(objs):
            for ax in inverses:
                other: Optional[Iri] = None
                if fact.prop == ax.a:
                    other = ax.b
                elif fact.prop == ax.b:
                    other = ax.a
                if other is not None:
                    added |= add_obj(ObjectAssertion(other, fact.obj, fact.subject),
                                     "R5", (fact, ax))
        return added

    def rule_r6() -> bool:
        added = False
        for ax in equiv_named:
            other = ax.expr.iri  # type: ignore[attr-defined]
            added |= add_pair(ax.name, other, "R6", (ax,))
            added |= add_pair(other, ax.name, "R6", (ax,))
        return added

    def rule_r7() -> bool:
        added = False
        obj_values: Dict[Tuple[Iri, Iri], List[Iri]] = {}
        for fact in objs:
            obj_values.setdefault((fact.subject, fact.prop), []).append(fact.obj)
        for vals in obj_values.values():
            vals.sort()

        def satisfies(ind: Iri, expr: ClassExpression) -> Optional[List[object]]:
            if isinstance(expr, Named):
                fact = ClassAssertion(expr.iri, ind)
                return [fact] if fact in types else None
            if isinstance(expr, And):
                witnesses: List[object] = []
                for child in expr.children:
                    sub = satisfies(ind, child)
                    if sub is None:
                        return None
                    witnesses.extend(sub)
                return witnesses
            if isinstance(expr, Some):
                for obj in obj_values.get((ind, expr.prop), ()):
                    sub = satisfies(obj, expr.filler)
                    if sub is not None:
                        return [ObjectAssertion(expr.prop, ind, obj)] + sub
                return None
            if isinstance(expr, ValueObj):
                fact = ObjectAssertion(expr.prop, ind, expr.individual)
                return [fact] if fact in objs else None
            if isinstance(expr, ValueData):
                dfact = DataAssertion(expr.prop, ind, expr.literal)
                return [dfact] if dfact in datas else None
            return None

        for ax in defined:
            for ind in individuals:
                fact = ClassAssertion(ax.name, ind)
                if fact in types:
                    continue
                witnesses = satisfies(ind, ax.expr)
                if witnesses is not None:
                    added |= add_type(fact, "R7", (ax, *witnesses))
        return added

    rules = {"R1": rule_r1, "R2": rule_r2, "R3": rule_r3, "R4": rule_r4,
             "R5": rule_r5, "R6": rule_r6, "R7": rule_r7}
    changed = True
    while changed:
        changed = False
        for name in rule_order:
            if rules[name]():
                changed = True

    return MaterializedKB(kb, pairs, types, objs, datas, prov)


# ---------------------------------------------------------------------------
# Hierarchy queries
# ---------------------------------------------------------------------------

def named_subclasses(mkb: MaterializedKB, cls: Iri, direct: bool = False) -> List[Iri]:
    """Proper subclasses of cls, sorted; direct keeps only immediate children.

    With equivalence cycles, "immediate" means no other result sits strictly
    between the child and cls, so mutually equivalent children all survive.
    """
    subs = {a for a in mkb.subclasses_of(cls) if a != cls}
    if direct:
        subs = {c for c in subs
                if not any(mkb.is_subclass_of(c, d) and not mkb.is_subclass_of(d, c)
                           for d in subs if d != c)}
    return sorted(subs)


def named_superclasses(mkb: MaterializedKB, cls: Iri, direct: bool = False) -> List[Iri]:
    sups = {b for b in mkb.superclasses_of(cls) if b != cls}
    if direct:
        sups = {c for c in sups
                if not any(mkb.is_subclass_of(d, c) and not mkb.is_subclass_of(c, d)
                           for d in sups if d != c)}
    return sorted(sups)


# ---------------------------------------------------------------------------
# Consistency
# ---------------------------------------------------------------------------

def _fmt(fact: object) -> str:
    if isinstance(fact, ClassAssertion):
        return f"{local_name(fact.individual)} a {local_name(fact.cls)}"
    if isinstance(fact, ObjectAssertion):
        return f"{local_name(fact.subject)} {local_name(fact.prop)} {local_name(fact.obj)}"
    if isinstance(fact, DataAssertion):
        return f"{local_name(fact.subject)} {local_name(fact.prop)} {fact.literal.lexical()}"
    if isinstance(fact, SubClassOf):
        return f"{local_name(fact.sub)} subClassOf {local_name(fact.sup)}"
    if isinstance(fact, EquivalentClasses):
        return f"{local_name(fact.name)} equivalentTo ..."
    if isinstance(fact, ObjectPropertyDomain) or isinstance(fact, DataPropertyDomain):
        return f"domain({local_name(fact.prop)}) = {local_name(fact.cls)}"
    if isinstance(fact, ObjectPropertyRange):
        return f"range({local_name(fact.prop)}) = {local_name(fact.cls)}"
    if isinstance(fact, InverseProperties):
        return f"{local_name(fact.a)} inverseOf {local_name(fact.b)}"
    if isinstance(fact, DisjointClasses):
        return f"{local_name(fact.a)} disjointWith {local_name(fact.b)}"
    return repr(fact)


def trace(mkb: MaterializedKB, fact: object) -> List[str]:
    """Derivation of a fact, premises before conclusions, one line per step."""
    lines: List[str] = []
    seen: Set[object] = set()

    def visit(f: object) -> None:
        if f in seen:
            return
        seen.add(f)
        inf = mkb.provenance.get(f)
        if inf is None:
            lines.append(f"{_fmt(f)}  [axiom]")
            return
        for premise in inf.premises:
            visit(premise)
        if inf.rule == "asserted":
            lines.append(f"{_fmt(f)}  [asserted]")
        else:
            lines.append(f"{_fmt(f)}  [{inf.rule}]")

    visit(fact)
    return lines


@dataclass(frozen=True)
class Violation:
    individual: Iri
    class_a: Iri
    class_b: Iri
    trace: Tuple[str, ...]


@dataclass
class ConsistencyReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations


def check_consistency(mkb: MaterializedKB) -> ConsistencyReport:
    """Find individuals typed by both sides of a disjointness axiom."""
    report = ConsistencyReport()
    disjoints = sorted((ax for ax in mkb.kb.axioms if isinstance(ax, DisjointClasses)),
                       key=lambda ax: (ax.a, ax.b))
    for ax in disjoints:
        both = mkb.instances_of(ax.a) & mkb.instances_of(ax.b)
        for ind in sorted(both):
            lines = trace(mkb, ClassAssertion(ax.a, ind))
            lines += trace(mkb, ClassAssertion(ax.b, ind))
            lines.append(f"{_fmt(ax)}  [axiom]")
            report.violations.append(Violation(ind, ax.a, ax.b, tuple(lines)))
    return report

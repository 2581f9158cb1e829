"""Independent reference implementations the property tests compare against.

Everything here is written as plain repeated-pass fixpoint loops over flat
tuple sets, deliberately sharing no code or data layout with the package
internals.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from prefonto.model import (
    And,
    ClassAssertion,
    ClassExpression,
    DataAssertion,
    DataPropertyDomain,
    Datatype,
    EquivalentClasses,
    InverseProperties,
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
)


class OracleClosure:
    """Plain containers holding one fully saturated knowledge base."""

    def __init__(self) -> None:
        self.pairs: Set[Tuple[str, str]] = set()
        self.types: Set[Tuple[str, str]] = set()  # (class, individual)
        self.objects: Set[Tuple[str, str, str]] = set()  # (prop, subj, obj)
        self.data: Set[Tuple[str, str, Literal]] = set()


def _mentioned_classes(kb: KnowledgeBase) -> Set[str]:
    found = set(kb.classes)

    def walk(expr: ClassExpression) -> None:
        if isinstance(expr, Named):
            found.add(expr.iri)
        elif isinstance(expr, (And,)):
            for child in expr.children:
                walk(child)
        elif isinstance(expr, Some):
            walk(expr.filler)
        elif hasattr(expr, "children"):
            for child in expr.children:  # type: ignore[attr-defined]
                walk(child)
        elif hasattr(expr, "child"):
            walk(expr.child)  # type: ignore[attr-defined]

    for ax in kb.axioms:
        if isinstance(ax, SubClassOf):
            found.add(ax.sub)
            found.add(ax.sup)
        elif isinstance(ax, EquivalentClasses):
            found.add(ax.name)
            walk(ax.expr)
        elif isinstance(ax, (ObjectPropertyDomain, ObjectPropertyRange, DataPropertyDomain)):
            found.add(ax.cls)
    for fact in kb.assertions:
        if isinstance(fact, ClassAssertion):
            found.add(fact.cls)
    return found


def _satisfies(closure: OracleClosure, ind: str, expr: ClassExpression) -> bool:
    if isinstance(expr, Named):
        return (expr.iri, ind) in closure.types
    if isinstance(expr, And):
        return all(_satisfies(closure, ind, c) for c in expr.children)
    if isinstance(expr, Some):
        return any(s == ind and _satisfies(closure, o, expr.filler)
                   for (p, s, o) in closure.objects if p == expr.prop)
    if isinstance(expr, ValueObj):
        return (expr.prop, ind, expr.individual) in closure.objects
    if isinstance(expr, ValueData):
        return (expr.prop, ind, expr.literal) in closure.data
    raise AssertionError(f"non-inferable node reached the oracle: {expr!r}")


def naive_materialize(kb: KnowledgeBase) -> OracleClosure:
    """Saturate by brute repetition: apply every inference shape until the
    four fact sets stop growing.  No rule objects, no premise tracking."""
    closure = OracleClosure()
    classes = _mentioned_classes(kb)
    closure.pairs = {(c, c) for c in classes}

    subclass_axioms = [ax for ax in kb.axioms if isinstance(ax, SubClassOf)]
    equivalents = [ax for ax in kb.axioms if isinstance(ax, EquivalentClasses)]
    obj_domains = [ax for ax in kb.axioms if isinstance(ax, ObjectPropertyDomain)]
    obj_ranges = [ax for ax in kb.axioms if isinstance(ax, ObjectPropertyRange)]
    data_domains = [ax for ax in kb.axioms if isinstance(ax, DataPropertyDomain)]
    inverses = [ax for ax in kb.axioms if isinstance(ax, InverseProperties)]

    for ax in subclass_axioms:
        closure.pairs.add((ax.sub, ax.sup))
    for ax in equivalents:
        if isinstance(ax.expr, Named):
            closure.pairs.add((ax.name, ax.expr.iri))
            closure.pairs.add((ax.expr.iri, ax.name))
    for fact in kb.assertions:
        if isinstance(fact, ClassAssertion):
            closure.types.add((fact.cls, fact.individual))
        elif isinstance(fact, ObjectAssertion):
            closure.objects.add((fact.prop, fact.subject, fact.obj))
        elif isinstance(fact, DataAssertion):
            closure.data.add((fact.prop, fact.subject, fact.literal))

    while True:
        size = (len(closure.pairs), len(closure.types), len(closure.objects))

        for (a, b) in list(closure.pairs):
            for (c, d) in list(closure.pairs):
                if b == c:
                    closure.pairs.add((a, d))
        for (cls, ind) in list(closure.types):
            for (sub, sup) in closure.pairs:
                if sub == cls:
                    closure.types.add((sup, ind))
        for ax in inverses:
            for (p, s, o) in list(closure.objects):
                if p == ax.a:
                    closure.objects.add((ax.b, o, s))
                elif p == ax.b:
                    closure.objects.add((ax.a, o, s))
        for ax in obj_domains:
            for (p, s, o) in list(closure.objects):
                if p == ax.prop:
                    closure.types.add((ax.cls, s))
        for ax in obj_ranges:
            for (p, s, o) in list(closure.objects):
                if p == ax.prop:
                    closure.types.add((ax.cls, o))
        for ax in data_domains:
            for (p, s, lit) in closure.data:
                if p == ax.prop:
                    closure.types.add((ax.cls, s))
        for ax in equivalents:
            if is_inferable_definition(ax.expr):
                for ind in kb.individuals:
                    if _satisfies(closure, ind, ax.expr):
                        closure.types.add((ax.name, ind))

        if (len(closure.pairs), len(closure.types), len(closure.objects)) == size:
            return closure


def floyd_warshall_closure(nodes: Iterable[str],
                           edges: Iterable[Tuple[str, str]]) -> Set[Tuple[str, str]]:
    """Reflexive-transitive reachability by the classic triple loop."""
    order = sorted(set(nodes))
    index = {n: i for i, n in enumerate(order)}
    n = len(order)
    reach = [[False] * n for _ in range(n)]
    for i in range(n):
        reach[i][i] = True
    for a, b in edges:
        reach[index[a]][index[b]] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return {(order[i], order[j]) for i in range(n) for j in range(n) if reach[i][j]}


# ---------------------------------------------------------------------------
# Query oracle: per-individual satisfaction over a saturated closure
# ---------------------------------------------------------------------------

def brute_force_holds(closure: OracleClosure, individuals: List[str],
                      ind: str, expr: ClassExpression) -> bool:
    from prefonto.model import CompareOp, DataCompare, Not, Or

    if isinstance(expr, Named):
        return (expr.iri, ind) in closure.types
    if isinstance(expr, And):
        return all(brute_force_holds(closure, individuals, ind, c)
                   for c in expr.children)
    if isinstance(expr, Or):
        return any(brute_force_holds(closure, individuals, ind, c)
                   for c in expr.children)
    if isinstance(expr, Not):
        return not brute_force_holds(closure, individuals, ind, expr.child)
    if isinstance(expr, Some):
        return any(brute_force_holds(closure, individuals, o, expr.filler)
                   for (p, s, o) in closure.objects
                   if p == expr.prop and s == ind)
    if isinstance(expr, ValueObj):
        return (expr.prop, ind, expr.individual) in closure.objects
    if isinstance(expr, ValueData):
        return (expr.prop, ind, expr.literal) in closure.data
    if isinstance(expr, DataCompare):
        values = [lit for (p, s, lit) in closure.data
                  if p == expr.prop and s == ind]
        want = expr.literal
        if expr.op is CompareOp.EQ:
            return any(lit == want for lit in values)
        if expr.op is CompareOp.NE:
            return any(lit.datatype is want.datatype and lit.value != want.value
                       for lit in values)
        if want.datatype is not Datatype.INTEGER:
            return False
        checks = {
            CompareOp.LT: lambda v: v < want.value,
            CompareOp.LE: lambda v: v <= want.value,
            CompareOp.GT: lambda v: v > want.value,
            CompareOp.GE: lambda v: v >= want.value,
        }
        return any(lit.datatype is Datatype.INTEGER and checks[expr.op](lit.value)
                   for lit in values)
    raise AssertionError(f"unknown node {expr!r}")


def brute_force_eval(closure: OracleClosure, individuals: List[str],
                     expr: ClassExpression) -> Set[str]:
    return {ind for ind in individuals
            if brute_force_holds(closure, individuals, ind, expr)}


# ---------------------------------------------------------------------------
# Analytics oracles: linear scans over the closure
# ---------------------------------------------------------------------------

def histogram_oracle(closure: OracleClosure, cls: str,
                     year_prop: str) -> Tuple[Dict[int, int], int, int]:
    members = sorted(ind for (c, ind) in closure.types if c == cls)
    counts: Dict[int, int] = {}
    unknown = 0
    for ind in members:
        years = sorted(lit.value for (p, s, lit) in closure.data
                       if p == year_prop and s == ind
                       and lit.datatype is Datatype.INTEGER)
        if years:
            counts[years[0]] = counts.get(years[0], 0) + 1
        else:
            unknown += 1
    return counts, unknown, len(members)


def top_cited_oracle(closure: OracleClosure, method_cls: str, cites_prop: str,
                     k: int) -> List[Tuple[str, int]]:
    methods = {ind for (c, ind) in closure.types if c == method_cls}
    rows = []
    for ind in sorted(methods):
        values = [lit.value for (p, s, lit) in closure.data
                  if p == cites_prop and s == ind
                  and lit.datatype is Datatype.INTEGER]
        if values:
            rows.append((ind, max(values)))
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows[:k] if k > 0 else []


def top_authors_oracle(closure: OracleClosure, method_cls: str,
                       author_prop: str, k: int) -> List[Tuple[str, int]]:
    methods = {ind for (c, ind) in closure.types if c == method_cls}
    counts: Dict[str, Set[str]] = {}
    for (p, s, o) in closure.objects:
        if p == author_prop and s in methods:
            counts.setdefault(o, set()).add(s)
    rows = [(author, len(works)) for author, works in counts.items()]
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows[:k] if k > 0 else []

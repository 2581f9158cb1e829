"""Analytics over a materialized knowledge base.

Everything here reduces to hierarchy membership and property lookups:
recommendation of methods by preference information and problem constraints,
publication-year histograms, citation and author rankings, a configurable
classification matrix, and gap discovery (empty matrix cells).  Output
structures are plain data; rendering (CSV, JSON, figures) stays at the edges.

Tie-breaking is lexicographic on the full IRI throughout, so every ranking
and every cell listing is deterministic for a given knowledge base.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .model import (
    And,
    ClassExpression,
    DataPropertyDomain,
    Datatype,
    EntityKind,
    Iri,
    Literal,
    Named,
    Some,
    ValueData,
    local_name,
)
from .query import evaluate
from .reasoner import MaterializedKB


class AnalyticsError(Exception):
    """Bad analytics input: unknown names, wrong kinds, malformed config."""


# Well-known local names the analytics are phrased in terms of.
METHOD_CLASS = "PMOMH"
PROBLEM_CLASS = "MOP"
PREFERENCE_CLASS = "PreferenceInformationFromDM"
PREFERENCE_PROP = "hasPreferenceInformationFromDM"
SOLVES_PROP = "canSolve"
SEARCH_PROP = "hasSearchAlgorithm"
YEAR_PROP = "hasPublishingYear"
CITATIONS_PROP = "hasCitationTimes"
AUTHOR_PROP = "hasAuthor"


def _resolve(mkb: MaterializedKB, name: str, kind: EntityKind, role: str) -> Iri:
    declarations = mkb.kb.declarations
    if name in declarations:
        candidates = [name]
    else:
        candidates = [i for i in sorted(declarations) if local_name(i) == name]
    fitting = [c for c in candidates if declarations[c] is kind]
    if len(fitting) == 1:
        return fitting[0]
    if len(fitting) > 1:
        raise AnalyticsError(f"'{name}' is ambiguous")
    raise AnalyticsError(f"no {role} named '{name}'")


def _resolve_class(mkb: MaterializedKB, name: str) -> Iri:
    return _resolve(mkb, name, EntityKind.CLASS, "class")


# ---------------------------------------------------------------------------
# Recommendation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Recommendation:
    expression: ClassExpression
    methods: Tuple[Iri, ...]


def recommend(mkb: MaterializedKB, preference: str,
              constraints: Sequence[Tuple[str, Literal]] = ()) -> Recommendation:
    """Methods accepting the given preference information and, when problem
    constraints are supplied, able to solve a problem satisfying all of them.

    The recommendation is literally the evaluation of a class expression;
    the expression is returned so callers can inspect or reuse it.  Without
    constraints the solving conjunct is omitted entirely.
    """
    method_cls = _resolve_class(mkb, METHOD_CLASS)
    problem_cls = _resolve_class(mkb, PROBLEM_CLASS)
    pref_root = _resolve_class(mkb, PREFERENCE_CLASS)
    pref_prop = _resolve(mkb, PREFERENCE_PROP, EntityKind.OBJECT_PROPERTY, "object property")
    solves_prop = _resolve(mkb, SOLVES_PROP, EntityKind.OBJECT_PROPERTY, "object property")

    pref_cls = _resolve_class(mkb, preference)
    if not mkb.is_subclass_of(pref_cls, pref_root):
        raise AnalyticsError(
            f"'{preference}' is not a kind of {PREFERENCE_CLASS}")

    conjuncts: List[ClassExpression] = [
        Named(method_cls),
        Some(pref_prop, Named(pref_cls)),
    ]
    if constraints:
        problem_parts: List[ClassExpression] = [Named(problem_cls)]
        for prop_name, literal in constraints:
            prop = _resolve(mkb, prop_name, EntityKind.DATA_PROPERTY, "data property")
            domains = [ax.cls for ax in mkb.kb.axioms
                       if isinstance(ax, DataPropertyDomain) and ax.prop == prop]
            if not any(mkb.is_subclass_of(d, problem_cls) for d in domains):
                raise AnalyticsError(
                    f"constraint property '{prop_name}' does not apply to problems")
            declared = mkb.kb.data_range(prop)
            if declared is not None and declared is not literal.datatype:
                raise AnalyticsError(
                    f"constraint value for '{prop_name}' must be of datatype "
                    f"{declared.value}")
            problem_parts.append(ValueData(prop, literal))
        conjuncts.append(Some(solves_prop, And(tuple(problem_parts))))

    expression = And(tuple(conjuncts))
    return Recommendation(expression, tuple(sorted(evaluate(mkb, expression))))


# ---------------------------------------------------------------------------
# Bibliometrics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YearHistogram:
    cls: Iri
    counts: Tuple[Tuple[int, int], ...]  # (year, methods) ascending
    unknown: int
    total: int

    def conserved(self) -> bool:
        return sum(n for _, n in self.counts) + self.unknown == self.total


def year_histogram(mkb: MaterializedKB, cls: Optional[str] = None) -> YearHistogram:
    """Publication counts per year for the instances of a class.

    An individual with several year values counts once, under the earliest;
    individuals without an integer year value land in the unknown bucket.
    """
    cls_iri = _resolve_class(mkb, cls if cls is not None else METHOD_CLASS)
    year_prop = _resolve(mkb, YEAR_PROP, EntityKind.DATA_PROPERTY, "data property")
    members = mkb.instances_of(cls_iri)
    counts: Dict[int, int] = {}
    unknown = 0
    for ind in members:
        years = [lit.value for lit in mkb.data_values(ind, year_prop)
                 if lit.datatype is Datatype.INTEGER]
        if years:
            year = min(years)  # type: ignore[type-var]
            counts[year] = counts.get(year, 0) + 1
        else:
            unknown += 1
    ordered = tuple(sorted(counts.items()))
    return YearHistogram(cls_iri, ordered, unknown, len(members))


def top_cited(mkb: MaterializedKB, k: int) -> List[Tuple[Iri, int]]:
    """The k most cited methods; methods without a citation count are
    excluded rather than treated as zero."""
    method_cls = _resolve_class(mkb, METHOD_CLASS)
    cites_prop = _resolve(mkb, CITATIONS_PROP, EntityKind.DATA_PROPERTY, "data property")
    scored: List[Tuple[Iri, int]] = []
    for ind in mkb.instances_of(method_cls):
        values = [lit.value for lit in mkb.data_values(ind, cites_prop)
                  if lit.datatype is Datatype.INTEGER]
        if values:
            scored.append((ind, max(values)))  # type: ignore[type-var]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[: max(k, 0)]


def top_authors(mkb: MaterializedKB, k: int) -> List[Tuple[Iri, int]]:
    """Authors ranked by how many distinct methods they are recorded on."""
    method_cls = _resolve_class(mkb, METHOD_CLASS)
    author_prop = _resolve(mkb, AUTHOR_PROP, EntityKind.OBJECT_PROPERTY, "object property")
    methods = mkb.instances_of(method_cls)
    per_author: Dict[Iri, set] = {}
    for subject, author in mkb.object_pairs(author_prop):
        if subject in methods:
            per_author.setdefault(author, set()).add(subject)
    scored = [(author, len(ms)) for author, ms in per_author.items()]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[: max(k, 0)]


# ---------------------------------------------------------------------------
# Classification matrix and gaps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixConfig:
    rows: Tuple[Tuple[str, str], ...]  # (label, class name)
    columns: Tuple[Tuple[str, Tuple[str, ...]], ...]  # (label, class names)

    @staticmethod
    def from_json(text: str) -> "MatrixConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise AnalyticsError(f"malformed matrix config: {exc}") from None
        try:
            rows = tuple((str(r["label"]), str(r["class"])) for r in raw["rows"])
            columns = tuple((str(c["label"]), tuple(str(x) for x in c["classes"]))
                            for c in raw["columns"])
        except (KeyError, TypeError) as exc:
            raise AnalyticsError(f"malformed matrix config: {exc!r}") from None
        if not rows or not columns:
            raise AnalyticsError("matrix config needs at least one row and one column")
        return MatrixConfig(rows, columns)

    @staticmethod
    def load(path: Union[str, Path]) -> "MatrixConfig":
        return MatrixConfig.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class Matrix:
    row_labels: Tuple[str, ...]
    column_labels: Tuple[str, ...]
    cells: Tuple[Tuple[Tuple[str, ...], ...], ...]  # local names, sorted

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(self.column_labels))
        for label, row in zip(self.row_labels, self.cells):
            writer.writerow([label] + [";".join(cell) for cell in row])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "columns": list(self.column_labels),
            "rows": list(self.row_labels),
            "cells": [[list(cell) for cell in row] for row in self.cells],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def classification_matrix(mkb: MaterializedKB, config: MatrixConfig) -> Matrix:
    """Classify methods by preference information (rows) against search
    algorithm family (columns).

    Row membership: the method takes preference information of the row class.
    Column membership: the method's search algorithm is an instance of one of
    the column classes, or the method itself is typed by one directly.
    """
    method_cls = _resolve_class(mkb, METHOD_CLASS)
    pref_prop = _resolve(mkb, PREFERENCE_PROP, EntityKind.OBJECT_PROPERTY, "object property")
    search_prop = _resolve(mkb, SEARCH_PROP, EntityKind.OBJECT_PROPERTY, "object property")
    methods = mkb.instances_of(method_cls)

    row_sets = []
    for _, row_cls_name in config.rows:
        row_cls = _resolve_class(mkb, row_cls_name)
        row_sets.append(methods & evaluate(mkb, Some(pref_prop, Named(row_cls))))

    col_sets = []
    for _, col_cls_names in config.columns:
        col_classes = [_resolve_class(mkb, n) for n in col_cls_names]
        members: set = set()
        for cls in col_classes:
            family = mkb.instances_of(cls)
            members |= methods & family
            members |= {m for m in methods
                        if mkb.object_values(m, search_prop) & family}
        col_sets.append(members)

    cells = tuple(
        tuple(tuple(sorted(local_name(m) for m in row_set & col_set))
              for col_set in col_sets)
        for row_set in row_sets)
    return Matrix(tuple(label for label, _ in config.rows),
                  tuple(label for label, _ in config.columns), cells)


def find_gaps(mkb: MaterializedKB, config: MatrixConfig) -> List[Tuple[str, str]]:
    """Empty matrix cells in row-major order: unexplored combinations."""
    matrix = classification_matrix(mkb, config)
    return [(row_label, col_label)
            for row_label, row in zip(matrix.row_labels, matrix.cells)
            for col_label, cell in zip(matrix.column_labels, row)
            if not cell]


# ---------------------------------------------------------------------------
# Relation listings
# ---------------------------------------------------------------------------

# Cross-reference properties a method review cares about, in display order.
RELATION_PROPS = (
    "hasComparison",
    "hasExtension",
    "isExtensionOf",
    "hasInteractiveVersion",
    "isInteractiveVersionOf",
    "useLibrary",
    "useLanguage",
)
REFERENCE_PROP = "hasReference"


def relation_report(mkb: MaterializedKB, individual: str) -> Dict[str, List[str]]:
    """Asserted and inferred cross-reference facts of one individual, grouped
    by property; groups for absent facts are empty lists, not missing keys.

    Object targets are local names; the reference group holds the raw string
    values.  A property the knowledge base does not declare yields an empty
    group too, so the report shape is stable across inputs.
    """
    ind = _resolve(mkb, individual, EntityKind.INDIVIDUAL, "individual")
    report: Dict[str, List[str]] = {}
    for prop_name in RELATION_PROPS:
        try:
            prop = _resolve(mkb, prop_name, EntityKind.OBJECT_PROPERTY, "object property")
        except AnalyticsError:
            report[prop_name] = []
            continue
        report[prop_name] = sorted(local_name(o) for o in mkb.object_values(ind, prop))
    try:
        ref = _resolve(mkb, REFERENCE_PROP, EntityKind.DATA_PROPERTY, "data property")
        values = sorted(str(lit.value) for lit in mkb.data_values(ind, ref)
                        if lit.datatype is Datatype.STRING)
    except AnalyticsError:
        values = []
    report[REFERENCE_PROP] = values
    return report

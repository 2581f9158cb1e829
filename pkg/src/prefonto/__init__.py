"""Knowledge-base engine for preference-based multi-objective
metaheuristics: a small ontology formalism (parse, validate, serialize),
rule-based materialization with provenance, a class-expression query
language, and analytics over the bundled method corpus."""

from .analytics import (
    AnalyticsError,
    Matrix,
    MatrixConfig,
    Recommendation,
    YearHistogram,
    classification_matrix,
    find_gaps,
    recommend,
    relation_report,
    top_authors,
    top_cited,
    year_histogram,
)
from .corpus import (
    CorpusError,
    Manifest,
    ManifestMismatch,
    check_stats,
    corpus_dir,
    corpus_stats,
    load_corpus,
    load_manifest,
)
from .model import (
    And,
    Annotation,
    Assertion,
    Axiom,
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
    local_name,
    merge,
)
from .query import (
    QueryParseError,
    ResolutionError,
    define_class,
    evaluate,
    parse_query,
    pretty,
    resolve,
    subclass_closure,
    superclass_closure,
)
from .reasoner import (
    ConsistencyReport,
    Inference,
    MaterializedKB,
    Violation,
    check_consistency,
    materialize,
    named_subclasses,
    named_superclasses,
    trace,
)
from .turtle import (
    Graph,
    ParseError,
    Triple,
    isomorphic,
    merge_graphs,
    parse_graph,
    parse_kb,
    recognize,
    serialize,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

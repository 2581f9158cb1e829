"""Command-line interface.

Subcommands cover the working cycle over the bundled corpus or
user-supplied documents: validate, query, recommend, report (matrix,
cited, authors, years), gaps and stats.  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 domain error
(inconsistency, unknown entity, manifest mismatch), 2 usage or parse
error.  Output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .analytics import (
    AnalyticsError,
    MatrixConfig,
    classification_matrix,
    find_gaps,
    recommend,
    top_authors,
    top_cited,
    year_histogram,
)
from .corpus import (
    COUNTED_CLASSES,
    CorpusError,
    bundled_paths,
    corpus_stats,
    load_corpus,
    matrix_config_path,
)
from .model import Datatype, KindConflict, Literal, Severity, local_name
from .query import (
    QueryParseError,
    ResolutionError,
    evaluate,
    parse_query,
    resolve,
    subclass_closure,
    superclass_closure,
)
from .reasoner import MaterializedKB
from .turtle import ParseError, merge_graphs, parse_graph, recognize


def _parse_literal(raw: str) -> Literal:
    if raw == "true":
        return Literal(True, Datatype.BOOLEAN)
    if raw == "false":
        return Literal(False, Datatype.BOOLEAN)
    if re.fullmatch(r"[+-]?[0-9]+", raw):
        return Literal(int(raw), Datatype.INTEGER)
    if len(raw) >= 2 and raw.startswith('"') and raw.endswith('"'):
        raw = raw[1:-1]
    return Literal(raw, Datatype.STRING)


def _constraint(text: str) -> Tuple[str, Literal]:
    prop, sep, raw = text.partition("=")
    if not sep or not prop:
        raise argparse.ArgumentTypeError(
            f"constraint must look like PROP=LITERAL, got {text!r}")
    return prop, _parse_literal(raw)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefonto",
        description="Knowledge-base tooling for preference-based "
                    "multi-objective metaheuristics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_files(p: argparse.ArgumentParser) -> None:
        p.add_argument("files", nargs="*",
                       help="knowledge-base documents (default: bundled corpus)")

    p = sub.add_parser("validate", help="parse and check documents")
    add_files(p)
    p.add_argument("--strict", action="store_true",
                   help="treat unsupported reserved vocabulary as an error")

    p = sub.add_parser("query", help="evaluate a class expression")
    add_files(p)
    p.add_argument("-q", "--query", required=True, dest="expr")
    p.add_argument("--mode", choices=("instances", "subclasses", "superclasses"),
                   default="instances")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("recommend", help="methods matching preference and constraints")
    add_files(p)
    p.add_argument("--preference", required=True)
    p.add_argument("--constraint", action="append", type=_constraint,
                   default=[], metavar="PROP=LITERAL")
    p.add_argument("--format", choices=("text", "json"), default="text")

    report = sub.add_parser("report", help="tabular and ranked reports")
    rsub = report.add_subparsers(dest="report_kind", required=True)

    p = rsub.add_parser("matrix", help="preference-by-family classification")
    add_files(p)
    p.add_argument("--config", help="matrix configuration (default: bundled)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", help="also render a heatmap image to this path")

    p = rsub.add_parser("cited", help="most cited methods")
    add_files(p)
    p.add_argument("-k", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--plot", help="also render a bar chart to this path")

    p = rsub.add_parser("authors", help="authors by distinct methods")
    add_files(p)
    p.add_argument("-k", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--plot", help="also render a bar chart to this path")

    p = rsub.add_parser("years", help="publications per year")
    add_files(p)
    p.add_argument("--class", dest="cls", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--plot", help="also render a bar chart to this path")

    p = sub.add_parser("gaps", help="empty classification cells")
    add_files(p)
    p.add_argument("--config", help="matrix configuration (default: bundled)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("stats", help="instance counts of the key classes")
    add_files(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _load(args: argparse.Namespace) -> MaterializedKB:
    if args.files:
        return load_corpus(args.files, strict=getattr(args, "strict", False))
    return load_corpus()


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _envelope(args: argparse.Namespace, result: object) -> str:
    command = args.command
    if getattr(args, "report_kind", None):
        command = f"{args.command} {args.report_kind}"
    payload = {"command": command, "inputs": list(args.files), "result": result}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _config(args: argparse.Namespace) -> MatrixConfig:
    path = args.config if args.config else matrix_config_path()
    try:
        return MatrixConfig.load(path)
    except OSError as exc:
        raise CorpusError(f"cannot read matrix config: {exc}") from None


def _cmd_validate(args: argparse.Namespace) -> int:
    paths = [Path(p) for p in args.files] if args.files else bundled_paths()
    graphs = []
    for path in paths:
        try:
            graphs.append(parse_graph(path.read_bytes()))
        except OSError as exc:
            raise CorpusError(str(exc)) from None
    kb, diagnostics = recognize(merge_graphs(*graphs), strict=args.strict)
    diags = list(diagnostics) + kb.validate()
    for diag in diags:
        print(diag, file=sys.stderr)
    _emit(f"{len(diags)} diagnostics\n")
    return 1 if any(d.severity is Severity.ERROR for d in diags) else 0


def _cmd_query(args: argparse.Namespace) -> int:
    mkb = _load(args)
    expr = resolve(parse_query(args.expr), mkb.kb)
    if args.mode == "instances":
        names = [local_name(i) for i in sorted(evaluate(mkb, expr))]
    elif args.mode == "subclasses":
        names = [local_name(c) for c in subclass_closure(mkb, expr)]
    else:
        names = [local_name(c) for c in superclass_closure(mkb, expr)]
    if args.format == "json":
        _emit(_envelope(args, names))
    else:
        _emit("".join(name + "\n" for name in names))
    return 0


def _cmd_recommend(args: argparse.Namespace) -> int:
    mkb = _load(args)
    rec = recommend(mkb, args.preference, args.constraint)
    names = [local_name(m) for m in rec.methods]
    if args.format == "json":
        _emit(_envelope(args, names))
    else:
        _emit("".join(name + "\n" for name in names))
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    mkb = _load(args)
    matrix = classification_matrix(mkb, _config(args))
    if args.format == "json":
        result = {
            "columns": list(matrix.column_labels),
            "rows": list(matrix.row_labels),
            "cells": [[list(cell) for cell in row] for row in matrix.cells],
        }
        _emit(_envelope(args, result))
    else:
        _emit(matrix.to_csv())
    if args.plot:
        from .figures import plot_matrix
        plot_matrix(matrix, args.plot)
    return 0


def _cmd_cited(args: argparse.Namespace) -> int:
    mkb = _load(args)
    ranked = top_cited(mkb, args.k)
    if args.format == "json":
        result = [{"method": local_name(i), "citations": n} for i, n in ranked]
        _emit(_envelope(args, result))
    else:
        _emit("".join(f"{local_name(i)}\t{n}\n" for i, n in ranked))
    if args.plot:
        from .figures import plot_ranking
        plot_ranking(ranked, args.plot, "citations")
    return 0


def _cmd_authors(args: argparse.Namespace) -> int:
    mkb = _load(args)
    ranked = top_authors(mkb, args.k)
    if args.format == "json":
        result = [{"author": local_name(i), "methods": n} for i, n in ranked]
        _emit(_envelope(args, result))
    else:
        _emit("".join(f"{local_name(i)}\t{n}\n" for i, n in ranked))
    if args.plot:
        from .figures import plot_ranking
        plot_ranking(ranked, args.plot, "methods")
    return 0


def _cmd_years(args: argparse.Namespace) -> int:
    mkb = _load(args)
    hist = year_histogram(mkb, args.cls)
    if args.format == "json":
        result = {
            "class": local_name(hist.cls),
            "counts": [[year, n] for year, n in hist.counts],
            "unknown": hist.unknown,
            "total": hist.total,
        }
        _emit(_envelope(args, result))
    else:
        lines = [f"{year}\t{n}" for year, n in hist.counts]
        if hist.unknown:
            lines.append(f"unknown\t{hist.unknown}")
        lines.append(f"total\t{hist.total}")
        _emit("".join(line + "\n" for line in lines))
    if args.plot:
        from .figures import plot_year_histogram
        plot_year_histogram(hist, args.plot)
    return 0


def _cmd_gaps(args: argparse.Namespace) -> int:
    mkb = _load(args)
    gaps = find_gaps(mkb, _config(args))
    if args.format == "json":
        _emit(_envelope(args, [[row, col] for row, col in gaps]))
    else:
        _emit("".join(f"{row}, {col}\n" for row, col in gaps))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    mkb = _load(args)
    counts = corpus_stats(mkb)
    if args.format == "json":
        _emit(_envelope(args, counts))
    else:
        _emit("".join(f"{name}\t{counts[name]}\n" for name in COUNTED_CLASSES))
    return 0


_COMMANDS = {
    ("validate", None): _cmd_validate,
    ("query", None): _cmd_query,
    ("recommend", None): _cmd_recommend,
    ("report", "matrix"): _cmd_matrix,
    ("report", "cited"): _cmd_cited,
    ("report", "authors"): _cmd_authors,
    ("report", "years"): _cmd_years,
    ("gaps", None): _cmd_gaps,
    ("stats", None): _cmd_stats,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = _COMMANDS[(args.command, getattr(args, "report_kind", None))]
    try:
        return handler(args)
    except (ParseError, QueryParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CorpusError, AnalyticsError, ResolutionError, KindConflict) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ImportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

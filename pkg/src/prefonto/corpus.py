"""Bundled knowledge-base loading and integrity checks.

The package ships a schema document, an individuals document, a manifest
(file hashes plus expected instance counts) and a matrix configuration.
Loading merges the parsed documents, interprets them once, validates,
materializes and checks consistency; any error-severity finding aborts.
PREFONTO_CORPUS_DIR points the loader at a different directory.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .model import Severity, local_name
from .reasoner import MaterializedKB, check_consistency, materialize
from .turtle import merge_graphs, parse_graph, recognize

SCHEMA_FILE = "schema.ttl"
INDIVIDUALS_FILE = "individuals.ttl"
MANIFEST_FILE = "manifest.json"
MATRIX_CONFIG_FILE = "table5-config.json"

# Classes whose instance counts the manifest pins down.
COUNTED_CLASSES = (
    "PMOMH", "MOP", "ImplementationLibrary", "Researcher", "PreferenceModel",
)


class CorpusError(Exception):
    """The corpus could not be loaded in a trustworthy state."""


class ManifestMismatch(CorpusError):
    """Instance counts diverge from the manifest."""

    def __init__(self, divergences: Sequence[str]) -> None:
        self.divergences = list(divergences)
        super().__init__("manifest mismatch: " + "; ".join(self.divergences))


@dataclass(frozen=True)
class Manifest:
    version: str
    namespace: str
    files: Tuple[Tuple[str, str], ...]  # (filename, sha256) pairs
    expected_counts: Tuple[Tuple[str, int], ...]  # (class iri, count) pairs

    @staticmethod
    def from_json(text: str) -> "Manifest":
        try:
            raw = json.loads(text)
            version = str(raw["version"])
            namespace = str(raw["namespace"])
            files = tuple(sorted((str(k), str(v)) for k, v in raw["files"].items()))
            counts = tuple(sorted(
                (str(k), int(v)) for k, v in raw["expected_counts"].items()))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"malformed manifest: {exc!r}") from None
        return Manifest(version, namespace, files, counts)


def corpus_dir() -> Path:
    """Directory holding the corpus files; the environment can override."""
    override = os.environ.get("PREFONTO_CORPUS_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))


def load_manifest(directory: Optional[Union[str, Path]] = None) -> Manifest:
    directory = Path(directory) if directory is not None else corpus_dir()
    path = directory / MANIFEST_FILE
    if not path.is_file():
        raise CorpusError(f"missing manifest: {path}")
    return Manifest.from_json(path.read_text(encoding="utf-8"))


def bundled_paths(directory: Optional[Union[str, Path]] = None) -> List[Path]:
    directory = Path(directory) if directory is not None else corpus_dir()
    return [directory / SCHEMA_FILE, directory / INDIVIDUALS_FILE]


def matrix_config_path(directory: Optional[Union[str, Path]] = None) -> Path:
    directory = Path(directory) if directory is not None else corpus_dir()
    return directory / MATRIX_CONFIG_FILE


def _verify_hashes(directory: Path, manifest: Manifest) -> None:
    for name, expected in manifest.files:
        path = directory / name
        if not path.is_file():
            raise CorpusError(f"missing corpus file: {path}")
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        if digest != expected:
            raise CorpusError(
                f"corpus file {name} does not match its manifest hash")


def load_corpus(paths: Optional[Sequence[Union[str, Path]]] = None, *,
                strict: bool = False) -> MaterializedKB:
    """Parse, merge, interpret, validate and materialize knowledge bases.

    Without explicit paths the bundled corpus is loaded, its file hashes
    and instance counts are checked against the manifest.  Every
    error-severity finding raises CorpusError; warnings do not.
    """
    manifest: Optional[Manifest] = None
    if paths is None:
        directory = corpus_dir()
        manifest = load_manifest(directory)
        _verify_hashes(directory, manifest)
        paths = bundled_paths(directory)

    graphs = []
    for path in paths:
        path = Path(path)
        if not path.is_file():
            raise CorpusError(f"no such file: {path}")
        graphs.append(parse_graph(path.read_bytes()))

    kb, diagnostics = recognize(merge_graphs(*graphs), strict=strict)
    errors = [str(d) for d in diagnostics if d.severity is Severity.ERROR]
    errors += [str(d) for d in kb.validate() if d.severity is Severity.ERROR]
    if errors:
        raise CorpusError("; ".join(errors))

    mkb = materialize(kb)
    report = check_consistency(mkb)
    if not report.consistent:
        lines = [f"{local_name(v.individual)} is in disjoint classes "
                 f"{local_name(v.class_a)} and {local_name(v.class_b)}"
                 for v in report.violations]
        raise CorpusError("inconsistent: " + "; ".join(lines))

    if manifest is not None:
        check_stats(mkb, manifest)
    return mkb


def corpus_stats(mkb: MaterializedKB,
                 classes: Sequence[str] = COUNTED_CLASSES) -> Dict[str, int]:
    """Instance counts per class local name; undeclared classes count zero."""
    counts: Dict[str, int] = {}
    for name in classes:
        candidates = [i for i in mkb.kb.classes if local_name(i) == name]
        counts[name] = len(mkb.instances_of(candidates[0])) if candidates else 0
    return counts


def check_stats(mkb: MaterializedKB, manifest: Manifest) -> Dict[str, int]:
    """Compare actual counts to the manifest; raise on any divergence."""
    expected = {local_name(cls): n for cls, n in manifest.expected_counts}
    actual = corpus_stats(mkb, tuple(sorted(expected)))
    divergent = [f"{name}: expected {expected[name]}, found {actual[name]}"
                 for name in sorted(expected) if actual[name] != expected[name]]
    if divergent:
        raise ManifestMismatch(divergent)
    return actual

"""Bundled catalogue: loading, manifest checks, statistics, tamper detection."""

import shutil

import pytest

from prefonto.corpus import (
    COUNTED_CLASSES,
    CorpusError,
    ManifestMismatch,
    bundled_paths,
    check_stats,
    corpus_dir,
    corpus_stats,
    load_corpus,
    load_manifest,
    matrix_config_path,
)
from prefonto.model import ClassAssertion, EntityKind, KnowledgeBase, merge
from prefonto.reasoner import check_consistency, materialize
from prefonto.turtle import parse_kb

PM = "http://purl.org/pmomh#"


class TestBundledLoad:
    def test_loads_clean_and_consistent(self, corpus):
        assert corpus.kb.validate() == []
        assert check_consistency(corpus).consistent

    def test_strict_mode_also_clean(self):
        mkb = load_corpus(strict=True)
        assert mkb.kb.validate() == []

    def test_expected_population(self, corpus):
        assert corpus_stats(corpus) == {
            "PMOMH": 85, "MOP": 4, "ImplementationLibrary": 4,
            "Researcher": 84, "PreferenceModel": 12}

    def test_manifest_agrees_with_files(self, corpus):
        manifest = load_manifest()
        assert manifest.version == "1.0.0"
        assert manifest.namespace == PM
        check_stats(corpus, manifest)  # should not raise
        assert {name for name, _ in manifest.files} == {
            p.name for p in bundled_paths()}

    def test_matrix_config_is_bundled(self):
        assert matrix_config_path().name == "table5-config.json"
        assert matrix_config_path().exists()


class TestExplicitPaths:
    def test_schema_alone_is_a_valid_empty_catalogue(self):
        schema = corpus_dir() / "schema.ttl"
        mkb = load_corpus([schema])
        assert mkb.kb.validate() == []
        assert mkb.instances_of(PM + "PMOMH") == set()
        assert corpus_stats(mkb) == {name: 0 for name in COUNTED_CLASSES}

    def test_explicit_pair_equals_bundled(self, corpus):
        mkb = load_corpus(list(bundled_paths()))
        assert mkb.type_facts == corpus.type_facts
        assert mkb.subclass_pairs == corpus.subclass_pairs

    def test_missing_file_is_a_corpus_error(self, tmp_path):
        with pytest.raises(CorpusError):
            load_corpus([tmp_path / "nowhere.ttl"])

    def test_invalid_content_is_a_corpus_error(self, tmp_path):
        bad = tmp_path / "bad.ttl"
        bad.write_text("@prefix : <http://e.org/> .\n:A a :B .\n")
        with pytest.raises(CorpusError):
            load_corpus([bad])


class TestStats:
    def test_empty_base_counts_zero(self):
        mkb = materialize(KnowledgeBase())
        assert corpus_stats(mkb) == {name: 0 for name in COUNTED_CLASSES}

    def test_extra_method_flags_a_mismatch(self, corpus):
        extra = KnowledgeBase()
        extra.declare(PM + "Brand-New", EntityKind.INDIVIDUAL)
        extra.declare(PM + "PMOMH", EntityKind.CLASS)
        extra.add_assertion(ClassAssertion(PM + "PMOMH", PM + "Brand-New"))
        merged = materialize(merge(corpus.kb, extra))
        assert corpus_stats(merged)["PMOMH"] == 86
        with pytest.raises(ManifestMismatch) as err:
            check_stats(merged, load_manifest())
        assert any("PMOMH" in line and "85" in line and "86" in line
                   for line in err.value.divergences)


class TestTamperDetection:
    def _copy_corpus(self, tmp_path):
        target = tmp_path / "data"
        shutil.copytree(corpus_dir(), target)
        return target

    def test_corrupted_file_is_rejected(self, tmp_path, monkeypatch):
        target = self._copy_corpus(tmp_path)
        victim = target / "individuals.ttl"
        blob = bytearray(victim.read_bytes())
        blob[blob.index(b"2005")] = ord("6")
        victim.write_bytes(bytes(blob))
        monkeypatch.setenv("PREFONTO_CORPUS_DIR", str(target))
        with pytest.raises(CorpusError):
            load_corpus()

    def test_missing_manifest_is_rejected(self, tmp_path, monkeypatch):
        target = self._copy_corpus(tmp_path)
        (target / "manifest.json").unlink()
        monkeypatch.setenv("PREFONTO_CORPUS_DIR", str(target))
        with pytest.raises(CorpusError):
            load_corpus()

    def test_pristine_copy_is_accepted(self, tmp_path, monkeypatch):
        target = self._copy_corpus(tmp_path)
        monkeypatch.setenv("PREFONTO_CORPUS_DIR", str(target))
        mkb = load_corpus()
        assert corpus_stats(mkb)["PMOMH"] == 85


class TestInjectedContradiction:
    FIXTURE = (
        "@prefix : <http://purl.org/pmomh#> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        ":confusedResult a owl:NamedIndividual, :OneSolution, :SetOfSolutions .\n"
    )

    def test_load_refuses_an_inconsistent_catalogue(self, tmp_path):
        fixture = tmp_path / "contradiction.ttl"
        fixture.write_text(self.FIXTURE)
        with pytest.raises(CorpusError) as err:
            load_corpus(list(bundled_paths()) + [fixture])
        assert "inconsistent" in str(err.value)

    def test_exactly_one_traced_violation(self, corpus):
        extra, diags = parse_kb(self.FIXTURE)
        assert diags == []
        merged = materialize(merge(corpus.kb, extra))
        report = check_consistency(merged)
        assert len(report.violations) == 1
        violation = report.violations[0]
        assert violation.individual == PM + "confusedResult"
        assert {violation.class_a, violation.class_b} == {
            PM + "OneSolution", PM + "SetOfSolutions"}
        assert any("disjointWith" in line for line in violation.trace)
        assert any("[asserted]" in line for line in violation.trace)

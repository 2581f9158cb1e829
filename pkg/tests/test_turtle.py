"""Turtle-subset parser, recognizer, serializer, and graph isomorphism."""

import random
import sys

import pytest
from hypothesis import HealthCheck, given, settings

from generators import random_kbs
from prefonto.corpus import bundled_paths
from prefonto.model import (
    And,
    ClassAssertion,
    DataAssertion,
    Datatype,
    EntityKind,
    EquivalentClasses,
    InverseProperties,
    Literal,
    Named,
    ObjectAssertion,
    Severity,
    Some,
    SubClassOf,
    ValueData,
)
from prefonto.turtle import (
    Graph,
    ParseError,
    isomorphic,
    merge_graphs,
    parse_graph,
    parse_kb,
    recognize,
    serialize,
)

E = "http://e.org/"

HEADER = (
    "@prefix : <http://e.org/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
)


def _kb(body: str, strict: bool = True):
    return parse_kb(HEADER + body, strict=strict)


class TestLexical:
    def test_statement_forms(self):
        kb, diags = _kb(
            ":A a owl:Class .\n"
            ":B a owl:Class ; rdfs:subClassOf :A .\n"
            ":p a owl:ObjectProperty .\n"
            ":d a owl:DatatypeProperty ; rdfs:range xsd:integer .\n"
            ":x a owl:NamedIndividual , :A ; :p :x ; :d 5, 7 .\n")
        assert diags == []
        assert kb.kind_of(E + "A") is EntityKind.CLASS
        assert ClassAssertion(E + "A", E + "x") in kb.assertions
        assert ObjectAssertion(E + "p", E + "x", E + "x") in kb.assertions
        assert DataAssertion(E + "d", E + "x", Literal(5, Datatype.INTEGER)) in kb.assertions
        assert DataAssertion(E + "d", E + "x", Literal(7, Datatype.INTEGER)) in kb.assertions

    def test_escaped_local_names(self):
        kb, diags = _kb(
            ":MOEA\\/D a owl:NamedIndividual .\n"
            ":W-HypE\\' a owl:NamedIndividual .\n"
            ":2p-NSGA-II a owl:NamedIndividual .\n"
            ":a-priori a owl:NamedIndividual .\n")
        assert diags == []
        assert kb.individuals == [E + "2p-NSGA-II", E + "MOEA/D",
                                  E + "W-HypE'", E + "a-priori"]

    def test_literal_forms_agree(self):
        kb, _ = _kb(
            ":d a owl:DatatypeProperty .\n"
            ":x a owl:NamedIndividual ; :d true, 5, \"5\"^^xsd:integer, "
            "\"plain\", \"typed\"^^xsd:string, \"esc\\\"q\\\"\" .\n")
        lits = {a.literal for a in kb.assertions if isinstance(a, DataAssertion)}
        assert Literal(True, Datatype.BOOLEAN) in lits
        assert Literal(5, Datatype.INTEGER) in lits
        assert Literal("plain", Datatype.STRING) in lits
        assert Literal("typed", Datatype.STRING) in lits
        assert Literal('esc"q"', Datatype.STRING) in lits
        assert len(lits) == 5  # 5 and "5"^^xsd:integer collapse

    def test_full_iri_terms(self):
        kb, diags = _kb("<http://other.net/K> a owl:Class .\n")
        assert diags == []
        assert kb.classes == ["http://other.net/K"]

    def test_comments_and_blank_lines(self):
        kb, diags = _kb("# leading comment\n\n:A a owl:Class . # trailing\n")
        assert diags == []
        assert kb.classes == [E + "A"]

    @pytest.mark.parametrize("body,category", [
        (":a :b 1.5 .", "lexical"),
        (':x :p "v"@en .', "lexical"),
        ("_:n :p :o .", "syntactic"),
        (":a :b \x01 .", "lexical"),
        (':x :p "v"^^xsd:float .', "vocabulary"),
        (":a :b", "syntactic"),
        (":a rdfs:subClassOf :b", "syntactic"),
    ])
    def test_rejections_carry_category(self, body, category):
        with pytest.raises(ParseError) as err:
            parse_graph(HEADER + body)
        assert err.value.category == category
        assert err.value.line >= 1 and err.value.column >= 1

    def test_undefined_prefix_is_positioned(self):
        with pytest.raises(ParseError) as err:
            parse_graph("wrong:a a wrong:b .")
        assert (err.value.line, err.value.column) == (1, 1)

    def test_error_positions_point_at_offending_token(self):
        with pytest.raises(ParseError) as err:
            parse_graph(HEADER + ":a :b 1.5 .")
        assert err.value.line == len(HEADER.splitlines()) + 1
        assert err.value.column == 7

    def test_bytes_and_str_inputs_agree(self):
        doc = HEADER + ":A a owl:Class .\n"
        assert isomorphic(parse_graph(doc), parse_graph(doc.encode("utf-8")))

    def test_invalid_utf8_is_a_parse_error(self):
        with pytest.raises(ParseError) as err:
            parse_graph(b"\xff\xfe junk")
        assert err.value.category == "lexical"


class TestRecognizer:
    def test_expression_axioms_decode(self):
        kb, diags = _kb(
            ":A a owl:Class .\n:B a owl:Class .\n"
            ":p a owl:ObjectProperty .\n"
            ":d a owl:DatatypeProperty ; rdfs:range xsd:boolean .\n"
            ":Def a owl:Class ; owl:equivalentClass [\n"
            "    a owl:Class ;\n"
            "    owl:intersectionOf ( :A [ a owl:Restriction ;"
            " owl:onProperty :p ; owl:someValuesFrom :B ] [ a owl:Restriction ;"
            " owl:onProperty :d ; owl:hasValue true ] )\n"
            "] .\n")
        assert diags == []
        expected = EquivalentClasses(E + "Def", And((
            Named(E + "A"),
            Some(E + "p", Named(E + "B")),
            ValueData(E + "d", Literal(True, Datatype.BOOLEAN)))))
        assert expected in kb.axioms

    def test_inverse_and_disjoint(self):
        kb, diags = _kb(
            ":A a owl:Class ; owl:disjointWith :B .\n:B a owl:Class .\n"
            ":p a owl:ObjectProperty ; owl:inverseOf :q .\n"
            ":q a owl:ObjectProperty .\n")
        assert diags == []
        assert InverseProperties(E + "p", E + "q") in kb.axioms

    def test_label_and_comment_survive_strict(self):
        kb, diags = _kb(':A a owl:Class ; rdfs:label "Alpha" .\n')
        assert diags == []
        assert any(a.prop.endswith("label") for a in kb.annotations)

    def test_unknown_predicate_lenient_vs_strict(self):
        body = ":A a owl:Class ; rdfs:seeAlso :A .\n"
        _, lenient = _kb(body, strict=False)
        assert lenient and all(d.severity is Severity.INFO for d in lenient)
        _, strict = _kb(body, strict=True)
        assert any(d.severity is Severity.ERROR for d in strict)

    def test_conflicting_kinds_reported(self):
        _, diags = _kb(":A a owl:Class .\n:A a owl:NamedIndividual .\n")
        assert any(d.severity is Severity.ERROR for d in diags)


class TestSerializer:
    def test_insertion_order_does_not_matter(self):
        a = ":A a owl:Class .\n:B a owl:Class ; rdfs:subClassOf :A .\n"
        b = ":B a owl:Class ; rdfs:subClassOf :A .\n:A a owl:Class .\n"
        kb1, _ = _kb(a)
        kb2, _ = _kb(b)
        assert serialize(kb1) == serialize(kb2)

    def test_serialize_is_stable(self):
        kb, _ = _kb(":A a owl:Class .\n:x a owl:NamedIndividual , :A .\n")
        assert serialize(kb) == serialize(kb)

    def test_custom_prefix_used(self):
        kb, _ = _kb(":A a owl:Class .\n")
        text = serialize(kb, prefixes={"ex": E})
        assert "@prefix ex: <http://e.org/> ." in text
        assert "ex:A" in text

    def test_unprefixed_iris_fall_back_to_angle_brackets(self):
        kb, _ = _kb("<http://other.net/K> a owl:Class .\n")
        assert "<http://other.net/K>" in serialize(kb)


class TestIsomorphism:
    def test_blank_relabelling_is_isomorphic(self):
        doc1 = HEADER + (":A a owl:Class ; rdfs:subClassOf "
                         "[ a owl:Restriction ; owl:onProperty :p ;"
                         " owl:someValuesFrom :A ] .\n:p a owl:ObjectProperty .\n")
        g1 = parse_graph(doc1)
        g2 = merge_graphs(parse_graph(HEADER + ":Z a owl:Class .\n"), parse_graph(doc1))
        assert not isomorphic(g1, g2)
        g3 = merge_graphs(Graph(), parse_graph(doc1))
        assert isomorphic(g1, g3)

    def test_different_fact_sets_differ(self):
        g1 = parse_graph(HEADER + ":A a owl:Class .\n")
        g2 = parse_graph(HEADER + ":B a owl:Class .\n")
        assert not isomorphic(g1, g2)


class TestRoundTrip:
    def test_bundled_files_round_trip(self):
        for path in bundled_paths():
            data = path.read_bytes()
            g1 = parse_graph(data)
            kb, diags = recognize(g1, strict=True)
            assert not [d for d in diags if d.severity is Severity.ERROR]
            g2 = parse_graph(serialize(kb, prefixes={"": "http://purl.org/pmomh#"}))
            assert isomorphic(g1, g2)

    @settings(max_examples=120, deadline=None,
              suppress_health_check=[HealthCheck.too_slow])
    @given(random_kbs())
    def test_random_bases_round_trip_exactly(self, kb):
        text = serialize(kb)
        kb2, diags = parse_kb(text, strict=True)
        assert diags == []
        assert kb2.declarations == kb.declarations
        assert kb2.axioms == kb.axioms
        assert kb2.assertions == kb.assertions
        assert serialize(kb2) == text


class TestFuzz:
    def test_random_bytes_never_crash(self):
        rng = random.Random(0xBEEF)
        for _ in range(1000):
            blob = bytes(rng.randrange(256) for _ in range(rng.randrange(512)))
            try:
                parse_kb(blob)
            except ParseError:
                pass

    def test_single_byte_corruption_is_located_or_still_valid(self):
        doc = (HEADER + ":A a owl:Class .\n"
               ":x a owl:NamedIndividual , :A .\n").encode("utf-8")
        parse_graph(doc)  # the pristine document must parse
        rng = random.Random(2024)
        for _ in range(300):
            pos = rng.randrange(len(doc))
            mutated = bytearray(doc)
            mutated[pos] = rng.randrange(256)
            try:
                parse_graph(bytes(mutated))
            except ParseError as err:
                assert err.line >= 1
                assert err.column >= 1
                assert err.category in {"lexical", "syntactic", "vocabulary"}

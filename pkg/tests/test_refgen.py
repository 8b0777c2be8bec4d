from __future__ import annotations

import pytest

from owltext.pipeline import Flags, describe

from conftest import build, generate, generate_inline

PFX = "Prefix(:=<http://example.org/t#>)\nPrefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"


def onto(body: str) -> str:
    return PFX + "Ontology(<http://example.org/t>\n" + body + "\n)"


def test_exhibit7_reference_sequence():
    assert generate("exhibit7.ofn", "exhibit7.json", ":exhibit7", use_aggregation=False) == (
        "Exhibit 7 is a statue. It was sculpted by Nikolaou. Nikolaou was born in Athens. He was born in 1918. "
        "He died in 1998. Exhibit 7 is now in the National Gallery. It is in excellent condition.")


PEOPLE = onto("""
  DataPropertyAssertion(:bornIn :p1 "1918"^^xsd:integer)
  DataPropertyAssertion(:diedIn :p1 "1998"^^xsd:integer)
""")


def _person(gender):
    doc = {"prefixes": {"": "http://example.org/t#"},
           "lexicon": [{"id": "nikN", "pos": "noun", "langs": {"en": {"forms": "Nikolaou", "gender": gender}}},
                       {"id": "bearV", "pos": "verb", "langs": {"en": {"forms": {
                           "past passive sg": "was born", "participle": "born"}}}},
                       {"id": "dieV", "pos": "verb", "langs": {"en": {"forms": {"past": "died",
                                                                                 "participle": "died"}}}}],
           "names": [{"id": "n1", "entity": ":p1", "slots": [{"head": "nikN"}]}],
           "plans": [{"id": "pB", "property": ":bornIn", "slots": [
               {"owner": {}}, {"verb": {"lexeme": "bearV", "tense": "past", "voice": "passive"}},
               {"prep": "in"}, {"filler": {}}]},
               {"id": "pD", "property": ":diedIn", "slots": [
                   {"owner": {}}, {"verb": {"lexeme": "dieV", "tense": "past"}}, {"prep": "in"}, {"filler": {}}]}]}
    return doc


@pytest.mark.parametrize("gender, pron", [
    ("masculine", "He"), ("feminine", "She"), ("neuter", "It"), (["masculine", "feminine"], "He/she"),
])
def test_pronoun_follows_name_gender(gender, pron):
    text = generate_inline(PEOPLE, _person(gender), ":p1", use_aggregation=False)
    assert text == f"Nikolaou was born in 1918. {pron} died in 1998."


def test_pronoun_defaults_to_neuter():
    assert generate_inline(PEOPLE, None, ":p1", use_aggregation=False) == "P1 born in 1918. It died in 1998."


def test_no_refexpr_repeats_the_name():
    text = generate_inline(PEOPLE, _person("masculine"), ":p1", use_aggregation=False, use_refexpr=False)
    assert text == "Nikolaou was born in 1918. Nikolaou died in 1998."


ANON = onto('DataPropertyAssertion(:bornIn :x1 "1918"^^xsd:integer)')


def test_anonymous_without_named_class_uses_bare_demonstrative():
    model, rs = build(ANON, {"prefixes": {"": "http://example.org/t#"}, "anonymous": [":x1"]})
    desc = describe(model, rs, model.expand(":x1"), Flags())
    assert desc.text() == "This born in 1918."
    assert len(desc.diagnostics) == 1 and "x1" in desc.diagnostics[0]


def test_anonymous_with_class_uses_demonstrative_phrase():
    text = generate("aryballos.ofn", "aryballos.json", ":exhibit24")
    assert text.startswith("This is an aryballos, found at the Heraion of Delos.")
    assert generate("aryballos.ofn", "aryballos.json", ":exhibit24", distance=2).count("This aryballos") == 3

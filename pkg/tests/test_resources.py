from __future__ import annotations

import copy
import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from owltext.resources import (
    InflectionError,
    ResourceError,
    dump_resources,
    features,
    inflect,
    load_resources,
    select_variant,
)

from conftest import DATA, resources

RESOURCE_FILES = [("wine.json", "wine.ofn"), ("tecra_en.json", "tecra.ofn"), ("tecra_el.json", "tecra.ofn"),
                  ("aryballos.json", "aryballos.ofn"), ("stoa.json", "stoa.ofn"), ("exhibit7.json", "exhibit7.ofn"),
                  ("rules.json", "rules.ofn"), ("desk.json", "desk.ofn")]

USE_VERB = {"id": "toUseVerb", "pos": "verb", "langs": {"en": {"forms": {
    "present sg": "uses", "present pl": "use", "past": "used",
    "past passive sg": "was used", "past passive pl": "were used", "participle": "used"}}}}
FIND = {"id": "toFindLex", "pos": "verb", "langs": {"en": {"forms": {
    "base": "find", "present sg": "finds", "past": "found", "participle": "found"}}}}


def test_empty_document_is_valid():
    rs = load_resources("")
    assert rs.lexicon and rs.lexicon[0].id == "toBeVerb"
    assert rs.names == () and rs.plans == ()
    assert rs.sections.empty
    assert load_resources("{}").names == ()


@pytest.mark.parametrize("name, onto", RESOURCE_FILES)
def test_fixture_resources_load(name, onto):
    rs = resources(name, onto)
    assert rs.plans


def test_missing_lexeme_gives_one_diagnostic():
    doc = {"plans": [{"id": "pUsed", "property": "isA", "slots": [{"owner": {}}, {"verb": "toUseVerb"},
                                                                   {"filler": {}}]}]}
    with pytest.raises(ResourceError) as err:
        load_resources(doc)
    assert len(err.value.diagnostics) == 1
    (d,) = err.value.diagnostics
    assert "pUsed" in d and "toUseVerb" in d


def test_all_problems_are_listed():
    doc = {"lexicon": [{"id": "x", "pos": "thing", "langs": {"en": {"forms": "x"}}}],
           "names": [{"id": "n", "entity": "noPrefix:y", "slots": [{"head": "missing"}]}],
           "params": {"*": {"maxMessagesPerPage": 0}}}
    with pytest.raises(ResourceError) as err:
        load_resources(doc)
    assert len(err.value.diagnostics) >= 3


def test_duplicate_names_need_distinct_appropriateness():
    lex = [{"id": "vaseN", "pos": "noun", "langs": {"en": {"forms": "vase"}}}]
    names = [{"id": f"n{i}", "entity": "http://x/#v", "slots": [{"head": "vaseN"}]} for i in range(2)]
    with pytest.raises(ResourceError):
        load_resources({"lexicon": lex, "names": names})
    names[1]["appropriateness"] = {"child": 3}
    assert len(load_resources({"lexicon": lex, "names": names}).names) == 2


def test_wine_trial_scale_counts():
    lexicon = [{"id": f"n{i}", "pos": "noun", "langs": {"en": {"forms": {"sg": f"w{i}", "pl": f"w{i}s"}}}}
               for i in range(67)]
    names = [{"id": f"name{i}", "entity": f"http://x/#e{i}", "slots": [{"head": f"n{i}"}]} for i in range(41)]
    plans = [{"id": f"p{i}", "property": f"http://x/#p{i}",
              "slots": [{"owner": {}}, {"verb": "toBeVerb"}, {"filler": {}}]} for i in range(5)]
    sections = [{"id": "a", "properties": ["http://x/#p0"]}, {"id": "b", "properties": ["http://x/#p1"]}]
    rs = load_resources({"lexicon": lexicon, "names": names, "plans": plans, "sections": sections})
    assert (len(rs.plans), len(rs.lexicon) - 1, len(rs.names), len(rs.sections.sections)) == (5, 67, 41, 2)


def _variant_doc():
    lex = [{"id": "depictV", "pos": "verb", "langs": {"en": {"forms": {"present sg": "depicts"}}}},
           {"id": "showV", "pos": "verb", "langs": {"en": {"forms": {"present sg": "shows"}}}}]
    plans = [{"id": "pDepicts", "property": "http://x/#depicts", "appropriateness": {"child": 1, "*": 2},
              "slots": [{"owner": {}}, {"verb": "depictV"}, {"filler": {}}]},
             {"id": "pShows", "property": "http://x/#depicts", "appropriateness": {"child": 3, "*": 1},
              "slots": [{"owner": {}}, {"verb": "showV"}, {"filler": {}}]}]
    return load_resources({"lexicon": lex, "plans": plans})


def test_select_variant_by_user_type():
    rs = _variant_doc()
    cands = rs.plans_for("http://x/#depicts", "en")
    assert select_variant(cands, "child").id == "pShows"
    assert select_variant(cands, "expert").id == "pDepicts"
    assert select_variant(cands[:1], "child").id == "pDepicts"


def test_select_variant_ties_go_to_first():
    rs = _variant_doc()
    cands = rs.plans_for("http://x/#depicts", "en")
    tied = [type(c)(**{**c.__dict__, "appropriateness": ()}) for c in cands]
    assert select_variant(tied, "child") is tied[0]
    with pytest.raises(ValueError):
        select_variant([])


def test_inflect_examples():
    rs = load_resources({"lexicon": [USE_VERB, FIND]})
    assert inflect(rs.lexeme("toUseVerb"), "past passive sg", "en") == "was used"
    assert inflect(rs.lexeme("toUseVerb"), {"past", "passive", "pl"}, "en") == "were used"
    assert inflect(rs.lexeme("toFindLex"), "base", "en") == "find"
    aryballos = resources("aryballos.json", "aryballos.ofn").lexeme("aryballosN")
    assert inflect(aryballos, "pl", "en") == "aryballoi"


def test_inflect_missing_form_names_lexeme_and_descriptor():
    rs = load_resources({"lexicon": [FIND]})
    with pytest.raises(InflectionError) as err:
        inflect(rs.lexeme("toFindLex"), "future passive", "en")
    assert "toFindLex" in str(err.value) and "future" in str(err.value)
    with pytest.raises(InflectionError):
        inflect(rs.lexeme("toFindLex"), "base", "el")


def test_plan_requesting_missing_verb_form_is_rejected():
    doc = {"lexicon": [FIND], "plans": [{"id": "p", "property": "http://x/#p",
                                         "slots": [{"owner": {}}, {"verb": {"lexeme": "toFindLex", "tense": "future"}},
                                                   {"filler": {}}]}]}
    with pytest.raises(ResourceError) as err:
        load_resources(doc)
    assert "toFindLex" in str(err.value)


@pytest.mark.parametrize("spec, expected", [
    ("past passive sg", {"past", "passive", "sg"}),
    (["Past", "Singular"], {"past", "sg"}),
    (None, set()),
])
def test_features(spec, expected):
    assert features(spec) == frozenset(expected)


@pytest.mark.parametrize("name, onto", RESOURCE_FILES)
def test_round_trip(name, onto):
    rs = resources(name, onto)
    prefixes = {p: ns for p, ns in rs.raw.get("prefixes", {}).items()}
    again = load_resources(dump_resources(rs), None)
    assert again == load_resources(json.loads(dump_resources(rs)), None)
    assert again.lexicon == rs.lexicon and again.plans == rs.plans and again.names == rs.names
    assert again.sections == rs.sections and again.interest == rs.interest
    assert prefixes == again.raw.get("prefixes", {})


# mutation fuzzer: break one cross-reference, expect at least one diagnostic


def _lexeme_refs(doc):
    """Paths of every string that refers to a lexicon id."""
    ids = {e["id"] for e in doc.get("lexicon", [])} | {"toBeVerb"}
    out = []

    def walk(node, path):
        if isinstance(node, dict):
            for k, v in node.items():
                if path[:1] == ("lexicon",) and k == "id":
                    continue
                walk(v, path + (k,))
        elif isinstance(node, list):
            for i, v in enumerate(node):
                walk(v, path + (i,))
        elif isinstance(node, str) and node in ids and path[:1] in (("names",), ("plans",), ("languages",)):
            out.append(path)

    walk(doc, ())
    return out


def _set(doc, path, value):
    node = doc
    for p in path[:-1]:
        node = node[p]
    node[path[-1]] = value


FUZZ_DOCS = {n: json.loads((DATA / n).read_text(encoding="utf-8")) for n, _ in RESOURCE_FILES}


@settings(max_examples=200, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(sorted(FUZZ_DOCS)), st.data())
def test_broken_reference_is_always_diagnosed(name, data):
    doc = FUZZ_DOCS[name]
    refs = _lexeme_refs(doc)
    assert refs
    path = data.draw(st.sampled_from(refs))
    broken = copy.deepcopy(doc)
    _set(broken, path, "noSuchLexeme")
    with pytest.raises(ResourceError) as err:
        load_resources(broken)
    assert err.value.diagnostics

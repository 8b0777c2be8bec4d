from __future__ import annotations

from collections import Counter
from dataclasses import replace

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from owltext.aggregator import RULES, AggregationConfig, aggregate
from owltext.lexicalizer import LexConfig, Lexicalizer
from owltext.triples import merge_plan, message_key, retrieve_messages

from conftest import generate, ontology, resources


@pytest.mark.parametrize("target, flags, expected", [
    (":BancroftChardonnay", {}, "Bancroft Chardonnay is a kind of Chardonnay made in Bancroft."),
    (":BancroftChardonnayFrom", {}, "Bancroft Chardonnay is a kind of Chardonnay from Bancroft."),
    (":BancroftChardonnayDry", {}, "Bancroft Chardonnay is dry, it has moderate flavor, and it comes from Napa."),
    (":model35", {}, "Model 35 is sold in exactly three countries: Spain, Italy, and Greece."),
    (":bike1", {}, "This is a red, expensive motorbike."),
    (":houseWine", {}, "The house wine has strong or medium flavor."),
    (":tableWine", {}, "The table wine is a wine. It has medium body and moderate flavor."),
    (":stoa", {"user_type": "single"},
     "The stoa is located in the Agora. It was used during the Classical, the Hellenistic, and the Roman period."),
])
def test_rule_goldens(target, flags, expected):
    assert generate("rules.ofn", "rules.json", target, **flags) == expected


def test_desk_goldens():
    assert generate("desk.ofn", "desk.json", ":ergoLift") == (
        "The ErgoLift is a standing desk, made of steel and oak. It is 160 cm wide and its height can be "
        "adjusted.\n\nIt is manufactured by Nordic Works and it costs 640 euro.")


def test_tecra_golden():
    assert generate("tecra.ofn", "tecra_en.json", ":tecraA8") == (
        "Tecra A8 is a laptop, manufactured by Toshiba. It has an Intel Core 2 processor, 2 GB RAM and a "
        "110 GB hard disk. Its speed is 2 GHz and it costs 850 Euro.")


# a pool of lexicalized sentences drawn from every fixture


POOL_SOURCES = [("rules.ofn", "rules.json"), ("tecra.ofn", "tecra_en.json"), ("desk.ofn", "desk.json"),
                ("stoa.ofn", "stoa.json"), ("wine.ofn", "wine.json"), ("aryballos.ofn", "aryballos.json"),
                ("exhibit7.ofn", "exhibit7.json")]


def _pool():
    groups = []
    for onto_name, res in POOL_SOURCES:
        model = ontology(onto_name)
        lex = Lexicalizer(model, resources(res, onto_name), LexConfig())
        for target in model.entities("individual") + model.entities("class"):
            kind = "individual" if model.is_individual(target) else "class"
            msgs = merge_plan(retrieve_messages(model, target, kind, 1)).all_messages()
            if msgs:
                groups.append([lex.lexicalize(m) for m in msgs])
    return groups


POOL = _pool()


@st.composite
def sentence_lists(draw):
    group = draw(st.sampled_from(POOL))
    picked = draw(st.lists(st.sampled_from(range(len(group))), unique=True, min_size=1, max_size=len(group)))
    sections = [draw(st.sampled_from(["a", "b", None])) for _ in picked]
    if draw(st.booleans()):
        sections = [sections[0]] * len(picked)
    return [replace(group[i], section=s) for i, s in zip(picked, sections)]


def _keys(sentences):
    return Counter(message_key(m) for s in sentences for m in s.messages)


def test_pool_is_varied():
    assert len(POOL) >= 20
    assert sum(len(g) for g in POOL) >= 60


@settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(sentence_lists(), st.integers(1, 4))
def test_aggregation_properties(sentences, cap):
    cfg = AggregationConfig(max_messages=cap)
    out = aggregate(sentences, cfg)
    assert aggregate(out, cfg) == out
    assert _keys(out) == _keys(sentences)
    section_of = {message_key(m): s.section for s in sentences for m in s.messages}
    for s in out:
        assert s.size <= cap or s.rule == "R2"
        assert {section_of[message_key(m)] for m in s.messages} == {s.section}


@settings(max_examples=200, deadline=None)
@given(sentence_lists())
def test_cap_one_without_value_merging_keeps_one_message_per_sentence(sentences):
    cfg = AggregationConfig(max_messages=1, rules=tuple(r for r in RULES if r != "R2"))
    out = aggregate(sentences, cfg)
    assert [s.messages for s in out] == [s.messages for s in sentences]


def test_no_rules_is_identity():
    group = POOL[0]
    assert aggregate(group, AggregationConfig(rules=())) == group


def test_same_verb_window_respects_cap():
    one = next(s for g in POOL for s in g if s.single is not None and s.single.kind == "property"
               and s.single.simple and len(s.single.parts) > 2 and s.aggregatable)
    five = [replace(one, messages=(replace(one.messages[0], triples=(replace(
        one.messages[0].triple, filler=type(one.messages[0].triple.filler)(f"e{i}")),)),))
        for i in range(5)]
    out = aggregate(five, AggregationConfig(max_messages=3, rules=("R6",)))
    assert [s.size for s in out] == [3, 2]


def test_cap_must_be_positive():
    with pytest.raises(ValueError):
        AggregationConfig(max_messages=0)

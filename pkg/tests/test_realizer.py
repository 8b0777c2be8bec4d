from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from owltext.realizer import finish_sentence, indefinite_article, render_list, render_text

from conftest import generate, resources


@pytest.mark.parametrize("items, serial, expected", [
    (["A"], True, "A"),
    (["A", "B"], True, "A and B"),
    (["A", "B", "C"], True, "A, B, and C"),
    (["A", "B", "C"], False, "A, B and C"),
    (["the Classical", "the Roman period"], True, "the Classical and the Roman period"),
])
def test_render_list(items, serial, expected):
    assert render_list(items, "and", serial) == expected


@given(st.lists(st.from_regex(r"[a-z]{1,6}", fullmatch=True), min_size=1, max_size=6))
def test_render_list_keeps_items_in_order(items):
    out = render_list(items, "or")
    assert out.replace(",", "").replace(" or ", " ").split() == items


@pytest.mark.parametrize("word, article", [
    ("aryballos", "an"), ("vase", "a"), ("hour", "an"), ("university", "a"), ("Intel", "an"),
    ("8", "an"), ("11", "an"), ("18", "an"), ("110", "a"), ("2", "a"), ("800", "an"), ("18000", "an"),
])
def test_indefinite_article(word, article):
    assert indefinite_article(word, resources(None, "wine.ofn").language("en")) == article


@pytest.mark.parametrize("text, expected", [("it is red", "It is red."), ("Done.", "Done."), ("Why?", "Why?")])
def test_finish_sentence(text, expected):
    assert finish_sentence(text) == expected


def test_empty_document():
    assert render_text([], "plain") == ""
    assert render_text([], "bracketed") == ""
    assert render_text([], "dump") == ""


def test_unknown_format():
    with pytest.raises(ValueError):
        render_text([], "html")


@pytest.mark.parametrize("onto_name, res, target", [
    ("desk.ofn", "desk.json", ":ergoLift"), ("stoa.ofn", "stoa.json", ":stoaZeusEleutherios"),
    ("aryballos.ofn", "aryballos.json", ":exhibit24"),
])
def test_formats_carry_the_same_sentences(onto_name, res, target):
    plain = generate(onto_name, res, target)
    headed = generate(onto_name, res, target, "headed")
    bracketed = generate(onto_name, res, target, "bracketed")
    assert len(headed) >= len(plain)
    for para in plain.split("\n\n"):
        assert para in headed
        assert para in bracketed


def test_headed_uses_section_titles():
    headed = generate("desk.ofn", "desk.json", ":ergoLift", "headed")
    first, second = headed.split("\n\n")
    assert ": The ErgoLift" in first and ": It is manufactured" in second


def test_dump_format_is_one_json_object_per_sentence():
    import json
    dump = generate("exhibit7.ofn", "exhibit7.json", ":exhibit7", "dump", use_aggregation=False)
    rows = [json.loads(line) for line in dump.splitlines()]
    assert len(rows) == 7
    assert rows[0]["text"] == "Exhibit 7 is a statue."
    assert all(r["target"].endswith("exhibit7") and r["messages"] for r in rows)


def test_stoa_bracketed_golden():
    assert generate("stoa_scrambled.ofn", "stoa.json", ":stoaZeusEleutherios", "bracketed",
                    use_aggregation=False) == (
        "{locationSection The Stoa of Zeus Eleutherios is located in the western part of the Agora. It is "
        "located next to the Temple of Apollo Patroos.} {buildSection It was built around 430 BC. It was built "
        "in the Doric style. It was built out of porous stone and marble.} {useSection It was used during the "
        "Classical period, the Hellenistic period, and the Roman period. It was used as a religious place and a "
        "meeting point.} {conditionSection It was destroyed in the late Roman period. It was excavated in 1891 "
        "and 1931. Today it is in good condition.}")

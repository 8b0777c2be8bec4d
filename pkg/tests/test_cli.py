from __future__ import annotations

import json

import pytest

from owltext.pipeline import ABLATIONS

from conftest import DATA, run_cli

WINE = ["--ontology", str(DATA / "wine.ofn"), "--resources", str(DATA / "wine.json")]
ARYBALLOS = ["--ontology", str(DATA / "aryballos.ofn")]


def test_describe_golden():
    code, out = run_cli("describe", *WINE, "--target", ":StEmilion")
    assert code == 0
    assert out == ("St. Emilion is a kind of Bordeaux from the St. Emilion region. It has red color and strong "
                   "flavor. It is made from exactly one grape variety: Cabernet Sauvignon grapes.\n")


def test_baseline_golden():
    code, out = run_cli("describe", *WINE, "--target", ":StEmilion", "--baseline")
    assert code == 0
    assert out.strip() == ("St emilion is a kind of bordeaux. St emilion located in st emilion region. "
                           "St emilion has color red. St emilion has flavor strong. St emilion made from cabernet "
                           "sauvignon grape. St emilion made from at most one value.")


@pytest.mark.parametrize("onto_name, res, target", [
    ("wine.ofn", "wine.json", ":StEmilion"), ("desk.ofn", "desk.json", ":ergoLift"),
    ("aryballos.ofn", "aryballos.json", ":exhibit24"), ("stoa.ofn", "stoa.json", ":stoaZeusEleutherios"),
])
def test_all_ablation_flags_equal_baseline(onto_name, res, target):
    base = ["describe", "--ontology", str(DATA / onto_name), "--resources", str(DATA / res), "--target", target]
    flags = ["--no-" + {"use_names": "nlnames", "use_plans": "sentence-plans"}.get(a, a[4:]) for a in ABLATIONS]
    assert run_cli(*base, *flags) == run_cli(*base, "--baseline")


def _user_resources(tmp_path):
    doc = json.loads((DATA / "aryballos.json").read_text(encoding="utf-8"))
    doc["interest"] = doc.get("interest", []) + [{"property": ":creationPeriod", "score": 1, "threshold": 1}]
    path = tmp_path / "res.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_user_model_second_run_omits_assimilated_facts(tmp_path):
    users = tmp_path / "users.tsv"
    args = ["describe", *ARYBALLOS, "--resources", _user_resources(tmp_path), "--target", ":exhibit24",
            "--distance", "2", "--user-id", "u1", "--user-model", str(users)]
    code1, first = run_cli(*args)
    code2, second = run_cli(*args)
    assert (code1, code2) == (0, 0)
    assert "archaic period" in first and "created during" in first
    assert "archaic period" not in second and "created during" not in second
    assert "black-figure technique" in second


def test_user_model_untouched_without_user_id(tmp_path):
    res = _user_resources(tmp_path)
    args = ["describe", *ARYBALLOS, "--resources", res, "--target", ":exhibit24", "--distance", "2"]
    assert run_cli(*args) == run_cli(*args)
    assert list(tmp_path.iterdir()) == [tmp_path / "res.json"]


def test_user_id_without_model_is_usage_error():
    code, _ = run_cli("describe", *WINE, "--target", ":StEmilion", "--user-id", "u1")
    assert code == 2


def test_batch_partial_failure(tmp_path):
    targets = tmp_path / "targets.txt"
    targets.write_text(":StEmilion\n:NoSuchWine\n:Bordeaux\n", encoding="utf-8")
    code, out = run_cli("batch", *WINE, "--targets", str(targets))
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 1
    assert [r["target"] for r in records] == [":StEmilion", ":Bordeaux"]


def test_batch_empty_target_list(tmp_path):
    targets = tmp_path / "targets.txt"
    targets.write_text("# nothing\n", encoding="utf-8")
    assert run_cli("batch", *WINE, "--targets", str(targets)) == (0, "")


@pytest.mark.parametrize("jobs", ["1", "4"])
def test_batch_is_deterministic(jobs):
    args = ["batch", "--ontology", str(DATA / "desk.ofn"), "--resources", str(DATA / "desk.json"),
            "--all-individuals", "--jobs", jobs]
    code, out = run_cli(*args)
    assert code == 0 and out
    assert run_cli(*args) == (code, out)
    assert run_cli(*args[:-2]) == (code, out)


@pytest.mark.parametrize("argv, code", [
    (["describe", "--ontology", str(DATA / "missing.ofn"), "--target", ":x"], 3),
    (["describe", *WINE, "--target", ":Nothing"], 5),
    (["describe", *WINE, "--target", "nope:Thing"], 5),
    (["validate", str(DATA / "wine.json"), "--ontology", str(DATA / "wine.ofn")], 0),
    (["validate", str(DATA / "missing.json")], 4),
])
def test_exit_codes(argv, code):
    assert run_cli(*argv)[0] == code


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.ofn"
    bad.write_text("Ontology(<http://x>\n  SubClassOf(:A\n", encoding="utf-8")
    assert run_cli("describe", "--ontology", str(bad), "--target", ":A")[0] == 3


def test_resource_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"plans": [{"id": "p", "property": "isA", "slots": [{"verb": "nope"}]}]}),
                   encoding="utf-8")
    assert run_cli("describe", *WINE[:2], "--resources", str(bad), "--target", ":StEmilion")[0] == 4
    assert run_cli("validate", str(bad))[0] == 4


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        run_cli("describe", "--target", ":x")
    assert err.value.code == 2


def test_validate_reports_counts():
    code, out = run_cli("validate", str(DATA / "desk.json"), "--ontology", str(DATA / "desk.ofn"))
    assert code == 0 and out.startswith("ok: ")


def test_debug_views():
    code, out = run_cli("describe", *WINE, "--target", ":StEmilion", "--debug-plan", "--debug-specs")
    assert code == 0
    assert "[slot1 " in out and "St. Emilion is a kind of Bordeaux" in out


def test_greek_output():
    code, out = run_cli("describe", "--ontology", str(DATA / "tecra.ofn"), "--resources",
                        str(DATA / "tecra_el.json"), "--lang", "el", "--target", ":tecraA8")
    assert code == 0
    assert out.startswith("Ο Tecra A8 είναι ένας φορητός υπολογιστής")

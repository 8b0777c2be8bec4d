from __future__ import annotations

import functools
import io
from pathlib import Path

import pytest

from owltext.cli import main
from owltext.owl import load_ontology, parse_ontology
from owltext.pipeline import Flags, describe
from owltext.resources import empty_resources, load_resources, load_resources_file

DATA = Path(__file__).resolve().parent.parent / "data"


@functools.lru_cache(maxsize=None)
def ontology(name: str):
    return load_ontology(str(DATA / name))


@functools.lru_cache(maxsize=None)
def resources(name: str | None, onto: str):
    if name is None:
        return empty_resources()
    return load_resources_file(str(DATA / name), ontology(onto).prefixes)


def generate(onto: str, res: str | None, target: str, fmt: str = "plain", **flags) -> str:
    """Text for one target, loading fixtures from ``data/``."""
    model = ontology(onto)
    rs = resources(res, onto)
    desc = describe(model, rs, model.expand(target), Flags(**flags))
    return desc.text(fmt, rs)


def run_cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def data_dir() -> Path:
    return DATA


def build(onto_text: str, doc: dict | None):
    """Model and resources from inline text, for small self-contained cases."""
    model = parse_ontology(onto_text)
    rs = load_resources(doc or {}, model.prefixes)
    return model, rs


def generate_inline(onto_text: str, doc: dict | None, target: str, fmt: str = "plain", **flags) -> str:
    model, rs = build(onto_text, doc)
    return describe(model, rs, model.expand(target), Flags(**flags)).text(fmt, rs)

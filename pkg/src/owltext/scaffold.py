"""Skeleton resource documents extracted from an ontology."""

from __future__ import annotations

import re

from .owl import STANDARD_PREFIXES, OntologyModel, local_name, tokenize_identifier


def _slug(iri: str) -> str:
    return re.sub(r"\W+", "_", local_name(iri)).strip("_") or "entity"


def _seed_text(model: OntologyModel, iri: str, lang: str) -> str:
    label = model.lookup_label(iri, lang)
    if label:
        return " ".join(label.split())
    return " ".join(tokenize_identifier(local_name(iri)))


def scaffold_resources(model: OntologyModel, lang: str = "en") -> dict:
    """One stub NL name per class and individual, one stub plan per property.

    Every stub carries ``"auto": true`` so an author can see what still
    needs refining. Sections, interest scores and parameters are left empty.
    """
    prefixes = {p.rstrip(":"): ns for p, ns in model.prefixes.items() if p not in STANDARD_PREFIXES}
    lexicon, names, plans = [], [], []
    used_ids: set[str] = set()

    def unique(base: str) -> str:
        out, n = base, 2
        while out in used_ids:
            out, n = f"{base}{n}", n + 1
        used_ids.add(out)
        return out

    for kind in ("class", "individual"):
        for iri in model.entities(kind):
            if kind == "class" and model.is_individual(iri):
                continue
            text = _seed_text(model, iri, lang)
            lid = unique("lex_" + _slug(iri))
            lexicon.append({"id": lid, "pos": "noun", "auto": True,
                            "langs": {lang: {"forms": {"sg": text, "pl": text}, "gender": "neuter"}}})
            names.append({"id": unique("name_" + _slug(iri)), "entity": model.abbreviate(iri), "lang": lang,
                          "auto": True, "slots": [{"head": lid}]})
    for kind in ("object-property", "data-property"):
        for iri in model.entities(kind):
            plans.append({"id": unique("plan_" + _slug(iri)), "property": model.abbreviate(iri), "lang": lang,
                          "auto": True,
                          "slots": [{"owner": {}}, {"text": _seed_text(model, iri, lang)}, {"filler": {}}]})
    doc: dict = {}
    if prefixes:
        doc["prefixes"] = prefixes
    doc.update({"lexicon": lexicon, "names": names, "plans": plans, "sections": []})
    return doc

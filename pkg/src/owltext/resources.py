"""Generation resources: lexicon, NL names, sentence plans, sections,
interest scores and per-user-type parameters, stored as one JSON document.

Loading validates every cross-reference and reports all problems at once.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from typing import Union

from .english import ENGLISH_LEXICON, ENGLISH_PACK
from .owl import STANDARD_PREFIXES
from .planner import Section, SectionConfig
from .selection import ANY_USER, InterestAssignment
from .triples import KEYWORDS

TOP_LEVEL_KEYS = ("prefixes", "languages", "lexicon", "names", "plans", "anonymous",
                  "sections", "interest", "params")

GENDERS = ("masculine", "feminine", "neuter")
_ALIASES = {
    "singular": "sg", "plural": "pl",
    "nominative": "nom", "accusative": "acc", "genitive": "gen", "dative": "dat", "vocative": "voc",
    "m": "masculine", "masc": "masculine", "f": "feminine", "fem": "feminine",
    "n": "neuter", "neut": "neuter",
    "simple-present": "present", "simple-past": "past",
    "pos": "positive", "neg": "negative",
}
_VOICES = ("active", "passive")
_POLARITIES = ("positive", "negative")
TENSES = ("present", "past", "future")


class ResourceError(ValueError):
    def __init__(self, diagnostics: list[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(self.diagnostics))


class InflectionError(LookupError):
    pass


def features(spec) -> frozenset[str]:
    """Normalize a feature descriptor: "past passive sg" or a list of words."""
    if spec is None:
        return frozenset()
    words = spec.split() if isinstance(spec, str) else list(spec)
    return frozenset(_ALIASES.get(w.lower(), w.lower()) for w in words)


# --------------------------------------------------------------------------
# Form tables


@dataclass(frozen=True)
class FormTable:
    """Word forms keyed by feature sets. A lookup picks the most specific key
    whose features are all present in the request; ties go to the first key."""

    entries: tuple[tuple[frozenset, str], ...]
    verbal: bool = False

    @classmethod
    def parse(cls, raw, verbal: bool = False) -> "FormTable":
        if isinstance(raw, str):
            return cls(((frozenset(), raw),), verbal)
        if not isinstance(raw, dict):
            raise TypeError("forms must be a string or an object")
        return cls(tuple((features(k), v) for k, v in raw.items()), verbal)

    def _key(self, key: frozenset) -> frozenset:
        if not self.verbal:
            return key
        if not key & set(_VOICES):
            key = key | {"active"}
        if not key & set(_POLARITIES):
            key = key | {"positive"}
        return key

    def lookup(self, request) -> str | None:
        req = set(features(request) if isinstance(request, str) else request)
        if self.verbal:
            if not req & set(_VOICES):
                req.add("active")
            if not req & set(_POLARITIES):
                req.add("positive")
        best = None
        for key, form in self.entries:
            k = self._key(key)
            if k <= req and (best is None or len(k) > best[0]):
                best = (len(k), form)
        return None if best is None else best[1]

    def to_raw(self):
        if len(self.entries) == 1 and not self.entries[0][0]:
            return self.entries[0][1]
        return {" ".join(sorted(k)): v for k, v in self.entries}


# --------------------------------------------------------------------------
# Lexicon


@dataclass(frozen=True)
class LexLang:
    forms: FormTable
    gender: frozenset[str] = frozenset()


@dataclass(frozen=True)
class LexEntry:
    id: str
    pos: str  # verb | noun | adjective
    langs: tuple[tuple[str, LexLang], ...]
    auto: bool = False

    def lang(self, code: str) -> LexLang | None:
        return next((v for k, v in self.langs if k == code), None)


def inflect(entry: LexEntry, request, lang: str) -> str:
    ll = entry.lang(lang)
    if ll is None:
        raise InflectionError(f"lexeme {entry.id} has no '{lang}' entry")
    form = ll.forms.lookup(request)
    if not form:
        desc = " ".join(sorted(features(request) if isinstance(request, str) else request))
        raise InflectionError(f"lexeme {entry.id} has no '{lang}' form for [{desc}]")
    return form


# --------------------------------------------------------------------------
# Slots


@dataclass(frozen=True)
class ArticleSlot:
    kind: str  # def | indef


@dataclass(frozen=True)
class HeadSlot:
    lexeme: str
    capitalize: bool = False


@dataclass(frozen=True)
class LexSlot:
    """A noun or adjective that is not the head."""

    lexeme: str
    form: frozenset = frozenset()
    agree: str | None = None  # "head" in names; "owner" | "filler" in plans
    capitalize: bool = False


@dataclass(frozen=True)
class PrepSlot:
    text: str


@dataclass(frozen=True)
class TextSlot:
    text: str
    capitalize: bool = False


@dataclass(frozen=True)
class OwnerSlot:
    case: str = "nom"
    policy: str = "auto"  # auto | name | none


@dataclass(frozen=True)
class VerbSlot:
    lexeme: str
    tense: str = "present"
    voice: str = "active"
    polarity: str = "positive"  # positive | negative | auto
    agree: str = "owner"  # owner | filler | sg | pl


@dataclass(frozen=True)
class FillerSlot:
    case: str = "acc"
    article: str | None = None  # def | indef | none | None (the name's own policy)
    number: str | None = None


@dataclass(frozen=True)
class ConcatSlot:
    parts: tuple[tuple[str, str], ...]  # (property, "value" | "name")


NameSlotType = Union[ArticleSlot, HeadSlot, LexSlot, PrepSlot, TextSlot]
PlanSlotType = Union[OwnerSlot, VerbSlot, LexSlot, PrepSlot, TextSlot, FillerSlot, ConcatSlot]


@dataclass(frozen=True)
class NLName:
    id: str
    entity: str
    lang: str
    slots: tuple
    number: str = "sg"
    appropriateness: tuple[tuple[str, int], ...] = ()

    @property
    def head(self) -> HeadSlot:
        return next(s for s in self.slots if isinstance(s, HeadSlot))

    @property
    def article(self) -> str | None:
        return self.slots[0].kind if self.slots and isinstance(self.slots[0], ArticleSlot) else None


@dataclass(frozen=True)
class SentencePlan:
    id: str
    prop: str  # property IRI or keyword
    lang: str
    slots: tuple
    aggregation: bool = True
    appropriateness: tuple[tuple[str, int], ...] = ()
    counting: str | None = None  # noun lexeme naming counted things


def appropriateness(candidate, user_type: str) -> int:
    table = dict(candidate.appropriateness)
    if user_type in table:
        return table[user_type]
    return table.get(ANY_USER, 1)


def select_variant(candidates, user_type: str = ANY_USER):
    """Highest appropriateness for the user type; earliest declaration on ties."""
    candidates = list(candidates)
    if not candidates:
        raise ValueError("no candidates")
    best = candidates[0]
    for c in candidates[1:]:
        if appropriateness(c, user_type) > appropriateness(best, user_type):
            best = c
    return best


# --------------------------------------------------------------------------
# Language packs


@dataclass(frozen=True)
class LanguagePack:
    code: str
    copula: str | None = None
    articles: tuple[tuple[str, FormTable], ...] = ()
    pronouns: FormTable | None = None
    demonstrative: FormTable | None = None
    words: tuple[tuple[str, str], ...] = ()
    numbers: tuple[str, ...] = ()
    serial_comma: bool = False
    genitive_suffix: str | None = None
    a_an: bool = False
    a_exceptions: tuple[str, ...] = ()
    an_exceptions: tuple[str, ...] = ()
    complement_case: str = "nom"

    def word(self, name: str) -> str:
        for k, v in self.words:
            if k == name:
                return v
        raise InflectionError(f"language '{self.code}' defines no word for '{name}'")

    def article(self, kind: str, feats) -> str:
        table = dict(self.articles).get(kind)
        if table is None:
            return ""
        return table.lookup(feats) or ""

    def number_word(self, n: int) -> str:
        return self.numbers[n] if 0 <= n < len(self.numbers) else str(n)

    def pronoun(self, feats) -> str:
        if self.pronouns is None:
            raise InflectionError(f"language '{self.code}' defines no pronouns")
        form = self.pronouns.lookup(feats)
        if form is None:
            raise InflectionError(f"language '{self.code}' has no pronoun for [{' '.join(sorted(feats))}]")
        return form


_PACK_KEYS = ("copula", "articles", "pronouns", "demonstrative", "words", "numbers", "serial_comma",
              "genitive_suffix", "a_an", "a_exceptions", "an_exceptions", "complement_case")


def _build_pack(code: str, raw: dict) -> LanguagePack:
    return LanguagePack(
        code=code,
        copula=raw.get("copula"),
        articles=tuple((k, FormTable.parse(v)) for k, v in (raw.get("articles") or {}).items()),
        pronouns=FormTable.parse(raw["pronouns"]) if raw.get("pronouns") is not None else None,
        demonstrative=FormTable.parse(raw["demonstrative"]) if raw.get("demonstrative") is not None else None,
        words=tuple((raw.get("words") or {}).items()),
        numbers=tuple(raw.get("numbers") or ()),
        serial_comma=bool(raw.get("serial_comma", False)),
        genitive_suffix=raw.get("genitive_suffix"),
        a_an=bool(raw.get("a_an", False)),
        a_exceptions=tuple(raw.get("a_exceptions") or ()),
        an_exceptions=tuple(raw.get("an_exceptions") or ()),
        complement_case=raw.get("complement_case", "nom"),
    )


# --------------------------------------------------------------------------
# Parameters


@dataclass(frozen=True)
class Params:
    max_messages_per_page: int = 100
    max_messages_per_sentence: int = 3
    max_fact_distance: int = 1


# --------------------------------------------------------------------------
# The resource set


@dataclass(frozen=True)
class ResourceSet:
    raw: dict = field(compare=False, repr=False)
    lexicon: tuple[LexEntry, ...] = ()
    names: tuple[NLName, ...] = ()
    plans: tuple[SentencePlan, ...] = ()
    anonymous: frozenset[str] = frozenset()
    sections: SectionConfig = SectionConfig()
    interest: tuple[InterestAssignment, ...] = ()
    params: tuple[tuple[str, Params], ...] = ()
    languages: tuple[tuple[str, LanguagePack], ...] = ()

    def lexeme(self, lid: str) -> LexEntry | None:
        return self._lex.get(lid)

    def __post_init__(self):
        object.__setattr__(self, "_lex", {e.id: e for e in self.lexicon})

    def names_for(self, entity: str, lang: str) -> list[NLName]:
        return [n for n in self.names if n.entity == entity and n.lang == lang]

    def plans_for(self, prop: str, lang: str) -> list[SentencePlan]:
        return [p for p in self.plans if p.prop == prop and p.lang == lang]

    def language(self, code: str) -> LanguagePack:
        pack = dict(self.languages).get(code)
        if pack is None:
            raise InflectionError(f"no language pack for '{code}'")
        return pack

    def params_for(self, user_type: str) -> Params:
        table = dict(self.params)
        return table.get(user_type) or table.get(ANY_USER) or Params()

    def is_anonymous(self, entity: str) -> bool:
        return entity in self.anonymous

    def to_document(self) -> dict:
        return copy.deepcopy(self.raw)


def empty_resources() -> ResourceSet:
    return load_resources("{}")


# --------------------------------------------------------------------------
# Loading


class _Loader:
    def __init__(self, doc: dict, prefixes: dict[str, str] | None):
        self.doc = doc
        self.diags: list[str] = []
        self.prefixes = dict(STANDARD_PREFIXES)
        self.prefixes.update(prefixes or {})
        for p, ns in (doc.get("prefixes") or {}).items():
            self.prefixes[p if p.endswith(":") else p + ":"] = ns

    def err(self, where: str, msg: str):
        self.diags.append(f"{where}: {msg}")

    def iri(self, text, where: str, allow_keyword: bool = False) -> str | None:
        if not isinstance(text, str) or not text:
            self.err(where, f"identifier expected, got {text!r}")
            return None
        if allow_keyword and text in KEYWORDS:
            return text
        if text.startswith("<") and text.endswith(">"):
            return text[1:-1]
        if "://" in text or text.startswith("_:"):
            return text
        if ":" in text:
            pfx, _, local = text.partition(":")
            if pfx + ":" not in self.prefixes:
                self.err(where, f"unknown prefix '{pfx}:' in {text}")
                return None
            return self.prefixes[pfx + ":"] + local
        if ":" in self.prefixes:
            return self.prefixes[":"] + text
        self.err(where, f"cannot resolve identifier {text!r} (no default prefix)")
        return None

    def scores(self, raw, where) -> tuple[tuple[str, int], ...]:
        if raw is None:
            return ()
        if isinstance(raw, int) and not isinstance(raw, bool):
            return ((ANY_USER, raw),)
        if not isinstance(raw, dict) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw.values()):
            self.err(where, "appropriateness must be an integer or an object of integers")
            return ()
        return tuple(raw.items())

    # -- lexicon ------------------------------------------------------------

    def lexicon(self) -> tuple[LexEntry, ...]:
        merged: dict[str, dict] = {}
        for e in ENGLISH_LEXICON:
            merged[e["id"]] = copy.deepcopy(e)
        seen = set()
        for i, e in enumerate(self.doc.get("lexicon") or []):
            where = f"lexicon[{i}]"
            if not isinstance(e, dict) or not isinstance(e.get("id"), str):
                self.err(where, "entry needs a string 'id'")
                continue
            where = f"lexicon entry {e['id']}"
            if e["id"] in seen:
                self.err(where, "duplicate lexicon id")
                continue
            seen.add(e["id"])
            if e["id"] in merged:
                base = merged[e["id"]]
                if e.get("pos", base["pos"]) != base["pos"]:
                    self.err(where, "part of speech differs from the built-in entry")
                base = copy.deepcopy(base)
                base["langs"].update(e.get("langs") or {})
                base["auto"] = e.get("auto", False)
                merged[e["id"]] = base
            else:
                merged[e["id"]] = e
        out = []
        for lid, e in merged.items():
            where = f"lexicon entry {lid}"
            pos = e.get("pos")
            if pos not in ("verb", "noun", "adjective"):
                self.err(where, f"part of speech must be verb, noun or adjective, got {pos!r}")
                continue
            langs = []
            if not isinstance(e.get("langs"), dict) or not e["langs"]:
                self.err(where, "needs a non-empty 'langs' object")
                continue
            for code, ld in e["langs"].items():
                if not isinstance(ld, dict) or "forms" not in ld:
                    self.err(where, f"language '{code}' needs 'forms'")
                    continue
                try:
                    table = FormTable.parse(ld["forms"], verbal=(pos == "verb"))
                except TypeError as exc:
                    self.err(where, str(exc))
                    continue
                if not table.entries or any(not isinstance(v, str) or not v.strip() for _, v in table.entries):
                    self.err(where, f"language '{code}' has an empty word form")
                    continue
                gender = features(ld.get("gender"))
                bad = gender - set(GENDERS)
                if bad:
                    self.err(where, f"unknown gender {sorted(bad)}")
                langs.append((code, LexLang(table, gender)))
            out.append(LexEntry(lid, pos, tuple(langs), bool(e.get("auto", False))))
        return tuple(out)

    # -- shared slot parsing ------------------------------------------------

    def lexeme_ref(self, lid, where, lang, lex: dict, pos=None) -> bool:
        entry = lex.get(lid)
        if entry is None:
            self.err(where, f"unknown lexeme {lid}")
            return False
        if pos and entry.pos not in pos:
            self.err(where, f"lexeme {lid} is a {entry.pos}, expected {' or '.join(pos)}")
            return False
        if entry.lang(lang) is None:
            self.err(where, f"lexeme {lid} has no '{lang}' entry")
            return False
        return True

    def name_slot(self, raw, where, lang, lex):
        if not isinstance(raw, dict):
            self.err(where, "slot must be an object")
            return None
        cap = bool(raw.get("capitalize", False))
        if "article" in raw:
            if raw["article"] not in ("def", "indef"):
                self.err(where, "article must be 'def' or 'indef'")
                return None
            return ArticleSlot(raw["article"])
        if "head" in raw:
            self.lexeme_ref(raw["head"], where, lang, lex, ("noun", "adjective"))
            return HeadSlot(raw["head"], cap)
        for key in ("noun", "adj"):
            if key in raw:
                pos = ("noun",) if key == "noun" else ("adjective",)
                self.lexeme_ref(raw[key], where, lang, lex, pos)
                agree = raw.get("agree")
                if agree not in (None, "head"):
                    self.err(where, f"NL-name slots agree only with 'head', not {agree!r}")
                return LexSlot(raw[key], features(raw.get("form")), agree, cap)
        if "prep" in raw:
            return PrepSlot(str(raw["prep"]))
        if "text" in raw:
            return TextSlot(str(raw["text"]), cap)
        self.err(where, f"unknown slot kind {sorted(raw)}")
        return None

    def plan_slot(self, raw, where, lang, lex, has_filler):
        if not isinstance(raw, dict):
            self.err(where, "slot must be an object")
            return None
        if "owner" in raw:
            o = raw["owner"] or {}
            policy = o.get("policy", "auto")
            if policy not in ("auto", "name", "none"):
                self.err(where, f"owner policy must be auto, name or none, got {policy!r}")
            return OwnerSlot(_ALIASES.get(o.get("case", "nom"), o.get("case", "nom")), policy)
        if "verb" in raw:
            v = raw["verb"]
            if isinstance(v, str):
                v = {"lexeme": v}
            self.lexeme_ref(v.get("lexeme"), where, lang, lex, ("verb",))
            tense = _ALIASES.get(v.get("tense", "present"), v.get("tense", "present"))
            voice = v.get("voice", "active")
            polarity = v.get("polarity", "positive")
            agree = v.get("agree", "owner")
            if tense not in TENSES:
                self.err(where, f"unknown tense {tense!r}")
            if voice not in _VOICES:
                self.err(where, f"unknown voice {voice!r}")
            if polarity not in ("positive", "negative", "auto"):
                self.err(where, f"unknown polarity {polarity!r}")
            if agree not in ("owner", "filler", "sg", "pl"):
                self.err(where, f"verb agreement must be owner, filler, sg or pl, got {agree!r}")
            elif agree == "filler" and not has_filler:
                self.err(where, "verb agrees with a filler slot that does not exist")
            return VerbSlot(v.get("lexeme"), tense, voice, polarity, agree)
        for key in ("noun", "adj"):
            if key in raw:
                pos = ("noun",) if key == "noun" else ("adjective",)
                self.lexeme_ref(raw[key], where, lang, lex, pos)
                agree = raw.get("agree")
                if agree not in (None, "owner", "filler"):
                    self.err(where, f"agreement reference must be owner or filler, got {agree!r}")
                elif agree == "filler" and not has_filler:
                    self.err(where, "agreement with a filler slot that does not exist")
                return LexSlot(raw[key], features(raw.get("form")), agree, bool(raw.get("capitalize", False)))
        if "prep" in raw:
            return PrepSlot(str(raw["prep"]))
        if "text" in raw:
            return TextSlot(str(raw["text"]), bool(raw.get("capitalize", False)))
        if "filler" in raw:
            f = raw["filler"] or {}
            art = f.get("article")
            if art not in (None, "def", "indef", "none"):
                self.err(where, f"filler article must be def, indef or none, got {art!r}")
            num = f.get("number")
            if num not in (None, "sg", "pl"):
                self.err(where, f"filler number must be sg or pl, got {num!r}")
            return FillerSlot(_ALIASES.get(f.get("case", "acc"), f.get("case", "acc")), art, num)
        if "concat" in raw:
            parts = []
            for j, p in enumerate(raw["concat"] or []):
                pw = f"{where} concat[{j}]"
                if not isinstance(p, dict) or p.get("mode", "value") not in ("value", "name"):
                    self.err(pw, "concat parts need a property and mode value|name")
                    continue
                iri = self.iri(p.get("property"), pw)
                if iri:
                    parts.append((iri, p.get("mode", "value")))
            if not parts:
                self.err(where, "concat slot needs at least one part")
            return ConcatSlot(tuple(parts))
        self.err(where, f"unknown slot kind {sorted(raw)}")
        return None

    # -- names and plans ----------------------------------------------------

    def names(self, lex) -> tuple[NLName, ...]:
        out = []
        ids = set()
        for i, n in enumerate(self.doc.get("names") or []):
            if not isinstance(n, dict):
                self.err(f"names[{i}]", "name must be an object")
                continue
            nid = n.get("id") or f"name{i}"
            where = f"name {nid}"
            if nid in ids:
                self.err(where, "duplicate NL-name id")
            ids.add(nid)
            lang = n.get("lang", "en")
            entity = self.iri(n.get("entity"), where)
            slots = [self.name_slot(s, f"{where} slot {j + 1}", lang, lex) for j, s in enumerate(n.get("slots") or [])]
            slots = [s for s in slots if s is not None]
            heads = sum(isinstance(s, HeadSlot) for s in slots)
            if heads != 1:
                self.err(where, f"exactly one head slot required, found {heads}")
                continue
            number = n.get("number", "sg")
            if number not in ("sg", "pl"):
                self.err(where, f"number must be sg or pl, got {number!r}")
            if entity:
                out.append(NLName(nid, entity, lang, tuple(slots), number,
                                  self.scores(n.get("appropriateness"), where)))
        seen: dict[tuple, list[NLName]] = {}
        for n in out:
            seen.setdefault((n.entity, n.lang), []).append(n)
        for (entity, lang), group in seen.items():
            tables = [dict(n.appropriateness) for n in group]
            if len(group) > 1 and any(tables.count(t) > 1 for t in tables):
                ids = ", ".join(n.id for n in group)
                self.err(f"names {ids}", f"several NL names for {entity} ({lang}) without distinct appropriateness")
        return tuple(out)

    def plans(self, lex) -> tuple[SentencePlan, ...]:
        out = []
        ids = set()
        for i, p in enumerate(self.doc.get("plans") or []):
            if not isinstance(p, dict):
                self.err(f"plans[{i}]", "plan must be an object")
                continue
            pid = p.get("id") or f"plan{i}"
            where = f"plan {pid}"
            if pid in ids:
                self.err(where, "duplicate sentence-plan id")
            ids.add(pid)
            lang = p.get("lang", "en")
            prop = self.iri(p.get("property"), where, allow_keyword=True)
            raw_slots = p.get("slots") or []
            has_filler = any(isinstance(s, dict) and ("filler" in s or "concat" in s) for s in raw_slots)
            slots = [self.plan_slot(s, f"{where} slot {j + 1}", lang, lex, has_filler)
                     for j, s in enumerate(raw_slots)]
            slots = [s for s in slots if s is not None]
            owners = sum(isinstance(s, OwnerSlot) for s in slots)
            fillers = sum(isinstance(s, (FillerSlot, ConcatSlot)) for s in slots)
            if owners != 1:
                self.err(where, f"exactly one owner slot required, found {owners}")
            if fillers > 1:
                self.err(where, "at most one filler or concat slot allowed")
            counting = p.get("counting")
            if counting is not None:
                self.lexeme_ref(counting, f"{where} counting", lang, lex, ("noun",))
            agg = p.get("aggregation", True)
            if not isinstance(agg, bool):
                self.err(where, "aggregation must be true or false")
            if prop:
                out.append(SentencePlan(pid, prop, lang, tuple(slots), bool(agg),
                                        self.scores(p.get("appropriateness"), where), counting))
        return tuple(out)

    # -- the rest -----------------------------------------------------------

    def sections(self) -> SectionConfig:
        raw = self.doc.get("sections")
        if not raw:
            return SectionConfig()
        if isinstance(raw, list):
            raw = {"sections": raw}
        secs = []
        for i, s in enumerate(raw.get("sections") or []):
            where = f"section {s.get('id', i) if isinstance(s, dict) else i}"
            if not isinstance(s, dict) or not isinstance(s.get("id"), str):
                self.err(where, "section needs a string 'id'")
                continue
            props = [self.iri(p, where, allow_keyword=True) for p in s.get("properties") or []]
            props = [p for p in props if p]
            order = s.get("order")
            if order == "chain":
                pairs = list(zip(props, props[1:]))
            else:
                pairs = []
                for pair in order or []:
                    if not isinstance(pair, list) or len(pair) != 2:
                        self.err(where, "property order entries are [before, after] pairs")
                        continue
                    a = self.iri(pair[0], where, allow_keyword=True)
                    b = self.iri(pair[1], where, allow_keyword=True)
                    if a and b:
                        pairs.append((a, b))
            secs.append(Section(s["id"], s.get("title"), tuple(props), tuple(pairs)))
        ids = [s.id for s in secs]
        if len(set(ids)) != len(ids):
            self.err("sections", "duplicate section id")
        order = raw.get("order")
        if order == "chain":
            spairs = list(zip(ids, ids[1:]))
        else:
            spairs = []
            for pair in order or []:
                if not isinstance(pair, list) or len(pair) != 2 or not all(x in ids for x in pair):
                    self.err("sections", f"section order pair {pair!r} must name two declared sections")
                    continue
                spairs.append(tuple(pair))
        try:
            return SectionConfig(tuple(secs), tuple(spairs))
        except ValueError as exc:
            self.err("sections", str(exc))
            return SectionConfig()

    def interest(self) -> tuple[InterestAssignment, ...]:
        out = []
        for i, a in enumerate(self.doc.get("interest") or []):
            where = f"interest[{i}]"
            if not isinstance(a, dict):
                self.err(where, "assignment must be an object")
                continue
            prop = self.iri(a.get("property"), where, allow_keyword=True)
            cls = self.iri(a["class"], where) if "class" in a else None
            ent = self.iri(a["entity"], where) if "entity" in a else None
            score = a.get("score", 1)
            threshold = a.get("threshold")
            try:
                if prop:
                    out.append(InterestAssignment(prop, score, threshold, a.get("user_type", ANY_USER), cls, ent))
            except (ValueError, TypeError) as exc:
                self.err(where, str(exc))
        return tuple(out)

    def params(self) -> tuple[tuple[str, Params], ...]:
        raw = self.doc.get("params") or {}
        out = []
        names = {"maxMessagesPerPage": "max_messages_per_page",
                 "maxMessagesPerSentence": "max_messages_per_sentence",
                 "maxFactDistance": "max_fact_distance"}
        for ut, vals in raw.items():
            where = f"params {ut}"
            if not isinstance(vals, dict):
                self.err(where, "parameters must be an object")
                continue
            kw = {}
            for k, v in vals.items():
                if k not in names:
                    self.err(where, f"unknown parameter {k}")
                elif not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    self.err(where, f"{k} must be a positive integer")
                else:
                    kw[names[k]] = v
            if kw.get("max_fact_distance", 1) not in (1, 2):
                self.err(where, "maxFactDistance must be 1 or 2")
            out.append((ut, Params(**kw)))
        return tuple(out)

    def languages(self, lex) -> tuple[tuple[str, LanguagePack], ...]:
        raw = {"en": copy.deepcopy(ENGLISH_PACK)}
        for code, pack in (self.doc.get("languages") or {}).items():
            if not isinstance(pack, dict):
                self.err(f"language {code}", "pack must be an object")
                continue
            unknown = set(pack) - set(_PACK_KEYS)
            if unknown:
                self.err(f"language {code}", f"unknown keys {sorted(unknown)}")
            base = raw.get(code, {})
            if "words" in pack and "words" in base:
                pack = dict(pack, words={**base["words"], **pack["words"]})
            raw[code] = {**base, **pack}
        out = []
        for code, pack in raw.items():
            try:
                lp = _build_pack(code, pack)
            except TypeError as exc:
                self.err(f"language {code}", str(exc))
                continue
            if lp.copula is not None and lp.copula in lex:
                self.lexeme_ref(lp.copula, f"language {code} copula", code, lex, ("verb",))
            elif lp.copula is not None:
                self.err(f"language {code}", f"copula lexeme {lp.copula} is not in the lexicon")
            out.append((code, lp))
        return tuple(out)


def load_resources(document: str | dict, prefixes: dict[str, str] | None = None) -> ResourceSet:
    """Parse and validate a resource document; raises ResourceError listing all problems."""
    if isinstance(document, str):
        try:
            doc = json.loads(document) if document.strip() else {}
        except json.JSONDecodeError as exc:
            raise ResourceError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None
    else:
        doc = copy.deepcopy(document)
    if not isinstance(doc, dict):
        raise ResourceError(["resource document must be a JSON object"])
    ld = _Loader(doc, prefixes)
    for k in doc:
        if k not in TOP_LEVEL_KEYS:
            ld.err("document", f"unknown top-level key {k!r}")
    lexicon = ld.lexicon()
    lex = {e.id: e for e in lexicon}
    names = ld.names(lex)
    plans = ld.plans(lex)
    anonymous = frozenset(a for a in (ld.iri(x, "anonymous") for x in doc.get("anonymous") or []) if a)
    sections = ld.sections()
    interest = ld.interest()
    params = ld.params()
    languages = ld.languages(lex)
    _check_plan_forms(ld, plans, lex)
    if ld.diags:
        raise ResourceError(ld.diags)
    return ResourceSet(doc, lexicon, names, plans, anonymous, sections, interest, params, languages)


def _check_plan_forms(ld: _Loader, plans, lex) -> None:
    """Every singular verb form a plan asks for must exist."""
    for p in plans:
        for j, s in enumerate(p.slots):
            if not isinstance(s, VerbSlot) or s.lexeme not in lex:
                continue
            entry = lex[s.lexeme]
            if entry.lang(p.lang) is None:
                continue
            polarities = ("positive", "negative") if s.polarity == "auto" else (s.polarity,)
            number = s.agree if s.agree in ("sg", "pl") else "sg"
            for pol in polarities:
                req = {s.tense, s.voice, pol, number}
                if entry.lang(p.lang).forms.lookup(req) is None:
                    ld.err(f"plan {p.id} slot {j + 1}",
                           f"lexeme {s.lexeme} has no '{p.lang}' form for [{' '.join(sorted(req))}]")


def load_resources_file(path: str, prefixes: dict[str, str] | None = None) -> ResourceSet:
    with open(path, encoding="utf-8") as fh:
        return load_resources(fh.read(), prefixes)


def dump_resources(rs: ResourceSet) -> str:
    return json.dumps(rs.raw, ensure_ascii=False, indent=2)

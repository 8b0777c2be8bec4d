"""Sentence-plan resolution and instantiation.

Every message gets a plan: an authored one, a built-in plan for the
domain-independent keywords, one derived from the inner property's plan
for modified predicates, or the default three-slot plan. Instantiating a
plan fills its slots with words; subject references stay unresolved until
referring-expression generation.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .english import FUNCTION_WORDS
from .owl import OntologyModel, local_name, tokenize_identifier
from .resources import (ArticleSlot, ConcatSlot, FillerSlot, HeadSlot, InflectionError, LexEntry, LexSlot,
                        NLName, OwnerSlot, PrepSlot, ResourceSet, SentencePlan, TextSlot, VerbSlot,
                        inflect, select_variant)
from .selection import ANY_USER
from .sentences import Clause, CountInfo, FillerPart, Lex, Phrase, Ref, Sentence, VerbPart, Word
from .triples import (CARDINALITY_MODIFIERS, ClassRef, Conj, Count, Disj, IndividualRef, Message, MessageTriple,
                      Value)
from . import owl

CARDINALITY_WORDS = {"maxCardinality": "at_most", "minCardinality": "at_least", "exactCardinality": "exactly"}


class LexicalizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ResolvedPlan:
    """A plan ready to instantiate, with where it came from."""

    slots: tuple
    source: str  # authored | builtin | derived | default
    kind: str  # clause kind
    aggregation: bool = True
    modifier: str | None = None
    counting: str | None = None
    plan_id: str | None = None


@dataclass(frozen=True)
class LexConfig:
    lang: str = "en"
    user_type: str = ANY_USER
    use_plans: bool = True
    use_names: bool = True


def _words(text: str, tag: str = "text", capitalize: bool = False) -> tuple[Word, ...]:
    out = []
    for w in text.split():
        if capitalize:
            w = w[:1].upper() + w[1:]
        out.append(Word(w, tag))
    return tuple(out)


def _single_gender(gender: frozenset) -> frozenset:
    return gender if len(gender) == 1 else frozenset()


class Lexicalizer:
    def __init__(self, model: OntologyModel, resources: ResourceSet, cfg: LexConfig = LexConfig()):
        self.model = model
        self.rs = resources
        self.cfg = cfg
        self.lang = cfg.lang
        self.pack = resources.language(cfg.lang)
        self._names: dict[str, NLName | None] = {}

    # -- names --------------------------------------------------------------

    def name_of(self, entity: str) -> NLName | None:
        if not self.cfg.use_names:
            return None
        if entity not in self._names:
            cands = self.rs.names_for(entity, self.lang)
            self._names[entity] = select_variant(cands, self.cfg.user_type) if cands else None
        return self._names[entity]

    def lexeme(self, lid: str) -> LexEntry:
        e = self.rs.lexeme(lid)
        if e is None:
            raise LexicalizationError(f"unknown lexeme {lid}")
        return e

    def inflect(self, lid: str, request) -> str:
        return inflect(self.lexeme(lid), request, self.lang)

    def default_number(self, entity: str) -> str:
        name = self.name_of(entity)
        return name.number if name else "sg"

    def name_gender(self, entity: str) -> frozenset | None:
        """Gender of the entity's own NL name head, if it has a noun head."""
        name = self.name_of(entity)
        if name is None:
            return None
        entry = self.lexeme(name.head.lexeme)
        ll = entry.lang(self.lang)
        if entry.pos != "noun" or ll is None or not ll.gender:
            return None
        return ll.gender

    def fallback_words(self, entity: str) -> tuple[tuple[Word, ...], str]:
        label = self.model.lookup_label(entity, self.lang)
        if label:
            return _words(" ".join(label.split()), "name"), "label"
        return tuple(Word(w, "name") for w in tokenize_identifier(local_name(entity))), "tokenized-id"

    def entity_phrase(self, entity: str, case: str = "nom", number: str | None = None,
                      article: str | None = None, plural: bool = True) -> Phrase:
        """The NL name of ``entity`` (or its label or tokenized identifier)."""
        name = self.name_of(entity)
        if name is None:
            words, source = self.fallback_words(entity)
            return Phrase(words, number=number or "sg", entity=entity, source=source,
                          gender=frozenset({"neuter"}))
        phrase = self.realize_name(name, case, number, article)
        if plural and phrase.number == "sg":
            try:
                pl = self.realize_name(name, case, "pl", article)
            except InflectionError:
                pl = None
            phrase = replace(phrase, plural=pl)
        return phrase

    def realize_name(self, name: NLName, case: str, number: str | None = None,
                     article: str | None = None) -> Phrase:
        number = number or name.number
        head_entry = self.lexeme(name.head.lexeme)
        hl = head_entry.lang(self.lang)
        gender = hl.gender if hl is not None and hl.gender else frozenset()
        feats = {number, case} | _single_gender(gender)
        slots = list(name.slots)
        if article is not None:
            if slots and isinstance(slots[0], ArticleSlot):
                slots = slots[1:]
            if article in ("def", "indef"):
                slots.insert(0, ArticleSlot(article))
        words: list[Word] = []
        content_pos = []
        for slot in slots:
            if isinstance(slot, ArticleSlot):
                if slot.kind == "indef" and number == "pl":
                    continue
                text = self.pack.article(slot.kind, feats)
                words.extend(_words(text, "indef" if slot.kind == "indef" else "art"))
            elif isinstance(slot, HeadSlot):
                pos = "adj" if head_entry.pos == "adjective" else "noun"
                form = self.inflect(slot.lexeme, feats)
                ws = _words(form, pos, slot.capitalize)
                words.extend(replace(w, head=True) for w in ws)
                content_pos.append(pos)
            elif isinstance(slot, LexSlot):
                entry = self.lexeme(slot.lexeme)
                req = set(slot.form)
                if slot.agree == "head":
                    req |= feats
                if not req:
                    req = {"sg", "nom"}
                pos = "adj" if entry.pos == "adjective" else "noun"
                words.extend(_words(self.inflect(slot.lexeme, req), pos, slot.capitalize))
                content_pos.append(pos)
            elif isinstance(slot, PrepSlot):
                words.extend(_words(slot.text, "prep"))
            elif isinstance(slot, TextSlot):
                words.extend(_words(slot.text, "text", slot.capitalize))
        adjectival = bool(content_pos) and all(p == "adj" for p in content_pos)
        return Phrase(tuple(words), number=number, gender=gender or frozenset({"neuter"}),
                      entity=name.entity, source="nl-name", adjectival=adjectival)

    def is_adjectival(self, entity: str) -> bool:
        name = self.name_of(entity)
        if name is None:
            return False
        return self.realize_name(name, "nom").adjectival

    # -- fillers ------------------------------------------------------------

    def filler_phrase(self, filler, case: str = "acc", article: str | None = None,
                      number: str | None = None) -> Phrase:
        if isinstance(filler, (IndividualRef, ClassRef)):
            return self.entity_phrase(filler.iri, case, number, article)
        if isinstance(filler, Value):
            text = " ".join(filler.literal.lexical.split())
            return Phrase(_words(text, "value"), source="literal-value")
        if isinstance(filler, (Conj, Disj)):
            items = tuple(self.filler_phrase(i, case, article, number) for i in filler.items)
            conj = self.pack.word("and" if isinstance(filler, Conj) else "or")
            return Phrase(items=items, conj=conj, serial=self.pack.serial_comma,
                          number="pl" if isinstance(filler, Conj) else items[0].number)
        if isinstance(filler, Count):
            return Phrase(_words(str(filler.n), "num"))
        raise LexicalizationError(f"cannot realize filler {filler!r}")

    # -- plan resolution ----------------------------------------------------

    def authored(self, prop: str) -> SentencePlan | None:
        if not self.cfg.use_plans:
            return None
        cands = self.rs.plans_for(prop, self.lang)
        return select_variant(cands, self.cfg.user_type) if cands else None

    def builtin(self, triple: MessageTriple) -> ResolvedPlan:
        pred = triple.predicate
        pack = self.pack
        if pack.copula is None:
            raise LexicalizationError(f"language '{self.lang}' has no copula for the built-in plans")
        comp = pack.complement_case
        negative = pred.modifier == "not"
        verb = VerbSlot(pack.copula, polarity="negative" if negative else "positive")
        owner = OwnerSlot("nom")
        name = pred.name
        if name in ("instanceOf", "isA"):
            cls = triple.filler.iri if isinstance(triple.filler, ClassRef) else None
            if cls is not None and self.is_adjectival(cls):
                return ResolvedPlan((owner, verb, FillerSlot(comp, "none")), "builtin",
                                    "keyword" if negative else "class-adj", modifier=pred.modifier)
            if name == "instanceOf":
                slots = (owner, verb, FillerSlot(comp, "indef"))
            else:
                slots = (owner, verb, TextSlot(pack.word("kind_of")), FillerSlot(comp, "none"))
            return ResolvedPlan(slots, "builtin", "keyword" if negative else name, modifier=pred.modifier)
        if name == "oneOf":
            return ResolvedPlan((owner, verb, FillerSlot(comp)), "builtin", "keyword")
        word = "identical_to" if name == "sameIndividual" else "not_identical_to"
        return ResolvedPlan((owner, verb, TextSlot(pack.word(word)), FillerSlot("acc")), "builtin", "keyword")

    def default_plan(self, prop: str) -> ResolvedPlan:
        return ResolvedPlan((OwnerSlot("nom"), TextSlot(self.property_text(prop)), FillerSlot("acc")),
                            "default", "property", aggregation=False)

    def property_text(self, prop: str) -> str:
        label = self.model.lookup_label(prop, self.lang)
        if label:
            return " ".join(label.split())
        return " ".join(tokenize_identifier(local_name(prop)))

    def plan_for(self, triple: MessageTriple) -> ResolvedPlan:
        pred = triple.predicate
        if pred.is_keyword:
            if pred.modifier is None:
                plan = self.authored(pred.name)
                if plan is not None:
                    kind = pred.name if pred.name in ("instanceOf", "isA") else "keyword"
                    return ResolvedPlan(plan.slots, "authored", kind, plan.aggregation, None, plan.counting, plan.id)
                return self.builtin(triple)
            plan = self.authored(pred.name)
            if plan is not None:
                return ResolvedPlan(_negate(plan.slots, self.pack), "derived", "keyword", plan.aggregation,
                                    "not", plan.counting, plan.id)
            return self.builtin(triple)
        plan = self.authored(pred.name)
        if plan is not None:
            base = ResolvedPlan(plan.slots, "authored", "property", plan.aggregation, None, plan.counting, plan.id)
        else:
            base = self.default_plan(pred.name)
        if pred.modifier is None:
            return base
        slots = base.slots
        if pred.modifier == "not":
            slots = _negate(slots, self.pack)
        return ResolvedPlan(slots, "derived" if base.source == "authored" else "default", "modified",
                            base.aggregation, pred.modifier, base.counting, base.plan_id)

    # -- instantiation ------------------------------------------------------

    def lexicalize(self, message: Message, section: str | None = None) -> Sentence:
        clauses = [self.instantiate(self.plan_for(t), t) for t in message.triples]
        aggregatable = all(self.plan_for(t).aggregation for t in message.triples)
        conj = self.pack.word("or") if message.disjunctive else ""
        return Sentence(tuple(clauses), (message,), section, aggregatable, conj,
                        disjunctive=message.disjunctive)

    def instantiate(self, plan: ResolvedPlan, triple: MessageTriple) -> Clause:
        subject = triple.subject
        owner_number = self.default_number(subject)
        filler = triple.filler
        filler_slot = next((s for s in plan.slots if isinstance(s, (FillerSlot, ConcatSlot))), None)
        boolean = isinstance(filler, Value) and filler.literal.is_boolean
        filler_number = None
        if isinstance(filler_slot, FillerSlot) and not isinstance(filler, Count):
            filler_number = self._filler_for_slot(plan, filler, filler_slot).number
        parts: list = []
        span = None
        count = None
        consumed = False
        for slot in plan.slots:
            if isinstance(slot, OwnerSlot):
                if slot.policy != "none":
                    parts.append(Ref(subject, slot.case, slot.policy))
            elif isinstance(slot, VerbSlot):
                polarity = slot.polarity
                if polarity == "auto":
                    if boolean:
                        polarity = "positive" if filler.literal.value else "negative"
                        consumed = True
                    else:
                        polarity = "positive"
                if slot.agree == "owner":
                    number = owner_number
                elif slot.agree == "filler":
                    number = filler_number or "sg"
                else:
                    number = slot.agree
                req = {slot.tense, slot.voice, polarity, number}
                words = _words(self.inflect(slot.lexeme, req), "verb")
                try:
                    part_form = self.inflect(slot.lexeme, {"participle"})
                    participle = _words(part_form, "verb")
                except InflectionError:
                    participle = None
                parts.append(VerbPart(words, slot.lexeme, slot.tense, slot.voice, polarity,
                                      slot.lexeme == self.pack.copula, participle))
            elif isinstance(slot, LexSlot):
                entry = self.lexeme(slot.lexeme)
                req = set(slot.form)
                if slot.agree == "owner":
                    req.add(owner_number)
                elif slot.agree == "filler":
                    req.add(filler_number or "sg")
                if not req:
                    req = {"sg", "nom"}
                pos = "adj" if entry.pos == "adjective" else "noun"
                parts.append(Lex(_words(self.inflect(slot.lexeme, req), pos, slot.capitalize)))
            elif isinstance(slot, PrepSlot):
                parts.append(Lex(_words(slot.text, "prep")))
            elif isinstance(slot, TextSlot):
                parts.append(Lex(_words(slot.text, "text", slot.capitalize)))
            elif isinstance(slot, FillerSlot):
                if boolean and (consumed or _has_auto_verb(plan.slots)):
                    continue
                start = len(parts)
                if plan.modifier in CARDINALITY_MODIFIERS:
                    count = self.count_info(plan, triple)
                    np = count.singular if count.n == 1 else count.plural
                    parts.append(Lex(_words(self.pack.word(CARDINALITY_WORDS[plan.modifier]), "text")))
                    parts.append(Lex(_words(self.pack.number_word(count.n), "num")))
                    parts.append(FillerPart(np))
                elif plan.modifier in ("allValuesFrom", "someValuesFrom"):
                    word = self.pack.word("only" if plan.modifier == "allValuesFrom" else "some")
                    parts.append(Lex(_words(word, "text")))
                    parts.append(FillerPart(self.filler_phrase(filler, slot.case, "none", "pl")))
                else:
                    parts.append(FillerPart(self._filler_for_slot(plan, filler, slot)))
                span = (start, len(parts))
            elif isinstance(slot, ConcatSlot):
                start = len(parts)
                parts.append(FillerPart(self.concat(slot, filler)))
                span = (start, len(parts))
        return Clause(subject, tuple(parts), plan.kind, Message.single(triple), triple.predicate.name,
                      span, count)

    def _filler_for_slot(self, plan: ResolvedPlan, filler, slot: FillerSlot) -> Phrase:
        return self.filler_phrase(filler, slot.case, slot.article, slot.number)

    def count_info(self, plan: ResolvedPlan, triple: MessageTriple) -> CountInfo:
        filler = triple.filler
        if not isinstance(filler, Count):
            raise LexicalizationError("cardinality predicate without a count filler")
        if filler.cls is not None:
            sg = self.entity_phrase(filler.cls.iri, "acc", "sg", "none", plural=False)
            try:
                pl = self.entity_phrase(filler.cls.iri, "acc", "pl", "none", plural=False)
            except InflectionError:
                pl = sg
        elif plan.counting:
            sg = Phrase(_words(self.inflect(plan.counting, {"sg", "acc"}), "noun"))
            try:
                pl = Phrase(_words(self.inflect(plan.counting, {"pl", "acc"}), "noun"), number="pl")
            except InflectionError:
                pl = sg
        else:
            sg = pl = Phrase((Word(counting_noun(triple.predicate.name), "noun"),))
        return CountInfo(plan.modifier, filler.n, sg, pl)

    def concat(self, slot: ConcatSlot, filler) -> Phrase:
        """Property values (or names) of the filler entity, space-joined."""
        if not isinstance(filler, IndividualRef):
            raise LexicalizationError("a concatenation slot needs an individual filler")
        words: list[Word] = []
        for prop, mode in slot.parts:
            for ax in self.model.axioms_about(filler.iri):
                if isinstance(ax, owl.DataPropertyAssertion) and ax.subject == filler.iri and ax.prop == prop:
                    words.extend(_words(" ".join(ax.value.lexical.split()), "value"))
                elif (isinstance(ax, owl.ObjectPropertyAssertion) and ax.subject == filler.iri
                      and ax.prop == prop):
                    if mode == "name":
                        words.extend(self.entity_phrase(ax.object, "acc", plural=False).words)
                    else:
                        words.extend(_words(" ".join(tokenize_identifier(local_name(ax.object))), "value"))
        return Phrase(tuple(words), entity=filler.iri, source="literal-value")


def counting_noun(prop: str) -> str:
    """The last content token of a property identifier: ``madeFromGrape`` gives "grape"."""
    tokens = [t for t in tokenize_identifier(local_name(prop)) if t.lower() not in FUNCTION_WORDS]
    return tokens[-1] if tokens else "value"


def _has_auto_verb(slots) -> bool:
    return any(isinstance(s, VerbSlot) and s.polarity == "auto" for s in slots)


def _negate(slots, pack) -> tuple:
    """Flip the first verb's polarity; without a verb, put "not" before the property words."""
    slots = list(slots)
    for i, s in enumerate(slots):
        if isinstance(s, VerbSlot):
            flipped = {"positive": "negative", "negative": "positive", "auto": "negative"}[s.polarity]
            slots[i] = replace(s, polarity=flipped)
            return tuple(slots)
    for i, s in enumerate(slots):
        if not isinstance(s, OwnerSlot):
            slots.insert(i, TextSlot(pack.word("not")))
            return tuple(slots)
    return tuple(slots) + (TextSlot(pack.word("not")),)


def is_canned(clause: Clause) -> bool:
    """A clause whose plan omits the owner: the filler carries the whole sentence."""
    return clause.ref is None

"""Message triples: the intermediate representation between axioms and text.

A triple ``<S, P, O>`` says that owner ``S`` has field ``P`` filled by ``O``.
``P`` is an ontology property, a domain-independent keyword such as
``instanceOf``, or a modified property such as ``maxCardinality(P)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from . import owl
from .owl import Literal, OntologyModel

KEYWORDS = ("isA", "instanceOf", "oneOf", "differentIndividuals", "sameIndividual")
MODIFIERS = ("not", "maxCardinality", "minCardinality", "exactCardinality",
             "someValuesFrom", "allValuesFrom")
CARDINALITY_MODIFIERS = ("maxCardinality", "minCardinality", "exactCardinality")


class ConversionError(ValueError):
    pass


class UnknownTargetError(KeyError):
    pass


@dataclass(frozen=True)
class Predicate:
    """``name`` is a property IRI or a keyword; ``modifier`` wraps it."""

    name: str
    modifier: str | None = None

    def __post_init__(self):
        if self.modifier is not None and self.modifier not in MODIFIERS:
            raise ValueError(f"unknown modifier {self.modifier!r}")
        if self.modifier == "not":
            if self.is_keyword and self.name not in ("isA", "instanceOf"):
                raise ValueError(f"not() cannot wrap {self.name}")
        elif self.modifier is not None and self.is_keyword:
            raise ValueError(f"{self.modifier}() wraps ontology properties only")

    @property
    def is_keyword(self) -> bool:
        return self.name in KEYWORDS

    @property
    def is_plain_property(self) -> bool:
        return self.modifier is None and not self.is_keyword

    @property
    def is_cardinality(self) -> bool:
        return self.modifier in CARDINALITY_MODIFIERS

    def key(self) -> str:
        return f"{self.modifier}({self.name})" if self.modifier else self.name


@dataclass(frozen=True)
class IndividualRef:
    iri: str


@dataclass(frozen=True)
class ClassRef:
    iri: str


@dataclass(frozen=True)
class Value:
    literal: Literal


@dataclass(frozen=True)
class Count:
    n: int
    cls: ClassRef | None = None


@dataclass(frozen=True)
class Conj:
    items: tuple

    def __post_init__(self):
        _check_compound(self.items)


@dataclass(frozen=True)
class Disj:
    items: tuple

    def __post_init__(self):
        _check_compound(self.items)


def _check_compound(items):
    if len(items) < 2:
        raise ValueError("compound fillers need at least two members")
    if any(isinstance(i, (Conj, Disj, Count)) for i in items):
        raise ValueError("compound filler members must be simple")


Filler = Union[IndividualRef, ClassRef, Value, Count, Conj, Disj]


@dataclass(frozen=True)
class MessageTriple:
    subject: str
    predicate: Predicate
    filler: Filler
    source: object = field(default=None, compare=False, repr=False)
    intro: "MessageTriple | None" = field(default=None, compare=False, repr=False)

    @property
    def second_level(self) -> bool:
        return self.intro is not None


@dataclass(frozen=True)
class Message:
    """One triple, or a disjunction ``or(t1, t2, ...)`` of triples."""

    triples: tuple[MessageTriple, ...]
    disjunctive: bool = False

    def __post_init__(self):
        if not self.triples:
            raise ValueError("empty message")
        if not self.disjunctive and len(self.triples) != 1:
            raise ValueError("a non-disjunctive message holds exactly one triple")
        if len({t.subject for t in self.triples}) != 1:
            raise ValueError("disjuncts must share their subject")

    @classmethod
    def single(cls, triple: MessageTriple) -> "Message":
        return cls((triple,))

    @property
    def subject(self) -> str:
        return self.triples[0].subject

    @property
    def triple(self) -> MessageTriple:
        return self.triples[0]

    @property
    def intro(self) -> MessageTriple | None:
        return self.triples[0].intro


@dataclass(frozen=True)
class FactPlan:
    target: str
    kind: str  # "individual" | "class"
    primary: tuple[Message, ...]
    groups: tuple[tuple[str, tuple[Message, ...]], ...] = ()

    def group(self, entity: str) -> tuple[Message, ...]:
        for e, msgs in self.groups:
            if e == entity:
                return msgs
        return ()

    def all_messages(self) -> list[Message]:
        out = list(self.primary)
        for _, msgs in self.groups:
            out.extend(msgs)
        return out


# --------------------------------------------------------------------------
# Filler helpers


def filler_entities(filler: Filler) -> list[str]:
    """Individuals and classes mentioned by a filler, in order."""
    if isinstance(filler, (IndividualRef, ClassRef)):
        return [filler.iri]
    if isinstance(filler, Count):
        return [filler.cls.iri] if filler.cls else []
    if isinstance(filler, (Conj, Disj)):
        return [e for i in filler.items for e in filler_entities(i)]
    return []


def message_entities(message: Message) -> list[str]:
    out: list[str] = []
    for t in message.triples:
        for e in filler_entities(t.filler):
            if e not in out:
                out.append(e)
    return out


def filler_key(f: Filler) -> str:
    if isinstance(f, IndividualRef):
        return f.iri
    if isinstance(f, ClassRef):
        return f.iri
    if isinstance(f, Value):
        lit = f.literal
        suffix = f"@{lit.lang}" if lit.lang else (f"^^{lit.datatype}" if lit.datatype else "")
        return '"' + lit.lexical.replace('"', '\\"') + '"' + suffix
    if isinstance(f, Count):
        return str(f.n) + (f":{f.cls.iri}" if f.cls else "")
    if isinstance(f, Conj):
        return "and(" + ", ".join(filler_key(i) for i in f.items) + ")"
    if isinstance(f, Disj):
        return "or(" + ", ".join(filler_key(i) for i in f.items) + ")"
    raise TypeError(f)


def triple_key(t: MessageTriple) -> str:
    """Canonical text used by the user model; compound members keep their order."""
    return f"<{t.subject}, {t.predicate.key()}, {filler_key(t.filler)}>"


def message_key(m: Message) -> str:
    if m.disjunctive:
        return "or(" + ", ".join(triple_key(t) for t in m.triples) + ")"
    return triple_key(m.triple)


def format_filler(f: Filler, model: OntologyModel) -> str:
    ab = model.abbreviate
    if isinstance(f, (IndividualRef, ClassRef)):
        return ab(f.iri)
    if isinstance(f, Value):
        lit = f.literal
        out = '"' + lit.lexical + '"'
        if lit.lang:
            return out + "@" + lit.lang
        if lit.datatype:
            return out + "^^" + ab(lit.datatype)
        return out
    if isinstance(f, Count):
        return str(f.n) + (":" + ab(f.cls.iri) if f.cls else "")
    if isinstance(f, (Conj, Disj)):
        word = "and" if isinstance(f, Conj) else "or"
        return word + "(" + ", ".join(format_filler(i, model) for i in f.items) + ")"
    raise TypeError(f)


def format_triple(t: MessageTriple, model: OntologyModel) -> str:
    p = t.predicate
    name = p.name if p.is_keyword else model.abbreviate(p.name)
    pred = f"{p.modifier}({name})" if p.modifier else name
    return f"<{model.abbreviate(t.subject)}, {pred}, {format_filler(t.filler, model)}>"


def format_message(m: Message, model: OntologyModel) -> str:
    if m.disjunctive:
        return "or(" + ", ".join(format_triple(t, model) for t in m.triples) + ")"
    return format_triple(m.triple, model)


def format_plan(plan: FactPlan, model: OntologyModel) -> str:
    lines = [format_message(m, model) for m in plan.primary]
    for _, msgs in plan.groups:
        lines.extend(format_message(m, model) for m in msgs)
    return "\n".join(lines)


# --------------------------------------------------------------------------
# Conversion


def _axiom_name(ax) -> str:
    return owl.serialize_axiom(ax)


def _named(expr, ax) -> str:
    if not isinstance(expr, owl.NamedClass):
        raise ConversionError(f"a named class is required here: {_axiom_name(ax)}")
    return expr.iri


def _restriction(expr, target: str, self_filler: Filler, ax) -> list[Message]:
    """Shared rows of both tables for one class expression about ``target``."""

    def one(pred: Predicate, filler: Filler) -> list[Message]:
        return [Message.single(MessageTriple(target, pred, filler, ax))]

    if isinstance(expr, owl.OneOf):
        inds = [IndividualRef(i) for i in expr.individuals]
        return one(Predicate("oneOf"), Disj(tuple(inds)) if len(inds) > 1 else inds[0])
    if isinstance(expr, owl.HasValue):
        filler = Value(expr.value) if expr.is_data else IndividualRef(expr.value)
        return one(Predicate(expr.prop), filler)
    if isinstance(expr, owl.HasSelf):
        return one(Predicate(expr.prop), self_filler)
    if isinstance(expr, owl.Cardinality):
        cls = ClassRef(expr.cls.iri) if expr.cls else None
        return one(Predicate(expr.prop, expr.kind + "Cardinality"), Count(expr.n, cls))
    if isinstance(expr, owl.SomeValuesFrom):
        return one(Predicate(expr.prop, "someValuesFrom"), ClassRef(expr.cls.iri))
    if isinstance(expr, owl.AllValuesFrom):
        return one(Predicate(expr.prop, "allValuesFrom"), ClassRef(expr.cls.iri))
    raise ConversionError(f"cannot convert {type(expr).__name__} in {_axiom_name(ax)}")


def _convert_membership(expr, target: str, ax, keyword: str, self_filler: Filler) -> list[Message]:
    """Convert "target belongs to expr" for either table."""
    if isinstance(expr, owl.NamedClass):
        return [Message.single(MessageTriple(target, Predicate(keyword), ClassRef(expr.iri), ax))]
    if isinstance(expr, owl.ComplementOf):
        return [Message.single(MessageTriple(target, Predicate(keyword, "not"), ClassRef(expr.cls.iri), ax))]
    if isinstance(expr, owl.IntersectionOf):
        out: list[Message] = []
        for m in expr.members:
            out.extend(_convert_membership(m, target, ax, keyword, self_filler))
        return out
    if isinstance(expr, owl.UnionOf):
        triples: list[MessageTriple] = []
        for m in expr.members:
            for msg in _convert_membership(m, target, ax, keyword, self_filler):
                triples.extend(msg.triples)
        return [Message(tuple(triples), disjunctive=True)]
    return _restriction(expr, target, self_filler, ax)


def convert_for_individual(ax, target: str) -> list[Message]:
    """Rows of the individual-target table; [] when ``ax`` is not about ``target``."""

    def single(pred, filler):
        return [Message.single(MessageTriple(target, pred, filler, ax))]

    if isinstance(ax, owl.ClassAssertion):
        if ax.individual != target:
            return []
        return _convert_membership(ax.cls, target, ax, "instanceOf", IndividualRef(target))
    if isinstance(ax, owl.ObjectPropertyAssertion):
        return single(Predicate(ax.prop), IndividualRef(ax.object)) if ax.subject == target else []
    if isinstance(ax, owl.DataPropertyAssertion):
        return single(Predicate(ax.prop), Value(ax.value)) if ax.subject == target else []
    if isinstance(ax, owl.NegativeObjectPropertyAssertion):
        return single(Predicate(ax.prop, "not"), IndividualRef(ax.object)) if ax.subject == target else []
    if isinstance(ax, owl.NegativeDataPropertyAssertion):
        return single(Predicate(ax.prop, "not"), Value(ax.value)) if ax.subject == target else []
    if isinstance(ax, (owl.DifferentIndividuals, owl.SameIndividual)):
        kw = "differentIndividuals" if isinstance(ax, owl.DifferentIndividuals) else "sameIndividual"
        if ax.a == target and ax.b != target:
            return single(Predicate(kw), IndividualRef(ax.b))
        if ax.b == target and ax.a != target:
            return single(Predicate(kw), IndividualRef(ax.a))
        return []
    return []


def convert_for_class(ax, target: str) -> list[Message]:
    """Rows of the class-target table; [] when ``ax`` is not about ``target``."""
    t = owl.NamedClass(target)
    if isinstance(ax, owl.SubClassOf):
        if ax.sub != t:
            return []
        return _convert_membership(ax.sup, target, ax, "isA", ClassRef(target))
    if isinstance(ax, owl.EquivalentClasses):
        if ax.a == t and ax.b != t:
            other = ax.b
        elif ax.b == t and ax.a != t:
            other = ax.a
        else:
            return []
        return _convert_membership(other, target, ax, "isA", ClassRef(target))
    if isinstance(ax, owl.DisjointClasses):
        if ax.a == t and ax.b != t:
            other = ax.b
        elif ax.b == t and ax.a != t:
            other = ax.a
        else:
            return []
        name = _named(other, ax)
        return [Message.single(MessageTriple(target, Predicate("isA", "not"), ClassRef(name), ax))]
    return []


def _messages_about(model: OntologyModel, entity: str, kind: str) -> list[Message]:
    """Messages about one entity; a punned entity (class and individual) gets both readings."""
    convert = convert_for_class if kind == "class" else convert_for_individual
    other = convert_for_individual if kind == "class" else convert_for_class
    punned = model.is_class(entity) and model.is_individual(entity)
    out: list[Message] = []
    for ax in model.axioms_about(entity):
        msgs = convert(ax, entity)
        if not msgs and punned:
            msgs = other(ax, entity)
        out.extend(msgs)
    return out


def _entity_kind(model: OntologyModel, entity: str) -> str:
    return "individual" if model.is_individual(entity) else "class"


def _with_intro(messages: list[Message], intro: MessageTriple) -> tuple[Message, ...]:
    return tuple(
        Message(tuple(MessageTriple(t.subject, t.predicate, t.filler, t.source, intro) for t in m.triples),
                m.disjunctive)
        for m in messages
    )


def retrieve_messages(model: OntologyModel, target: str, kind: str | None = None,
                      max_fact_distance: int = 1) -> FactPlan:
    """Messages about ``target`` and, at distance 2, about its second-level targets."""
    if not model.knows(target):
        raise UnknownTargetError(target)
    kind = kind or _entity_kind(model, target)
    if max_fact_distance not in (1, 2):
        raise ValueError("maximum fact distance must be 1 or 2")
    if max_fact_distance == 2 and kind != "individual":
        raise ValueError("distance 2 applies to individual targets only")
    primary = tuple(_messages_about(model, target, kind))
    if max_fact_distance == 1:
        return FactPlan(target, kind, primary)

    candidates: list[str] = []
    for m in primary:
        for t in m.triples:
            if t.predicate == Predicate("instanceOf") and isinstance(t.filler, ClassRef):
                candidates.append(t.filler.iri)
            elif t.predicate.is_plain_property:
                f = t.filler
                members = f.items if isinstance(f, (Conj, Disj)) else (f,)
                candidates.extend(x.iri for x in members if isinstance(x, IndividualRef))
    groups = []
    seen = {target}
    for entity in candidates:
        if entity in seen:
            continue
        seen.add(entity)
        intro = next(t for m in primary for t in m.triples if entity in filler_entities(t.filler))
        kind2 = "class" if intro.predicate == Predicate("instanceOf") else _entity_kind(model, entity)
        msgs = _messages_about(model, entity, kind2)
        if msgs:
            groups.append((entity, _with_intro(msgs, intro)))
    return FactPlan(target, kind, primary, tuple(groups))


def merge_same_property(messages: Iterable[Message]) -> list[Message]:
    """Fold single triples sharing (subject, plain property) into one and(...) triple."""
    messages = list(messages)
    buckets: dict[tuple, list[MessageTriple]] = {}
    order: list = []
    for i, m in enumerate(messages):
        t = m.triple
        mergeable = (not m.disjunctive and t.predicate.is_plain_property
                     and not isinstance(t.filler, (Conj, Disj, Count)))
        if mergeable:
            key = (t.subject, t.predicate)
            if key not in buckets:
                buckets[key] = []
                order.append(("bucket", key))
            buckets[key].append(t)
        else:
            order.append(("keep", m))
    out: list[Message] = []
    for tag, item in order:
        if tag == "keep":
            out.append(item)
            continue
        ts = buckets[item]
        first = ts[0]
        if len(ts) == 1:
            out.append(Message.single(first))
        else:
            filler = Conj(tuple(t.filler for t in ts))
            out.append(Message.single(MessageTriple(first.subject, first.predicate, filler,
                                                    first.source, first.intro)))
    return out


def merge_plan(plan: FactPlan) -> FactPlan:
    return FactPlan(plan.target, plan.kind, tuple(merge_same_property(plan.primary)),
                    tuple((e, tuple(merge_same_property(msgs))) for e, msgs in plan.groups))

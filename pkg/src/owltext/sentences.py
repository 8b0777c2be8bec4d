"""Sentence specifications: realized slots plus the metadata that
aggregation and referring-expression generation need.

A :class:`Sentence` holds one or more :class:`Clause` objects. A clause is a
sequence of parts: an owner reference (resolved later), a verb, lexical
words, a filler phrase, or a list of complements built by aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Union

from .triples import Message


@dataclass(frozen=True)
class Word:
    text: str
    tag: str = "text"  # art, indef, noun, adj, prep, verb, text, value, num, pron, punct
    head: bool = False


@dataclass(frozen=True)
class Phrase:
    """A noun phrase, adjective phrase, value, or a coordinated list of them."""

    words: tuple[Word, ...] = ()
    items: tuple["Phrase", ...] = ()
    conj: str = ""
    serial: bool = True
    number: str = "sg"
    gender: frozenset = frozenset({"neuter"})
    entity: str | None = None
    source: str = "text"  # nl-name | label | tokenized-id | literal-value | text
    adjectival: bool = False
    plural: "Phrase | None" = field(default=None, compare=False, repr=False)

    @property
    def compound(self) -> bool:
        return bool(self.items)

    def pluralized(self) -> "Phrase":
        if self.items:
            return replace(self, items=tuple(i.pluralized() for i in self.items))
        return self.plural if self.plural is not None else self

    def entities(self) -> list[str]:
        if self.items:
            return [e for i in self.items for e in i.entities()]
        return [self.entity] if self.entity else []


@dataclass(frozen=True)
class Ref:
    """The owner's referring expression; ``words`` is filled in by refgen."""

    entity: str
    case: str = "nom"
    policy: str = "auto"
    words: tuple[Word, ...] | None = None


@dataclass(frozen=True)
class VerbPart:
    words: tuple[Word, ...]
    lexeme: str
    tense: str = "present"
    voice: str = "active"
    polarity: str = "positive"
    copula: bool = False
    participle: tuple[Word, ...] | None = None

    @property
    def key(self) -> tuple:
        return (self.lexeme, self.tense, self.voice, self.polarity, tuple(w.text for w in self.words))


@dataclass(frozen=True)
class Lex:
    words: tuple[Word, ...]


@dataclass(frozen=True)
class FillerPart:
    phrase: Phrase


@dataclass(frozen=True)
class ListPart:
    """Complements sharing one subject and verb, built by aggregation."""

    items: tuple[tuple, ...]
    conj: str = ""
    bare: bool = False  # juxtapose items without commas or connective


Part = Union[Ref, VerbPart, Lex, FillerPart, ListPart]


@dataclass(frozen=True)
class CountInfo:
    modifier: str  # maxCardinality | minCardinality | exactCardinality
    n: int
    singular: Phrase
    plural: Phrase


@dataclass(frozen=True)
class Clause:
    subject: str
    parts: tuple
    kind: str = "property"  # instanceOf | isA | class-adj | keyword | property | modified | merged
    message: Message | None = None
    prop: str | None = None  # the underlying ontology property
    filler_span: tuple[int, int] | None = None
    count: CountInfo | None = None
    extended: bool = False  # already absorbed a following clause (apposition, R3, R4)
    absorbed: bool = False  # already took adjectives from neighbours (R5)

    @property
    def simple(self) -> bool:
        """Subject reference first, then the verb."""
        return (len(self.parts) >= 2 and isinstance(self.parts[0], Ref) and self.parts[0].case == "nom"
                and self.parts[0].policy != "none" and isinstance(self.parts[1], VerbPart))

    @property
    def verb(self) -> VerbPart | None:
        return next((p for p in self.parts if isinstance(p, VerbPart)), None)

    @property
    def ref(self) -> Ref | None:
        return next((p for p in self.parts if isinstance(p, Ref)), None)

    def filler_phrase(self) -> Phrase | None:
        return next((p.phrase for p in self.parts if isinstance(p, FillerPart)), None)


@dataclass(frozen=True)
class Sentence:
    clauses: tuple[Clause, ...]
    messages: tuple[Message, ...]
    section: str | None = None
    aggregatable: bool = True
    conj: str = ""
    serial: bool = True
    disjunctive: bool = False
    rule: str | None = None

    @property
    def size(self) -> int:
        return len(self.messages)

    @property
    def subject(self) -> str:
        return self.clauses[0].subject

    @property
    def single(self) -> Clause | None:
        """The clause of a one-message, one-clause sentence."""
        if len(self.clauses) == 1 and len(self.messages) == 1 and not self.disjunctive:
            return self.clauses[0]
        return None

    def entities(self) -> list[str]:
        out = []
        for c in self.clauses:
            for p in c.parts:
                if isinstance(p, FillerPart):
                    out.extend(e for e in p.phrase.entities() if e not in out)
        return out


def part_words(part) -> list[Word]:
    """Flatten a part into words (list punctuation included); refs must be resolved."""
    if isinstance(part, Ref):
        if part.words is None:
            raise RuntimeError(f"unresolved reference to {part.entity}")
        return list(part.words)
    if isinstance(part, (VerbPart, Lex)):
        return list(part.words)
    if isinstance(part, FillerPart):
        return phrase_words(part.phrase)
    if isinstance(part, ListPart):
        groups = [[w for p in item for w in part_words(p)] for item in part.items]
        if part.bare:
            return [w for g in groups for w in g]
        return join_list(groups, part.conj, serial=False)
    raise TypeError(part)


def phrase_words(phrase: Phrase) -> list[Word]:
    if phrase.items:
        return join_list([phrase_words(i) for i in phrase.items], phrase.conj, phrase.serial)
    return list(phrase.words)


def join_list(groups: list[list[Word]], conj: str, serial: bool) -> list[Word]:
    """``A``; ``A conj B``; ``A, B, conj C`` (the comma before conj only when serial)."""
    if len(groups) == 1:
        return list(groups[0])
    out: list[Word] = []
    for i, g in enumerate(groups):
        last = i == len(groups) - 1
        if last:
            if serial and len(groups) > 2:
                out.append(Word(",", "punct"))
            out.extend(Word(w, "conj") for w in conj.split())
        elif i > 0:
            out.append(Word(",", "punct"))
        out.extend(g)
    return out


def clause_words(clause: Clause) -> list[Word]:
    return [w for p in clause.parts for w in part_words(p)]

"""Subject referring expressions: pronouns, names and demonstratives."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .lexicalizer import Lexicalizer
from .resources import InflectionError
from .sentences import Clause, Ref, Sentence, Word

CLASS_KINDS = ("instanceOf", "isA", "class-adj")


@dataclass
class RefContext:
    """Per-document state: the primary target and collected diagnostics."""

    target: str
    use_refexpr: bool = True
    diagnostics: list[str] = field(default_factory=list)


def gender_of(entity: str, lex: Lexicalizer) -> frozenset:
    """The entity's own NL-name gender, else that of its most specific named class, else neuter."""
    g = lex.name_gender(entity)
    if g:
        return g
    for cls in lex.model.subsumers(entity):
        if cls == entity:
            continue
        g = lex.name_gender(cls)
        if g:
            return g
    return frozenset({"neuter"})


def pronoun(entity: str, case: str, lex: Lexicalizer) -> tuple[Word, ...]:
    number = lex.default_number(entity)
    genders = sorted(gender_of(entity, lex), key=("masculine", "feminine", "neuter").index)
    if number == "pl":
        forms = [lex.pack.pronoun({case, "pl"})]
    else:
        forms = [lex.pack.pronoun({case, number, g}) for g in genders]
    forms = list(dict.fromkeys(forms))
    text = "/".join(forms)
    return tuple(Word(w, "pron") for w in text.split())


def _genitive(words: tuple[Word, ...], lex: Lexicalizer) -> tuple[Word, ...]:
    suffix = lex.pack.genitive_suffix
    if not suffix or not words:
        return words
    last = words[-1]
    return words[:-1] + (replace(last, text=last.text + suffix),)


def name_expression(entity: str, case: str, lex: Lexicalizer) -> tuple[Word, ...]:
    name = lex.name_of(entity)
    if name is not None and case != "gen":
        return lex.entity_phrase(entity, case, plural=False).words
    if name is not None:
        if lex.pack.genitive_suffix:
            return _genitive(lex.entity_phrase(entity, "nom", plural=False).words, lex)
        return lex.entity_phrase(entity, "gen", plural=False).words
    words, _ = lex.fallback_words(entity)
    return _genitive(words, lex) if case == "gen" else words


def demonstrative_class(entity: str, lex: Lexicalizer) -> str | None:
    for cls in lex.model.subsumers(entity):
        if cls == entity or lex.rs.is_anonymous(cls):
            continue
        if lex.name_of(cls) is not None:
            return cls
    return None


def demonstrative(entity: str, case: str, bare: bool, lex: Lexicalizer, ctx: RefContext) -> tuple[Word, ...]:
    pack = lex.pack
    cls = None if bare else demonstrative_class(entity, lex)
    if cls is None:
        if not bare:
            ctx.diagnostics.append(f"no named, non-anonymous class for anonymous {entity}; using a bare demonstrative")
        feats = {lex.default_number(entity), case}
        word = pack.demonstrative.lookup(feats) if pack.demonstrative else None
        if word is None:
            raise InflectionError(f"language '{pack.code}' has no demonstrative")
        return tuple(Word(w, "pron") for w in word.split())
    phrase = lex.entity_phrase(cls, "nom" if case == "gen" and pack.genitive_suffix else case,
                               article="none", plural=False)
    feats = {phrase.number, case} | (phrase.gender if len(phrase.gender) == 1 else set())
    word = pack.demonstrative.lookup(feats) if pack.demonstrative else None
    if word is None:
        raise InflectionError(f"language '{pack.code}' has no demonstrative")
    words = tuple(Word(w, "pron") for w in word.split()) + phrase.words
    return _genitive(words, lex) if case == "gen" and pack.genitive_suffix else words


def resolve_ref(ref: Ref, clause: Clause, previous: str | None, lex: Lexicalizer, ctx: RefContext) -> Ref:
    entity = ref.entity
    if ctx.use_refexpr and ref.policy == "auto" and previous == entity:
        return replace(ref, words=pronoun(entity, ref.case, lex))
    if ctx.use_refexpr and entity == ctx.target and lex.rs.is_anonymous(entity):
        bare = clause.kind in CLASS_KINDS
        return replace(ref, words=demonstrative(entity, ref.case, bare, lex, ctx))
    return replace(ref, words=name_expression(entity, ref.case, lex))


def resolve_references(sentences: list[Sentence], lex: Lexicalizer, ctx: RefContext) -> list[Sentence]:
    """Fill in every subject reference, treating each clause as its own sentence."""
    out = []
    previous: str | None = None
    for s in sentences:
        clauses = []
        for c in s.clauses:
            parts = tuple(resolve_ref(p, c, previous, lex, ctx) if isinstance(p, Ref) else p for p in c.parts)
            clauses.append(replace(c, parts=parts))
            previous = c.subject
        out.append(replace(s, clauses=tuple(clauses)))
    return out

"""Surface realization: words to text, plus document formats."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .planner import SectionConfig
from .resources import LanguagePack
from .sentences import Clause, Ref, Sentence, Word, clause_words, join_list, part_words
from .triples import message_key

FORMATS = ("plain", "headed", "bracketed", "dump")
_TERMINAL = (".", "!", "?")


@dataclass(frozen=True)
class RenderedSentence:
    text: str
    section: str | None
    messages: tuple[str, ...]
    entities: tuple[str, ...] = ()


def render_list(items: list[str], conj: str, serial: bool = True) -> str:
    """``A``; ``A conj B``; ``A, B, conj C`` (serial comma optional)."""
    groups = [[Word(w) for w in item.split()] for item in items]
    return join_words(join_list(groups, conj, serial))


def _number_takes_an(word: str) -> bool:
    digits = re.match(r"\d[\d,]*", word).group(0).replace(",", "")
    if digits.startswith("8"):
        return True
    # eleven, eighteen, eleven thousand, eighteen million ...
    return len(digits) % 3 == 2 and digits[:2] in ("11", "18")


def indefinite_article(next_word: str, pack: LanguagePack) -> str:
    """English a/an from the spelling of the following word."""
    w = next_word.lower()
    if not w:
        return "a"
    if w[0].isdigit():
        return "an" if _number_takes_an(w) else "a"
    if any(w.startswith(x) for x in pack.an_exceptions):
        return "an"
    if any(w.startswith(x) for x in pack.a_exceptions):
        return "a"
    return "an" if w[0] in "aeiou" else "a"


def sentence_words(s: Sentence) -> list[Word]:
    groups = [clause_words(c) for c in s.clauses]
    if len(groups) == 1:
        return groups[0]
    return join_list(groups, s.conj, s.serial)


def join_words(words: list[Word], pack: LanguagePack | None = None) -> str:
    words = [w for w in words if w.text]
    texts = [w.text for w in words]
    if pack is not None and pack.a_an:
        for i, w in enumerate(words):
            if w.tag == "indef" and w.text.lower() in ("a", "an") and i + 1 < len(words):
                art = indefinite_article(words[i + 1].text, pack)
                texts[i] = art.capitalize() if w.text[0].isupper() else art
    out = ""
    for w, t in zip(words, texts):
        if w.tag == "punct" and out:
            out += t
        else:
            out += (" " if out else "") + t
    return out


def finish_sentence(text: str) -> str:
    text = " ".join(text.split())
    for i, ch in enumerate(text):
        if ch.isalpha():
            text = text[:i] + ch.upper() + text[i + 1:]
            break
    if text and not text.endswith(_TERMINAL):
        text += "."
    return text


def realize_sentence(s: Sentence, pack: LanguagePack) -> str:
    return finish_sentence(join_words(sentence_words(s), pack))


def render_sentences(sentences: list[Sentence], pack: LanguagePack) -> list[RenderedSentence]:
    return [RenderedSentence(realize_sentence(s, pack), s.section, tuple(message_key(m) for m in s.messages),
                             tuple(s.entities())) for s in sentences]


def _paragraphs(rendered: list[RenderedSentence]) -> list[tuple[str | None, list[str]]]:
    paras: list[tuple[str | None, list[str]]] = []
    for r in rendered:
        if paras and paras[-1][0] == r.section:
            paras[-1][1].append(r.text)
        else:
            paras.append((r.section, [r.text]))
    return paras


def render_text(rendered: list[RenderedSentence], fmt: str = "plain", sections: SectionConfig | None = None,
                target: str | None = None) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "dump":
        return "\n".join(json.dumps({"target": target, "text": r.text, "section": r.section,
                                     "messages": list(r.messages), "entities": list(r.entities)},
                                    ensure_ascii=False) for r in rendered)
    paras = _paragraphs(rendered)
    if fmt == "plain":
        return "\n\n".join(" ".join(texts) for _, texts in paras)
    if fmt == "headed":
        out = []
        for sid, texts in paras:
            title = sections.title(sid) if sections is not None and sid else None
            out.append((f"{title}: " if title else "") + " ".join(texts))
        return "\n\n".join(out)
    out = []
    for sid, texts in paras:
        body = " ".join(texts)
        out.append("{" + sid + " " + body + "}" if sid else body)
    return " ".join(out)


# --------------------------------------------------------------------------
# Debug views


def _part_text(part, pack) -> str:
    if isinstance(part, Ref) and part.words is None:
        return f"<ref {part.entity} {part.case}>"
    return join_words(part_words(part), pack)


def spec_slots(clause: Clause, pack: LanguagePack, initial: bool = False) -> str:
    """Bracket notation: ``[slot1 This stoa] [slot2 was used] ...``."""
    texts = [_part_text(p, pack) for p in clause.parts]
    if initial:
        for i, t in enumerate(texts):
            if t and not t.startswith("<"):
                texts[i] = t[0].upper() + t[1:]
                break
    return " ".join(f"[slot{i + 1} {t}]" for i, t in enumerate(texts))


def dump_specs(sentences: list[Sentence], pack: LanguagePack) -> str:
    lines = []
    for s in sentences:
        head = f"{s.section or '-'} {s.rule or '-'}:"
        lines.append(head + " " + " | ".join(spec_slots(c, pack, i == 0) for i, c in enumerate(s.clauses)))
    return "\n".join(lines)


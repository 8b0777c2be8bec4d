"""Greedy rule-based sentence aggregation.

Rules run in a fixed order; each scans the sentence list from first to
last and applies wherever it can, preferring the window that merges the
most sentences within ``max_messages`` source messages. The whole rule
sequence is repeated until nothing changes, which makes the result
idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .sentences import Clause, FillerPart, Lex, ListPart, Phrase, Sentence, VerbPart, Word, part_words

CLASS_KINDS = ("instanceOf", "isA")
RULES = ("R1", "R2", "apposition", "R3", "R4", "R5", "R6", "R7")


@dataclass(frozen=True)
class AggregationConfig:
    max_messages: int = 3
    and_word: str = "and"
    or_word: str = "or"
    exactly_word: str = "exactly"
    serial_comma: bool = True
    rules: tuple[str, ...] = RULES

    def __post_init__(self):
        if self.max_messages < 1:
            raise ValueError("maxMessagesPerSentence must be at least 1")


def _words(text: str, tag: str = "text") -> tuple[Word, ...]:
    return tuple(Word(w, tag) for w in text.split())


def _punct(text: str) -> Lex:
    return Lex((Word(text, "punct"),))


# --------------------------------------------------------------------------
# Eligibility helpers


def _single(s: Sentence) -> Clause | None:
    return s.single if s.aggregatable else None


def _class_clause(s: Sentence) -> Clause | None:
    c = _single(s)
    if c is not None and c.kind in CLASS_KINDS and c.simple:
        return c
    return None


def _plain_clause(s: Sentence, simple: bool = True) -> Clause | None:
    """A single unmodified-property clause."""
    c = _single(s)
    if c is None or c.kind != "property":
        return None
    if simple and not c.simple:
        return None
    return c


def _same_section(a: Sentence, b: Sentence) -> bool:
    return a.section == b.section


def _merge(sentences: list[Sentence], clauses: tuple[Clause, ...], rule: str, conj: str = "",
           serial: bool = True) -> Sentence:
    first = sentences[0]
    msgs = tuple(m for s in sentences for m in s.messages)
    return Sentence(clauses, msgs, first.section, True, conj, serial, False, rule)


# --------------------------------------------------------------------------
# R1: shared head nouns inside coordinated fillers


def _strip_articles(words):
    i = 0
    while i < len(words) and words[i].tag in ("art", "indef"):
        i += 1
    return i


def _shared_head(items: list[Phrase]) -> bool:
    heads = []
    for p in items:
        if p.compound or p.source != "nl-name":
            return False
        ws = list(p.words)
        i = _strip_articles(ws)
        rest = ws[i:]
        head = [w for w in rest if w.head]
        mods = [w for w in rest if not w.head]
        if not head or not mods or any(w.tag != "adj" for w in mods) or rest[-len(head):] != head:
            return False
        if any(w.tag != "noun" for w in head):
            return False
        heads.append(tuple(w.text for w in head))
    return len(set(heads)) == 1


def _elide_phrase(phrase: Phrase) -> Phrase | None:
    items = list(phrase.items)
    if len(items) < 2 or not _shared_head(items):
        return None
    new = [replace(p, words=tuple(w for w in p.words if not w.head), plural=None) for p in items[:-1]]
    return replace(phrase, items=tuple(new) + (items[-1],))


def _elide_list(lp: ListPart) -> ListPart | None:
    """The same idea over aggregated complements: "strong flavor or medium flavor"."""
    groups = [[w for p in item for w in part_words(p)] for item in lp.items]
    if len(groups) < 2:
        return None
    tails = []
    for g in groups:
        if len(g) < 2 or g[-1].tag != "noun" or any(w.tag != "adj" for w in g[:-1]):
            return None
        tails.append(g[-1].text)
    if len(set(tails)) != 1:
        return None
    items = tuple((Lex(tuple(g[:-1])),) for g in groups[:-1]) + (lp.items[-1],)
    return replace(lp, items=items)


def rule_r1(sentences: list[Sentence], cfg: AggregationConfig) -> list[Sentence]:
    out = []
    for s in sentences:
        if not s.aggregatable:
            out.append(s)
            continue
        clauses = []
        changed = False
        for c in s.clauses:
            parts = list(c.parts)
            for i, p in enumerate(parts):
                if isinstance(p, FillerPart) and p.phrase.compound:
                    new = _elide_phrase(p.phrase)
                    if new is not None:
                        parts[i] = FillerPart(new)
                        changed = True
            clauses.append(replace(c, parts=tuple(parts)))
        out.append(replace(s, clauses=tuple(clauses)) if changed else s)
    return out


# --------------------------------------------------------------------------
# R2: cardinality restrictions and values, not necessarily adjacent


def _values_count(clause: Clause) -> int:
    ph = clause.filler_phrase()
    return len(ph.items) if ph is not None and ph.compound else 1


def rule_r2(sentences: list[Sentence], cfg: AggregationConfig) -> list[Sentence]:
    groups: dict[tuple, dict[str, list[int]]] = {}
    for i, s in enumerate(sentences):
        c = _single(s)
        if c is None or c.filler_span is None:
            continue
        if c.count is not None:
            kind = c.count.modifier
        elif c.kind == "property" and c.filler_phrase() is not None:
            kind = "values"
        else:
            continue
        groups.setdefault((s.section, c.subject, c.prop), {}).setdefault(kind, []).append(i)
    out: dict[int, Sentence] = {}
    drop: set[int] = set()
    for key, g in groups.items():
        merged = _r2_group(sentences, g, cfg)
        if merged is None:
            continue
        sentence, used = merged
        first = min(used)
        out[first] = sentence
        drop.update(i for i in used if i != first)
    if not out:
        return sentences
    return [out.get(i, s) for i, s in enumerate(sentences) if i not in drop]


def _r2_group(sentences, g: dict[str, list[int]], cfg) -> tuple[Sentence, list[int]] | None:
    card = {k: v[0] for k, v in g.items() if k != "values" and len(v) == 1}
    values = g.get("values", [])
    values = values[0] if len(values) == 1 else None
    clause = lambda i: sentences[i].clauses[0]  # noqa: E731
    exact = None
    used: list[int] = []
    if "exactCardinality" in card:
        exact = card["exactCardinality"]
        used = [exact]
        n = clause(exact).count.n
        extra = [card[k] for k in ("minCardinality", "maxCardinality")
                 if k in card and clause(card[k]).count.n == n]
        used += extra
    elif "minCardinality" in card and "maxCardinality" in card:
        lo, hi = card["minCardinality"], card["maxCardinality"]
        if clause(lo).count.n == clause(hi).count.n:
            exact, used = hi, [lo, hi]
        else:
            return _r2_range(sentences, lo, hi, cfg)
    elif "maxCardinality" in card and values is not None:
        hi = card["maxCardinality"]
        if clause(hi).count.n == _values_count(clause(values)):
            exact, used = hi, [hi]
    if exact is None:
        return None
    if values is not None:
        used.append(values)
    if len(used) < 2:
        return None
    count = clause(exact).count
    np = count.singular if count.n == 1 else count.plural
    base = clause(values) if values is not None else clause(exact)
    parts = list(base.parts)
    start, end = base.filler_span
    new = [Lex(_words(cfg.exactly_word)), _number_lex(clause(exact)), FillerPart(np)]
    if values is not None:
        vph = clause(values).filler_phrase()
        new += [_punct(":"), FillerPart(vph.pluralized())]
    parts[start:end] = new
    merged_clause = replace(base, parts=tuple(parts), message=None, count=None, filler_span=None, kind="merged")
    used.sort()
    return _merge([sentences[i] for i in used], (merged_clause,), "R2"), used


def _number_lex(clause: Clause) -> Lex:
    start, _ = clause.filler_span
    return clause.parts[start + 1]


def _r2_range(sentences, lo: int, hi: int, cfg: AggregationConfig):
    c_lo, c_hi = sentences[lo].clauses[0], sentences[hi].clauses[0]
    parts = list(c_lo.parts)
    start, end = c_lo.filler_span
    lo_words = [w for p in c_lo.parts[start:start + 2] for w in part_words(p)]
    hi_words = [w for p in c_hi.parts[c_hi.filler_span[0]:c_hi.filler_span[0] + 2] for w in part_words(p)]
    new = [Lex(tuple(lo_words)), Lex((Word(cfg.and_word, "conj"),)), Lex(tuple(hi_words)),
           FillerPart(c_hi.count.plural)]
    parts[start:end] = new
    merged = replace(c_lo, parts=tuple(parts), message=None, count=None, filler_span=None, kind="merged")
    used = sorted([lo, hi])
    return _merge([sentences[i] for i in used], (merged,), "R2"), used


# --------------------------------------------------------------------------
# Class sentence extensions: apposition, R3, R4


def _extend_class(sentences: list[Sentence], cfg: AggregationConfig,
                  combine: Callable[[Clause, Sentence, Clause], tuple | None], rule: str) -> list[Sentence]:
    out: list[Sentence] = []
    i = 0
    while i < len(sentences):
        s = sentences[i]
        c = _class_clause(s)
        if c is not None and not c.extended and i + 1 < len(sentences) and cfg.max_messages >= s.size + 1:
            nxt = sentences[i + 1]
            b = _single(nxt)
            if b is not None and _same_section(s, nxt):
                parts = combine(c, nxt, b)
                if parts is not None:
                    merged = replace(c, parts=tuple(parts), extended=True, message=None)
                    out.append(_merge([s, nxt], (merged,), rule))
                    i += 2
                    continue
        out.append(s)
        i += 1
    return out


def _apposition(c: Clause, nxt: Sentence, b: Clause):
    msg = c.message
    if c.kind != "instanceOf" or msg is None or b.kind != "isA" or not b.simple:
        return None
    filler = msg.triple.filler
    if getattr(filler, "iri", None) != b.subject or b.verb is None or not b.verb.copula:
        return None
    return list(c.parts) + [_punct(",")] + list(b.parts[2:])


def _r3(c: Clause, nxt: Sentence, b: Clause):
    if b.kind != "property" or not b.simple or b.subject != c.subject:
        return None
    v = b.verb
    if v.voice != "passive" or v.polarity != "positive" or not v.participle or len(b.parts) < 3:
        return None
    lead = [_punct(",")] if c.kind == "instanceOf" else []
    return list(c.parts) + lead + [Lex(v.participle)] + list(b.parts[2:])


def _r4(c: Clause, nxt: Sentence, b: Clause):
    if b.kind != "property" or not b.simple or b.subject != c.subject or len(b.parts) < 3:
        return None
    v = b.verb
    if not (v.copula and v.tense == "present" and v.voice == "active" and v.polarity == "positive"):
        return None
    first = part_words(b.parts[2])
    if not first or first[0].tag != "prep":
        return None
    return list(c.parts) + list(b.parts[2:])


# --------------------------------------------------------------------------
# R5: class sentence absorbs neighbouring adjective-only sentences


def _adjective_donor(s: Sentence, subject: str) -> list[Word] | None:
    c = _plain_clause(s)
    if c is None or c.subject != subject or len(c.parts) != 3:
        return None
    v = c.verb
    if not (v.copula and v.tense == "present" and v.voice == "active" and v.polarity == "positive"):
        return None
    p = c.parts[2]
    if not isinstance(p, FillerPart) or p.phrase.compound:
        return None
    words = [w for w in p.phrase.words if w.tag not in ("art", "indef")]
    if not words or any(w.tag != "adj" for w in words):
        return None
    return words


def rule_r5(sentences: list[Sentence], cfg: AggregationConfig) -> list[Sentence]:
    out = list(sentences)
    i = 0
    while i < len(out):
        s = out[i]
        c = _class_clause(s) if out[i].aggregatable else None
        if c is None or c.absorbed or c.kind not in CLASS_KINDS:
            i += 1
            continue
        fidx = next((k for k, p in enumerate(c.parts) if isinstance(p, FillerPart)), None)
        if fidx is None or c.parts[fidx].phrase.compound:
            i += 1
            continue
        room = cfg.max_messages - s.size
        before = []
        k = i - 1
        while k >= 0 and len(before) < room and _same_section(out[k], s) and _adjective_donor(out[k], c.subject):
            before.insert(0, k)
            k -= 1
        after = []
        k = i + 1
        while (k < len(out) and len(before) + len(after) < room and _same_section(out[k], s)
               and _adjective_donor(out[k], c.subject)):
            after.append(k)
            k += 1
        donors = before + after
        if not donors:
            i += 1
            continue
        adjectives = [_adjective_donor(out[k], c.subject) for k in donors]
        phrase = c.parts[fidx].phrase
        ws = list(phrase.words)
        a = _strip_articles(ws)
        inserted: list[Word] = []
        for j, adj in enumerate(adjectives):
            if j:
                inserted.append(Word(",", "punct"))
            inserted.extend(adj)
        new_phrase = replace(phrase, words=tuple(ws[:a] + inserted + ws[a:]), plural=None)
        parts = list(c.parts)
        parts[fidx] = FillerPart(new_phrase)
        merged_clause = replace(c, parts=tuple(parts), absorbed=True, message=None)
        group = [out[k] for k in before] + [s] + [out[k] for k in after]
        merged = _merge(group, (merged_clause,), "R5")
        lo = before[0] if before else i
        hi = after[-1] if after else i
        out[lo:hi + 1] = [merged]
        i = lo + 1
    return out


# --------------------------------------------------------------------------
# R6: same verb, R7: different verbs


def _verb_key(c: Clause):
    return c.verb.key if c.verb is not None else None


def _windows(sentences: list[Sentence], cfg: AggregationConfig, ok: Callable[[Sentence], Clause | None],
             compatible: Callable[[Clause, Clause], bool], accept: Callable[[list[Clause]], bool],
             build: Callable[[list[Sentence], list[Clause]], Sentence]) -> list[Sentence]:
    out: list[Sentence] = []
    i = 0
    while i < len(sentences):
        first = ok(sentences[i])
        if first is None:
            out.append(sentences[i])
            i += 1
            continue
        j = i + 1
        total = sentences[i].size
        clauses = [first]
        while j < len(sentences):
            c = ok(sentences[j])
            if (c is None or not _same_section(sentences[i], sentences[j]) or not compatible(first, c)
                    or total + sentences[j].size > cfg.max_messages):
                break
            clauses.append(c)
            total += sentences[j].size
            j += 1
        # shrink until acceptable, preferring the longest window
        while j - i >= 2 and not accept(clauses[: j - i]):
            j -= 1
        if j - i >= 2:
            out.append(build(sentences[i:j], clauses[: j - i]))
            i = j
        else:
            out.append(sentences[i])
            i += 1
    return out


def _list_part(items: list[tuple], conj: str) -> ListPart:
    bare = all(part_words(item[0])[:1] and part_words(item[0])[0].tag == "prep" for item in items[1:])
    lp = ListPart(tuple(items), "" if bare else conj, bare)
    return _elide_list(lp) or lp


def rule_r6(sentences: list[Sentence], cfg: AggregationConfig) -> list[Sentence]:
    # disjunctive sentences whose clauses share subject and verb
    staged = []
    for s in sentences:
        if (s.aggregatable and s.disjunctive and len(s.clauses) > 1
                and all(c.kind == "property" and c.simple and len(c.parts) > 2 for c in s.clauses)
                and len({_verb_key(c) for c in s.clauses}) == 1):
            head = s.clauses[0]
            lp = _list_part([tuple(c.parts[2:]) for c in s.clauses], cfg.or_word)
            clause = replace(head, parts=head.parts[:2] + (lp,), kind="merged", message=None, filler_span=None)
            staged.append(replace(s, clauses=(clause,), disjunctive=False, conj="", rule="R6"))
        else:
            staged.append(s)

    def ok(s):
        c = _plain_clause(s)
        return c if c is not None and len(c.parts) > 2 else None

    def build(group, clauses):
        head = clauses[0]
        lp = _list_part([tuple(c.parts[2:]) for c in clauses], cfg.and_word)
        clause = replace(head, parts=head.parts[:2] + (lp,), kind="merged", message=None, filler_span=None)
        return _merge(group, (clause,), "R6")

    return _windows(staged, cfg, ok, lambda a, b: a.subject == b.subject and _verb_key(a) == _verb_key(b),
                    lambda cs: True, build)


def rule_r7(sentences: list[Sentence], cfg: AggregationConfig) -> list[Sentence]:
    def ok(s):
        return _plain_clause(s, simple=False)

    def accept(cs):
        return len({_verb_key(c) for c in cs}) > 1

    def build(group, clauses):
        return _merge(group, tuple(clauses), "R7", cfg.and_word, cfg.serial_comma)

    return _windows(sentences, cfg, ok, lambda a, b: a.subject == b.subject, accept, build)


def _rule_functions(cfg: AggregationConfig):
    table = {
        "R1": rule_r1,
        "R2": rule_r2,
        "apposition": lambda s, c: _extend_class(s, c, _apposition, "apposition"),
        "R3": lambda s, c: _extend_class(s, c, _r3, "R3"),
        "R4": lambda s, c: _extend_class(s, c, _r4, "R4"),
        "R5": rule_r5,
        "R6": rule_r6,
        "R7": rule_r7,
    }
    return [table[r] for r in cfg.rules]


def aggregate(sentences, cfg: AggregationConfig = AggregationConfig()) -> list[Sentence]:
    """Apply the rules in order, repeating the sequence until a fixpoint."""
    current = list(sentences)
    for _ in range(len(current) + 2):
        nxt = current
        for fn in _rule_functions(cfg):
            nxt = fn(nxt, cfg)
        if nxt == current:
            return nxt
        current = nxt
    return current

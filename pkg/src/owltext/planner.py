"""Topical ordering: sections, property order, and second-level splicing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .triples import FactPlan, Message, filler_entities

UNASSIGNED = None


@dataclass(frozen=True)
class Section:
    id: str
    title: str | None = None
    properties: tuple[str, ...] = ()
    # pairs (a, b): property a is expressed before property b
    order: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class SectionConfig:
    sections: tuple[Section, ...] = ()
    order: tuple[tuple[str, str], ...] = ()  # section precedence pairs

    def __post_init__(self):
        seen: dict[str, str] = {}
        for s in self.sections:
            for p in s.properties:
                if p in seen and seen[p] != s.id:
                    raise ValueError(f"property {p} assigned to sections {seen[p]} and {s.id}")
                seen[p] = s.id
        object.__setattr__(self, "_smap", seen)
        ids = [s.id for s in self.sections]
        _check_acyclic(ids, self.order, "section order")
        for s in self.sections:
            _check_acyclic(list(s.properties), s.order, f"property order of {s.id}")

    @property
    def smap(self) -> dict[str, str]:
        return dict(self._smap)

    @property
    def empty(self) -> bool:
        return not self.sections

    def section(self, sid: str) -> Section | None:
        return next((s for s in self.sections if s.id == sid), None)

    def title(self, sid: str | None) -> str | None:
        s = self.section(sid) if sid else None
        return (s.title or s.id) if s else None

    def section_sequence(self) -> list[str]:
        """Sections named by the order first (topologically), then the rest."""
        ids = [s.id for s in self.sections]
        constrained = [i for i in ids if any(i in pair for pair in self.order)]
        free = [i for i in ids if i not in constrained]
        return stable_topo_sort(constrained, self.order, key=ids.index) + free


def _check_acyclic(nodes, pairs, what):
    try:
        stable_topo_sort(sorted(set(nodes) | {x for p in pairs for x in p}), pairs, key=lambda n: 0)
    except ValueError:
        raise ValueError(f"cycle in {what}") from None


def stable_topo_sort(nodes: list, pairs, key) -> list:
    """Kahn's algorithm, always emitting the available node with the smallest key."""
    nodes = list(dict.fromkeys(nodes))
    preds = {n: set() for n in nodes}
    for a, b in pairs:
        if a in preds and b in preds:
            preds[b].add(a)
    out, done = [], set()
    while len(out) < len(nodes):
        ready = [n for n in nodes if n not in done and preds[n] <= done]
        if not ready:
            raise ValueError("cycle")
        n = min(ready, key=key)
        out.append(n)
        done.add(n)
    return out


def ordering_property(message: Message) -> str:
    """The property a message is filed under: the inner one for modified predicates."""
    return message.triple.predicate.name


def _section_of(message: Message, cfg: SectionConfig, first: str | None) -> str | None:
    p = ordering_property(message)
    smap = cfg._smap
    if p in smap:
        return smap[p]
    if message.triple.predicate.is_keyword:
        return first
    return UNASSIGNED


def order_single_target(messages, cfg: SectionConfig) -> list[tuple[Message, str | None]]:
    """Order one owner's messages; returns (message, section id) pairs."""
    messages = list(messages)
    if cfg.empty:
        return [(m, None) for m in messages]
    sequence = cfg.section_sequence()
    first = sequence[0] if sequence else None
    buckets: dict[str | None, list[Message]] = {}
    for m in messages:
        buckets.setdefault(_section_of(m, cfg, first), []).append(m)
    out: list[tuple[Message, str | None]] = []
    for sid in sequence + [UNASSIGNED]:
        msgs = buckets.get(sid, [])
        if not msgs:
            continue
        section = cfg.section(sid) if sid else None
        out.extend((m, sid) for m in _order_in_section(msgs, section))
    return out


def _order_in_section(msgs: list[Message], section: Section | None) -> list[Message]:
    pairs = section.order if section else ()
    constrained_props = {x for pair in pairs for x in pair}
    first_seen: dict[str, int] = {}
    for i, m in enumerate(msgs):
        first_seen.setdefault(ordering_property(m), i)
    placed = section.properties if section else ()
    is_leading = [m.triple.predicate.is_keyword and ordering_property(m) not in constrained_props
                  and ordering_property(m) not in placed for m in msgs]
    keywords = [m for m, lead in zip(msgs, is_leading) if lead]
    rest = [m for m, lead in zip(msgs, is_leading) if not lead]
    present = [p for p in first_seen if p in constrained_props]
    ordered_props = stable_topo_sort(present, _closure(pairs, present), key=first_seen.__getitem__)
    by_prop: dict[str, list[Message]] = {}
    for m in rest:
        by_prop.setdefault(ordering_property(m), []).append(m)
    out = list(keywords)
    for p in ordered_props:
        out.extend(by_prop.pop(p, []))
    out.extend(m for m in rest if ordering_property(m) in by_prop)
    return out


def _closure(pairs, keep) -> list[tuple[str, str]]:
    """Pairs between kept nodes implied transitively, so absent properties still carry order."""
    succ: dict[str, set[str]] = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    out = []
    for a in keep:
        stack, seen = list(succ.get(a, ())), set()
        while stack:
            b = stack.pop()
            if b in seen:
                continue
            seen.add(b)
            stack.extend(succ.get(b, ()))
        out.extend((a, b) for b in keep if b in seen)
    return out


@dataclass(frozen=True)
class OrderedMessage:
    message: Message
    section: str | None
    group: str | None = None  # second-level entity this message describes


def order_messages(plan: FactPlan, cfg: SectionConfig, use_ordering: bool = True,
                   stop_after_group: bool = False) -> list[OrderedMessage]:
    """Order the primary messages, then splice each second-level group after its introducer."""
    if use_ordering:
        primary = order_single_target(plan.primary, cfg)
    else:
        primary = [(m, None) for m in plan.primary]
    pending = {e: msgs for e, msgs in plan.groups}
    out: list[OrderedMessage] = []
    for m, sid in primary:
        out.append(OrderedMessage(m, sid))
        mentioned = []
        for t in m.triples:
            for e in filler_entities(t.filler):
                if e in pending and e not in mentioned:
                    mentioned.append(e)
        for e in mentioned:
            msgs = pending.pop(e)
            ordered = order_single_target(msgs, cfg) if use_ordering else [(g, None) for g in msgs]
            out.extend(OrderedMessage(g, sid, e) for g, _ in ordered)
            if stop_after_group:
                return out
    return out

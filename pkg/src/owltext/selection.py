"""Interest scores, assimilation and the per-user model."""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field

from .owl import OntologyModel
from .triples import FactPlan, Message, MessageTriple, filler_entities, message_key

ANY_USER = "*"


@dataclass(frozen=True)
class InterestAssignment:
    """Score for triples of ``prop``; narrowed to a class or a single entity."""

    prop: str
    score: int
    threshold: int | None = None
    user_type: str = ANY_USER
    cls: str | None = None
    entity: str | None = None

    def __post_init__(self):
        if self.score < 0:
            raise ValueError("interest scores are non-negative")
        if self.threshold is not None and self.threshold < 1:
            raise ValueError("assimilation thresholds are positive")
        if self.cls is not None and self.entity is not None:
            raise ValueError("an assignment is scoped to a class or an entity, not both")


@dataclass(frozen=True)
class SelectionConfig:
    user_type: str = ANY_USER
    max_messages_per_page: int = 100
    default_score: int = 1
    default_threshold: int | None = None  # None: never assimilated
    use_interest: bool = True

    def __post_init__(self):
        if self.max_messages_per_page < 1:
            raise ValueError("maxMessagesPerPage must be at least 1")


def scope_property(triple: MessageTriple) -> str:
    """Modified predicates are scored through their inner property; keywords by name."""
    return triple.predicate.name


def resolve_interest(assignments, triple: MessageTriple, model: OntologyModel | None,
                     user_type: str = ANY_USER, default_score: int = 1,
                     default_threshold: int | None = None) -> tuple[int, int | None]:
    prop = scope_property(triple)
    subject = triple.subject
    subsumers: list[str] | None = None
    best = None
    for i, a in enumerate(assignments):
        if a.prop != prop or a.user_type not in (user_type, ANY_USER):
            continue
        if a.entity is not None:
            if a.entity != subject:
                continue
            level, rank = 3, 0
        elif a.cls is not None:
            if subsumers is None:
                subsumers = _subsumers(model, subject)
            if a.cls not in subsumers:
                continue
            level, rank = 2, subsumers.index(a.cls)
        else:
            level, rank = 1, 0
        key = (-level, rank, 0 if a.user_type == user_type else 1, i)
        if best is None or key < best[0]:
            best = (key, a)
    if best is None:
        return default_score, default_threshold
    return best[1].score, best[1].threshold


def _subsumers(model: OntologyModel | None, subject: str) -> list[str]:
    if model is None:
        return [subject]
    if model.is_class(subject) and not model.is_individual(subject):
        return [subject] + model.told_ancestors(subject)
    return model.types_of(subject)


def message_interest(assignments, message: Message, model, cfg: SelectionConfig) -> tuple[int, int | None]:
    """An or(...) message is as interesting as its best disjunct, assimilated with the earliest."""
    scores, thresholds = [], []
    for t in message.triples:
        s, th = resolve_interest(assignments, t, model, cfg.user_type, cfg.default_score, cfg.default_threshold)
        scores.append(s)
        if th is not None:
            thresholds.append(th)
    return max(scores), (min(thresholds) if thresholds else None)


# --------------------------------------------------------------------------
# User model


@dataclass
class UserModel:
    user_id: str
    counts: dict[str, int] = field(default_factory=dict)

    def count(self, key: str) -> int:
        return self.counts.get(key, 0)


def record_conveyed(user_model: UserModel, messages) -> UserModel:
    counts = dict(user_model.counts)
    for m in messages:
        k = m if isinstance(m, str) else message_key(m)
        counts[k] = counts.get(k, 0) + 1
    return UserModel(user_model.user_id, counts)


class UserModelStore:
    """Tab-separated ``user<TAB>count<TAB>key`` lines; several users per file."""

    def __init__(self, path: str):
        self.path = path

    def _read_all(self) -> dict[str, dict[str, int]]:
        users: dict[str, dict[str, int]] = {}
        if not os.path.exists(self.path):
            return users
        with open(self.path, encoding="utf-8") as fh:
            for n, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line.strip():
                    continue
                parts = line.split("\t", 2)
                if len(parts) != 3 or not parts[1].isdigit() or int(parts[1]) < 1:
                    raise ValueError(f"{self.path}:{n}: malformed user-model line")
                users.setdefault(parts[0], {})[parts[2]] = int(parts[1])
        return users

    def load(self, user_id: str) -> UserModel:
        return UserModel(user_id, dict(self._read_all().get(user_id, {})))

    def save(self, model: UserModel) -> None:
        users = self._read_all()
        users[model.user_id] = dict(model.counts)
        lines = [f"{u}\t{c}\t{k}\n" for u in sorted(users) for k, c in users[u].items()]
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".usermodel-")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.writelines(lines)
        os.replace(tmp, self.path)


# --------------------------------------------------------------------------
# Selection


@dataclass(frozen=True)
class _Candidate:
    index: int
    message: Message
    score: int
    group: str | None  # second-level entity, None for primary messages


def select_content(plan: FactPlan, assignments, user_model: UserModel | None,
                   cfg: SelectionConfig, model: OntologyModel | None = None) -> FactPlan:
    """Drop uninteresting and assimilated messages, then keep the best ``cap``.

    Second-level messages depend on the first primary message that mentions
    their owner; they are kept only if that message is kept. Ranking is by
    score (descending) then plan position, with a dependent message never
    ranked ahead of the message it depends on.
    """
    counts = user_model.counts if user_model is not None else {}

    def keep(m: Message) -> tuple[bool, int]:
        if not cfg.use_interest:
            return True, cfg.default_score
        score, threshold = message_interest(assignments, m, model, cfg)
        if score == 0:
            return False, score
        if threshold is not None and counts.get(message_key(m), 0) >= threshold:
            return False, score
        return True, score

    cands: list[_Candidate] = []
    primary_ok: dict[int, _Candidate] = {}
    for i, m in enumerate(plan.primary):
        ok, score = keep(m)
        if ok:
            c = _Candidate(i, m, score, None)
            cands.append(c)
            primary_ok[i] = c
    intro_of: dict[str, int] = {}
    for entity, _ in plan.groups:
        for i, m in enumerate(plan.primary):
            if any(entity in filler_entities(t.filler) for t in m.triples):
                intro_of[entity] = i
                break
    index = len(plan.primary)
    deps: dict[int, _Candidate] = {}
    for entity, msgs in plan.groups:
        intro = intro_of.get(entity)
        for m in msgs:
            ok, score = keep(m)
            if ok and intro in primary_ok:
                c = _Candidate(index, m, score, entity)
                cands.append(c)
                deps[index] = primary_ok[intro]
            index += 1

    def own(c: _Candidate):
        return (-c.score, c.index)

    def rank(c: _Candidate):
        if c.group is None:
            return (own(c), 0, own(c))
        return (max(own(c), own(deps[c.index])), 1, own(c))

    chosen = {c.index for c in sorted(cands, key=rank)[: cfg.max_messages_per_page]}
    primary = tuple(m for i, m in enumerate(plan.primary) if i in chosen)
    groups = []
    index = len(plan.primary)
    for entity, msgs in plan.groups:
        kept = []
        for m in msgs:
            if index in chosen:
                kept.append(m)
            index += 1
        if kept:
            groups.append((entity, tuple(kept)))
    return FactPlan(plan.target, plan.kind, primary, tuple(groups))

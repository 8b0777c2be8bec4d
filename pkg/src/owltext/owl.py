"""Functional-style OWL 2 parsing, restricted to the statement forms the
generator understands, plus a few ontology lookups.

Supported axioms are turned into frozen dataclasses. Anything else is kept in
``OntologyModel.ignored`` with its source position, so callers can report
what was skipped.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Union

RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label"
XSD = "http://www.w3.org/2001/XMLSchema#"
OWL_THING = "http://www.w3.org/2002/07/owl#Thing"

STANDARD_PREFIXES = {
    "rdf:": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs:": "http://www.w3.org/2000/01/rdf-schema#",
    "xsd:": XSD,
    "owl:": "http://www.w3.org/2002/07/owl#",
}

_NUMERIC_TYPES = {
    "integer", "int", "long", "short", "byte", "nonNegativeInteger",
    "positiveInteger", "nonPositiveInteger", "negativeInteger",
    "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte",
}
_FLOAT_TYPES = {"float", "double", "decimal"}


class OWLSyntaxError(ValueError):
    """Malformed or unsupported input, located at ``line``:``column``."""

    def __init__(self, message: str, line: int = 0, column: int = 0, path: str = "<string>"):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(f"{path}:{line}:{column}: {message}")


class HierarchyCycleError(ValueError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("cycle in told class hierarchy: " + " -> ".join(local_name(c) for c in cycle))


def local_name(iri: str) -> str:
    """The part of an IRI after the last '#', '/' or ':'."""
    for sep in ("#", "/", ":"):
        if sep in iri:
            iri = iri.rsplit(sep, 1)[1]
    return iri


# --------------------------------------------------------------------------
# Literals and class expressions


@dataclass(frozen=True)
class Literal:
    lexical: str
    datatype: str | None = None
    lang: str | None = None

    @property
    def type_name(self) -> str:
        return local_name(self.datatype) if self.datatype else "string"

    @property
    def value(self):
        t = self.type_name
        if t in _NUMERIC_TYPES:
            return int(self.lexical)
        if t in _FLOAT_TYPES:
            return float(self.lexical)
        if t == "boolean":
            if self.lexical not in ("true", "false", "1", "0"):
                raise ValueError(f"bad boolean literal {self.lexical!r}")
            return self.lexical in ("true", "1")
        return self.lexical

    @property
    def is_boolean(self) -> bool:
        return self.type_name == "boolean"


@dataclass(frozen=True)
class NamedClass:
    iri: str


@dataclass(frozen=True)
class ComplementOf:
    cls: NamedClass


@dataclass(frozen=True)
class OneOf:
    individuals: tuple[str, ...]


@dataclass(frozen=True)
class HasValue:
    prop: str
    value: Union[str, Literal]

    @property
    def is_data(self) -> bool:
        return isinstance(self.value, Literal)


@dataclass(frozen=True)
class HasSelf:
    prop: str


@dataclass(frozen=True)
class Cardinality:
    kind: str  # "max" | "min" | "exact"
    n: int
    prop: str
    cls: NamedClass | None = None
    data: bool = False

    def __post_init__(self):
        if self.kind not in ("max", "min", "exact"):
            raise ValueError(f"bad cardinality kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class SomeValuesFrom:
    prop: str
    cls: NamedClass


@dataclass(frozen=True)
class AllValuesFrom:
    prop: str
    cls: NamedClass


@dataclass(frozen=True)
class IntersectionOf:
    members: tuple


@dataclass(frozen=True)
class UnionOf:
    members: tuple


ClassExpression = Union[
    NamedClass, ComplementOf, OneOf, HasValue, HasSelf, Cardinality,
    SomeValuesFrom, AllValuesFrom, IntersectionOf, UnionOf,
]


# --------------------------------------------------------------------------
# Axioms. ``span`` is (line, column) of the axiom keyword and never takes part
# in equality.


@dataclass(frozen=True)
class ClassAssertion:
    cls: ClassExpression
    individual: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class ObjectPropertyAssertion:
    prop: str
    subject: str
    object: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class DataPropertyAssertion:
    prop: str
    subject: str
    value: Literal
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class NegativeObjectPropertyAssertion:
    prop: str
    subject: str
    object: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class NegativeDataPropertyAssertion:
    prop: str
    subject: str
    value: Literal
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class DifferentIndividuals:
    a: str
    b: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class SameIndividual:
    a: str
    b: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpression
    sup: ClassExpression
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class EquivalentClasses:
    a: ClassExpression
    b: ClassExpression
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class DisjointClasses:
    a: ClassExpression
    b: ClassExpression
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class AnnotationAssertion:
    prop: str
    subject: str
    value: Literal
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Declaration:
    kind: str  # Class, NamedIndividual, ObjectProperty, DataProperty, ...
    iri: str
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


Axiom = Union[
    ClassAssertion, ObjectPropertyAssertion, DataPropertyAssertion,
    NegativeObjectPropertyAssertion, NegativeDataPropertyAssertion,
    DifferentIndividuals, SameIndividual, SubClassOf, EquivalentClasses,
    DisjointClasses, AnnotationAssertion, Declaration,
]


@dataclass(frozen=True)
class IgnoredAxiom:
    kind: str
    start: tuple[int, int]
    end: tuple[int, int]
    reason: str


# --------------------------------------------------------------------------
# Tokenizer and generic s-expression reader

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<iri><[^<>\s]*>)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<dtsep>\^\^)
  | (?P<lang>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<eq>=)
  | (?P<pname>(?:[A-Za-z_][\w\-.]*)?:(?:[\w\-]+(?:\.[\w\-]+)*)?)
  | (?P<word>[A-Za-z][\w\-]*)
  | (?P<number>[+-]?\d+(?:\.\d+)?)
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


@dataclass
class _Node:
    name: str
    args: list
    line: int
    col: int
    end: tuple[int, int] = (0, 0)


def _tokens(text: str, path: str) -> Iterator[_Tok]:
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise OWLSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, path)
        kind = m.lastgroup
        tok_text = m.group()
        if kind not in ("ws", "comment"):
            yield _Tok(kind, tok_text, line, pos - line_start + 1)
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + tok_text.rindex("\n") + 1
        pos = m.end()


def _read(text: str, path: str) -> list:
    """Group tokens into nested ``_Node`` lists; literals become ``_Lit``."""
    toks = list(_tokens(text, path))
    out: list = []
    stack: list[_Node] = []
    i = 0
    while i < len(toks):
        t = toks[i]
        if t.kind == "word" and i + 1 < len(toks) and toks[i + 1].kind == "lpar":
            node = _Node(t.text, [], t.line, t.col)
            (stack[-1].args if stack else out).append(node)
            stack.append(node)
            i += 2
            continue
        if t.kind == "rpar":
            if not stack:
                raise OWLSyntaxError("unbalanced ')'", t.line, t.col, path)
            stack.pop().end = (t.line, t.col)
            i += 1
            continue
        if t.kind == "lpar":
            raise OWLSyntaxError("'(' without a construct name", t.line, t.col, path)
        if t.kind == "string":
            lex = _unescape(t.text[1:-1])
            dt = lang = None
            if i + 1 < len(toks) and toks[i + 1].kind == "dtsep":
                if i + 2 >= len(toks) or toks[i + 2].kind not in ("iri", "pname"):
                    raise OWLSyntaxError("datatype expected after '^^'", t.line, t.col, path)
                dt = toks[i + 2]
                i += 2
            elif i + 1 < len(toks) and toks[i + 1].kind == "lang":
                lang = toks[i + 1].text[1:]
                i += 1
            item = _Tok("literal", "", t.line, t.col)
            item.lit = (lex, dt, lang)  # type: ignore[attr-defined]
            (stack[-1].args if stack else out).append(item)
            i += 1
            continue
        (stack[-1].args if stack else out).append(t)
        i += 1
    if stack:
        n = stack[-1]
        raise OWLSyntaxError(f"unclosed '{n.name}('", n.line, n.col, path)
    return out


def _unescape(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


# --------------------------------------------------------------------------
# Interpretation


class _Unsupported(Exception):
    pass


_BOOLEAN_OPS = {
    "ObjectIntersectionOf": "and", "IntersectionOf": "and",
    "ObjectUnionOf": "or", "UnionOf": "or",
}


class _Builder:
    def __init__(self, path: str):
        self.path = path
        self.prefixes: dict[str, str] = dict(STANDARD_PREFIXES)

    def err(self, msg: str, item) -> OWLSyntaxError:
        return OWLSyntaxError(msg, item.line, item.col, self.path)

    def iri(self, item) -> str:
        if isinstance(item, _Node) or item.kind not in ("iri", "pname"):
            raise self.err("identifier expected", item)
        if item.kind == "iri":
            return item.text[1:-1]
        if item.text.startswith("_:"):
            return item.text
        pfx, _, local = item.text.partition(":")
        pfx += ":"
        if pfx not in self.prefixes:
            raise self.err(f"unknown prefix '{pfx}'", item)
        return self.prefixes[pfx] + local

    def literal(self, item) -> Literal:
        if isinstance(item, _Node) or item.kind != "literal":
            raise self.err("literal expected", item)
        lex, dt, lang = item.lit
        return Literal(lex, self.iri(dt) if dt is not None else None, lang)

    def is_literal(self, item) -> bool:
        return not isinstance(item, _Node) and item.kind == "literal"

    def integer(self, item) -> int:
        if isinstance(item, _Node) or item.kind != "number" or not item.text.lstrip("+").isdigit():
            raise self.err("non-negative integer expected", item)
        return int(item.text)

    def named(self, item) -> NamedClass:
        if isinstance(item, _Node):
            if item.name in _BOOLEAN_OPS:
                raise self.err(f"nested {item.name} is not allowed here; define a named class for it", item)
            raise _Unsupported(f"{item.name} where a named class is required")
        return NamedClass(self.iri(item))

    def class_expr(self, item, nested_ok: bool = True) -> ClassExpression:
        if not isinstance(item, _Node):
            return NamedClass(self.iri(item))
        name, args = item.name, [a for a in item.args if not (isinstance(a, _Node) and a.name == "Annotation")]
        if name in _BOOLEAN_OPS:
            if not nested_ok:
                raise self.err(f"nested {name} is not allowed (offending expression at {item.line}:{item.col})", item)
            if len(args) < 2:
                raise self.err(f"{name} needs at least two operands", item)
            members = tuple(self.class_expr(a, nested_ok=False) for a in args)
            return IntersectionOf(members) if _BOOLEAN_OPS[name] == "and" else UnionOf(members)
        if name == "ObjectComplementOf":
            self.arity(item, args, 1)
            return ComplementOf(self.named(args[0]))
        if name == "ObjectOneOf":
            if not args:
                raise self.err("ObjectOneOf needs individuals", item)
            return OneOf(tuple(self.iri(a) for a in args))
        if name in ("ObjectHasValue", "DataHasValue"):
            self.arity(item, args, 2)
            value = self.literal(args[1]) if self.is_literal(args[1]) else self.iri(args[1])
            return HasValue(self.iri(args[0]), value)
        if name == "ObjectHasSelf":
            self.arity(item, args, 1)
            return HasSelf(self.iri(args[0]))
        m = re.fullmatch(r"(Object|Data)(Max|Min|Exact)Cardinality", name)
        if m:
            if len(args) not in (2, 3):
                raise self.err(f"{name} takes 2 or 3 arguments", item)
            data = m.group(1) == "Data"
            cls = None
            if len(args) == 3 and not data:
                cls = self.named(args[2])
            return Cardinality(m.group(2).lower(), self.integer(args[0]), self.iri(args[1]), cls, data)
        if name in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
            self.arity(item, args, 2)
            cls = self.named(args[1])
            ctor = SomeValuesFrom if name == "ObjectSomeValuesFrom" else AllValuesFrom
            return ctor(self.iri(args[0]), cls)
        raise _Unsupported(f"class expression {name}")

    def arity(self, item, args, n):
        if len(args) != n:
            raise self.err(f"{item.name} takes {n} argument(s), got {len(args)}", item)

    def axioms(self, node: _Node) -> list:
        name = node.name
        args = [a for a in node.args if not (isinstance(a, _Node) and a.name == "Annotation")]
        span = (node.line, node.col)
        if name == "Declaration":
            self.arity(node, args, 1)
            inner = args[0]
            if not isinstance(inner, _Node) or len(inner.args) != 1:
                raise self.err("Declaration(Kind(iri)) expected", node)
            return [Declaration(inner.name, self.iri(inner.args[0]), span)]
        if name == "ClassAssertion":
            self.arity(node, args, 2)
            return [ClassAssertion(self.class_expr(args[0]), self.iri(args[1]), span)]
        if name == "ObjectPropertyAssertion":
            self.arity(node, args, 3)
            return [ObjectPropertyAssertion(self.iri(args[0]), self.iri(args[1]), self.iri(args[2]), span)]
        if name in ("DataPropertyAssertion", "DatatypePropertyAssertion"):
            self.arity(node, args, 3)
            return [DataPropertyAssertion(self.iri(args[0]), self.iri(args[1]), self.literal(args[2]), span)]
        if name == "NegativeObjectPropertyAssertion":
            self.arity(node, args, 3)
            return [NegativeObjectPropertyAssertion(self.iri(args[0]), self.iri(args[1]), self.iri(args[2]), span)]
        if name == "NegativeDataPropertyAssertion":
            self.arity(node, args, 3)
            return [NegativeDataPropertyAssertion(self.iri(args[0]), self.iri(args[1]), self.literal(args[2]), span)]
        if name in ("DifferentIndividuals", "SameIndividual"):
            if len(args) < 2:
                raise self.err(f"{name} needs at least two individuals", node)
            ids = [self.iri(a) for a in args]
            ctor = DifferentIndividuals if name == "DifferentIndividuals" else SameIndividual
            return [ctor(a, b, span) for a, b in _pairs(ids)]
        if name == "SubClassOf":
            self.arity(node, args, 2)
            return [SubClassOf(self.class_expr(args[0]), self.class_expr(args[1]), span)]
        if name in ("EquivalentClasses", "DisjointClasses"):
            if len(args) < 2:
                raise self.err(f"{name} needs at least two classes", node)
            exprs = [self.class_expr(a) for a in args]
            ctor = EquivalentClasses if name == "EquivalentClasses" else DisjointClasses
            return [ctor(a, b, span) for a, b in _pairs(exprs)]
        if name == "AnnotationAssertion":
            self.arity(node, args, 3)
            prop = self.iri(args[0])
            if prop != RDFS_LABEL or not self.is_literal(args[2]):
                raise _Unsupported("annotation other than rdfs:label")
            return [AnnotationAssertion(prop, self.iri(args[1]), self.literal(args[2]), span)]
        raise _Unsupported(f"axiom kind {name}")


def _pairs(items: list) -> list[tuple]:
    return [(items[i], items[j]) for i in range(len(items)) for j in range(i + 1, len(items))]


# --------------------------------------------------------------------------
# Model


@dataclass(frozen=True)
class OntologyModel:
    """Parsed ontology. Treat as immutable once built."""

    prefixes: dict[str, str]
    axioms: tuple
    ignored: tuple[IgnoredAxiom, ...] = ()

    def __post_init__(self):
        labels: dict[tuple[str, str], str] = {}
        by_entity: dict[str, list[int]] = {}
        supers: dict[str, list[str]] = {}
        types: dict[str, list[str]] = {}
        kinds: dict[str, set[str]] = {}

        def note(iri, kind):
            kinds.setdefault(iri, set()).add(kind)

        for i, ax in enumerate(self.axioms):
            for e in _mentions(ax):
                by_entity.setdefault(e, [])
                if not by_entity[e] or by_entity[e][-1] != i:
                    by_entity[e].append(i)
            if isinstance(ax, AnnotationAssertion):
                labels.setdefault((ax.subject, ax.value.lang or ""), ax.value.lexical)
            elif isinstance(ax, Declaration):
                note(ax.iri, {"Class": "class", "NamedIndividual": "individual",
                              "ObjectProperty": "object-property", "DataProperty": "data-property",
                              }.get(ax.kind, ax.kind))
            elif isinstance(ax, ClassAssertion):
                note(ax.individual, "individual")
                for c in _named_conjuncts(ax.cls):
                    note(c, "class")
                    types.setdefault(ax.individual, [])
                    if c not in types[ax.individual]:
                        types[ax.individual].append(c)
                _note_expr(ax.cls, note)
            elif isinstance(ax, (ObjectPropertyAssertion, NegativeObjectPropertyAssertion)):
                note(ax.subject, "individual")
                note(ax.object, "individual")
                note(ax.prop, "object-property")
            elif isinstance(ax, (DataPropertyAssertion, NegativeDataPropertyAssertion)):
                note(ax.subject, "individual")
                note(ax.prop, "data-property")
            elif isinstance(ax, (DifferentIndividuals, SameIndividual)):
                note(ax.a, "individual")
                note(ax.b, "individual")
            elif isinstance(ax, (SubClassOf, EquivalentClasses, DisjointClasses)):
                left, right = (ax.sub, ax.sup) if isinstance(ax, SubClassOf) else (ax.a, ax.b)
                for side in (left, right):
                    if isinstance(side, NamedClass):
                        note(side.iri, "class")
                    _note_expr(side, note)
                if isinstance(left, NamedClass) and not isinstance(ax, DisjointClasses):
                    # EquivalentClasses(named, named) would make a two-way edge; skip it.
                    if isinstance(ax, SubClassOf) or not isinstance(right, NamedClass):
                        for c in _named_conjuncts(right):
                            supers.setdefault(left.iri, [])
                            if c not in supers[left.iri] and c != left.iri:
                                supers[left.iri].append(c)
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_by_entity", by_entity)
        object.__setattr__(self, "_supers", supers)
        object.__setattr__(self, "_types", types)
        object.__setattr__(self, "_kinds", kinds)

    # lookups -------------------------------------------------------------

    def axioms_about(self, entity: str) -> list:
        return [self.axioms[i] for i in self._by_entity.get(entity, [])]

    def knows(self, entity: str) -> bool:
        return entity in self._kinds or entity in self._by_entity

    def kinds_of(self, entity: str) -> set[str]:
        return set(self._kinds.get(entity, ()))

    def is_class(self, entity: str) -> bool:
        return "class" in self._kinds.get(entity, ())

    def is_individual(self, entity: str) -> bool:
        return "individual" in self._kinds.get(entity, ())

    def entities(self, kind: str) -> list[str]:
        """Entities of one kind in order of first mention."""
        seen = []
        for ax in self.axioms:
            for e in _mentions(ax):
                if kind in self._kinds.get(e, ()) and e not in seen:
                    seen.append(e)
        return seen

    def lookup_label(self, entity: str, lang: str) -> str | None:
        if (entity, lang) in self._labels:
            return self._labels[(entity, lang)]
        return self._labels.get((entity, ""))

    def direct_superclasses(self, cls: str) -> list[str]:
        return list(self._supers.get(cls, ()))

    def told_ancestors(self, cls: str) -> list[str]:
        """Told superclasses, nearest first (breadth-first, document order)."""
        self._check_cycles(cls)
        out, seen = [], {cls}
        queue = deque(self._supers.get(cls, ()))
        while queue:
            c = queue.popleft()
            if c in seen:
                continue
            seen.add(c)
            out.append(c)
            queue.extend(self._supers.get(c, ()))
        return out

    def types_of(self, individual: str) -> list[str]:
        """Asserted named classes of an individual, then their told ancestors."""
        direct = list(self._types.get(individual, ()))
        out = list(direct)
        for c in direct:
            for a in self.told_ancestors(c):
                if a not in out:
                    out.append(a)
        # keep breadth-first layering across several direct classes
        layered, frontier, seen = [], direct, set()
        while frontier:
            nxt = []
            for c in frontier:
                if c not in seen:
                    seen.add(c)
                    layered.append(c)
                    nxt.extend(self._supers.get(c, ()))
            frontier = nxt
        return layered if set(layered) == set(out) else out

    def subsumers(self, entity: str) -> list[str]:
        """Most specific first: the class itself (for classes) or the asserted types."""
        if self.is_class(entity) and not self.is_individual(entity):
            return [entity] + self.told_ancestors(entity)
        return self.types_of(entity)

    def _check_cycles(self, start: str) -> None:
        state: dict[str, int] = {}
        path: list[str] = []

        def visit(c):
            state[c] = 1
            path.append(c)
            for s in self._supers.get(c, ()):
                if state.get(s) == 1:
                    raise HierarchyCycleError(path[path.index(s):] + [s])
                if s not in state:
                    visit(s)
            path.pop()
            state[c] = 2

        visit(start)

    def expand(self, name: str) -> str:
        """Resolve ``pfx:local``, ``<iri>`` or a bare local name (default prefix)."""
        name = name.strip()
        if name.startswith("<") and name.endswith(">"):
            return name[1:-1]
        if name.startswith("_:") or "://" in name:
            return name
        if ":" in name:
            pfx, _, local = name.partition(":")
            if pfx + ":" in self.prefixes:
                return self.prefixes[pfx + ":"] + local
            raise KeyError(f"unknown prefix '{pfx}:'")
        if ":" in self.prefixes:
            return self.prefixes[":"] + name
        return name

    def abbreviate(self, iri: str) -> str:
        best = None
        for pfx, ns in self.prefixes.items():
            if iri.startswith(ns) and (best is None or len(ns) > len(best[1])):
                best = (pfx, ns)
        if best and re.fullmatch(r"[\w\-]+(?:\.[\w\-]+)*", iri[len(best[1]):] or "x"):
            return best[0] + iri[len(best[1]):]
        return iri if iri.startswith("_:") else f"<{iri}>"


def _named_conjuncts(expr) -> list[str]:
    if isinstance(expr, NamedClass):
        return [expr.iri]
    if isinstance(expr, IntersectionOf):
        return [m.iri for m in expr.members if isinstance(m, NamedClass)]
    return []


def _note_expr(expr, note) -> None:
    if isinstance(expr, (IntersectionOf, UnionOf)):
        for m in expr.members:
            _note_expr(m, note)
    elif isinstance(expr, NamedClass):
        note(expr.iri, "class")
    elif isinstance(expr, ComplementOf):
        note(expr.cls.iri, "class")
    elif isinstance(expr, OneOf):
        for i in expr.individuals:
            note(i, "individual")
    elif isinstance(expr, HasValue):
        note(expr.prop, "data-property" if expr.is_data else "object-property")
        if not expr.is_data:
            note(expr.value, "individual")
    elif isinstance(expr, (SomeValuesFrom, AllValuesFrom)):
        note(expr.prop, "object-property")
        note(expr.cls.iri, "class")
    elif isinstance(expr, Cardinality):
        note(expr.prop, "data-property" if expr.data else "object-property")
        if expr.cls:
            note(expr.cls.iri, "class")


def _expr_mentions(expr) -> list[str]:
    if isinstance(expr, NamedClass):
        return [expr.iri]
    if isinstance(expr, ComplementOf):
        return [expr.cls.iri]
    if isinstance(expr, OneOf):
        return list(expr.individuals)
    if isinstance(expr, HasValue):
        return [expr.prop] + ([] if expr.is_data else [expr.value])
    if isinstance(expr, HasSelf):
        return [expr.prop]
    if isinstance(expr, Cardinality):
        return [expr.prop] + ([expr.cls.iri] if expr.cls else [])
    if isinstance(expr, (SomeValuesFrom, AllValuesFrom)):
        return [expr.prop, expr.cls.iri]
    if isinstance(expr, (IntersectionOf, UnionOf)):
        return [e for m in expr.members for e in _expr_mentions(m)]
    return []


def _mentions(ax) -> list[str]:
    if isinstance(ax, ClassAssertion):
        return [ax.individual] + _expr_mentions(ax.cls)
    if isinstance(ax, (ObjectPropertyAssertion, NegativeObjectPropertyAssertion)):
        return [ax.subject, ax.prop, ax.object]
    if isinstance(ax, (DataPropertyAssertion, NegativeDataPropertyAssertion)):
        return [ax.subject, ax.prop]
    if isinstance(ax, (DifferentIndividuals, SameIndividual)):
        return [ax.a, ax.b]
    if isinstance(ax, SubClassOf):
        return _expr_mentions(ax.sub) + _expr_mentions(ax.sup)
    if isinstance(ax, (EquivalentClasses, DisjointClasses)):
        return _expr_mentions(ax.a) + _expr_mentions(ax.b)
    if isinstance(ax, AnnotationAssertion):
        return [ax.subject]
    if isinstance(ax, Declaration):
        return [ax.iri]
    return []


def parse_ontology(document: str, path: str = "<string>") -> OntologyModel:
    """Parse functional-style syntax into an :class:`OntologyModel`.

    Accepts either a bare sequence of ``Prefix(...)`` declarations and axioms
    or the usual ``Ontology(<iri> ...)`` wrapper.
    """
    b = _Builder(path)
    axioms: list = []
    ignored: list[IgnoredAxiom] = []

    def handle(items):
        for item in items:
            if not isinstance(item, _Node):
                if item.kind in ("iri",):
                    continue  # ontology / version IRI
                raise b.err(f"unexpected token {item.text!r}", item)
            if item.name == "Prefix":
                a = item.args
                if len(a) != 3 or getattr(a[0], "kind", None) != "pname" or getattr(a[1], "kind", None) != "eq" \
                        or getattr(a[2], "kind", None) != "iri":
                    raise b.err("Prefix(pfx:=<iri>) expected", item)
                b.prefixes[a[0].text] = a[2].text[1:-1]
            elif item.name == "Ontology":
                handle(item.args)
            elif item.name in ("Import", "Annotation"):
                continue
            else:
                try:
                    axioms.extend(b.axioms(item))
                except _Unsupported as exc:
                    ignored.append(IgnoredAxiom(item.name, (item.line, item.col), item.end, str(exc)))

    handle(_read(document, path))
    return OntologyModel(dict(b.prefixes), tuple(axioms), tuple(ignored))


def load_ontology(path: str) -> OntologyModel:
    with open(path, encoding="utf-8") as fh:
        return parse_ontology(fh.read(), path)


# --------------------------------------------------------------------------
# Serialization


def _s_iri(iri: str) -> str:
    return iri if iri.startswith("_:") else f"<{iri}>"


def _s_lit(lit: Literal) -> str:
    out = f'"{_escape(lit.lexical)}"'
    if lit.lang:
        return out + "@" + lit.lang
    if lit.datatype:
        return out + "^^" + _s_iri(lit.datatype)
    return out


def _s_expr(e) -> str:
    if isinstance(e, NamedClass):
        return _s_iri(e.iri)
    if isinstance(e, ComplementOf):
        return f"ObjectComplementOf({_s_expr(e.cls)})"
    if isinstance(e, OneOf):
        return "ObjectOneOf(" + " ".join(map(_s_iri, e.individuals)) + ")"
    if isinstance(e, HasValue):
        if e.is_data:
            return f"DataHasValue({_s_iri(e.prop)} {_s_lit(e.value)})"
        return f"ObjectHasValue({_s_iri(e.prop)} {_s_iri(e.value)})"
    if isinstance(e, HasSelf):
        return f"ObjectHasSelf({_s_iri(e.prop)})"
    if isinstance(e, Cardinality):
        head = ("Data" if e.data else "Object") + e.kind.capitalize() + "Cardinality"
        tail = f" {_s_expr(e.cls)}" if e.cls else ""
        return f"{head}({e.n} {_s_iri(e.prop)}{tail})"
    if isinstance(e, SomeValuesFrom):
        return f"ObjectSomeValuesFrom({_s_iri(e.prop)} {_s_expr(e.cls)})"
    if isinstance(e, AllValuesFrom):
        return f"ObjectAllValuesFrom({_s_iri(e.prop)} {_s_expr(e.cls)})"
    if isinstance(e, IntersectionOf):
        return "ObjectIntersectionOf(" + " ".join(map(_s_expr, e.members)) + ")"
    if isinstance(e, UnionOf):
        return "ObjectUnionOf(" + " ".join(map(_s_expr, e.members)) + ")"
    raise TypeError(f"not a class expression: {e!r}")


def serialize_axiom(ax) -> str:
    name = type(ax).__name__
    if isinstance(ax, Declaration):
        return f"Declaration({ax.kind}({_s_iri(ax.iri)}))"
    if isinstance(ax, ClassAssertion):
        return f"ClassAssertion({_s_expr(ax.cls)} {_s_iri(ax.individual)})"
    if isinstance(ax, (ObjectPropertyAssertion, NegativeObjectPropertyAssertion)):
        return f"{name}({_s_iri(ax.prop)} {_s_iri(ax.subject)} {_s_iri(ax.object)})"
    if isinstance(ax, (DataPropertyAssertion, NegativeDataPropertyAssertion)):
        return f"{name}({_s_iri(ax.prop)} {_s_iri(ax.subject)} {_s_lit(ax.value)})"
    if isinstance(ax, (DifferentIndividuals, SameIndividual)):
        return f"{name}({_s_iri(ax.a)} {_s_iri(ax.b)})"
    if isinstance(ax, SubClassOf):
        return f"SubClassOf({_s_expr(ax.sub)} {_s_expr(ax.sup)})"
    if isinstance(ax, (EquivalentClasses, DisjointClasses)):
        return f"{name}({_s_expr(ax.a)} {_s_expr(ax.b)})"
    if isinstance(ax, AnnotationAssertion):
        return f"AnnotationAssertion({_s_iri(ax.prop)} {_s_iri(ax.subject)} {_s_lit(ax.value)})"
    raise TypeError(f"not an axiom: {ax!r}")


def serialize_ontology(model: OntologyModel) -> str:
    lines = [f"Prefix({p}=<{ns}>)" for p, ns in model.prefixes.items() if p not in STANDARD_PREFIXES]
    lines.extend(serialize_axiom(ax) for ax in model.axioms)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Identifier tokenization

_WORD_RE = re.compile(r"[A-Z]+(?![a-z])\d*|[A-Z]?[a-z]+\d*|\d+[A-Za-z]*|[A-Z]")


def tokenize_identifier(local_name: str) -> list[str]:
    """Split a CamelCase or underscore_style identifier into lowercase words.

    A digit run stays attached to the letters before it (``tecraA8`` ->
    ``tecra a8``, ``product145`` -> ``product145``).
    """
    words: list[str] = []
    for chunk in re.split(r"[_\-\s]+", local_name):
        if not chunk:
            continue
        parts = _WORD_RE.findall(chunk)
        words.extend(p.lower() for p in parts) if parts else words.append(chunk.lower())
    return words or [local_name.lower()]

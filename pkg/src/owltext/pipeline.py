"""The generation pipeline with per-stage ablation switches."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .aggregator import AggregationConfig, aggregate
from .lexicalizer import LexConfig, Lexicalizer
from .owl import OntologyModel
from .planner import order_messages
from .realizer import RenderedSentence, dump_specs, render_sentences, render_text
from .refgen import RefContext, resolve_references
from .resources import ResourceSet
from .selection import ANY_USER, SelectionConfig, UserModel, select_content
from .sentences import Sentence
from .triples import FactPlan, Message, format_plan, merge_plan, retrieve_messages


@dataclass(frozen=True)
class Flags:
    lang: str = "en"
    user_type: str = ANY_USER
    distance: int | None = None  # None: the user type's maxFactDistance
    use_interest: bool = True
    use_refexpr: bool = True
    use_names: bool = True
    use_aggregation: bool = True
    use_plans: bool = True
    use_ordering: bool = True
    stop_after_group: bool = False

    @classmethod
    def baseline(cls, **kw) -> "Flags":
        return cls(use_interest=False, use_refexpr=False, use_names=False, use_aggregation=False,
                   use_plans=False, use_ordering=False, **kw)


ABLATIONS = ("use_interest", "use_refexpr", "use_names", "use_aggregation", "use_plans", "use_ordering")
CONFIG_NAMES = ("full", "-interest", "-refexpr", "-nlnames", "-aggregation", "-sentence-plans", "-ordering")


def ablation_ladder(base: Flags = Flags()) -> list[tuple[str, Flags]]:
    """The seven cumulative configurations, each removing one more component."""
    out = [(CONFIG_NAMES[0], base)]
    flags = base
    for name, attr in zip(CONFIG_NAMES[1:], ABLATIONS):
        flags = replace(flags, **{attr: False})
        out.append((name, flags))
    return out


class PipelineError(RuntimeError):
    pass


@dataclass
class Description:
    target: str
    plan: FactPlan
    selected: FactPlan
    sentences: list[Sentence]
    rendered: list[RenderedSentence]
    conveyed: list[Message]
    diagnostics: list[str] = field(default_factory=list)

    def text(self, fmt: str = "plain", resources: ResourceSet | None = None) -> str:
        return render_text(self.rendered, fmt, resources.sections if resources else None, self.target)


def describe(model: OntologyModel, resources: ResourceSet, target: str, flags: Flags = Flags(),
             user_model: UserModel | None = None) -> Description:
    """Run every stage for one target."""
    params = resources.params_for(flags.user_type)
    kind = "individual" if model.is_individual(target) else "class"
    if flags.distance is not None:
        distance = flags.distance
    else:
        distance = params.max_fact_distance if kind == "individual" else 1
    plan = retrieve_messages(model, target, kind, distance)
    merged = merge_plan(plan)
    sel_cfg = SelectionConfig(flags.user_type, params.max_messages_per_page, use_interest=flags.use_interest)
    selected = select_content(merged, resources.interest, user_model if flags.use_interest else None,
                              sel_cfg, model)
    ordered = order_messages(selected, resources.sections, flags.use_ordering, flags.stop_after_group)

    lex = Lexicalizer(model, resources, LexConfig(flags.lang, flags.user_type, flags.use_plans, flags.use_names))
    sentences = [lex.lexicalize(om.message, om.section) for om in ordered]
    if flags.use_aggregation:
        pack = lex.pack
        cfg = AggregationConfig(params.max_messages_per_sentence, pack.word("and"), pack.word("or"),
                                pack.word("exactly"), pack.serial_comma)
        sentences = aggregate(sentences, cfg)
    ctx = RefContext(target, flags.use_refexpr)
    sentences = resolve_references(sentences, lex, ctx)
    rendered = render_sentences(sentences, lex.pack)
    conveyed = [om.message for om in ordered]
    return Description(target, plan, selected, sentences, rendered, conveyed, ctx.diagnostics)


def debug_plan(desc: Description, model: OntologyModel) -> str:
    return format_plan(desc.selected, model)


def debug_specs(desc: Description, resources: ResourceSet, lang: str = "en") -> str:
    return dump_specs(desc.sentences, resources.language(lang))



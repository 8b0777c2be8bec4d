"""Command-line interface: ``owltext describe|batch|validate|scaffold``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .owl import HierarchyCycleError, OntologyModel, OWLSyntaxError, load_ontology
from .pipeline import Flags, debug_plan, debug_specs, describe
from .realizer import FORMATS
from .resources import InflectionError, ResourceError, ResourceSet, empty_resources, load_resources_file
from .scaffold import scaffold_resources
from .selection import UserModel, UserModelStore, record_conveyed
from .triples import UnknownTargetError

EXIT_OK = 0
EXIT_BATCH_FAILURE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_RESOURCES = 4
EXIT_UNKNOWN_TARGET = 5
EXIT_PIPELINE = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _add_generation_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ontology", required=True, help="OWL functional-syntax file")
    p.add_argument("--resources", help="resource JSON file (omit for extracted names only)")
    p.add_argument("--lang", default="en")
    p.add_argument("--user-type", default="*")
    p.add_argument("--distance", type=int, choices=(1, 2))
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--no-interest", action="store_true")
    p.add_argument("--no-refexpr", action="store_true")
    p.add_argument("--no-nlnames", action="store_true")
    p.add_argument("--no-aggregation", action="store_true")
    p.add_argument("--no-sentence-plans", action="store_true")
    p.add_argument("--no-ordering", action="store_true")
    p.add_argument("--baseline", action="store_true", help="all ablations at once")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="owltext", description="Describe OWL individuals and classes in text.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("describe", help="describe one target")
    _add_generation_flags(d)
    d.add_argument("--target", required=True)
    d.add_argument("--user-id")
    d.add_argument("--user-model", help="user-model file (needed with --user-id)")
    d.add_argument("--stop-after-group", action="store_true",
                   help="end the text after the first second-level group")
    d.add_argument("--debug-plan", action="store_true", help="print the selected message triples")
    d.add_argument("--debug-specs", action="store_true", help="print sentence specifications")

    b = sub.add_parser("batch", help="describe many targets, one JSON record each")
    _add_generation_flags(b)
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--targets", help="file with one identifier per line")
    src.add_argument("--all-individuals", action="store_true")
    src.add_argument("--all-classes", action="store_true")
    b.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("validate", help="check a resource file")
    v.add_argument("resources")
    v.add_argument("--ontology", help="ontology whose prefixes the resources may use")

    s = sub.add_parser("scaffold", help="emit a skeleton resource file")
    s.add_argument("--ontology", required=True)
    s.add_argument("--lang", default="en")
    s.add_argument("--output", help="write here instead of stdout")
    return parser


def flags_from_args(args) -> Flags:
    if args.baseline:
        return Flags.baseline(lang=args.lang, user_type=args.user_type, distance=args.distance)
    return Flags(lang=args.lang, user_type=args.user_type, distance=args.distance,
                 use_interest=not args.no_interest, use_refexpr=not args.no_refexpr,
                 use_names=not args.no_nlnames, use_aggregation=not args.no_aggregation,
                 use_plans=not args.no_sentence_plans, use_ordering=not args.no_ordering,
                 stop_after_group=getattr(args, "stop_after_group", False))


def _load_model(path: str) -> OntologyModel:
    try:
        return load_ontology(path)
    except OWLSyntaxError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror}") from None


def _load_resources(path: str | None, model: OntologyModel | None) -> ResourceSet:
    try:
        if path is None:
            return empty_resources()
        return load_resources_file(path, model.prefixes if model else None)
    except ResourceError as exc:
        raise CliError(EXIT_RESOURCES, "\n".join(f"{path}: {d}" for d in exc.diagnostics)) from None
    except OSError as exc:
        raise CliError(EXIT_RESOURCES, f"{path}: {exc.strerror}") from None


def _resolve_target(model: OntologyModel, name: str) -> str:
    try:
        iri = model.expand(name)
    except KeyError as exc:
        raise CliError(EXIT_UNKNOWN_TARGET, str(exc.args[0])) from None
    if not model.knows(iri):
        raise CliError(EXIT_UNKNOWN_TARGET, f"unknown target {name}")
    return iri


def _run_one(model, resources, target, flags, user_model=None):
    try:
        return describe(model, resources, target, flags, user_model)
    except UnknownTargetError:
        raise CliError(EXIT_UNKNOWN_TARGET, f"unknown target {target}") from None
    except HierarchyCycleError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except (InflectionError, ValueError, RuntimeError, LookupError) as exc:
        raise CliError(EXIT_PIPELINE, f"{model.abbreviate(target)}: {exc}") from None


def cmd_describe(args, out) -> int:
    model = _load_model(args.ontology)
    resources = _load_resources(args.resources, model)
    target = _resolve_target(model, args.target)
    flags = flags_from_args(args)
    store = user_model = None
    if args.user_id:
        if not args.user_model:
            raise CliError(EXIT_USAGE, "--user-id needs --user-model")
        store = UserModelStore(args.user_model)
        try:
            user_model = store.load(args.user_id)
        except ValueError as exc:
            raise CliError(EXIT_PIPELINE, str(exc)) from None
    desc = _run_one(model, resources, target, flags, user_model)
    if args.debug_plan:
        print(debug_plan(desc, model), file=out)
        print(file=out)
    if args.debug_specs:
        print(debug_specs(desc, resources, flags.lang), file=out)
        print(file=out)
    text = desc.text(args.format, resources)
    if text:
        print(text, file=out)
    for d in desc.diagnostics:
        print(f"warning: {d}", file=sys.stderr)
    if store is not None:
        try:
            store.save(record_conveyed(user_model or UserModel(args.user_id), desc.conveyed))
        except OSError as exc:
            raise CliError(EXIT_PIPELINE, f"{args.user_model}: {exc.strerror}") from None
    return EXIT_OK


def _batch_targets(args, model: OntologyModel) -> list[str]:
    if args.all_individuals:
        return model.entities("individual")
    if args.all_classes:
        return [c for c in model.entities("class") if not model.is_individual(c)]
    try:
        with open(args.targets, encoding="utf-8") as fh:
            return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"{args.targets}: {exc.strerror}") from None


def cmd_batch(args, out) -> int:
    model = _load_model(args.ontology)
    resources = _load_resources(args.resources, model)
    flags = flags_from_args(args)
    targets = _batch_targets(args, model)

    def one(name: str):
        try:
            target = _resolve_target(model, name)
            desc = _run_one(model, resources, target, flags)
        except CliError as exc:
            return name, None, str(exc)
        record = {"target": model.abbreviate(target), "text": desc.text("plain"),
                  "sentences": [{"text": r.text, "section": r.section, "messages": list(r.messages),
                                 "entities": list(r.entities)} for r in desc.rendered]}
        return name, record, None

    if args.jobs > 1:
        with ThreadPoolExecutor(args.jobs) as pool:
            results = list(pool.map(one, targets))
    else:
        results = [one(t) for t in targets]
    failed = 0
    for name, record, error in results:
        if error is not None:
            failed += 1
            print(f"error: {name}: {error}", file=sys.stderr)
        else:
            print(json.dumps(record, ensure_ascii=False), file=out)
    return EXIT_BATCH_FAILURE if failed else EXIT_OK


def cmd_validate(args, out) -> int:
    model = _load_model(args.ontology) if args.ontology else None
    rs = _load_resources(args.resources, model)
    print(f"ok: {len(rs.lexicon)} lexicon entries, {len(rs.names)} NL names, {len(rs.plans)} sentence plans, "
          f"{len(rs.sections.sections)} sections", file=out)
    return EXIT_OK


def cmd_scaffold(args, out) -> int:
    model = _load_model(args.ontology)
    text = json.dumps(scaffold_resources(model, args.lang), ensure_ascii=False, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return EXIT_OK


COMMANDS = {"describe": cmd_describe, "batch": cmd_batch, "validate": cmd_validate, "scaffold": cmd_scaffold}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

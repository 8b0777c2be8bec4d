"""Print the ablation ladder for every entity of an ontology.

Example:
    python scripts/run_ablation.py data/desk.ofn data/desk.json
"""

from __future__ import annotations

import argparse
import time

from owltext.owl import load_ontology
from owltext.pipeline import Flags, ablation_ladder, describe
from owltext.resources import load_resources_file


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("ontology")
    p.add_argument("resources")
    p.add_argument("--lang", default="en")
    args = p.parse_args()

    model = load_ontology(args.ontology)
    rs = load_resources_file(args.resources, model.prefixes)
    targets = model.entities("individual") + [c for c in model.entities("class") if not model.is_individual(c)]
    previous = None
    for name, flags in ablation_ladder(Flags(lang=args.lang)):
        start = time.perf_counter()
        texts = [describe(model, rs, t, flags).text() for t in targets]
        joined = "\n".join(texts)
        changed = "n/a" if previous is None else str(joined != previous)
        print(f"== {name}  ({time.perf_counter() - start:.3f}s, changed: {changed})")
        for t, text in zip(targets, texts):
            print(f"  {model.abbreviate(t)}: {text.replace(chr(10), ' / ')}")
        previous = joined
    baseline = "\n".join(describe(model, rs, t, Flags.baseline(lang=args.lang)).text() for t in targets)
    print(f"last configuration equals baseline: {previous == baseline}")


if __name__ == "__main__":
    main()

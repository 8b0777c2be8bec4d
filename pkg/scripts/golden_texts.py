"""Regenerate the golden texts from the bundled fixtures and diff them against the pinned strings.

Example:
    python scripts/golden_texts.py
"""

from __future__ import annotations

import difflib
import sys
from pathlib import Path

from owltext.owl import load_ontology
from owltext.pipeline import Flags, describe
from owltext.resources import empty_resources, load_resources_file

DATA = Path(__file__).resolve().parent.parent / "data"

# (ontology, resources, target, flags, format)
CASES = [
    ("wine.ofn", "wine.json", ":StEmilion", {}, "plain"),
    ("wine.ofn", "wine.json", ":StEmilion", {"baseline": True}, "plain"),
    ("tecra.ofn", "tecra_en.json", ":tecraA8", {}, "plain"),
    ("tecra.ofn", "tecra_el.json", ":tecraA8", {"lang": "el"}, "plain"),
    ("aryballos.ofn", "aryballos.json", ":exhibit24", {}, "plain"),
    ("aryballos.ofn", "aryballos.json", ":exhibit24", {"distance": 2}, "plain"),
    ("stoa_scrambled.ofn", "stoa.json", ":stoaZeusEleutherios", {"use_aggregation": False}, "bracketed"),
    ("exhibit7.ofn", "exhibit7.json", ":exhibit7", {"use_aggregation": False}, "plain"),
    ("stoa_bare.ofn", None, ":stoaZeusEleutherios", {}, "plain"),
    ("stoa_labels.ofn", None, ":stoaZeusEleutherios", {}, "plain"),
    ("desk.ofn", "desk.json", ":ergoLift", {}, "headed"),
]


def render(onto: str, res: str | None, target: str, flags: dict, fmt: str) -> str:
    model = load_ontology(str(DATA / onto))
    rs = load_resources_file(str(DATA / res), model.prefixes) if res else empty_resources()
    kw = dict(flags)
    f = Flags.baseline() if kw.pop("baseline", False) else Flags(**kw)
    return describe(model, rs, model.expand(target), f).text(fmt, rs)


def main() -> int:
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else None
    blocks = []
    for onto, res, target, flags, fmt in CASES:
        head = f"# {onto} {res or '-'} {target} {flags or ''} {fmt}".rstrip()
        blocks.append(head + "\n" + render(onto, res, target, flags, fmt) + "\n")
    text = "\n".join(blocks)
    if out_path is None:
        print(text, end="")
        return 0
    if out_path.exists():
        old = out_path.read_text(encoding="utf-8")
        diff = list(difflib.unified_diff(old.splitlines(), text.splitlines(), "pinned", "current", lineterm=""))
        if diff:
            print("\n".join(diff))
            return 1
        print("goldens unchanged")
        return 0
    out_path.write_text(text, encoding="utf-8")
    print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Subcommands:

* ``analyze``   -- full detection report for a preset, presentation file or
  Seifert datum, as JSON on stdout.
* ``table73``   -- recompute the finite-group ambivalence classification;
  exit 0 on an exact match, CSV diff and exit 1 otherwise.
* ``wh1``       -- invariant factors of Wh1(pi; Gamma) for a preset.
* ``steinberg`` -- evaluate a Steinberg word over a preset group.
* ``catalog``   -- dump the builtin group catalog as JSON or CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import conjugacy_classes
from .catalog import (
    Epsilon,
    SeifertInvariants,
    builtin_groups,
    get_preset,
)
from .coset import DEFAULT_MAX_COSETS, realize_presentation
from .pipeline import SCHEMA_VERSION, analyze, reproduce_table_73
from .steinberg import evaluate, k2_membership, parse_steinberg_word, pd_decompose
from .whitehead import CoefficientSystem, wh1_general
from .words import parse_presentation


def _parse_seifert(text: str) -> SeifertInvariants:
    """Parse ``b,eps,g,(a1:b1),(a2:b2),...`` e.g. ``0,o1,1`` for the 3-torus."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) < 3:
        raise ValueError("seifert datum needs at least b,eps,g")
    b = int(parts[0])
    eps = Epsilon(parts[1])
    g = int(parts[2])
    fibers = []
    for p in parts[3:]:
        p = p.strip("()")
        a, _, bb = p.partition(":")
        fibers.append((int(a), int(bb)))
    return SeifertInvariants(b, eps, g, tuple(fibers))


def _cmd_analyze(args: argparse.Namespace) -> int:
    if args.preset:
        report = analyze(get_preset(args.preset), budget=args.budget)
    elif args.presentation:
        text = Path(args.presentation).read_text()
        report = analyze(
            parse_presentation(text),
            budget=args.budget,
            name=Path(args.presentation).stem,
        )
    else:
        report = analyze(_parse_seifert(args.seifert), budget=args.budget)
    print(report.to_json())
    return 0


def _cmd_table73(args: argparse.Namespace) -> int:
    result, computed = reproduce_table_73(args.max_order, budget=args.budget)
    if result.passed:
        ambivalent = sorted(n for n, a in computed.items() if a)
        print(
            f"PASS: {len(result.checked)} groups checked; "
            f"ambivalent: {', '.join(ambivalent)}"
        )
        return 0
    print("name,expected_ambivalent,computed_ambivalent")
    for d in result.diffs:
        print(f"{d.name},{d.expected},{d.computed}")
    return 1


def _cmd_wh1(args: argparse.Namespace) -> int:
    entry = get_preset(args.preset)
    G = realize_presentation(entry.presentation, args.budget)
    factors = tuple(int(x) for x in args.gamma.split(",")) if args.gamma else (2,)
    result = wh1_general(G, CoefficientSystem(factors))
    print(
        json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "group": entry.name,
                "gamma_invariant_factors": list(factors),
                "wh1_invariant_factors": list(result.invariant_factors),
            },
            sort_keys=True,
        )
    )
    return 0


def _cmd_steinberg(args: argparse.Namespace) -> int:
    entry = get_preset(args.group)
    G = realize_presentation(entry.presentation, args.budget)
    word = parse_steinberg_word(args.word, G)
    n = max(args.dim, word.min_dimension())
    matrix = evaluate(word, n, G)
    pd = pd_decompose(matrix)
    print(matrix.display())
    print(f"PD form: {'yes' if pd else 'no'}")
    print(f"K2 member: {'yes' if k2_membership(word, n, G) else 'no'}")
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    entries = builtin_groups(args.max_order)
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "entries": [
                {
                    "name": e.name,
                    "presentation": e.presentation.display(),
                    "known_order": e.known_order,
                    "k1_trivial": e.k1_trivial,
                    "goodness": e.goodness.value,
                    "expected_ambivalent": e.expected_ambivalent,
                    "three_manifold": e.three_manifold,
                }
                for e in entries
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("name,presentation,known_order,k1_trivial,goodness,expected_ambivalent")
        for e in entries:
            print(
                f'{e.name},"{e.presentation.display()}",{e.known_order},'
                f"{e.k1_trivial},{e.goodness.value},{e.expected_ambivalent}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whdetect",
        description="Whitehead-group detection of exotic homeomorphisms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_MAX_COSETS,
            help="maximum working cosets for enumeration",
        )

    p = sub.add_parser("analyze", help="full detection report as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="builtin group name, e.g. dicyclic_12")
    src.add_argument("--presentation", help="path to a presentation file")
    src.add_argument(
        "--seifert", help="Seifert datum b,eps,g,(a1:b1),... e.g. 0,o1,1"
    )
    add_budget(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("table73", help="reproduce the ambivalence classification")
    p.add_argument("--max-order", type=int, default=240)
    add_budget(p)
    p.set_defaults(func=_cmd_table73)

    p = sub.add_parser("wh1", help="invariant factors of Wh1(pi; Gamma)")
    p.add_argument("--preset", required=True)
    p.add_argument(
        "--gamma",
        help="comma-separated invariant factors of Gamma (default 2 = Z/2)",
    )
    add_budget(p)
    p.set_defaults(func=_cmd_wh1)

    p = sub.add_parser("steinberg", help="Steinberg word calculator")
    p.add_argument("action", choices=["eval"])
    p.add_argument("--group", required=True, help="builtin group name")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--word", required=True, help="e.g. 'x(1,2;+a) x(2,1;-a^-1) x(1,2;+a)'")
    add_budget(p)
    p.set_defaults(func=_cmd_steinberg)

    p = sub.add_parser("catalog", help="dump the builtin catalog")
    p.add_argument("--max-order", type=int, default=240)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

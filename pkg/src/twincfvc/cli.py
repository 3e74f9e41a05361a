"""Command-line driver. Every subcommand prints one JSON document.

Exit codes: 0 computed, 1 ``decide`` answered no, 2 input or validity
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .coloring import chi_via_twin_cover, chromatic_number_exact, svcfc_upper_coloring
from .errors import BudgetError, CfvcError, InputError, ParseError, StructuralError, ValidityError
from .generate import GeneratorSpec, generate_instance
from .io import Instance, format_edgelist, parse_instance
from .kernel import AnnotatedInstance, kernelize, kernelize_annotated
from .svcfc import DEFAULT_PATH_CAP, is_strong_cfvc_coloring, svcfc_decide, svcfc_optimal
from .twins import approx_twin_cover, exact_twin_cover, is_twin_cover

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> Instance:
    return parse_instance(_read(args.path), args.format)


def _need_k(args, inst: Instance) -> int:
    k = args.k if args.k is not None else inst.k
    if k is None:
        raise InputError("no color target: pass --k or add a 'k:' line")
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    return k


def _cover(args, inst: Instance) -> frozenset[int]:
    if inst.x is not None:
        return inst.x
    if args.exact_tc:
        return exact_twin_cover(inst.g, args.budget)
    return approx_twin_cover(inst.g)


def _parse_ints(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        values = json.loads(text)
    else:
        values = text.replace(",", " ").split()
    try:
        return [int(v) for v in values]
    except (TypeError, ValueError):
        raise InputError(f"expected a list of integers, got {text!r}") from None


def cmd_kernelize(args) -> tuple[dict, int]:
    inst = _load(args)
    k = _need_k(args, inst)
    if inst.x is not None:
        report = kernelize_annotated(AnnotatedInstance(inst.g, k, inst.x))
    else:
        report = kernelize(inst.g, k, exact_tc=args.exact_tc, budget=args.budget)
    return report.to_json(), EXIT_OK


def cmd_decide(args) -> tuple[dict, int]:
    inst = _load(args)
    k = _need_k(args, inst)
    answer, witness = svcfc_decide(inst.g, k, args.budget)
    if not answer:
        return {"answer": False}, EXIT_NO
    return {"answer": True, "witness": witness.to_list()}, EXIT_OK


def cmd_svcfc(args) -> tuple[dict, int]:
    inst = _load(args)
    value, witness = svcfc_optimal(inst.g, args.budget)
    return {"svcfc": value, "witness": witness.to_list()}, EXIT_OK


def cmd_chi(args) -> tuple[dict, int]:
    inst = _load(args)
    chi, _ = chromatic_number_exact(inst.g, args.budget)
    out = {"chi": chi}
    if inst.x is not None:
        out["chi_via_twin_cover"] = chi_via_twin_cover(inst.g, inst.x)
    return out, EXIT_OK


def cmd_twincover(args) -> tuple[dict, int]:
    inst = _load(args)
    if args.exact_tc:
        x, method = exact_twin_cover(inst.g, args.budget), "exact"
    else:
        x, method = approx_twin_cover(inst.g), "approx"
    out = {"x": sorted(x), "t": len(x), "method": method}
    if inst.x is not None:
        out["annotation_is_twin_cover"] = is_twin_cover(inst.g, inst.x)
    return out, EXIT_OK


def cmd_color(args) -> tuple[dict, int]:
    inst = _load(args)
    x = _cover(args, inst)
    y = frozenset(_parse_ints(args.y)) if args.y is not None else x
    psi = svcfc_upper_coloring(inst.g, x, y, args.budget)
    chi, _ = chromatic_number_exact(inst.g, args.budget)
    return {
        "coloring": psi.to_list(),
        "num_colors": psi.num_colors,
        "chi": chi,
        "x": sorted(x),
        "y": sorted(y),
    }, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    inst = _load(args)
    if args.coloring is None:
        raise InputError("verify needs --coloring")
    colors = _parse_ints(args.coloring)
    verdict = is_strong_cfvc_coloring(inst.g, colors, args.cap)
    return {
        "is_strong": verdict.is_strong,
        "violating_pair": list(verdict.violating_pair) if verdict.violating_pair else None,
        "paths_overflowed": verdict.paths_overflowed,
    }, EXIT_OK


def _spec_from_json(doc: dict, seed: int | None) -> GeneratorSpec:
    try:
        t = int(doc["t"])
        counts: dict[tuple[int, int], int] = {}
        for entry in doc.get("types", []):
            mask = sum(1 << int(i) for i in entry["S"])
            key = (mask, int(entry["s"]))
            counts[key] = counts.get(key, 0) + int(entry["count"])
        return GeneratorSpec(
            t,
            counts,
            seed if seed is not None else int(doc.get("seed", 0)),
            float(doc.get("p", doc.get("core_edge_probability", 0.5))),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad generator spec: {exc}") from None


def cmd_gen(args) -> tuple[dict, int]:
    try:
        doc = json.loads(_read(args.path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"generator spec is not JSON: {exc.msg}", exc.lineno) from None
    spec = _spec_from_json(doc, args.seed)
    g, x = generate_instance(spec)
    return {
        "n": g.n,
        "edges": [list(e) for e in g.edge_list()],
        "x": sorted(x),
        "instance": format_edgelist(Instance(g, x, None)),
    }, EXIT_OK


COMMANDS = {
    "kernelize": (cmd_kernelize, "kernelize an instance (annotated if it carries X)"),
    "decide": (cmd_decide, "decide whether svcfc(G) <= k"),
    "svcfc": (cmd_svcfc, "compute svcfc(G) exactly"),
    "chi": (cmd_chi, "compute the chromatic number"),
    "twincover": (cmd_twincover, "compute a twin cover"),
    "color": (cmd_color, "build a strong CFVC coloring with at most chi+|Y| colors"),
    "verify": (cmd_verify, "check whether a coloring is strong CFVC"),
    "gen": (cmd_gen, "generate an instance from a JSON generator spec"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twincfvc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("path", nargs="?", default="-", help="input file ('-' for stdin)")
        p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
        p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP,
                       help="shortest paths inspected per pair")
        p.add_argument("--budget", type=int, default=None, help="search node budget")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--exact-tc", action="store_true",
                       help="use a minimum twin cover instead of the 2-approximation")
        p.add_argument("--k", type=int, default=None, help="color target (overrides 'k:')")
        p.add_argument("--coloring", default=None, help="colors by vertex, e.g. '1,2,3,1'")
        p.add_argument("--y", default=None, help="fresh-color set for 'color'")
    return parser


def run_cli(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler, _ = COMMANDS[args.command]
    try:
        doc, code = handler(args)
    except BudgetError as exc:
        doc, code = {"error": "budget", "message": str(exc)}, EXIT_BUDGET
    except ValidityError as exc:
        doc, code = {"error": "validity", "message": str(exc)}, EXIT_INPUT
    except StructuralError as exc:
        doc, code = {"error": "structural", "message": str(exc)}, EXIT_INPUT
    except (InputError, OSError) as exc:
        doc, code = {"error": "input", "message": str(exc)}, EXIT_INPUT
    except CfvcError as exc:  # pragma: no cover
        doc, code = {"error": "error", "message": str(exc)}, EXIT_INPUT
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run_cli())

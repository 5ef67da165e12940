"""Command-line front end.

Exit codes: 0 success, 1 failed reproduction or internal assertion,
2 invalid input, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, config
from .bounds import perfect_check, sphere_packing_scan
from .bsymbol import check_b, covering_radius_b, min_distance_b
from .codefile import CodeFileError, parse_code_file
from .config import BudgetExceeded
from .gf import FieldError
from .listdecode import list_size_at_radius
from .report import build_report, render_text, to_json
from .reproduce import ALIASES, TARGETS, run

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--code", required=True, help="code file (explicit G or family stanza)")
    p.add_argument("--b", type=int, required=True, help="symbol-read width")
    p.add_argument("--json", metavar="PATH", help="also write the JSON report here ('-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bsymcov", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"bsymcov {__version__}")
    ap.add_argument("--budget", type=int, metavar="LOG2",
                    help=f"log2 of the enumeration cap (default {config.DEFAULT_LOG2_BUDGET}, "
                         f"env {config.ENV_VAR})")
    sub = ap.add_subparsers(dest="command", required=True)

    _add_code_args(sub.add_parser("analyze", help="full report for one code"))
    p = sub.add_parser("min-distance", help="minimum Hamming and b-symbol distance")
    _add_code_args(p)
    p = sub.add_parser("covering-radius", help="covering radius in the b-symbol metric")
    _add_code_args(p)
    p.add_argument("--mode", choices=("coset", "direct"), default="coset")
    _add_code_args(sub.add_parser("bounds", help="evaluate every covering bound"))
    p = sub.add_parser("perfect", help="decide perfectness in the b-symbol metric")
    _add_code_args(p)
    p.add_argument("--supercode", help="code file of a proper supercode")
    p = sub.add_parser("list-decode", help="largest codeword count in a ball of given radius")
    _add_code_args(p)
    p.add_argument("--radius", type=int, required=True)

    p = sub.add_parser("scan", help="parameter scans")
    p.add_argument("what", choices=("sphere-packing",))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("reproduce", help="recompute the published examples")
    p.add_argument("target", choices=sorted(TARGETS) + sorted(ALIASES) + ["all"])
    p.add_argument("--json", metavar="PATH")
    return ap


def _load(path: str):
    try:
        return parse_code_file(path)
    except CodeFileError as e:
        raise InputError(str(e)) from None


def _emit_json(dest: str | None, payload) -> None:
    if not dest:
        return
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def _code_and_b(args):
    C = _load(args.code)
    try:
        check_b(args.b, C.n)
    except ValueError as e:
        raise InputError(str(e)) from None
    return C


def cmd_analyze(args) -> int:
    C = _code_and_b(args)
    rep = build_report(C, args.b)
    print(render_text(rep), end="")
    _emit_json(args.json, to_json(rep))
    return EXIT_BUDGET if rep["invariants"]["status"] == "budget_exceeded" else EXIT_OK


def cmd_min_distance(args) -> int:
    C = _code_and_b(args)
    d_h, d_b = min_distance_b(C, 1), min_distance_b(C, args.b)
    print(f"d_H = {d_h}\nd_{args.b} = {d_b}")
    _emit_json(args.json, {"code": C.name, "b": args.b, "d_H": d_h, "d_b": d_b})
    return EXIT_OK


def cmd_covering_radius(args) -> int:
    C = _code_and_b(args)
    r = covering_radius_b(C, args.b, mode=args.mode)
    print(f"R_{args.b} = {r}   (mode {args.mode})")
    _emit_json(args.json, {"code": C.name, "b": args.b, "mode": args.mode, "R_b": r})
    return EXIT_OK


def cmd_bounds(args) -> int:
    C = _code_and_b(args)
    rep = build_report(C, args.b, sections=("bounds",))
    if rep["bounds"]["status"] == "budget_exceeded":
        raise BudgetExceeded(rep["bounds"]["reason"])
    print(render_text(rep), end="")
    _emit_json(args.json, rep["bounds"])
    if any(it["note"] == "budget exceeded" for it in rep["bounds"]["items"]):
        print("budget exceeded: some bounds were not evaluated", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_perfect(args) -> int:
    C = _code_and_b(args)
    sup = _load(args.supercode) if args.supercode else None
    try:
        v = perfect_check(C, args.b, supercode=sup)
    except ValueError as e:
        raise InputError(str(e)) from None
    verdict = {True: "perfect", False: "not perfect", None: "undecided"}[v.is_perfect]
    print(f"{C.name}: {verdict} in the {args.b}-symbol metric (rule: {v.deciding_rule}) {v.detail}".rstrip())
    _emit_json(args.json, v.to_dict())
    return EXIT_OK


def cmd_list_decode(args) -> int:
    C = _code_and_b(args)
    if args.radius < 0:
        raise InputError("radius must be non-negative")
    prof = list_size_at_radius(C, args.b, args.radius)
    support = [i + 1 for i, x in enumerate(prof.witness) if x]
    print(f"L_max = {prof.L_max} at radius {args.radius} (b = {args.b}); centre {prof.witness}, support {support}")
    _emit_json(args.json, prof.to_dict())
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.q < 2 or args.nmax < 1:
        raise InputError("need q >= 2 and nmax >= 1")
    found = sphere_packing_scan(args.q, range(1, args.nmax + 1))
    print(f"solutions of 1 + n(q-1) + n(q-1)^2 = q^(n-k), q = {args.q}, n <= {args.nmax}: "
          f"{found if found else 'none'}")
    _emit_json(args.json, {"q": args.q, "nmax": args.nmax, "solutions": [list(s) for s in found]})
    return EXIT_OK


def cmd_reproduce(args) -> int:
    checks = run(args.target)
    failed = False
    for c in checks:
        if c.ok:
            mark = "MATCH"
        elif c.asserted:
            mark, failed = "MISMATCH", True
        else:
            mark = "DIFFERS (not asserted)"
        shown = lambda v: sorted(v) if isinstance(v, set) else v  # noqa: E731
        print(f"{mark:<23} {c.label}: computed {shown(c.computed)}, published {shown(c.expected)}")
    print("reproduction " + ("FAILED" if failed else "ok"))
    _emit_json(args.json, {"target": args.target, "checks": [c.to_dict() for c in checks],
                           "ok": not failed})
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "min-distance": cmd_min_distance,
    "covering-radius": cmd_covering_radius,
    "bounds": cmd_bounds,
    "perfect": cmd_perfect,
    "list-decode": cmd_list_decode,
    "scan": cmd_scan,
    "reproduce": cmd_reproduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        with config.budget(config.get_budget() if args.budget is None else args.budget):
            return COMMANDS[args.command](args)
    except (InputError, FieldError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as e:
        print(f"internal assertion failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

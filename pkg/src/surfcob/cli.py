"""Command-line interface: ``surfcob {invariants,decide,witness,verify,reeb}``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .decision import decide, even_abs_signed_genus, signed_genus
from .handles import format_move
from .notation import ParseError, parse_surface
from .reeb import build_reeb, to_dot
from .search import SearchBounds, find_witness, verify_theorem
from .surface import (
    Surface,
    SurfaceError,
    euler_characteristic,
    even_genus,
    nonorientable_genus,
    odd_count,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_invariants(args) -> int:
    s = parse_surface(args.surface)
    comps = [
        {
            "id": i,
            "component": str(c),
            "P": nonorientable_genus(c),
            "P_prime": even_genus(c),
            "r": signed_genus(c),
            "r_prime": even_abs_signed_genus(c),
        }
        for i, c in enumerate(s)
    ]
    doc = {
        "surface": str(s),
        "P": nonorientable_genus(s),
        "P_o": odd_count(s),
        "chi": euler_characteristic(s),
        "components": comps,
    }
    if args.json:
        _emit(doc)
        return EXIT_OK
    print(f"surface: {doc['surface']}")
    print(f"P = {doc['P']}")
    print(f"P_o = {doc['P_o']}")
    print(f"chi = {doc['chi']}")
    for c in comps:
        print(f"#{c['id']} {c['component']}: P'={c['P_prime']} r={c['r']} r'={c['r_prime']}")
    return EXIT_OK


def cmd_decide(args) -> int:
    fa, fb = parse_surface(args.source), parse_surface(args.target)
    d = decide(fa, fb)
    if args.json:
        _emit({"source": str(fa), "target": str(fb), **d.to_dict()})
    else:
        inv = d.diagnostics
        print(f"F_a: {fa}")
        print(f"F_b: {fb}")
        print(f"exists: {'yes' if d.exists else 'no'}")
        print(f"cond1 (parity of P_o): {'holds' if d.cond1_holds else 'fails'}")
        print(f"cond2 (P_o <= P across sides): {'holds' if d.cond2_holds else 'fails'}")
        print(f"class: {d.abc_class or 'none'}")
        print(
            f"P(F_a)={inv.P_a} P(F_b)={inv.P_b} P_o(F_a)={inv.P_o_a} "
            f"P_o(F_b)={inv.P_o_b} sum P'(F_a)={inv.sum_P_prime_a} sum P'(F_b)={inv.sum_P_prime_b}"
        )
        for line in d.violations():
            print(line)
    return EXIT_OK if d.exists else EXIT_NO


def _witness_bounds(fa: Surface, fb: Surface, max_moves: Optional[int]) -> SearchBounds:
    comps = list(fa) + list(fb)
    return SearchBounds(
        max_components=max(len(fa), len(fb)),
        max_p=max(nonorientable_genus(c) for c in comps),
        max_genus=max((c.genus for c in comps if c.orientable), default=0),
        max_moves=max_moves,
    )


def cmd_witness(args) -> int:
    fa, fb = parse_surface(args.source), parse_surface(args.target)
    d = decide(fa, fb)
    bounds = _witness_bounds(fa, fb, args.max_moves)
    doc = {
        "source": str(fa),
        "target": str(fb),
        "exists": d.exists,
        "budget": bounds.budget(fa, fb),
        "moves": [],
        "length": None,
        "middle": None,
    }
    w = find_witness(fa, fb, bounds) if d.exists else None
    if w is not None:
        doc.update(status="found", moves=[format_move(m) for m in w.moves],
                   length=len(w), middle=str(w.middle))
        code = EXIT_OK
    elif d.exists:
        doc["status"] = "budget_exhausted"
        code = EXIT_BUDGET
    else:
        doc["status"] = "rejected"
        code = EXIT_NO
    if args.json:
        _emit(doc)
    elif w is not None:
        sys.stdout.write(w.to_text())
    elif d.exists:
        print(f"no witness within budget ({doc['budget']} moves)")
    else:
        print("no witness exists")
        for line in d.violations():
            print(line)
    return code


def cmd_verify(args) -> int:
    bounds = SearchBounds(
        max_components=args.max_components,
        max_p=args.max_p,
        max_genus=args.max_genus,
        max_moves=args.max_moves,
        max_live=args.max_live,
    )
    report = verify_theorem(bounds, workers=args.workers)
    if args.json:
        print(report.to_json())
    else:
        print(
            f"checked {report.checked_pairs} pairs: {len(report.mismatches)} mismatches, "
            f"{len(report.undecided)} undecided"
        )
        for r in report.mismatches + report.undecided:
            print(f"{r.status}: {r.source} -> {r.target} (exists={r.exists}, "
                  f"witness_length={r.witness_length}, budget={r.budget})")
    return EXIT_OK if report.passed else EXIT_NO


def cmd_reeb(args) -> int:
    fa, fb = parse_surface(args.source), parse_surface(args.target)
    text = to_dot(build_reeb(fa, fb))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfcob",
        description="Single-singular-value Morse functions on 3-dimensional cobordisms "
        "between closed surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print surface invariants")
    p.add_argument("surface")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decide", help="decide existence for a pair of surfaces")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("witness", help="search for a handle-move witness")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-moves", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check the criterion against exhaustive search")
    p.add_argument("--max-components", type=int, default=2)
    p.add_argument("--max-p", type=int, default=3)
    p.add_argument("--max-genus", type=int, default=1)
    p.add_argument("--max-moves", type=int, default=None)
    p.add_argument("--max-live", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reeb", help="emit the Reeb graph in DOT format")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reeb)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SurfaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Subcommands: ``detect``, ``radius``, ``families``, ``verify-theorem``,
``verify-lemmas``, ``enumerate``.  All structured output is JSON (``--pretty``
indents it); graph input is graph6, read from ``--input`` or stdin so that
commands compose in pipes.  Exit codes: 0 success / verified, 1 verification
failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .chords import find_chorded_cycle, find_dcc, find_dcc1, find_k1_join_p4
from .families import FamilySpec, build_family, list_families
from .graphs import Graph, Graph6Error, graph6_decode, graph6_encode
from .search import (
    enumerate_connected,
    verify_edge_lemmas,
    verify_theorem_dcc,
    verify_theorem_dcc1,
    verify_theorem_k1p4,
)
from .spectral import ConvergenceError, spectral_radius


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CHORDSPECTRA_JOBS", "1")))
    except ValueError:
        return 1


def _read_graph(source: str) -> Graph:
    if source == "-":
        line = sys.stdin.readline()
        if not line.strip():
            raise Graph6Error("no graph6 input on stdin", 0)
        return graph6_decode(line.strip())
    return graph6_decode(source)


def _emit(obj, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None))


def _cmd_detect(args) -> int:
    g = _read_graph(args.input)
    if args.target == "k1p4":
        found = find_k1_join_p4(g)
        if found is None:
            print("none")
        else:
            hub, *path = found
            _emit({"hub": hub, "path": path}, args.pretty)
        return 0
    finder = {"chorded": find_chorded_cycle, "dcc": find_dcc, "dcc1": find_dcc1}[args.target]
    witness = finder(g)
    if witness is None:
        print("none")
    else:
        _emit(witness.as_dict(), args.pretty)
    return 0


def _cmd_radius(args) -> int:
    g = _read_graph(args.input)
    try:
        res = spectral_radius(g, args.tol)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(res.as_dict(), args.pretty)
    return 0


def _cmd_families(args) -> int:
    if args.action == "list":
        _emit(list_families(), args.pretty)
        return 0
    spec = FamilySpec(args.name, n=args.n, r=args.r, t=args.t)
    g = build_family(spec)
    print(graph6_encode(g).decode("ascii"))
    return 0


def _cmd_verify_theorem(args) -> int:
    verifier = {
        "dcc": verify_theorem_dcc,
        "dcc1": verify_theorem_dcc1,
        "k1p4": verify_theorem_k1p4,
    }[args.target]
    report = verifier(args.n, compute_tol=args.tol, compare_tol=args.compare_tol,
                      jobs=args.jobs)
    _emit(report.as_dict(), args.pretty)
    return 0 if report.verified else 1


def _cmd_verify_lemmas(args) -> int:
    reports = verify_edge_lemmas(args.n, jobs=args.jobs)
    _emit([r.as_dict() for r in reports], args.pretty)
    return 0 if all(r.verified for r in reports) else 1


def _cmd_enumerate(args) -> int:
    for g in enumerate_connected(args.n, args.filter, jobs=args.jobs):
        print(graph6_encode(g).decode("ascii"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordspectra",
        description="Chorded-cycle detectors, spectral radii and exhaustive "
                    "extremal verification for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="find a chorded cycle / DCC / DCC1 / hub-over-path")
    p.add_argument("--input", default="-", help="graph6 string, or - for stdin")
    p.add_argument("--target", required=True, choices=["chorded", "dcc", "dcc1", "k1p4"])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("radius", help="spectral radius with Perron vector")
    p.add_argument("--input", default="-", help="graph6 string, or - for stdin")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("families", help="build named graph families")
    fam_sub = p.add_subparsers(dest="action", required=True)
    pl = fam_sub.add_parser("list", help="list family names")
    pl.add_argument("--pretty", action="store_true")
    pl.set_defaults(func=_cmd_families, action="list")
    pb = fam_sub.add_parser("build", help="print a family member as graph6")
    pb.add_argument("name")
    pb.add_argument("--n", type=int)
    pb.add_argument("--r", type=int)
    pb.add_argument("--t", type=int)
    pb.set_defaults(func=_cmd_families, action="build", pretty=False)

    p = sub.add_parser("verify-theorem", help="exhaustive extremal verification at order n")
    p.add_argument("target", choices=["dcc", "dcc1", "k1p4"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12, help="compute tolerance")
    p.add_argument("--compare-tol", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("verify-lemmas", help="edge-count bounds at order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("enumerate", help="stream canonical graph6 of connected graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=["dcc-free", "dcc1-free"], default=None)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line: ``biradial {validate,check,decompose,generate,reach,scc}``.

Exit codes: 0 yes/ok, 1 no, 2 input error, 3 budget exceeded,
4 input outside what the construction rules can express.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Sequence

from .construct import decompose, random_program, replay
from .core import BidirectedGraph, EdgeKind, Sign
from .digraphic import is_digraphic, scc_poset
from .errors import BudgetExceeded, GraphError, PreconditionError, ReplayError, TrivialAlmostStrongError
from .io import dumps, read_graph, serialize_certificate, serialize_graph, to_dot
from .radials import ClassLabel, refute
from .reach import DEFAULT_BUDGET, exists_ditrail

OK, NO, INPUT, BUDGET, OUTSIDE = 0, 1, 2, 3, 4


class InputError(Exception):
    """Bad command-line input; reported and mapped to exit code 2."""


def _sign(s: str) -> Sign:
    try:
        return Sign.of(s)
    except (ValueError, GraphError):
        raise argparse.ArgumentTypeError(f"sign must be + or -, got {s!r}") from None


def _sign_or_any(s: str) -> Sign | None:
    return None if s in ("*", "any") else _sign(s)


def _class(s: str) -> ClassLabel:
    try:
        return ClassLabel.parse(s)
    except PreconditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(args) -> BidirectedGraph:
    return read_graph(args.path)


def _needs_alpha(args) -> Sign | None:
    if args.alpha is None and args.cls is not ClassLabel.ABSOLUTE_SEMIRADIAL:
        raise InputError(f"--alpha is required for {args.cls.value}")
    return args.alpha


# -- commands ----------------------------------------------------------------


def cmd_validate(args) -> int:
    G = _load(args)
    hist = Counter()
    for e in G:
        kind = {EdgeKind.PLUS_PLUS: "(+,+)", EdgeKind.MINUS_MINUS: "(-,-)", EdgeKind.MIXED: "(+,-)"}[e.kind]
        hist[kind] += 1
    print(f"vertices: {len(G)}")
    print(f"edges: {len(G.edges)}")
    for kind in sorted(hist):
        print(f"{kind}: {hist[kind]}")
    loops = sum(e.is_loop for e in G)
    if loops:
        print(f"loops: {loops}")
    if args.dot:
        _write(args.dot, to_dot(G))
    return OK


def cmd_check(args) -> int:
    G = _load(args)
    alpha = _needs_alpha(args)
    bad = refute(G, args.root, alpha, args.cls, budget=args.budget)
    if bad is not None:
        print(f"false: {bad.reason}")
        return NO
    print("true")
    return OK


def _diff(G: BidirectedGraph, H: BidirectedGraph) -> list[str]:
    out = []
    for name, a, b in (("vertices", G.vertices, H.vertices), ("edges", set(G), set(H))):
        for x in sorted(a - b, key=str):
            out.append(f"- {name[:-1]} {x}")
        for x in sorted(b - a, key=str):
            out.append(f"+ {name[:-1]} {x}")
    return out


def cmd_decompose(args) -> int:
    G = _load(args)
    alpha = _needs_alpha(args)
    try:
        cert = decompose(G, args.root, alpha, args.cls, budget=args.budget)
    except TrivialAlmostStrongError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OUTSIDE
    except PreconditionError as exc:
        print(f"false: {exc}")
        return NO
    meta = {"class": args.cls.value, "root": args.root, "source": str(args.path)}
    _write(args.out, serialize_certificate(cert, **meta))
    if args.dot:
        _write(args.dot, to_dot(G))
    if args.verify:
        diff = _diff(G, replay(cert))
        if diff:
            print("replay differs from input:", *diff, sep="\n", file=sys.stderr)
            return NO
        print("replay matches input", file=sys.stderr)
    return OK


def cmd_generate(args) -> int:
    try:
        cert = random_program(args.cls, args.seed, (args.vertices, args.edges), root=args.root, alpha=args.alpha)
    except PreconditionError as exc:
        raise InputError(str(exc)) from None
    G = replay(cert)
    meta = {
        "class": args.cls.value,
        "root": args.root,
        "seed": args.seed,
        "size": [args.vertices, args.edges],
    }
    cert_text = serialize_certificate(cert, **meta)
    if args.out is None:
        sys.stdout.write(cert_text)
    else:
        Path(f"{args.out}.graph.json").write_text(serialize_graph(G))
        Path(f"{args.out}.cert.json").write_text(cert_text)
    if args.dot:
        _write(args.dot, to_dot(G))
    return OK


def cmd_reach(args) -> int:
    G = _load(args)
    w = exists_ditrail(G, args.source, args.target, (args.start_sign, args.end_sign), budget=args.budget)
    if w is None:
        print("none")
        return NO
    print(w.walk)
    return OK


def cmd_scc(args) -> int:
    G = _load(args)
    if not is_digraphic(G):
        raise InputError("graph is not digraphic (it has an edge with equal signs)")
    sys.stdout.write(dumps(scc_poset(G, args.alpha).to_json()))
    return OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biradial", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help):
        c = sub.add_parser(name, help=help)
        c.add_argument("path", help="graph document (JSON)")
        return c

    def budget(c):
        c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle state budget (default 10^7)")

    def klass(c, required=True):
        c.add_argument("--root", required=True)
        c.add_argument("--alpha", type=_sign, default=None, help="+ or - (ignored for absolute)")
        c.add_argument("--class", dest="cls", type=_class, required=required)

    c = graph_cmd("validate", "parse a graph document and summarize it")
    c.add_argument("--dot", help="also write a DOT drawing here")
    c.set_defaults(func=cmd_validate)

    c = graph_cmd("check", "decide class membership")
    klass(c)
    budget(c)
    c.set_defaults(func=cmd_check)

    c = graph_cmd("decompose", "extract a certificate")
    klass(c)
    budget(c)
    c.add_argument("--out", help="certificate file (default stdout)")
    c.add_argument("--verify", action="store_true", help="replay the certificate and compare with the input")
    c.add_argument("--dot", help="also write a DOT drawing here")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("generate", help="seeded random certificate and its graph")
    c.add_argument("--class", dest="cls", type=_class, required=True)
    c.add_argument("--root", default="r")
    c.add_argument("--alpha", type=_sign, default=None, help="drawn from the seed when omitted")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--vertices", type=int, default=10)
    c.add_argument("--edges", type=int, default=14)
    c.add_argument("--out", help="writes OUT.graph.json and OUT.cert.json (default: certificate to stdout)")
    c.add_argument("--dot", help="also write a DOT drawing here")
    c.set_defaults(func=cmd_generate)

    c = graph_cmd("reach", "find a ditrail")
    c.add_argument("--from", dest="source", required=True)
    c.add_argument("--to", dest="target", required=True)
    c.add_argument("--start-sign", type=_sign_or_any, default=None, help="+, - or * (default *)")
    c.add_argument("--end-sign", type=_sign_or_any, default=None, help="+, - or * (default *)")
    budget(c)
    c.set_defaults(func=cmd_reach)

    c = graph_cmd("scc", "strong components and their order")
    c.add_argument("--alpha", type=_sign, default=Sign.PLUS)
    c.set_defaults(func=cmd_scc)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT if exc.code else OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET
    except (InputError, GraphError, ReplayError, PreconditionError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

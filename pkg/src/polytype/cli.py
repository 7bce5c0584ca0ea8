"""``polytype`` command-line interface.

Exit codes: 0 success, 1 input or usage error, 2 a result contradicting
the classification (falsification).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager

from . import __version__
from .classify import classify
from .enumeration import POLYHEDRA_CAP, TRIANGULATION_CAP, enumerate_with_report
from .errors import FalsificationError, NotPolyhedralError, PolytypeError
from .families import FamilySpec
from .formats import format_graph, parse_line
from .graph import type_of
from .verify import SUITES, run_suite

log = logging.getLogger("polytype")

EXIT_OK, EXIT_INPUT, EXIT_FALSIFIED = 0, 1, 2


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            yield fh


def _read_lines(paths):
    """Yield ``(id, line)`` for every non-blank input line; ids count from 1 across files."""
    k = 0
    for path in paths or ["-"]:
        fh = sys.stdin if path == "-" else open(path, encoding="ascii")
        try:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith(">>graph6<<") and len(line) == 10:
                    continue
                k += 1
                yield k, line
        finally:
            if fh is not sys.stdin:
                fh.close()


def _detect(line: str, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    return "edge-json" if line[:1] in "{[" else "graph6"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- commands

def cmd_gen(args) -> int:
    spec = FamilySpec.parse(args.spec)
    g = spec.build()
    fmt = "graph6" if args.format == "auto" else args.format
    with _output(args.out) as out:
        out.write(format_graph(g, fmt) + "\n")
    log.info("%s: p=%d q=%d type %s", spec, g.p, g.q, type_of(g))
    return EXIT_OK


def cmd_type(args) -> int:
    status = EXIT_OK
    with _output(args.out) as out:
        for k, line in _read_lines(args.inputs):
            try:
                g = parse_line(line, _detect(line, args.format))
            except PolytypeError as exc:
                log.error("line %d: %s", k, exc)
                status = EXIT_INPUT
                continue
            out.write(_dump({"id": k, "p": g.p, "q": g.q, "type": list(type_of(g))}) + "\n")
    return status


def cmd_classify(args) -> int:
    status = EXIT_OK
    with _output(args.out) as out:
        for k, line in _read_lines(args.inputs):
            try:
                g = parse_line(line, _detect(line, args.format))
                c = classify(g, lemmas=not args.no_lemmas)
            except NotPolyhedralError as exc:
                log.error("line %d: %s", k, exc)
                out.write(_dump({"id": k, "error": str(exc), "certificate": exc.certificate.to_json()}) + "\n")
                status = max(status, EXIT_INPUT)
                continue
            except FalsificationError as exc:
                log.error("line %d: FALSIFICATION: %s", k, exc)
                out.write(_dump({"id": k, "falsification": str(exc)}) + "\n")
                status = EXIT_FALSIFIED
                continue
            except PolytypeError as exc:
                log.error("line %d: %s", k, exc)
                status = max(status, EXIT_INPUT)
                continue
            out.write(_dump({"id": k, **c.to_json()}) + "\n")
    return status


def cmd_enumerate(args) -> int:
    hard = TRIANGULATION_CAP if args.kind == "tri" else POLYHEDRA_CAP
    cap = hard if args.cap is None else args.cap
    if cap > hard and not args.force:
        log.error("--cap %d exceeds the built-in limit %d; add --force to allow it", cap, hard)
        return EXIT_INPUT
    if args.n > cap and not args.force:
        log.error("n=%d exceeds the cap %d; add --force to enumerate anyway", args.n, cap)
        return EXIT_INPUT
    if cap > hard or args.n > hard:
        log.warning("enumerating beyond the built-in limit %d; this may take very long", hard)
    graphs, report = enumerate_with_report(args.kind, args.n, args.threads, force=True)
    fmt = "graph6" if args.format == "auto" else args.format
    with _output(args.out) as out:
        for g in graphs:
            out.write(format_graph(g, fmt) + "\n")
    text = report.dumps(timing=False)
    if args.report:
        with open(args.report, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stderr.write(text + "\n")
    log.info("%s n=%d: %d graphs in %.2fs", args.kind, args.n, report.count, report.elapsed)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report, ok = run_suite(args.suite, threads=args.threads, n=args.n, seed=args.seed,
                               samples=args.samples)
    except FalsificationError as exc:
        report, ok = {"suite": args.suite, "falsification": str(exc), "ok": False}, False
    with _output(args.out) as out:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    if not ok:
        log.error("verify %s: FALSIFICATION, see the report", args.suite)
        return EXIT_FALSIFIED
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("auto", "graph6", "edge-json"), default="auto",
                        help="graph format for input and output (auto: detect input, graph6 output)")
    common.add_argument("--out", help="write results here instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $POLYTYPE_THREADS or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (at most the built-in limit)")
    common.add_argument("--force", action="store_true", help="allow going past the built-in caps")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="polytype", description="Common-neighbour types of polyhedral graphs.")
    ap.add_argument("--version", action="version", version=f"polytype {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="build a family member")
    p.add_argument("spec", help="family spec such as t:8, b:6, cat123:6,7,10,12 or w3:n=6;e=0-2")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("type", parents=[common], help="type of each input graph")
    p.add_argument("inputs", nargs="*", help="files of graph6 or JSON lines (default stdin)")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("classify", parents=[common], help="classify each input polyhedron")
    p.add_argument("inputs", nargs="*", help="files of graph6 or JSON lines (default stdin)")
    p.add_argument("--no-lemmas", action="store_true", help="skip the structural statement report")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="all triangulations or polyhedra of one order")
    p.add_argument("kind", choices=("tri", "poly"))
    p.add_argument("n", type=int)
    p.add_argument("--report", help="write the JSON report here instead of stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, default=None, help="order for the lemma suite / max order for table2-sweep")
    p.add_argument("--samples", type=int, default=None, help="random samples per construction or sweep")
    p.set_defaults(func=cmd_verify)
    return ap


def _configure_logging(level: int) -> None:
    # a handler of our own, bound to the current stderr, so repeated main() calls
    # (and hosts that already configured the root logger) behave the same
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("polytype: %(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(level)
    log.propagate = False


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(logging.INFO if args.verbose or args.command == "gen" else logging.WARNING)
    try:
        return args.func(args)
    except FalsificationError as exc:
        log.error("FALSIFICATION: %s", exc)
        return EXIT_FALSIFIED
    except (PolytypeError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: build, inspect, verify and realize spatial K_n diagrams."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from importlib import metadata

from . import graph
from .closed_forms import c_n, twist_sum
from .constructions import (InadmissibleTargetError, InternalConsistencyError, TwistParams,
                            plan_realization, realize, twist_embedding)
from .diagram import DiagramError, DiagramParseError, errors, extract_knot, extract_link, load, serialize
from .geometry import (DegenerateConfigurationError, GenerationError, diagram_from_points,
                       parse_points, random_embedding, standard_diagram)
from .invariants import Verdict, invariant_report, sum_a2, verify_congruence, verify_identity, verify_sachs
from .knots import a2, a2_gauss_diagram, lk

log = logging.getLogger("cgsum")

GUARDRAIL_N = 9

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


# -- helpers -------------------------------------------------------------------

def _load(path: str):
    try:
        d = load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except DiagramParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    bad = errors(d)
    if bad:
        first = bad[0]
        more = f" (+{len(bad) - 1} more)" if len(bad) > 1 else ""
        raise UsageError(f"{path}: invalid diagram: {first.kind}: {first.message}{more}")
    return d


def _guard(n: int, force: bool) -> None:
    if n > GUARDRAIL_N and not force:
        raise UsageError(f"brute force over K_{n} enumerates {graph.count_hamiltonian(n)} Hamiltonian "
                         f"cycles; refusing without --force (limit n <= {GUARDRAIL_N})")
    if n > GUARDRAIL_N:
        log.warning("brute force for n=%d may take a very long time", n)


def _write_diagram(d, out: str | None) -> None:
    text = serialize(d)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cycle_arg(text: str) -> tuple:
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected vertex labels, got {text!r}") from None


class Run:
    """Collects one RunReport and renders it."""

    def __init__(self, args, command: str):
        self.args = args
        self.command = command
        self.inputs: dict = {}
        self.report = None
        self.verdicts: list[Verdict] = []
        self.results: dict = {}
        self.provenance: dict = {"version": _version()}
        self.t0 = time.perf_counter()

    @property
    def ok(self) -> bool:
        return all(v.passed is not False for v in self.verdicts)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "report": self.report.as_dict() if self.report else None,
            "results": self.results,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "ok": self.ok,
            "provenance": self.provenance,
            "timing": {"seconds": round(time.perf_counter() - self.t0, 3)},
        }

    def emit(self, stream=None) -> int:
        stream = stream or sys.stdout
        doc = self.as_dict()
        if self.args.format == "structured":
            stream.write(json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n")
        else:
            stream.write(_table(doc))
        return EXIT_OK if self.ok else EXIT_FAIL


def _table(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for k, v in doc["inputs"].items():
        lines.append(f"  {k}: {v}")
    if doc["report"]:
        lines.append("invariants:")
        for k, v in doc["report"].items():
            lines.append(f"  {k:<22} {v}")
    if doc["results"]:
        lines.append("results:")
        for k, v in doc["results"].items():
            lines.append(f"  {k:<22} {v}")
    if doc["verdicts"]:
        lines.append("verdicts:")
        for v in doc["verdicts"]:
            state = {True: "PASS", False: "FAIL", None: "n/a"}[v["passed"]]
            lines.append(f"  {state:<5} {v['name']:<14} expected={v['expected']} actual={v['actual']}"
                         + (f"  ({v['detail']})" if v["detail"] else ""))
    lines.append(f"ok: {doc['ok']}   time: {doc['timing']['seconds']}s")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

def cmd_build(args) -> int:
    if args.kind == "standard":
        d = standard_diagram(args.n)
    elif args.kind == "twist":
        d = twist_embedding(TwistParams(args.n, args.k, args.l, args.s))
    elif args.kind == "random":
        p = random_embedding(args.n, args.seed, bound=args.bound)
        d = diagram_from_points(p, args.axis)
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                p = parse_points(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        d = diagram_from_points(p, args.axis)
    _write_diagram(d, args.out)
    builder = d.meta.get("builder", args.kind)
    print(f"built {builder} diagram: n={d.n}, crossings={d.num_crossings}"
          + (f", written to {args.out}" if args.out not in (None, "-") else ""), file=sys.stderr)
    return EXIT_OK


def _diagram_run(args, command: str):
    d = _load(args.diagram)
    _guard(d.n, args.force)
    run = Run(args, command)
    run.inputs = {"diagram": os.path.basename(args.diagram), "n": d.n, "crossings": d.num_crossings}
    run.provenance["meta"] = d.meta
    return d, run


def cmd_report(args) -> int:
    d, run = _diagram_run(args, "report")
    if d.n < 6:
        raise UsageError(f"invariant report needs n >= 6, got n={d.n}")
    run.report = invariant_report(d, args.workers)
    run.verdicts = [verify_identity(run.report), verify_congruence(run.report), verify_sachs(d)]
    return run.emit()


def cmd_verify(args) -> int:
    if args.what == "lemma21":
        return _verify_lemma21(args)
    d, run = _diagram_run(args, f"verify {args.what}")
    if d.n < 6:
        raise UsageError(f"verification needs n >= 6, got n={d.n}")
    if args.what == "sachs":
        run.verdicts = [verify_sachs(d)]
        return run.emit()
    run.report = invariant_report(d, args.workers)
    if args.what == "identity":
        run.verdicts = [verify_identity(run.report)]
    else:
        run.inputs["modulus"] = args.modulus
        try:
            run.verdicts = [verify_congruence(run.report, args.modulus)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return run.emit()


def _verify_lemma21(args) -> int:
    n = args.n
    if n < 6:
        raise UsageError(f"twist gadgets need n >= 6, got n={n}")
    _guard(n, args.force)
    run = Run(args, "verify lemma21")
    run.inputs = {"n": n, "max_s": args.max_s}
    base = c_n(n)
    for k in range(n - 3):
        for l in range(n - 3 - k):
            for s in range(args.max_s + 1):
                got = sum_a2(twist_embedding(TwistParams(n, k, l, s)), workers=args.workers)
                want = twist_sum(n, k, l, s)
                run.verdicts.append(Verdict(f"k={k},l={l},s={s}", got == want, want, got,
                                            f"c_n={base}"))
    return run.emit()


def cmd_realize(args) -> int:
    try:
        plan = plan_realization(args.n, args.m)
    except InadmissibleTargetError as exc:
        raise UsageError(str(exc)) from None
    if args.verify:
        _guard(args.n, args.force)
    d = realize(args.n, args.m)
    run = Run(args, "realize")
    run.inputs = {"n": args.n, "m": args.m, "verify": args.verify}
    run.results = {"plan": plan.as_dict(), "crossings": d.num_crossings}
    run.provenance["meta"] = d.meta
    if args.verify:
        run.report = invariant_report(d, args.workers)
        got = run.report.sum_a2_hamiltonian
        run.verdicts = [Verdict("realization", got == args.m, args.m, got, "brute-force sum a2(H)"),
                        verify_identity(run.report), verify_congruence(run.report)]
        if got != args.m:
            log.error("internal consistency: realized sum %d, planned %d", got, args.m)
    if args.out:
        _write_diagram(d, args.out)
    return run.emit(sys.stderr if args.out == "-" else sys.stdout)


def cmd_knot(args) -> int:
    d, run = _diagram_run(args, "knot a2")
    run.inputs["cycle"] = list(args.cycle)
    k = extract_knot(d, args.cycle)
    primary, oracle = a2(k), a2_gauss_diagram(k)
    run.results = {"a2": primary, "crossings": len(k.passages) // 2}
    run.verdicts = [Verdict("a2-oracle", primary == oracle, oracle, primary,
                            "descending switch vs Gauss diagram count")]
    return run.emit()


def cmd_link(args) -> int:
    d, run = _diagram_run(args, "link lk")
    run.inputs["pair"] = [list(c) for c in args.pair]
    value = lk(extract_link(d, tuple(args.pair)))
    run.results = {"lk": value}
    return run.emit()


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "structured"), default=argparse.SUPPRESS,
                        help="human table or JSON report (default: table)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for enumeration (default: all cores)")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help=f"allow brute force beyond n = {GUARDRAIL_N}")
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="cgsum", parents=[common],
                                     description="Knots and links in spatial complete graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="write a diagram file")
    bk = b.add_subparsers(dest="kind", required=True)
    for name in ("standard", "twist", "random", "points-file"):
        p = bk.add_parser(name, parents=[common])
        if name == "points-file":
            p.add_argument("file")
        else:
            p.add_argument("--n", type=int, required=True)
        if name == "twist":
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--l", type=int, required=True)
            p.add_argument("--s", type=int, required=True)
        if name == "random":
            p.add_argument("--seed", type=int, required=True)
            p.add_argument("--bound", type=int, default=100)
        if name in ("random", "points-file"):
            p.add_argument("--axis", choices=("x", "y", "z"), default="z")
        p.add_argument("-o", "--out", help="output file (default: standard output)")
        p.set_defaults(func=cmd_build)

    r = sub.add_parser("report", parents=[common], help="invariants and all verdicts")
    r.add_argument("diagram")
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("verify", parents=[common], help="a single check")
    vk = v.add_subparsers(dest="what", required=True)
    for name in ("identity", "congruence", "sachs"):
        p = vk.add_parser(name, parents=[common])
        p.add_argument("diagram")
        if name == "congruence":
            p.add_argument("--modulus", type=int, help="default: (n-5)!")
        p.set_defaults(func=cmd_verify)
    p = vk.add_parser("lemma21", parents=[common], help="twist sums, closed form vs brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-s", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    z = sub.add_parser("realize", parents=[common], help="diagram with a prescribed Hamiltonian a2 sum")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--m", type=int, required=True)
    z.add_argument("--verify", action="store_true", help="recompute the sum by brute force")
    z.add_argument("-o", "--out", help="write the diagram here ('-' for standard output)")
    z.set_defaults(func=cmd_realize)

    kn = sub.add_parser("knot", parents=[common], help="invariants of one Hamiltonian or p-cycle")
    kk = kn.add_subparsers(dest="what", required=True)
    p = kk.add_parser("a2", parents=[common])
    p.add_argument("diagram")
    p.add_argument("--cycle", type=_cycle_arg, required=True, help='e.g. "1 3 5 2 4 6"')
    p.set_defaults(func=cmd_knot)

    ln = sub.add_parser("link", parents=[common], help="linking number of two disjoint cycles")
    lk_ = ln.add_subparsers(dest="what", required=True)
    p = lk_.add_parser("lk", parents=[common])
    p.add_argument("diagram")
    p.add_argument("--pair", type=_cycle_arg, nargs=2, required=True, metavar="CYCLE",
                   help='e.g. --pair "1 3 5" "2 4 6"')
    p.set_defaults(func=cmd_link)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # global flags may appear before or after the subcommand
    args.format = getattr(args, "format", "table")
    args.workers = getattr(args, "workers", None) or os.cpu_count() or 1
    args.force = getattr(args, "force", False)
    verbose = getattr(args, "verbose", 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1:
        parser.error("--workers must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, DiagramError, DegenerateConfigurationError, GenerationError,
            graph.InvalidGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

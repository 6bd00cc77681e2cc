"""Command-line entry point: ``propercycles <subcommand> [options]``.

Exit codes: 0 found / success, 1 usage or input error, 2 infeasible (or a
rejected certificate, or a failing sweep), 3 hypothesis violation, 4 timeout.
"""

from __future__ import annotations

import argparse
import sys

from . import harness
from .constructive import SOLVERS, THEOREMS, check_hypotheses
from .errors import InputError
from .exact import (
    Budget,
    SearchConstraints,
    Status,
    find_proper_cycle_of_length,
    find_proper_path,
)
from .extremal import FAMILIES, generate
from .graph import CycleCertificate, verify_proper_cycle, verify_proper_path
from .io import dump_json, export_dot, parse_certificate_json, parse_graph_json, serialize_graph_json

EXIT = {Status.FOUND: 0, Status.INFEASIBLE: 2, Status.HYPOTHESIS_VIOLATION: 3, Status.TIMEOUT: 4}
USAGE_ERROR = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits (0 .. 2**64-1)")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="graph JSON file, or - for stdin")
    common.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "dot", "table"), default="json")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--budget-ms", type=_positive, help="wall-clock cap for exact search")
    common.add_argument("--budget-nodes", type=_positive, help="node cap for exact search")

    parser = _Parser(prog="propercycles", description="Proper Hamiltonian cycles in edge-colored multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="constructive solver for a theorem")
    p.add_argument("--theorem", required=True, choices=sorted(SOLVERS))

    p = sub.add_parser("check", parents=[common], help="evaluate a theorem's hypotheses")
    p.add_argument("--theorem", required=True, choices=THEOREMS)

    p = sub.add_parser("generate", parents=[common], help="emit an extremal or sampled graph")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES) + ["rainbow-complete", "sample"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--theorem", choices=THEOREMS, help="bound to sample around (family sample)")
    p.add_argument("--style", choices=harness.STYLES, default="uniform")

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    p.add_argument("--certificate", required=True, help="certificate JSON (or a solve result)")

    p = sub.add_parser("sweep", parents=[common], help="corpus, tightness or conjecture sweeps")
    p.add_argument("--kind", choices=("corpus", "tightness", "conjecture", "coverage"), default="corpus")
    p.add_argument("--theorem", choices=THEOREMS)
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--c", type=int, nargs="+")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--style", choices=harness.STYLES, default="uniform")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--allow-small", action="store_true", help="conjecture sweep below n = 10")

    p = sub.add_parser("oracle", parents=[common], help="exact search for a proper cycle or path")
    p.add_argument("--L", type=int, help="cycle length (default n)")
    p.add_argument("--path", action="store_true", help="search a proper path on L vertices instead")
    return parser


def _budget(args) -> Budget | None:
    if args.budget_ms is None and args.budget_nodes is None:
        return None
    return Budget(
        max_nodes=args.budget_nodes,
        max_seconds=None if args.budget_ms is None else args.budget_ms / 1000,
    )


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _table(d: dict) -> bytes:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, (list, tuple)):
            v = " ".join(map(str, v))
        lines.append(f"{k}: {v}")
    return ("\n".join(lines) + "\n").encode()


def _render(args, payload: dict, graph=None, cert=None) -> bytes:
    if args.format == "dot":
        if graph is None:
            raise InputError("dot output needs a graph")
        return export_dot(graph, cert)
    if args.format == "table":
        return _table(payload)
    return dump_json(payload)


def _outcome(args, g, out) -> tuple[bytes, int]:
    payload = out.to_dict()
    return _render(args, payload, g, out.certificate), EXIT[out.status]


def _cmd_solve(args):
    g = parse_graph_json(_read(args.input))
    return _outcome(args, g, SOLVERS[args.theorem](g, _budget(args)))


def _cmd_check(args):
    g = parse_graph_json(_read(args.input))
    report = check_hypotheses(g, args.theorem)
    return _render(args, report.to_dict(), g), 0 if report.satisfied else 3


def _cmd_generate(args):
    if args.family == "sample":
        if args.theorem is None:
            raise InputError("--family sample needs --theorem")
        c = args.c if args.c is not None else 2
        spec = harness.CorpusSpec(args.theorem, (args.n,), (c,), 1, args.seed, style=args.style)
        g = harness.sample_graph(spec, 0)
    else:
        g, _ = generate(args.family, args.n, args.c)
    if args.format == "dot":
        return export_dot(g), 0
    if args.format == "table":
        return _table({"n": g.n, "c": g.c, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}), 0
    return serialize_graph_json(g), 0


def _cmd_verify(args):
    g = parse_graph_json(_read(args.input))
    cert = parse_certificate_json(_read(args.certificate))
    verdict = verify_proper_cycle(g, cert) if isinstance(cert, CycleCertificate) else verify_proper_path(g, cert)
    payload = {"ok": verdict.ok, "reason": verdict.reason, "length": len(cert)}
    return _render(args, payload, g, cert), 0 if verdict else 2


def _cmd_oracle(args):
    g = parse_graph_json(_read(args.input))
    L = g.n if args.L is None else args.L
    if args.path:
        out = find_proper_path(g, SearchConstraints(L), _budget(args))
    else:
        out = find_proper_cycle_of_length(g, L, _budget(args))
    return _outcome(args, g, out)


def _cmd_sweep(args):
    budget = _budget(args)
    if args.kind == "tightness":
        if args.family is None or not args.n:
            raise InputError("tightness sweeps need --family and --n")
        params = [(n, c) for n in args.n for c in args.c] if args.c else list(args.n)
        report = harness.tightness_sweep(args.family, params, budget)
    elif args.kind == "conjecture":
        if not args.n or not args.c:
            raise InputError("conjecture sweeps need --n and --c")
        report = harness.conjecture_sweep(
            args.n[0], args.c[0], args.samples, budget, args.seed, allow_small=args.allow_small
        )
    else:
        if args.theorem is None or not args.n:
            raise InputError(f"{args.kind} sweeps need --theorem and --n")
        cs = tuple(args.c) if args.c else (2,)
        spec = harness.CorpusSpec(args.theorem, tuple(args.n), cs, args.samples, args.seed, style=args.style)
        if args.kind == "coverage":
            table = harness.branch_coverage(args.theorem, spec, budget)
            return _render(args, table.to_dict()), 0 if not table.unhit else 2
        report = harness.corpus_sweep(spec, budget, args.workers)
    data = report.table().encode() if args.format == "table" else dump_json(report.to_dict())
    return data, 0 if report.passed else 2


COMMANDS = {
    "solve": _cmd_solve,
    "check": _cmd_check,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "oracle": _cmd_oracle,
}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        data, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"propercycles: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.output == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(args.output, "wb") as fh:
            fh.write(data)
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

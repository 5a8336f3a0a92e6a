"""Command-line front end.

Exit codes: 0 when every requested verdict is positive (or every check
agrees), 1 when some verdict is negative, 2 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import checkers
from .geometry import DimensionMismatch, DomainError, IntervalSet, fmt_point
from .goldens import SEED, builtin_corpus, reach_fuzz, run_goldens
from .oracle import OracleError, discretize_cells, is_continuous_finite
from .pathdoc import ParseError, dump_path, load_path, parse_box, parse_point
from .reachability import ReachQuery, in_gamma_d, in_gamma_ir, witness_dpath, witness_irpath
from .topology import is_open_in_ir_I

BUILTIN_PREFIX = "builtin:"


class InputError(Exception):
    pass


def _bool(v) -> str:
    return "true" if v else "false"


def _token(s: IntervalSet) -> str:
    return "∅" if s.is_empty() else "∪".join(str(p) for p in s.parts)


def _box_token(box) -> str:
    return "(" + ",".join("inf" if b is None else str(b) for b in box.bounds) + ")"


def witness_fields(w) -> list:
    if isinstance(w, checkers.PreimageWitness):
        return [("box", _box_token(w.box)), ("preimage", _token(w.preimage))]
    if isinstance(w, checkers.OrderWitness):
        return [("t", str(w.t)), ("t_after", str(w.t_after)),
                ("value", fmt_point(w.value)), ("value_after", fmt_point(w.value_after))]
    return [("t", str(w.t)), ("value", fmt_point(w.value)),
            ("limit", fmt_point(w.limit)), ("side", w.side)]


class Printer:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def emit(self, human: str, **fields):
        if self.fmt == "records":
            print(" ".join(f"{k}={v}" for k, v in fields.items()), file=self.out)
        else:
            print(human, file=self.out)

    def verdict(self, name: str, report):
        fields = {"verdict": name, "value": _bool(report.verdict)}
        human = f"{name}: {_bool(report.verdict)}"
        if report.witness is not None:
            fields.update(witness_fields(report.witness))
            human += f"\n  witness: {report.witness}"
        self.emit(human, **fields)


def get_path(source: str):
    if source.startswith(BUILTIN_PREFIX):
        name = source[len(BUILTIN_PREFIX):]
        corpus = builtin_corpus()
        if name not in corpus:
            raise InputError(f"unknown built-in path {name!r}; choose from {', '.join(sorted(corpus))}")
        return corpus[name]
    try:
        return load_path(source)
    except OSError as exc:
        raise InputError(str(exc)) from None


def cmd_check(args, pr: Printer) -> int:
    path = get_path(args.file)
    reports = []
    if args.mode in ("d", "both"):
        reports.append(("d", checkers.is_dpath(path)))
    if args.mode in ("ir", "both"):
        reports.append(("ir", checkers.is_ir_path(path)))
    for name, report in reports:
        pr.verdict(name, report)
    return 0 if all(r.verdict for _, r in reports) else 1


def cmd_preimage(args, pr: Printer) -> int:
    path = get_path(args.file)
    box = parse_box(args.box)
    if box.dim != path.dim:
        raise InputError(f"box has dimension {box.dim}, path has {path.dim}")
    pre = checkers.preimage_basis(path, box)
    is_open = is_open_in_ir_I(pre)
    pr.emit(f"{pre} ({'open' if is_open else 'NOT open'})",
            box=_box_token(box), preimage=_token(pre), open=_bool(is_open))
    return 0 if is_open else 1


def cmd_reach(args, pr: Printer) -> int:
    q = ReachQuery(parse_point(args.x), parse_point(args.y))
    d, ir = in_gamma_d(q), in_gamma_ir(q)
    pr.emit(f"gamma_d: {_bool(d)}, gamma_ir: {_bool(ir)}",
            x=fmt_point(q.x), y=fmt_point(q.y), gamma_d=_bool(d), gamma_ir=_bool(ir))
    if args.witness or args.out:
        for name, ok, build in (("d", d, witness_dpath), ("ir", ir, witness_irpath)):
            if not ok:
                pr.emit(f"# no {name} witness", witness=name, path="none")
                continue
            doc = dump_path(build(q))
            if args.out:
                target = os.path.join(args.out, f"witness_{name}.path")
                with open(target, "w", encoding="utf-8") as fh:
                    fh.write(doc)
                pr.emit(f"# {name} witness written to {target}", witness=name, path=target)
            else:
                print(f"# witness {name}\n{doc}", end="", file=pr.out)
    return 0 if d and ir else 1


def cmd_goldens(args, pr: Printer) -> int:
    results = run_goldens(tamper=args.tamper)
    for g in results:
        pr.emit(f"{'PASS' if g.passed else 'FAIL'} {g.name}: {g.detail}",
                golden=g.name, status="pass" if g.passed else "fail",
                detail=g.detail.replace(" ", ";"))
    return 0 if all(g.passed for g in results) else 1


def cmd_oracle(args, pr: Printer) -> int:
    path = get_path(args.file)
    try:
        fmap = discretize_cells(path, args.k)
    except OracleError as exc:
        raise InputError(str(exc)) from None
    analytic = checkers.is_ir_path(path).verdict
    finite = is_continuous_finite(fmap)
    agree = analytic == finite
    pr.emit(f"analytic: {_bool(analytic)}, oracle: {_bool(finite)}, {'AGREE' if agree else 'DISAGREE'}",
            k=args.k, analytic=_bool(analytic), oracle=_bool(finite),
            agreement="agree" if agree else "disagree")
    return 0 if agree else 1


def cmd_selftest(args, pr: Printer) -> int:
    bad = reach_fuzz(args.count, args.seed)
    pr.emit(f"reach fuzz: pairs={args.count} disagreements={bad}",
            selftest="reach", pairs=args.count, disagreements=bad)
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irpath",
        description="Decide d-path / ir-path membership for exact PL and step paths in R^n.",
    )
    parser.add_argument("--format", choices=("human", "records"), default="human")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "records"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="{check,preimage,reach,goldens,oracle}")
    file_help = f"path document, or {BUILTIN_PREFIX}NAME for a built-in ({', '.join(sorted(builtin_corpus()))})"

    p = sub.add_parser("check", parents=[common], help="run the d-path and/or ir-path checkers")
    p.add_argument("file", help=file_help)
    p.add_argument("--mode", choices=("d", "ir", "both"), default="both")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("preimage", parents=[common], help="preimage of a basis box prod(-inf, m_i)")
    p.add_argument("file", help=file_help)
    p.add_argument("--box", required=True, help='upper bounds, e.g. --box="(1/2,inf)"')
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("reach", parents=[common], help="d- and ir-reachability of y from x")
    p.add_argument("x", help='point literal, e.g. "(0,-1/2)"')
    p.add_argument("y")
    p.add_argument("--witness", action="store_true", help="print witness path documents")
    p.add_argument("--out", help="write witness documents into this directory")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("goldens", parents=[common], help="run the built-in golden suite")
    p.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_goldens)

    p = sub.add_parser("oracle", parents=[common], help="compare the ir checker with the finite oracle")
    p.add_argument("file", help=file_help)
    p.add_argument("--k", type=int, required=True, help="grid size: breakpoints on {j/k}")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", parents=[common])
    p.add_argument("what", choices=("reach",))
    p.add_argument("--count", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=SEED)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    pr = Printer(args.format)
    try:
        return args.func(args, pr)
    except (InputError, ParseError, DimensionMismatch, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

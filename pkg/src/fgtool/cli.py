"""Command-line front end: ``fgtool <kind> <action> FILE ...``.

Every report starts with ``# command:`` and ``# summary:`` comment lines,
followed by a machine-readable section in one of the input formats (structures)
or the presentation format (groups). Exit codes: 0 success, 1 input or usage
error, 2 failed check.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import checks
from .algebra import h1_cohomology_dim, h1_integral, hh1_dimension
from .combinatorics import (
    Poset,
    Quiver,
    SimplicialComplex,
    barycentric,
    complete_quiver,
    hasse_quiver,
    order_quiver,
    pos_of_complex,
    sim_of_poset,
)
from .errors import FGToolError
from .formats import parse_input, build, serialize_presentation, serialize_structure
from .groups import Presentation, describe, invariant_suite, simplify_presentation
from .pi1 import edge_path_presentation, quiver_pi1_presentation, van_kampen_assemble

EXIT_OK, EXIT_INPUT, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for failed checks here
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class Report:
    command: str
    summary: str
    machine: str
    result: object = field(default=None, compare=False)

    @property
    def text(self) -> str:
        return f"# command: {self.command}\n# summary: {self.summary}\n{self.machine}"


def _load(path: str, kind: str, close: bool = False):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FGToolError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = parse_input(text, source=path)
        if doc.kind != kind:
            raise FGToolError(f"expected a {kind} file, found a {doc.kind} file")
        return build(doc, close)
    except FGToolError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _group_report(p: Presentation, raw: bool):
    shown = p if raw else simplify_presentation(p)
    report = invariant_suite(p)
    return describe(p), serialize_presentation(shown, report), report


def _structure_summary(value) -> str:
    if isinstance(value, SimplicialComplex):
        return f"complex with f-vector {list(value.f_vector())}"
    if isinstance(value, Poset):
        return f"poset with {len(value.elements)} elements, {len(value.covers())} covers"
    assert isinstance(value, Quiver)
    return f"quiver with {len(value.vertices)} vertices, {len(value.arrows)} arrows"


def _structure(value):
    return _structure_summary(value), serialize_structure(value), value


def _complex(args):
    c = _load(args.file, "complex", args.close_down)
    if args.action == "pi1":
        return _group_report(edge_path_presentation(c, args.basepoint), args.raw)
    if args.action == "pos":
        return _structure(pos_of_complex(c))
    if args.action == "barycentric":
        return _structure(barycentric(c))
    if args.action == "h1":
        rank, torsion = h1_integral(c)
        machine = f"h1: rank {rank}\ntorsion:" + "".join(f" {d}" for d in torsion) + "\n"
        parts = ([f"Z^{rank}"] if rank else []) + [f"Z/{d}" for d in torsion]
        return "H_1 = " + (" + ".join(parts) or "0"), machine, (rank, torsion)
    dim = h1_cohomology_dim(c, args.char)
    return f"dim H^1 over char {args.char} is {dim}", f"h1dim: {dim}\nchar: {args.char}\n", dim


def _poset(args):
    p = _load(args.file, "poset")
    if args.action == "sim":
        return _structure(sim_of_poset(p))
    if args.action == "hasse":
        return _structure(hasse_quiver(p))
    if args.action == "pi1":
        return _group_report(quiver_pi1_presentation(hasse_quiver(p), args.basepoint), args.raw)
    dim = hh1_dimension(p, args.char)
    return f"dim HH^1 over char {args.char} is {dim}", f"hh1: {dim}\nchar: {args.char}\n", dim


def _quiver(args):
    q = _load(args.file, "quiver")
    if args.action == "pi1":
        return _group_report(quiver_pi1_presentation(q, args.basepoint), args.raw)
    if args.action == "complete":
        return _structure(complete_quiver(q))
    return _structure(order_quiver(q))


def _vankampen(args):
    q, q1, q2 = (_load(f, "quiver") for f in (args.q, args.q1, args.q2))
    return _group_report(van_kampen_assemble(q, q1, q2, args.basepoint), args.raw)


def _check(args):
    kwargs = {k: getattr(args, k) for k in ("seed", "count", "max_size") if getattr(args, k) is not None}
    summary = checks.CHECKS[args.name](**kwargs)
    head = f"{summary.passed}/{len(summary.cases)} matches"
    return head, "\n".join(summary.lines()) + "\n", summary


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fgtool", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="kind", required=True, parser_class=_Parser)

    def group_flags(p, basepoint=True):
        if basepoint:
            p.add_argument("--basepoint", metavar="V")
        p.add_argument("--raw", action="store_true", help="print the presentation before Tietze reduction")

    cx = sub.add_parser("complex", help="simplicial complex files")
    cx.add_argument("action", choices=["pi1", "pos", "barycentric", "h1", "h1dim"])
    cx.add_argument("file")
    cx.add_argument("--close-down", action="store_true", help="add missing faces instead of rejecting them")
    cx.add_argument("--char", type=int, default=0)
    group_flags(cx)
    cx.set_defaults(run=_complex)

    po = sub.add_parser("poset", help="poset files")
    po.add_argument("action", choices=["sim", "hasse", "pi1", "hh1"])
    po.add_argument("file")
    po.add_argument("--char", type=int, default=0)
    group_flags(po)
    po.set_defaults(run=_poset)

    qv = sub.add_parser("quiver", help="quiver files")
    qv.add_argument("action", choices=["pi1", "complete", "order"])
    qv.add_argument("file")
    group_flags(qv)
    qv.set_defaults(run=_quiver)

    vk = sub.add_parser("vankampen", help="assemble pi_1 of Q from two subquivers")
    vk.add_argument("q")
    vk.add_argument("q1")
    vk.add_argument("q2")
    group_flags(vk)
    vk.set_defaults(run=_vankampen)

    ck = sub.add_parser("check", help="randomized comparison harnesses")
    ck.add_argument("name", choices=sorted(checks.CHECKS))
    ck.add_argument("--seed", type=int)
    ck.add_argument("--count", type=int)
    ck.add_argument("--max-size", type=int)
    ck.set_defaults(run=_check)
    return parser


def run_command(argv: list[str]) -> tuple[Report | None, int, str]:
    """Run one command; returns (report or None, exit code, error message)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return None, EXIT_INPUT, str(exc)
    except SystemExit as exc:  # --help inside a subcommand
        return None, int(exc.code or 0), ""
    try:
        summary, machine, result = args.run(args)
    except FGToolError as exc:
        return None, EXIT_INPUT, f"error: {exc}"
    report = Report("fgtool " + " ".join(argv), summary, machine, result)
    failed = isinstance(result, checks.CheckSummary) and not result.ok
    return report, EXIT_CHECK_FAILED if failed else EXIT_OK, ""


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv in (["-h"], ["--help"]) or not argv:
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_INPUT
    report, code, message = run_command(argv)
    if report is not None:
        sys.stdout.write(report.text)
    if message:
        print(message, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

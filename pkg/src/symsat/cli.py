"""Command-line driver: ``symsat {magic,vdw,dw} ...``.

Exit codes: 0 success, 1 no solution (or a search limit was hit), 2 usage
error, 3 verification failure.  Every outcome is re-checked with the
independent verifier of its domain before the report is printed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, TextIO

from . import graceful, magic, vdw
from .csp import SearchLimitError, SearchStats, Solver

__all__ = ["RunReport", "run", "main", "EXIT_OK", "EXIT_NO_SOLUTION", "EXIT_USAGE", "EXIT_VERIFY"]

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3


@dataclass
class RunReport:
    command: list[str]
    params: dict[str, Any]
    outcome: Any = None
    stats: dict[str, float] | None = None
    verdict: bool | None = None
    message: str = ""
    exit_code: int = EXIT_OK
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def to_text(self) -> str:
        rows = [("command", " ".join(self.command))]
        rows += [(k, str(v)) for k, v in sorted(self.params.items())]
        if self.message:
            rows.append(("result", self.message))
        rows += [(k, str(v)) for k, v in sorted(self.extra.items())]
        if self.stats:
            rows += [(k, str(v)) for k, v in self.stats.items()]
        if self.verdict is not None:
            rows.append(("verified", "yes" if self.verdict else "NO"))
        width = max(len(k) for k, _ in rows)
        out = "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
        body = _outcome_text(self.outcome)
        return out + ("\n" + body if body else "")


def _outcome_text(outcome: Any) -> str:
    if not isinstance(outcome, dict):
        return ""
    if "square" in outcome:
        return magic.format_square(outcome["square"])
    if "blocks" in outcome:
        return "\n".join(" ".join(map(str, b)) for b in outcome["blocks"])
    if "hub" in outcome:
        return (f"hub   {outcome['hub']}\nouter {' '.join(map(str, outcome['outer']))}\n"
                f"inner {' '.join(map(str, outcome['inner']))}")
    return ""


def _cert_outcome(cert: vdw.Certificate, l: int) -> dict[str, Any]:
    return {"k": cert.k, "n": cert.n, "l": l, "blocks": [sorted(b) for b in cert.blocks]}


def _lab_outcome(lab: graceful.DwLabelling) -> dict[str, Any]:
    return json.loads(lab.to_json())


# ---------------------------------------------------------------- magic

def _magic_model(args) -> Any:
    model = magic.build_magic(args.n)
    if args.sb:
        model = magic.add_symmetry_breaking(model)
    if args.internal:
        model = magic.add_internal_symmetry(model, args.internal)
    return model


def _magic_count(args, rep: RunReport) -> None:
    if args.n > 4:
        raise _Usage("magic count enumerates exhaustively and is limited to n <= 4")
    solver = Solver(_magic_model(args))
    squares = [magic.assignment_to_square(s.assignment, args.n) for s in solver.solutions()]
    classes = {magic.canonical_form(s) for s in squares}
    rep.outcome = {"solutions": len(squares), "classes": len(classes)}
    rep.stats = solver.stats.as_dict()
    rep.verdict = all(magic.is_magic(s) for s in squares)
    rep.message = f"{len(squares)} squares in {len(classes)} classes"
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY


def _magic_solve(args, rep: RunReport) -> None:
    solver = Solver(_magic_model(args))
    sol = next(iter(solver.solutions()), None)
    rep.stats = solver.stats.as_dict()
    if sol is None:
        rep.message, rep.exit_code = "no square", EXIT_NO_SOLUTION
        return
    square = magic.assignment_to_square(sol.assignment, args.n)
    rep.outcome = {"square": [list(r) for r in square]}
    rep.verdict = magic.is_magic(square)
    rep.message = "square found"
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY


# ---------------------------------------------------------------- vdw

def _vdw_finish(rep: RunReport, cert: vdw.Certificate | None, l: int, out: str | None, workers: int) -> None:
    if cert is None:
        rep.message, rep.exit_code = "no certificate", EXIT_NO_SOLUTION
        return
    rep.outcome = _cert_outcome(cert, l)
    rep.verdict = vdw.verify_certificate(cert, l, workers=workers)
    rep.message = f"W({cert.k},{l}) > {cert.n}"
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY
    elif out:
        Path(out).write_text(vdw.write_certificate(cert, l))


def _vdw_verify(args, rep: RunReport) -> None:
    try:
        cert, l = vdw.read_certificate(Path(args.file).read_text())
    except OSError as exc:
        raise _Usage(str(exc)) from None
    except ValueError as exc:
        rep.verdict, rep.message, rep.exit_code = False, f"malformed certificate: {exc}", EXIT_VERIFY
        return
    if args.l is not None:
        l = args.l
    rep.params["l"] = l
    rep.outcome = _cert_outcome(cert, l)
    try:
        rep.verdict = vdw.verify_certificate(cert, l, workers=args.parallel)
    except vdw.PartitionError as exc:
        rep.verdict, rep.message, rep.exit_code = False, f"not a partition: {exc}", EXIT_VERIFY
        return
    if rep.verdict:
        rep.message = f"W({cert.k},{l}) > {cert.n}"
    else:
        rep.message, rep.exit_code = "monochromatic progression found", EXIT_VERIFY
        for c, b in enumerate(cert.blocks):
            ap = vdw.has_progression(b, l)
            if ap:
                rep.extra["witness"] = {"block": c, "start": ap[0], "step": ap[1]}
                break


def _vdw_construct(args, rep: RunReport) -> None:
    try:
        params = vdw.ConstructionParams(args.k, args.l, args.n, args.t, args.q)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    rep.extra.update(m=params.m, p=params.p, r=params.r)
    cert = vdw.construct(params, workers=args.parallel)
    _vdw_finish(rep, cert, args.l, args.out, args.parallel)


def _vdw_search(args, rep: RunReport) -> None:
    if args.start > args.end:
        raise _Usage("--from must not exceed --to")
    found = vdw.search_lower_bound(args.k, args.l, args.start, args.end, workers=args.parallel)
    _vdw_finish(rep, None if found is None else found[1], args.l, args.out, args.parallel)


# ---------------------------------------------------------------- dw

def _dw_solve(args, rep: RunReport) -> None:
    found = graceful.solve_dw(args.n, args.sb, args.internal, guard=args.guard,
                              workers=args.parallel if args.parallel > 1 else None)
    if found is None:
        rep.message, rep.exit_code = "no graceful labelling", EXIT_NO_SOLUTION
        return
    lab, stats = found
    rep.stats = stats.as_dict()
    rep.outcome = _lab_outcome(lab)
    rep.verdict = graceful.verify_graceful(graceful.DwGraph(args.n), lab)
    rep.message = "labelling found"
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY
    elif args.out:
        Path(args.out).write_text(lab.to_json() + "\n")


def _dw_verify(args, rep: RunReport) -> None:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise _Usage(str(exc)) from None
    try:
        lab = graceful.DwLabelling.from_json(text)
        rep.outcome = _lab_outcome(lab)
        rep.verdict = graceful.verify_graceful(graceful.DwGraph(lab.n), lab)
    except (ValueError, KeyError, TypeError) as exc:
        rep.verdict, rep.message, rep.exit_code = False, f"malformed labelling: {exc}", EXIT_VERIFY
        return
    rep.message = "graceful" if rep.verdict else "not graceful"
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY


def _dw_count4(args, rep: RunReport) -> None:
    sols = list(graceful.enumerate_dw(4))
    counts = graceful.dw4_counts(sols)
    rep.outcome = asdict(counts)
    rep.verdict = all(graceful.verify_graceful(graceful.DwGraph(4), s) for s in sols)
    rep.message = (f"{counts.classes} classes ({counts.classes_hub_extreme} with hub 0 or 16); "
                   f"{counts.raw} labellings ({counts.raw_hub_extreme} with hub 0 or 16)")
    if not rep.verdict:
        rep.exit_code = EXIT_VERIFY


# ---------------------------------------------------------------- parser

class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="symsat", description="Search with internal symmetries.", parents=[common])
    sub = p.add_subparsers(dest="domain", required=True, parser_class=_Parser)

    mg = sub.add_parser("magic", help="normal magic squares").add_subparsers(dest="action", required=True)
    for name, fn in (("count", _magic_count), ("solve", _magic_solve)):
        q = mg.add_parser(name, parents=[common])
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--sb", action="store_true", help="add solution symmetry breaking")
        q.add_argument("--internal", choices=["auto", *sorted(magic.INTERNAL_FORMS)],
                       help="require an internal symmetry")
        q.set_defaults(func=fn)

    vd = sub.add_parser("vdw", help="Van der Waerden certificates").add_subparsers(dest="action", required=True)
    q = vd.add_parser("verify", parents=[common])
    q.add_argument("file")
    q.add_argument("--l", type=int, help="progression length (default: from the file header)")
    q.set_defaults(func=_vdw_verify)
    q = vd.add_parser("construct", parents=[common])
    for flag in ("--k", "--l", "--n"):
        q.add_argument(flag, type=int, required=True)
    q.add_argument("--t", type=int)
    q.add_argument("--q", type=int)
    q.add_argument("--out", help="write the certificate here")
    q.set_defaults(func=_vdw_construct)
    q = vd.add_parser("search", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--from", dest="start", type=int, required=True)
    q.add_argument("--to", dest="end", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=_vdw_search)

    dw = sub.add_parser("dw", help="graceful double wheels").add_subparsers(dest="action", required=True)
    q = dw.add_parser("solve", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--sb", action="store_true", help="add solution symmetry breaking")
    q.add_argument("--internal", action="store_true", help="use the hub and +2 internal symmetries")
    q.add_argument("--guard", choices=["n-4", "n-2"], default="n-4")
    q.add_argument("--out")
    q.set_defaults(func=_dw_solve)
    q = dw.add_parser("verify", parents=[common])
    q.add_argument("file")
    q.set_defaults(func=_dw_verify)
    q = dw.add_parser("count4", parents=[common])
    q.set_defaults(func=_dw_count4)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.INFO)
    if args.parallel < 1:
        print("usage error: --parallel must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    params = {k: v for k, v in vars(args).items() if k not in {"func", "json", "verbose", "domain", "action"}}
    rep = RunReport(command=[args.domain, args.action], params=params)
    try:
        args.func(args, rep)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchLimitError as exc:
        rep.message, rep.exit_code = f"stopped: {exc.reason}", EXIT_NO_SOLUTION
        rep.stats = exc.stats.as_dict()
    if rep.verdict is False and rep.exit_code == EXIT_OK:
        rep.exit_code = EXIT_VERIFY
    print(rep.to_json() if args.json else rep.to_text(), file=out)
    return rep.exit_code


def main() -> None:
    sys.exit(run())

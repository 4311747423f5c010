"""Command-line front end.

Exit codes: 0 success, 1 a verdict or demo row failed, 2 usage or input
error, 3 a search window or span ceiling was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import localcoh, quotient, semigroup
from .arith import format_polynomial, order_from_name
from .errors import AlgebraError, CeilingExceeded
from .ideals import colon_ideal, intersect, saturate
from .localcoh import cohomology_report
from .quotient import index_of_reducibility, quotient_length, socle_basis
from .ringfile import RingContext, load_ring_file
from .theorems import SUITE_NAMES, SopWitness, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CEILING = 0, 1, 2, 3
COMMANDS = ("groebner", "colon", "intersect", "saturate", "socle", "index", "length", "localcoh", "check", "paper-demo")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SessionConfig:
    ring: str | None = None
    order: str = "grevlex"
    json: bool = False
    window_ceiling: int | None = None
    closure_ceiling: int | None = None
    seed: int = 0
    timings: bool = False

    def __post_init__(self):
        for name in ("window_ceiling", "closure_ceiling"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        order_from_name(self.order)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")
    common.add_argument("--order", default="grevlex", help="lex, grevlex or elim(k)")
    common.add_argument("--window-ceiling", type=_positive_int, help="largest lattice search window")
    common.add_argument("--closure-ceiling", type=_positive_int, help="largest linear span during closures")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled permutations")

    parser = _Parser(prog="reducibility", description="Index of reducibility and local cohomology socles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, ideal=True, by=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--ring", required=True, help="ring file, or the name of a bundled one")
        if ideal:
            p.add_argument("--ideal", required=True, help="ideal name, m, 0, or a comma-separated list")
        if by:
            p.add_argument("--by", required=True, help="second ideal: name, m, or a list")
        return p

    add("groebner", "reduced Groebner basis")
    add("colon", "colon ideal (I : J)", by=True)
    add("intersect", "intersection of two ideals", by=True)
    add("saturate", "saturation (I : J^inf)", by=True)
    add("socle", "socle of R/I")
    add("index", "index of reducibility of a parameter ideal")
    add("length", "length of R/I")
    p = add("localcoh", "socle dimensions of local cohomology", ideal=False)
    p.add_argument("--sop", help="system of parameters (name or list)")
    p.add_argument("--cech", action="store_true", help="top cohomology by Cech lattice search")
    p = add("check", "run the unmixed-component checkers", ideal=False)
    p.add_argument("--sop", required=True, help="system of parameters (name or list)")
    p.add_argument("--standard", help="ideal known or claimed to be standard (defaults to the sop)")
    p.add_argument("--suite", default="all", help="all, or comma-separated checker names")
    p.add_argument("--powers", default="1,2,3,4", help="powers k for the family (x_i^k)")
    sub.add_parser("paper-demo", parents=[common], help="reproduce the worked examples")
    return parser


def resolve_ring(spec: str) -> RingContext:
    path = Path(spec)
    if not path.exists():
        from .demo import bundled_path

        bundled = bundled_path(spec if spec.endswith(".ring") else spec + ".ring")
        if not bundled.is_file():
            raise UsageError(f"ring file {spec!r} not found")
        return load_ring_file(bundled).context()
    return load_ring_file(path).context()


# ---------- commands ----------

def _inputs(args) -> dict:
    keys = ("ring", "ideal", "by", "sop", "standard", "suite", "order", "cech", "powers")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) not in (None, False)}


def cmd_groebner(args, ctx: RingContext):
    order = order_from_name(args.order)
    gb = ctx.ideal(args.ideal).groebner(order)
    names = ctx.ring.names
    basis = [format_polynomial(g, names, order) for g in gb.elements]
    return {"order": str(order), "variables": list(names), "basis": basis}, "\n".join(basis) or "0", EXIT_OK


def _two_ideals(args, ctx):
    return ctx.ideal(args.ideal), ctx.ideal(args.by)


def cmd_colon(args, ctx):
    I, J = _two_ideals(args, ctx)
    gens = ctx.generator_strings(colon_ideal(I, J))
    return {"generators": gens}, _paren(gens), EXIT_OK


def cmd_intersect(args, ctx):
    I, J = _two_ideals(args, ctx)
    gens = ctx.generator_strings(intersect(I, J))
    return {"generators": gens}, _paren(gens), EXIT_OK


def cmd_saturate(args, ctx):
    I, J = _two_ideals(args, ctx)
    sat, e = saturate(I, J)
    gens = ctx.generator_strings(sat)
    return {"generators": gens, "stabilization_exponent": e}, f"{_paren(gens)}\nstabilization exponent {e}", EXIT_OK


def _socle_results(ctx, I):
    basis = [ctx.format_element(v) for v in socle_basis(I)]
    return {"dimension": len(basis), "basis": basis, "length": quotient_length(I)}


def cmd_socle(args, ctx):
    res = _socle_results(ctx, ctx.ideal(args.ideal))
    return res, "\n".join(res["basis"]) or "0", EXIT_OK


def cmd_index(args, ctx):
    I = ctx.ideal(args.ideal)
    value = index_of_reducibility(I)
    res = _socle_results(ctx, I)
    res["index"] = value
    return res, str(value), EXIT_OK


def cmd_length(args, ctx):
    res = _socle_results(ctx, ctx.ideal(args.ideal))
    return res, str(res["length"]), EXIT_OK


def cmd_localcoh(args, ctx):
    sop = ctx.elements(args.sop) if args.sop else None
    A = ctx.subalgebra if args.cech else None
    report = cohomology_report(ctx.ring, sop, A, label=args.ring)
    rows = [f"{'i':>2}  {'socdim':>6}  {'method':<16}  note"]
    for e in report.entries:
        shown = "?" if e.socdim is None else str(e.socdim)
        rows.append(f"{e.index:>2}  {shown:>6}  {e.method:<16}  {e.note}".rstrip())
    if report.cech_socle:
        names = ctx.file.ambient_names
        rows.append("Cech socle: " + ", ".join(c.format(names) for c in report.cech_socle))
    bound = "?" if report.goto_suzuki_bound is None else report.goto_suzuki_bound
    rows.append(f"bound sum C(d,i) socdim H^i = {bound}")
    out = report.to_dict()
    if report.cech_socle:
        out["cech_socle"] = [c.format(ctx.file.ambient_names) for c in report.cech_socle]
    return out, "\n".join(rows), EXIT_CEILING if report.ceiling_hit else EXIT_OK


def cmd_check(args, ctx):
    names = SUITE_NAMES if args.suite == "all" else tuple(n.strip() for n in args.suite.split(","))
    unknown = sorted(set(names) - set(SUITE_NAMES))
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(SUITE_NAMES)}")
    elements = ctx.elements(args.sop)
    standard = ctx.elements(args.standard) if args.standard else ()
    w = SopWitness(ctx.ring, tuple(elements), tuple(standard), seed=args.seed)
    try:
        powers = tuple(int(k) for k in args.powers.split(","))
    except ValueError:
        raise UsageError(f"--powers expects integers, got {args.powers!r}") from None
    socdims = None
    if "main_theorem" in names:
        socdims = cohomology_report(ctx.ring, elements, ctx.subalgebra).socdims()
    verdicts = run_suite(w, names, socdims, powers)
    lines = []
    for v in verdicts:
        line = f"{v.status.upper():7}  {v.name}  {v.detail}"
        if v.witness is not None:
            line += f"  witness {ctx.ring.format(v.witness)} not in {v.outside.minimalized().format()}"
        lines.append(line)
    code = EXIT_FAIL if any(v.status == "fail" for v in verdicts) else EXIT_OK
    return {"verdicts": [v.to_dict() for v in verdicts]}, "\n".join(lines), code


def cmd_paper_demo(args, ctx):
    from .demo import paper_demo

    report = paper_demo()
    results = {"rows": [r.to_dict(args.timings) for r in report.rows], "passed": report.passed}
    code = EXIT_OK if report.passed else EXIT_FAIL
    return results, report.format_table(args.timings), code


HANDLERS = {
    "groebner": cmd_groebner,
    "colon": cmd_colon,
    "intersect": cmd_intersect,
    "saturate": cmd_saturate,
    "socle": cmd_socle,
    "index": cmd_index,
    "length": cmd_length,
    "localcoh": cmd_localcoh,
    "check": cmd_check,
    "paper-demo": cmd_paper_demo,
}


def _paren(gens: Sequence[str]) -> str:
    return "(" + ", ".join(gens) + ")" if gens else "(0)"


def _provenance(command: str, results: dict) -> dict:
    if command == "paper-demo":
        return {row["id"]: row["provenance"] for row in results["rows"]}
    return {"source": "computed", "arithmetic": "exact rational"}


def run(argv: Sequence[str] | None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    saved = (semigroup.DEFAULT_WINDOW_CEILING, localcoh.DEFAULT_CECH_CEILING, quotient.DEFAULT_CLOSURE_CEILING)
    try:
        args = parser.parse_args(argv)
        config = SessionConfig(getattr(args, "ring", None), args.order, args.json, args.window_ceiling,
                               args.closure_ceiling, args.seed, args.timings)
        if config.window_ceiling:
            semigroup.DEFAULT_WINDOW_CEILING = localcoh.DEFAULT_CECH_CEILING = config.window_ceiling
        if config.closure_ceiling:
            quotient.DEFAULT_CLOSURE_CEILING = config.closure_ceiling
        start = time.perf_counter()
        ctx = resolve_ring(args.ring) if config.ring else None
        results, text, code = HANDLERS[args.command](args, ctx)
        elapsed = time.perf_counter() - start
        if config.json:
            doc = {
                "command": args.command,
                "inputs": _inputs(args),
                "results": results,
                "provenance": _provenance(args.command, results),
                "timings": {"total_seconds": round(elapsed, 4)} if config.timings else {},
            }
            print(json.dumps(doc, indent=2, sort_keys=True, default=str), file=out)
        else:
            print(text, file=out)
            if config.timings:
                print(f"elapsed {elapsed:.3f}s", file=out)
        return code
    except UsageError as exc:
        print(f"reducibility: error: {exc}", file=err)
        return EXIT_USAGE
    except CeilingExceeded as exc:
        print(f"reducibility: ceiling exceeded: {exc}", file=err)
        return EXIT_CEILING
    except (AlgebraError, ValueError) as exc:
        print(f"reducibility: error: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"reducibility: error: {exc}", file=err)
        return EXIT_USAGE
    finally:
        semigroup.DEFAULT_WINDOW_CEILING, localcoh.DEFAULT_CECH_CEILING, quotient.DEFAULT_CLOSURE_CEILING = saved


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``gradedtraces <verb> [options]``.

Exit status is 0 on success, 1 when a check fails and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import affine, modforms, rootsys, suite, voatrace, zmodes
from .errors import GradedTracesError
from .qseries import frac_str, named_form, parse_frac

DEFAULT_PREC = 60


class UsageError(Exception):
    pass


# -- output -------------------------------------------------------------------


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _emit_csv(header: Sequence[str], rows) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([frac_str(x) if isinstance(x, Fraction) else x for x in r])


def _emit(fmt: str, data, header=None, rows=None, plain=None) -> None:
    if fmt == "json":
        _emit_json(data)
    elif fmt == "csv":
        if header is None:
            raise UsageError("csv output is not available for this verb")
        _emit_csv(header, rows)
    else:
        if plain is None:
            raise UsageError("plain output is not available for this verb")
        sys.stdout.write(plain.rstrip("\n") + "\n")


def _fmt(args, default: str) -> str:
    return args.format or default


# -- argument helpers ---------------------------------------------------------


def parse_levels(text: str) -> tuple[Fraction, ...]:
    try:
        levels = tuple(parse_frac(t) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad level list {text!r}") from exc
    if not levels:
        raise argparse.ArgumentTypeError("empty level list")
    return levels


def parse_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_frac(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad vector {text!r}") from exc


def _root_system(args) -> rootsys.RootSystem:
    t, r = rootsys.parse_type(args.type)
    if args.rank is not None:
        if r is not None and r != args.rank:
            raise UsageError(f"rank {args.rank} conflicts with type {args.type}")
        r = args.rank
    return rootsys.build(t, r)


def _all_or_one(args) -> list[tuple[str, int]]:
    if args.all:
        return list(rootsys.AUGMENTED)
    if not args.type:
        raise UsageError("give --type or --all")
    rs = _root_system(args)
    return [(rs.type, rs.rank)]


# -- verbs --------------------------------------------------------------------


def cmd_qexp(args) -> int:
    try:
        f = named_form(args.form, args.terms, args.dim_v1)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fmt = _fmt(args, "plain")
    rows = [(frac_str(e), c) for e, c in f.items()]
    _emit(fmt, {"form": args.form, **f.to_json()}, ("exponent", "coefficient"), rows, str(f))
    return 0


def cmd_basis(args) -> int:
    fmt = _fmt(args, "json")
    if args.charge is None:
        space = (modforms.cusp_space if args.cusp else modforms.mk_space)(args.weight, args.terms)
        basis = space.basis
        data = space.to_json()
    else:
        if args.cusp:
            raise UsageError("--cusp does not combine with --charge")
        slot = modforms.graded_trace_space(args.charge, args.weight, args.terms, args.dim_v1)[-1]
        if slot.weight != args.weight:
            raise UsageError("trace weight must be even")
        basis = slot.basis
        data = {"charge": args.charge, **slot.to_json()}
    rows = [(i, frac_str(e), c) for i, b in enumerate(basis) for e, c in b.items()]
    plain = "\n".join(str(b) for b in basis) or "0"
    _emit(fmt, data, ("basis", "exponent", "coefficient"), rows, f"dim {len(basis)}\n{plain}")
    return 0


def cmd_pspace(args) -> int:
    space = modforms.p_space(args.charge, args.weight, args.terms)
    rows = [(i, frac_str(e), c) for i, b in enumerate(space.basis) for e, c in b.items()]
    plain = "\n".join(str(b) for b in space.basis) or "0"
    _emit(_fmt(args, "json"), space.to_json(), ("basis", "exponent", "coefficient"), rows,
          f"dim {space.dim}\n{plain}")
    return 0


def _parse_gen(text: str, prec: int):
    name, _, w = text.partition(":")
    try:
        f = named_form(name, prec)
        k = int(w)
    except ValueError as exc:
        raise UsageError(f"bad generator {text!r}; expected NAME:WEIGHT") from exc
    return f, k


def cmd_delta_module(args) -> int:
    gens = [_parse_gen(g, args.terms) for g in args.gen]
    res = modforms.delta_module_closure(gens, args.wmax, args.terms)
    data = res.to_json() if args.bases else {"dims": res.to_json()["dims"]}
    rows = []
    for k in range(0, args.wmax + 1, 2):
        rows.append((k, res.dims.get(k, 0), modforms.mk_space(k, args.terms).dim,
                     modforms.cusp_space(k, args.terms).dim))
    data["weights"] = [
        {"weight": k, "dim": d, "dim_M": m, "dim_cusp": s} for k, d, m, s in rows
    ]
    plain = "\n".join(f"{k}: {d}" for k, d, _, _ in rows)
    _emit(_fmt(args, "json"), data, ("weight", "dim", "dim_M", "dim_cusp"), rows, plain)
    return 0


def cmd_convert(args) -> int:
    fmt = _fmt(args, "json")
    if args.roundtrip is not None:
        rep = zmodes.roundtrip(args.weight, args.roundtrip)
        _emit(fmt, rep.to_json(), plain=f"identity: {rep.identity}")
        return 0 if rep.identity else 1
    if args.index is None:
        raise UsageError("give --index (and --mmax) or --roundtrip")
    if args.virasoro is not None:
        if args.mmax < args.index:
            raise UsageError("--mmax must be at least --index")
        exp = zmodes.virasoro_expansion(args.virasoro, args.index, args.mmax - args.index + 1)
        rows = [("id", exp.identity)] + sorted(exp.modes.items())
        _emit(fmt, exp.to_json(), ("mode", "coefficient"), rows, str(exp))
        return 0
    build = zmodes.round_from_square if args.reverse else zmodes.square_from_round
    table = build(args.weight, args.index, args.mmax)
    rows = [(m, table[m]) for m in range(args.index, args.mmax + 1)]
    left, right = ("v", "v[]") if args.reverse else ("v[]", "v")
    plain = f"{left}({args.index}) = " + " + ".join(
        f"{frac_str(c)}*{right}({m})" for m, c in rows if c
    )
    _emit(fmt, table.to_json(), ("m", "coefficient"), rows, plain)
    return 0


def cmd_trace(args) -> int:
    fmt = _fmt(args, "plain")
    if args.sweep:
        lo, hi = args.sweep
        t, _ = rootsys.parse_type(args.type)
        rows = rootsys.classical_sweep(t, lo, hi)
        data = [
            {"type": r.type, "rank": r.rank, "dim": r.dim, "kappa": frac_str(r.kappa),
             "trace": frac_str(r.trace), "closed_form": r.closed_form, "status": "pass" if r.ok else "fail"}
            for r in rows
        ]
        csv_rows = [(r.type, r.rank, r.dim, r.kappa, r.trace, r.closed_form) for r in rows]
        plain = "\n".join(f"{r.type}{r.rank}: {frac_str(r.trace)} (closed form {r.closed_form})" for r in rows)
        _emit(fmt, data, ("type", "rank", "dim", "kappa", "trace", "closed_form"), csv_rows, plain)
        return 0 if all(r.ok for r in rows) else 1
    rs = _root_system(args)
    if (args.u is None) != (args.v is None):
        raise UsageError("give both --u and --v, or neither")
    if args.u is None:
        u, v = rootsys.standard_pair(rs)
        u, v = u.coords, v.coords
    else:
        u, v = args.u, args.v
        if len(u) != rs.ambient or len(v) != rs.ambient:
            raise UsageError(f"{rs.name} vectors have {rs.ambient} coordinates")
    tr = voatrace.x_traces(rs, u, v, strict=args.strict)
    for w in tr.warnings:
        print(f"warning: {w}", file=sys.stderr)
    data = {"system": rs.name, "u": [frac_str(x) for x in u], "v": [frac_str(x) for x in v], **tr.to_json()}
    _emit(fmt, data, ("system", "trV0", "trV1"), [(rs.name, tr.tr_v0, tr.tr_v1)], frac_str(tr.tr_v1))
    return 0


def cmd_four_design(args) -> int:
    reports = [
        rootsys.four_design_check(rootsys.build(t, r), args.trials, args.seed)
        for t, r in _all_or_one(args)
    ]
    rows = [(r.name, r.trials, r.seed, r.zeros, r.vacuous, len(r.counterexamples), r.quartic_identity,
             "pass" if r.ok else "fail") for r in reports]
    plain = "\n".join(
        f"{r.name}: {r.zeros}/{r.trials} zero (seed {r.seed}) {'pass' if r.ok else 'fail'}" for r in reports
    )
    _emit(_fmt(args, "json"), [r.to_json() for r in reports],
          ("system", "trials", "seed", "zeros", "vacuous", "counterexamples", "quartic_identity", "status"),
          rows, plain)
    return 0 if all(r.ok for r in reports) else 1


def cmd_level(args) -> int:
    if args.all:
        rows = rootsys.table()
    else:
        if not args.type:
            raise UsageError("give --type or --all")
        rs = _root_system(args)
        h = rootsys.coroot(rs.long_root())
        rows = [(rs.name, rs.dim, rootsys.kappa_hh(rs), rootsys.power_trace(rs, h, 4),
                 rootsys.level(rs.type, rs.rank))]
    data = [
        {"system": n, "dim": d, "kappa": frac_str(k), "tr_h4": frac_str(t), "level": frac_str(lv),
         "integral": lv.denominator == 1}
        for n, d, k, t, lv in rows
    ]
    plain = "\n".join(
        f"{n}: {frac_str(lv)}{' (integral)' if lv.denominator == 1 else ''}" for n, _, _, _, lv in rows
    )
    _emit(_fmt(args, "json"), data, ("system", "dim", "kappa", "tr_h4", "level"), rows, plain)
    return 0


def cmd_y_alpha(args) -> int:
    reports = [voatrace.y_alpha_report(t, r) for t, r in _all_or_one(args)]
    rows = [(r.name, r.n, r.kappa, r.tr_h4, r.C, r.tr_v0, r.tr_v1, r.factor1, r.factor2) for r in reports]
    plain = "\n".join(f"{r.name}: trV0 = {frac_str(r.tr_v0)}, trV1 = {frac_str(r.tr_v1)}" for r in reports)
    _emit(_fmt(args, "json"), [r.to_json() for r in reports],
          ("system", "dim", "kappa", "tr_h4", "C", "trV0", "trV1", "factor1", "factor2"), rows, plain)
    ok = all(r.consistent and r.tr_v0 == 0 and r.tr_v1 != 0 for r in reports)
    return 0 if ok else 1


def cmd_abelian(args) -> int:
    rep = voatrace.abelian_report(args.terms, args.dim_v1)
    plain = "\n".join([
        f"q^-1: {rep.head}",
        f"q^0: {rep.const}",
        f"trV0: {rep.combo_traces[0]}",
        f"trV1: {rep.combo_traces[1]}",
    ])
    _emit(_fmt(args, "json"), rep.to_json(), plain=plain)
    return 0 if rep.ok else 1


def cmd_oracle_verify(args) -> int:
    reports = []
    if args.check in ("expansion", "both"):
        reports += affine.verify_expansion(args.algebra, args.levels, args.draws, args.seed)
    if args.check in ("traces", "both"):
        reports += affine.verify_general_traces(args.algebra, args.levels, args.draws, args.seed, args.five_sign)
    rows = [(r.check, r.algebra, r.level, r.draws, args.seed, r.status) for r in reports]
    plain = "\n".join(
        f"{r.check} {r.algebra} level {frac_str(r.level)}: {r.status} ({r.draws} draws, seed {args.seed})"
        for r in reports
    )
    _emit(_fmt(args, "json"), {"seed": args.seed, "reports": [r.to_json() for r in reports]},
          ("check", "algebra", "level", "draws", "seed", "status"), rows, plain)
    return 0 if all(r.ok for r in reports) else 1


def cmd_verify(args) -> int:
    names = suite.SUITES if args.suite == "all" else (args.suite,)
    results = suite.run(names, args.seed, args.levels)
    passed = sum(r.status == "pass" for r in results)
    data = {
        "version": suite.SUITE_VERSION,
        "seed": args.seed,
        "levels": [frac_str(x) for x in args.levels],
        "passed": passed,
        "total": len(results),
        "results": [r.to_json(args.timing) for r in results],
    }
    header = ["suite", "check", "status", "expected", "actual"]
    rows = [[r.suite, r.check, r.status, r.expected, r.actual] for r in results]
    if args.timing:
        header.append("elapsed_ms")
        for row, r in zip(rows, results):
            row.append(round(r.elapsed_ms, 1))
    lines = [f"{r.status.upper():4}  {r.suite}: {r.check}" for r in results]
    lines.append(f"{passed}/{len(results)} checks pass (seed {args.seed})")
    _emit(_fmt(args, "plain"), data, header, rows, "\n".join(lines))
    return 0 if passed == len(results) else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedtraces", description="Exact graded-trace computations.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, formats=("json", "csv", "plain")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=formats, default=None)
        sp.set_defaults(fn=fn)
        return sp

    def type_args(sp, allow_all=False):
        sp.add_argument("--type", help="root system type, e.g. E8, D4 or A (with --rank)")
        sp.add_argument("--rank", type=int, default=None)
        if allow_all:
            sp.add_argument("--all", action="store_true", help="all eight augmented exceptional types")

    sp = verb("qexp", cmd_qexp, "print a q-expansion", ("json", "csv", "plain"))
    sp.add_argument("form", help="eta, eta^c, delta, G<k>, G2, J, one or Z1")
    sp.add_argument("--terms", "-n", type=int, default=DEFAULT_PREC)
    sp.add_argument("--dim-v1", type=int, default=24, help="dim V_1 used by Z1")

    sp = verb("basis", cmd_basis, "echelon basis of M_k, M_k^0 or a graded-trace slot")
    sp.add_argument("--weight", "-k", type=int, required=True)
    sp.add_argument("--cusp", action="store_true")
    sp.add_argument("--charge", "-c", type=int, default=None)
    sp.add_argument("--dim-v1", type=int, default=24)
    sp.add_argument("--terms", "-n", type=int, default=DEFAULT_PREC)

    sp = verb("pspace", cmd_pspace, "basis of eta^(-c) M_(k + c/2)")
    sp.add_argument("--charge", "-c", type=int, required=True)
    sp.add_argument("--weight", "-k", type=int, required=True)
    sp.add_argument("--terms", "-n", type=int, default=DEFAULT_PREC)

    sp = verb("delta-module", cmd_delta_module, "closure under G4, G6 and the Serre derivative")
    sp.add_argument("--gen", action="append", required=True, help="generator NAME:WEIGHT, e.g. G4:4 or delta:12")
    sp.add_argument("--wmax", type=int, default=40)
    sp.add_argument("--bases", action="store_true", help="include echelon bases in JSON output")
    sp.add_argument("--terms", "-n", type=int, default=DEFAULT_PREC)

    sp = verb("convert", cmd_convert, "round/square mode conversion tables")
    sp.add_argument("--weight", "-k", type=int, default=1)
    sp.add_argument("--index", type=int, default=None)
    sp.add_argument("--mmax", type=int, default=4)
    sp.add_argument("--reverse", action="store_true", help="round modes in terms of square modes")
    sp.add_argument("--virasoro", type=parse_frac, default=None, metavar="C",
                    help="expand L[index] at central charge C")
    sp.add_argument("--roundtrip", type=int, default=None, metavar="WINDOW")

    sp = verb("trace", cmd_trace, "traces of o(x(u, v)) from root data")
    type_args(sp)
    sp.add_argument("--u", type=parse_vector, default=None)
    sp.add_argument("--v", type=parse_vector, default=None)
    sp.add_argument("--strict", action="store_true", help="reject pairs violating the hypotheses")
    sp.add_argument("--sweep", type=int, nargs=2, metavar=("LMIN", "LMAX"))

    sp = verb("four-design", cmd_four_design, "random constrained pairs for the 4-design property")
    type_args(sp, allow_all=True)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = verb("level", cmd_level, "levels 6 kappa/(n - 24)")
    type_args(sp, allow_all=True)

    sp = verb("y-alpha", cmd_y_alpha, "traces of y(alpha) for a long root")
    type_args(sp, allow_all=True)

    sp = verb("abelian", cmd_abelian, "traces when V_1 is abelian at c = 24")
    sp.add_argument("--terms", "-n", type=int, default=10)
    sp.add_argument("--dim-v1", type=int, default=24)

    sp = verb("oracle-verify", cmd_oracle_verify, "check identities in affine vacuum modules")
    sp.add_argument("--algebra", choices=("sl2", "sl3", "sl2+sl2"), default="sl2")
    sp.add_argument("--check", choices=("expansion", "traces", "both"), default="both")
    sp.add_argument("--levels", type=parse_levels, default=affine.DEFAULT_LEVELS)
    sp.add_argument("--draws", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--five-sign", type=int, choices=(1, -1), default=1, help=argparse.SUPPRESS)

    sp = verb("verify", cmd_verify, "run the verification suite")
    sp.add_argument("--suite", choices=("all",) + suite.SUITES, default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--levels", type=parse_levels, default=affine.DEFAULT_LEVELS)
    sp.add_argument("--timing", action="store_true", help="report elapsed milliseconds per check")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"gradedtraces {args.verb}: {exc}", file=sys.stderr)
        return 2
    except (GradedTracesError, ValueError) as exc:
        print(f"gradedtraces {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

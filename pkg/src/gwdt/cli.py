"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import agree_at_points, random_points, ratfunc_eq
from .correspondence import check, grid, lhs_series
from .localization import InconsistencyError, dt_report, n_dt, n_dt_closed
from .series import HalfExp, phi_to_q
from .tqft import GwInput, z_closed_r1, z_trace

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _half_exp(s: str) -> HalfExp:
    try:
        if s.endswith("/2"):
            return HalfExp(int(s[:-2]))
        return HalfExp.of(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a half-integer: {s!r}") from exc


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("GWDT_SEED", "0"))


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def run_gw(args) -> int:
    inp = GwInput(args.g, args.k1, args.k2, args.r)
    try:
        inp.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    z = z_trace(inp)
    obj = {"g": args.g, "k1": args.k1, "k2": args.k2, "r": args.r, "z_trace": z.to_json()}
    lines = [z.render()]
    status = EXIT_OK
    if args.trunc is not None:
        series = phi_to_q(z, args.trunc)
        lines.append(f"q-series: {series.render()}")
        obj["q_series"] = series.render()
    if args.closed_form:
        if args.r != 1 or args.k1 >= -1 or args.k2 >= -1:
            raise UsageError("--closed-form needs r = 1 and k1, k2 < -1")
        closed = z_closed_r1(inp)
        equal = z == closed and all(
            agree_at_points(z.coeff(k), closed.coeff(k), random_points(5, _seed(args)))
            for k in z.degrees() | closed.degrees()
        )
        lines += [closed.render(), "EQUAL" if equal else "DIFFERENT"]
        obj["closed_form"] = closed.to_json()
        obj["equal"] = equal
        status = EXIT_OK if equal else EXIT_INCONSISTENT
    _emit(args, "\n".join(lines), obj)
    return status


def run_dt(args) -> int:
    if args.k1 >= -1 or args.k2 >= -1 or args.g < 0:
        raise UsageError(f"dt needs g >= 0 and k1, k2 < -1 (got g={args.g}, k1={args.k1}, k2={args.k2})")
    report = dt_report(args.g, args.k1, args.k2)
    value = n_dt(args.g, args.k1, args.k2)
    closed = n_dt_closed(args.g, args.k1, args.k2)
    equal = ratfunc_eq(value, closed) and agree_at_points(value, closed, random_points(5, _seed(args)))
    text = "\n".join(
        [
            value.pretty(),
            closed.pretty(),
            "EQUAL" if equal else "DIFFERENT",
            f"fixed_part_ok: {str(report['fixed_part_ok']).lower()}",
        ]
    )
    _emit(args, text, report)
    if not report["fixed_part_ok"] or not equal:
        return EXIT_INCONSISTENT
    return EXIT_OK


def _check_corr_args(g: int, k1: int, k2: int) -> None:
    if g < 1 or k1 >= -1 or k2 >= -1:
        raise UsageError(f"verify needs g >= 1 and k1, k2 < -1 (got g={g}, k1={k1}, k2={k2})")


def run_verify(args) -> int:
    _check_corr_args(args.g, args.k1, args.k2)
    report = check(args.g, args.k1, args.k2, seed=_seed(args))
    obj = [report.to_json()]
    text = report.render()
    if args.trunc is not None:
        series = lhs_series(args.g, args.k1, args.k2, trunc=args.trunc)
        text += f"\nlhs series: {series.render()}"
    _emit(args, text, obj)
    return EXIT_OK if report.passed else EXIT_FAIL


def _grid_task(item):
    g, k1, k2, seed = item
    return check(g, k1, k2, seed=seed)


def run_verify_grid(args) -> int:
    if args.gmin < 1 or args.kmax >= -1 or args.kmin > args.kmax or args.gmin > args.gmax:
        raise UsageError("grid needs 1 <= gmin <= gmax and kmin <= kmax < -1")
    seed = _seed(args)
    items = [(g, k1, k2, seed) for g, k1, k2 in grid(args.gmax, args.kmin, args.kmax, args.gmin)]
    reports = []
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(_grid_task, items)
            for rep in results:
                reports.append(rep)
                if args.format == "text":
                    print(rep.render(), flush=True)
    else:
        for item in items:
            rep = _grid_task(item)
            reports.append(rep)
            if args.format == "text":
                print(rep.render(), flush=True)
    failed = sum(not r.passed for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        print(f"{len(reports) - failed}/{len(reports)} passed")
    return EXIT_FAIL if failed else EXIT_OK


def run_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(_seed(args))
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gwdt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, *, r=False, trunc=False):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--seed", type=int, default=None, help="seed for random-point checks (env GWDT_SEED)")
        if trunc:
            p.add_argument("--trunc", type=_half_exp, default=None, help="q truncation order, e.g. 5/2")

    def gk(p):
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--k1", type=int, required=True)
        p.add_argument("--k2", type=int, required=True)

    p = sub.add_parser("gw", help="Gromov-Witten partition function via the trace sum")
    gk(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--closed-form", action="store_true", help="also evaluate the r = 1 closed form")
    common(p, trunc=True)
    p.set_defaults(func=run_gw)

    p = sub.add_parser("dt", help="leading Donaldson-Thomas invariant by localization")
    gk(p)
    common(p)
    p.set_defaults(func=run_dt)

    p = sub.add_parser("verify", help="check the leading-order correspondence at one point")
    gk(p)
    common(p, trunc=True)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("verify-grid", help="check the correspondence on a grid")
    p.add_argument("--gmin", type=int, default=1)
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=run_verify_grid)

    p = sub.add_parser("selftest", help="run the built-in invariant checks")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=run_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gwdt {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"gwdt {args.verb}: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())

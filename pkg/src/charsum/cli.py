"""Command-line interface: character listings, theorem sweeps, identity checks.

Subcommands
-----------
characters      list all characters mod q with conductor/parity/reality
verify-theorem  compare direct sum vs series for every primitive chi mod q
example         run one identity check (id 1..4) for a discriminant
sweep           run all applicable checks per fundamental discriminant

Exit code 0 iff every executed check passed; 1 if any failed; 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .characters import build_character_group, fundamental_discriminants, real_primitive_character
from .fourier import DEFAULT_TERMS_CAP, verify_theorem
from .functions import builtin_function
from .gauss_sums import quadratic_tau_residual, separability_residual
from .identities import run_identity
from .reporting import VerificationReport, render_csv, render_json, render_pretty

GAUSS_CHECK_TOLERANCE = 1e-9


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--output", help="write the report to this path instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charsum",
        description="Dirichlet character sums via Fourier coefficient series: "
        "verification sweeps and identity checks.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("characters", help="list the character group mod q")
    p.add_argument("-q", "--modulus", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-theorem", help="direct sum vs series for all primitive chi mod q")
    p.add_argument("-q", "--modulus", type=int, required=True)
    p.add_argument("--function", required=True,
                   help="one of t2, t, exp, log, step:<y> (y rational in (0,1))")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--terms-cap", type=int, default=DEFAULT_TERMS_CAP)
    p.add_argument("--terms", type=int, default=None,
                   help="fix the truncation N instead of choosing it from the tail bound")
    _add_common(p)

    p = sub.add_parser("example", help="run one worked identity (1..4)")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("-d", "--discriminant", type=int, required=True)
    p.add_argument("--y", default=None, help="rational in (0,1), e.g. 1/5 (identity 4 only)")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--terms", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("sweep", help="all applicable checks per fundamental discriminant")
    p.add_argument("--max-abs-d", type=int, required=True)
    p.add_argument("--min-abs-d", type=int, default=2)
    p.add_argument("--tol", type=float, default=None,
                   help="override the per-check default tolerances")
    _add_common(p)

    return parser


def _emit(reports, fmt: str, output: str | None, notice: str | None = None) -> int:
    if fmt == "json":
        text = render_json(reports)
    elif fmt == "csv":
        text = render_csv(reports)
    else:
        text = render_pretty(reports)
        if notice:
            text += notice + "\n"
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    if notice and fmt != "pretty":
        print(notice, file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def _identity_report(command: str, check, label: str) -> VerificationReport:
    return VerificationReport(
        command=command,
        discriminant=check.discriminant,
        modulus=abs(check.discriminant),
        label=label,
        parity="even" if check.discriminant > 0 else "odd",
        check=f"identity:{check.identity_id}",
        lhs_re=check.lhs,
        lhs_im=0.0,
        rhs_re=check.rhs,
        rhs_im=0.0,
        abs_error=check.abs_error,
        tolerance=check.tolerance,
        terms_used=check.terms_used,
        tail_bound=check.tail_bound,
        passed=check.passed,
        wall_time_ms=0.0,
    )


def _with_time(report: VerificationReport, started: float) -> VerificationReport:
    from dataclasses import replace

    return replace(report, wall_time_ms=(time.perf_counter() - started) * 1000.0)


def _cmd_characters(args) -> int:
    try:
        group = build_character_group(args.modulus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = []
    for chi in group.characters():
        rows.append(
            {
                "q": chi.modulus,
                "label": chi.label,
                "conductor": chi.conductor,
                "parity": "even" if chi.is_even else "odd",
                "is_real": chi.is_real,
                "is_primitive": chi.is_primitive,
            }
        )
    if args.format == "json":
        import json

        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["q,label,conductor,parity,is_real,is_primitive"]
        for r in rows:
            lines.append(
                f"{r['q']},{r['label']},{r['conductor']},{r['parity']},"
                f"{str(r['is_real']).lower()},{str(r['is_primitive']).lower()}"
            )
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{len(rows)} character(s) mod {args.modulus}:"]
        for r in rows:
            lines.append(
                f"  {r['label']:<9} conductor={r['conductor']:<5} parity={r['parity']:<4} "
                f"real={str(r['is_real']).lower():<5} primitive={str(r['is_primitive']).lower()}"
            )
        text = "\n".join(lines) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify_theorem(args, command: str) -> int:
    if args.modulus < 3:
        print(f"error: the series identity needs modulus >= 3, got {args.modulus}", file=sys.stderr)
        return 2
    try:
        f = builtin_function(args.function)
        group = build_character_group(args.modulus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reports = []
    for chi in group.primitive_characters():
        started = time.perf_counter()
        chk = verify_theorem(chi, f, args.tol, terms=args.terms, terms_cap=args.terms_cap)
        direct = complex(chk.direct)
        series = complex(chk.series.value)
        reports.append(
            _with_time(
                VerificationReport(
                    command=command,
                    discriminant=None,
                    modulus=args.modulus,
                    label=chi.label,
                    parity="even" if chi.is_even else "odd",
                    check=f"theorem:{args.function}",
                    lhs_re=direct.real,
                    lhs_im=direct.imag,
                    rhs_re=series.real,
                    rhs_im=series.imag,
                    abs_error=chk.abs_error,
                    tolerance=chk.pass_tolerance,
                    terms_used=chk.series.terms_used,
                    tail_bound=chk.series.tail_bound,
                    passed=chk.passed,
                    wall_time_ms=0.0,
                ),
                started,
            )
        )
    notice = None
    if not reports:
        notice = f"no primitive characters mod {args.modulus}"
    return _emit(reports, args.format, args.output, notice)


def _cmd_example(args, command: str) -> int:
    started = time.perf_counter()
    try:
        y = Fraction(args.y) if args.y is not None else None
        check = run_identity(args.id, args.discriminant, y=y, tol=args.tol, terms=args.terms)
        label = real_primitive_character(args.discriminant).label
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = _with_time(_identity_report(command, check, label), started)
    return _emit([report], args.format, args.output)


def _cmd_sweep(args, command: str) -> int:
    if args.max_abs_d < args.min_abs_d:
        print("error: empty sweep range", file=sys.stderr)
        # header-only output for an empty range
        return _emit([], args.format, args.output)
    reports = []
    for d in fundamental_discriminants(args.max_abs_d, args.min_abs_d):
        q = abs(d)
        chi = real_primitive_character(d)
        parity = "even" if d > 0 else "odd"

        started = time.perf_counter()
        residual = max(separability_residual(chi, n) for n in range(q))
        reports.append(
            _with_time(
                VerificationReport(
                    command=command, discriminant=d, modulus=q, label=chi.label,
                    parity=parity, check="separability",
                    lhs_re=residual, lhs_im=0.0, rhs_re=0.0, rhs_im=0.0,
                    abs_error=residual, tolerance=GAUSS_CHECK_TOLERANCE,
                    terms_used=q, tail_bound=0.0,
                    passed=residual <= GAUSS_CHECK_TOLERANCE, wall_time_ms=0.0,
                ),
                started,
            )
        )

        started = time.perf_counter()
        residual = quadratic_tau_residual(d)
        reports.append(
            _with_time(
                VerificationReport(
                    command=command, discriminant=d, modulus=q, label=chi.label,
                    parity=parity, check="quadratic_tau",
                    lhs_re=residual, lhs_im=0.0, rhs_re=0.0, rhs_im=0.0,
                    abs_error=residual, tolerance=GAUSS_CHECK_TOLERANCE,
                    terms_used=q, tail_bound=0.0,
                    passed=residual <= GAUSS_CHECK_TOLERANCE, wall_time_ms=0.0,
                ),
                started,
            )
        )

        ids = [1 if d < 0 else 2, 3, 4]
        for identity_id in ids:
            started = time.perf_counter()
            check = run_identity(
                identity_id,
                d,
                y=Fraction(1, 2) if identity_id == 4 else None,
                tol=args.tol,
            )
            reports.append(_with_time(_identity_report(command, check, chi.label), started))
    return _emit(reports, args.format, args.output)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    command = "charsum " + " ".join(argv if argv is not None else sys.argv[1:])
    if args.cmd == "characters":
        return _cmd_characters(args)
    if args.cmd == "verify-theorem":
        return _cmd_verify_theorem(args, command)
    if args.cmd == "example":
        return _cmd_example(args, command)
    if args.cmd == "sweep":
        return _cmd_sweep(args, command)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 identity-check failure, 2 validation or usage
failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence, TextIO

from .cycles import DEFAULT_MAX_PERIOD_CAP, build_transfer_graph, enumerate_cycles
from .errors import BettiNotOne, EnumerationBudgetExceeded, PresentationError
from .presentation import MorsePresentation, alexander, homology_action, lescop_coefficient, parse
from .presets import preset_names, preset_path
from .report import FAIL, build_report, run_checks
from .ring import format_rational, rf_to_series
from .zeta import zeta_function, zeta_log_derivative

EXIT_OK, EXIT_CHECK, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3
DEFAULT_MAX_PERIOD = 8
ENV_MAX_PERIOD = "ZETAPROP_MAX_PERIOD"
PRESET_PREFIX = "preset:"


class _Usage(Exception):
    pass


def _read_source(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    if path.startswith(PRESET_PREFIX):
        path = str(preset_path(path[len(PRESET_PREFIX) :]))
    return Path(path).read_text(encoding="utf-8")


def _max_period(arg: int | None, env: dict[str, str]) -> int:
    if arg is not None:
        value = arg
    elif env.get(ENV_MAX_PERIOD):
        raw = env[ENV_MAX_PERIOD]
        try:
            value = int(raw)
        except ValueError:
            raise _Usage(f"{ENV_MAX_PERIOD}={raw!r} is not an integer") from None
    else:
        value = DEFAULT_MAX_PERIOD
    if not 1 <= value <= DEFAULT_MAX_PERIOD_CAP:
        raise _Usage(f"max period must be between 1 and {DEFAULT_MAX_PERIOD_CAP}, got {value}")
    return value


def _emit_json(out: TextIO, data: Any) -> None:
    out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def _table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


# -- subcommands ---------------------------------------------------------------


def cmd_validate(p: MorsePresentation, args, out: TextIO) -> int:
    if args.json:
        _emit_json(out, {"kind": "validate", "digest": p.digest(), "normal_form": p.normal_form()})
    elif not args.quiet:
        out.write(f"# valid presentation, digest {p.digest()}\n")
        out.write(p.to_text())
    return EXIT_OK


def _zeta_data(p: MorsePresentation, P: int) -> dict[str, Any]:
    action = homology_action(p).action
    logd = zeta_log_derivative(action)
    return {
        "kind": "zeta",
        "digest": p.digest(),
        "max_period": P,
        "zeta": str(zeta_function(action)),
        "log_derivative": {
            "rational": str(logd),
            "series": [format_rational(a) for a in rf_to_series(logd, P).coefficients],
        },
    }


def cmd_zeta(p: MorsePresentation, args, out: TextIO) -> int:
    data = _zeta_data(p, args.P)
    if args.json:
        _emit_json(out, data)
    elif not args.quiet:
        out.write(f"zeta          {data['zeta']}\n")
        out.write(f"t zeta'/zeta  {data['log_derivative']['rational']}\n")
        out.write(f"series        {rf_to_series(zeta_log_derivative(homology_action(p).action), args.P)}\n")
    return EXIT_OK


def cmd_alexander(p: MorsePresentation, args, out: TextIO) -> int:
    delta, lescop = alexander(p), lescop_coefficient(p)
    if args.json:
        _emit_json(out, {"kind": "alexander", "digest": p.digest(), "alexander": str(delta), "lescop": str(lescop)})
    elif not args.quiet:
        out.write(f"alexander  {delta}\n")
        out.write(f"lescop     {lescop}\n")
    return EXIT_OK


def cmd_cycles(p: MorsePresentation, args, out: TextIO) -> int:
    census = enumerate_cycles(build_transfer_graph(p), p, args.P)
    if args.json:
        _emit_json(out, {"kind": "census", "digest": p.digest(), **census.to_json()})
    elif not args.quiet:
        rows = [["period", "index", "prim", "sign", "itinerary"]]
        for c in census.cycles:
            rows.append([str(c.period), str(c.index), str(c.primitive_period), f"{c.sign:+d}", " ".join(c.itinerary)])
        out.write(_table(rows) + "\n")
        out.write(f"series  {census.series}\n")
    return EXIT_OK


def _write_report_text(data: dict[str, Any], out: TextIO) -> None:
    def show(x):
        return "null" if x is None else str(x)

    rows = [
        ["digest", data["digest"]],
        ["genus", str(data["genus"])],
        ["b1", str(data["b1"])],
        ["zeta", data["zeta"]],
        ["t zeta'/zeta", data["log_derivative"]["rational"]],
        ["alexander", show(data["alexander"])],
        ["lescop", show(data["lescop"])],
    ]
    if data["note"]:
        rows.append(["note", data["note"]])
    out.write(_table(rows) + "\n\n")
    census = [["period", "index0", "index1", "index2", "coefficient"]]
    for r in data["census"]["periods"]:
        census.append([str(r["period"]), str(r["index0"]), str(r["index1"]), str(r["index2"]), r["coefficient"]])
    out.write(_table(census) + "\n\n")
    _write_checks(data["checks"], out)


def _write_checks(checks: list[dict[str, str]], out: TextIO) -> None:
    out.write(_table([[c["status"], c["name"], c["detail"]] for c in checks]) + "\n")


def cmd_analyze(p: MorsePresentation, args, out: TextIO) -> int:
    report = build_report(p, args.P)
    if args.json:
        out.write(report.dumps() + "\n")
    elif not args.quiet:
        _write_report_text(report.data, out)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_check(p: MorsePresentation, args, out: TextIO) -> int:
    results = [r.to_json() for r in run_checks(p, args.P)]
    failed = any(r["status"] == FAIL for r in results)
    if args.json:
        _emit_json(out, {"kind": "check", "digest": p.digest(), "max_period": args.P, "checks": results})
    elif not args.quiet or failed:
        _write_checks([r for r in results if not args.quiet or r["status"] == FAIL], out)
    return EXIT_CHECK if failed else EXIT_OK


COMMANDS = {
    "validate": (cmd_validate, "parse and validate a presentation, echo its normal form"),
    "analyze": (cmd_analyze, "full report: zeta, Alexander polynomial, census and checks"),
    "zeta": (cmd_zeta, "Lefschetz zeta function and t zeta'/zeta"),
    "alexander": (cmd_alexander, "Alexander polynomial and propagator boundary coefficient (needs b1 = 1)"),
    "cycles": (cmd_cycles, "census of closed orbits up to the period bound"),
    "check": (cmd_check, "run the identity-check suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaprop",
        description="Exact zeta functions and orbit censuses for surface mapping tori.",
        epilog=f"PATH may be '-' for stdin or {PRESET_PREFIX}NAME for a bundled preset "
        f"({', '.join(preset_names())}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("path", metavar="PATH")
        sp.add_argument(
            "-P",
            "--max-period",
            type=int,
            default=None,
            help=f"period bound (default ${ENV_MAX_PERIOD} or {DEFAULT_MAX_PERIOD})",
        )
        sp.add_argument("--json", action="store_true", help="machine-readable output on stdout")
        sp.add_argument("--quiet", action="store_true", help="suppress normal output")
    return parser


def main(
    argv: Sequence[str] | None = None,
    *,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    env: dict[str, str] | None = None,
) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    env = dict(os.environ) if env is None else env

    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]

    def fail(code: int, msg: str) -> int:
        stderr.write(f"zetaprop {args.command}: {msg}\n")
        return code

    try:
        args.P = _max_period(args.max_period, env)
    except _Usage as exc:
        return fail(EXIT_INVALID, str(exc))
    try:
        text = _read_source(args.path, stdin)
    except (OSError, UnicodeDecodeError) as exc:
        return fail(EXIT_IO, f"cannot read {args.path}: {exc}")
    try:
        pres = parse(text)
        return func(pres, args, stdout)
    except PresentationError as exc:
        return fail(EXIT_INVALID, f"{args.path}: {exc}")
    except BettiNotOne as exc:
        return fail(EXIT_INVALID, str(exc))
    except EnumerationBudgetExceeded as exc:
        return fail(EXIT_INVALID, str(exc))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line front end: export character tables and cuspidal characters,
run verification suites, and run the extraspecial-group laboratory.

Exit codes: 0 when every executed check passes, 1 when any check fails,
2 on invalid arguments.  All output is deterministic; the only recognized
environment variable is BASECHANGE_MAX_GROUP (size bound override).
"""

from __future__ import annotations

import argparse
import json
import sys

from .cuspchar import (
    gl2_cuspidal,
    sl2_cuspidal,
    standard_group,
    standard_table,
    u2_cuspidal,
)
from .ffield import MultChar, NormOneChar, make_field
from .grpcore import table_to_csv, table_to_json
from .verify import SUITES, report_to_json

_SUITE_ALIASES = {
    "level0": "level0_basechange",
    "normbij": "norm_bijection",
    "restriction": "restriction_sl2",
    "endoscopic": "endoscopic_finite",
    "heis": "heisenberg",
}

_FAMILIES = ("sl2", "gl2", "u2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basechange",
        description="Exact verification laboratory for cuspidal characters "
        "of rank-one groups over small finite fields.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_table = sub.add_parser(
        "chartable", help="print the character table of a standard family"
    )
    p_table.add_argument("family", choices=_FAMILIES)
    p_table.add_argument("--q", type=int, default=3, help="base field size (odd prime)")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, help="output path (default stdout)")

    p_cusp = sub.add_parser(
        "cuspidal", help="print one cuspidal character built by formula"
    )
    p_cusp.add_argument("family", choices=_FAMILIES)
    p_cusp.add_argument("--q", type=int, default=3, help="base field size (odd prime)")
    p_cusp.add_argument(
        "--theta",
        default=None,
        help="parameter: an exponent for sl2/gl2, a comma pair s1,s2 for u2 "
        "(defaults: 1, 1, and 0,1)",
    )
    p_cusp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_cusp.add_argument("--out", default=None, help="output path (default stdout)")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite",
        choices=sorted(_SUITE_ALIASES) + sorted(SUITES),
        help="suite name (short or full)",
    )
    p_verify.add_argument("--q", type=int, default=3, help="base field size")
    p_verify.add_argument(
        "--threads", type=int, default=1, help="parameter-point fan-out bound"
    )
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")

    p_heis = sub.add_parser(
        "heis", help="run the extraspecial-group checks for one configuration"
    )
    p_heis.add_argument("--p", type=int, required=True, help="odd prime")
    p_heis.add_argument("--a", type=int, default=1, help="half-rank of the space")
    p_heis.add_argument("--d", type=int, required=True, help="torus order")
    p_heis.add_argument(
        "--realization", choices=("split", "nonsplit"), required=True
    )
    p_heis.add_argument("--out", default=None, help="report path (default stdout)")

    return parser


def _emit(text: str, out_path: str | None):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _cmd_chartable(args) -> int:
    group = standard_group(args.family, args.q)
    table = standard_table(args.family, args.q)
    if args.format == "csv":
        _emit(table_to_csv(group, table), args.out)
    else:
        _emit(_json_dumps(table_to_json(group, table)), args.out)
    return 0


def _parse_theta_pair(raw: str) -> tuple[int, int]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError(
            "u2 parameter must be two comma-separated integers, e.g. --theta 0,1"
        )
    return int(parts[0]), int(parts[1])


def _build_cuspidal(family: str, q: int, raw_theta: str | None):
    F = make_field(q)
    L = make_field(q, 2)
    if family == "sl2":
        s = int(raw_theta) if raw_theta is not None else 1
        cf = sl2_cuspidal(NormOneChar(L, F, s))
        return cf, {"theta": s}
    if family == "gl2":
        t = int(raw_theta) if raw_theta is not None else 1
        cf = gl2_cuspidal(MultChar(L, t))
        return cf, {"theta": t}
    s1, s2 = _parse_theta_pair(raw_theta if raw_theta is not None else "0,1")
    cf = u2_cuspidal(NormOneChar(L, F, s1), NormOneChar(L, F, s2))
    return cf, {"theta1": s1, "theta2": s2}


def _cmd_cuspidal(args) -> int:
    cf, param_info = _build_cuspidal(args.family, args.q, args.theta)
    group = standard_group(args.family, args.q)
    if args.format == "csv":
        _emit(table_to_csv(group, [cf]), args.out)
    else:
        obj = table_to_json(group, [cf])
        obj["family"] = args.family
        obj["q"] = args.q
        obj["params"] = param_info
        _emit(_json_dumps(obj), args.out)
    return 0


def _cmd_verify(args) -> int:
    suite_id = _SUITE_ALIASES.get(args.suite, args.suite)
    if suite_id == "heisenberg":
        report = SUITES[suite_id](threads=args.threads)
    else:
        report = SUITES[suite_id](q=args.q)
    _emit(report_to_json(report), args.out)
    return 0 if report.passed else 1


def _cmd_heis(args) -> int:
    from .heis import torus_realization
    from .verify import suite_heisenberg

    # Validate the configuration before running anything heavy.
    torus_realization(args.p, args.d, args.realization)
    report = suite_heisenberg(tuples=[(args.p, args.a, args.d, args.realization)])
    _emit(report_to_json(report), args.out)
    return 0 if report.passed else 1


_COMMANDS = {
    "chartable": _cmd_chartable,
    "cuspidal": _cmd_cuspidal,
    "verify": _cmd_verify,
    "heis": _cmd_heis,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[args.subcommand](args)
    except ValueError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())

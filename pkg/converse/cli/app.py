"""
converse/cli/app.py

argparse front end. Reports go to stdout, logs to stderr.

Exit codes:
    0  every check passed
    1  a negative verdict (not generating, residual above tol, cusp term)
    2  certificate mismatch or an assertion left unverified
    3  parse error, unsupported level, bad configuration
    4  truncation tail above the tolerance
    5  any other error
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from converse.cli import commands
from converse.cli.exception_handlers import EXIT_USAGE, handle_exception
from converse.cli.schemas import RunReport
from converse.config import BaseConfig, load_settings
from converse.config_validator import ConfigValidator
from converse.logging import configure_logging
from converse.schemas.response import success_response

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="converse",
        description="Certify converse-theorem derivations for Gamma0(N)",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    parser.add_argument("--config", type=Path, help="key=value file overriding defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="replay derivation scripts")
    verify.add_argument("--level", type=int, action="append", dest="levels")
    verify.add_argument("--script", type=Path)
    verify.add_argument("--cusps", action="store_true", help="cusp 1/r derivations")
    verify.add_argument("--trace", action="store_true", help="print every step")
    verify.add_argument("--jobs", type=int, default=1)

    certify = sub.add_parser("certify-generators", help="coset enumeration")
    certify.add_argument("--level", type=int, action="append", dest="levels")
    certify.add_argument("--drop", help="omit one generator, e.g. M3")
    certify.add_argument("--gen", action="append", dest="expressions")

    numeric = sub.add_parser("numeric", help="numeric checks of q-expansions")
    checks = numeric.add_subparsers(dest="check", required=True)
    for name in ("invariance", "hecke", "cusp", "fricke", "expand"):
        cmd = checks.add_parser(name)
        cmd.add_argument("--form", required=True)
        cmd.add_argument("--level", type=int, required=name != "expand")
        cmd.add_argument("--terms", type=int)
        cmd.add_argument("--tol", type=float)
        if name == "invariance":
            cmd.add_argument("--matrix", action="append", dest="matrices")
        if name == "hecke":
            cmd.add_argument("--p", type=int, action="append", dest="primes")
        if name == "cusp":
            cmd.add_argument("--cusp", action="append", dest="cusps")
        if name == "expand":
            cmd.add_argument("--out", type=Path)
    classify = checks.add_parser("classify")
    classify.add_argument("--matrix", required=True)
    classify.add_argument("--level", type=int)

    script = sub.add_parser("script", help="generate and replay a derivation family")
    script.add_argument(
        "kind", choices=("theorem2", "corollary2", "corollary3", "theorem3", "show")
    )
    script.add_argument("--level", type=int, required=True)
    script.add_argument("--n", type=int)
    script.add_argument("--m", type=int)
    script.add_argument("--r", type=int)
    script.add_argument("--max-exponent", type=int)
    return parser


class ConverseApp:
    """Command dispatcher; one instance serves any number of runs"""

    def __init__(self, config: Optional[BaseConfig] = None):
        self.config = config
        self.parser = build_parser()

    def dispatch(self, args: argparse.Namespace, config: BaseConfig) -> RunReport:
        if args.command == "verify":
            return commands.cmd_verify(args.levels, args.script, args.cusps, args.jobs)
        if args.command == "certify-generators":
            return commands.cmd_certify_generators(
                config, args.levels, args.drop, args.expressions
            )
        if args.command == "script":
            return commands.cmd_script(
                args.kind,
                args.level,
                n=args.n,
                m=args.m,
                r=args.r,
                max_exponent=args.max_exponent or config.THEOREM2_MAX_EXPONENT,
            )
        check = args.check
        if check == "classify":
            return commands.cmd_numeric_classify(args.matrix, args.level)
        if check == "expand":
            return commands.cmd_numeric_expand(
                config, args.form, args.level, args.terms, args.out
            )
        if check == "invariance":
            return commands.cmd_numeric_invariance(
                config, args.form, args.level, args.matrices, args.terms, args.tol
            )
        if check == "hecke":
            return commands.cmd_numeric_hecke(
                config, args.form, args.level, args.primes, args.terms, args.tol
            )
        if check == "cusp":
            return commands.cmd_numeric_cusp(
                config, args.form, args.level, args.cusps, args.terms, args.tol
            )
        return commands.cmd_numeric_fricke(
            config, args.form, args.level, args.terms, args.tol
        )

    def run(
        self,
        argv: Optional[Sequence[str]] = None,
        out: Optional[TextIO] = None,
        err: Optional[TextIO] = None,
    ) -> int:
        out = out or sys.stdout
        err = err or sys.stderr
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_USAGE if exc.code else 0

        try:
            config = self.config or load_settings(args.config)
        except (KeyError, ValueError, OSError) as exc:
            err.write(f"invalid configuration: {exc}\n")
            return EXIT_USAGE
        configure_logging(config.LOG_LEVEL, config.LOG_FORMAT, stream=err)
        errors, _ = ConfigValidator(config).validate_all()
        if errors:
            for error in errors:
                err.write(f"configuration error: {error}\n")
            return EXIT_USAGE

        if args.command == "script" and args.kind == "show":
            try:
                out.write(commands.script_text(args.level))
            except OSError:
                err.write(f"no built-in script for level {args.level}\n")
                return EXIT_USAGE
            return 0

        started = time.perf_counter()
        try:
            report = self.dispatch(args, config)
        except Exception as exc:
            return handle_exception(exc, args.json, out, err)
        report.wall_time = round(time.perf_counter() - started, 6)

        if args.json:
            out.write(json.dumps(success_response(report), indent=2) + "\n")
        else:
            out.write(render_text(report, trace=getattr(args, "trace", False)))
        logger.info(
            "command finished",
            extra={"fields": {"command": report.command, "exit_code": report.exit_code}},
        )
        return report.exit_code


def render_text(report: RunReport, trace: bool = False) -> str:
    lines: List[str] = [report.command]
    if trace:
        for sub in report.reports:
            for step in sub.get("steps", []):
                lines.append(
                    f"  step {step['index']} {step['kind']} {step.get('id') or ''}: "
                    f"{step['element']}  residual {step['residual']} "
                    f"({step['terms']} terms)"
                )
    for verdict in report.verdicts:
        lines.append(f"  {verdict}")
    if report.indices:
        lines.append("  indices: " + ", ".join(str(i) for i in report.indices))
    if report.assumptions:
        lines.append("  assumptions: " + "; ".join(report.assumptions))
    lines.append(f"  {'OK' if report.ok else 'FAILED'} in {report.wall_time:.3f}s")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    return ConverseApp().run(argv)

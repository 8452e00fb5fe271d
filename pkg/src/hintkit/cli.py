"""Command-line interface.

Subcommands:

    eval MODEL --observe X [--observe X]... [--hypothesis H]...
         [--prior L=R,...] [--format table|json]
    table MODEL
    posterior MODEL --prior L=R,... [--observe X]...
    check MODEL [--observe X]...
    builtin NAME [--param k=v]...

Exit codes: 0 success, 1 usage error or enumeration guard, 2 model or
argument validation error, 3 conflicting or impossible evidence, 4 oracle
mismatch or Bayes disagreement.

Observation and parameter labels may begin with '-' (the built-in
pregnancy model uses "-1" and "+1"), so option values are glued to their
flag with '=' before argparse sees them.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .catalog import BUILTIN_NAMES, BuiltinSpec, build
from .errors import (
    EnumerationLimit,
    ImpossibleObservation,
    TotalConflict,
    ValidationError,
    ZeroEvidence,
)
from .frames import Distribution, Frame, FrameSubset
from .mass import MassFunction
from .models import check_bayes_consistency, infer_with_report
from .modelfile import load_model, serialize_model
from .oracle import oracle_check
from .rationals import decimal_str, exact


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().rstrip()}\n{self.prog}: error: {message}")


_VALUE_FLAGS = ("--observe", "--hypothesis", "--prior", "--format", "--param")


def _glue_flag_values(argv: Sequence[str]) -> list[str]:
    """Rewrite '--flag value' to '--flag=value' so values may start with '-'."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def build_parser() -> _Parser:
    parser = _Parser(prog="hintkit", description="Exact evidential inference.")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    commands.required = True

    p_eval = commands.add_parser("eval", help="support and plausibility of hypotheses")
    p_eval.add_argument("model", help="model file")
    p_eval.add_argument("--observe", action="append", default=[], metavar="X")
    p_eval.add_argument("--hypothesis", action="append", default=[], metavar="L1+L2")
    p_eval.add_argument("--prior", metavar="L=R,...")
    p_eval.add_argument("--format", choices=("table", "json"), default="table")
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = commands.add_parser("table", help="conditional table P(x | t)")
    p_table.add_argument("model")
    p_table.set_defaults(handler=_cmd_table)

    p_post = commands.add_parser("posterior", help="hint-based result versus Bayes")
    p_post.add_argument("model")
    p_post.add_argument("--prior", required=True, metavar="L=R,...")
    p_post.add_argument("--observe", action="append", default=[], metavar="X")
    p_post.set_defaults(handler=_cmd_posterior)

    p_check = commands.add_parser("check", help="joint-enumeration oracle check")
    p_check.add_argument("model")
    p_check.add_argument("--observe", action="append", default=[], metavar="X")
    p_check.set_defaults(handler=_cmd_check)

    p_builtin = commands.add_parser("builtin", help="write a built-in model file")
    p_builtin.add_argument("name", help="one of: " + ", ".join(BUILTIN_NAMES))
    p_builtin.add_argument("--param", action="append", default=[], metavar="k=v")
    p_builtin.set_defaults(handler=_cmd_builtin)
    return parser


def _parse_prior(frame: Frame, text: str) -> Distribution:
    mapping = {}
    for chunk in text.split(","):
        label, sep, value = chunk.partition("=")
        if not sep or not label:
            raise ValidationError(f"expected label=probability, got {chunk!r}")
        if label in mapping:
            raise ValidationError(f"label {label!r} given twice in the prior")
        mapping[label] = exact(value)
    return Distribution.from_mapping(frame, mapping)


def parse_hypothesis(frame: Frame, text: str) -> FrameSubset:
    """Parse a '+'-joined label list; a leading '~' takes the complement."""
    if not text:
        raise ValidationError("empty hypothesis")
    if text in frame.labels:
        return frame.singleton(text)
    if text.startswith("~"):
        return frame.subset(_split_labels(frame, text[1:])).complement()
    return frame.subset(_split_labels(frame, text))


def _split_labels(frame: Frame, text: str) -> list[str]:
    # Longest-match with backtracking: labels themselves may contain '+'.
    ordered = sorted(frame.labels, key=len, reverse=True)

    def walk(pos: int):
        for label in ordered:
            if not text.startswith(label, pos):
                continue
            end = pos + len(label)
            if end == len(text):
                return [label]
            if text[end] == "+":
                rest = walk(end + 1)
                if rest is not None:
                    return [label] + rest
        return None

    found = walk(0)
    if found is None:
        raise ValidationError(
            f"cannot read {text!r} as '+'-joined labels of {'/'.join(frame.labels)}"
        )
    return found


def _pair(value: Fraction) -> str:
    return f"{value} ({decimal_str(value)})"


def _subset_str(subset: FrameSubset) -> str:
    return "{%s}" % ", ".join(subset)


def _json_value(value: Fraction) -> dict:
    return {"rational": str(value), "decimal": decimal_str(value)}


def _cmd_eval(args, out: TextIO) -> int:
    model = load_model(args.model)
    theta = model.parameter_frame
    prior = _parse_prior(theta, args.prior) if args.prior else None
    mass, report = infer_with_report(model, args.observe, prior)
    hypotheses = [theta.singleton(label) for label in theta.labels]
    for text in args.hypothesis:
        hypotheses.append(parse_hypothesis(theta, text))

    if args.format == "json":
        payload = {
            "observations": list(args.observe),
            "conflict": _json_value(report.weight),
            "focal_sets": [
                {"labels": list(s), "mass": _json_value(w)} for s, w in mass.items()
            ],
            "hypotheses": [
                {
                    "labels": list(h),
                    "support": _json_value(mass.support(h)),
                    "plausibility": _json_value(mass.plausibility(h)),
                }
                for h in hypotheses
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
        return 0

    out.write("observations: %s\n" % (", ".join(args.observe) if args.observe else "(none)"))
    out.write(f"conflict weight: {_pair(report.weight)}\n")
    out.write("focal sets:\n")
    for subset, weight in mass.items():
        out.write(f"  {_subset_str(subset)}: {_pair(weight)}\n")
    out.write("hypotheses:\n")
    for h in hypotheses:
        out.write(
            f"  {_subset_str(h)}: sp = {_pair(mass.support(h))}, "
            f"pl = {_pair(mass.plausibility(h))}\n"
        )
    return 0


def _cmd_table(args, out: TextIO) -> int:
    model = load_model(args.model)
    dm = model.distribution_model()
    out.write("conditional table P(observation | parameter):\n")
    for t in model.parameter_frame.labels:
        cells = "  ".join(
            f"{x} = {_pair(dm.probability(x, given=t))}"
            for x in model.observation_frame.labels
        )
        out.write(f"  {t}:  {cells}\n")
    return 0


def _cmd_posterior(args, out: TextIO) -> int:
    model = load_model(args.model)
    prior = _parse_prior(model.parameter_frame, args.prior)
    report = check_bayes_consistency(model, prior, args.observe)
    out.write("parameter: evidential | bayes\n")
    for label in model.parameter_frame.labels:
        left = report.with_prior.support_table[label]
        right = report.with_prior.posterior_table[label]
        out.write(f"  {label}: {_pair(left)} | {_pair(right)}\n")
    agrees = report.with_prior.agrees
    out.write("verdict: %s\n" % ("AGREE" if agrees else "DISAGREE"))
    return 0 if agrees else 4


def _mass_lines(mass: MassFunction) -> str:
    return "".join(f"    {_subset_str(s)}: {_pair(w)}\n" for s, w in mass.items())


def _cmd_check(args, out: TextIO) -> int:
    model = load_model(args.model)
    report = oracle_check(model, args.observe)
    if report.passed:
        out.write("oracle: PASS\n")
        return 0
    out.write("oracle: FAIL\n")
    out.write("  joint enumeration:\n" + _mass_lines(report.oracle_mass))
    out.write("  incremental combination:\n" + _mass_lines(report.combined_mass))
    return 4


def _cmd_builtin(args, out: TextIO) -> int:
    params = {}
    for raw in args.param:
        key, sep, value = raw.partition("=")
        if not sep or not key:
            raise ValidationError(f"expected k=v, got {raw!r}")
        if key in params:
            raise ValidationError(f"parameter {key!r} given twice")
        params[key] = exact(value)
    model = build(BuiltinSpec(args.name, params))
    out.write(serialize_model(model))
    return 0


def run_cli(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Run one command; returns the exit status and writes to the given streams."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_flag_values(argv))
    except UsageError as usage:
        print(usage, file=err)
        return 1
    except SystemExit as leave:  # --help
        return int(leave.code or 0)
    try:
        return args.handler(args, out)
    except ValidationError as invalid:
        print(f"error: {invalid}", file=err)
        return 2
    except (TotalConflict, ImpossibleObservation, ZeroEvidence) as conflict:
        print(f"error: {conflict}", file=err)
        return 3
    except EnumerationLimit as limit:
        print(f"error: {limit}", file=err)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))

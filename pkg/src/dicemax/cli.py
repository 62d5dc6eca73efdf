"""Command-line front end.

    dicemax ev --mode advantage --rolls 2 --sides 6
    dicemax converge --mode advantage --rolls 2 --sides 10,100,1000 --format csv

Exact values are written as ``"num/den"`` strings. Each one has a sibling
``<name>_approx`` field holding a rounded decimal string. Exit status is
0 on success, 1 on a domain or resource error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import re
import sys
import warnings
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence, TextIO

from . import asymptotics, exact, montecarlo
from .errors import DegenerateExperimentWarning, DomainError, ResourceError
from .exact import ExperimentSpec, Mode

SCHEMA_VERSION = "1.0"

_POWER = re.compile(r"^\s*(\d+)\s*(?:\^|\*\*)\s*(\d+)\s*$")
_SCI = re.compile(r"^\s*(\d+)[eE](\d+)\s*$")


def parse_count(text: str) -> int:
    """Integer in plain, ``a^b``, ``a**b`` or ``aEb`` form (all exact)."""
    m = _POWER.match(text) or _SCI.match(text)
    if m:
        base, exp = int(m.group(1)), int(m.group(2))
        if exp > 10_000:
            raise argparse.ArgumentTypeError(f"exponent too large in {text!r}")
        return base**exp if _POWER.match(text) else base * 10**exp
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_count_list(text: str) -> list[int]:
    return [parse_count(part) for part in text.split(",") if part.strip()]


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def format_decimal(q: Fraction, places: int) -> str:
    with localcontext() as ctx:
        ctx.prec = len(str(abs(q.numerator) // q.denominator)) + places + 10
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


class _Document:
    def __init__(self, command: str, params: dict[str, Any], precision: int):
        self.command = command
        self.params = params
        self.precision = precision
        self.rows: list[dict[str, Any]] = []
        self.extra: dict[str, Any] = {}

    def render_value(self, row: dict[str, Any]) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for key, value in row.items():
            if isinstance(value, Fraction):
                out[key] = format_rational(value)
                out[f"{key}_approx"] = format_decimal(value, self.precision)
            else:
                out[key] = value
        return out

    def add(self, **row: Any) -> None:
        self.rows.append(self.render_value(row))

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
        }
        doc.update(self.extra)
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            writer = csv.DictWriter(buf, fieldnames=list(self.rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(self.rows)
        return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicemax",
        description="Exact statistics for rolling a fair die and keeping the highest or lowest roll.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--precision", type=int, default=6, help="decimal places in *_approx fields")

    def mode_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=[m.value for m in Mode], required=True)

    def rolls_arg(p: argparse.ArgumentParser, required: bool = False) -> None:
        p.add_argument(
            "--rolls", "-r", type=parse_count, required=required,
            default=None, help="number of rolls (default 1 in single mode, else 2)",
        )

    def sides_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sides", "-s", type=parse_count, required=True)

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("pmf", parents=[common], help="exact outcome distribution")
    mode_arg(p); rolls_arg(p); sides_arg(p)

    p = sub.add_parser("ev", parents=[common], help="exact expected value")
    mode_arg(p); rolls_arg(p); sides_arg(p)

    p = sub.add_parser("limit", parents=[common], help="limit of E/s as sides grow")
    p.add_argument("--mode", choices=[Mode.ADVANTAGE.value, Mode.DISADVANTAGE.value], required=True)
    rolls_arg(p, required=True)

    for name, what in (("gain", "relative gain of keep-highest"), ("loss", "relative loss of keep-lowest")):
        p = sub.add_parser(name, parents=[common], help=what)
        rolls_arg(p, required=True); sides_arg(p)

    p = sub.add_parser("converge", parents=[common], help="E/s against its limit over a sides schedule")
    mode_arg(p); rolls_arg(p)
    p.add_argument("--sides", "-s", type=parse_count_list, required=True, help="comma-separated schedule")

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo run")
    mode_arg(p); rolls_arg(p); sides_arg(p)
    p.add_argument("--trials", type=parse_count, default=100_000)
    p.add_argument("--seed", type=parse_count, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli numbers B_0..B_n (B_1 = -1/2)")
    p.add_argument("--max-index", "-n", type=parse_count, required=True)

    return parser


def _spec(args: argparse.Namespace) -> ExperimentSpec:
    mode = Mode(args.mode)
    rolls = args.rolls if args.rolls is not None else (1 if mode is Mode.SINGLE else 2)
    return ExperimentSpec(args.sides, rolls, mode)


def _execute(args: argparse.Namespace) -> _Document:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "precision")}
    if "mode" in params and params.get("rolls") is None and args.command != "limit":
        params["rolls"] = 1 if args.mode == Mode.SINGLE.value else 2
    doc = _Document(args.command, params, args.precision)
    cmd = args.command

    if cmd == "pmf":
        dist = exact.pmf(_spec(args))
        for i, (f, p) in enumerate(zip(dist.frequencies, dist.probabilities), 1):
            doc.add(outcome=i, frequency=str(f), probability=p)
    elif cmd == "ev":
        spec = _spec(args)
        path = "faulhaber" if spec.sides > exact.FAST_PATH_THRESHOLD else "loop"
        if spec.mode is Mode.SINGLE:
            path = "closed"
        doc.add(mode=spec.mode.value, rolls=spec.rolls, sides=str(spec.sides),
                expected_value=exact.expected_value(spec), power_sum_path=path)
    elif cmd == "limit":
        doc.add(mode=args.mode, rolls=args.rolls, limit=asymptotics.limit_ratio(args.mode, args.rolls))
    elif cmd in ("gain", "loss"):
        fn = asymptotics.relative_gain if cmd == "gain" else asymptotics.relative_loss
        key = "relative_gain" if cmd == "gain" else "relative_loss"
        ExperimentSpec(args.sides, args.rolls, Mode.ADVANTAGE)  # validates
        doc.add(rolls=args.rolls, sides=str(args.sides),
                **{key: fn(args.rolls, args.sides)},
                limit=asymptotics.gain_loss_limit(args.rolls))
    elif cmd == "converge":
        mode = Mode(args.mode)
        rolls = args.rolls if args.rolls is not None else (1 if mode is Mode.SINGLE else 2)
        params["sides"] = [str(s) for s in args.sides]
        for row in asymptotics.convergence_table(mode, rolls, args.sides):
            doc.add(sides=str(row.sides), ratio=row.ratio, limit=row.limit, gap=row.gap)
    elif cmd == "simulate":
        spec = _spec(args)
        result = montecarlo.simulate(spec, args.trials, args.seed, workers=args.workers)
        dist = exact.pmf(spec)
        for i, (c, p) in enumerate(zip(result.counts, dist.probabilities), 1):
            doc.add(outcome=i, count=c, empirical_probability=repr(c / result.trials), exact_probability=p)
        mean = exact.expected_value(spec)
        doc.extra["summary"] = doc.render_value({
            "empirical_mean": repr(result.empirical_mean),
            "standard_error": repr(result.standard_error),
            "exact_mean": mean,
            "tv_distance": repr(montecarlo.empirical_pmf_distance(result, dist)),
        })
    elif cmd == "bernoulli":
        for j, b in enumerate(asymptotics.bernoulli_table(args.max_index)):
            doc.add(index=j, value=b)
    return doc


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse ``argv``, write the output document and return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.precision < 0:
        print("E_DOMAIN: --precision must be >= 0", file=stderr)
        return 1
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateExperimentWarning)
            doc = _execute(args)
    except (DomainError, ResourceError) as exc:
        print(f"{exc.code}: {exc}", file=stderr)
        return 1
    stdout.write(doc.to_csv() if args.format == "csv" else doc.to_json())
    return 0


def main() -> None:
    sys.exit(run())

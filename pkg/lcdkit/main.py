"""Command-line entry point for lcdkit
Single-code queries, formula evaluation, census runs and tables
"""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import BaseModel

from .core.config import LOG_LEVELS, settings
from .core.errors import LcdKitError, MatrixParseError
from .core.field import GF
from .core.matrix import Matrix
from .models.code import LcdType, LinearCode
from .models.schemas import (
    BasisResponse,
    CanonicalResponse,
    CheckResponse,
    CountResponse,
    MatrixResponse,
    NormalizeResponse,
)
from .services import counting, normalform, oracle
from .services.census_cache import CensusCache

logger = logging.getLogger(__name__)


class CommandOutput:
    """A response model plus its human-readable rendering"""

    def __init__(self, model: BaseModel, text: str):
        self.model = model
        self.text = text


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------
def cmd_check(args) -> CommandOutput:
    code = LinearCode.from_text(GF(args.field), args.gen)
    lcd = code.is_lcd()
    type_ = code.classify().value if lcd and 0 < code.k < code.n else None
    model = CheckResponse(
        p=code.field.p, n=code.n, k=code.k, lcd=lcd, type=type_, hull_dimension=code.hull_dimension()
    )
    if not lcd:
        text = f"LCD: no (hull dimension {model.hull_dimension})"
    elif type_ is None:
        text = "LCD: yes"
    else:
        text = f"LCD: yes, type {type_}"
    return CommandOutput(model, text)


def cmd_basis(args) -> CommandOutput:
    basis = normalform.lcd_basis(LinearCode.from_text(GF(args.field), args.gen))
    model = BasisResponse(kind=basis.kind.value, delta=basis.delta, rows=basis.rows.format())
    header = f"kind: {basis.kind.value}" + (f", delta {basis.delta}" if basis.delta is not None else "")
    return CommandOutput(model, "\n".join([header, *model.rows.split(";")]))


def cmd_normalize(args) -> CommandOutput:
    result = normalform.congruence_normalize(Matrix.parse(GF(args.field), args.sym))
    model = NormalizeResponse(
        shape=result.shape.value,
        rank=result.rank,
        delta=result.delta,
        q=result.q_transform.format(),
        normal=result.normal.format(),
    )
    lines = [f"shape: {model.shape}", f"rank: {model.rank}"]
    if model.delta is not None:
        lines.append(f"delta: {model.delta}")
    lines += [f"Q: {model.q}", f"normal: {model.normal}"]
    return CommandOutput(model, "\n".join(lines))


def cmd_shorten(args) -> CommandOutput:
    code = LinearCode.from_text(GF(args.field), args.gen)
    shortened = normalform.shorten_lcd(code, args.coord)
    model = MatrixResponse(
        matrix=shortened.gen.format(),
        rows=shortened.k,
        cols=shortened.n,
        min_distance=shortened.min_distance(),
    )
    return CommandOutput(model, model.matrix)


def cmd_count(args) -> CommandOutput:
    type_ = LcdType.parse(args.type) if args.type else None
    if args.field == 2:
        value = counting.count_lcd_binary(args.n, args.k, type_)
    else:
        value = counting.count_lcd_q(args.n, args.k, args.field, type_)
    model = CountResponse(
        p=args.field, n=args.n, k=args.k, type=type_.value if type_ else None, count=value
    )
    return CommandOutput(model, str(value))


def cmd_enumerate(args) -> CommandOutput:
    f = GF(args.field)
    cache_dir = args.cache or settings.cache_dir
    if cache_dir:
        report = CensusCache(cache_dir).get_or_compute(
            f.p, args.n, lambda: oracle.census(args.n, f, workers=args.workers)
        )
    else:
        report = oracle.census(args.n, f, workers=args.workers)
    if args.out:
        out = Path(args.out)
        out.write_text(report.to_csv() if out.suffix == ".csv" else report.to_json() + "\n")
        logger.info("census written to %s", out)
    return CommandOutput(report, report.to_csv().rstrip("\n"))


def cmd_dmax(args) -> CommandOutput:
    table = oracle.dlcd_table(args.nmax, GF(args.field), workers=args.workers)
    lines = ["n k d_lcd"] + [
        f"{e.n} {e.k} {'-' if e.d_lcd is None else e.d_lcd}" for e in table.entries
    ]
    lines.append(f"monotone: {'yes' if table.is_monotone else 'no'}")
    return CommandOutput(table, "\n".join(lines))


def cmd_transporter(args) -> CommandOutput:
    f = GF(args.field)
    q = normalform.transporter(LinearCode.from_text(f, args.gen1), LinearCode.from_text(f, args.gen2))
    return CommandOutput(MatrixResponse(matrix=q.format(), rows=q.rows, cols=q.cols), q.format())


def cmd_canonical(args) -> CommandOutput:
    type_ = LcdType.parse(args.type)
    gen, parity = normalform.canonical_code(type_, args.n, args.k, GF(args.field))
    model = CanonicalResponse(type=type_.value, gen=gen.format(), parity=parity.format())
    return CommandOutput(model, f"G: {model.gen}\nH: {model.parity}")


def cmd_order(args) -> CommandOutput:
    kind = oracle.GroupKind(args.kind)
    report = oracle.group_order_report(kind, args.size, GF(args.field), args.delta, args.brute)
    text = str(report.formula)
    if report.brute_force is not None:
        text += f" (brute force {report.brute_force}, {'match' if report.match else 'MISMATCH'})"
    return CommandOutput(report, text)


def cmd_mass(args) -> CommandOutput:
    report = oracle.mass_formula_check(args.n, args.k)
    text = (
        f"classes: {report.class_count}\nsum 1/|Aut|: {report.sum_inverse_aut}\n"
        f"rhs: {report.rhs}\nmatch: {'yes' if report.match else 'no'}"
    )
    return CommandOutput(report, text)


def cmd_ratio(args) -> CommandOutput:
    report = counting.asymptotic_ratio(args.n, args.k, args.field, args.which, args.precision)
    text = (
        f"ratio: {report.ratio_decimal} ({report.ratio})\n"
        f"limit: {report.limit_estimate}\ndistance: {report.distance}"
    )
    return CommandOutput(report, text)


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="Machine-readable output"
    )

    parser = argparse.ArgumentParser(prog="lcdkit", description="Toolkit for LCD codes")
    parser.add_argument("--json", action="store_true", default=False, help="Machine-readable output")
    parser.add_argument(
        "--log-level",
        default=None,
        type=str.upper,
        choices=LOG_LEVELS,
        help="Override LCDKIT_LOG_LEVEL",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    def field_arg(sub, default: int | None = None) -> None:
        sub.add_argument(
            "--field", type=int, default=default, required=default is None, help="Prime p"
        )

    sub = add("check", cmd_check, "Test whether a code is LCD and report its type")
    field_arg(sub)
    sub.add_argument("--gen", required=True, help="Generator matrix, rows separated by ';'")

    sub = add("basis", cmd_basis, "Orthonormal / symplectic / diagonal basis of an LCD code")
    field_arg(sub)
    sub.add_argument("--gen", required=True)

    sub = add("normalize", cmd_normalize, "Congruence normal form of a symmetric matrix")
    field_arg(sub)
    sub.add_argument("--sym", required=True, help="Symmetric matrix")

    sub = add("shorten", cmd_shorten, "LCD-preserving [n,k] -> [n,k-1] construction (binary)")
    field_arg(sub, default=2)
    sub.add_argument("--gen", required=True)
    sub.add_argument("--coord", type=int, default=0, help="Coordinate used by the construction")

    sub = add("count", cmd_count, "Exact number of LCD codes")
    field_arg(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--type", default=None, help="OO, OE, EO, Plus or Minus")

    sub = add("enumerate", cmd_enumerate, "Exhaustive census for one length")
    field_arg(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--out", default=None, help="Write the census (.json or .csv)")
    sub.add_argument("--cache", default=None, help="Census cache directory")
    sub.add_argument("--workers", type=int, default=None, help="Process pool size")

    sub = add("dmax", cmd_dmax, "Table of d_LCD(n,k)")
    field_arg(sub, default=2)
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--workers", type=int, default=None)

    sub = add("transporter", cmd_transporter, "Orthogonal Q mapping one LCD code to another")
    field_arg(sub)
    sub.add_argument("--gen1", required=True)
    sub.add_argument("--gen2", required=True)

    sub = add("canonical", cmd_canonical, "Canonical generator and parity-check matrices")
    field_arg(sub)
    sub.add_argument("--type", required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    sub = add("order", cmd_order, "Orthogonal / symplectic group orders")
    field_arg(sub, default=2)
    sub.add_argument("--kind", required=True, choices=[k.value for k in oracle.GroupKind])
    sub.add_argument("--size", type=int, required=True)
    sub.add_argument("--delta", type=int, default=1, choices=[1, -1], help="η(δ) of the form")
    sub.add_argument("--brute", action="store_true", help="Also count by brute force")

    sub = add("mass", cmd_mass, "Mass formula check for LCD_oo[n,k]")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    sub = add("ratio", cmd_ratio, "Finite counting ratio against its limit constant")
    field_arg(sub, default=2)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--which", default="lcd", help="lcd, oo, oe, eo, oo_power, lcd_q, plus, minus")
    sub.add_argument("--precision", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main CLI function"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help()
        return 2

    try:
        output = args.handler(args)
    except LcdKitError as e:
        if args.json:
            print(e.to_response().model_dump_json(indent=2))
        else:
            print(f"error ({e.error_type}): {e.message}", file=sys.stderr)
        return 2 if isinstance(e, MatrixParseError) else 1

    print(output.model.model_dump_json(indent=2) if args.json else output.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python
"""orderlattice command line.

Exit status: 0 on success, 1 when the answer is negative (not isomorphic,
not realizable, formula/oracle mismatch, failed axiom), 2 for usage, parse
and size errors. Data goes to stdout, diagnostics to stderr.
"""

import functools
import sys
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from orderlattice.errors import GroupSpecError, NotRealizable, SizeLimitError
from orderlattice.group.model import AbelianGroup
from orderlattice.group.notation import parse_group_spec
from orderlattice.group.oracle import DEFAULT_ORACLE_CAP, enumerate_spectrum
from orderlattice.group.reconstruct import reconstruct as reconstruct_group
from orderlattice.group.spectra import count_order, spectrum
from orderlattice.io import formats
from orderlattice.lattice.elattice import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_TRIPLE_CAP,
    build_explicit,
    check_axioms,
    descriptor,
    iso,
)
from orderlattice.util import configure_logging, orjson_dump, stderr_console
from orderlattice.util.arith import DEFAULT_DIVISOR_CAP

EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class GroupSpecType(click.ParamType):
    name = "group"

    def convert(self, value: Any, param, ctx) -> AbelianGroup:
        if isinstance(value, AbelianGroup):
            return value

        try:
            return parse_group_spec(value)
        except GroupSpecError as e:
            self.fail(str(e), param, ctx)


GROUP = GroupSpecType()


def fail(message: str, code: int) -> None:
    stderr_console().print(f"[bold red]error:[/bold red] {escape(message)}")
    sys.exit(code)


def handle_errors(command: Callable) -> Callable:
    """Size and argument errors raised inside a command exit with status 2."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (SizeLimitError, ValueError) as e:
            fail(str(e), EXIT_USAGE)

    return wrapper


def json_option(command: Callable) -> Callable:
    return click.option("--json", "as_json", is_flag=True, help="Emit JSON")(command)


def divisor_cap_option(command: Callable) -> Callable:
    return click.option(
        "--divisor-cap",
        type=click.IntRange(min=1),
        default=DEFAULT_DIVISOR_CAP,
        show_default=True,
        help="Maximum number of divisors of the exponent to materialize",
    )(command)


@click.group(context_settings={"auto_envvar_prefix": "ORDERLATTICE"})
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
def main(verbose: bool) -> None:
    """Element-order spectra and order canonical E-lattices of finite abelian groups."""
    configure_logging(verbose)


@main.command(name="spectrum")
@click.argument("group", type=GROUP)
@json_option
@divisor_cap_option
@handle_errors
def spectrum_command(group: AbelianGroup, as_json: bool, divisor_cap: int) -> None:
    """Number of elements of every order in GROUP."""
    spec = spectrum(group, divisor_cap)

    if as_json:
        click.echo(formats.spectrum_to_json(spec))

        return

    table = Table(title=escape(group.spec))
    table.add_column("order", justify="right")
    table.add_column("count", justify="right")

    for order, count in spec:
        table.add_row(str(order), str(count))
    Console().print(table)


@main.command()
@click.argument("group", type=GROUP)
@click.argument("d", type=click.IntRange(min=1))
@json_option
@handle_errors
def count(group: AbelianGroup, d: int, as_json: bool) -> None:
    """Number of elements of order D in GROUP."""
    n = count_order(group, d)

    if as_json:
        click.echo(orjson_dump({"group": group.spec, "order": str(d), "count": str(n)}))
    else:
        click.echo(str(n))


@main.command()
@click.argument("group", type=GROUP)
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["text", "json", "dot"]),
    default="text",
    show_default=True,
)
@json_option
@divisor_cap_option
@handle_errors
def lattice(
    group: AbelianGroup, output_format: str, as_json: bool, divisor_cap: int
) -> None:
    """Order canonical E-lattice descriptor of GROUP.

    `--json` is short for `--format json`."""

    if as_json and output_format == "dot":
        raise click.UsageError("--json cannot be combined with --format dot")
    d = descriptor(group, divisor_cap)

    if as_json or output_format == "json":
        click.echo(orjson_dump(formats.descriptor_to_dict(d)))
    elif output_format == "dot":
        click.echo(formats.descriptor_to_dot(d))
    else:
        table = Table(title=escape(f"{group.spec}: Fix phi = divisors of {d.exponent}"))
        table.add_column("order", justify="right")
        table.add_column("class size", justify="right")
        table.add_column("covered by", justify="left")
        covers = d.fix_lattice.covers()

        for order in d.fix_lattice.values:
            above = ", ".join(str(b) for a, b in covers if a == order)
            table.add_row(str(order), str(d.class_size[order]), above)
        Console().print(table)


@main.command(name="iso")
@click.argument("group", type=GROUP)
@click.argument("other", type=GROUP)
@json_option
@divisor_cap_option
@handle_errors
def iso_command(
    group: AbelianGroup, other: AbelianGroup, as_json: bool, divisor_cap: int
) -> None:
    """Decide whether GROUP and OTHER have isomorphic E-lattices."""
    result = iso(group, other, divisor_cap)

    if as_json:
        click.echo(orjson_dump(formats.iso_to_dict(group, other, result)))
    else:
        click.echo(result.decision.value)

        if result.witness is not None:
            pairs = ", ".join(f"{p} -> {q}" for p, q in sorted(result.witness.items()))
            click.echo(f"witness: {pairs or '(empty)'}")

    if not result.isomorphic:
        sys.exit(EXIT_NEGATIVE)


@main.command(name="reconstruct")
@click.argument("spectrum_file", type=click.File("r", encoding="utf-8"))
@click.option("--expect", type=GROUP, default=None, help="Group the result must match")
@json_option
@divisor_cap_option
@handle_errors
def reconstruct_command(
    spectrum_file, expect: Optional[AbelianGroup], as_json: bool, divisor_cap: int
) -> None:
    """Recover the group whose order spectrum is in SPECTRUM_FILE (- for stdin)."""
    candidate = formats.candidate_from_json(spectrum_file.read())

    try:
        group = reconstruct_group(candidate, divisor_cap)
    except NotRealizable as e:
        if as_json:
            error = {"error": e.reason.value, "detail": e.detail, "prime": e.prime}
            click.echo(orjson_dump(error), err=True)
        else:
            stderr_console().print(f"not realizable: {escape(str(e))}")
        sys.exit(EXIT_NEGATIVE)

    if as_json:
        document = formats.group_to_dict(group)
        click.echo(
            orjson_dump(
                {
                    "group": document["group"],
                    "invariant_factors": document["invariant_factors"],
                }
            )
        )
    else:
        click.echo(group.spec)

    if expect is not None and expect != group:
        fail(f"expected {expect.spec}, reconstructed {group.spec}", EXIT_NEGATIVE)


@main.command()
@click.argument("group", type=GROUP)
@click.option(
    "--cap",
    type=click.IntRange(min=1),
    default=DEFAULT_ORACLE_CAP,
    show_default=True,
    help="Maximum number of elements the oracle enumerates",
)
@click.option("--num-workers", "-w", type=click.IntRange(min=1), default=1)
@json_option
@handle_errors
def verify(group: AbelianGroup, cap: int, num_workers: int, as_json: bool) -> None:
    """Compare the counting formula with brute-force enumeration."""
    formula = spectrum(group)
    brute = enumerate_spectrum(
        group.invariant_factors, cap=cap, num_workers=num_workers, progress=True
    )
    orders = sorted(set(formula.entries) | set(brute.entries))
    agree = formula.entries == brute.entries

    if as_json:
        rows = [
            {
                "order": str(d),
                "formula": str(formula.count(d)),
                "oracle": str(brute.count(d)),
            }
            for d in orders
        ]
        click.echo(
            orjson_dump({"group": group.spec, "agree": agree, "entries": rows})
        )
    else:
        table = Table(title=escape(f"{group.spec}: formula vs. enumeration"))

        for column in ("order", "formula", "oracle"):
            table.add_column(column, justify="right")
        table.add_column("")

        for d in orders:
            same = formula.count(d) == brute.count(d)
            mark = "[green]ok[/green]" if same else "[red]MISMATCH[/red]"
            table.add_row(str(d), str(formula.count(d)), str(brute.count(d)), mark)
        Console().print(table)
        click.echo("agree" if agree else "mismatch")

    if not agree:
        sys.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("group", type=GROUP)
@json_option
@handle_errors
def canonical(group: AbelianGroup, as_json: bool) -> None:
    """Invariant factors and primary decomposition of GROUP."""
    document = formats.group_to_dict(group)

    if as_json:
        click.echo(orjson_dump(document))

        return

    click.echo(group.spec)
    factors = ", ".join(document["invariant_factors"]) or "(none)"
    click.echo(f"invariant factors: {factors}")

    for c in group.components:
        parts = " x ".join(f"Z{q}" for q in c.cyclic_factors())
        click.echo(f"  {c.prime}-part: {parts}  partition {list(c.partition)}")
    click.echo(f"order {group.order}, exponent {group.exponent}")


@main.command()
@click.argument("group", type=GROUP)
@click.option(
    "--cap",
    type=click.IntRange(min=1),
    default=DEFAULT_ELEMENT_CAP,
    show_default=True,
    help="Maximum carrier size",
)
@click.option(
    "--triple-cap",
    type=click.IntRange(min=1),
    default=DEFAULT_TRIPLE_CAP,
    show_default=True,
    help="Maximum carrier size for the associativity scan",
)
@json_option
@handle_errors
def axioms(group: AbelianGroup, cap: int, triple_cap: int, as_json: bool) -> None:
    """Check the E-lattice axioms on the explicit carrier of GROUP."""
    explicit = build_explicit(group, element_cap=cap)
    report = check_axioms(explicit, triple_cap=triple_cap, pairwise_cap=cap)

    if as_json:
        click.echo(orjson_dump(formats.report_to_dict(group, report)))
    else:
        table = Table(title=escape(f"{group.spec}: {report.n_elements} elements"))
        table.add_column("axiom")
        table.add_column("status")
        table.add_column("witness / detail")
        styles = {"pass": "green", "fail": "red", "skipped": "yellow"}

        for check in report.checks:
            status = check.status.value
            note = str(check.witness) if check.witness is not None else check.detail
            table.add_row(
                check.name, f"[{styles[status]}]{status}[/]", escape(note)
            )
        Console().print(table)

    if not report.passed:
        sys.exit(EXIT_NEGATIVE)


if __name__ == "__main__":
    main()

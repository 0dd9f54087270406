import logging
import random
from functools import wraps
from typing import Iterable, Optional, Sequence

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich import box

from arithmonoid.arith import NormalForm, normal_form
from arithmonoid.numtheory import DomainError
from arithmonoid.oracle import InvariantViolation
from arithmonoid.padic import CantorPoint, cant, constant_zero

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


def configure_logging(debug: bool) -> None:
    """Route library logging through rich; DEBUG with --debug, else WARNING."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=True)],
        force=True,
    )


def handle_errors(func):
    """Map library exceptions onto the CLI exit codes."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DomainError as e:
            err_console.print(f"[red]error:[/red] {e}", highlight=False)
            raise typer.Exit(EXIT_DOMAIN_ERROR)
        except InvariantViolation as e:
            err_console.print(f"[bold red]invariant violation:[/bold red] {e}", highlight=False)
            raise typer.Exit(EXIT_INVARIANT_VIOLATION)

    return wrapper


def wants_json(ctx: typer.Context) -> bool:
    obj = ctx.find_root().obj or {}
    return bool(obj.get("json"))


def emit(ctx: typer.Context, model: BaseModel, text: str) -> None:
    """Print one result: a JSON document with --json, plain text otherwise."""
    if wants_json(ctx):
        typer.echo(model.model_dump_json())
    else:
        console.print(text, highlight=False, markup=False, soft_wrap=True)


def emit_json_lines(models: Sequence[BaseModel]) -> None:
    """One JSON document per line."""
    for model in models:
        typer.echo(model.model_dump_json())


def make_table(title: Optional[str], columns: Iterable[str], rows: Iterable[Iterable]) -> Table:
    table = Table(
        title=title,
        show_header=True,
        header_style="bold magenta",
        box=box.SIMPLE_HEAD,
        padding=(0, 2),
    )
    for column in columns:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    return table


def parse_gamma(p: int, gamma: str, digit_order: str) -> CantorPoint:
    """Read ``zero`` or ``cant:<a>`` into a Cantor point."""
    gamma = gamma.strip()
    if gamma == "zero":
        return constant_zero(p)
    if gamma.startswith("cant:"):
        value = gamma[len("cant:"):]
        if not value.isdigit():
            raise DomainError(f"cant:<a> needs a natural number, got {value!r}")
        return cant(p, int(value), digit_order)
    raise DomainError(f"unknown Cantor point {gamma!r}; use 'zero' or 'cant:<a>'")


def random_element(rng: random.Random, max_modulus: int) -> NormalForm:
    """A uniformly drawn normal form with both moduli at most max_modulus."""
    a = rng.randint(1, max_modulus)
    c = rng.randint(1, max_modulus)
    return normal_form(a, rng.randrange(a), c, rng.randrange(c))

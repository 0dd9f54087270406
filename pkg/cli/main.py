import json
import random
from pathlib import Path
from typing import List, Optional

import typer
from dotenv import load_dotenv
from rich.align import Align
from rich.panel import Panel

# Load environment variables from .env file
load_dotenv()

from arithmonoid.arith import apply, factor_into_prime_generators
from arithmonoid.classical import BicyclicElement, LeechElement, bicyclic_compose, leech_compose
from arithmonoid.config import config_value, get_config, set_config
from arithmonoid.numtheory import CongruenceClass, intersect as intersect_classes
from arithmonoid.oracle import InvariantViolation, check_chain
from arithmonoid.padic import (
    audit_cantor_corollary,
    distance,
    eval_gamma,
    norm,
    norm_table,
    summarize_audit,
)
from arithmonoid.polycyclic import POLY_ZERO, poly_compose, poly_pair
from cli.expression import evaluate, flatten, format_element, parse
from cli.models import (
    RESULT_MODELS,
    ApplyResult,
    AuditSummaryRow,
    ClassModel,
    DigitOrder,
    FactorResult,
    FuzzResult,
    IntersectResult,
    NormRow,
    OracleCheckResult,
    PAdicResult,
    PairModel,
    PolyModel,
    PrimeGenerator,
    RationalModel,
    element_model,
)
from cli.utils import (
    configure_logging,
    console,
    emit,
    emit_json_lines,
    handle_errors,
    make_table,
    parse_gamma,
    random_element,
    wants_json,
)

WELCOME_PATH = Path(__file__).parent / "static" / "welcome.txt"

app = typer.Typer(
    name="arithmonoid",
    help="arithmonoid CLI: exact arithmetic in the arithmetic inverse monoid and its classical submonoids. "
    "Factors compose like the algebra: the rightmost one acts first.",
    add_completion=True,  # Enable shell completion
)
padic_app = typer.Typer(help="p-adic order, norm, distance and Cantor-point evaluation.")
poly_app = typer.Typer(help="Polycyclic monoids P_k.")
bicyclic_app = typer.Typer(help="The bicyclic monoid, pairs [b,a].")
leech_app = typer.Typer(help="Leech's monoid, pairs [m,n].")
oracle_app = typer.Typer(help="Compare symbolic composition with brute-force partial injections.")
app.add_typer(padic_app, name="padic")
app.add_typer(poly_app, name="poly")
app.add_typer(bicyclic_app, name="bicyclic")
app.add_typer(leech_app, name="leech")
app.add_typer(oracle_app, name="oracle")


def show_welcome():
    welcome_content = f"{WELCOME_PATH.read_text()}\n"
    welcome_content += "[bold green]Monotone partial injections between congruence classes of N[/bold green]\n\n"
    welcome_content += "[bold]Start with:[/bold]\n"
    welcome_content += '  arithmonoid nf "dag(R(3,1)) * R(2,0)"\n'
    welcome_content += "  arithmonoid padic norm 2 48\n"
    welcome_content += "  arithmonoid --help"
    welcome_box = Panel(
        welcome_content,
        border_style="green",
        padding=(1, 2),
        title="Welcome to arithmonoid",
    )
    console.print(Align.center(welcome_box))


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Print one JSON document per result."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized checks."),
    debug: bool = typer.Option(False, "--debug", help="Show library debug logging."),
):
    configure_logging(debug)
    if seed is not None:
        set_config({"seed": seed})
    ctx.obj = {"json": json_output, "seed": get_config()["seed"]}
    if ctx.invoked_subcommand is None:
        show_welcome()


@app.command()
@handle_errors
def nf(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help='Element expression, e.g. "dag(R(3,1)) * R(2,0)".'),
):
    """Print the normal form of an expression."""
    e = evaluate(parse(expr))
    emit(ctx, element_model(e), format_element(e))


@app.command("apply")
@handle_errors
def apply_command(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Element expression."),
    n: int = typer.Argument(..., help="Natural number to evaluate at."),
):
    """Evaluate an expression at n; prints undef outside its domain."""
    e = evaluate(parse(expr))
    value = apply(e, n)
    result = ApplyResult(element=element_model(e), n=str(n), value=None if value is None else str(value))
    emit(ctx, result, "undef" if value is None else str(value))


@app.command()
@handle_errors
def intersect(
    ctx: typer.Context,
    a: int = typer.Argument(..., help="Modulus of the first class."),
    b: int = typer.Argument(..., help="Residue of the first class."),
    c: int = typer.Argument(..., help="Modulus of the second class."),
    d: int = typer.Argument(..., help="Residue of the second class."),
):
    """Intersect aN+b with cN+d by the Chinese remainder theorem."""
    left, right = CongruenceClass(a, b), CongruenceClass(c, d)
    meet = intersect_classes(left, right)
    result = IntersectResult(
        left=ClassModel.of(left),
        right=ClassModel.of(right),
        intersection=None if meet is None else ClassModel.of(meet),
    )
    emit(ctx, result, "empty" if meet is None else str(meet))


@app.command()
@handle_errors
def factor(
    ctx: typer.Context,
    a: int = typer.Argument(..., help="Modulus, at least 2."),
    b: int = typer.Argument(..., help="Residue below a."),
):
    """Write R(a,b) as a product of prime-order generators."""
    factors = factor_into_prime_generators(a, b)
    if wants_json(ctx):
        emit_json_lines([
            FactorResult(
                a=str(a),
                b=str(b),
                factors=[PrimeGenerator(p=str(p), q=str(q)) for p, q in factors],
            )
        ])
        return
    console.print(" ∘ ".join(f"R({p},{q})" for p, q in factors), highlight=False, soft_wrap=True)


@app.command()
def schema(
    name: Optional[str] = typer.Argument(None, help=f"One of: {', '.join(RESULT_MODELS)}."),
):
    """Print the JSON schema of the --json result documents."""
    if name is None:
        schemas = {key: model.model_json_schema() for key, model in RESULT_MODELS.items()}
    elif name in RESULT_MODELS:
        schemas = RESULT_MODELS[name].model_json_schema()
    else:
        console.print(f"[red]error:[/red] unknown result type {name!r}")
        raise typer.Exit(1)
    typer.echo(json.dumps(schemas, indent=2, ensure_ascii=False))


# p-adic


def _emit_padic(ctx: typer.Context, operation: str, p: int, arguments: List[int], value) -> None:
    result = PAdicResult(
        operation=operation,
        p=str(p),
        arguments=[str(x) for x in arguments],
        value=RationalModel.of(value),
    )
    emit(ctx, result, str(value))


def _resolve_output(output: Optional[Path], save: bool, name: str) -> Optional[Path]:
    if output is None and save:
        return Path(config_value("results_dir")) / name
    return output


@padic_app.command("norm")
@handle_errors
def padic_norm(
    ctx: typer.Context,
    p: int = typer.Argument(..., help="A prime."),
    n: int = typer.Argument(..., help="A natural number."),
):
    """The p-adic norm of n."""
    _emit_padic(ctx, "norm", p, [n], norm(p, n))


@padic_app.command("dist")
@handle_errors
def padic_dist(
    ctx: typer.Context,
    p: int = typer.Argument(..., help="A prime."),
    a: int = typer.Argument(...),
    b: int = typer.Argument(...),
):
    """The p-adic distance between a and b."""
    _emit_padic(ctx, "dist", p, [a, b], distance(p, a, b))


@padic_app.command("eval")
@handle_errors
def padic_eval(
    ctx: typer.Context,
    p: int = typer.Argument(..., help="A prime."),
    n: int = typer.Argument(..., help="A positive natural number."),
    gamma: str = typer.Option("zero", "--gamma", help="Cantor point: zero or cant:<a>."),
    digit_order: Optional[DigitOrder] = typer.Option(
        None, "--digit-order", help="Digit order for cant:<a>; defaults to the configured one."
    ),
):
    """Evaluate a Cantor point at n."""
    order = config_value("digit_order", digit_order.value if digit_order is not None else None)
    point = parse_gamma(p, gamma, order)
    _emit_padic(ctx, f"eval[{gamma}]", p, [n], eval_gamma(point, n))


@padic_app.command("table")
@handle_errors
def padic_table(
    ctx: typer.Context,
    p: int = typer.Argument(..., help="A prime."),
    n_max: int = typer.Argument(..., help="Largest n in the table."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write CSV here instead of printing."),
    save: bool = typer.Option(False, "--save", help="Write CSV into the configured results directory."),
):
    """The norms of 1..n_max."""
    table = norm_table(p, n_max)
    output = _resolve_output(output, save, f"norm_p{p}_{n_max}.csv")
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(output, index=False)
        console.print(f"[green]wrote[/green] {len(table)} rows to {output}")
        return
    if wants_json(ctx):
        emit_json_lines([
            NormRow(n=str(row[0]), numerator=str(row[1]), denominator=str(row[2]))
            for row in table.itertuples(index=False)
        ])
        return
    console.print(make_table(f"{p}-adic norm", table.columns, table.itertuples(index=False)))


@padic_app.command("audit")
@handle_errors
def padic_audit(
    ctx: typer.Context,
    prime: Optional[List[int]] = typer.Option(None, "--prime", help="Prime to audit; repeatable."),
    a_max: Optional[int] = typer.Option(None, "--a-max"),
    n_max: Optional[int] = typer.Option(None, "--n-max"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the full report as CSV."),
    save: bool = typer.Option(False, "--save", help="Write the report into the configured results directory."),
):
    """Compare Cantor-point evaluation with p-adic distance over a grid."""
    report = audit_cantor_corollary(prime or None, a_max, n_max)
    output = _resolve_output(output, save, "cantor_audit.csv")
    summary = summarize_audit(report)
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        report.to_csv(output, index=False)
    if wants_json(ctx):
        emit_json_lines([
            AuditSummaryRow(
                p=str(row["p"]),
                digit_order=DigitOrder(row["digit_order"]),
                holds=str(row["holds"]),
                fails=str(row["fails"]),
                first_counterexample=row["first_counterexample"],
            )
            for row in summary.to_dict("records")
        ])
        return
    console.print(make_table("Cantor-point audit", summary.columns, summary.itertuples(index=False)))
    if output is not None:
        console.print(f"[green]wrote[/green] {len(report)} rows to {output}")


# classical monoids


@poly_app.command("compose")
@handle_errors
def poly_compose_command(
    ctx: typer.Context,
    k: int = typer.Argument(..., help="Alphabet size, at least 2."),
    v: str = typer.Argument(..., help="Upper word of the left factor."),
    u: str = typer.Argument(..., help="Lower word of the left factor."),
    v2: str = typer.Argument(..., metavar="V'", help="Upper word of the right factor."),
    u2: str = typer.Argument(..., metavar="U'", help="Lower word of the right factor."),
):
    """Compose v‡u with v'‡u' in P_k."""
    result = poly_compose(poly_pair(k, v, u), poly_pair(k, v2, u2))
    emit(ctx, PolyModel.of(k, result), "zero" if result == POLY_ZERO else str(result))


@bicyclic_app.command("compose")
@handle_errors
def bicyclic_compose_command(
    ctx: typer.Context,
    d: int = typer.Argument(...),
    c: int = typer.Argument(...),
    b: int = typer.Argument(...),
    a: int = typer.Argument(...),
):
    """Compose [d,c] with [b,a]."""
    result = bicyclic_compose(BicyclicElement(d, c), BicyclicElement(b, a))
    emit(ctx, PairModel(first=str(result.b), second=str(result.a)), f"[{result.b},{result.a}]")


@leech_app.command("compose")
@handle_errors
def leech_compose_command(
    ctx: typer.Context,
    m: int = typer.Argument(...),
    n: int = typer.Argument(...),
    p: int = typer.Argument(...),
    q: int = typer.Argument(...),
):
    """Compose [m,n] with [p,q]."""
    result = leech_compose(LeechElement(m, n), LeechElement(p, q))
    emit(ctx, PairModel(first=str(result.m), second=str(result.n)), f"[{result.m},{result.n}]")


# oracle


@oracle_app.command("check")
@handle_errors
def oracle_check(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Element expression."),
    window: Optional[int] = typer.Option(None, "--window", "-N", help="Oracle window {0..N}."),
):
    """Diff the symbolic normal form of an expression against the oracles."""
    node = parse(expr)
    symbolic = evaluate(node)
    report = check_chain(flatten(node), window, symbolic=symbolic, raise_on_failure=False)
    result = OracleCheckResult(
        expression=expr,
        symbolic=element_model(symbolic),
        window=str(report.window),
        margin=str(report.margin),
        compared_points=str(report.compared_points),
        core_agrees=report.core_agrees,
        pointwise_mismatches=str(len(report.pointwise_mismatches)),
        ok=report.ok,
    )
    if wants_json(ctx):
        emit_json_lines([result])
    else:
        style = "green" if report.ok else "red"
        console.print(
            Panel(
                f"normal form: {format_element(symbolic)}\n"
                f"window: {{0..{report.window}}}, margin {report.margin}\n"
                f"core agrees: {report.core_agrees}\n"
                f"pointwise mismatches: {len(report.pointwise_mismatches)}",
                title="ok" if report.ok else "MISMATCH",
                border_style=style,
            ),
        )
    if not report.ok:
        raise InvariantViolation(f"{expr!r} disagrees with the oracle")


@oracle_app.command("fuzz")
@handle_errors
def oracle_fuzz(
    ctx: typer.Context,
    count: Optional[int] = typer.Option(None, "--count", help="Number of random pairs."),
    window: Optional[int] = typer.Option(None, "--window", "-N", help="Oracle window {0..N}."),
):
    """Check compose on random normal-form pairs against the oracles."""
    config = get_config()
    count = config["sample_size"] if count is None else count
    seed = ctx.find_root().obj["seed"]
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        f = random_element(rng, config["max_modulus"])
        g = random_element(rng, config["max_modulus"])
        report = check_chain([f, g], window, raise_on_failure=False)
        if not report.ok:
            failures.append(f"{format_element(f)} * {format_element(g)}")
    result = FuzzResult(
        seed=None if seed is None else str(seed),
        count=str(count),
        window=str(window if window is not None else config["window"]),
        failures=failures,
    )
    if wants_json(ctx):
        emit_json_lines([result])
    elif failures:
        console.print(make_table("oracle failures", ["pair"], ([f] for f in failures)))
    else:
        console.print(f"[green]{count} random pairs agree with the oracle[/green]")
    if failures:
        raise InvariantViolation(f"{len(failures)} of {count} pairs disagree with the oracle")


if __name__ == "__main__":
    app()

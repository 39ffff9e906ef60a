"""
CLI Interface

Command-line front end: classification tables, fixed-vertex witnesses,
desk-scale verification and line-graph orders.

Exit codes: 0 verified / classified, 1 usage error, 2 verification failure.
"""

import logging
import sys
from dataclasses import dataclass
from typing import Literal, Optional

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.application.cayleycheck import (
    SearchBudget,
    contradicts_classification,
    search_regular_subgroup,
    verify_involutions_fix,
    verify_lifted_involutions_fix,
    verify_pairs_fix,
)
from src.application.tables import kneser_rows, line_odd_rows, linegraph_order_rows, odd_rows, parse_range
from src.domain.errors import InvariantViolation, KneserError
from src.domain.kneser import KneserParams, validate
from src.domain.models import SweepMode
from src.domain.perm import involution_shape, parse_cycles
from src.domain.witness import classify_kneser, disjoint_fixed_pair, fixed_vertex
from src.infrastructure.config import AppConfig, get_config
from src.infrastructure.error_context import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, ErrorClassifier
from src.infrastructure.materialize import line_graph
from src.interfaces.renderers import (
    LINE_ORDER_FIELDS,
    render_classifications,
    render_json,
    render_line_orders,
    render_report,
    render_search,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class CommandConfig(BaseModel):
    """Root flags as parsed; validated before any computation."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Optional[str] = None
    output_format: Literal["tsv", "json"] = "tsv"
    max_materialize: Optional[int] = Field(default=None, ge=1)
    max_exhaustive_n: Optional[int] = Field(default=None, ge=1, le=16)
    workers: Optional[int] = Field(default=None, ge=1, le=64)
    log_level: Optional[Literal["DEBUG", "INFO", "WARNING", "ERROR"]] = None


@dataclass
class CliState:
    command: CommandConfig
    config: AppConfig

    @property
    def output_format(self) -> str:
        return self.command.output_format


class KneserGroup(click.Group):
    """Runs commands non-standalone and turns results and errors into exit codes."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as exc:
            exc.show()
            code = EXIT_USAGE
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except (KneserError, ValidationError) as exc:
            context = ErrorClassifier.classify(exc)
            click.echo(f"Error ({context.error_type}): {context.message}", err=True)
            code = context.exit_code
        if standalone_mode:
            sys.exit(code)
        return code


def _emit(text: str) -> None:
    click.echo(text)


def _mode(state: CliState, sample: Optional[int], seed: Optional[int]) -> SweepMode:
    if sample is None and seed is None:
        return SweepMode.exhaustive()
    count = sample if sample is not None else state.config.sweep.sample_count
    return SweepMode.sampled(seed if seed is not None else state.config.sweep.seed, count)


def _params(n: int, k: int) -> KneserParams:
    try:
        return validate(n, k)
    except KneserError as exc:
        raise click.UsageError(str(exc)) from exc


def _range(text: str, minimum: int, option: str) -> range:
    try:
        values = parse_range(text)
    except KneserError as exc:
        raise click.BadParameter(str(exc), param_hint=option) from exc
    if values.start < minimum:
        raise click.BadParameter(f"values must be >= {minimum}, got {values.start}", param_hint=option)
    return values


@click.group(cls=KneserGroup)
@click.option("--format", "output_format", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
@click.option("--max-materialize", type=int, default=None, help="Largest vertex count to materialise.")
@click.option("--max-exhaustive-n", type=int, default=None, help="Largest n for exhaustive involution sweeps.")
@click.option("--workers", type=int, default=None, help="Worker processes for exhaustive sweeps.")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
)
@click.pass_context
def cli(ctx, output_format, max_materialize, max_exhaustive_n, workers, log_level):
    """Non-Cayley certification for Kneser graphs, odd graphs and their line graphs."""
    command = CommandConfig(
        command=ctx.invoked_subcommand,
        output_format=output_format,
        max_materialize=max_materialize,
        max_exhaustive_n=max_exhaustive_n,
        workers=workers,
        log_level=log_level.upper() if log_level else None,
    )
    config = get_config().with_overrides(
        max_materialize=command.max_materialize,
        max_exhaustive_n=command.max_exhaustive_n,
        workers=command.workers,
        log_level=command.log_level,
    )
    logging.basicConfig(level=config.log_level, format=LOG_FORMAT)
    logging.getLogger().setLevel(config.log_level)
    ctx.obj = CliState(command=command, config=config)


# =============================================================================
# CLASSIFY
# =============================================================================

@cli.group()
def classify():
    """Classification tables: verdict and theorem tag per instance."""


@classify.command("kneser")
@click.option("--n", "n", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--n-max", type=int, default=None, help="Every valid (n, k) with n <= N.")
@click.pass_obj
def classify_kneser_cmd(state: CliState, n, k, n_max):
    if n_max is not None:
        if n is not None or k is not None:
            raise click.UsageError("--n-max cannot be combined with --n/--k")
        if n_max < 5:
            raise click.BadParameter(f"must be >= 5, got {n_max}", param_hint="--n-max")
        rows = list(kneser_rows(n_max))
    else:
        if n is None or k is None:
            raise click.UsageError("classify kneser needs --n and --k, or --n-max")
        _params(n, k)
        rows = [classify_kneser(n, k)]
    _emit(render_classifications(rows, state.output_format))
    return EXIT_OK


@classify.command("odd")
@click.option("--k-range", required=True, help="Inclusive range A..B, A >= 1.")
@click.pass_obj
def classify_odd_cmd(state: CliState, k_range):
    rows = list(odd_rows(_range(k_range, 1, "--k-range")))
    _emit(render_classifications(rows, state.output_format))
    return EXIT_OK


@classify.command("line-odd")
@click.option("--k-range", required=True, help="Inclusive range A..B, A >= 2.")
@click.pass_obj
def classify_line_odd_cmd(state: CliState, k_range):
    rows = list(line_odd_rows(_range(k_range, 2, "--k-range")))
    _emit(render_classifications(rows, state.output_format))
    return EXIT_OK


# =============================================================================
# WITNESS
# =============================================================================

@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--perm", "perm_text", required=True, help='Cycle notation, e.g. "(1 2)(3 4)".')
@click.option("--pair", is_flag=True, help="Build a disjoint pair of fixed vertices (k even).")
@click.pass_obj
def witness(state: CliState, n, k, perm_text, pair):
    """Fixed vertex (or disjoint fixed pair) of an involution."""
    params = _params(n, k)
    theta = parse_cycles(perm_text, n)
    shape = involution_shape(theta)

    if pair:
        v, w = disjoint_fixed_pair(shape, params)
        found = {"v": str(v), "w": str(w)}
        lines = [f"v = {v}", f"w = {w}", "θ(v) = v", "θ(w) = w", "v ∩ w = ∅"]
    else:
        v = fixed_vertex(shape, params)
        found = {"v": str(v)}
        lines = [f"v = {v}", "θ(v) = v"]

    if state.output_format == "json":
        _emit(render_json({"n": n, "k": k, "perm": str(theta), **found, "verified": True}))
    else:
        _emit("\n".join(lines))
    return EXIT_OK


# =============================================================================
# VERIFY
# =============================================================================

@cli.group()
def verify():
    """Desk-scale verification sweeps and the regular-subgroup search."""


def _sample_options(func):
    func = click.option("--seed", type=int, default=None, help="Seed for a sampled sweep.")(func)
    func = click.option(
        "--sample", type=click.IntRange(min=1), default=None, help="Sample this many involutions."
    )(func)
    return func


def _finish_report(state: CliState, report) -> int:
    _emit(render_report(report, state.output_format))
    return EXIT_OK if report.verified else EXIT_VERIFICATION


@verify.command("involutions")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@_sample_options
@click.pass_obj
def verify_involutions_cmd(state: CliState, n, k, sample, seed):
    """Every involution of Sym([n]) fixes a vertex of K(n, k)."""
    report = verify_involutions_fix(
        _params(n, k),
        _mode(state, sample, seed),
        max_exhaustive_n=state.config.limits.max_exhaustive_n,
        workers=state.config.sweep.workers,
    )
    return _finish_report(state, report)


@verify.command("pairs")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@_sample_options
@click.pass_obj
def verify_pairs_cmd(state: CliState, n, k, sample, seed):
    """Every involution fixes two disjoint vertices of K(n, k), k even."""
    report = verify_pairs_fix(
        _params(n, k),
        _mode(state, sample, seed),
        max_exhaustive_n=state.config.limits.max_exhaustive_n,
        workers=state.config.sweep.workers,
    )
    return _finish_report(state, report)


@verify.command("lifted")
@click.option("--k", "k", type=int, required=True)
@_sample_options
@click.pass_obj
def verify_lifted_cmd(state: CliState, k, sample, seed):
    """Every involution of Sym([2k+1]) fixes a line-vertex of L(O_{k+1})."""
    report = verify_lifted_involutions_fix(
        k,
        _mode(state, sample, seed),
        max_exhaustive_n=state.config.limits.max_exhaustive_n,
        workers=state.config.sweep.workers,
    )
    return _finish_report(state, report)


@verify.command("regular-subgroup")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--max-degree", type=click.IntRange(min=1), default=None, help="Largest n the search accepts.")
@click.pass_obj
def verify_regular_subgroup_cmd(state: CliState, n, k, max_degree):
    """Exhaustive search for a subgroup of Sym([n]) regular on the k-subsets."""
    limits = state.config.limits
    budget = SearchBudget(
        max_degree=max_degree if max_degree is not None else limits.max_search_degree,
        max_subgroups=limits.max_subgroups,
        max_materialize=limits.max_materialize,
    )
    result = search_regular_subgroup(_params(n, k), budget)
    _emit(render_search(result, state.output_format))
    if contradicts_classification(result):
        tag = classify_kneser(n, k).theorem_tag.value
        logger.error(f"Regular subgroup found on {result.params}, classified NonCayley by {tag}")
        return EXIT_VERIFICATION
    return EXIT_OK


# =============================================================================
# LINEGRAPH ORDER
# =============================================================================

@cli.command("linegraph-order")
@click.option("--k-range", required=True, help="Inclusive range A..B, A >= 2.")
@click.option("--enumerate", "enumerate_", is_flag=True, help="Also count line-vertices by materialising.")
@click.pass_obj
def linegraph_order(state: CliState, k_range, enumerate_):
    """Order of L(O_{k+1}) per k, with the base-order residue mod 4."""
    rows = list(linegraph_order_rows(_range(k_range, 2, "--k-range")))
    fields = LINE_ORDER_FIELDS
    if enumerate_:
        fields = LINE_ORDER_FIELDS + ("enumerated",)
        for row in rows:
            graph = line_graph(KneserParams.odd(row["k"]), state.config.limits.max_materialize)
            row["enumerated"] = graph.number_of_nodes()
            if row["enumerated"] != row["line_order"]:
                raise InvariantViolation(
                    f"k={row['k']}: enumerated {row['enumerated']} line-vertices, formula gives {row['line_order']}"
                )
    _emit(render_line_orders(rows, state.output_format, fields))
    return EXIT_OK


def main():
    """Main entry point."""
    cli(prog_name="kneser-cert")


if __name__ == "__main__":
    main()

#!/usr/bin/env python
"""
Command line entry point.

    regdim analyze ideal.txt -i all --oracle
    regdim sweep --n 3 --max-exp 2 --exhaustive
    regdim examples --verify

Exit codes: 0 every check passed, 1 a verification failed, 2 bad input.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

import click
from dotenv import load_dotenv
from pydantic import ValidationError

from regdim.algebra.linalg import PrimeField
from regdim.config import Settings, get_settings
from regdim.corpus import CorpusSpec, named_example_table
from regdim.exceptions import InputError, InvariantViolation, VerificationFailure
from regdim.ideal_format import format_ideal, parse_ideal_file
from regdim.pipeline import analyze_ideal, raise_for_failures, run_sweep
from regdim.reports import render_analysis, render_sweep, to_json

# Load environment variables from .env file
load_dotenv()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2

logger = logging.getLogger("regdim_cli")


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format=LOG_FORMAT,
                        stream=sys.stderr, force=True)


def _prime_field(ctx, param, value) -> Optional[PrimeField]:
    if value is None:
        return None
    try:
        return PrimeField(p=value)
    except ValidationError:
        raise click.BadParameter("characteristic must be prime")


def _parse_indices(ctx, param, value) -> Optional[list[int]]:
    if value is None or value.strip().lower() == "all":
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected 'all' or a comma separated list of integers, got '{value}'")


def _field(settings: Settings, override: Optional[PrimeField]) -> PrimeField:
    if override is not None:
        return override
    try:
        return PrimeField(p=settings.characteristic)
    except ValidationError:
        raise click.BadParameter("characteristic must be prime", param_hint="REGDIM_CHARACTERISTIC")


def _input_failure(e: Exception) -> None:
    logger.error(f"Input error: {e}")
    click.echo(f"Error: {e}", err=True)
    sys.exit(EXIT_INPUT)


def _emit(payload: str, json_path: Optional[Path], pretty_text: Optional[str]) -> None:
    if json_path is not None:
        json_path.write_text(payload, encoding="utf-8")
        logger.info(f"Report written to {json_path}")
    if pretty_text is not None:
        click.echo(pretty_text, nl=False)
    elif json_path is None:
        click.echo(payload, nl=False)


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from REGDIM_LOG_LEVEL or INFO)")
@click.pass_context
def cli(ctx, log_level):
    """Regularity versus dimension of Ext modules of monomial ideals."""
    settings = get_settings({"log_level": log_level.upper() if log_level else None})
    _configure_logging(settings.log_level)
    ctx.obj = settings


@cli.command("analyze")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--char", "field", type=int, default=None, callback=_prime_field, help="Prime characteristic")
@click.option("-i", "indices", default="all", callback=_parse_indices, help="Ext indices: 'all' or e.g. '1,2'")
@click.option("--oracle", is_flag=True, help="Cross-check the Hilbert function with the Taylor complex")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the JSON report to this file")
@click.option("--pretty", is_flag=True, help="Print a summary table instead of JSON")
@click.option("--timing", is_flag=True, help="Record per-index wall time in the report")
@click.pass_obj
def analyze(settings: Settings, path, field, indices, oracle, jobs, json_path, pretty, timing):
    """Verify reg(Ext^i) <= dim(Ext^i) <= n - i for the ideal in PATH."""
    field = _field(settings, field)
    try:
        ideal = parse_ideal_file(path)
        report = analyze_ideal(
            ideal,
            indices=indices,
            field=field,
            oracle=oracle,
            jobs=jobs or settings.jobs,
            growth_limit=settings.box_growth_limit,
            max_generators=settings.taylor_max_generators,
            timing=timing,
        )
    except InputError as e:
        _input_failure(e)
    except InvariantViolation as e:
        logger.error(f"Internal invariant violated: {e}")
        click.echo(f"Invariant violation: {e}", err=True)
        sys.exit(EXIT_VERIFICATION)

    _emit(to_json(report), json_path, render_analysis(report) if pretty else None)
    try:
        raise_for_failures(report)
    except VerificationFailure as e:
        logger.error(f"Verification failed: {e}")
        click.echo(f"Verification failed: {e} (witness {e.witness})", err=True)
        sys.exit(EXIT_VERIFICATION)
    sys.exit(EXIT_OK)


@cli.command("sweep")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of variables")
@click.option("--max-exp", type=click.IntRange(min=1), default=1, help="Largest exponent")
@click.option("--exhaustive", is_flag=True, help="Enumerate every antichain instead of sampling")
@click.option("--samples", type=click.IntRange(min=0), default=100, help="Random ideals to draw")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None, help="Seed of the random corpus")
@click.option("--squarefree", is_flag=True, help="Restrict to squarefree monomials")
@click.option("--max-gens", type=click.IntRange(min=1), default=8, help="Generators per random draw")
@click.option("--char", "field", type=int, default=None, callback=_prime_field, help="Prime characteristic")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--oracle", is_flag=True, help="Cross-check every module with the Taylor complex")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the JSON summary to this file")
@click.option("--replay", "replay_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Where failing witnesses are written")
@click.option("--pretty", is_flag=True, help="Print a summary instead of JSON")
@click.pass_obj
def sweep(settings: Settings, n, max_exp, exhaustive, samples, seed, squarefree, max_gens, field, jobs, oracle,
          json_path, replay_path, pretty):
    """Verify the inequalities for every (ideal, i) of a corpus."""
    field = _field(settings, field)
    try:
        spec = CorpusSpec(
            n=n,
            max_exponent=max_exp,
            mode="exhaustive" if exhaustive else "random",
            samples=samples,
            seed=settings.seed if seed is None else seed,
            squarefree=squarefree,
            max_generators=max_gens,
        )
        summary = run_sweep(
            spec,
            field=field,
            oracle=oracle,
            jobs=jobs or settings.jobs,
            growth_limit=settings.box_growth_limit,
            max_generators=settings.taylor_max_generators,
            replay_path=replay_path or settings.replay_path,
        )
    except (InputError, ValidationError) as e:
        _input_failure(e)

    _emit(to_json(summary), json_path, render_sweep(summary) if pretty else None)
    if not summary.passed:
        click.echo(f"{summary.failures} failing modules; witnesses in {replay_path or settings.replay_path}", err=True)
        sys.exit(EXIT_VERIFICATION)
    sys.exit(EXIT_OK)


@cli.command("examples")
@click.option("--verify", is_flag=True, help="Run the full check on every named example")
@click.option("--char", "field", type=int, default=None, callback=_prime_field, help="Prime characteristic")
@click.option("--oracle", is_flag=True, help="Cross-check with the Taylor complex when verifying")
@click.option("--show", "show_name", default=None, help="Print one example in the ideal file format")
@click.pass_obj
def examples(settings: Settings, verify, field, oracle, show_name):
    """List the named example ideals."""
    table = named_example_table()
    if show_name is not None:
        match = next((e for e in table if e.name == show_name), None)
        if match is None:
            _input_failure(InputError(f"no named example '{show_name}'"))
        click.echo(format_ideal(match.ideal, comment=match.description), nl=False)
        sys.exit(EXIT_OK)

    if not verify:
        for example in table:
            click.echo(f"{example.name:<18} n={example.ideal.n:<2} {example.ideal}")
        sys.exit(EXIT_OK)

    field = _field(settings, field)
    failed = []
    for example in table:
        try:
            report = analyze_ideal(example.ideal, field=field, oracle=oracle, jobs=settings.jobs,
                                   growth_limit=settings.box_growth_limit,
                                   max_generators=settings.taylor_max_generators)
        except InvariantViolation as e:
            logger.error(f"{example.name}: internal invariant violated: {e}")
            failed.append(example.name)
            continue
        status = "ok" if report.passed else "FAIL"
        dims = " ".join(f"{r.index}:{'-' if r.reg_exact is None else r.reg_exact}/"
                        f"{'-' if r.dim is None else r.dim}" for r in report.records)
        click.echo(f"{example.name:<18} {status:<4} reg/dim {dims}")
        if not report.passed:
            failed.append(example.name)
    if failed:
        click.echo(f"Failing examples: {', '.join(failed)}", err=True)
        sys.exit(EXIT_VERIFICATION)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    cli()

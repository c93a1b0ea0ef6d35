"""Command-line interface for ISAC sensing reports and simulations.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from pathlib import Path

import click
from pydantic import ValidationError

from flext_isac_sense.__version__ import __version__
from flext_isac_sense.config import BUILTIN_BANDS
from flext_isac_sense.exceptions import (
    FlextIsacSenseConfigurationError,
    FlextIsacSenseError,
    FlextIsacSenseParseError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.exporters import ExportMetadata, PeriodogramExporter
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR_DB, estimate_rcs, tx_power
from flext_isac_sense.loggings import configure_logging, get_logger
from flext_isac_sense.periodogram import run_trial
from flext_isac_sense.quantities import db_to_linear, dbm_to_watts, linear_to_db
from flext_isac_sense.reports import kpi_table, range_table, render_report
from flext_isac_sense.scenario import evaluate, load_scenario, resolve_system
from flext_isac_sense.typings import PeriodogramAxes, Placement, ReportFormat, WindowName

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

_INPUT_ERRORS = (
    FlextIsacSenseValidationError,
    FlextIsacSenseParseError,
    FlextIsacSenseConfigurationError,
    ValidationError,
    OSError,
)

_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["md", "csv", "json"]),
    default="md",
    show_default=True,
    help="Report format.",
)
_SCENARIO = click.option(
    "--scenario",
    required=True,
    help="Scenario JSON file or shipped sample name.",
)


@click.group(name="flext-isac-sense", context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="flext-isac-sense")
@click.option(
    "--log-level",
    type=click.Choice(["debug", "info", "warning", "error", "critical"]),
    default="warning",
    show_default=True,
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory for relative export prefixes.",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, output_dir: Path | None) -> None:
    """ISAC sensing KPIs, feasibility reports and periodogram simulation."""
    configure_logging(log_level)
    ctx.obj = {"output_dir": output_dir}


@cli.command()
@click.option(
    "--band",
    "bands",
    multiple=True,
    required=True,
    help="FR1, FR2, FR3 or a SystemConfig JSON file; repeatable.",
)
@_FORMAT
def kpi(bands: tuple[str, ...], fmt: ReportFormat) -> None:
    """Print the sensing KPI table at the detection threshold SNR."""
    configs = [resolve_system(band) for band in bands]
    click.echo(kpi_table(configs, fmt), nl=False)


@cli.command(name="range-table")
@click.option(
    "--band",
    "bands",
    multiple=True,
    default=BUILTIN_BANDS,
    show_default=True,
    help="FR1, FR2, FR3 or a SystemConfig JSON file; repeatable.",
)
@click.option(
    "--gamma-star-db",
    type=float,
    default=DEFAULT_GAMMA_STAR_DB,
    show_default=True,
    help="Detection threshold γ* [dB].",
)
@_FORMAT
def range_table_command(bands: tuple[str, ...], gamma_star_db: float, fmt: ReportFormat) -> None:
    """Print the thermal-noise range of drones, humans, cars and AGVs."""
    configs = [resolve_system(band) for band in bands]
    click.echo(range_table(configs, fmt, db_to_linear(gamma_star_db)), nl=False)


@cli.command(name="max-range")
@_SCENARIO
@_FORMAT
def max_range(scenario: str, fmt: ReportFormat) -> None:
    """Print the range limits and the achievable range of a scenario."""
    report = evaluate(load_scenario(scenario))
    if fmt == "md":
        limits = report.limits
        click.echo(f"r* = {limits.achievable_m:.2f} m ({report.binding}-limited)")
        for name, value in (
            ("noise", limits.noise_m),
            ("quantization", limits.quantization_m),
            ("resolution", limits.resolution_m),
            ("ambiguity", limits.ambiguity_m),
        ):
            shown = "n/a" if value is None else f"{value:.2f} m"
            click.echo(f"  {name}: {shown}")
        return
    click.echo(render_report(report, fmt), nl=False)


@cli.command()
@_SCENARIO
@_FORMAT
@click.pass_context
def feasibility(ctx: click.Context, scenario: str, fmt: ReportFormat) -> None:
    """Evaluate a scenario; exit status 1 when its verdict is infeasible."""
    report = evaluate(load_scenario(scenario))
    click.echo(render_report(report, fmt), nl=False)
    if not report.verdict.feasible:
        ctx.exit(EXIT_INFEASIBLE)


@cli.command()
@_SCENARIO
@click.option(
    "--axes",
    type=click.Choice(["range-doppler", "range-azimuth"]),
    default="range-doppler",
    show_default=True,
)
@click.option("--pad", type=click.IntRange(min=1), default=4, show_default=True)
@click.option(
    "--window",
    type=click.Choice(["rectangular", "hann"]),
    default="rectangular",
    show_default=True,
)
@click.option("--out", "prefix", required=True, help="Output prefix of the exports.")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="RNG seed.")
@click.option("--trial", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--adc/--no-adc", default=True, show_default=True, help="ADC quantization.")
@click.pass_context
def simulate(
    ctx: click.Context,
    scenario: str,
    axes: PeriodogramAxes,
    pad: int,
    window: WindowName,
    prefix: str,
    seed: int | None,
    trial: int,
    adc: bool,  # noqa: FBT001
) -> None:
    """Simulate one periodogram of a scenario and export it."""
    loaded = load_scenario(scenario)
    scene = loaded.sim_scene(seed)
    pgm, detections = run_trial(scene, axes, pad, window, trial=trial, adc=adc)
    metadata = ExportMetadata(
        periodogram=pgm.metadata,
        seed=scene.seed,
        trial=trial,
        band=loaded.system.band,
        scenario=loaded.name,
    )
    exporter = PeriodogramExporter(ctx.obj["output_dir"])
    for path in exporter.export(prefix, pgm, detections, metadata):
        click.echo(str(path))
    click.echo(f"{len(detections)} detection(s)")


@cli.command(name="rcs-estimate")
@click.option("--band", required=True, help="FR1, FR2, FR3 or a SystemConfig JSON file.")
@click.option(
    "--peak-db",
    type=float,
    required=True,
    help="Periodogram peak power incl. the N·M processing gain [dBm].",
)
@click.option("--range", "range_m", type=float, required=True, help="Target range [m].")
@click.option(
    "--placement",
    type=click.Choice(["indoor", "outdoor"]),
    default="outdoor",
    show_default=True,
)
def rcs_estimate(band: str, peak_db: float, range_m: float, placement: Placement) -> None:
    """Estimate the RCS of a detected object from its peak power and range."""
    cfg = resolve_system(band)
    rcs = estimate_rcs(cfg, dbm_to_watts(peak_db), range_m, tx_power(cfg, placement))
    click.echo(f"rcs_m2={rcs:.6g}")
    click.echo(f"rcs_dbsm={linear_to_db(rcs):.2f}")


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and map failures to exit codes."""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args, prog_name="flext-isac-sense", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INTERNAL_ERROR
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except _INPUT_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT_ERROR
    except FlextIsacSenseError as exc:
        logger.exception("command failed", context=exc.context)
        click.echo(f"error: {exc}", err=True)
        return EXIT_INTERNAL_ERROR
    except Exception as exc:  # noqa: BLE001
        logger.exception("unexpected failure")
        click.echo(f"internal error: {exc}", err=True)
        return EXIT_INTERNAL_ERROR
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    """Run the console script."""
    sys.exit(cli_main())


if __name__ == "__main__":
    main()

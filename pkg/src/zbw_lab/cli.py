"""Command-line interface for zbw-lab."""

import logging
import sys
from pathlib import Path
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .config import ScenarioConfig, default_config, load_config
from .errors import ConfigError
from .scenarios import registry as scenario_registry
from .scenarios import run_scenario
from .verify import MODULES, VerifyReport, verify
from .verify import registry as check_registry

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_COMPUTATION_ERROR = 3

ERROR_EXIT_CODES = {"config": EXIT_CONFIG_ERROR, "computation": EXIT_COMPUTATION_ERROR, "io": EXIT_COMPUTATION_ERROR}

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)


def _configure_logging(verbose: int):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@click.group()
@click.option("-v", "--verbose", count=True, help="INFO with -v, DEBUG with -vv")
@click.version_option(__version__, prog_name="zbw-lab")
def cli(verbose):
    """zbw-lab - numerical lab for zitterbewegung in commutative and noncommutative geometry.

    Each scenario writes <name>.csv and a <name>.json sidecar; `verify` runs
    every closed form against its oracle.
    """
    _configure_logging(verbose)


def scenario_options(func):
    """Options shared by every scenario command."""
    func = click.option("--seed", type=int, default=None, help="Override the configured seed")(func)
    func = click.option(
        "--frame", type=click.Choice(["SI", "natural"]), default=None, help="Unit frame of the CSV columns"
    )(func)
    func = click.option("--out", type=click.Path(path_type=Path, file_okay=False), default=None, help="Output directory")(
        func
    )
    func = click.option(
        "--config",
        "config_path",
        type=click.Path(path_type=Path, dir_okay=False),
        envvar="ZBW_LAB_CONFIG",
        default=None,
        help="Configuration document (key = value lines or YAML)",
    )(func)
    return func


def _load(name: str, config_path: Optional[Path], frame: Optional[str], seed: Optional[int]) -> ScenarioConfig:
    config = load_config(config_path, scenario=name) if config_path else default_config(name)
    updates = {}
    if frame is not None:
        updates["frame"] = frame
    if seed is not None:
        updates["seed"] = seed
    return config.model_copy(update=updates)


def _run(name: str, config_path: Optional[Path], out: Optional[Path], frame: Optional[str], seed: Optional[int]):
    try:
        config = _load(name, config_path, frame, seed)
    except ConfigError as e:
        err_console.print(f"[red]Configuration error:[/red] {e}")
        sys.exit(EXIT_CONFIG_ERROR)

    result = run_scenario(config, out)
    if not result.success:
        err_console.print(f"[red]{name} failed ({result.error_kind}):[/red] {result.error}")
        sys.exit(ERROR_EXIT_CODES.get(result.error_kind, EXIT_COMPUTATION_ERROR))

    console.print(
        Panel.fit(
            f"[bold cyan]{name}[/bold cyan] - {len(result.output.rows)} rows, frame {config.frame}\n"
            + "\n".join(result.paths),
            border_style="cyan",
        )
    )


@cli.command("zbw-traj")
@scenario_options
def zbw_traj(config_path, out, frame, seed):
    """Fixed-azimuth zitterbewegung trajectory."""
    _run("zbw-traj", config_path, out, frame, seed)


@cli.command()
@scenario_options
def moment(config_path, out, frame, seed):
    """Commutative zitterbewegung magnetic moment."""
    _run("moment", config_path, out, frame, seed)


@cli.command("nc-moment")
@scenario_options
def nc_moment(config_path, out, frame, seed):
    """Moment with its space-noncommutative correction (needs nc.theta1..3)."""
    _run("nc-moment", config_path, out, frame, seed)


@cli.command()
@scenario_options
def landau(config_path, out, frame, seed):
    """Landau level table (needs landau.b3 or landau.eta3)."""
    _run("landau", config_path, out, frame, seed)


@cli.command("graphene-traj")
@scenario_options
def graphene_traj(config_path, out, frame, seed):
    """Graphene packet trajectory in the effective field B_eta."""
    _run("graphene-traj", config_path, out, frame, seed)


def _status(check) -> str:
    if check.informational:
        return "[yellow]INFO[/yellow]"
    return "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"


def _print_report(report: VerifyReport):
    table = Table(title="Verification")
    table.add_column("Module", style="cyan")
    table.add_column("Check")
    table.add_column("Deviation", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Status")
    for c in report.checks:
        deviation = "-" if c.deviation is None else f"{c.deviation:.2e}"
        tolerance = "-" if c.tolerance is None else f"{c.tolerance:.0e}"
        table.add_row(c.module, c.name, deviation, tolerance, _status(c))
    console.print(table)

    for c in report.checks:
        if c.error:
            err_console.print(f"[red]{c.name}:[/red] {c.error}")

    counted = [c for c in report.checks if not c.informational]
    style = "green" if report.passed else "red"
    console.print(f"[{style}]{len(counted) - len(report.failed)}/{len(counted)} checks passed[/{style}]")


@cli.command("verify")
@click.option(
    "--module",
    "suite",
    type=click.Choice(["all", *MODULES]),
    default="all",
    help="Run the checks of one module only",
)
@click.option("--json", "json_path", type=click.Path(path_type=Path, dir_okay=False), default=None, help="Write the report as JSON")
def verify_command(suite, json_path):
    """Run the closed-form vs oracle suite; exits 1 if any check fails."""
    report = verify(suite)
    _print_report(report)

    if json_path is not None:
        try:
            json_path.parent.mkdir(parents=True, exist_ok=True)
            json_path.write_text(report.to_json(), encoding="utf-8")
        except OSError as e:
            err_console.print(f"[red]Cannot write {json_path}:[/red] {e}")
            sys.exit(EXIT_COMPUTATION_ERROR)
        logger.info(f"Wrote {json_path}")

    sys.exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


@cli.command("list")
def list_command():
    """Show the available scenarios and check modules."""
    scenarios = Table(title="Scenarios")
    scenarios.add_column("Name", style="cyan")
    scenarios.add_column("Columns")
    scenarios.add_column("Description")
    for definition in scenario_registry.get_definitions():
        scenarios.add_row(definition.name, ", ".join(definition.header), definition.description)
    console.print(scenarios)

    checks = Table(title="Check modules")
    checks.add_column("Module", style="cyan")
    checks.add_column("Checks", justify="right")
    for module in check_registry.modules():
        checks.add_row(module, str(len(check_registry.list(module))))
    console.print(checks)


def main():
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()

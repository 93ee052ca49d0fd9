"""strapnav command line: sim, run, compare."""

import math
import sys
from pathlib import Path
from typing import Dict, Optional

# Fix Windows console encoding for Unicode characters (Rich UI)
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding="utf-8", errors="replace")
    sys.stderr.reconfigure(encoding="utf-8", errors="replace")

import click
import numpy as np
from rich.console import Console
from rich.table import Table
from rich import box

from strapnav import __version__
from strapnav.config import AppConfig, RunConfig, parse_kv_file, parse_override
from strapnav.models.dataset import DatasetBundle
from strapnav.models.run_result import RunResult
from strapnav.navigator import Navigator, compare_runs
from strapnav.navigator import io
from strapnav.sim import GnssSpec, SensorErrorSpec, TrajectorySpec, corrupt_imu, gen_gnss, gen_truth
from strapnav.utils.errors import ConfigError, StrapnavError
from strapnav.utils.logger import get_logger, setup_logging

logger = get_logger("cli")
console = Console()
err_console = Console(stderr=True)

_ANGLE_METRICS = ("rms_attitude_deg", "final_attitude_deg")


def _fail(error: StrapnavError) -> None:
    err_console.print(f"[red]Error: {error}[/red]")
    sys.exit(error.exit_code)


def _fmt(value: float, digits: int = 4) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "-"
    return f"{value:.{digits}g}"


def build_run_config(
    app_config: AppConfig,
    config_path: Optional[str],
    overrides: Dict[str, str],
    filter_name: Optional[str],
) -> RunConfig:
    """Defaults < [run] settings < --config file < --set overrides < --filter."""
    config = RunConfig()
    config.update(app_config.run_defaults, explicit=False)
    if config_path:
        config.update(parse_kv_file(config_path))
    config.update(overrides)
    if filter_name:
        config.update({"filter": filter_name})
    return config


def result_table(result: RunResult) -> Table:
    table = Table(title=f"{result.filter_name} run", box=box.SIMPLE)
    table.add_column("metric", style="cyan")
    table.add_column("value", justify="right")
    table.add_row("epochs", str(result.epochs))
    for name, value in result.metrics.items():
        table.add_row(name, _fmt(value))
    return table


@click.group()
@click.option("--settings", "settings_path", default=None, help="Path to settings TOML file")
@click.option("--env-file", default=None, help="Path to .env file")
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.version_option(__version__, prog_name="strapnav")
@click.pass_context
def main(ctx, settings_path, env_file, debug):
    """Strapdown INS/GNSS simulation and filtering toolkit."""
    try:
        app_config = AppConfig.load(settings_path, env_file)
    except ConfigError as e:
        _fail(e)

    errors = app_config.validate()
    if errors:
        for err in errors:
            err_console.print(f"[red]  {err}[/red]")
        sys.exit(ConfigError.exit_code)

    setup_logging(
        level=app_config.log_level,
        log_file=app_config.log_file,
        debug=debug or app_config.debug,
    )
    ctx.obj = app_config


@main.command()
@click.option("--traj", "traj_path", required=True, help="Trajectory spec (key=value)")
@click.option("--err", "err_path", default=None, help="Sensor error spec (key=value)")
@click.option("--gnss", "gnss_path", default=None, help="GNSS spec (key=value)")
@click.option("--seed", type=int, default=None, help="Random seed (overrides the error spec)")
@click.option("-o", "--output", "output_dir", required=True, help="Dataset directory")
def sim(traj_path, err_path, gnss_path, seed, output_dir):
    """Generate imu.csv, gnss.csv, truth.csv and meta.txt."""
    try:
        traj = TrajectorySpec.from_kv_file(traj_path)
        errors = SensorErrorSpec.from_kv_file(err_path) if err_path else SensorErrorSpec()
        gnss_spec = GnssSpec.from_kv_file(gnss_path) if gnss_path else GnssSpec()
        seed = errors.seed if seed is None else seed

        imu_seed, gnss_seed = np.random.SeedSequence(seed).spawn(2)
        truth = gen_truth(traj)
        imu = corrupt_imu(truth, errors, np.random.default_rng(imu_seed))
        gnss = gen_gnss(truth, gnss_spec, np.random.default_rng(gnss_seed))

        meta = {
            "l_rate": traj.l_rate,
            "seed": seed,
            "kind": traj.kind,
            "duration": traj.duration,
            "n_samples": len(imu),
            "gnss_rate": gnss_spec.rate,
            "gnss_skew": gnss_spec.skew,
        }
        bundle = io.write_dataset(output_dir, truth, imu, gnss, meta)
    except StrapnavError as e:
        _fail(e)

    console.print(f"[green]✓ {traj.kind} dataset: {len(imu)} IMU rows, {len(gnss)} fixes → {bundle.root}[/green]")


@main.command()
@click.option("--filter", "filter_name", default=None, help="ins | eskf | comp | gd")
@click.option("--config", "config_path", default=None, help="Run config (key=value)")
@click.option("-i", "--input", "input_dir", required=True, help="Dataset directory")
@click.option("-o", "--output", "output_dir", default=None, help="Output directory")
@click.option("--set", "overrides", multiple=True, metavar="KEY=VALUE", help="Override one config key")
@click.pass_obj
def run(app_config, filter_name, config_path, input_dir, output_dir, overrides):
    """Run a filter over a dataset and write estimate, metrics and innovations."""
    try:
        config = build_run_config(
            app_config, config_path, dict(parse_override(o) for o in overrides), filter_name
        )
        if output_dir:
            config.output_dir = output_dir
        errors = config.validate()
        if errors:
            for err in errors:
                err_console.print(f"[red]  {err}[/red]")
            sys.exit(ConfigError.exit_code)

        result = Navigator(config).run(DatasetBundle.from_dir(input_dir), config.output_dir)
    except StrapnavError as e:
        _fail(e)

    logger.debug(f"Run result: {result.to_dict()}")
    if result.is_success:
        console.print(result_table(result))
        console.print(f"[green]✓ {result.message}[/green]")
    else:
        err_console.print(f"[red]{result}[/red]")
        if result.error_details:
            err_console.print(f"[dim]{result.error_details}[/dim]")
        if result.last_good_epoch is not None:
            err_console.print(f"[red]Last good epoch: t = {result.last_good_epoch:.6f} s[/red]")
    sys.exit(result.exit_code)


@main.command()
@click.argument("run_dirs", nargs=-1, required=True)
@click.option("--output", "output_path", default=io.COMPARISON_FILE, help="Comparison CSV path")
def compare(run_dirs, output_path):
    """Compare metrics of two or more run directories."""
    try:
        table = compare_runs(run_dirs)
    except StrapnavError as e:
        _fail(e)

    view = Table(title="Run comparison", box=box.SIMPLE)
    columns = ["run", "filter", "rms_attitude_deg", "final_attitude_deg", "rms_velocity",
               "rms_horizontal", "rms_vertical", "convergence_time", "rms_attitude_deg_delta"]
    for name in columns:
        view.add_column(name, justify="left" if name in ("run", "filter") else "right")
    for _, row in table.iterrows():
        view.add_row(*(str(row[c]) if c in ("run", "filter") else _fmt(row[c]) for c in columns))
    console.print(view)

    io.write_frame(table, Path(output_path))
    console.print(f"[green]✓ Comparison written to {output_path}[/green]")

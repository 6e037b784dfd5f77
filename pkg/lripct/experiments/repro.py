from __future__ import annotations

from typing import Any

import math
from dataclasses import dataclass
from pathlib import Path

from lripct.experiments.cells import reconstruct_cell
from lripct.geometry import Image
from lripct.io import export_pgm, write_array, write_meta, write_table
from lripct.metrics import residual
from lripct.runner import AbstractRunner, Cell, CellResult, SerialRunner, StatusType
from lripct.scenario import ExperimentScenario
from lripct.simulation import shepp_logan
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

TABLE3_COLUMNS = ["noise", "coverage_deg", "method", "psnr", "rmse", "ssim", "joint", "seed"]
TIMING_COLUMNS = ["noise", "coverage_deg", "method", "time_ms"]
TABLE6_COLUMNS = ["coverage_deg", "prior_method", "psnr", "rmse", "ssim"]
PRIOR_SWEEP_COLUMNS = ["tau", "prior", "psnr", "rmse", "ssim"]

TABLE3_METHODS = ("fbp", "tv", "pd", "lrip")
SWEEP_TAUS = (2, 4, 8, 16)


@dataclass(frozen=True)
class ReproResult:
    """Outcome of an experiment grid.

    Parameters
    ----------
    table : Path
        The written CSV table.
    rows : list[dict[str, Any]]
        The table rows in output order.
    n_crashed : int
        Number of cells that crashed; their metrics are NaN.
    """

    table: Path
    rows: list[dict[str, Any]]
    n_crashed: int


def _metrics(result: CellResult) -> dict[str, float]:
    if result.status == StatusType.SUCCESS:
        return {key: result.values[key] for key in ("psnr", "rmse", "ssim", "joint", "time_ms")}

    return {key: math.nan for key in ("psnr", "rmse", "ssim", "joint", "time_ms")}


def _export(image_dir: Path, stem: str, result: CellResult, phantom: Image) -> None:
    if result.status != StatusType.SUCCESS:
        return

    recon = Image(result.values["image"])
    write_array(image_dir / f"{stem}.lrip", recon)
    export_pgm(recon, image_dir / f"{stem}.pgm")
    export_pgm(residual(recon, phantom), image_dir / f"{stem}_residual.pgm")


def _run(cells: list[Cell], runner: AbstractRunner | None) -> list[CellResult]:
    if runner is None:
        runner = SerialRunner()

    logger.info(f"Running {len(cells)} cells with {runner.__class__.__name__}.")
    return runner.run_cells(cells)


def _count_crashed(results: list[CellResult]) -> int:
    return sum(result.status != StatusType.SUCCESS for result in results)


def method_label(method: str, tau: int, taus: tuple[int, ...]) -> str:
    """Row label of a method. lrip rows carry their factor (``lrip-4``) once the scenario has several."""
    if method == "lrip" and len(taus) > 1:
        return f"lrip-{tau}"

    return method


def table3(scenario: ExperimentScenario, runner: AbstractRunner | None = None) -> ReproResult:
    """Compares fbp, tv, pd and lrip (tv prior) over the scenario's noise presets and coverages.

    lrip is run once per down-sampling factor in ``scenario.taus``.

    Writes ``table3.csv`` (deterministic columns only), ``timings.csv``, and per cell the reconstruction as
    ``.lrip`` file with display-window PGMs of the reconstruction and its residual under ``images/``.
    """
    out = scenario.output_directory
    image_dir = out / "images"
    image_dir.mkdir(parents=True, exist_ok=True)
    scenario.save()

    keys = [
        (noise, coverage, method, tau)
        for noise in scenario.noises
        for coverage in scenario.coverages
        for method in TABLE3_METHODS
        for tau in (scenario.taus if method == "lrip" else scenario.taus[:1])
    ]
    cells = [
        Cell(
            index=index,
            key=key,
            function=reconstruct_cell,
            kwargs={
                "size": scenario.size,
                "coverage_deg": key[1],
                "noise": key[0],
                "seed": scenario.seed,
                "method": key[2],
                "params": scenario.params.meta,
                "tau": key[3],
                "prior": "tv",
            },
        )
        for index, key in enumerate(keys)
    ]
    results = _run(cells, runner)

    phantom = shepp_logan(scenario.size)
    rows, timings = [], []
    for result in results:
        noise, coverage, method, tau = result.key
        method = method_label(method, tau, scenario.taus)
        metrics = _metrics(result)
        rows.append(
            {
                "noise": noise,
                "coverage_deg": coverage,
                "method": method,
                "psnr": metrics["psnr"],
                "rmse": metrics["rmse"],
                "ssim": metrics["ssim"],
                "joint": metrics["joint"],
                "seed": scenario.seed,
            }
        )
        timings.append({"noise": noise, "coverage_deg": coverage, "method": method, "time_ms": metrics["time_ms"]})
        _export(image_dir, f"{noise}_{coverage:g}_{method}", result, phantom)

    table = out / "table3.csv"
    write_table(rows, TABLE3_COLUMNS, table)
    write_table(timings, TIMING_COLUMNS, out / "timings.csv")
    write_meta(table, seed=scenario.seed, scenario=scenario.meta)

    return ReproResult(table=table, rows=rows, n_crashed=_count_crashed(results))


def table6(scenario: ExperimentScenario, runner: AbstractRunner | None = None) -> ReproResult:
    """Prior-source ablation: lrip with an fbp prior against lrip with a tv prior, first noise preset only."""
    out = scenario.output_directory
    out.mkdir(parents=True, exist_ok=True)
    scenario.save()

    noise = scenario.noises[0]
    tau = scenario.taus[0]
    keys = [(coverage, prior) for coverage in scenario.coverages for prior in ("fbp", "tv")]
    cells = [
        Cell(
            index=index,
            key=key,
            function=reconstruct_cell,
            kwargs={
                "size": scenario.size,
                "coverage_deg": key[0],
                "noise": noise,
                "seed": scenario.seed,
                "method": "lrip",
                "params": scenario.params.meta,
                "tau": tau,
                "prior": key[1],
            },
        )
        for index, key in enumerate(keys)
    ]
    results = _run(cells, runner)

    rows = []
    for result in results:
        metrics = _metrics(result)
        rows.append(
            {
                "coverage_deg": result.key[0],
                "prior_method": result.key[1],
                "psnr": metrics["psnr"],
                "rmse": metrics["rmse"],
                "ssim": metrics["ssim"],
            }
        )

    table = out / "table6.csv"
    write_table(rows, TABLE6_COLUMNS, table)
    write_meta(table, seed=scenario.seed, noise=noise, tau=tau, scenario=scenario.meta)

    return ReproResult(table=table, rows=rows, n_crashed=_count_crashed(results))


def prior_sweep(
    scenario: ExperimentScenario,
    runner: AbstractRunner | None = None,
    taus: tuple[int, ...] = SWEEP_TAUS,
) -> ReproResult:
    """Prior-resolution sweep on the smallest coverage with the first noise preset.

    Every factor in ``taus`` is run with a tv prior and with the oracle prior (the down-sampled phantom).
    """
    out = scenario.output_directory
    out.mkdir(parents=True, exist_ok=True)
    scenario.save()

    noise = scenario.noises[0]
    coverage = min(scenario.coverages)
    taus = tuple(tau for tau in taus if scenario.size % tau == 0)
    keys = [(tau, prior) for tau in taus for prior in ("tv", "oracle")]
    cells = [
        Cell(
            index=index,
            key=key,
            function=reconstruct_cell,
            kwargs={
                "size": scenario.size,
                "coverage_deg": coverage,
                "noise": noise,
                "seed": scenario.seed,
                "method": "lrip",
                "params": scenario.params.meta,
                "tau": key[0],
                "prior": key[1],
            },
        )
        for index, key in enumerate(keys)
    ]
    results = _run(cells, runner)

    rows = []
    for result in results:
        metrics = _metrics(result)
        rows.append(
            {
                "tau": result.key[0],
                "prior": result.key[1],
                "psnr": metrics["psnr"],
                "rmse": metrics["rmse"],
                "ssim": metrics["ssim"],
            }
        )

    table = out / "prior_sweep.csv"
    write_table(rows, PRIOR_SWEEP_COLUMNS, table)
    write_meta(table, seed=scenario.seed, noise=noise, coverage_deg=coverage, scenario=scenario.meta)

    return ReproResult(table=table, rows=rows, n_crashed=_count_crashed(results))

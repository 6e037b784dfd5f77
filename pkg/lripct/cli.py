from __future__ import annotations

from typing import Any, Sequence

import argparse
import logging
import sys
from pathlib import Path

from lripct.callback import Callback, DiagnosticsCallback, MetadataCallback
from lripct.conditioning import CONDITION_COLUMNS, condition_sweep
from lripct.config import read_config
from lripct.experiments import prior_sweep, table3, table6
from lripct.geometry import ScanGeometry, Sinogram, default_geometry
from lripct.io import export_pgm, read_image, read_sinogram, write_array, write_meta, write_table
from lripct.metrics import evaluate, write_evaluations_csv
from lripct.operators import forward_project
from lripct.reconstruction import FILTER_KINDS, fbp
from lripct.runner import make_runner
from lripct.scenario import ExperimentScenario
from lripct.simulation import NoiseSpec, disk_phantom, shepp_logan
from lripct.tuning import TUNING_COLUMNS, tune_tv
from lripct.utils.exceptions import InvalidArgumentError, LripctError
from lripct.utils.logging import add_run_log, get_logger, remove_run_log, setup_logging
from lripct.variational import (
    SolverParams,
    lrip_reconstruct,
    make_prior,
    pd_reconstruct,
    tv_reconstruct,
)

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class UsageError(Exception):
    """Raised instead of exiting when the command line cannot be parsed."""

    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _float_list(text: str) -> list[float]:
    return [float(item) for item in text.split(",") if item.strip() != ""]


def _int_list(text: str) -> list[int]:
    return [int(item) for item in text.split(",") if item.strip() != ""]


def _disk_list(text: str) -> list[tuple[float, float, float, float]]:
    disks = []
    for item in text.split(";"):
        values = _float_list(item)
        if len(values) != 4:
            raise argparse.ArgumentTypeError(f"A disk needs `cx,cy,radius,value`, got {item!r}.")

        disks.append((values[0], values[1], values[2], values[3]))

    return disks


def infer_default_size(sino: Sinogram) -> int:
    """Image side of the default scanner that produces ``sino.n_bins`` bins."""
    return (2 * sino.n_bins) // 3


def _geometry(args: argparse.Namespace, sino: Sinogram | None = None) -> tuple[ScanGeometry, SolverParams]:
    """Default geometry of ``--size``/``--coverage`` (inferred from ``sino`` if missing) with config overrides."""
    size = args.size
    coverage = args.coverage
    if size is None:
        if sino is None:
            raise InvalidArgumentError("--size is required.")

        size = infer_default_size(sino)

    if coverage is None:
        if sino is None:
            raise InvalidArgumentError("--coverage is required.")

        coverage = float(sino.n_views)

    geom: ScanGeometry = default_geometry(size, coverage)
    params = SolverParams()
    config = getattr(args, "params", None) or getattr(args, "config", None)
    if config is not None:
        overridden, params = read_config(config, geom, params)
        assert overridden is not None
        geom = overridden

    if sino is not None and sino.shape != (geom.n_views, geom.n_bins):
        raise InvalidArgumentError(
            f"Sinogram of shape {sino.shape} does not match {geom.n_views} views x {geom.n_bins} bins."
        )

    return geom, params


def _cmd_phantom(args: argparse.Namespace) -> int:
    if args.type == "shepp-logan":
        img = shepp_logan(args.size)
    else:
        img = disk_phantom(args.size, args.disks or [(0.0, 0.0, 0.5, 1.0)])

    write_array(args.out, img)
    logger.info(f"Wrote a {args.size} x {args.size} {args.type} phantom to {args.out}.")

    return EXIT_OK


def _cmd_project(args: argparse.Namespace) -> int:
    img = read_image(args.phantom)
    if args.size is None:
        args.size = img.n_rows

    geom, _ = _geometry(args)
    write_array(args.out, forward_project(img, geom))
    write_meta(args.out, geometry=geom.meta)

    return EXIT_OK


def _cmd_noise(args: argparse.Namespace) -> int:
    spec = NoiseSpec(args.kind, args.level, args.seed)
    write_array(args.out, spec.apply(read_sinogram(getattr(args, "in"))))
    write_meta(args.out, noise=spec.meta)

    return EXIT_OK


def _cmd_recon(args: argparse.Namespace) -> int:
    sino = read_sinogram(args.sino)
    geom, params = _geometry(args, sino)
    reference = read_image(args.ref) if args.ref is not None else None

    callbacks: list[Callback] = [MetadataCallback(args.out, method=args.method, params=params.meta)]
    if args.log is not None:
        callbacks.append(DiagnosticsCallback(args.log))

    if args.method == "fbp":
        img = fbp(sino, geom, args.filter)
        write_meta(args.out, method="fbp", filter=args.filter, geometry=geom.meta)
    elif args.method == "tv":
        img = tv_reconstruct(sino, geom, params, callbacks, reference)
    elif args.method == "pd":
        img = pd_reconstruct(sino, geom, params, callbacks, reference)
    else:
        if args.prior is not None:
            u_l = read_image(args.prior)
        else:
            u_l = make_prior(sino, geom, args.tau, "tv", params)

        img = lrip_reconstruct(sino, geom, u_l, args.tau, params, callbacks, reference)

    write_array(args.out, img)
    if args.pgm is not None:
        export_pgm(img, args.pgm)

    return EXIT_OK


def _cmd_prior(args: argparse.Namespace) -> int:
    sino = read_sinogram(args.sino)
    geom, params = _geometry(args, sino)
    write_array(args.out, make_prior(sino, geom, args.tau, args.method, params))
    write_meta(args.out, method=args.method, tau=args.tau, geometry=geom.meta)

    return EXIT_OK


def _cmd_cond(args: argparse.Namespace) -> int:
    runner = make_runner(args.workers)
    try:
        rows = condition_sweep(args.size, args.coverages, args.taus, args.norm, runner=runner)
    finally:
        runner.close()

    records = [
        {
            "coverage_deg": row.coverage_deg,
            "tau": row.tau,
            "norm": row.norm,
            "cond_full": row.cond_full,
            "cond_low": row.cond_low,
            "holds": str(row.holds).lower(),
        }
        for row in rows
    ]
    write_table(records, CONDITION_COLUMNS, args.out)
    write_meta(args.out, size=args.size, norm=args.norm)

    return EXIT_OK


def _cmd_metrics(args: argparse.Namespace) -> int:
    evaluation = evaluate(Path(args.test).name, read_image(args.test), read_image(args.ref))
    print(
        f"psnr={evaluation.psnr:.6g} rmse={evaluation.rmse:.6g} "
        f"ssim={evaluation.ssim:.6g} joint={evaluation.joint:.6g}"
    )
    if args.csv is not None:
        write_evaluations_csv([evaluation], args.csv)

    return EXIT_OK


def _cmd_repro(args: argparse.Namespace) -> int:
    params = SolverParams()
    if args.params is not None:
        _, params = read_config(args.params, None, params)

    scenario = ExperimentScenario(
        name=args.table,
        output_directory=Path(args.out),
        seed=args.seed,
        n_workers=args.workers,
        size=args.size,
        taus=tuple(args.taus),
        params=params,
    )
    experiment = {"table3": table3, "table6": table6, "prior-sweep": prior_sweep}[args.table]

    run_log = add_run_log(scenario.output_directory)
    runner = make_runner(scenario.n_workers)
    try:
        result = experiment(scenario, runner)
    finally:
        runner.close()
        remove_run_log(run_log)

    if result.n_crashed > 0:
        logger.error(f"{result.n_crashed} cells crashed; see {run_log.baseFilename} for tracebacks.")
        return EXIT_RUNTIME

    logger.info(f"Wrote {result.table}.")

    return EXIT_OK


def _cmd_tune(args: argparse.Namespace) -> int:
    sino = read_sinogram(args.sino)
    geom, params = _geometry(args, sino)

    runner = make_runner(args.workers)
    try:
        result = tune_tv(sino, geom, read_image(args.ref), args.n_configs, args.seed, params, runner)
    finally:
        runner.close()

    write_table(result.rows, TUNING_COLUMNS, args.out)
    write_meta(args.out, seed=args.seed, best=result.best.meta, geometry=geom.meta)

    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The ``lripct`` command line."""
    parser = _Parser(prog="lripct", description="Limited-angle CT reconstruction with low-resolution image priors.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log debug messages.")
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = commands.add_parser("phantom", help="Write a phantom image.")
    p.add_argument("--type", choices=["shepp-logan", "disk"], default="shepp-logan")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--disks", type=_disk_list, default=None, help="`cx,cy,radius,value;...` on [-1, 1]^2.")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_phantom)

    p = commands.add_parser("project", help="Forward project an image.")
    p.add_argument("--phantom", required=True)
    p.add_argument("--coverage", type=float, required=True)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--config", default=None, help="`key = value` file with geometry.* overrides.")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_project)

    p = commands.add_parser("noise", help="Corrupt a sinogram.")
    p.add_argument("--in", required=True)
    p.add_argument("--kind", choices=["gaussian", "poisson"], required=True)
    p.add_argument("--level", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_noise)

    p = commands.add_parser("recon", help="Reconstruct an image from a sinogram.")
    p.add_argument("--method", choices=["fbp", "tv", "pd", "lrip"], required=True)
    p.add_argument("--sino", required=True)
    p.add_argument("--coverage", type=float, default=None)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--prior", default=None, help="Low-resolution prior image; built with tv if omitted.")
    p.add_argument("--tau", type=int, default=2)
    p.add_argument("--params", default=None, help="`key = value` file with solver.* and geometry.* keys.")
    p.add_argument("--filter", choices=FILTER_KINDS, default="ramp")
    p.add_argument("--ref", default=None, help="Ground truth for the PSNR diagnostics.")
    p.add_argument("--log", default=None, help="CSV of per-iteration diagnostics.")
    p.add_argument("--pgm", default=None, help="Also export the image as PGM.")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_recon)

    p = commands.add_parser("prior", help="Reconstruct a low-resolution prior.")
    p.add_argument("--sino", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--method", choices=["fbp", "tv"], default="tv")
    p.add_argument("--coverage", type=float, default=None)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--params", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_prior)

    p = commands.add_parser("cond", help="Condition numbers of full and low-resolution system matrices.")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--coverages", type=_float_list, required=True)
    p.add_argument("--taus", type=_int_list, required=True)
    p.add_argument("--norm", choices=["1", "2", "inf"], default="2")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_cond)

    p = commands.add_parser("metrics", help="Compare an image with a reference.")
    p.add_argument("--ref", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--csv", default=None)
    p.set_defaults(handler=_cmd_metrics)

    p = commands.add_parser("repro", help="Run an experiment grid.")
    p.add_argument("table", choices=["table3", "table6", "prior-sweep"])
    p.add_argument("--size", type=int, default=64)
    p.add_argument("--taus", type=_int_list, default=[2], help="Prior factors of the lrip rows.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--params", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_repro)

    p = commands.add_parser("tune", help="Tune the TV baseline on a Sobol design.")
    p.add_argument("--sino", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--coverage", type=float, default=None)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--n-configs", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--params", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_tune)

    return parser


def _failing_module(exc: BaseException) -> str:
    """Name of the innermost lripct module on the traceback of ``exc``."""
    tb = exc.__traceback__
    name = __name__
    while tb is not None:
        module = tb.tb_frame.f_globals.get("__name__", "")
        if module.startswith("lripct"):
            name = module

        tb = tb.tb_next

    return name


def main(argv: Sequence[str] | None = None) -> int:
    """Runs the command line and returns the exit code: 0 on success, 1 on usage errors, 2 on runtime errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"[lripct.cli] {e}", file=sys.stderr)
        return EXIT_USAGE

    level: Any = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING

    setup_logging(level)

    try:
        return args.handler(args)
    except (LripctError, OSError) as e:
        print(f"[{_failing_module(e)}] {e}", file=sys.stderr)
        return EXIT_RUNTIME

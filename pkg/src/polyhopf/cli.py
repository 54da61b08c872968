"""
Command-line interface for polyhopf.

Usage:
    # Sample 100 closed 16-gons in R^9 from octonionic Stiefel frames
    polyhopf sample --algebra O --k 16 --count 100 --seed 42 --out ensemble.json

    # Run the property suites
    polyhopf verify --suite algebra --trials 10000 --seed 1

    # Lift an ensemble back to frames, act on it, histogram its edge lengths
    polyhopf lift --in ensemble.json --out frames.json
    polyhopf act --in ensemble.json --out moved.json --word-length 4 --seed 7
    polyhopf stats --in ensemble.json --out lengths.csv --bins 20

Command results go to stdout as JSON; logs and error messages go to stderr.

Exit codes:
    0: Success
    1: Verification failure (a property or the act invariance check failed)
    2: Invalid arguments, invalid input files or I/O errors
"""

import argparse
import csv
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ValidationError

from polyhopf.config import get_settings
from polyhopf.models.ensemble import (
    FrameEnsemble,
    PolygonEnsemble,
    read_polygon_ensemble,
    write_model,
)
from polyhopf.models.reports import (
    ActSummary,
    EdgeLengthStats,
    LiftSummary,
    SampleSummary,
    VerificationReport,
)
from polyhopf.models.run import RunConfig
from polyhopf.polygons.pipeline import lift, phi_k, rotate_polygon
from polyhopf.polygons.quotient import gram_deviation
from polyhopf.polygons.sampling import sample_polygons
from polyhopf.seeding import child_seed
from polyhopf.spin.generators import random_word, word_rotation
from polyhopf.spin.rotation import Rotation, random_rotation
from polyhopf.utils.errors import DimensionMismatchError, PolyHopfError
from polyhopf.utils.logging import get_logger, setup_logging
from polyhopf.utils.run_context import clear_run_id, set_run_id
from polyhopf.verification.runner import run_verification

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

ALGEBRA_CHOICES = ("R", "C", "H", "O")
SUITE_CHOICES = ("algebra", "hopf", "spin", "polygon", "all")


def _emit(model: BaseModel) -> None:
    print(model.model_dump_json())


def _require_path(path: Path | None, flag: str) -> Path:
    if path is None:
        raise ValueError(f"{flag} is required")
    return path


def cmd_sample(cfg: RunConfig) -> int:
    """Sample an ensemble of polygons and write it as JSON."""
    output = _require_path(cfg.output_path, "--out")
    tag = cfg.tag
    polygons = sample_polygons(tag, cfg.k, cfg.count, cfg.seed)
    write_model(PolygonEnsemble.from_configs(tag, cfg.seed, polygons, cfg.k), output)

    lengths = np.concatenate([p.edge_lengths() for p in polygons])
    _emit(
        SampleSummary(
            algebra=tag.symbol,
            k=cfg.k,
            count=len(polygons),
            seed=cfg.seed,
            mean_edge_length=float(lengths.mean()),
            max_closure_residual=max(p.closure_residual for p in polygons),
            output=str(output),
        )
    )
    return EXIT_OK


def _print_failures(report: VerificationReport) -> None:
    for result in report.failures():
        detail = f" ({result.error})" if result.error else ""
        print(
            f"FAILED {result.name} [suite {result.suite}]: max_residual {result.max_residual:.3e}"
            f" > tolerance {result.tolerance:.3e}, property seed {result.seed}{detail}",
            file=sys.stderr,
        )
        print(
            f"  reproduce: polyhopf verify --suite {result.suite} --trials {report.trials}"
            f" --seed {report.seed}",
            file=sys.stderr,
        )


def cmd_verify(cfg: RunConfig) -> int:
    """Run a verification suite and print its JSON report."""
    report = run_verification(cfg.suite, cfg.trials, cfg.seed, tol=cfg.tol)
    if cfg.output_path is not None:
        write_model(report, cfg.output_path)
    _emit(report)
    if report.passed:
        return EXIT_OK
    _print_failures(report)
    return EXIT_FAILURE


def cmd_lift(cfg: RunConfig) -> int:
    """Lift every polygon of an ensemble to a Stiefel frame with unit fiber parameters."""
    source = _require_path(cfg.input_path, "--in")
    output = _require_path(cfg.output_path, "--out")
    ensemble = read_polygon_ensemble(source)
    polygons = ensemble.to_configs()

    frames = [lift(polygon) for polygon in polygons]
    residual = max(
        (
            float(np.max(np.abs(phi_k(frame).edges - p.edges)))
            for frame, p in zip(frames, polygons, strict=True)
        ),
        default=0.0,
    )
    write_model(FrameEnsemble.from_frames(ensemble.tag, ensemble.seed, frames, ensemble.k), output)
    _emit(
        LiftSummary(
            algebra=ensemble.algebra,
            k=ensemble.k,
            count=len(frames),
            max_residual=residual,
            output=str(output),
        )
    )
    return EXIT_OK


def _action_rotation(cfg: RunConfig, ensemble: PolygonEnsemble) -> Rotation:
    """The rotation of R^n applied to every polygon of the ensemble."""
    rng = np.random.default_rng(child_seed(cfg.seed, 0))
    if cfg.word_length is not None:
        return word_rotation(random_word(ensemble.tag, cfg.word_length, rng))
    return random_rotation(ensemble.n, rng)


def cmd_act(cfg: RunConfig) -> int:
    """
    Apply one seeded group element to every polygon of an ensemble.

    With --word-length the element is a random generator word of that length (the empty word is
    the identity); otherwise it is a Haar-random rotation of R^n. The moved polygons must stay in
    the SO(n) class of the originals.

    Raises:
        DimensionMismatchError: If --algebra names a different algebra than the ensemble's
    """
    source = _require_path(cfg.input_path, "--in")
    output = _require_path(cfg.output_path, "--out")
    ensemble = read_polygon_ensemble(source)
    if cfg.algebra is not None and cfg.algebra is not ensemble.tag:
        raise DimensionMismatchError("ensemble dimension", cfg.algebra.hopf_dim, ensemble.n)

    polygons = ensemble.to_configs()
    rotation = _action_rotation(cfg, ensemble)
    moved = [rotate_polygon(rotation, polygon) for polygon in polygons]
    deviation = max(
        (gram_deviation(p, q) for p, q in zip(polygons, moved, strict=True)), default=0.0
    )
    tolerance = cfg.tol if cfg.tol is not None else get_settings().default_tol

    write_model(
        PolygonEnsemble.from_configs(ensemble.tag, ensemble.seed, moved, ensemble.k), output
    )
    action: Literal["identity", "rotation", "word"] = "rotation"
    if cfg.word_length is not None:
        action = "word" if cfg.word_length > 0 else "identity"
    summary = ActSummary(
        algebra=ensemble.algebra,
        k=ensemble.k,
        count=len(moved),
        action=action,
        word_length=cfg.word_length,
        max_gram_deviation=deviation,
        tolerance=tolerance,
        output=str(output),
    )
    _emit(summary)
    if not summary.passed:
        logger.warning(
            "Action changed the polygon classes",
            extra={"max_gram_deviation": deviation, "tolerance": tolerance},
        )
        return EXIT_FAILURE
    return EXIT_OK


def cmd_stats(cfg: RunConfig) -> int:
    """Write an edge-length histogram as CSV and print summary statistics."""
    source = _require_path(cfg.input_path, "--in")
    output = _require_path(cfg.output_path, "--out")
    ensemble = read_polygon_ensemble(source)
    lengths = np.linalg.norm(np.asarray(ensemble.polygons, dtype=np.float64), axis=-1).ravel()
    if lengths.size == 0:
        raise ValueError(f"{source} holds no polygons")

    counts, edges = np.histogram(lengths, bins=cfg.bins)
    with output.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["bin_start", "bin_end", "count"])
        for start, end, count in zip(edges[:-1], edges[1:], counts, strict=True):
            writer.writerow([repr(float(start)), repr(float(end)), int(count)])

    _emit(
        EdgeLengthStats(
            algebra=ensemble.algebra,
            k=ensemble.k,
            count=len(ensemble.polygons),
            edges=int(lengths.size),
            bins=cfg.bins,
            mean=float(lengths.mean()),
            std=float(lengths.std()),
            min=float(lengths.min()),
            max=float(lengths.max()),
            median=float(np.median(lengths)),
            output=str(output),
        )
    )
    return EXIT_OK


COMMANDS = {
    "sample": cmd_sample,
    "verify": cmd_verify,
    "lift": cmd_lift,
    "act": cmd_act,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyhopf",
        description="Polygon spaces from Hopf maps over R, C, H and O",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=0, help="Run seed (default: 0)")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument(
        "--algebra",
        type=str.upper,
        choices=ALGEBRA_CHOICES,
        default=None,
        help="Normed division algebra (sample default: O)",
    )

    tolerant = argparse.ArgumentParser(add_help=False)
    tolerant.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Tolerance override (default: POLYHOPF_DEFAULT_TOL or the per-check setting)",
    )

    reads = argparse.ArgumentParser(add_help=False)
    reads.add_argument(
        "--in", dest="input_path", type=Path, required=True, help="Polygon ensemble file"
    )

    writes = argparse.ArgumentParser(add_help=False)
    writes.add_argument("--out", dest="output_path", type=Path, required=True, help="Output file")

    sample = commands.add_parser(
        "sample", parents=[algebra, seeded, writes], help="Sample a polygon ensemble"
    )
    sample.add_argument("--k", type=int, default=8, help="Edges per polygon (default: 8)")
    sample.add_argument("--count", type=int, default=1, help="Number of polygons (default: 1)")

    verify = commands.add_parser(
        "verify", parents=[seeded, tolerant], help="Run the property suites"
    )
    verify.add_argument("--suite", choices=SUITE_CHOICES, default="all", help="Suite to run")
    verify.add_argument(
        "--trials", type=int, default=1000, help="Random trials per property (default: 1000)"
    )
    verify.add_argument(
        "--out", dest="output_path", type=Path, default=None, help="Also write the report here"
    )

    commands.add_parser("lift", parents=[reads, writes], help="Lift an ensemble to frames")

    act = commands.add_parser(
        "act",
        parents=[algebra, seeded, tolerant, reads, writes],
        help="Apply a seeded rotation or generator word to an ensemble",
    )
    act.add_argument(
        "--word-length",
        type=int,
        default=None,
        help="Act by a random generator word of this length instead of a Haar rotation",
    )

    stats = commands.add_parser(
        "stats", parents=[reads, writes], help="Edge-length histogram as CSV"
    )
    stats.add_argument("--bins", type=int, default=20, help="Histogram bins (default: 20)")
    return parser


def _parse_config(argv: Sequence[str] | None) -> RunConfig:
    """
    Raises:
        SystemExit: From argparse on malformed arguments or --help
        ValidationError: If the arguments violate a RunConfig constraint
    """
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    return RunConfig(**values)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments and run one command.

    Returns:
        Exit code (0 for success, 1 for verification failure, 2 for usage or I/O errors)
    """
    try:
        cfg = _parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValidationError as exc:
        print(f"ERROR: invalid arguments\n{exc}", file=sys.stderr)
        return EXIT_USAGE

    # Each invocation reads its own environment.
    get_settings.cache_clear()
    try:
        settings = get_settings()
    except ValidationError as exc:
        print(f"ERROR: invalid POLYHOPF_* environment settings\n{exc}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(settings)
    set_run_id(cfg.run_id)
    logger.info("Running command", extra={"command": cfg.command, "seed": cfg.seed})

    try:
        return COMMANDS[cfg.command](cfg)
    except PolyHopfError as exc:
        logger.error(
            "Command failed",
            extra={"command": cfg.command, "error_code": exc.error_code, "error": exc.message},
        )
        print(f"ERROR [{exc.error_code}]: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        logger.error("Command failed", extra={"command": cfg.command, "error": str(exc)})
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        logger.error("I/O failure", extra={"command": cfg.command, "error": str(exc)})
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        clear_run_id()

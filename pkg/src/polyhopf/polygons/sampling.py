"""
Random Stiefel frames and polygon ensembles.

A frame is drawn as two rows of independent standard Gaussian algebra elements which are then
orthonormalized with orthonormalize_rows.

Degenerate draws are retried through tenacity with the same generator, so the retry sequence is
part of the deterministic stream of the seed.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from tenacity import (
    RetryError,
    Retrying,
    after_log,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from polyhopf.algebra.element import AlgebraTag
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import Settings, get_settings
from polyhopf.polygons.pipeline import phi_k
from polyhopf.polygons.types import MIN_EDGES, PolygonConfig, StiefelFrame, orthonormalize_rows
from polyhopf.seeding import SeedLike, as_generator, child_sequence
from polyhopf.utils.errors import DegenerateDrawError, DimensionMismatchError, SamplingError
from polyhopf.utils.logging import get_logger
from polyhopf.utils.run_context import submit_in_context

logger = get_logger(__name__)

ROW_NORM_FLOOR = 1e-12


def draw_frame_columns(tag: AlgebraTag, k: int, rng: np.random.Generator) -> FloatArray:
    """
    One orthonormalization attempt, returned as (k, 2, d) columns.

    Raises:
        DegenerateDrawError: If a row norm falls below ROW_NORM_FLOOR
    """
    rows = rng.standard_normal((2, k, tag.dim))
    return orthonormalize_rows(rows[0], rows[1], ROW_NORM_FLOOR)


def sample_stiefel(
    tag: AlgebraTag, k: int, seed: SeedLike, settings: Settings | None = None
) -> StiefelFrame:
    """
    Draw a random frame in V_F(2, k).

    Args:
        tag: Algebra of the frame entries
        k: Number of columns (edges of the resulting polygon)
        seed: Seed, seed sequence or generator
        settings: Source of the resample budget

    Raises:
        DimensionMismatchError: If k < 3
        SamplingError: If every attempt within the budget was degenerate
    """
    if k < MIN_EDGES:
        raise DimensionMismatchError("number of edges", f">= {MIN_EDGES}", k)
    settings = settings or get_settings()
    rng = as_generator(seed)
    retrying = Retrying(
        stop=stop_after_attempt(settings.max_resample_attempts),
        retry=retry_if_exception_type(DegenerateDrawError),
        before_sleep=before_sleep_log(logger, logging.DEBUG),
        after=after_log(logger, logging.DEBUG),
    )
    try:
        columns = retrying(draw_frame_columns, tag, k, rng)
    except RetryError as exc:
        logger.error(
            "Stiefel sampling gave up",
            extra={"algebra": tag.symbol, "k": k, "attempts": settings.max_resample_attempts},
        )
        raise SamplingError(settings.max_resample_attempts) from exc
    return StiefelFrame(tag, columns)


def sample_ensemble(
    tag: AlgebraTag, k: int, count: int, seed: int, settings: Settings | None = None
) -> list[StiefelFrame]:
    """
    Draw count frames; frame i uses the sub-stream (seed, i).

    The result does not depend on ``settings.workers``.
    """
    settings = settings or get_settings()

    def draw(index: int) -> StiefelFrame:
        return sample_stiefel(tag, k, child_sequence(seed, index), settings)

    logger.info(
        "Sampling frame ensemble",
        extra={"algebra": tag.symbol, "k": k, "count": count, "workers": settings.workers},
    )
    if not settings.parallel:
        return [draw(index) for index in range(count)]
    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        futures = [submit_in_context(pool, draw, index) for index in range(count)]
        return [future.result() for future in futures]


def sample_polygons(
    tag: AlgebraTag, k: int, count: int, seed: int, settings: Settings | None = None
) -> list[PolygonConfig]:
    return [phi_k(frame) for frame in sample_ensemble(tag, k, count, seed, settings)]

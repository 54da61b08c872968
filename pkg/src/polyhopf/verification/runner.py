"""
Verification runner.

All properties live in one registry sorted by (suite, name). Property j of the registry draws from
the sub-stream child_seed(seed, j), so its seed is the same whether it runs alone with
``--suite`` or inside ``--suite all``, and the printed seed reproduces it either way.
"""

import time
from concurrent.futures import ThreadPoolExecutor

from polyhopf.config import Settings, get_settings
from polyhopf.models.reports import PropertyResult, VerificationReport
from polyhopf.seeding import child_seed
from polyhopf.utils.logging import get_logger
from polyhopf.utils.run_context import submit_in_context
from polyhopf.verification import algebra, hopf, polygon, spin
from polyhopf.verification.base import PropertyCheck

logger = get_logger(__name__)

SUITES: dict[str, tuple[type[PropertyCheck], ...]] = {
    "algebra": algebra.CHECKS,
    "hopf": hopf.CHECKS,
    "spin": spin.CHECKS,
    "polygon": polygon.CHECKS,
}
ALL_SUITES = "all"


def registry() -> list[PropertyCheck]:
    """Every property check, ordered by suite then name."""
    checks = [check() for checks in SUITES.values() for check in checks]
    return sorted(checks, key=lambda check: (check.suite, check.name))


def select(suite: str) -> list[tuple[int, PropertyCheck]]:
    """
    The registry entries of one suite, with their registry index.

    Raises:
        ValueError: If the suite is unknown
    """
    if suite != ALL_SUITES and suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}; expected one of {[*SUITES, ALL_SUITES]}")
    return [
        (index, check)
        for index, check in enumerate(registry())
        if suite == ALL_SUITES or check.suite == suite
    ]


def run_verification(
    suite: str,
    trials: int,
    seed: int,
    tol: float | None = None,
    settings: Settings | None = None,
) -> VerificationReport:
    """
    Run the selected properties and collect their results.

    Args:
        suite: "algebra", "hopf", "spin", "polygon" or "all"
        trials: Requested trial count per property
        seed: Run seed
        tol: Tolerance override for every non-exact property
        settings: Settings providing default tolerances and the worker count

    Returns:
        VerificationReport with properties in registry order
    """
    settings = settings or get_settings()
    selected = select(suite)
    logger.info(
        "Starting verification",
        extra={"suite": suite, "properties": len(selected), "trials": trials, "seed": seed},
    )
    start = time.perf_counter()

    def run_one(entry: tuple[int, PropertyCheck]) -> PropertyResult:
        index, check = entry
        return check.run(trials, child_seed(seed, index), tol=tol, settings=settings)

    if settings.parallel:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            futures = [submit_in_context(pool, run_one, entry) for entry in selected]
            results = [future.result() for future in futures]
    else:
        results = [run_one(entry) for entry in selected]

    report = VerificationReport(suite=suite, trials=trials, seed=seed, properties=results)
    logger.info(
        "Verification finished",
        extra={
            "suite": suite,
            "passed": report.passed,
            "failures": [result.name for result in report.failures()],
            "elapsed_seconds": round(time.perf_counter() - start, 3),
        },
    )
    return report

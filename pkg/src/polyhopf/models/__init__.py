"""Pydantic models for files, reports and run configuration."""

from polyhopf.models.ensemble import FrameEnsemble, PolygonEnsemble
from polyhopf.models.reports import (
    ActSummary,
    EdgeLengthStats,
    LiftSummary,
    PropertyResult,
    SampleSummary,
    VerificationReport,
)
from polyhopf.models.run import RunConfig

__all__ = [
    "ActSummary",
    "EdgeLengthStats",
    "FrameEnsemble",
    "LiftSummary",
    "PolygonEnsemble",
    "PropertyResult",
    "RunConfig",
    "SampleSummary",
    "VerificationReport",
]

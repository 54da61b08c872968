"""
Report models printed by the command-line interface.

The verify command prints a VerificationReport as JSON. Every property carries the integer seed
of its own random stream, so a failing property can be replayed in isolation. The ensemble
commands print one summary model each.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

from polyhopf.models.ensemble import AlgebraSymbol


class PropertyResult(BaseModel):
    """Outcome of one property check."""

    # A property that raised reports an infinite residual; keep the report valid JSON.
    model_config = ConfigDict(ser_json_inf_nan="strings")

    name: str = Field(description="Property identifier, e.g. 'moufang_identities'")
    suite: str = Field(description="Suite the property belongs to")
    passed: bool = Field(description="Whether max_residual <= tolerance")
    max_residual: float = Field(description="Largest residual observed over all trials")
    tolerance: float = Field(ge=0.0, description="Residual bound; 0 for exact properties")
    trials: int = Field(ge=0, description="Number of random trials evaluated")
    seed: int = Field(ge=0, description="Seed of the property's random stream")
    error: str | None = Field(default=None, description="Error raised while evaluating, if any")


class VerificationReport(BaseModel):
    """Aggregated results of one verify run, ordered by suite then property name."""

    suite: str = Field(description="Requested suite: algebra, hopf, spin, polygon or all")
    trials: int = Field(ge=1, description="Requested trial count")
    seed: int = Field(ge=0, description="Run seed")
    properties: list[PropertyResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.properties)

    def failures(self) -> list[PropertyResult]:
        return [result for result in self.properties if not result.passed]


class _EnsembleSummary(BaseModel):
    algebra: AlgebraSymbol
    k: int = Field(ge=3)
    count: int = Field(ge=0, description="Polygons in the ensemble")
    output: str | None = Field(default=None, description="File the command wrote")


class SampleSummary(_EnsembleSummary):
    seed: int = Field(ge=0)
    mean_edge_length: float
    max_closure_residual: float


class LiftSummary(_EnsembleSummary):
    max_residual: float = Field(description="Largest |phi_k(lift(p)) - p| entry")


class ActSummary(_EnsembleSummary):
    action: Literal["identity", "rotation", "word"]
    word_length: int | None = None
    max_gram_deviation: float
    tolerance: float

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.max_gram_deviation <= self.tolerance


class EdgeLengthStats(_EnsembleSummary):
    edges: int = Field(ge=0, description="Edge lengths in the histogram")
    bins: int = Field(ge=1)
    mean: float
    std: float
    min: float
    max: float
    median: float

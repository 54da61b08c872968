"""
Validated command-line run configuration.
"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from polyhopf.algebra.element import AlgebraTag
from polyhopf.models.ensemble import UINT64_MAX

Command = Literal["sample", "verify", "lift", "act", "stats"]
Suite = Literal["algebra", "hopf", "spin", "polygon", "all"]


class RunConfig(BaseModel):
    """One command invocation after argument parsing."""

    model_config = ConfigDict(frozen=True)

    command: Command = Field(description="Subcommand to run")
    algebra: AlgebraTag | None = Field(
        default=None, description="Requested algebra; sample falls back to the octonions"
    )
    k: int = Field(default=8, ge=3, description="Edges per polygon")
    count: int = Field(default=1, ge=1, description="Number of polygons to sample")
    trials: int = Field(default=1000, ge=1, description="Random trials per property")
    seed: int = Field(default=0, ge=0, le=UINT64_MAX, description="Run seed")
    tol: float | None = Field(default=None, gt=0.0, description="Tolerance override")
    suite: Suite = Field(default="all", description="Verification suite")
    input_path: Path | None = Field(default=None, description="Input ensemble file")
    output_path: Path | None = Field(default=None, description="Output file")
    word_length: int | None = Field(default=None, ge=0, description="Generator word length")
    bins: int = Field(default=20, ge=1, description="Histogram bins for stats")

    @field_validator("algebra", mode="before")
    @classmethod
    def parse_algebra(cls, value: object) -> object:
        if isinstance(value, str):
            return AlgebraTag.from_symbol(value)
        return value

    @property
    def tag(self) -> AlgebraTag:
        return self.algebra if self.algebra is not None else AlgebraTag.OCTONION

    @property
    def run_id(self) -> str:
        return f"{self.command}-{self.tag.symbol}-{self.seed}"

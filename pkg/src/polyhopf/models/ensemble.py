"""
Ensemble file models.

A polygon ensemble file is the JSON document

    {"algebra": "R"|"C"|"H"|"O", "k": int, "n": int, "seed": uint64, "polygons": [[[f64 x n] x k]]}

and a frame ensemble stores, per frame, k columns of two coefficient arrays (x_i, y_i). Floats are
written in shortest round-trip form, so reading a file back reproduces every value bit for bit.
"""

from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from polyhopf.algebra.element import AlgebraTag
from polyhopf.polygons.types import PolygonConfig, StiefelFrame
from polyhopf.utils.errors import EnsembleFormatError, PolyHopfError

AlgebraSymbol = Literal["R", "C", "H", "O"]
UINT64_MAX = 2**64 - 1


class _EnsembleHeader(BaseModel):
    algebra: AlgebraSymbol = Field(description="Algebra symbol R, C, H or O")
    k: int = Field(ge=3, description="Number of edges per polygon")
    n: int = Field(description="Ambient dimension 1 + dim F")
    seed: int = Field(ge=0, le=UINT64_MAX, description="Seed the ensemble was drawn from")

    @property
    def tag(self) -> AlgebraTag:
        return AlgebraTag.from_symbol(self.algebra)

    @model_validator(mode="after")
    def check_dimension(self) -> "_EnsembleHeader":
        if self.n != self.tag.hopf_dim:
            raise ValueError(f"n = {self.n} does not match algebra {self.algebra}")
        return self


class PolygonEnsemble(_EnsembleHeader):
    """A seeded ensemble of closed unit-perimeter polygons."""

    polygons: list[list[list[float]]] = Field(description="Edge vectors, one k x n array each")

    @model_validator(mode="after")
    def check_shapes(self) -> "PolygonEnsemble":
        for index, edges in enumerate(self.polygons):
            if np.shape(edges) != (self.k, self.n):
                raise ValueError(f"polygon {index} has shape {np.shape(edges)}")
        return self

    @classmethod
    def from_configs(
        cls, tag: AlgebraTag, seed: int, polygons: list[PolygonConfig], k: int
    ) -> "PolygonEnsemble":
        return cls(
            algebra=tag.symbol,
            k=k,
            n=tag.hopf_dim,
            seed=seed,
            polygons=[p.edges.tolist() for p in polygons],
        )

    def to_configs(self) -> list[PolygonConfig]:
        """
        Raises:
            EnsembleFormatError: If a stored polygon is not closed or not normalized
        """
        try:
            return [PolygonConfig(np.array(edges)) for edges in self.polygons]
        except PolyHopfError as exc:
            raise EnsembleFormatError(f"Invalid polygon in ensemble: {exc.message}") from exc


class FrameEnsemble(_EnsembleHeader):
    """Stiefel frames, each stored as k columns [x coefficients, y coefficients]."""

    frames: list[list[list[list[float]]]] = Field(description="Frame columns, k x 2 x dim each")

    @model_validator(mode="after")
    def check_shapes(self) -> "FrameEnsemble":
        expected = (self.k, 2, self.tag.dim)
        for index, columns in enumerate(self.frames):
            if np.shape(columns) != expected:
                raise ValueError(f"frame {index} has shape {np.shape(columns)}")
        return self

    @classmethod
    def from_frames(
        cls, tag: AlgebraTag, seed: int, frames: list[StiefelFrame], k: int
    ) -> "FrameEnsemble":
        return cls(
            algebra=tag.symbol,
            k=k,
            n=tag.hopf_dim,
            seed=seed,
            frames=[frame.columns.tolist() for frame in frames],
        )

    def to_frames(self) -> list[StiefelFrame]:
        try:
            return [StiefelFrame(self.tag, np.array(columns)) for columns in self.frames]
        except PolyHopfError as exc:
            raise EnsembleFormatError(f"Invalid frame in ensemble: {exc.message}") from exc


def write_model(model: BaseModel, path: Path) -> None:
    """Write a model as compact JSON; identical models give identical bytes."""
    path.write_text(model.model_dump_json() + "\n", encoding="utf-8")


def read_polygon_ensemble(path: Path) -> PolygonEnsemble:
    """
    Raises:
        EnsembleFormatError: If the file is not a valid polygon ensemble
        OSError: If the file cannot be read
    """
    text = path.read_text(encoding="utf-8")
    try:
        return PolygonEnsemble.model_validate_json(text)
    except ValidationError as exc:
        raise EnsembleFormatError(f"{path} is not a polygon ensemble: {exc}") from exc

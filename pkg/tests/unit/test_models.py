"""
Tests for ensemble files, the run configuration and report models.

Tests verify:
1. Ensemble headers are checked against the algebra and the stored shapes
2. Written ensembles read back bit for bit
3. RunConfig rejects out-of-range arguments and derives the run id
4. Reports serialize infinite residuals and aggregate pass/fail
"""

import json

import numpy as np
import pytest
from pydantic import ValidationError

from polyhopf.algebra.element import AlgebraTag
from polyhopf.models import (
    ActSummary,
    FrameEnsemble,
    PolygonEnsemble,
    PropertyResult,
    RunConfig,
    VerificationReport,
)
from polyhopf.models.ensemble import UINT64_MAX, read_polygon_ensemble, write_model
from polyhopf.polygons.sampling import sample_ensemble, sample_polygons
from polyhopf.utils.errors import EnsembleFormatError

SQUARE = [[0.25, 0.0], [0.0, 0.25], [-0.25, 0.0], [0.0, -0.25]]


def result(name: str, passed: bool, residual: float = 0.0) -> PropertyResult:
    return PropertyResult(
        name=name,
        suite="algebra",
        passed=passed,
        max_residual=residual,
        tolerance=1e-12,
        trials=10,
        seed=1,
    )


class TestPolygonEnsemble:
    def test_file_round_trip_is_exact(self, tmp_path):
        polygons = sample_polygons(AlgebraTag.OCTONION, 6, 3, seed=42)
        ensemble = PolygonEnsemble.from_configs(AlgebraTag.OCTONION, 42, polygons, k=6)
        path = tmp_path / "ensemble.json"
        write_model(ensemble, path)
        loaded = read_polygon_ensemble(path)
        assert loaded == ensemble
        for original, restored in zip(polygons, loaded.to_configs(), strict=True):
            np.testing.assert_array_equal(original.edges, restored.edges)

    def test_file_layout(self, tmp_path):
        path = tmp_path / "square.json"
        write_model(PolygonEnsemble(algebra="R", k=4, n=2, seed=7, polygons=[SQUARE]), path)
        document = json.loads(path.read_text())
        assert set(document) == {"algebra", "k", "n", "seed", "polygons"}
        assert document["polygons"] == [SQUARE]

    def test_dimension_must_match_algebra(self):
        with pytest.raises(ValidationError, match="does not match algebra"):
            PolygonEnsemble(algebra="H", k=4, n=2, seed=0, polygons=[SQUARE])

    def test_shapes_checked(self):
        with pytest.raises(ValidationError, match="polygon 0 has shape"):
            PolygonEnsemble(algebra="R", k=3, n=2, seed=0, polygons=[SQUARE])

    @pytest.mark.parametrize("seed", [-1, UINT64_MAX + 1])
    def test_seed_range(self, seed):
        with pytest.raises(ValidationError):
            PolygonEnsemble(algebra="R", k=4, n=2, seed=seed, polygons=[])

    def test_largest_seed(self):
        ensemble = PolygonEnsemble(algebra="R", k=4, n=2, seed=UINT64_MAX, polygons=[])
        assert ensemble.seed == UINT64_MAX

    def test_open_polygon_rejected(self):
        edges = [row[:] for row in SQUARE]
        edges[0][0] = 0.5
        ensemble = PolygonEnsemble(algebra="R", k=4, n=2, seed=0, polygons=[edges])
        with pytest.raises(EnsembleFormatError):
            ensemble.to_configs()

    def test_unreadable_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"algebra": "Q"}')
        with pytest.raises(EnsembleFormatError) as info:
            read_polygon_ensemble(path)
        assert info.value.error_code == "EnsembleFormatError"

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_polygon_ensemble(tmp_path / "absent.json")


class TestFrameEnsemble:
    def test_frames_round_trip(self):
        frames = sample_ensemble(AlgebraTag.QUATERNION, 5, 2, seed=3)
        ensemble = FrameEnsemble.from_frames(AlgebraTag.QUATERNION, 3, frames, k=5)
        restored = FrameEnsemble.model_validate_json(ensemble.model_dump_json()).to_frames()
        assert all(a.distance(b) == 0.0 for a, b in zip(frames, restored, strict=True))

    def test_shapes_checked(self):
        with pytest.raises(ValidationError, match="frame 0 has shape"):
            FrameEnsemble(algebra="C", k=3, n=3, seed=0, frames=[[[[1.0, 0.0]] * 2] * 4])

    def test_invalid_frame(self):
        ensemble = FrameEnsemble(algebra="C", k=3, n=3, seed=0, frames=[[[[1.0, 0.0]] * 2] * 3])
        with pytest.raises(EnsembleFormatError):
            ensemble.to_frames()


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(command="sample")
        assert (config.k, config.count, config.trials, config.seed) == (8, 1, 1000, 0)
        assert config.algebra is None
        assert config.tag is AlgebraTag.OCTONION

    def test_algebra_symbol(self):
        assert RunConfig(command="sample", algebra="h").algebra is AlgebraTag.QUATERNION

    def test_run_id(self):
        assert RunConfig(command="sample", algebra="O", seed=42).run_id == "sample-O-42"

    @pytest.mark.parametrize(
        "overrides",
        [
            {"algebra": "X"},
            {"k": 2},
            {"count": 0},
            {"trials": 0},
            {"seed": -1},
            {"tol": 0.0},
            {"suite": "geometry"},
            {"word_length": -1},
            {"bins": 0},
        ],
    )
    def test_invalid_arguments(self, overrides):
        with pytest.raises(ValidationError):
            RunConfig(command="sample", **overrides)

    def test_frozen(self):
        config = RunConfig(command="verify")
        with pytest.raises(ValidationError):
            config.seed = 3


class TestReports:
    def test_infinite_residual_is_valid_json(self):
        document = json.loads(result("moufang_identities", False, float("inf")).model_dump_json())
        assert document["max_residual"] == "Infinity"

    def test_report_passes_when_every_property_passes(self):
        report = VerificationReport(
            suite="algebra", trials=10, seed=0, properties=[result("a", True), result("b", True)]
        )
        assert report.passed
        assert report.failures() == []
        assert json.loads(report.model_dump_json())["passed"] is True

    def test_failures(self):
        failing = result("moufang_identities", False, 1.0)
        report = VerificationReport(
            suite="algebra", trials=10, seed=0, properties=[result("a", True), failing]
        )
        assert not report.passed
        assert report.failures() == [failing]

    def test_act_summary_verdict(self):
        summary = ActSummary(
            algebra="O",
            k=8,
            count=2,
            action="word",
            word_length=4,
            max_gram_deviation=2e-15,
            tolerance=1e-9,
        )
        assert summary.passed
        assert json.loads(summary.model_dump_json())["passed"] is True

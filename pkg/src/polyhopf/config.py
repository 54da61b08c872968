"""
Configuration management using Pydantic Settings.

This module holds every numeric tolerance and runtime knob of the polyhopf library. Values are
read from the environment (prefix ``POLYHOPF_``) and an optional ``.env`` file, so that
``POLYHOPF_DEFAULT_TOL=1e-8 polyhopf verify`` loosens the composite tolerance without code changes.
"""

from functools import lru_cache

from pydantic import Field, computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Library settings loaded from environment variables and .env file.

    Tolerances are split by what they guard: single algebra products, composite expressions,
    zero tests that select a branch, and validation of the frame/polygon/group value types.
    """

    model_config = SettingsConfigDict(
        env_prefix="POLYHOPF_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Numerical tolerances
    default_tol: float = Field(
        default=1e-9,
        description="Relative tolerance for composite expressions",
        gt=0.0,
    )
    product_tol: float = Field(
        default=1e-12,
        description="Relative tolerance for single algebra products",
        gt=0.0,
    )
    zero_tol: float = Field(
        default=1e-12,
        description="Spinor coordinate counts as zero below this fraction of the spinor norm",
        gt=0.0,
    )
    edge_zero_tol: float = Field(
        default=1e-12,
        description="Absolute length below which a normalized polygon edge is degenerate",
        gt=0.0,
    )
    unit_tol: float = Field(
        default=1e-12,
        description="Allowed deviation of |c|^2 from 1 for unit elements and generators",
        gt=0.0,
    )
    frame_tol: float = Field(
        default=1e-10,
        description="Allowed residual of the Stiefel frame orthonormality sums",
        gt=0.0,
    )
    polygon_tol: float = Field(
        default=1e-10,
        description="Allowed closure and perimeter residual of a polygon",
        gt=0.0,
    )
    group_tol: float = Field(
        default=1e-10,
        description="Allowed residual of unitarity, orthogonality and determinant checks",
        gt=0.0,
    )
    rank_tol: float = Field(
        default=1e-9,
        description="Singular value threshold used when choosing independent edges",
        gt=0.0,
    )
    identity_tol: float = Field(
        default=1e-10,
        description="Relative tolerance for Hopf round trips and the spin identities",
        gt=0.0,
    )
    reconstruction_tol: float = Field(
        default=1e-8,
        description="Frobenius tolerance for rebuilding a rotation from reflections",
        gt=0.0,
    )
    witness_tol: float = Field(
        default=1e-7,
        description="Tolerance for the rotation, group element and fiber witness chain",
        gt=0.0,
    )

    # Sampling
    max_resample_attempts: int = Field(
        default=100,
        description="Degenerate Stiefel draws tolerated before sampling gives up",
        ge=1,
        le=10_000,
    )
    workers: int = Field(
        default=1,
        description="Threads used for ensemble generation (output does not depend on it)",
        ge=1,
        le=256,
    )

    # Logging
    log_level: str = Field(
        default="WARNING",
        description="Logging level",
        pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$",
    )
    log_format: str = Field(
        default="json",
        description="Logging format",
        pattern="^(json|standard)$",
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def parallel(self) -> bool:
        """Whether ensemble generation fans out to a thread pool."""
        return self.workers > 1


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()

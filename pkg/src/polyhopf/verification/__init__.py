"""Executable property suites for the algebra, Hopf, spin and polygon layers."""

from polyhopf.verification.base import PropertyCheck
from polyhopf.verification.runner import SUITES, registry, run_verification, select

__all__ = ["SUITES", "PropertyCheck", "registry", "run_verification", "select"]

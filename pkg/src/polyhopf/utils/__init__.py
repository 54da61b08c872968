"""Ambient utilities: errors, logging and run context."""

from polyhopf.utils.errors import PolyHopfError
from polyhopf.utils.logging import get_logger, setup_logging
from polyhopf.utils.run_context import get_run_id, set_run_id

__all__ = ["PolyHopfError", "get_logger", "get_run_id", "set_run_id", "setup_logging"]

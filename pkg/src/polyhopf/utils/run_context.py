"""
Run context management using contextvars.

Each command-line invocation gets a run id derived from its command and seed. The id is stored
in a context variable so the JSON formatter can stamp it on every record emitted while the
command runs, including records from worker threads started through submit_in_context.
"""

from collections.abc import Callable
from concurrent.futures import Executor, Future
from contextvars import ContextVar, copy_context
from typing import Any, TypeVar

T = TypeVar("T")

_run_id_var: ContextVar[str | None] = ContextVar("run_id", default=None)


def set_run_id(run_id: str) -> None:
    """
    Set the current run id for automatic propagation into logs.

    Args:
        run_id: Identifier of the running command, e.g. "sample-O-42"
    """
    _run_id_var.set(run_id)


def get_run_id() -> str | None:
    """Return the current run id, or None outside a command."""
    return _run_id_var.get()


def clear_run_id() -> None:
    _run_id_var.set(None)


def submit_in_context(pool: Executor, fn: Callable[..., T], *args: Any) -> Future[T]:
    """
    Submit fn to a pool inside a copy of the caller's context, so workers see its run id.

    Each task needs its own copy; one Context cannot be entered by two threads at once.
    """
    return pool.submit(copy_context().run, fn, *args)

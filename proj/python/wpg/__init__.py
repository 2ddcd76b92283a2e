"""Solvers for parity games with weights and related games."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ValidationError, ParseError, CapacityError

__all__ = [name for name in dir() if not name.startswith("_")]

"""Letter graphs, grid classes, chain circuits and locally ordered hypergraphs."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExhausted, InputError

__all__ = [name for name in dir() if not name.startswith("_")]

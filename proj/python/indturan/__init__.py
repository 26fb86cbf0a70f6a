"""Generators, detectors, counters and embedding pipelines for induced Turán problems."""

from ._core import *  # noqa: F401,F403
from ._core import Graph, RootedTree, run_command

__all__ = [name for name in dir() if not name.startswith("_")]

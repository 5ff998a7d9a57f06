"""Exact workbench for type-A graded Hecke algebra modules and the GL(n,C) transfer."""

__version__ = "0.1.0"

from .rational import Rational, rat, rat_str  # noqa: F401

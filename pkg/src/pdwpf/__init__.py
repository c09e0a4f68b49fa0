"""Exact six-vertex partition functions with (partial) domain wall boundaries."""

__version__ = "0.1.0"

"""Verification engine for universal sums of generalized octagonal numbers."""

__version__ = "0.1.0"

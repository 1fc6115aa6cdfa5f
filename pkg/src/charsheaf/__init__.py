"""Exact engine for Lusztig's algorithm on the Suzuki and Ree groups."""

__version__ = "0.1.0"

"""Exact construction and node certification of symmetric hyperquintics."""

__version__ = "0.1.0"

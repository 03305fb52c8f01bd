"""Enumeration of singular points of the pencil by multiplicity pattern."""
from .census import CensusReport, ParamSummary, SingularOrbit, census, lam_key
from .orbits import line_count, orbit_length
from .solve import SolverError, enumerate_patterns, solve_pattern

__all__ = [
    "CensusReport", "ParamSummary", "SingularOrbit", "SolverError",
    "census", "enumerate_patterns", "lam_key", "line_count", "orbit_length", "solve_pattern",
]

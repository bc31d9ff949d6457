"""Constraint search that exploits symmetries inside individual solutions.

Submodules: ``symmetry`` (literal bijections, closure, generation), ``csp``
(finite-domain solver), ``magic``, ``vdw`` and ``graceful`` (problem
drivers) and ``cli``.
"""

from __future__ import annotations

from .csp import Model, ModelBuilder, SearchStats, Solver, count_solutions, enumerate_solutions, solve
from .symmetry import Literal, SymmetryMap, closure, compose, generate, inverse, is_internal_symmetry

__all__ = [
    "Literal",
    "SymmetryMap",
    "closure",
    "compose",
    "generate",
    "inverse",
    "is_internal_symmetry",
    "Model",
    "ModelBuilder",
    "SearchStats",
    "Solver",
    "solve",
    "enumerate_solutions",
    "count_solutions",
]

__version__ = "0.1.0"

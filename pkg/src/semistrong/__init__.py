"""Semistrong edge coloring toolkit.

Exact brute-force solvers and verifiers for proper / uniquely-restricted /
semistrong / strong edge colorings of small graphs, a linear-time dynamic
program computing the semistrong chromatic index of trees (with explicit
colorings), and the edge-replacement gadget constructions that make the
k-color decision problem hard, validated computationally.
"""

from . import coloring, generators, graph, reduction, solver, treedp
from ._engine import native_available

__version__ = "0.1.0"

__all__ = [
    "coloring",
    "generators",
    "graph",
    "native_available",
    "reduction",
    "solver",
    "treedp",
]

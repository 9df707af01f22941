"""Brute-force exact solvers for small instances.

These are the ground-truth oracles for the tree DP and the gadget lemmas:
decide feasibility of a k-edge-coloring of any kind, minimize the number of
colors, or enumerate every valid coloring.  Outcomes are exact; an exhausted
node budget is reported as "unknown", never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _engine
from ._solver_py import bfs_edge_order, run_search
from .coloring import KINDS, EdgeColoring
from .graph import Graph

_KIND_CODE = {"proper": 0, "semistrong": 1, "strong": 2}

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNKNOWN = "unknown"


class BudgetExhausted(RuntimeError):
    """A minimization could not be certified within the node budget."""


@dataclass(frozen=True)
class SolveLimits:
    max_nodes: int | None = None
    max_solutions: int | None = None

    def __post_init__(self):
        for name in ("max_nodes", "max_solutions"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class SolveRequest:
    graph: Graph
    kind: str
    palette_size: int
    limits: SolveLimits = field(default_factory=SolveLimits)
    symmetry: bool = True
    engine: str = "auto"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.palette_size < 1:
            raise ValueError("palette_size must be >= 1")


@dataclass(frozen=True)
class DecideResult:
    status: str           # feasible | infeasible | unknown
    witness: EdgeColoring | None
    nodes: int
    engine: str

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


@dataclass(frozen=True)
class EnumerationResult:
    count: int
    exhausted: bool       # full space visited (no budget/cap interruption)
    cap_reached: bool
    budget_hit: bool
    nodes: int
    engine: str


def _resolve(req: SolveRequest) -> str:
    fits = (
        req.kind in _KIND_CODE
        and req.graph.vertex_count <= 64
        and req.palette_size <= 32
    )
    engine = _engine.resolve_engine(req.engine, fits)
    if engine == "native" and not fits:
        raise RuntimeError(
            "native solver supports proper/semistrong/strong with n <= 64 "
            "and palette <= 32"
        )
    return engine


def _search(req: SolveRequest, solution_cap, want_witness, visitor):
    engine = _resolve(req)
    order = bfs_edge_order(req.graph)
    if engine == "native":
        from array import array

        k = _engine.kernels()
        eu = array("i", (u for u, _ in req.graph.edges))
        ev = array("i", (v for _, v in req.graph.edges))
        nodes, count, budget_hit, cap_hit, witness = k.solver_search(
            req.graph.vertex_count,
            req.graph.edge_count,
            eu,
            ev,
            req.palette_size,
            _KIND_CODE[req.kind],
            array("i", order),
            req.symmetry,
            -1 if req.limits.max_nodes is None else req.limits.max_nodes,
            -1 if solution_cap is None else solution_cap,
            want_witness,
            visitor,
        )
    else:
        nodes, count, budget_hit, cap_hit, witness = run_search(
            req.graph,
            req.palette_size,
            req.kind,
            order,
            req.symmetry,
            req.limits.max_nodes,
            solution_cap,
            want_witness,
            visitor,
        )
    return nodes, count, budget_hit, cap_hit, witness, engine


def decide(req: SolveRequest) -> DecideResult:
    """Exact feasibility of a kind-coloring with the request's palette.

    Edge 0 is pinned to color 1 when symmetry reduction is on (every
    coloring is a palette permutation of a pinned one, so feasibility is
    unaffected).  Returns "unknown" when the node budget ran out first.
    """
    nodes, count, budget_hit, _cap, witness, engine = _search(
        req, solution_cap=1, want_witness=True, visitor=None
    )
    if count >= 1:
        phi = EdgeColoring(tuple(witness), req.palette_size)
        return DecideResult(FEASIBLE, phi, nodes, engine)
    if budget_hit:
        return DecideResult(UNKNOWN, None, nodes, engine)
    return DecideResult(INFEASIBLE, None, nodes, engine)


def enumerate_colorings(req: SolveRequest, visitor=None) -> EnumerationResult:
    """Visit every valid coloring (up to the pinned-first-edge symmetry class
    when symmetry is on) in deterministic order; returns the count.

    A reached solution cap and an exhausted node budget are reported
    distinctly from natural exhaustion.
    """
    nodes, count, budget_hit, cap_hit, _w, engine = _search(
        req,
        solution_cap=req.limits.max_solutions,
        want_witness=False,
        visitor=visitor,
    )
    return EnumerationResult(
        count=count,
        exhausted=not budget_hit and not cap_hit,
        cap_reached=cap_hit,
        budget_hit=budget_hit,
        nodes=nodes,
        engine=engine,
    )


def min_colors(
    g: Graph,
    kind: str,
    limits: SolveLimits | None = None,
    engine: str = "auto",
) -> int:
    """Smallest feasible palette, searched upward from the max degree.

    Every kind's classes are matchings, so the max degree is a valid lower
    bound; one color per edge is always feasible, so the search terminates.
    Raises BudgetExhausted if a step cannot be certified.
    """
    if g.edge_count < 1:
        raise ValueError("min_colors needs a graph with at least one edge")
    limits = limits or SolveLimits()
    k = max(g.max_degree(), 1)
    while True:
        req = SolveRequest(g, kind, k, limits=limits, engine=engine)
        result = decide(req)
        if result.status == FEASIBLE:
            return k
        if result.status == UNKNOWN:
            raise BudgetExhausted(
                f"could not certify palette {k} within {limits.max_nodes} nodes"
            )
        k += 1

"""Driver for the tree DP: feasibility for a color budget, and the
semistrong chromatic index of a tree (always the max degree or one more).
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import _engine
from ..coloring import EdgeColoring
from ..graph import Graph, RootedTree, root_tree
from .core import Quadruple
from ._pykernel import tree_solve_py
from .feasible import FeasibleSet


class InternalInconsistency(RuntimeError):
    """An invariant the algorithm guarantees was violated; never repaired."""


def _decode_states(blob: bytes) -> frozenset[Quadruple]:
    """The native kernel emits each set as bytes of consecutive (p, q, s, t)."""
    return frozenset(
        Quadruple(blob[i], blob[i + 1], blob[i + 2], blob[i + 3])
        for i in range(0, len(blob), 4)
    )


class WitnessStore:
    """Per-vertex reachable-state sets, the material reconstruction replays.

    Native results are decoded lazily so that decision-only runs never pay
    for materializing millions of state tuples.
    """

    def __init__(self, tree: RootedTree, budget: int, sets):
        self.tree = tree
        self.budget = budget
        self._sets = sets

    def states(self, v: int) -> frozenset[Quadruple]:
        states = self._sets[v]
        if states is None:
            raise InternalInconsistency(f"no states recorded for vertex {v}")
        if isinstance(states, bytes):
            states = _decode_states(states)
            self._sets[v] = states
        return states


@dataclass(frozen=True)
class TreeSolveResult:
    tree: RootedTree
    budget: int
    feasible: bool
    root_set: FeasibleSet
    fail_vertex: int | None
    engine: str
    store: WitnessStore | None


def solve_tree(
    tree: RootedTree, budget: int, engine: str = "auto", keep_sets: bool = True
) -> TreeSolveResult:
    """Decide whether the rooted tree admits a semistrong coloring with the
    given number of colors, leaving per-vertex state sets for reconstruction.

    Processes vertices in post order: each child's set is lifted through its
    parent edge, then the lifted sets are folded left to right; the run stops
    and reports infeasible the moment any intermediate set is empty.
    Budgets below the max degree are rejected.
    """
    delta = tree.graph.max_degree()
    if budget < delta:
        raise ValueError(f"budget {budget} below max degree {delta}")
    n = tree.vertex_count
    max_chd = max((tree.chd(v) for v in range(n)), default=0)
    fits = budget <= 250 and (max_chd + 2) * (budget + 1) * (budget + 1) <= 1 << 26
    chosen = _engine.resolve_engine(engine, fits)
    if chosen == "native" and not fits:
        raise RuntimeError("instance too large for the native tree kernel")
    if chosen == "native":
        from array import array
        from itertools import accumulate, chain

        k = _engine.kernels()
        post = array("i", reversed(tree.bfs_order))
        child_off = array(
            "i", accumulate((len(c) for c in tree.children), initial=0)
        )
        child_arr = array("i", chain.from_iterable(tree.children)) or array(
            "i", [0]
        )
        feasible, fail_vertex, sets = k.tree_solve(
            n, budget, post, child_off, child_arr
        )
        fail = None if fail_vertex < 0 else fail_vertex
    else:
        feasible, fail, sets = tree_solve_py(tree, budget)

    root_set = FeasibleSet(f"T_{tree.root}")
    root_states = sets[tree.root]
    if root_states is not None:
        if isinstance(root_states, bytes):
            root_states = _decode_states(root_states)
        for state in root_states:
            root_set.add(state)
    store = WitnessStore(tree, budget, sets) if keep_sets else None
    return TreeSolveResult(
        tree=tree,
        budget=budget,
        feasible=bool(feasible),
        root_set=root_set,
        fail_vertex=fail,
        engine=chosen,
        store=store,
    )


@dataclass(frozen=True)
class TreeIndexResult:
    index: int
    coloring: EdgeColoring
    budget_used: int
    root_state: Quadruple | None
    tree: RootedTree | None


def semistrong_index_tree(
    g: Graph, root: int = 0, engine: str = "auto"
) -> TreeIndexResult:
    """Exact semistrong chromatic index of a tree, with an explicit coloring.

    Runs the DP with budget equal to the max degree; on failure the budget
    max degree + 1 must succeed (anything else is an implementation bug) and
    yields the coloring.  A single vertex has index 0, a single edge 1.
    """
    from .reconstruct import reconstruct_coloring

    if g.vertex_count <= 1:
        return TreeIndexResult(0, EdgeColoring((), 0), 0, None, None)
    tree = root_tree(g, root)
    delta = g.max_degree()
    result = solve_tree(tree, delta, engine=engine)
    if not result.feasible:
        result = solve_tree(tree, delta + 1, engine=engine)
        if not result.feasible:
            raise InternalInconsistency(
                "a tree must be colorable with max degree + 1 colors"
            )
    root_state = min(result.root_set.states())
    phi, _partition = reconstruct_coloring(result, root_state)
    index = result.budget
    return TreeIndexResult(index, phi, result.budget, root_state, tree)

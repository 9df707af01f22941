"""Pure-Python whole-tree DP kernel (state sets only, no witnesses).

Mirrors the compiled kernel exactly: identical per-vertex state sets, same
early exit at the first empty intermediate set.  Reconstruction recomputes
witnesses separately, so this path only tracks reachability.
"""

from __future__ import annotations

from ..graph import RootedTree
from .core import Quadruple
from .feasible import merge_rows_fast


def tree_solve_py(tree: RootedTree, budget: int):
    """Returns (feasible, fail_vertex, sets) with sets[v] the frozenset of
    reachable states of the subtree at v (None past a failed vertex)."""
    n = tree.vertex_count
    sets: list[frozenset[Quadruple] | None] = [None] * n
    for v in tree.post_order():
        kids = tree.children[v]
        if not kids:
            sets[v] = frozenset((Quadruple(0, 0, 0, 0),))
            continue
        rows: dict[int, set[tuple[int, int]]] | None = None
        for idx, c in enumerate(kids):
            d = tree.chd(c)
            child_states = sets[c]
            t10: set[int] = set()
            t01: set[int] = set()
            for p, q, s, t in child_states:
                total = p + q + s + t
                if total <= budget - 1:
                    t10.add(q)
                if s >= 1 and total <= budget:
                    t01.add(q)
            if not t10 and not t01:
                return False, v, sets
            if idx == 0:
                rows = {}
                if t10:
                    rows[1] = {(d - t_r, t_r) for t_r in t10}
                if t01:
                    rows[0] = {(d - t_r, t_r) for t_r in t01}
            else:
                rows = merge_rows_fast(
                    {p: sorted(row) for p, row in rows.items() if row},
                    sorted(t10),
                    sorted(t01),
                    idx,
                    d,
                    budget,
                )
                if not any(rows.values()):
                    return False, v, sets
        m = len(kids)
        sets[v] = frozenset(
            Quadruple(p, m - p, s, t)
            for p, row in rows.items()
            for (s, t) in row
        )
    root_ok = bool(sets[tree.root])
    return root_ok, (None if root_ok else tree.root), sets

"""Pure-Python backtracking engine for exact edge-coloring solves.

Edges are assigned in a fixed order with colors tried ascending; class
constraints are propagated incrementally with sound-only pruning (a branch
is cut only when a class edge has irrecoverably lost both 1-vertex
candidates), and every leaf is fully re-verified.  The compiled kernel
implements the identical search, node accounting included.
"""

from __future__ import annotations

from collections import deque

from .coloring import _has_alternating_cycle
from .graph import Graph


def bfs_edge_order(g: Graph) -> tuple[int, ...]:
    """Edges by breadth-first discovery from vertex 0 (then per component),
    clustering adjacent edges for early pruning."""
    listed = [False] * g.edge_count
    seen = [False] * g.vertex_count
    order: list[int] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for e in g.incident_edges[x]:
                if not listed[e]:
                    listed[e] = True
                    order.append(e)
                y = g.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return tuple(order)


def run_search(
    g: Graph,
    palette: int,
    kind: str,
    order: tuple[int, ...],
    pin_first: bool,
    node_budget: int | None,
    solution_cap: int | None,
    want_witness: bool,
    visitor,
):
    """Returns (nodes, count, budget_hit, cap_hit, witness_colors_or_None)."""
    m = g.edge_count
    adj = g.adjacency_masks
    eu = [u for u, v in g.edges]
    ev = [v for u, v in g.edges]
    colors = [0] * m
    covered = [0] * (palette + 1)
    class_edges: list[list[int]] = [[] for _ in range(palette + 1)]

    nodes = 0
    count = 0
    budget_hit = False
    cap_hit = False
    witness: list[int] | None = None

    semistrong = kind == "semistrong"
    strong = kind == "strong"
    unique = kind == "uniquely-restricted"

    def class_ok(c: int) -> bool:
        cov = covered[c]
        if semistrong:
            for f in class_edges[c]:
                if (adj[eu[f]] & cov).bit_count() >= 2 and (
                    adj[ev[f]] & cov
                ).bit_count() >= 2:
                    return False
            return True
        if strong:
            for f in class_edges[c]:
                if (adj[eu[f]] & cov).bit_count() >= 2 or (
                    adj[ev[f]] & cov
                ).bit_count() >= 2:
                    return False
            return True
        if unique:
            return not _has_alternating_cycle(g, class_edges[c])
        return True

    def leaf_ok() -> bool:
        for c in range(1, palette + 1):
            cov = covered[c]
            if semistrong:
                for f in class_edges[c]:
                    if (adj[eu[f]] & cov).bit_count() != 1 and (
                        adj[ev[f]] & cov
                    ).bit_count() != 1:
                        return False
            elif strong:
                for f in class_edges[c]:
                    if (adj[eu[f]] & cov).bit_count() != 1 or (
                        adj[ev[f]] & cov
                    ).bit_count() != 1:
                        return False
            elif unique:
                if _has_alternating_cycle(g, class_edges[c]):
                    return False
        return True

    def rec(li: int) -> bool:
        nonlocal nodes, count, budget_hit, cap_hit, witness
        if li == m:
            if leaf_ok():
                count += 1
                if want_witness and witness is None:
                    witness = colors.copy()
                if visitor is not None:
                    visitor(tuple(colors))
                if solution_cap is not None and count >= solution_cap:
                    cap_hit = True
                    return True
            return False
        e = order[li]
        bits = (1 << eu[e]) | (1 << ev[e])
        domain = (1,) if (pin_first and e == 0) else range(1, palette + 1)
        for c in domain:
            if covered[c] & bits:
                continue
            if node_budget is not None and nodes >= node_budget:
                budget_hit = True
                return True
            nodes += 1
            colors[e] = c
            covered[c] |= bits
            class_edges[c].append(e)
            stop = rec(li + 1) if class_ok(c) else False
            class_edges[c].pop()
            covered[c] &= ~bits
            colors[e] = 0
            if stop:
                return True
        return False

    rec(0)
    return nodes, count, budget_hit, cap_hit, witness

"""Shared test utilities: independent oracles and small samplers."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from semistrong.coloring import EdgeColoring
from semistrong.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def nx_one_vertices(g: Graph, phi: EdgeColoring, e: int) -> frozenset[int]:
    """Independent 1-vertex computation via an explicitly built induced
    subgraph (networkx), used as the oracle for the package's version."""
    G = to_networkx(g)
    c = phi.colors[e]
    covered = {
        x
        for i, (u, v) in enumerate(g.edges)
        if phi.colors[i] == c
        for x in (u, v)
    }
    H = G.subgraph(covered)
    return frozenset(x for x in g.endpoints(e) if H.degree(x) == 1)


def nx_perfect_matching_count(g: Graph, edge_indices) -> int:
    """Count perfect matchings of the covered induced subgraph by brute
    force; the uniquely-restricted predicate is equivalent to count == 1."""
    covered = sorted({x for e in edge_indices for x in g.endpoints(e)})
    cov = set(covered)
    sub = [
        (u, v) for u, v in g.edges if u in cov and v in cov
    ]

    def count(vertices: frozenset[int]) -> int:
        if not vertices:
            return 1
        x = min(vertices)
        total = 0
        for u, v in sub:
            if u == x and v in vertices:
                total += count(vertices - {u, v})
            elif v == x and u in vertices:
                total += count(vertices - {u, v})
        return total

    return count(frozenset(covered))


def random_matching(g: Graph, rng: random.Random) -> list[int]:
    """Greedy random matching (possibly empty)."""
    picked: list[int] = []
    used: set[int] = set()
    order = list(range(g.edge_count))
    rng.shuffle(order)
    for e in order:
        u, v = g.endpoints(e)
        if u not in used and v not in used and rng.random() < 0.7:
            picked.append(e)
            used.update((u, v))
    return sorted(picked)


def random_edge_subset(g: Graph, rng: random.Random) -> list[int]:
    return sorted(e for e in range(g.edge_count) if rng.random() < 0.45)


def all_graphs_up_to(max_vertices: int, max_edges: int):
    """Every labeled graph on exactly max_vertices vertices with at most
    max_edges edges (smaller orders appear as graphs with isolated vertices)."""
    pairs = list(itertools.combinations(range(max_vertices), 2))
    for k in range(max_edges + 1):
        for combo in itertools.combinations(pairs, k):
            yield Graph(max_vertices, tuple(combo))

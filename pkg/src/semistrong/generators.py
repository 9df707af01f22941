"""Deterministic instance generators.

random_tree decodes a Prüfer sequence drawn from a seeded RNG, so the same
(n, seed) always yields the same tree.  all_labeled_trees enumerates every
labeled tree on n vertices by iterating all Prüfer sequences.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Star on n vertices: center 0 joined to n-1 leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    if n < 3:
        raise ValueError("circulant needs n >= 3")
    offs = sorted(set(int(o) for o in offsets))
    if any(o < 1 or o > n // 2 for o in offs):
        raise ValueError("offsets must satisfy 1 <= o <= n // 2")
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for o in offs:
        for i in range(n):
            j = (i + o) % n
            key = frozenset((i, j))
            if key not in seen:
                seen.add(key)
                edges.append((i, j))
    return Graph(n, tuple(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("hypercube needs d >= 0")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph(n, tuple(edges))


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Prüfer sequence into the labeled tree on len(seq)+2 vertices."""
    if n is None:
        n = len(seq) + 2
    if n == 1:
        if seq:
            raise ValueError("a single-vertex tree has an empty sequence")
        return Graph(1, ())
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}")
    if any(not (0 <= x < n) for x in seq):
        raise ValueError("sequence entries out of range")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    # classic pointer scan: repeatedly attach the smallest current leaf
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
            ptr += 1
    if leaf < 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    last = next(i for i in range(n - 1, -1, -1) if degree[i] == 1 and i != leaf)
    edges.append((leaf, last))
    return Graph(n, tuple(edges))


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices, in Prüfer sequence order."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_tree(n: int, seed: int, max_degree: int | None = None) -> Graph:
    """Uniform random labeled tree via a seeded Prüfer sequence.

    With max_degree set, each sequence symbol is redrawn while its vertex has
    exhausted its degree allowance, capping every degree at max_degree.
    """
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    if n <= 2:
        return prufer_decode((), n)
    if max_degree is not None and max_degree < 2:
        raise ValueError("max_degree must be >= 2 for n >= 3")
    rng = random.Random(seed)
    counts = [0] * n
    seq = []
    for _ in range(n - 2):
        x = rng.randrange(n)
        if max_degree is not None:
            while counts[x] >= max_degree - 1:
                x = rng.randrange(n)
        counts[x] += 1
        seq.append(x)
    return prufer_decode(seq, n)


def random_graph(n: int, edge_count: int, seed: int) -> Graph:
    """Uniform random simple graph with the given number of edges."""
    if n < 1:
        raise ValueError("random_graph needs n >= 1")
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if edge_count > len(all_pairs):
        raise ValueError("too many edges requested")
    rng = random.Random(seed)
    chosen = rng.sample(all_pairs, edge_count)
    return Graph(n, tuple(chosen))

"""Undirected simple graphs with stable 0-based vertex and edge indexing.

Edges are identified by their position in the input sequence; every other
module (colorings, reduction maps, the tree DP) cross-references edges by
that index, so the order never changes after construction.  All types are
immutable and safe for concurrent reads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property


class GraphFormatError(ValueError):
    """A graph file violates the text format (carries a 1-based line number)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotATreeError(ValueError):
    """An operation required a tree but the graph has a cycle or is disconnected."""


INFINITE_DISTANCE = math.inf


@dataclass(frozen=True)
class Graph:
    """A finite undirected simple graph.

    vertex_count: number of vertices, indexed 0..vertex_count-1.
    edges: ordered tuple of (u, v) pairs; the position of a pair is its
        stable edge index.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen: set[frozenset[int]] = set()
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {i} ({u},{v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"edge {i} is a self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"edge {i} ({u},{v}) duplicates an earlier edge")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """adjacency[v] = neighbors of v, in input edge order."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """incident_edges[v] = indices of edges at v, in input edge order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(a) for a in inc)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """adjacency_masks[v] = bitmask of neighbors (arbitrary vertex count)."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return max(len(a) for a in self.adjacency)

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def vertex_distances(self, source: int) -> list[int | float]:
        """BFS distances from source; unreachable vertices get INFINITE_DISTANCE."""
        self._check_vertex(source)
        dist: list[int | float] = [INFINITE_DISTANCE] * self.vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] is INFINITE_DISTANCE:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def edge_distance(self, e: int, f: int) -> int | float:
        """Distance between two edges in the (never materialized) line graph.

        0 iff e == f, 1 iff the edges share an endpoint, 2 iff their closest
        endpoints are adjacent; INFINITE_DISTANCE across components.
        """
        self._check_edge(e)
        self._check_edge(f)
        if e == f:
            return 0
        eu, ev = self.edges[e]
        fu, fv = self.edges[f]
        best = INFINITE_DISTANCE
        for source in (eu, ev):
            dist = self.vertex_distances(source)
            best = min(best, dist[fu], dist[fv])
        return best + 1 if best is not INFINITE_DISTANCE else INFINITE_DISTANCE

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        out: list[list[int]] = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(comp)
        return out

    def is_tree(self) -> bool:
        return (
            self.vertex_count >= 1
            and self.edge_count == self.vertex_count - 1
            and len(self.components()) == 1
        )

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adjacency)

    def _check_vertex(self, v: int):
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} out of range (n={self.vertex_count})")

    def _check_edge(self, e: int):
        if not (0 <= e < self.edge_count):
            raise ValueError(f"edge {e} out of range (m={self.edge_count})")


@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root and derived parent/children structure.

    Children of every vertex appear in input edge order, which fixes the
    traversal order of the DP and makes reconstruction deterministic.
    """

    graph: Graph
    root: int
    parent: tuple[int, ...]        # parent[v], -1 for the root
    parent_edge: tuple[int, ...]   # edge index to parent, -1 for the root
    children: tuple[tuple[int, ...], ...]
    bfs_order: tuple[int, ...]
    depth: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def chd(self, v: int) -> int:
        return len(self.children[v])

    def post_order(self) -> tuple[int, ...]:
        """Every child precedes its parent (reverse of the BFS order)."""
        return tuple(reversed(self.bfs_order))

    def edge_generation(self, e: int) -> int:
        """max distance of the edge's endpoints from the root."""
        u, v = self.graph.endpoints(e)
        return max(self.depth[u], self.depth[v])


def root_tree(g: Graph, r: int) -> RootedTree:
    """Root a tree at r by breadth-first traversal.

    Raises NotATreeError when g is disconnected or has a cycle.
    """
    g._check_vertex(r)
    if g.edge_count != g.vertex_count - 1:
        raise NotATreeError(
            f"not a tree: {g.edge_count} edges for {g.vertex_count} vertices"
        )
    parent = [-1] * g.vertex_count
    parent_edge = [-1] * g.vertex_count
    children: list[list[int]] = [[] for _ in range(g.vertex_count)]
    depth = [0] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[r] = True
    order = [r]
    queue = deque([r])
    while queue:
        x = queue.popleft()
        for e in g.incident_edges[x]:
            y = g.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                parent_edge[y] = e
                depth[y] = depth[x] + 1
                children[x].append(y)
                order.append(y)
                queue.append(y)
    if len(order) != g.vertex_count:
        raise NotATreeError("not a tree: graph is disconnected")
    return RootedTree(
        graph=g,
        root=r,
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
        children=tuple(tuple(c) for c in children),
        bfs_order=tuple(order),
        depth=tuple(depth),
    )


def parse_graph(text: str) -> Graph:
    """Parse the graph text format.

    Lines starting with '#' are comments; the first data line is "n m",
    followed by exactly m lines "u v" with 0 <= u,v < n and u != v.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("header values must be integers", lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("header values must be nonnegative", lineno)
            header = (n, m)
            continue
        if len(edges) >= m:
            raise GraphFormatError("unexpected data after the last edge", lineno)
        if len(parts) != 2:
            raise GraphFormatError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in edge ({u},{v})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if any(frozenset((u, v)) == frozenset(e) for e in edges):
            raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("empty input: missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edges, found {len(edges)}")
    return Graph(vertex_count=n, edges=tuple(edges))


def render_graph(g: Graph) -> str:
    """Canonical text rendering; parse(render(g)) == g."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_graph(g))

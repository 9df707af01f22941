"""Matching classification and edge-coloring verification.

The four coloring kinds correspond to the matching property every color
class must satisfy: "proper" needs a plain matching, "uniquely-restricted"
a matching whose covered subgraph has a unique perfect matching, "semistrong"
a matching in which every edge keeps an endpoint of degree 1 in the covered
subgraph, and "strong" an induced matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property

from .graph import Graph

KINDS = ("proper", "uniquely-restricted", "semistrong", "strong")


class NonMatchingClassError(ValueError):
    """A per-class query was asked about a color class that is not a matching."""


class ColoringFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MatchingClass(IntEnum):
    """Totally ordered strength levels; each level implies all weaker ones."""

    NOT_A_MATCHING = 0
    MATCHING = 1
    UNIQUELY_RESTRICTED = 2
    SEMISTRONG = 3
    INDUCED = 4


@dataclass(frozen=True)
class EdgeColoring:
    """Total color assignment, one color per edge index, drawn from 1..palette_size."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.palette_size < 0:
            raise ValueError("palette_size must be nonnegative")
        for i, c in enumerate(self.colors):
            if not (1 <= c <= self.palette_size):
                raise ValueError(
                    f"edge {i} has color {c} outside 1..{self.palette_size}"
                )

    @cached_property
    def classes(self) -> dict[int, tuple[int, ...]]:
        """color -> edge indices carrying it (ascending)."""
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            out.setdefault(c, []).append(i)
        return {c: tuple(v) for c, v in sorted(out.items())}

    def used_colors(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    message: str | None = None
    color: int | None = None
    edge: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def induced_on_endpoints(g: Graph, edge_indices) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph of g induced by the endpoints of the given edges.

    Returns (subgraph, vertex_map) where vertex_map[i] is the original index
    of subgraph vertex i.
    """
    covered: list[int] = []
    seen: set[int] = set()
    for e in edge_indices:
        for x in g.endpoints(e):
            if x not in seen:
                seen.add(x)
                covered.append(x)
    covered.sort()
    index = {x: i for i, x in enumerate(covered)}
    sub_edges = tuple(
        (index[u], index[v]) for u, v in g.edges if u in seen and v in seen
    )
    return Graph(len(covered), sub_edges), tuple(covered)


def is_matching(g: Graph, edge_indices) -> bool:
    seen: set[int] = set()
    for e in edge_indices:
        u, v = g.endpoints(e)
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def _covered_and_degrees(g: Graph, edge_indices):
    """Covered vertex set and induced degrees (neighbors within the set)."""
    covered: set[int] = set()
    for e in edge_indices:
        covered.update(g.endpoints(e))
    degrees = {x: sum(1 for y in g.adjacency[x] if y in covered) for x in covered}
    return covered, degrees


def is_induced_matching(g: Graph, edge_indices) -> bool:
    if not is_matching(g, edge_indices):
        return False
    _, degrees = _covered_and_degrees(g, edge_indices)
    return all(d == 1 for d in degrees.values())


def is_semistrong_matching(g: Graph, edge_indices) -> bool:
    if not is_matching(g, edge_indices):
        return False
    _, degrees = _covered_and_degrees(g, edge_indices)
    return all(
        degrees[u] == 1 or degrees[v] == 1
        for u, v in (g.endpoints(e) for e in edge_indices)
    )


def is_uniquely_restricted_matching(g: Graph, edge_indices) -> bool:
    """No alternating cycle through the matching in the covered subgraph."""
    edge_indices = list(edge_indices)
    if not is_matching(g, edge_indices):
        return False
    return not _has_alternating_cycle(g, edge_indices)


def _has_alternating_cycle(g: Graph, edge_indices) -> bool:
    """Search alternating walks; an alternating cycle is vertex-simple because
    every visit to a vertex consumes its unique matched edge."""
    covered: set[int] = set()
    mate: dict[int, int] = {}
    for e in edge_indices:
        u, v = g.endpoints(e)
        mate[u] = v
        mate[v] = u
        covered.add(u)
        covered.add(v)

    def neighbors_in(x: int):
        return (y for y in g.adjacency[x] if y in covered and y != mate[x])

    def walk(current: int, target: int, visited: set[int]) -> bool:
        # current was just reached via its matched edge; leave via a non-matching
        # edge of the covered subgraph, then the forced matched edge.
        for y in neighbors_in(current):
            if y == target:
                return True
            z = mate[y]
            if y in visited or z in visited:
                continue
            visited.add(y)
            visited.add(z)
            if walk(z, target, visited):
                return True
            visited.discard(y)
            visited.discard(z)
        return False

    for e in edge_indices:
        a, b = g.endpoints(e)
        if walk(b, a, {a, b}):
            return True
    return False


def classify_matching(g: Graph, edge_indices) -> MatchingClass:
    """Strongest satisfied level for the edge set."""
    edge_indices = list(edge_indices)
    if not is_matching(g, edge_indices):
        return MatchingClass.NOT_A_MATCHING
    if is_semistrong_matching(g, edge_indices):
        if is_induced_matching(g, edge_indices):
            return MatchingClass.INDUCED
        return MatchingClass.SEMISTRONG
    if is_uniquely_restricted_matching(g, edge_indices):
        return MatchingClass.UNIQUELY_RESTRICTED
    return MatchingClass.MATCHING


def one_vertices(g: Graph, phi: EdgeColoring, e: int) -> frozenset[int]:
    """Endpoints of e having degree 1 in the subgraph induced by the
    endpoints of all edges sharing e's color.

    The class of that color must be a matching (the notion presupposes it).
    """
    _check_sizes(g, phi)
    g._check_edge(e)
    cls = phi.classes[phi.colors[e]]
    if not is_matching(g, cls):
        raise NonMatchingClassError(
            f"color class {phi.colors[e]} is not a matching"
        )
    covered, degrees = _covered_and_degrees(g, cls)
    u, v = g.endpoints(e)
    return frozenset(x for x in (u, v) if degrees[x] == 1)


def verify_coloring(g: Graph, phi: EdgeColoring, kind: str) -> VerificationResult:
    """Check that every color class satisfies the kind's matching predicate.

    For "semistrong" the per-edge formulation is used: every edge must have at
    least one 1-vertex.  Violations are reported first-found, scanning classes
    in ascending color order and then edges in ascending index order.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    _check_sizes(g, phi)
    for c, cls in phi.classes.items():
        if not is_matching(g, cls):
            u = _first_conflict_edge(g, cls)
            return VerificationResult(
                False, f"color {c} is not a matching", color=c, edge=u
            )
    if kind == "proper":
        return VerificationResult(True)
    if kind == "semistrong":
        # per-class degrees are computed once; the reported violation is
        # still the smallest edge index, as if edges were scanned in order
        bad: int | None = None
        for cls in phi.classes.values():
            _, degrees = _covered_and_degrees(g, cls)
            for e in cls:
                u, v = g.endpoints(e)
                if degrees[u] != 1 and degrees[v] != 1 and (bad is None or e < bad):
                    bad = e
        if bad is not None:
            return VerificationResult(
                False,
                f"edge {bad} has no 1-vertex in class of color {phi.colors[bad]}",
                color=phi.colors[bad],
                edge=bad,
            )
        return VerificationResult(True)
    predicate = (
        is_uniquely_restricted_matching
        if kind == "uniquely-restricted"
        else is_induced_matching
    )
    for c, cls in phi.classes.items():
        if not predicate(g, cls):
            return VerificationResult(
                False,
                f"color class {c} is not {'uniquely restricted' if kind == 'uniquely-restricted' else 'an induced matching'}",
                color=c,
                edge=cls[0],
            )
    return VerificationResult(True)


def verify_semistrong_by_classes(g: Graph, phi: EdgeColoring) -> bool:
    """Per-class formulation of the semistrong check (must agree with
    verify_coloring's per-edge formulation; the test suite asserts this)."""
    _check_sizes(g, phi)
    return all(is_semistrong_matching(g, cls) for cls in phi.classes.values())


def is_semistrong_2_colorable(g: Graph) -> bool:
    """True iff every component is a path on at most 5 vertices."""
    for comp in g.components():
        comp_set = set(comp)
        inside = [e for e, (u, v) in enumerate(g.edges) if u in comp_set]
        if len(inside) != len(comp) - 1:
            return False  # has a cycle
        if any(g.degree(v) > 2 for v in comp):
            return False
        if len(comp) > 5:
            return False
    return True


def _first_conflict_edge(g: Graph, cls) -> int:
    seen: dict[int, int] = {}
    for e in cls:
        for x in g.endpoints(e):
            if x in seen:
                return e
            seen[x] = e
    raise AssertionError("no conflict in a non-matching class")


def _check_sizes(g: Graph, phi: EdgeColoring):
    if len(phi.colors) != g.edge_count:
        raise ValueError(
            f"coloring has {len(phi.colors)} entries for {g.edge_count} edges"
        )


def parse_coloring(text: str, edge_count: int) -> EdgeColoring:
    """Parse the coloring text format: one line "i c" per edge index, each
    index exactly once in any order, colors >= 1; '#' lines are comments."""
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColoringFormatError("expected 'edge_index color'", lineno)
        try:
            i, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColoringFormatError("entries must be integers", lineno)
        if not (0 <= i < edge_count):
            raise ColoringFormatError(f"edge index {i} out of range", lineno)
        if i in colors:
            raise ColoringFormatError(f"edge index {i} assigned twice", lineno)
        if c < 1:
            raise ColoringFormatError(f"color {c} must be >= 1", lineno)
        colors[i] = c
    missing = [i for i in range(edge_count) if i not in colors]
    if missing:
        raise ColoringFormatError(f"missing color for edges {missing[:5]}")
    seq = tuple(colors[i] for i in range(edge_count))
    return EdgeColoring(seq, palette_size=max(seq, default=0))


def render_coloring(phi: EdgeColoring) -> str:
    return "".join(f"{i} {c}\n" for i, c in enumerate(phi.colors))


def load_coloring(path, edge_count: int) -> EdgeColoring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read(), edge_count)


def save_coloring(phi: EdgeColoring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_coloring(phi))

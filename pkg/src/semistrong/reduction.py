"""Edge-replacement gadgets turning proper k-edge-coloring of k-regular
graphs into semistrong k-edge-coloring, plus the coloring lift/extraction
and computational validation of the gadgets' forced-color properties.

Three gadget families, one per palette class: B (odd k >= 3) joins two
boundary pendant paths through a shared 2-vertex hub row, Q (even k >= 6)
adds one hub-hub edge, and R (k = 4) is a 17-vertex graph built from a
triangle, three induced 7-cycles and two boundary edges.  Replacing every
edge of a k-regular graph by a gadget yields a graph H with max degree k
that is semistrongly k-colorable iff the original graph is properly
k-edge-colorable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import EdgeColoring, verify_coloring
from .graph import Graph
from .solver import SolveLimits, SolveRequest, enumerate_colorings

GADGET_KINDS = ("B", "Q", "R")

_R_VERTICES = {
    "u": 0, "v": 1,
    "w1": 2, "w2": 3, "w3": 4,
    "x1": 5, "x2": 6, "x3": 7,
    "y1": 8, "y2": 9, "y3": 10, "y4": 11, "y5": 12, "y6": 13,
    "z1": 14, "z2": 15, "z3": 16,
}

_R_EDGES = (
    ("e1", "w1", "w2"), ("e2", "w2", "w3"), ("e3", "w3", "w1"),
    ("e4", "w1", "x1"), ("e5", "w2", "x2"), ("e6", "w3", "x3"),
    ("f1", "x1", "y1"), ("f2", "x1", "y2"), ("f3", "x2", "y3"),
    ("f4", "x2", "y4"), ("f5", "x3", "y5"), ("f6", "x3", "y6"),
    ("g1", "z3", "y1"), ("g2", "z1", "y2"), ("g3", "z1", "y3"),
    ("g4", "z2", "y4"), ("g5", "z2", "y5"), ("g6", "z3", "y6"),
    ("h1", "u", "z1"), ("h2", "v", "z2"),
)

# color classes of the known semistrong 4-coloring of R, by tag
_R_PATTERN = {
    4: ("h1", "h2", "e4", "e5", "e6"),
    1: ("e1", "g3", "g4", "f6", "f1"),
    2: ("e2", "g5", "g6", "f2", "f3"),
    3: ("e3", "g1", "g2", "f4", "f5"),
}


class BoundaryDisagreementError(ValueError):
    """The two boundary edges of a gadget disagree in a coloring claimed
    semistrong; this would contradict the forced-color property."""


@dataclass(frozen=True)
class Gadget:
    kind: str
    k: int
    graph: Graph
    boundary: tuple[int, int]            # the attachment vertices (u, v)
    tags: dict[str, int]                 # edge role name -> edge index
    interior_tags: tuple[str, ...]       # lift bijection order (B/Q only)


def build_gadget(kind: str, k: int) -> Gadget:
    """Deterministically indexed gadget for the given palette size."""
    if kind == "B":
        if k < 3 or k % 2 == 0:
            raise ValueError("B gadgets require odd k >= 3")
        hubs = (k - 1) // 2
        return _build_bq(kind, k, hubs, hub_edge=False)
    if kind == "Q":
        if k < 6 or k % 2 == 1:
            raise ValueError("Q gadgets require even k >= 6")
        hubs = (k - 2) // 2
        return _build_bq(kind, k, hubs, hub_edge=True)
    if kind == "R":
        if k != 4:
            raise ValueError("the R gadget is specific to k = 4")
        return _build_r()
    raise ValueError(f"unknown gadget kind {kind!r}; expected one of {GADGET_KINDS}")


def _build_bq(kind: str, k: int, hubs: int, hub_edge: bool) -> Gadget:
    u, v, u1, v1 = 0, 1, 2, 3
    w = [3 + i for i in range(1, hubs + 1)]
    names = ["uu1", "vv1"]
    edges = [(u, u1), (v, v1)]
    interior = []
    for i, wi in enumerate(w, start=1):
        names.append(f"u1w{i}")
        interior.append(f"u1w{i}")
        edges.append((u1, wi))
    for i, wi in enumerate(w, start=1):
        names.append(f"v1w{i}")
        interior.append(f"v1w{i}")
        edges.append((v1, wi))
    if hub_edge:
        names.append("w1w2")
        interior.append("w1w2")
        edges.append((w[0], w[1]))
    graph = Graph(4 + hubs, tuple(edges))
    assert graph.edge_count == k + 1
    return Gadget(
        kind=kind,
        k=k,
        graph=graph,
        boundary=(u, v),
        tags={name: i for i, name in enumerate(names)},
        interior_tags=tuple(interior),
    )


def _build_r() -> Gadget:
    edges = tuple((_R_VERTICES[a], _R_VERTICES[b]) for _, a, b in _R_EDGES)
    graph = Graph(len(_R_VERTICES), edges)
    assert graph.edge_count == 20
    return Gadget(
        kind="R",
        k=4,
        graph=graph,
        boundary=(0, 1),
        tags={name: i for i, (name, _, _) in enumerate(_R_EDGES)},
        interior_tags=(),
    )


def gadget_kind_for(k: int) -> str:
    if k < 3:
        raise ValueError("the reduction needs k >= 3")
    if k == 4:
        return "R"
    return "B" if k % 2 else "Q"


@dataclass(frozen=True)
class GadgetPlacement:
    source_edge: int
    kind: str
    vertex_range: tuple[int, int]        # interior vertices of this gadget in H
    edge_range: tuple[int, int]
    tags: dict[str, int]                 # role name -> edge index in H


@dataclass(frozen=True)
class ReductionMap:
    source: Graph
    target: Graph
    k: int
    placements: tuple[GadgetPlacement, ...]

    def to_json(self) -> str:
        payload = {
            str(p.source_edge): {
                "gadget_kind": p.kind,
                "vertex_range": list(p.vertex_range),
                "edge_range": list(p.edge_range),
                "tagged": dict(sorted(p.tags.items())),
            }
            for p in self.placements
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reduce_graph(g: Graph, k: int) -> tuple[Graph, ReductionMap]:
    """Replace every edge of a k-regular graph by the k-appropriate gadget.

    Original vertices keep their indices and end with degree k in H (one
    boundary edge per incident gadget); each gadget's interior vertices are
    fresh.  |E(H)| is (k+1)|E(G)| for k != 4 and 20|E(G)| for k = 4.
    """
    if not g.is_regular(k):
        raise ValueError(f"input graph is not {k}-regular")
    kind = gadget_kind_for(k)
    template = build_gadget(kind, k)
    interior_count = template.graph.vertex_count - 2
    h_edges: list[tuple[int, int]] = []
    placements: list[GadgetPlacement] = []
    next_vertex = g.vertex_count
    for idx, (su, sv) in enumerate(g.edges):
        base_v = next_vertex
        base_e = len(h_edges)

        def _map(x: int) -> int:
            if x == 0:
                return su
            if x == 1:
                return sv
            return base_v + (x - 2)

        for a, b in template.graph.edges:
            h_edges.append((_map(a), _map(b)))
        next_vertex += interior_count
        placements.append(
            GadgetPlacement(
                source_edge=idx,
                kind=kind,
                vertex_range=(base_v, next_vertex),
                edge_range=(base_e, len(h_edges)),
                tags={name: base_e + i for name, i in template.tags.items()},
            )
        )
    h = Graph(next_vertex, tuple(h_edges))
    return h, ReductionMap(source=g, target=h, k=k, placements=tuple(placements))


def lift_coloring(rmap: ReductionMap, phi: EdgeColoring) -> EdgeColoring:
    """Turn a proper k-edge-coloring of the source into a semistrong
    k-edge-coloring of H.

    B/Q gadgets: both boundary edges take the source edge's color and the
    k-1 interior edges take the remaining k-1 colors in tag order.  R
    gadgets: the fixed 4-coloring pattern is composed with the palette
    permutation sending 4 to the source edge's color (and 1..3 to the
    remaining colors ascending).
    """
    k = rmap.k
    check = verify_coloring(rmap.source, phi, "proper")
    if not check:
        raise ValueError(f"source coloring is not proper: {check.message}")
    if phi.palette_size > k:
        raise ValueError(f"source coloring must use palette 1..{k}")
    template = build_gadget(gadget_kind_for(k), k)
    out = [0] * rmap.target.edge_count
    for placement in rmap.placements:
        c = phi.colors[placement.source_edge]
        others = sorted(set(range(1, k + 1)) - {c})
        if placement.kind == "R":
            sigma = {4: c, 1: others[0], 2: others[1], 3: others[2]}
            for base_color, tags in _R_PATTERN.items():
                for tag in tags:
                    out[placement.tags[tag]] = sigma[base_color]
        else:
            out[placement.tags["uu1"]] = c
            out[placement.tags["vv1"]] = c
            for tag, color in zip(template.interior_tags, others):
                out[placement.tags[tag]] = color
    return EdgeColoring(tuple(out), k)


def extract_coloring(rmap: ReductionMap, psi: EdgeColoring) -> EdgeColoring:
    """Read a proper k-edge-coloring of the source off a semistrong
    k-edge-coloring of H.

    The paired boundary edges of every gadget must agree; a disagreement is
    reported as a counterexample to the forced-color property, never
    silently resolved.
    """
    check = verify_coloring(rmap.target, psi, "semistrong")
    if not check:
        raise ValueError(f"coloring of H is not semistrong: {check.message}")
    colors = []
    for placement in rmap.placements:
        first, second = (
            ("h1", "h2") if placement.kind == "R" else ("uu1", "vv1")
        )
        a = psi.colors[placement.tags[first]]
        b = psi.colors[placement.tags[second]]
        if a != b:
            raise BoundaryDisagreementError(
                f"gadget of source edge {placement.source_edge}: "
                f"{first}={a} but {second}={b}"
            )
        colors.append(a)
    phi = EdgeColoring(tuple(colors), rmap.k)
    check = verify_coloring(rmap.source, phi, "proper")
    if not check:
        raise BoundaryDisagreementError(
            f"extracted coloring is not proper: {check.message}"
        )
    return phi


def augment_with_pendants(gadget: Gadget) -> Graph:
    """Attach k-1 pendant edges at each boundary vertex, emulating the
    degree-k context both vertices have inside H."""
    g = gadget.graph
    edges = list(g.edges)
    n = g.vertex_count
    for x in gadget.boundary:
        for _ in range(gadget.k - 1):
            edges.append((x, n))
            n += 1
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    colorings: int
    violations: int
    first_violation: str | None
    complete: bool            # enumeration ran to natural exhaustion
    nodes: int

    @property
    def falsified(self) -> bool:
        return self.violations > 0

    @property
    def inconclusive(self) -> bool:
        return not self.complete and self.violations == 0


@dataclass(frozen=True)
class GadgetLemmaReport:
    kind: str
    k: int
    checks: tuple[LemmaCheck, ...]

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.checks)

    @property
    def complete(self) -> bool:
        return all(c.complete for c in self.checks)

    def summary(self) -> str:
        lines = [f"gadget ({self.kind}, k={self.k})"]
        for c in self.checks:
            status = (
                "FALSIFIED"
                if c.falsified
                else ("inconclusive (budget)" if c.inconclusive else "ok")
            )
            lines.append(
                f"  {c.name}: {c.colorings} colorings, "
                f"{c.violations} violations, {status}"
            )
        return "\n".join(lines)


def _run_check(name, graph, k, assertions, node_budget, engine) -> LemmaCheck:
    violations = 0
    first: list[str | None] = [None]

    def visitor(colors: tuple[int, ...]):
        nonlocal violations
        message = assertions(colors)
        if message is not None:
            violations += 1
            if first[0] is None:
                first[0] = message

    req = SolveRequest(
        graph,
        "semistrong",
        k,
        limits=SolveLimits(max_nodes=node_budget),
        symmetry=True,
        engine=engine,
    )
    outcome = enumerate_colorings(req, visitor)
    return LemmaCheck(
        name=name,
        colorings=outcome.count,
        violations=violations,
        first_violation=first[0],
        complete=outcome.exhausted,
        nodes=outcome.nodes,
    )


def verify_gadget_lemmas(
    kind: str,
    k: int,
    node_budget: int | None = None,
    engine: str = "auto",
) -> GadgetLemmaReport:
    """Exhaustively enumerate semistrong k-colorings of the standalone and
    pendant-augmented gadget and check every forced-color claim.

    Enumeration runs over the pinned-first-edge symmetry slice; all claims
    are invariant under palette permutations, so the slice is exhaustive up
    to symmetry.  Violations falsify the reconstructed structure outright;
    an exhausted budget with no violation is reported as inconclusive.
    """
    gadget = build_gadget(kind, k)
    tags = gadget.tags

    def interior_distinct(colors) -> str | None:
        interior = [colors[tags[t]] for t in gadget.interior_tags]
        if len(set(interior)) != len(interior):
            return "two interior edges share a color"
        return None

    gadget_edge_count = gadget.graph.edge_count

    def q_hub_unique(colors) -> str | None:
        # the claim covers the gadget's own edges, not pendant context edges
        hub = colors[tags["w1w2"]]
        for i in range(gadget_edge_count):
            if i != tags["w1w2"] and colors[i] == hub:
                return "hub edge w1w2 shares a color with another gadget edge"
        return None

    def r_structure(colors) -> str | None:
        e = [colors[tags[f"e{i}"]] for i in range(1, 7)]
        if len(set(e)) != 4:
            return "the six e-edges do not use exactly 4 colors"
        if not (e[3] == e[4] == e[5]):
            return "e4, e5, e6 are not monochromatic"
        if len({e[0], e[1], e[2]}) != 3:
            return "e1, e2, e3 are not pairwise distinct"
        spoke = e[3]
        for i in range(1, 7):
            if colors[tags[f"f{i}"]] == spoke:
                return f"f{i} took the spoke color"
            if colors[tags[f"g{i}"]] == spoke:
                return f"g{i} took the spoke color"
        return None

    def r_boundary(colors) -> str | None:
        structural = r_structure(colors)
        if structural is not None:
            return structural
        spoke = colors[tags["e4"]]
        if colors[tags["h1"]] != colors[tags["h2"]]:
            return "h1 and h2 disagree"
        if colors[tags["h1"]] != spoke:
            return "h1/h2 differ from the spoke color"
        return None

    def bq_boundary(colors) -> str | None:
        interior = interior_distinct(colors)
        if interior is not None:
            return interior
        if colors[tags["uu1"]] != colors[tags["vv1"]]:
            return "uu1 and vv1 disagree"
        return None

    if kind == "R":
        standalone_assert = r_boundary
        augmented_assert = r_boundary
    elif kind == "Q":
        def standalone_assert(colors):
            return interior_distinct(colors) or q_hub_unique(colors)

        def augmented_assert(colors):
            return bq_boundary(colors) or q_hub_unique(colors)
    else:
        standalone_assert = interior_distinct
        augmented_assert = bq_boundary

    checks = [
        _run_check(
            "standalone", gadget.graph, k, standalone_assert, node_budget, engine
        ),
        _run_check(
            "pendant-augmented",
            augment_with_pendants(gadget),
            k,
            augmented_assert,
            node_budget,
            engine,
        ),
    ]
    return GadgetLemmaReport(kind=kind, k=k, checks=tuple(checks))

"""Color-type classification of a semistrong coloring relative to a tree root."""

from __future__ import annotations

from dataclasses import dataclass

from ..coloring import EdgeColoring, one_vertices, verify_coloring
from ..graph import RootedTree
from .core import Quadruple


class NotSemistrongError(ValueError):
    """classify_colors requires a verified semistrong coloring."""


@dataclass(frozen=True)
class ColorTypePartition:
    """Disjoint color sets covering the whole palette 1..budget.

    p_colors/q_colors live on first-generation edges (far vs. near endpoint
    is the 1-vertex), s_colors/t_colors appear on second- but not
    first-generation edges (all vs. not all far endpoints are 1-vertices),
    and a_colors avoid both generations (including entirely unused colors).
    """

    p_colors: frozenset[int]
    q_colors: frozenset[int]
    s_colors: frozenset[int]
    t_colors: frozenset[int]
    a_colors: frozenset[int]

    def __post_init__(self):
        groups = (
            self.p_colors,
            self.q_colors,
            self.s_colors,
            self.t_colors,
            self.a_colors,
        )
        total = sum(len(g) for g in groups)
        union = frozenset().union(*groups)
        if total != len(union):
            raise ValueError("color type sets must be pairwise disjoint")

    @property
    def quadruple(self) -> Quadruple:
        return Quadruple(
            len(self.p_colors),
            len(self.q_colors),
            len(self.s_colors),
            len(self.t_colors),
        )

    def palette(self) -> frozenset[int]:
        return (
            self.p_colors
            | self.q_colors
            | self.s_colors
            | self.t_colors
            | self.a_colors
        )


def classify_colors(
    tree: RootedTree,
    phi: EdgeColoring,
    budget: int | None = None,
    verified: bool = False,
) -> ColorTypePartition:
    """Partition the palette by behavior on the first two edge generations.

    phi must be a semistrong coloring of the tree; the generation of an edge
    is the larger distance of its endpoints from the root.  Pass
    verified=True to skip re-verification when the coloring already passed
    the semistrong check (e.g. it came from the exact solver).
    """
    g = tree.graph
    if budget is None:
        budget = phi.palette_size
    if budget < phi.palette_size and any(c > budget for c in phi.colors):
        raise ValueError("coloring uses colors beyond the budget")
    if not verified:
        check = verify_coloring(g, phi, "semistrong")
        if not check:
            raise NotSemistrongError(check.message or "coloring is not semistrong")

    first: dict[int, int] = {}
    second: dict[int, list[int]] = {}
    for e in range(g.edge_count):
        gen = tree.edge_generation(e)
        c = phi.colors[e]
        if gen == 1:
            first[c] = e
        elif gen == 2:
            second.setdefault(c, []).append(e)

    buckets: dict[str, set[int]] = {"p": set(), "q": set(), "s": set(), "t": set(), "a": set()}
    for color in range(1, budget + 1):
        if color in first:
            e = first[color]
            far = max(g.endpoints(e), key=lambda x: tree.depth[x])
            if far in one_vertices(g, phi, e):
                buckets["p"].add(color)
            else:
                buckets["q"].add(color)
        elif color in second:
            all_far_one = True
            for e in second[color]:
                far = max(g.endpoints(e), key=lambda x: tree.depth[x])
                if far not in one_vertices(g, phi, e):
                    all_far_one = False
                    break
            buckets["s" if all_far_one else "t"].add(color)
        else:
            buckets["a"].add(color)
    return ColorTypePartition(
        frozenset(buckets["p"]),
        frozenset(buckets["q"]),
        frozenset(buckets["s"]),
        frozenset(buckets["t"]),
        frozenset(buckets["a"]),
    )

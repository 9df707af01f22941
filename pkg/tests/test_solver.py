import random

import pytest

from semistrong import generators as gen
from semistrong.coloring import verify_coloring
from semistrong.graph import Graph
from semistrong.solver import (
    FEASIBLE,
    INFEASIBLE,
    UNKNOWN,
    BudgetExhausted,
    SolveLimits,
    SolveRequest,
    decide,
    enumerate_colorings,
    min_colors,
)


def test_decide_examples():
    c7 = gen.cycle(7)
    assert decide(SolveRequest(c7, "semistrong", 3)).status == INFEASIBLE
    result = decide(SolveRequest(c7, "semistrong", 4))
    assert result.status == FEASIBLE
    assert verify_coloring(c7, result.witness, "semistrong").ok
    assert decide(SolveRequest(gen.path(6), "semistrong", 2)).status == INFEASIBLE
    k2 = gen.path(2)
    for kind in ("proper", "uniquely-restricted", "semistrong", "strong"):
        assert decide(SolveRequest(k2, kind, 1)).status == FEASIBLE


def test_min_colors_examples():
    assert min_colors(gen.cycle(7), "semistrong") == 4
    for m in (2, 3, 4, 5):
        assert min_colors(gen.star(1 + m), "semistrong") == m
    assert min_colors(gen.path(4), "semistrong") == 2
    assert verify_coloring(
        gen.path(4), decide(SolveRequest(gen.path(4), "semistrong", 2)).witness,
        "semistrong",
    ).ok
    assert min_colors(gen.complete(4), "proper") == 3
    assert min_colors(gen.path(4), "strong") == 3
    assert min_colors(gen.petersen(), "proper") == 4


def test_min_colors_requires_an_edge():
    with pytest.raises(ValueError):
        min_colors(Graph(3, ()), "proper")


def test_enumerate_examples():
    k2 = gen.path(2)
    assert (
        enumerate_colorings(SolveRequest(k2, "proper", 2, symmetry=False)).count == 2
    )
    p3 = gen.path(3)
    assert (
        enumerate_colorings(SolveRequest(p3, "proper", 2, symmetry=False)).count == 2
    )
    c4 = gen.cycle(4)
    out = enumerate_colorings(SolveRequest(c4, "semistrong", 2, symmetry=False))
    assert out.count == 0 and out.exhausted


def test_enumerate_symmetry_slice():
    # every pinned-slice solution starts with color 1 on edge 0; the whole
    # space is its palette-permutation closure
    p3 = gen.path(3)
    pinned: list[tuple[int, ...]] = []
    enumerate_colorings(SolveRequest(p3, "proper", 3), pinned.append)
    assert all(c[0] == 1 for c in pinned)
    full = enumerate_colorings(SolveRequest(p3, "proper", 3, symmetry=False)).count
    assert full == 3 * len(pinned)


def test_enumerate_visit_order_is_deterministic():
    from semistrong._solver_py import bfs_edge_order

    g = gen.cycle(5)
    runs = []
    for _ in range(2):
        seen: list[tuple[int, ...]] = []
        enumerate_colorings(SolveRequest(g, "proper", 3, symmetry=False), seen.append)
        runs.append(seen)
    assert runs[0] == runs[1]
    order = bfs_edge_order(g)
    keyed = [tuple(colors[e] for e in order) for colors in runs[0]]
    assert keyed == sorted(keyed)  # lexicographic in assignment order


def test_enumerate_cap_vs_exhaustion():
    p3 = gen.path(3)
    capped = enumerate_colorings(
        SolveRequest(p3, "proper", 2, symmetry=False, limits=SolveLimits(max_solutions=1))
    )
    assert capped.count == 1 and capped.cap_reached and not capped.exhausted
    natural = enumerate_colorings(SolveRequest(p3, "proper", 2, symmetry=False))
    assert natural.exhausted and not natural.cap_reached


def test_budget_gives_unknown_not_a_guess():
    # proper 3-coloring of Petersen is infeasible but needs far more than
    # 10 nodes to refute
    g = gen.petersen()
    result = decide(SolveRequest(g, "proper", 3, limits=SolveLimits(max_nodes=10)))
    assert result.status == UNKNOWN and result.witness is None
    with pytest.raises(BudgetExhausted):
        min_colors(g, "proper", limits=SolveLimits(max_nodes=10))


def test_monotonicity_in_palette():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = gen.random_graph(
            n, rng.randint(1, min(10, n * (n - 1) // 2)), rng.randint(0, 10**6)
        )
        kind = rng.choice(("proper", "semistrong", "strong", "uniquely-restricted"))
        k = min_colors(g, kind)
        assert decide(SolveRequest(g, kind, k + 1)).status == FEASIBLE


def test_witnesses_always_verify():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = gen.random_graph(n, rng.randint(1, n * (n - 1) // 2), rng.randint(0, 10**6))
        kind = rng.choice(("proper", "semistrong", "strong", "uniquely-restricted"))
        palette = rng.randint(1, 4)
        result = decide(SolveRequest(g, kind, palette))
        if result.status == FEASIBLE:
            assert verify_coloring(g, result.witness, kind).ok
            assert max(result.witness.colors) <= palette


def test_inequality_chain_small_sample():
    rng = random.Random(100)
    for _ in range(25):
        n = rng.randint(2, 8)
        g = gen.random_graph(n, rng.randint(1, min(10, n * (n - 1) // 2)), rng.randint(0, 10**6))
        chain = [
            min_colors(g, kind)
            for kind in ("proper", "uniquely-restricted", "semistrong", "strong")
        ]
        assert chain == sorted(chain)


def test_semistrong_two_colorability_matches_characterization():
    from semistrong.coloring import is_semistrong_2_colorable

    rng = random.Random(55)
    for _ in range(80):
        n = rng.randint(2, 8)
        g = gen.random_graph(n, rng.randint(1, min(10, n * (n - 1) // 2)), rng.randint(0, 10**6))
        oracle = decide(SolveRequest(g, "semistrong", 2)).status == FEASIBLE
        assert oracle == is_semistrong_2_colorable(g)


def test_graph_without_edges_is_trivially_feasible():
    g = Graph(3, ())
    assert decide(SolveRequest(g, "semistrong", 1)).status == FEASIBLE

"""Cross-checks between the compiled kernels and the pure-Python fallback.

Both implementations must agree bit for bit: identical feasible sets,
identical decide/enumerate outcomes, identical node accounting.
"""

import random

import pytest

from semistrong import generators as gen
from semistrong._engine import native_available
from semistrong.graph import root_tree
from semistrong.solver import (
    SolveLimits,
    SolveRequest,
    decide,
    enumerate_colorings,
)
from semistrong.treedp import solve_tree

needs_native = pytest.mark.skipif(
    not native_available(), reason="compiled kernels not built"
)


@needs_native
def test_tree_solver_engines_agree_on_all_per_vertex_sets():
    rng = random.Random(1)
    for _ in range(120):
        n = rng.randint(1, 14)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        tree = root_tree(g, rng.randrange(n))
        delta = max(g.max_degree(), 1)
        for budget in (delta, delta + 1, delta + 2):
            a = solve_tree(tree, budget, engine="python")
            b = solve_tree(tree, budget, engine="native")
            assert a.feasible == b.feasible
            assert a.fail_vertex == b.fail_vertex
            assert a.root_set.states() == b.root_set.states()
            if a.feasible:
                for v in range(n):
                    assert a.store.states(v) == b.store.states(v)


@needs_native
def test_solver_engines_agree_on_everything():
    rng = random.Random(2)
    for _ in range(80):
        n = rng.randint(2, 8)
        g = gen.random_graph(
            n, rng.randint(1, min(9, n * (n - 1) // 2)), rng.randint(0, 10**6)
        )
        kind = rng.choice(("proper", "semistrong", "strong"))
        palette = rng.randint(1, 3)
        symmetry = rng.random() < 0.5
        py = SolveRequest(g, kind, palette, symmetry=symmetry, engine="python")
        nat = SolveRequest(g, kind, palette, symmetry=symmetry, engine="native")
        a, b = decide(py), decide(nat)
        assert (a.status, a.nodes) == (b.status, b.nodes)
        if a.witness is not None:
            assert a.witness.colors == b.witness.colors
        seen_a: list = []
        seen_b: list = []
        ea = enumerate_colorings(py, seen_a.append)
        eb = enumerate_colorings(nat, seen_b.append)
        assert seen_a == seen_b
        assert (ea.count, ea.nodes, ea.exhausted) == (eb.count, eb.nodes, eb.exhausted)


@needs_native
def test_budget_accounting_is_identical():
    g = gen.petersen()
    for budget in (7, 77, 777):
        limits = SolveLimits(max_nodes=budget)
        a = decide(SolveRequest(g, "semistrong", 4, limits=limits, engine="python"))
        b = decide(SolveRequest(g, "semistrong", 4, limits=limits, engine="native"))
        assert (a.status, a.nodes) == (b.status, b.nodes)


@needs_native
def test_native_rejects_oversized_instances():
    big = gen.path(70)
    with pytest.raises(RuntimeError):
        decide(SolveRequest(big, "proper", 2, engine="native"))
    # auto falls back silently
    assert decide(SolveRequest(big, "proper", 2, engine="auto")).feasible


def test_uniquely_restricted_always_uses_python_engine():
    g = gen.cycle(5)
    result = decide(SolveRequest(g, "uniquely-restricted", 3, engine="auto"))
    assert result.engine == "python"


def test_huge_degree_tree_falls_back_and_reconstructs():
    from semistrong.coloring import verify_coloring
    from semistrong.treedp import semistrong_index_tree

    g = gen.star(301)
    tree = root_tree(g, 0)
    result = solve_tree(tree, 300, engine="auto")
    assert result.engine == "python" and result.feasible
    index = semistrong_index_tree(g)
    assert index.index == 300
    assert verify_coloring(g, index.coloring, "semistrong").ok


def test_visitor_exceptions_propagate_from_both_engines():
    class Stop(RuntimeError):
        pass

    def visitor(colors):
        raise Stop()

    engines = ["python"]
    if native_available():
        engines.append("native")
    for engine in engines:
        with pytest.raises(Stop):
            enumerate_colorings(
                SolveRequest(gen.path(3), "proper", 2, engine=engine), visitor
            )


@needs_native
def test_pure_python_env_override(monkeypatch):
    monkeypatch.setenv("SEMISTRONG_PURE_PYTHON", "1")
    g = gen.cycle(5)
    assert decide(SolveRequest(g, "proper", 3, engine="auto")).engine == "python"
    tree = root_tree(gen.path(4), 0)
    assert solve_tree(tree, 2, engine="auto").engine == "python"

import random

import pytest

from semistrong import generators as gen
from semistrong.coloring import EdgeColoring, verify_coloring
from semistrong.graph import Graph, root_tree
from semistrong.solver import SolveRequest, decide, enumerate_colorings, min_colors
from semistrong.treedp import (
    NotSemistrongError,
    Quadruple,
    classify_colors,
    semistrong_index_tree,
    solve_tree,
)


def test_classify_colors_examples():
    p3_center = root_tree(gen.path(3), 1)
    part = classify_colors(p3_center, EdgeColoring((1, 2), 2), 2)
    assert part.quadruple == Quadruple(2, 0, 0, 0)

    p3_end = root_tree(gen.path(3), 0)
    part = classify_colors(p3_end, EdgeColoring((1, 2), 2), 2)
    assert part.quadruple == Quadruple(1, 0, 1, 0)

    p5_end = root_tree(gen.path(5), 0)
    part = classify_colors(p5_end, EdgeColoring((1, 2, 3, 2), 3), 3)
    assert part.quadruple == Quadruple(1, 0, 0, 1)
    assert part.t_colors == frozenset({2})
    assert part.a_colors == frozenset({3})


def test_classify_colors_counts_unused_colors_as_absent():
    tree = root_tree(gen.path(2), 0)
    part = classify_colors(tree, EdgeColoring((1,), 1), budget=4)
    assert part.quadruple == Quadruple(1, 0, 0, 0)
    assert part.a_colors == frozenset({2, 3, 4})


def test_classify_colors_rejects_non_semistrong():
    with pytest.raises(NotSemistrongError):
        classify_colors(
            root_tree(gen.path(6), 0), EdgeColoring((1, 2, 1, 2, 1), 2), 2
        )


def test_solve_tree_examples():
    for delta in (2, 3, 4):
        hub = root_tree(gen.star(1 + delta), 0)
        result = solve_tree(hub, delta)
        assert result.feasible
        assert result.root_set.states() == {Quadruple(delta, 0, 0, 0)}
    p6 = root_tree(gen.path(6), 0)
    assert not solve_tree(p6, 2).feasible
    assert solve_tree(p6, 3).feasible
    single_edge = root_tree(gen.path(2), 0)
    assert solve_tree(single_edge, 1).feasible


def test_solve_tree_rejects_small_budget():
    tree = root_tree(gen.star(5), 0)
    with pytest.raises(ValueError):
        solve_tree(tree, 3)


def test_root_set_entries_have_pq_equal_chd():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        r = rng.randrange(n)
        tree = root_tree(g, r)
        result = solve_tree(tree, g.max_degree() + 1)
        assert result.feasible
        for state in result.root_set:
            assert state.p + state.q == tree.chd(r)
        for v in range(n):
            for state in result.store.states(v):
                assert state.p + state.q == tree.chd(v)


def test_budget_monotonicity():
    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        tree = root_tree(g, 0)
        delta = g.max_degree()
        if solve_tree(tree, delta).feasible:
            assert solve_tree(tree, delta + 1).feasible


def test_answer_invariant_under_rerooting_and_children_order():
    rng = random.Random(19)
    for _ in range(25):
        n = rng.randint(2, 11)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        values = {semistrong_index_tree(g, root=r).index for r in range(n)}
        assert len(values) == 1
        # permute the edge list: children orders change, the index must not
        perm = list(range(g.edge_count))
        rng.shuffle(perm)
        shuffled = Graph(n, tuple(g.edges[e] for e in perm))
        assert semistrong_index_tree(shuffled).index == values.pop()


def test_decision_matches_oracle_on_small_trees():
    rng = random.Random(44)
    for _ in range(60):
        n = rng.randint(2, 10)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        tree = root_tree(g, rng.randrange(n))
        delta = g.max_degree()
        for budget in (delta, delta + 1):
            dp = solve_tree(tree, budget).feasible
            oracle = decide(SolveRequest(g, "semistrong", budget)).feasible
            assert dp == oracle, (g.edges, budget)


def test_decision_matches_oracle_exhaustively_to_n8():
    for n in range(2, 9):
        for g in gen.all_labeled_trees(n):
            tree = root_tree(g, 0)
            delta = g.max_degree()
            for budget in (delta, delta + 1):
                dp = solve_tree(tree, budget, keep_sets=False).feasible
                oracle = decide(SolveRequest(g, "semistrong", budget)).feasible
                assert dp == oracle, (g.edges, budget)


def test_root_sets_match_oracle_enumeration():
    # pinned-slice enumeration is exhaustive up to palette permutation and
    # the classification counts are permutation-invariant
    for n in range(1, 6):
        for g in gen.all_labeled_trees(n):
            delta = g.max_degree()
            for root in range(n):
                tree = root_tree(g, root)
                for budget in range(max(delta, 1), 5):
                    result = solve_tree(tree, budget)
                    seen: set[Quadruple] = set()

                    def classify(colors, tree=tree, budget=budget, seen=seen):
                        phi = EdgeColoring(colors, budget)
                        seen.add(classify_colors(tree, phi, budget).quadruple)

                    enumerate_colorings(
                        SolveRequest(g, "semistrong", budget), classify
                    )
                    assert frozenset(seen) == result.root_set.states()


def test_root_sets_match_oracle_enumeration_sampled_n7():
    rng = random.Random(321)
    for seed in range(300):
        g = gen.random_tree(7, seed)
        root = rng.randrange(7)
        tree = root_tree(g, root)
        delta = g.max_degree()
        for budget in range(delta, 5):
            result = solve_tree(tree, budget)
            seen: set[Quadruple] = set()

            def classify(colors, tree=tree, budget=budget, seen=seen):
                phi = EdgeColoring(colors, budget)
                seen.add(
                    classify_colors(tree, phi, budget, verified=True).quadruple
                )

            enumerate_colorings(SolveRequest(g, "semistrong", budget), classify)
            assert frozenset(seen) == result.root_set.states()


def test_semistrong_index_examples():
    assert semistrong_index_tree(gen.star(5)).index == 4
    assert semistrong_index_tree(gen.path(6)).index == 3
    spider = Graph(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)))
    assert semistrong_index_tree(spider).index == min_colors(spider, "semistrong")
    assert semistrong_index_tree(Graph(1, ())).index == 0
    assert semistrong_index_tree(gen.path(2)).index == 1


def test_semistrong_index_coloring_always_verifies():
    rng = random.Random(71)
    for _ in range(30):
        n = rng.randint(2, 14)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        result = semistrong_index_tree(g)
        assert result.coloring.palette_size == result.index
        assert verify_coloring(g, result.coloring, "semistrong").ok
        assert result.index == min_colors(g, "semistrong")


def test_semistrong_index_rejects_non_trees():
    from semistrong.graph import NotATreeError

    with pytest.raises(NotATreeError):
        semistrong_index_tree(gen.cycle(4))

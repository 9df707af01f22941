import random

import pytest

from semistrong import generators as gen
from semistrong.coloring import verify_coloring
from semistrong.graph import root_tree
from semistrong.treedp import (
    Quadruple,
    classify_colors,
    reconstruct_coloring,
    solve_tree,
)


def test_star_reconstruction_is_smallest_available():
    tree = root_tree(gen.star(4), 0)
    result = solve_tree(tree, 3)
    phi, part = reconstruct_coloring(result, Quadruple(3, 0, 0, 0))
    assert phi.colors == (1, 2, 3)
    assert part.p_colors == frozenset({1, 2, 3})


def test_p5_reconstruction_with_two_colors():
    tree = root_tree(gen.path(5), 0)
    result = solve_tree(tree, 2)
    phi, _ = reconstruct_coloring(result)
    assert verify_coloring(gen.path(5), phi, "semistrong").ok
    # equivalent to 1,2,1,2 up to palette permutation
    assert phi.colors in ((1, 2, 1, 2), (2, 1, 2, 1))


def test_reconstruction_is_deterministic():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(2, 12)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        tree = root_tree(g, rng.randrange(n))
        result = solve_tree(tree, g.max_degree() + 1)
        first, _ = reconstruct_coloring(result)
        again, _ = reconstruct_coloring(solve_tree(tree, g.max_degree() + 1))
        assert first == again


def test_every_root_state_is_realizable():
    rng = random.Random(29)
    realized = 0
    for _ in range(80):
        n = rng.randint(2, 12)
        g = gen.random_tree(n, rng.randint(0, 10**6))
        r = rng.randrange(n)
        tree = root_tree(g, r)
        delta = g.max_degree()
        for budget in (delta, delta + 1):
            result = solve_tree(tree, budget)
            if not result.feasible:
                continue
            for state in sorted(result.root_set.states()):
                phi, part = reconstruct_coloring(result, state)
                assert verify_coloring(g, phi, "semistrong").ok
                assert max(phi.colors) <= budget
                assert part.quadruple == state
                assert classify_colors(tree, phi, budget).quadruple == state
                realized += 1
    assert realized > 450


def test_reconstruction_requires_feasible_and_stored_sets():
    tree = root_tree(gen.path(6), 0)
    infeasible = solve_tree(tree, 2)
    with pytest.raises(ValueError):
        reconstruct_coloring(infeasible)
    bare = solve_tree(tree, 3, keep_sets=False)
    with pytest.raises(ValueError):
        reconstruct_coloring(bare)
    with pytest.raises(ValueError):
        reconstruct_coloring(solve_tree(tree, 3), Quadruple(1, 0, 0, 0))

import random

import pytest

import helpers
from semistrong import generators as gen
from semistrong.coloring import (
    EdgeColoring,
    MatchingClass,
    NonMatchingClassError,
    classify_matching,
    induced_on_endpoints,
    is_induced_matching,
    is_matching,
    is_semistrong_2_colorable,
    is_semistrong_matching,
    is_uniquely_restricted_matching,
    one_vertices,
    parse_coloring,
    render_coloring,
    verify_coloring,
    verify_semistrong_by_classes,
)
from semistrong.graph import Graph
from semistrong.solver import SolveRequest, decide


def test_induced_on_endpoints_examples():
    p4 = gen.path(4)
    sub, vmap = induced_on_endpoints(p4, [0, 2])
    assert sub == p4 and vmap == (0, 1, 2, 3)  # the middle edge comes back in
    c6 = gen.cycle(6)
    sub, _ = induced_on_endpoints(c6, [0, 2, 4])
    assert sub.edge_count == 6 and sub.vertex_count == 6
    single, vmap = induced_on_endpoints(gen.complete(5), [3])
    assert single.vertex_count == 2 and single.edge_count == 1


def test_classify_matching_examples():
    p4 = gen.path(4)
    assert classify_matching(p4, [0, 2]) is MatchingClass.SEMISTRONG
    c6 = gen.cycle(6)
    assert classify_matching(c6, [0, 2, 4]) is MatchingClass.MATCHING
    assert classify_matching(p4, [1]) is MatchingClass.INDUCED
    assert classify_matching(p4, [0, 1]) is MatchingClass.NOT_A_MATCHING


def test_classify_matching_uniquely_restricted_level():
    # P6 outer edges + middle: G_M = P6, unique perfect matching, but the
    # middle edge has no pendant endpoint
    p6 = gen.path(6)
    assert classify_matching(p6, [0, 2, 4]) is MatchingClass.UNIQUELY_RESTRICTED


def test_hierarchy_on_random_edge_sets():
    rng = random.Random(23)
    for _ in range(400):
        n = rng.randint(2, 12)
        g = gen.random_graph(n, rng.randint(1, n * (n - 1) // 2), rng.randint(0, 10**6))
        m_set = helpers.random_matching(g, rng)
        if is_induced_matching(g, m_set):
            assert is_semistrong_matching(g, m_set)
        if is_semistrong_matching(g, m_set):
            assert is_uniquely_restricted_matching(g, m_set)
        if is_uniquely_restricted_matching(g, m_set):
            assert is_matching(g, m_set)
        level = classify_matching(g, m_set)
        assert level >= MatchingClass.MATCHING


def test_uniquely_restricted_matches_perfect_matching_count():
    rng = random.Random(31)
    checked = 0
    for _ in range(300):
        n = rng.randint(2, 10)
        g = gen.random_graph(n, rng.randint(1, n * (n - 1) // 2), rng.randint(0, 10**6))
        m_set = helpers.random_matching(g, rng)
        if not m_set:
            continue
        expected = helpers.nx_perfect_matching_count(g, m_set) == 1
        assert is_uniquely_restricted_matching(g, m_set) == expected
        checked += 1
    assert checked > 150


def test_one_vertices_examples():
    p4 = gen.path(4)
    phi = EdgeColoring((1, 2, 1), 2)
    assert one_vertices(p4, phi, 0) == frozenset({0})
    assert one_vertices(p4, phi, 2) == frozenset({3})
    # an isolated class keeps both endpoints
    assert one_vertices(p4, phi, 1) == frozenset({1, 2})
    c4 = gen.cycle(4)
    psi = EdgeColoring((1, 2, 1, 2), 2)
    for e in range(4):
        assert one_vertices(c4, psi, e) == frozenset()


def test_one_vertices_rejects_non_matching_class():
    p3 = gen.path(3)
    with pytest.raises(NonMatchingClassError):
        one_vertices(p3, EdgeColoring((1, 1), 1), 0)


def test_one_vertices_against_independent_oracle():
    rng = random.Random(77)
    checked = 0
    for _ in range(250):
        n = rng.randint(2, 9)
        g = gen.random_graph(n, rng.randint(1, n * (n - 1) // 2), rng.randint(0, 10**6))
        palette = rng.randint(1, 4)
        phi = EdgeColoring(
            tuple(rng.randint(1, palette) for _ in range(g.edge_count)), palette
        )
        for e in range(g.edge_count):
            cls = phi.classes[phi.colors[e]]
            if not is_matching(g, cls):
                continue
            assert one_vertices(g, phi, e) == helpers.nx_one_vertices(g, phi, e)
            checked += 1
    assert checked > 200


def test_verify_coloring_examples():
    c4 = gen.cycle(4)
    psi = EdgeColoring((1, 2, 1, 2), 2)
    assert verify_coloring(c4, psi, "proper").ok
    report = verify_coloring(c4, psi, "semistrong")
    assert not report.ok and report.edge == 0
    p5 = gen.path(5)
    assert verify_coloring(p5, EdgeColoring((1, 2, 1, 2), 2), "semistrong").ok
    c7 = gen.cycle(7)
    witness = decide(SolveRequest(c7, "semistrong", 4)).witness
    assert verify_coloring(c7, witness, "semistrong").ok


def test_verify_coloring_first_violation_is_deterministic():
    p4 = gen.path(4)
    bad = EdgeColoring((1, 2, 2), 2)
    report = verify_coloring(p4, bad, "proper")
    assert not report.ok and report.color == 2 and report.edge == 2


def test_semistrong_formulations_agree():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(2, 9)
        g = gen.random_graph(n, rng.randint(1, n * (n - 1) // 2), rng.randint(0, 10**6))
        palette = rng.randint(1, 4)
        phi = EdgeColoring(
            tuple(rng.randint(1, palette) for _ in range(g.edge_count)), palette
        )
        per_edge = verify_coloring(g, phi, "semistrong").ok
        per_class = verify_semistrong_by_classes(g, phi)
        assert per_edge == per_class


def test_is_semistrong_2_colorable_examples():
    assert is_semistrong_2_colorable(gen.path(5))
    assert not is_semistrong_2_colorable(gen.path(6))
    assert not is_semistrong_2_colorable(gen.cycle(4))
    assert is_semistrong_2_colorable(Graph(9, ((0, 1), (1, 2), (3, 4), (5, 6))))
    assert is_semistrong_2_colorable(Graph(3, ()))


def test_coloring_file_round_trip():
    phi = EdgeColoring((2, 1, 3, 1), 3)
    text = render_coloring(phi)
    assert parse_coloring(text, 4) == EdgeColoring((2, 1, 3, 1), 3)
    shuffled = "# comment\n2 3\n0 2\n3 1\n1 1\n"
    assert parse_coloring(shuffled, 4).colors == (2, 1, 3, 1)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("0 1\n", "missing"),
        ("0 1\n0 2\n", "twice"),
        ("0 0\n1 1\n", ">= 1"),
        ("5 1\n", "out of range"),
        ("a b\n", "integers"),
    ],
)
def test_coloring_parse_errors(text, fragment):
    with pytest.raises(Exception) as err:
        parse_coloring(text, 2)
    assert fragment in str(err.value)


def test_edge_coloring_validates_palette():
    with pytest.raises(ValueError):
        EdgeColoring((1, 3), 2)
    with pytest.raises(ValueError):
        EdgeColoring((0,), 2)

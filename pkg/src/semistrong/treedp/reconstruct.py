"""Realize an explicit semistrong coloring from a feasible DP run.

The solve keeps only per-vertex state sets; reconstruction replays each
vertex's expand/merge chain with witness recording, walks the witnesses
top-down to fix a target state for every subtree, then combines colorings
bottom-up.  A merge recolors the right subtree by a palette permutation that
routes the right side's s/t colors onto left color types according to the
witness transfer counts, always choosing smallest available colors, so the
output is deterministic.  The result is verified (semistrong, and the root
classification equals the requested state); any witness inconsistency is a
hard failure, never silently repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..coloring import EdgeColoring, verify_coloring
from .classify import ColorTypePartition, classify_colors
from .core import Quadruple
from .feasible import (
    BRANCH_FRESH,
    FeasibleSet,
    MergeWitness,
    VerticalWitness,
    _find_merge_witness,
    merge_rows_fast,
    vertical_expand,
)
from .solve import InternalInconsistency, TreeSolveResult


class Realization(NamedTuple):
    colors: dict[int, int]                     # edge index -> color
    part: tuple[frozenset[int], ...]           # (P, Q, S, T, A) color sets


def _sizes(part) -> Quadruple:
    return Quadruple(len(part[0]), len(part[1]), len(part[2]), len(part[3]))


@dataclass
class _VertexPlan:
    branches: list[tuple[int, int]]
    child_targets: list[Quadruple]
    merge_witnesses: list[MergeWitness | None]
    level_targets: list[Quadruple]


def _as_feasible(states, owner: str) -> FeasibleSet:
    fs = FeasibleSet(owner)
    for state in states:
        fs.add(state)
    return fs


def _vertex_plan(store, v: int, target: Quadruple) -> _VertexPlan:
    tree = store.tree
    budget = store.budget
    kids = tree.children[v]
    m = len(kids)
    verticals = []
    for c in kids:
        child_set = _as_feasible(store.states(c), f"T_{c}")
        verticals.append(vertical_expand(child_set, tree.chd(c), budget))
    # level state sets via the fast set-only merge; witnesses are searched
    # below for just the one target state per level
    levels = [verticals[0]]
    rows = {
        p: sorted((st.s, st.t) for st in verticals[0] if st.p == p)
        for p in (0, 1)
    }
    rows = {p: row for p, row in rows.items() if row}
    for j in range(1, m):
        d = tree.chd(kids[j])
        t10 = sorted(st.t for st in verticals[j] if (st.p, st.q) == BRANCH_FRESH)
        t01 = sorted(st.t for st in verticals[j] if (st.p, st.q) != BRANCH_FRESH)
        raw = merge_rows_fast(rows, t10, t01, j, d, budget)
        rows = {p: sorted(row) for p, row in raw.items() if row}
        level = FeasibleSet(f"~T_{v}^{j + 1}")
        for p, row in rows.items():
            for s, t in row:
                level.add(Quadruple(p, j + 1 - p, s, t))
        levels.append(level)

    branches: list = [None] * m
    child_targets: list = [None] * m
    merge_witnesses: list = [None] * m
    level_targets: list = [None] * m
    level_targets[m - 1] = target
    cur = target
    for j in range(m - 1, 0, -1):
        witness = _find_merge_witness(
            levels[j - 1], verticals[j], cur.p, cur.q, cur.s, cur.t,
            tree.chd(kids[j]),
        )
        if not isinstance(witness, MergeWitness):
            raise InternalInconsistency(f"missing merge witness for {cur} at {v}")
        merge_witnesses[j] = witness
        vertical_witness = verticals[j].witness(witness.right_state())
        if not isinstance(vertical_witness, VerticalWitness):
            raise InternalInconsistency(f"missing vertical witness at child {j} of {v}")
        branches[j] = vertical_witness.branch
        child_targets[j] = vertical_witness.child_state
        cur = witness.left_state(cur)
        level_targets[j - 1] = cur
    first = verticals[0].witness(cur)
    if not isinstance(first, VerticalWitness):
        raise InternalInconsistency(f"missing vertical witness at child 0 of {v}")
    branches[0] = first.branch
    child_targets[0] = first.child_state
    return _VertexPlan(branches, child_targets, merge_witnesses, level_targets)


class _Pool:
    """Ascending color pool; popping always yields the smallest available."""

    def __init__(self, colors):
        self._colors = sorted(colors)

    def take(self) -> int:
        if not self._colors:
            raise InternalInconsistency("color pool exhausted; witness is invalid")
        return self._colors.pop(0)

    def take_many(self, count: int) -> list[int]:
        return [self.take() for _ in range(count)]


def _extend(child: Realization, branch: tuple[int, int], edge: int) -> Realization:
    """Color the new parent edge and re-index the child partition: child
    first-generation types become s/t, child s/t/a colors fall out of view."""
    p_c, q_c, s_c, t_c, a_c = child.part
    if branch == BRANCH_FRESH:
        beta = _Pool(a_c).take()
        part = (
            frozenset((beta,)),
            frozenset(),
            p_c,
            q_c,
            (s_c | t_c | a_c) - {beta},
        )
    else:
        beta = _Pool(s_c).take()
        part = (
            frozenset(),
            frozenset((beta,)),
            p_c,
            q_c,
            (s_c - {beta}) | t_c | a_c,
        )
    colors = dict(child.colors)
    colors[edge] = beta
    return Realization(colors, part)


def _combine(
    left: Realization,
    right: Realization,
    witness: MergeWitness,
    budget: int,
) -> Realization:
    """Recolor the right subtree and fuse it with the left."""
    tr = witness.transfers
    p_l, q_l, s_l, t_l, a_l = left.part
    p_r, q_r, s_r, t_r_colors, _a_r = right.part

    alpha_set = q_r if witness.case == 1 else p_r
    if len(alpha_set) != 1:
        raise InternalInconsistency("right realization lacks its edge color")
    (alpha,) = alpha_set

    pool_p = _Pool(p_l)
    pool_s = _Pool(s_l)
    pool_t = _Pool(t_l)
    pool_a = _Pool(a_l)

    pi: dict[int, int] = {}
    alpha_img = pool_a.take() if witness.case in (1, 2) else pool_s.take()
    pi[alpha] = alpha_img

    ys_imgs = pool_s.take_many(tr.y_s)
    yt_imgs = pool_t.take_many(tr.y_t)
    ya_imgs = pool_a.take_many(tr.y_a)
    for color, image in zip(sorted(t_r_colors), ys_imgs + yt_imgs + ya_imgs):
        pi[color] = image

    xp_imgs = pool_p.take_many(tr.x_p)
    xs_imgs = pool_s.take_many(tr.x_s)
    xt_imgs = pool_t.take_many(tr.x_t)
    xa_imgs = pool_a.take_many(tr.x_a)
    for color, image in zip(sorted(s_r), xp_imgs + xs_imgs + xt_imgs + xa_imgs):
        pi[color] = image

    used = set(pi.values())
    sources = [c for c in range(1, budget + 1) if c not in pi]
    targets = [c for c in range(1, budget + 1) if c not in used]
    pi.update(zip(sources, targets))

    colors = dict(left.colors)
    for edge, color in right.colors.items():
        colors[edge] = pi[color]

    ys = frozenset(ys_imgs)
    ya = frozenset(ya_imgs)
    xa = frozenset(xa_imgs)
    if witness.case == 1:
        new_p = p_l
        new_q = q_l | {alpha_img}
        new_s = (s_l - ys) | xa
    elif witness.case == 2:
        new_p = p_l | {alpha_img}
        new_q = q_l
        new_s = (s_l - ys) | xa
    else:
        new_p = p_l | {alpha_img}
        new_q = q_l
        new_s = (s_l - {alpha_img} - ys) | xa
    new_t = t_l | ys | ya
    palette = frozenset(range(1, budget + 1))
    new_a = palette - new_p - new_q - new_s - new_t
    return Realization(colors, (new_p, new_q, new_s, new_t, new_a))


def reconstruct_coloring(
    result: TreeSolveResult, root_state=None
) -> tuple[EdgeColoring, ColorTypePartition]:
    """Build an explicit coloring realizing the chosen root state.

    Verifies that the coloring is semistrong and that its root
    classification matches the requested state before returning.
    """
    if not result.feasible:
        raise ValueError("reconstruction requires a feasible solve")
    if result.store is None:
        raise ValueError("reconstruction requires solve_tree(keep_sets=True)")
    tree = result.tree
    budget = result.budget
    if root_state is None:
        root_state = min(result.root_set.states())
    root_state = Quadruple(*root_state)
    if root_state not in result.root_set:
        raise ValueError(f"{root_state} is not in the root feasible set")

    plans: dict[int, _VertexPlan] = {}
    stack = [(tree.root, root_state)]
    while stack:
        v, target = stack.pop()
        if not tree.children[v]:
            if target != Quadruple(0, 0, 0, 0):
                raise InternalInconsistency(f"leaf {v} asked for state {target}")
            continue
        plan = _vertex_plan(result.store, v, target)
        plans[v] = plan
        stack.extend(zip(tree.children[v], plan.child_targets))

    palette = frozenset(range(1, budget + 1))
    empty = frozenset()
    realizations: dict[int, Realization] = {}
    for v in tree.post_order():
        kids = tree.children[v]
        if not kids:
            realizations[v] = Realization({}, (empty, empty, empty, empty, palette))
            continue
        plan = plans[v]
        current: Realization | None = None
        for j, c in enumerate(kids):
            lifted = _extend(
                realizations.pop(c), plan.branches[j], tree.parent_edge[c]
            )
            if j == 0:
                current = lifted
            else:
                current = _combine(current, lifted, plan.merge_witnesses[j], budget)
            if _sizes(current.part) != plan.level_targets[j]:
                raise InternalInconsistency(
                    f"level {j} at vertex {v} realized {_sizes(current.part)}, "
                    f"expected {plan.level_targets[j]}"
                )
        realizations[v] = current

    final = realizations[tree.root]
    try:
        colors = tuple(final.colors[e] for e in range(tree.graph.edge_count))
    except KeyError as exc:
        raise InternalInconsistency(f"edge {exc} left uncolored") from exc
    phi = EdgeColoring(colors, budget)
    check = verify_coloring(tree.graph, phi, "semistrong")
    if not check:
        raise InternalInconsistency(f"reconstructed coloring invalid: {check.message}")
    partition = classify_colors(tree, phi, budget)
    if partition.quadruple != root_state:
        raise InternalInconsistency(
            f"reconstructed classification {partition.quadruple} != {root_state}"
        )
    return phi, partition

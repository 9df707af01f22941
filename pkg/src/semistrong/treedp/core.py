"""Quadruple arithmetic for the tree dynamic program.

A subtree state counts the colors of each behavioral type relative to the
subtree root: p colors sit on first-generation edges whose far endpoint is a
1-vertex, q on first-generation edges whose near endpoint is, s colors appear
on second-generation edges only and keep every far endpoint a 1-vertex, t
appear on second-generation edges only with some far endpoint not a 1-vertex,
and the remaining a = K - p - q - s - t colors avoid both generations.

Two sibling subtrees merge in one of three situations, distinguished by how
the new child edge's color behaves on the left side; each situation is
decided by three closed-form inequalities, and a feasible merge has a
closed-form transfer-count witness describing how the right subtree's s/t
colors are matched onto left color types.
"""

from __future__ import annotations

from typing import NamedTuple


class Quadruple(NamedTuple):
    p: int
    q: int
    s: int
    t: int

    def total(self) -> int:
        return self.p + self.q + self.s + self.t


class Transfers(NamedTuple):
    """How many right-side S colors land on left P/S/T/A colors (x_*) and how
    many right-side T colors land on left S/T/A colors (y_*)."""

    x_p: int
    x_s: int
    x_t: int
    x_a: int
    y_s: int
    y_t: int
    y_a: int


MERGE_CASES = (1, 2, 3)


def _substitute(case: int, p: int, s_l: int) -> tuple[int, int]:
    """Case 2 lowers p by one; case 3 lowers both p and s_l by one."""
    if case == 1:
        return p, s_l
    if case == 2:
        return p - 1, s_l
    return p - 1, s_l - 1


def merge_conditions(
    case: int, p: int, s: int, t: int, s_l: int, t_l: int, s_r: int, t_r: int
) -> bool:
    """The three inequalities deciding whether two sibling subtree states merge.

    Cases 2 and 3 with p = 0, and case 3 with s_l = 0, are guarded to False
    (the merged edge color must come from somewhere).
    """
    if case not in MERGE_CASES:
        raise ValueError(f"case must be one of {MERGE_CASES}")
    if min(p, s, t, s_l, t_l, s_r, t_r) < 0:
        raise ValueError("all state components must be nonnegative")
    if case in (2, 3) and p == 0:
        return False
    if case == 3 and s_l == 0:
        return False
    pp, sl = _substitute(case, p, s_l)
    if not (t_r <= t <= t_l + t_r):
        return False
    if not (max(0, sl - s) <= min(sl, t - t_l)):
        return False
    if not (0 <= sl + s_r - s <= sl + pp + t - t_r):
        return False
    return True


def witness_assignment(
    case: int, p: int, s: int, t: int, s_l: int, t_l: int, s_r: int, t_r: int
) -> Transfers:
    """Closed-form transfer counts for a feasible merge.

    Requires merge_conditions to hold.  The result is checked against the
    first seven lines of the case's linear system on every call; the eighth
    follows from lines 2-4 whenever the merged quadruple fits the budget.
    """
    if not merge_conditions(case, p, s, t, s_l, t_l, s_r, t_r):
        raise ValueError("witness requested for an infeasible merge")
    pp, sl = _substitute(case, p, s_l)
    y_t = t_l + t_r - t
    y_s = min(sl, t - t_l, sl + s_r - s)
    x_a = s - sl + y_s
    y_a = t - t_l - y_s
    x_t = min(t - t_r, sl + s_r - s - y_s)
    x_p = min(pp, s_r - x_a - x_t)
    x_s = s_r - x_a - x_t - x_p
    w = Transfers(x_p, x_s, x_t, x_a, y_s, y_t, y_a)
    assert min(w) >= 0, (case, p, s, t, s_l, t_l, s_r, t_r, w)
    assert s_r == w.x_p + w.x_s + w.x_t + w.x_a
    assert t_r == w.y_s + w.y_t + w.y_a
    assert s == sl - w.y_s + w.x_a
    assert t == t_r + t_l - w.y_t
    assert w.x_p <= pp
    assert w.x_s + w.y_s <= sl
    assert w.x_t + w.y_t <= t_l
    return w


def check_merge_system(
    case: int,
    p: int,
    q: int,
    s: int,
    t: int,
    s_l: int,
    t_l: int,
    s_r: int,
    t_r: int,
    w: Transfers,
    budget: int,
) -> bool:
    """Full eight-line system check, including the left-free-color line that
    needs the budget: a_l = budget + 1 - p - q - s_l - t_l."""
    pp, sl = _substitute(case, p, s_l)
    a_l = budget + 1 - p - q - s_l - t_l
    fresh = 1 if case in (1, 2) else 0
    return (
        min(w) >= 0
        and s_r == w.x_p + w.x_s + w.x_t + w.x_a
        and t_r == w.y_s + w.y_t + w.y_a
        and s == sl - w.y_s + w.x_a
        and t == t_r + t_l - w.y_t
        and w.x_p <= pp
        and w.x_s + w.y_s <= sl
        and w.x_t + w.y_t <= t_l
        and fresh + w.x_a + w.y_a <= a_l
    )

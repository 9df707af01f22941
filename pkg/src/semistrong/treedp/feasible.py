"""Feasible-state sets and the two DP transitions.

vertical_expand lifts the feasible set of a child subtree through the new
parent edge; horizontal_merge fuses the running union of child subtrees with
the next one.  Witness records capture, for each reachable state, one way it
was produced; reconstruction replays them top-down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    Quadruple,
    Transfers,
    check_merge_system,
    merge_conditions,
    witness_assignment,
)

BRANCH_FRESH = (1, 0)   # parent edge takes a color unused near the child root
BRANCH_REUSE_S = (0, 1)  # parent edge reuses a child type-s color


@dataclass(frozen=True)
class VerticalWitness:
    branch: tuple[int, int]      # BRANCH_FRESH or BRANCH_REUSE_S
    child_state: Quadruple


@dataclass(frozen=True)
class MergeWitness:
    case: int
    s_l: int
    t_l: int
    s_r: int
    t_r: int
    transfers: Transfers

    def left_state(self, target: Quadruple) -> Quadruple:
        if self.case == 1:
            return Quadruple(target.p, target.q - 1, self.s_l, self.t_l)
        return Quadruple(target.p - 1, target.q, self.s_l, self.t_l)

    def right_state(self) -> Quadruple:
        branch = BRANCH_REUSE_S if self.case == 1 else BRANCH_FRESH
        return Quadruple(branch[0], branch[1], self.s_r, self.t_r)


class FeasibleSet:
    """Set of reachable (p, q; s, t) states with O(1) membership, indexed by
    (p, q) for restriction queries, with an optional witness per state."""

    def __init__(self, owner: str = ""):
        self.owner = owner
        self._rows: dict[tuple[int, int], set[tuple[int, int]]] = {}
        self._witness: dict[Quadruple, object] = {}

    def add(self, state: Quadruple, witness=None) -> None:
        state = Quadruple(*state)
        self._rows.setdefault((state.p, state.q), set()).add((state.s, state.t))
        if witness is not None and state not in self._witness:
            self._witness[state] = witness

    def __contains__(self, state) -> bool:
        p, q, s, t = state
        return (s, t) in self._rows.get((p, q), ())

    def restrict(self, p: int, q: int) -> tuple[tuple[int, int], ...]:
        """(s, t) pairs present for the given (p, q), sorted."""
        return tuple(sorted(self._rows.get((p, q), ())))

    def witness(self, state) -> object:
        return self._witness.get(Quadruple(*state))

    def states(self) -> frozenset[Quadruple]:
        return frozenset(
            Quadruple(p, q, s, t)
            for (p, q), row in self._rows.items()
            for (s, t) in row
        )

    def __iter__(self) -> Iterator[Quadruple]:
        return iter(sorted(self.states()))

    def __len__(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def __bool__(self) -> bool:
        return any(self._rows.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, FeasibleSet):
            return self.states() == other.states()
        return NotImplemented

    def __repr__(self) -> str:
        return f"FeasibleSet({self.owner or '?'}, {sorted(self.states())})"


def leaf_set(owner: str = "leaf") -> FeasibleSet:
    out = FeasibleSet(owner)
    out.add(Quadruple(0, 0, 0, 0))
    return out


def vertical_expand(
    child_set: FeasibleSet, chd_i: int, budget: int, with_witness: bool = True
) -> FeasibleSet:
    """Feasible states of the child subtree plus its parent edge.

    A child state (p, q; s, t) re-indexes to (s', t') = (p, q) seen from the
    parent: the child's first-generation edges become second-generation.  The
    new edge either takes a color absent near the child root, which needs
    p+q+s+t <= budget-1 and keeps the child root a 1-vertex (branch (1,0)),
    or reuses a child type-s color, which needs s >= 1 and makes the parent
    the 1-vertex (branch (0,1)); a type-t color would strand the
    second-generation edge that relies on its near endpoint.
    """
    out = FeasibleSet(f"{child_set.owner}+edge")
    for p in range(chd_i + 1):
        q = chd_i - p
        row = child_set.restrict(p, q)
        for s, t in row:
            if p + q + s + t <= budget - 1:
                out.add(
                    Quadruple(1, 0, p, q),
                    VerticalWitness(BRANCH_FRESH, Quadruple(p, q, s, t))
                    if with_witness
                    else None,
                )
                break
        for s, t in row:
            if s >= 1 and p + q + s + t <= budget:
                out.add(
                    Quadruple(0, 1, p, q),
                    VerticalWitness(BRANCH_REUSE_S, Quadruple(p, q, s, t))
                    if with_witness
                    else None,
                )
                break
    return out


def _find_merge_witness(
    left: FeasibleSet,
    right: FeasibleSet,
    p: int,
    q: int,
    s: int,
    t: int,
    chd_next: int,
) -> MergeWitness | None:
    """First qualifying (case, s_l, t_l, t_r) in lexicographic order."""
    for case in (1, 2, 3):
        if case == 1:
            if q < 1:
                continue
            left_row = left.restrict(p, q - 1)
            right_branch = BRANCH_REUSE_S
        else:
            if p < 1:
                continue
            left_row = left.restrict(p - 1, q)
            right_branch = BRANCH_FRESH
        for s_l, t_l in sorted(left_row):
            for t_r in range(chd_next + 1):
                s_r = chd_next - t_r
                if (right_branch[0], right_branch[1], s_r, t_r) not in right:
                    continue
                if merge_conditions(case, p, s, t, s_l, t_l, s_r, t_r):
                    transfers = witness_assignment(case, p, s, t, s_l, t_l, s_r, t_r)
                    return MergeWitness(case, s_l, t_l, s_r, t_r, transfers)
    return None


def horizontal_merge(
    left: FeasibleSet,
    right: FeasibleSet,
    i: int,
    chd_next: int,
    budget: int,
    with_witness: bool = True,
) -> FeasibleSet:
    """Fuse the union of the first i child subtrees with child subtree i+1.

    Every output state has p + q = i + 1.  The right set must come from
    vertical_expand, so its states have first components (1,0) or (0,1) and
    s + t equal to the child's child count.
    """
    for state in right:
        if (state.p, state.q) not in (BRANCH_FRESH, BRANCH_REUSE_S):
            raise ValueError(f"right set has a non-edge state {state}")
        if state.s + state.t != chd_next:
            raise ValueError(
                f"right state {state} violates s + t = chd(v_{{i+1}}) = {chd_next}"
            )
    out = FeasibleSet(f"{left.owner}|{right.owner}")
    for p in range(i + 2):
        q = (i + 1) - p
        for s in range(budget - p - q + 1):
            for t in range(budget - p - q - s + 1):
                witness = _find_merge_witness(left, right, p, q, s, t, chd_next)
                if witness is not None:
                    assert check_merge_system(
                        witness.case, p, q, s, t,
                        witness.s_l, witness.t_l, witness.s_r, witness.t_r,
                        witness.transfers, budget,
                    )
                    out.add(
                        Quadruple(p, q, s, t), witness if with_witness else None
                    )
    return out


def merge_rows_fast(
    left_rows: dict[int, list[tuple[int, int]]],
    right10: list[int],
    right01: list[int],
    i: int,
    chd_next: int,
    budget: int,
) -> dict[int, set[tuple[int, int]]]:
    """Set-only merge used by the pure-Python kernel.

    left_rows maps p_left -> list of (s_l, t_l) (q_left = i - p_left is
    implied); right10/right01 hold the t_r values present for branches (1,0)
    and (0,1).  Instead of probing each candidate state, the reachable (s, t)
    region of every (left state, right state, case) triple is written out
    directly; the result equals horizontal_merge's state set.
    """
    d = chd_next
    out: dict[int, set[tuple[int, int]]] = {}
    for p_left, row in left_rows.items():
        for s_l, t_l in row:
            for case in (1, 2, 3):
                if case == 1:
                    p, right_ts = p_left, right01
                else:
                    p, right_ts = p_left + 1, right10
                q = (i + 1) - p
                if q < 0 or (case in (2, 3) and p == 0):
                    continue
                if case == 3 and s_l == 0:
                    continue
                pp = p if case == 1 else p - 1
                sl = s_l - 1 if case == 3 else s_l
                free = budget - p - q
                target = out.setdefault(p, set())
                for t_r in right_ts:
                    s_r = d - t_r
                    t_lo = max(t_l, t_r)
                    t_hi = min(t_l + t_r, free)
                    for t in range(t_lo, t_hi + 1):
                        s_lo = max(0, sl + t_l - t, s_r + t_r - t - pp)
                        s_hi = min(sl + s_r, free - t)
                        for s in range(s_lo, s_hi + 1):
                            target.add((s, t))
    return out

"""Weighted partial MaxSAT solving: exhaustive oracle and branch and bound.

``brute_force`` enumerates every assignment (vectorized, in chunks) and is
the reference the search is tested against.  ``solve_bnb`` is a classic
branch-and-bound search: unit propagation over hard clauses, a lower bound
made of the falsified soft weight plus disjoint complementary soft units,
and a most-occurrences branching heuristic.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .formula import Formula

BRUTE_FORCE_CAP = 26
_CHUNK_BITS = 16


class Status(Enum):
    OPTIMUM = "OPTIMUM"
    HARD_UNSAT = "HARD_UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class OptResult:
    status: Status
    cost: int | None
    witness: list[bool] | None
    nodes: int
    incumbents: list[int] = field(default_factory=list)
    elapsed: float = 0.0


def _index_witness(index: int, num_vars: int) -> list[bool]:
    # x1 is the most significant bit, so index order is lexicographic order
    return [False] + [bool((index >> (num_vars - j)) & 1) for j in range(1, num_vars + 1)]


def brute_force(formula: Formula, cap: int = BRUTE_FORCE_CAP) -> OptResult:
    """Exhaustive enumeration of all 2^V assignments.

    Returns the minimal soft cost over assignments satisfying every hard
    clause, with the lexicographically least witness among the optima, or
    HARD_UNSAT when no assignment satisfies the hard part.
    """
    nv = formula.num_vars
    if nv > cap:
        raise ValueError(f"brute force cap exceeded: {nv} > {cap}")
    start_time = time.monotonic()
    total = 1 << nv
    chunk = 1 << min(nv, _CHUNK_BITS)
    best_cost = None
    best_index = None
    # any feasible cost is below the soft weight sum; weights beyond the
    # int64 range fall back to exact Python integers
    sentinel = formula.soft_weight_sum + 1
    cost_dtype = np.int64 if formula.soft_weight_sum < 2**62 else object

    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        violated = np.zeros(len(idx), dtype=bool)
        cost = np.zeros(len(idx), dtype=cost_dtype)
        for wc in formula.clauses:
            unsat = np.ones(len(idx), dtype=bool)
            for lit in wc.lits:
                bit = (idx >> (nv - abs(lit))) & 1
                unsat &= bit != (1 if lit > 0 else 0)
                if not unsat.any():
                    break
            if formula.is_hard(wc):
                violated |= unsat
            elif cost.dtype == object:
                cost += unsat.astype(object) * wc.weight
            else:
                cost += wc.weight * unsat
        feasible_cost = cost.copy()
        feasible_cost[violated] = sentinel
        pos = int(np.argmin(feasible_cost))
        val = int(feasible_cost[pos])
        if val != sentinel and (best_cost is None or val < best_cost):
            best_cost = val
            best_index = start + pos

    elapsed = time.monotonic() - start_time
    if best_cost is None:
        return OptResult(Status.HARD_UNSAT, None, None, nodes=total, elapsed=elapsed)
    return OptResult(
        Status.OPTIMUM,
        best_cost,
        _index_witness(best_index, nv),
        nodes=total,
        incumbents=[best_cost],
        elapsed=elapsed,
    )


class SearchState:
    """Partial assignment with per-clause satisfaction/unassigned counters
    and an undo trail.  The running unsatisfied soft weight never exceeds
    the best known cost while a node is open."""

    def __init__(self, formula: Formula):
        self.formula = formula
        self.num_vars = formula.num_vars
        self.lits = [wc.lits for wc in formula.clauses]
        self.weight = [wc.weight for wc in formula.clauses]
        self.hard = [formula.is_hard(wc) for wc in formula.clauses]
        self.occ: dict[int, list[int]] = {}
        for cid, lits in enumerate(self.lits):
            for lit in lits:
                self.occ.setdefault(lit, []).append(cid)
        self.values = [0] * (self.num_vars + 1)  # 0 unassigned, 1 true, -1 false
        self.sat_count = [0] * len(self.lits)
        self.unassigned = [len(lits) for lits in self.lits]
        self.falsified = 0
        self.hard_conflicts = 0
        self.trail: list[int] = []
        self.pending_units: list[int] = []
        for cid, lits in enumerate(self.lits):
            if not lits:
                if self.hard[cid]:
                    self.hard_conflicts += 1
                else:
                    self.falsified += self.weight[cid]
            elif len(lits) == 1 and self.hard[cid]:
                self.pending_units.append(cid)

    def assign(self, lit: int) -> None:
        var = abs(lit)
        self.values[var] = 1 if lit > 0 else -1
        self.trail.append(lit)
        for cid in self.occ.get(lit, ()):
            self.sat_count[cid] += 1
        for cid in self.occ.get(-lit, ()):
            self.unassigned[cid] -= 1
            if self.sat_count[cid] == 0:
                if self.unassigned[cid] == 0:
                    if self.hard[cid]:
                        self.hard_conflicts += 1
                    else:
                        self.falsified += self.weight[cid]
                elif self.unassigned[cid] == 1 and self.hard[cid]:
                    self.pending_units.append(cid)

    def backtrack(self, mark: int) -> None:
        while len(self.trail) > mark:
            lit = self.trail.pop()
            for cid in self.occ.get(lit, ()):
                self.sat_count[cid] -= 1
            for cid in self.occ.get(-lit, ()):
                if self.sat_count[cid] == 0 and self.unassigned[cid] == 0:
                    if self.hard[cid]:
                        self.hard_conflicts -= 1
                    else:
                        self.falsified -= self.weight[cid]
                self.unassigned[cid] += 1
            self.values[abs(lit)] = 0
        self.pending_units.clear()

    def witness(self) -> list[bool]:
        return [False] + [self.values[v] == 1 for v in range(1, self.num_vars + 1)]


def unit_propagate(state: SearchState) -> bool:
    """Fix variables forced by unit hard clauses; False on a hard conflict.

    Soft clauses falsified along the way add their weight to the state's
    running cost via the assignment bookkeeping.
    """
    while state.pending_units:
        cid = state.pending_units.pop()
        if state.hard_conflicts:
            return False
        if state.sat_count[cid] or state.unassigned[cid] != 1:
            continue
        for lit in state.lits[cid]:
            if state.values[abs(lit)] == 0:
                state.assign(lit)
                break
    return state.hard_conflicts == 0


def lower_bound(state: SearchState) -> int:
    """Admissible bound: falsified soft weight plus, per variable, the
    cheaper side of any complementary pending soft units."""
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    for cid, lits in enumerate(state.lits):
        if state.hard[cid] or state.sat_count[cid] or state.unassigned[cid] != 1:
            continue
        for lit in lits:
            if state.values[abs(lit)] == 0:
                side = pos if lit > 0 else neg
                side[abs(lit)] = side.get(abs(lit), 0) + state.weight[cid]
                break
    bound = state.falsified
    for var, w in pos.items():
        if var in neg:
            bound += min(w, neg[var])
    return bound


def _node_scan(state: SearchState):
    """One pass over pending clauses: complementary-unit bound term, the
    branch variable (most occurrences, ties by lowest index), and the
    pending weight behind each phase of that variable."""
    counts = [0] * (state.num_vars + 1)
    pos_w = [0] * (state.num_vars + 1)
    neg_w = [0] * (state.num_vars + 1)
    unit_pos: dict[int, int] = {}
    unit_neg: dict[int, int] = {}
    values = state.values
    for cid, lits in enumerate(state.lits):
        if state.sat_count[cid] or state.unassigned[cid] == 0:
            continue
        w = state.weight[cid]
        is_unit_soft = state.unassigned[cid] == 1 and not state.hard[cid]
        for lit in lits:
            var = abs(lit)
            if values[var] == 0:
                counts[var] += 1
                if lit > 0:
                    pos_w[var] += w
                else:
                    neg_w[var] += w
                if is_unit_soft:
                    side = unit_pos if lit > 0 else unit_neg
                    side[var] = side.get(var, 0) + w
    extra = 0
    for var, w in unit_pos.items():
        if var in unit_neg:
            extra += min(w, unit_neg[var])
    branch = None
    best_count = 0
    for var in range(1, state.num_vars + 1):
        if counts[var] > best_count:
            best_count = counts[var]
            branch = var
    if branch is None:
        return state.falsified + extra, None, 0, 0
    return state.falsified + extra, branch, pos_w[branch], neg_w[branch]


def solve_bnb(
    formula: Formula,
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> OptResult:
    """Branch-and-bound search for the minimal unsatisfied soft weight.

    Matches ``brute_force`` on every instance within the oracle cap.  When
    a budget runs out the best incumbent is returned with UNKNOWN status.
    """
    state = SearchState(formula)
    start_time = time.monotonic()
    best_cost: int | None = None
    best_witness: list[bool] | None = None
    incumbents: list[int] = []
    nodes = 0
    aborted = False

    limit = sys.getrecursionlimit()
    needed = 4 * (formula.num_vars + 10)
    if needed > limit:
        sys.setrecursionlimit(needed)

    def dfs() -> None:
        nonlocal best_cost, best_witness, nodes, aborted
        if aborted:
            return
        mark = len(state.trail)
        if not unit_propagate(state):
            state.backtrack(mark)
            return
        bound, branch, pos_w, neg_w = _node_scan(state)
        if best_cost is not None and bound >= best_cost:
            state.backtrack(mark)
            return
        if branch is None:
            cost = state.falsified
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_witness = state.witness()
                incumbents.append(cost)
            state.backtrack(mark)
            return
        if node_limit is not None and nodes >= node_limit:
            aborted = True
            state.backtrack(mark)
            return
        if time_limit is not None and nodes % 256 == 0:
            if time.monotonic() - start_time > time_limit:
                aborted = True
                state.backtrack(mark)
                return
        first = branch if pos_w >= neg_w else -branch
        for lit in (first, -first):
            nodes += 1
            child_mark = len(state.trail)
            state.assign(lit)
            dfs()
            state.backtrack(child_mark)
            if aborted:
                break
        state.backtrack(mark)

    dfs()
    elapsed = time.monotonic() - start_time

    if aborted:
        return OptResult(Status.UNKNOWN, best_cost, best_witness, nodes, incumbents, elapsed)
    if best_cost is None:
        return OptResult(Status.HARD_UNSAT, None, None, nodes, incumbents, elapsed)
    return OptResult(Status.OPTIMUM, best_cost, best_witness, nodes, incumbents, elapsed)

"""Shared test helpers: independent reference oracles.

Everything here recomputes results from first principles (exhaustive
enumeration, direct multiset comparison) without going through the code
paths under test, so expected values stay independent of the library.
"""

from __future__ import annotations

import itertools
from collections import Counter

from maxsymbreak import Formula, Permutation, build_formula


def sort_lits(lits):
    return tuple(sorted(set(lits), key=lambda l: (abs(l), l < 0)))


def eval_ref(formula: Formula, assignment) -> tuple[int, int]:
    """Reference evaluation: (hard violations, unsatisfied soft weight)."""
    hard = soft = 0
    for wc in formula.clauses:
        if any((lit > 0) == bool(assignment[abs(lit)]) for lit in wc.lits):
            continue
        if wc.weight == formula.top:
            hard += 1
        else:
            soft += wc.weight
    return hard, soft


def exhaustive_optimum(formula: Formula):
    """Reference optimum by plain enumeration: (cost or None, witness)."""
    best = None
    witness = None
    for bits in itertools.product((False, True), repeat=formula.num_vars):
        a = [False] + list(bits)
        hard, soft = eval_ref(formula, a)
        if hard == 0 and (best is None or soft < best):
            best = soft
            witness = a
    return best, witness


def signed_mappings(num_vars: int):
    """Every phase-consistent literal bijection on variables 1..num_vars."""
    for perm in itertools.permutations(range(1, num_vars + 1)):
        for signs in itertools.product((1, -1), repeat=num_vars):
            mapping = {}
            for var, target, sign in zip(range(1, num_vars + 1), perm, signs):
                mapping[var] = sign * target
                mapping[-var] = -sign * target
            yield mapping


def preserves_formula(mapping: dict[int, int], formula: Formula) -> bool:
    """Direct multiset check that a literal map fixes the formula."""
    before = Counter((wc.lits, wc.weight) for wc in formula.clauses)
    after = Counter(
        (sort_lits(mapping.get(lit, lit) for lit in wc.lits), wc.weight)
        for wc in formula.clauses
    )
    return before == after


def brute_symmetry_group(formula: Formula) -> set[Permutation]:
    """All phase-consistent literal permutations preserving the formula."""
    return {
        Permutation(m) for m in signed_mappings(formula.num_vars) if preserves_formula(m, formula)
    }


def permutation_closure(generators, limit: int = 200_000) -> set[Permutation]:
    """Group generated by ``generators`` via breadth-first composition."""
    identity = Permutation({})
    seen = {identity}
    frontier = [identity]
    while frontier:
        elem = frontier.pop()
        for g in generators:
            new = elem.compose(g)
            if new not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("closure limit exceeded")
                seen.add(new)
                frontier.append(new)
    return seen


def propagate_hard_ref(formula: Formula) -> dict[int, bool]:
    """Reference unit propagation over the hard clauses only.

    Returns the forced variable values; loops to a fixpoint with a plain
    rescan so it stays independent of the solver's machinery.
    """
    values: dict[int, bool] = {}
    hard = [wc.lits for wc in formula.clauses if wc.weight == formula.top]
    changed = True
    while changed:
        changed = False
        for lits in hard:
            if any(abs(l) in values and (l > 0) == values[abs(l)] for l in lits):
                continue
            unassigned = [l for l in lits if abs(l) not in values]
            if len(unassigned) == 1:
                lit = unassigned[0]
                values[abs(lit)] = lit > 0
                changed = True
    return values


# --- canonical worked instances ---------------------------------------------

def example_ms() -> Formula:
    """(x1 v x2)(~x1 v x2)(~x2)(x3 v x2)(~x3 v x2), all soft weight 1."""
    return build_formula(
        3,
        soft=[([1, 2], 1), ([-1, 2], 1), ([-2], 1), ([3, 2], 1), ([-3, 2], 1)],
    )


def example_wpms() -> Formula:
    """Weighted instance with soft weights 1,1,5 and two hard clauses."""
    return build_formula(
        3,
        soft=[([1, 2], 1), ([-1, 2], 1), ([-2], 5)],
        hard=[[-3, 2], [3, 2]],
        top=9,
    )


EXAMPLE_WPMS_WCNF = "p wcnf 3 5 9\n1 1 2 0\n1 -1 2 0\n5 -2 0\n9 -3 2 0\n9 3 2 0\n"

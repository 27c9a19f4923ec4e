"""Built-in instance generators: pigeon-hole and seeded random formulas."""

from __future__ import annotations

import random

from .formula import Formula, build_formula


def hole(n: int) -> Formula:
    """Pigeon-hole instance PHP(n+1, n) as plain MaxSAT.

    Variable x_{i,j} ("pigeon i sits in hole j") has index (i-1)*n + j.
    Every pigeon gets a clause over its n holes and every hole gets a
    pairwise at-most-one clause per pigeon pair; all clauses are soft with
    weight 1, so the optimum cost of this unsatisfiable family is 1.
    """
    if n < 1:
        raise ValueError("hole(n) requires n >= 1")
    pigeons = n + 1

    def var(i: int, j: int) -> int:
        return (i - 1) * n + j

    soft: list[tuple[list[int], int]] = []
    for i in range(1, pigeons + 1):
        soft.append(([var(i, j) for j in range(1, n + 1)], 1))
    for j in range(1, n + 1):
        for i1 in range(1, pigeons + 1):
            for i2 in range(i1 + 1, pigeons + 1):
                soft.append(([-var(i1, j), -var(i2, j)], 1))
    return build_formula(pigeons * n, soft=soft)


def random_formula(
    num_vars: int,
    num_clauses: int,
    max_weight: int = 1,
    hard_fraction: float = 0.0,
    seed: int = 0,
    min_len: int = 1,
    max_len: int = 3,
) -> Formula:
    """Seed-deterministic random weighted formula.

    Clause lengths are uniform in [min_len, max_len] (capped by num_vars),
    weights uniform in [1, max_weight], and each clause is hard with
    probability hard_fraction.
    """
    if num_vars < 1 or num_clauses < 0:
        raise ValueError("need num_vars >= 1 and num_clauses >= 0")
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    if not 0.0 <= hard_fraction <= 1.0:
        raise ValueError("hard_fraction must be in [0, 1]")
    rng = random.Random(seed)
    soft: list[tuple[list[int], int]] = []
    hard: list[list[int]] = []
    for _ in range(num_clauses):
        k = rng.randint(min(min_len, num_vars), min(max_len, num_vars))
        variables = rng.sample(range(1, num_vars + 1), k)
        lits = [v if rng.random() < 0.5 else -v for v in variables]
        if rng.random() < hard_fraction:
            hard.append(lits)
        else:
            soft.append((lits, rng.randint(1, max_weight)))
    return build_formula(num_vars, soft=soft, hard=hard)

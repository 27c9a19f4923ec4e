"""Lex-leader symmetry-breaking predicates.

For each generator p the emitted hard clauses keep exactly the assignments
x with x <=_lex p(x), where the comparison runs over the generator's
support variables in ascending index order.  Prefix equality is tracked
with a chain of fresh auxiliary variables, one per support position after
the first, so the fragment stays linear in the support size.

The lexicographically least member of every symmetry orbit satisfies all
fragments, so adding them as hard clauses never changes the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphism import GeneratorSet, Permutation
from .formula import Formula, lift_to_partial, normalize_clause


@dataclass
class SbpResult:
    """Hard clauses to add, plus bookkeeping for reporting.

    Auxiliary variables occupy num_vars+1 .. num_vars+aux_vars.
    ``per_generator[i]`` is the half-open clause range contributed by
    generator i.
    """

    clauses: list[tuple[int, ...]]
    aux_vars: int
    per_generator: list[tuple[int, int]]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def lex_leader(
    p: Permutation, num_vars: int, next_aux: int | None = None
) -> tuple[list[tuple[int, ...]], int]:
    """Clauses enforcing x <=_lex p(x); returns (clauses, aux vars used).

    Position 1 contributes (~l1 v p(l1)).  Each later position j
    contributes (~e_{j-1} v ~l_j v p(l_j)) together with the two clauses
    forcing e_{j-1} true when the previous position is equal and its own
    prefix chain holds.  A position whose image is the complement of its
    literal pins the chain false, so emission stops there: deeper
    constraints are vacuous.
    """
    if next_aux is None:
        next_aux = num_vars + 1
    support = sorted(p.support)
    clauses: list[tuple[int, ...]] = []
    aux_used = 0
    chain = None  # active prefix-equality variable; None means constant true

    for j, var in enumerate(support):
        lit = var
        image = p.image(lit)
        prefix = [-chain] if chain is not None else []
        clauses.append(normalize_clause(prefix + [-lit, image]))
        if image == -lit:
            # equality at this position is impossible; the chain dies here
            break
        if j < len(support) - 1:
            nxt = next_aux + aux_used
            aux_used += 1
            clauses.append(normalize_clause(prefix + [-lit, -image, nxt]))
            clauses.append(normalize_clause(prefix + [lit, image, nxt]))
            chain = nxt
    return clauses, aux_used


def build_sbp(formula: Formula, generators: GeneratorSet | list[Permutation]) -> SbpResult:
    """Concatenate lex-leader fragments with shared auxiliary numbering."""
    clauses: list[tuple[int, ...]] = []
    per_generator: list[tuple[int, int]] = []
    aux_total = 0
    for p in generators:
        if p.is_identity:
            per_generator.append((len(clauses), len(clauses)))
            continue
        start = len(clauses)
        fragment, aux_used = lex_leader(p, formula.num_vars, formula.num_vars + 1 + aux_total)
        clauses.extend(fragment)
        aux_total += aux_used
        per_generator.append((start, len(clauses)))
    return SbpResult(clauses, aux_total, per_generator)


def generate_sbps(
    formula: Formula, generators: GeneratorSet | list[Permutation]
) -> tuple[Formula, SbpResult]:
    """SBP-augmented formula plus the fragment bookkeeping.

    The added clauses are hard, so the variant follows the usual mapping:
    MS and PMS become PMS, WMS and WPMS become WPMS.
    """
    result = build_sbp(formula, generators)
    augmented = lift_to_partial(formula, result.clauses, formula.num_vars + result.aux_vars)
    return augmented, result

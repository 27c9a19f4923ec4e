"""Weighted CNF formulas with a soft/hard split, plus DIMACS CNF/WCNF I/O.

Literals follow the DIMACS convention: variable ``v`` is the positive
literal ``v`` and its complement is ``-v``.  Hard clauses are the clauses
whose weight equals the formula's ``top`` sentinel; every other clause is
soft and contributes its weight to the cost when unsatisfied.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Variant(Enum):
    """Problem class, derived from the clause set (unit vs mixed weights,
    presence of hard clauses)."""

    MS = "MS"
    PMS = "PMS"
    WMS = "WMS"
    WPMS = "WPMS"


class DimacsParseError(ValueError):
    """Malformed DIMACS input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def normalize_clause(lits: Iterable[int]) -> tuple[int, ...]:
    """Drop duplicate literals and sort by (variable, phase)."""
    return tuple(sorted(set(lits), key=lambda lit: (abs(lit), lit < 0)))


def is_tautology(lits: Sequence[int]) -> bool:
    """A clause containing both a literal and its complement."""
    seen = set(lits)
    return any(-lit in seen for lit in lits)


@dataclass(frozen=True)
class WeightedClause:
    lits: tuple[int, ...]
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "lits", normalize_clause(self.lits))
        if self.weight < 1:
            raise ValueError(f"clause weight must be >= 1, got {self.weight}")

    @property
    def tautological(self) -> bool:
        return is_tautology(self.lits)


@dataclass(frozen=True)
class Formula:
    """Immutable weighted clause database.

    ``top`` is the hard-weight sentinel: clauses of weight exactly ``top``
    are hard.  Formulas built by the constructors in this package keep
    ``top`` strictly greater than the sum of the soft weights; parsed files
    keep their header value verbatim so that round trips are exact.
    """

    num_vars: int
    clauses: tuple[WeightedClause, ...]
    top: int

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        if self.top < 1:
            raise ValueError("top must be positive")
        for wc in self.clauses:
            for lit in wc.lits:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")
            if wc.weight > self.top:
                raise ValueError(f"clause weight {wc.weight} exceeds top {self.top}")

    def is_hard(self, wc: WeightedClause) -> bool:
        return wc.weight == self.top

    @property
    def hard_clauses(self) -> list[WeightedClause]:
        return [wc for wc in self.clauses if wc.weight == self.top]

    @property
    def soft_clauses(self) -> list[WeightedClause]:
        return [wc for wc in self.clauses if wc.weight != self.top]

    @property
    def soft_weight_sum(self) -> int:
        return sum(wc.weight for wc in self.clauses if wc.weight != self.top)

    @property
    def variant(self) -> Variant:
        has_hard = any(wc.weight == self.top for wc in self.clauses)
        weighted = any(wc.weight != 1 for wc in self.clauses if wc.weight != self.top)
        if weighted:
            return Variant.WPMS if has_hard else Variant.WMS
        return Variant.PMS if has_hard else Variant.MS


def build_formula(
    num_vars: int,
    soft: Iterable[tuple[Sequence[int], int]] = (),
    hard: Iterable[Sequence[int]] = (),
    top: int | None = None,
) -> Formula:
    """Assemble a formula from (lits, weight) soft clauses and hard clauses.

    ``top`` defaults to sum(soft weights) + 1, the smallest valid sentinel.
    """
    soft = [(tuple(lits), w) for lits, w in soft]
    hard = [tuple(lits) for lits in hard]
    soft_sum = sum(w for _, w in soft)
    if top is None:
        top = soft_sum + 1
    elif top <= soft_sum:
        raise ValueError(f"top {top} must exceed soft weight sum {soft_sum}")
    clauses = [WeightedClause(lits, w) for lits, w in soft]
    clauses += [WeightedClause(lits, top) for lits in hard]
    return Formula(num_vars, tuple(clauses), top)


def parse_dimacs(text: str) -> Formula:
    """Parse a ``p cnf`` or ``p wcnf`` instance.

    CNF clauses get weight 1 with top = #clauses + 1; WCNF clauses of
    weight TOP are hard.  Raises DimacsParseError with the offending line
    number on malformed input.
    """
    num_vars = None
    declared_clauses = None
    top = None
    wcnf = False
    clauses: list[WeightedClause] = []
    header_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsParseError("duplicate problem line", lineno)
            tokens = line.split()
            if len(tokens) >= 2 and tokens[1] == "cnf":
                if len(tokens) != 4:
                    raise DimacsParseError("expected 'p cnf <vars> <clauses>'", lineno)
                fmt = "cnf"
            elif len(tokens) >= 2 and tokens[1] == "wcnf":
                if len(tokens) != 5:
                    raise DimacsParseError("expected 'p wcnf <vars> <clauses> <top>'", lineno)
                fmt = "wcnf"
            else:
                raise DimacsParseError(f"unknown problem line {line!r}", lineno)
            try:
                fields = [int(t) for t in tokens[2:]]
            except ValueError:
                raise DimacsParseError("non-integer field in problem line", lineno)
            num_vars, declared_clauses = fields[0], fields[1]
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsParseError("negative count in problem line", lineno)
            if fmt == "wcnf":
                wcnf = True
                top = fields[2]
                if top < 1:
                    raise DimacsParseError(f"top must be positive, got {top}", lineno)
            header_line = lineno
            continue

        if num_vars is None:
            raise DimacsParseError("clause before problem line", lineno)
        try:
            tokens = [int(t) for t in line.split()]
        except ValueError:
            raise DimacsParseError(f"non-integer token in clause {line!r}", lineno)
        if tokens[-1] != 0:
            raise DimacsParseError("clause line is not terminated by 0", lineno)
        if 0 in tokens[:-1]:
            raise DimacsParseError("stray 0 before clause terminator", lineno)
        if wcnf:
            weight, lits = tokens[0], tokens[1:-1]
            if weight <= 0:
                raise DimacsParseError(f"clause weight must be positive, got {weight}", lineno)
            if weight > top:
                raise DimacsParseError(f"clause weight {weight} exceeds top {top}", lineno)
        else:
            weight, lits = 1, tokens[:-1]
        for lit in lits:
            if abs(lit) > num_vars:
                raise DimacsParseError(f"literal {lit} out of range 1..{num_vars}", lineno)
        clauses.append(WeightedClause(tuple(lits), weight))

    if num_vars is None:
        raise DimacsParseError("missing problem line", None)
    if len(clauses) != declared_clauses:
        raise DimacsParseError(
            f"header declares {declared_clauses} clauses, found {len(clauses)}",
            header_line,
        )
    if not wcnf:
        top = declared_clauses + 1
    return Formula(num_vars, tuple(clauses), top)


def serialize(formula: Formula, comments: Sequence[str] = ()) -> str:
    """Render as WCNF text; parse_dimacs(serialize(f)) reproduces f."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p wcnf {formula.num_vars} {len(formula.clauses)} {formula.top}")
    for wc in formula.clauses:
        lines.append(" ".join([str(wc.weight)] + [str(lit) for lit in wc.lits] + ["0"]))
    return "\n".join(lines) + "\n"


def evaluate(formula: Formula, assignment: Sequence[bool]) -> tuple[int, int]:
    """Count violated hard clauses and total unsatisfied soft weight.

    ``assignment`` is indexed by variable (slot 0 unused) and must cover
    all of the formula's variables.
    """
    hard_violations = 0
    soft_unsat = 0
    for wc in formula.clauses:
        satisfied = any((lit > 0) == bool(assignment[abs(lit)]) for lit in wc.lits)
        if not satisfied:
            if formula.is_hard(wc):
                hard_violations += 1
            else:
                soft_unsat += wc.weight
    return hard_violations, soft_unsat


def lift_to_partial(
    formula: Formula,
    extra_hard: Iterable[Sequence[int]],
    new_num_vars: int | None = None,
) -> Formula:
    """Append hard clauses (possibly over fresh auxiliary variables).

    Soft weights are untouched; ``top`` is re-raised if needed so it stays
    above the soft weight sum.  Existing hard clauses follow the new top.
    """
    if new_num_vars is None:
        new_num_vars = formula.num_vars
    if new_num_vars < formula.num_vars:
        raise ValueError("new_num_vars cannot shrink the variable range")
    extra = [normalize_clause(lits) for lits in extra_hard]
    for lits in extra:
        for lit in lits:
            if lit == 0 or abs(lit) > new_num_vars:
                raise ValueError(f"literal {lit} out of range 1..{new_num_vars}")

    new_top = max(formula.top, formula.soft_weight_sum + 1)
    clauses = [
        WeightedClause(wc.lits, new_top) if wc.weight == formula.top else wc
        for wc in formula.clauses
    ]
    clauses += [WeightedClause(lits, new_top) for lits in extra]
    return Formula(new_num_vars, tuple(clauses), new_top)

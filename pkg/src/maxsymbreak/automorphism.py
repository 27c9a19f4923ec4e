"""Symmetry detection: graph automorphisms and literal permutations.

The search walks an individualization-refinement tree over the colored
graph.  Along a single base path it individualizes the first vertex of the
target cell; for every other vertex of that cell (modulo orbit pruning
under the generators found so far) it searches the sibling subtree for one
automorphism mapping the base choice to that vertex.  By the orbit-
stabilizer argument the collected generators generate the full
color-preserving automorphism group.

Generators are exported as phase-consistent permutations of literals; the
action on clause vertices is discarded once the vertex map has been
verified against the graph.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .formula import Formula, WeightedClause, normalize_clause
from .graph import ColoredGraph, EncodeMode, encode


def _lit_key(lit: int) -> tuple[int, bool]:
    return (abs(lit), lit < 0)


def _lit_str(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"~x{-lit}"


class Permutation:
    """Phase-consistent bijection on literals, identity outside its support.

    Stores only moved literals; the complement closure image(-l) = -image(l)
    is enforced at construction time.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: dict[int, int]):
        closed = dict(mapping)
        for src, dst in mapping.items():
            other = closed.setdefault(-src, -dst)
            if other != -dst:
                raise ValueError(f"phase-inconsistent image for {-src}")
        closed = {src: dst for src, dst in closed.items() if src != dst}
        if sorted(closed) != sorted(closed.values()):
            raise ValueError("literal map is not a bijection")
        self._map = closed

    @classmethod
    def identity(cls) -> "Permutation":
        return cls({})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint literal cycles; complement cycles are implied.

        ``from_cycles([(1, 3)])`` is the swap of x1 and x3 together with the
        implied swap of their complements.
        """
        mapping: dict[int, int] = {}
        for cycle in cycles:
            for src, dst in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if src in mapping and mapping[src] != dst:
                    raise ValueError(f"cycles are not disjoint at literal {src}")
                mapping[src] = dst
        return cls(mapping)

    def image(self, lit: int) -> int:
        return self._map.get(lit, lit)

    @property
    def support(self) -> set[int]:
        return {abs(lit) for lit in self._map}

    @property
    def is_identity(self) -> bool:
        return not self._map

    def inverse(self) -> "Permutation":
        return Permutation({dst: src for src, dst in self._map.items()})

    def compose(self, other: "Permutation") -> "Permutation":
        """self followed by other: (self * other)(l) = other(self(l))."""
        keys = set(self._map) | set(other._map)
        return Permutation({lit: other.image(self.image(lit)) for lit in keys})

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycle form; each cycle starts at its least literal."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map, key=_lit_key):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            cur = self._map[start]
            while cur != start:
                cycle.append(cur)
                seen.add(cur)
                cur = self._map[cur]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        if self.is_identity:
            return "()"
        return "".join("(" + " ".join(_lit_str(l) for l in cyc) + ")" for cyc in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation({self!s})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    # --- actions ----------------------------------------------------------

    def apply_to_clause(self, lits: Sequence[int]) -> tuple[int, ...]:
        return normalize_clause(self.image(lit) for lit in lits)

    def apply_to_formula(self, formula: Formula) -> Formula:
        clauses = tuple(
            WeightedClause(self.apply_to_clause(wc.lits), wc.weight) for wc in formula.clauses
        )
        return Formula(formula.num_vars, clauses, formula.top)

    def apply_to_assignment(self, assignment: Sequence[bool]) -> list[bool]:
        """Transport an assignment: the image literal takes the source value."""
        out = list(assignment)
        for var in range(1, len(assignment)):
            dst = self.image(var)
            out[abs(dst)] = bool(assignment[var]) if dst > 0 else not assignment[var]
        return out


def apply_permutation(p: Permutation, formula: Formula) -> Formula:
    return p.apply_to_formula(formula)


def validate_on_formula(p: Permutation, formula: Formula) -> bool:
    """True iff applying p reproduces the same weighted-clause multiset."""
    before = Counter((wc.lits, wc.weight) for wc in formula.clauses)
    after = Counter(
        (p.apply_to_clause(wc.lits), wc.weight) for wc in formula.clauses
    )
    return before == after


# --- equitable partition refinement ----------------------------------------

Cell = tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    """Ordered partition of the graph's vertices into cells."""

    cells: tuple[Cell, ...]

    @property
    def is_discrete(self) -> bool:
        return all(len(cell) == 1 for cell in self.cells)


def initial_coloring(g: ColoredGraph) -> Coloring:
    """One cell per vertex color, ordered by ascending color id."""
    by_color: dict[int, list[int]] = {}
    for v in range(1, g.num_vertices + 1):
        by_color.setdefault(g.colors[v], []).append(v)
    return Coloring(tuple(tuple(sorted(by_color[c])) for c in sorted(by_color)))


def _refine_cells(
    g: ColoredGraph,
    cells: list[Cell],
    seeds: Iterable[Cell],
    expected_trace: tuple | None = None,
):
    """Refine to the coarsest equitable partition, seeded by splitter cells.

    Returns (cells, trace) where the trace records every split event as
    (cell position, ((neighbor count, sub-cell size), ...)).  The trace is
    isomorphism-invariant, so two runs related by an automorphism produce
    identical traces.  If ``expected_trace`` is given, refinement aborts
    with None as soon as the traces diverge.
    """
    cells = list(cells)
    cell_of = {}
    for i, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = i
    queue: deque[Cell] = deque(seeds)
    trace: list[tuple] = []

    while queue:
        splitter = queue.popleft()
        counts: dict[int, int] = {}
        for w in splitter:
            for u in g.adj[w]:
                counts[u] = counts.get(u, 0) + 1
        touched = sorted({cell_of[u] for u in counts})
        rebuilt = False
        new_cells: list[Cell] = []
        for i, cell in enumerate(cells):
            if i not in touched or len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault(counts.get(v, 0), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            subs = [tuple(groups[k]) for k in sorted(groups)]
            event = (i, tuple((k, len(groups[k])) for k in sorted(groups)))
            if expected_trace is not None and (
                len(trace) >= len(expected_trace) or expected_trace[len(trace)] != event
            ):
                return None, None
            trace.append(event)
            new_cells.extend(subs)
            queue.extend(subs)
            rebuilt = True
        if rebuilt:
            cells = new_cells
            cell_of = {}
            for i, cell in enumerate(cells):
                for v in cell:
                    cell_of[v] = i
    if expected_trace is not None and len(trace) != len(expected_trace):
        return None, None
    return cells, tuple(trace)


def refine(g: ColoredGraph, coloring: Coloring) -> Coloring:
    """Coarsest equitable refinement of a coloring (all cells as seeds)."""
    cells, _ = _refine_cells(g, list(coloring.cells), list(coloring.cells))
    return Coloring(tuple(cells))


def _individualize(cells: list[Cell], pos: int, v: int) -> list[Cell]:
    cell = cells[pos]
    rest = tuple(u for u in cell if u != v)
    return cells[:pos] + [(v,)] + ([rest] if rest else []) + cells[pos + 1 :]


def _target_cell(cells: list[Cell]) -> int | None:
    """Position of the first non-singleton cell of smallest size, preferring
    the cell holding the lowest vertex id."""
    best = None
    for i, cell in enumerate(cells):
        if len(cell) == 1:
            continue
        key = (len(cell), min(cell))
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


@dataclass
class SearchStats:
    nodes: int = 0
    refinements: int = 0


@dataclass
class GeneratorSet:
    """Non-identity literal permutations generating the detected group."""

    generators: list[Permutation]
    stats: SearchStats = field(default_factory=SearchStats)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


class _AutomorphismSearch:
    def __init__(self, g: ColoredGraph):
        self.g = g
        self.stats = SearchStats()
        # base path bookkeeping, indexed by depth
        self.base_cells: list[list[Cell]] = []
        self.base_target: list[int] = []
        self.base_trace: list[tuple] = []
        self.base_leaf: list[int] = []
        self.vertex_generators: list[list[int]] = []

    def run(self) -> list[list[int]]:
        root = initial_coloring(self.g)
        cells, trace = self._refine(list(root.cells), list(root.cells))
        self._descend(cells, 0)
        return self.vertex_generators

    def _refine(self, cells, seeds, expected=None):
        self.stats.refinements += 1
        return _refine_cells(self.g, cells, seeds, expected)

    def _descend(self, cells: list[Cell], depth: int) -> None:
        # The base path is recorded permanently: sibling matching at depth d
        # replays the base refinement traces of every deeper level.
        self.stats.nodes += 1
        pos = _target_cell(cells)
        if pos is None:
            self.base_leaf = [cell[0] for cell in cells]
            return
        target = cells[pos]
        b = target[0]
        self.base_cells.append(cells)
        self.base_target.append(pos)

        child = _individualize(cells, pos, b)
        child, trace = self._refine(child, [(b,)])
        self.base_trace.append(trace)
        self._descend(child, depth + 1)

        # sibling subtrees, deepest level first: one coset representative
        # per orbit point of the generators found so far (all of which fix
        # the base prefix above this depth)
        orbit = {b}
        for v in target[1:]:
            if v in orbit:
                continue
            gamma = self._match(cells, pos, v, depth)
            if gamma is not None:
                self.vertex_generators.append(gamma)
                orbit = self._close_orbit(orbit)

    def _close_orbit(self, orbit: set[int]) -> set[int]:
        # every generator found so far fixes the current base prefix
        frontier = list(orbit)
        while frontier:
            v = frontier.pop()
            for gamma in self.vertex_generators:
                w = gamma[v]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return orbit

    def _match(self, cells: list[Cell], pos: int, v: int, depth: int) -> list[int] | None:
        """Search the subtree individualizing ``v`` for one automorphism
        mapping the base path onto it."""
        child = _individualize(cells, pos, v)
        child, trace = self._refine(child, [(v,)], self.base_trace[depth])
        if child is None:
            return None
        return self._match_walk(child, depth + 1)

    def _match_walk(self, cells: list[Cell], depth: int) -> list[int] | None:
        self.stats.nodes += 1
        if depth == len(self.base_cells):
            if not all(len(cell) == 1 for cell in cells):
                return None
            return self._verify([cell[0] for cell in cells])
        pos = self.base_target[depth]
        if pos >= len(cells):
            return None
        for w in cells[pos]:
            child = _individualize(cells, pos, w)
            child, _ = self._refine(child, [(w,)], self.base_trace[depth])
            if child is None:
                continue
            gamma = self._match_walk(child, depth + 1)
            if gamma is not None:
                return gamma
        return None

    def _verify(self, leaf_order: list[int]) -> list[int] | None:
        g = self.g
        if len(leaf_order) != len(self.base_leaf):
            return None
        vmap = [0] * (g.num_vertices + 1)
        for src, dst in zip(self.base_leaf, leaf_order):
            vmap[src] = dst
        for vtx in range(1, g.num_vertices + 1):
            if g.colors[vtx] != g.colors[vmap[vtx]]:
                return None
        for u in range(1, g.num_vertices + 1):
            mu = vmap[u]
            for w in g.adj[u]:
                if vmap[w] not in g.adj[mu]:
                    return None
        return vmap


def to_literal_permutation(g: ColoredGraph, vertex_map: Sequence[int]) -> Permutation | None:
    """Restrict a vertex automorphism to literal vertices.

    Returns None if the restriction is not phase-consistent (possible only
    in the edge-optimized encoding, where binary-clause edges and complement
    edges are indistinguishable).
    """
    mapping: dict[int, int] = {}
    for var in range(1, g.num_vars + 1):
        pos_image = g.vertex_literal(vertex_map[var])
        neg_image = g.vertex_literal(vertex_map[g.num_vars + var])
        if pos_image is None or neg_image != -pos_image:
            return None
        mapping[var] = pos_image
        mapping[-var] = neg_image
    return Permutation(mapping)


def find_automorphisms(g: ColoredGraph) -> GeneratorSet:
    """Generators of the color-preserving automorphism group, exported as
    literal permutations.  The search is deterministic and complete: in the
    clause-vertex encoding the returned set generates the group's full
    action on literals.  Phase-inconsistent restrictions (possible only in
    the edge-optimized encoding) and identity restrictions are dropped."""
    search = _AutomorphismSearch(g)
    vertex_generators = search.run()
    perms: list[Permutation] = []
    seen: set[Permutation] = set()
    for vmap in vertex_generators:
        p = to_literal_permutation(g, vmap)
        if p is None or p.is_identity or p in seen:
            continue
        seen.add(p)
        perms.append(p)
    return GeneratorSet(perms, search.stats)


def detect_symmetries(
    formula: Formula, mode: EncodeMode = EncodeMode.CLAUSE_VERTEX
) -> GeneratorSet:
    """Full pipeline: encode, search, and validate against the formula.

    In clause-vertex mode every detected permutation must map the weighted
    clause multiset to itself by construction; edge-optimized generators
    that fail validation are discarded.
    """
    g = encode(formula, mode)
    gs = find_automorphisms(g)
    validated = []
    for p in gs.generators:
        if validate_on_formula(p, formula):
            validated.append(p)
        elif mode is EncodeMode.CLAUSE_VERTEX:
            raise RuntimeError(f"clause-vertex generator failed formula validation: {p}")
    return GeneratorSet(validated, gs.stats)


def group_order(
    generators: Iterable[Permutation], num_vars: int, limit: int = 1_000_000
) -> int | None:
    """Order of the generated group by breadth-first closure, or None once
    the element count exceeds ``limit``."""
    gen_arrays = []
    for p in generators:
        gen_arrays.append([0] + [p.image(v) for v in range(1, num_vars + 1)])
    identity = tuple(range(1, num_vars + 1))
    seen = {identity}
    frontier = deque([identity])
    while frontier:
        elem = frontier.popleft()
        for arr in gen_arrays:
            img = tuple(
                arr[e] if e > 0 else -arr[-e]
                for e in elem
            )
            if img not in seen:
                if len(seen) >= limit:
                    return None
                seen.add(img)
                frontier.append(img)
    return len(seen)

"""Colored-graph encoding of weighted CNF formulas.

The color-preserving automorphisms of the encoded graph correspond to the
syntactic symmetries of the formula.  Two encodings are provided:

* ``CLAUSE_VERTEX`` (default, any variant): every clause becomes a vertex
  whose color identifies its weight class; soft weight classes are colored
  in ascending weight order and hard clauses get the final color.
* ``EDGE_OPTIMIZED`` (plain MaxSAT only): binary clauses become a single
  edge between their literal vertices and only non-binary clauses (units
  included) get a clause vertex.  This is compact but can conflate a binary
  clause with a complement edge, so permutations recovered from it must be
  re-validated against the formula.

Vertex numbering is fixed: the positive literal of variable j is vertex j,
its complement is vertex V+j, and clause vertices follow in clause order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .formula import Formula, Variant

LITERAL_COLOR = 0


class EncodeMode(Enum):
    EDGE_OPTIMIZED = "edge"
    CLAUSE_VERTEX = "clause"


@dataclass
class ColoredGraph:
    """Undirected graph with integer vertex colors, vertices numbered 1..N.

    ``colors`` and ``adj`` are indexed by vertex id (slot 0 unused).
    Literal vertices always carry ``LITERAL_COLOR``.
    """

    num_vars: int
    num_vertices: int
    colors: list[int]
    adj: list[set[int]]
    num_edges: int = 0
    color_names: dict[int, str] = field(default_factory=dict)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v not in self.adj[u]:
            self.adj[u].add(v)
            self.adj[v].add(u)
            self.num_edges += 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.num_vertices + 1) for v in sorted(self.adj[u]) if u < v]

    # --- provenance -------------------------------------------------------

    def literal_vertex(self, lit: int) -> int:
        """Vertex carrying literal ``lit``."""
        return lit if lit > 0 else self.num_vars - lit

    def vertex_literal(self, v: int) -> int | None:
        """Literal carried by vertex ``v``, or None for clause vertices."""
        if 1 <= v <= self.num_vars:
            return v
        if self.num_vars < v <= 2 * self.num_vars:
            return -(v - self.num_vars)
        return None

    def vertex_clause(self, v: int) -> int | None:
        """0-based index of the clause represented by vertex ``v``, if any."""
        if v > 2 * self.num_vars:
            return v - 2 * self.num_vars - 1
        return None


def encode(formula: Formula, mode: EncodeMode = EncodeMode.CLAUSE_VERTEX) -> ColoredGraph:
    """Build the colored graph whose automorphisms are formula symmetries."""
    if mode is EncodeMode.EDGE_OPTIMIZED and formula.variant is not Variant.MS:
        raise ValueError(f"edge-optimized encoding requires plain MaxSAT, got {formula.variant.value}")

    nv = formula.num_vars
    if mode is EncodeMode.CLAUSE_VERTEX:
        clause_vertices = list(range(len(formula.clauses)))
    else:
        clause_vertices = [i for i, wc in enumerate(formula.clauses) if len(wc.lits) != 2]
    n = 2 * nv + len(clause_vertices)

    g = ColoredGraph(
        num_vars=nv,
        num_vertices=n,
        colors=[0] * (n + 1),
        adj=[set() for _ in range(n + 1)],
    )
    g.color_names[LITERAL_COLOR] = "literal"

    for j in range(1, nv + 1):
        g.add_edge(j, nv + j)

    if mode is EncodeMode.CLAUSE_VERTEX:
        soft_weights = sorted({wc.weight for wc in formula.clauses if not formula.is_hard(wc)})
        color_of_weight = {w: i + 1 for i, w in enumerate(soft_weights)}
        hard_color = len(soft_weights) + 1
        for w, c in color_of_weight.items():
            g.color_names[c] = f"weight-{w}"
        g.color_names[hard_color] = "hard"

        v = 2 * nv
        for wc in formula.clauses:
            v += 1
            g.colors[v] = hard_color if formula.is_hard(wc) else color_of_weight[wc.weight]
            for lit in wc.lits:
                g.add_edge(v, g.literal_vertex(lit))
    else:
        g.color_names[1] = "clause"
        v = 2 * nv
        for wc in formula.clauses:
            if len(wc.lits) == 2:
                g.add_edge(g.literal_vertex(wc.lits[0]), g.literal_vertex(wc.lits[1]))
            else:
                v += 1
                g.colors[v] = 1
                for lit in wc.lits:
                    g.add_edge(v, g.literal_vertex(lit))
    return g


def color_histogram(g: ColoredGraph) -> dict[int, int]:
    """Vertex count per color id."""
    return dict(Counter(g.colors[1 : g.num_vertices + 1]))


def format_graph_dump(g: ColoredGraph) -> str:
    """DIMACS-like text dump: ``p edge N M``, ``n <vertex> <color>``,
    ``e <u> <v>``.  Colors are printed 1-based."""
    lines = [f"p edge {g.num_vertices} {g.num_edges}"]
    for v in range(1, g.num_vertices + 1):
        lines.append(f"n {v} {g.colors[v] + 1}")
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"

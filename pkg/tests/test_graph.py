import pytest

from maxsymbreak import EncodeMode, build_formula, color_histogram, encode
from maxsymbreak.graph import LITERAL_COLOR, format_graph_dump

from conftest import make_random_suite
from helpers import example_ms, example_wpms


def test_example_ms_edge_optimized_golden():
    # 6 literal vertices plus one unit-clause vertex; binary clauses are edges
    g = encode(example_ms(), EncodeMode.EDGE_OPTIMIZED)
    assert g.num_vertices == 7
    assert g.num_edges == 8
    complement = {(1, 4), (2, 5), (3, 6)}
    binary = {(1, 2), (2, 4), (2, 3), (2, 6)}
    unit = {(5, 7)}
    expected = {tuple(sorted(e)) for e in complement | binary | unit}
    assert set(g.edges()) == expected
    assert color_histogram(g) == {LITERAL_COLOR: 6, 1: 1}


def test_example_wpms_clause_vertex_golden():
    g = encode(example_wpms())
    assert g.num_vertices == 11
    assert g.num_edges == 12
    # colors: 6 literals, two weight-1 clauses, one weight-5, two hard
    assert color_histogram(g) == {0: 6, 1: 2, 2: 1, 3: 2}
    assert g.color_names == {0: "literal", 1: "weight-1", 2: "weight-5", 3: "hard"}
    # incidences follow clause order: vertices 7..11
    assert sorted(g.adj[7]) == [1, 2]
    assert sorted(g.adj[9]) == [5]
    assert sorted(g.adj[10]) == [2, 6]
    assert sorted(g.adj[11]) == [2, 3]


def test_single_variable_no_clauses():
    g = encode(build_formula(1))
    assert g.num_vertices == 2
    assert g.num_edges == 1
    assert g.has_edge(1, 2)


def test_empty_formula():
    g = encode(build_formula(0))
    assert g.num_vertices == 0
    assert color_histogram(g) == {}


def test_mode_variant_mismatch():
    weighted = build_formula(1, soft=[([1], 2)])
    with pytest.raises(ValueError):
        encode(weighted, EncodeMode.EDGE_OPTIMIZED)


def test_vertex_and_edge_counts_random():
    for f in make_random_suite(40, seed=23):
        g = encode(f)
        assert g.num_vertices == 2 * f.num_vars + len(f.clauses)
        assert g.num_edges == f.num_vars + sum(len(wc.lits) for wc in f.clauses)


def test_edge_optimized_counts_random():
    for f in make_random_suite(40, seed=29):
        if f.variant.value != "MS":
            continue
        g = encode(f, EncodeMode.EDGE_OPTIMIZED)
        non_binary = sum(1 for wc in f.clauses if len(wc.lits) != 2)
        assert g.num_vertices == 2 * f.num_vars + non_binary


def test_same_color_iff_same_weight_class():
    for f in make_random_suite(40, seed=31):
        g = encode(f)
        for i, wi in enumerate(f.clauses):
            for j, wj in enumerate(f.clauses):
                same_class = (f.is_hard(wi) and f.is_hard(wj)) or (
                    not f.is_hard(wi) and not f.is_hard(wj) and wi.weight == wj.weight
                )
                u, v = 2 * f.num_vars + 1 + i, 2 * f.num_vars + 1 + j
                assert (g.colors[u] == g.colors[v]) == same_class


def test_soft_colors_ascend_with_weight():
    f = build_formula(2, soft=[([1], 7), ([2], 2), ([1, 2], 4)])
    g = encode(f)
    base = 2 * f.num_vars
    # clause order: weights 7, 2, 4 -> colors must order as 3, 1, 2
    assert [g.colors[base + 1], g.colors[base + 2], g.colors[base + 3]] == [3, 1, 2]


def test_encoding_deterministic():
    f = example_wpms()
    g1, g2 = encode(f), encode(f)
    assert g1.colors == g2.colors
    assert g1.edges() == g2.edges()


def test_graph_dump_format():
    g = encode(build_formula(1, soft=[([1], 1)]))
    dump = format_graph_dump(g)
    lines = dump.strip().split("\n")
    assert lines[0] == "p edge 3 2"
    assert "n 1 1" in lines and "n 3 2" in lines
    assert "e 1 2" in lines and "e 1 3" in lines

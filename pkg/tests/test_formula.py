import random

import pytest

from maxsymbreak import (
    DimacsParseError,
    Variant,
    WeightedClause,
    build_formula,
    evaluate,
    lift_to_partial,
    parse_dimacs,
    serialize,
)

from conftest import make_random_suite
from helpers import EXAMPLE_WPMS_WCNF, eval_ref, example_ms


def test_parse_plain_cnf():
    f = parse_dimacs("p cnf 2 1\n1 -2 0\n")
    assert f.num_vars == 2
    assert f.top == 2
    assert f.variant is Variant.MS
    assert [(wc.lits, wc.weight) for wc in f.clauses] == [((1, -2), 1)]


def test_parse_duplicate_literals_removed():
    f = parse_dimacs("p cnf 1 1\n1 1 0\n")
    assert f.clauses[0].lits == (1,)


def test_parse_tautology_kept_and_flagged():
    f = parse_dimacs("p cnf 1 1\n1 -1 0\n")
    assert f.clauses[0].lits == (1, -1)
    assert f.clauses[0].tautological


def test_parse_wcnf_top_semantics():
    # with TOP=25 every clause is soft; with TOP=9 the weight-9 pair is hard
    text25 = "p wcnf 3 5 25\n1 1 2 0\n1 -1 2 0\n5 -2 0\n9 -3 2 0\n9 3 2 0\n"
    f25 = parse_dimacs(text25)
    assert not f25.hard_clauses
    assert sorted(wc.weight for wc in f25.soft_clauses) == [1, 1, 5, 9, 9]

    f9 = parse_dimacs(EXAMPLE_WPMS_WCNF)
    assert f9.variant is Variant.WPMS
    assert sorted(wc.weight for wc in f9.soft_clauses) == [1, 1, 5]
    assert [wc.lits for wc in f9.hard_clauses] == [(2, -3), (2, 3)]


def test_parse_comments_and_blank_lines():
    f = parse_dimacs("c hello\n\np cnf 1 1\nc mid\n1 0\n")
    assert f.num_vars == 1 and len(f.clauses) == 1


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("p cnf x 1\n1 0\n", 1),
        ("p cnf 1 1\n1 2 0\n", 2),  # literal out of range
        ("p cnf 1 1\n1\n", 2),  # missing terminator
        ("p wcnf 1 1 5\n0 1 0\n", 2),  # weight <= 0
        ("p wcnf 1 1 5\n6 1 0\n", 2),  # weight > top
        ("p cnf 1 2\n1 0\n", 1),  # clause count mismatch
        ("p cnf 1 1\n1 0 1 0\n", 2),  # stray terminator
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(DimacsParseError) as err:
        parse_dimacs(text)
    assert err.value.line == lineno


def test_parse_errors_on_empty_input():
    with pytest.raises(DimacsParseError):
        parse_dimacs("")


def test_serialize_empty_formula():
    f = build_formula(0)
    assert serialize(f) == "p wcnf 0 0 1\n"


def test_roundtrip_example_ms():
    f = example_ms()
    again = parse_dimacs(serialize(f))
    assert again == f
    assert len(again.clauses) == 5


def test_roundtrip_random_formulas():
    for f in make_random_suite(60, seed=99):
        assert parse_dimacs(serialize(f)) == f


def test_evaluate_example_ms():
    f = example_ms()
    a = [False, False, True, False]  # x1=0, x2=1, x3=0
    assert evaluate(f, a) == (0, 1)
    assert eval_ref(f, a) == (0, 1)


def test_evaluate_example_wpms():
    f = parse_dimacs(EXAMPLE_WPMS_WCNF)
    a = [False, False, True, False]
    assert evaluate(f, a) == (0, 5)
    assert eval_ref(f, a) == (0, 5)


def test_evaluate_empty_formula():
    f = build_formula(0)
    assert evaluate(f, [False]) == (0, 0)


def test_evaluate_matches_reference_on_random_instances():
    rng = random.Random(5)
    for f in make_random_suite(40, seed=7):
        for _ in range(5):
            a = [False] + [rng.random() < 0.5 for _ in range(f.num_vars)]
            assert evaluate(f, a) == eval_ref(f, a)


def test_evaluate_monotone_under_soft_clause_removal():
    rng = random.Random(11)
    for f in make_random_suite(25, seed=13):
        soft_positions = [i for i, wc in enumerate(f.clauses) if not f.is_hard(wc)]
        if not soft_positions:
            continue
        drop = rng.choice(soft_positions)
        smaller = build_formula(
            f.num_vars,
            soft=[
                (wc.lits, wc.weight)
                for i, wc in enumerate(f.clauses)
                if i != drop and not f.is_hard(wc)
            ],
            hard=[wc.lits for wc in f.clauses if f.is_hard(wc)],
        )
        a = [False] + [rng.random() < 0.5 for _ in range(f.num_vars)]
        assert evaluate(smaller, a)[1] <= evaluate(f, a)[1]


def test_soft_cost_below_top():
    for f in make_random_suite(25, seed=17):
        a = [False] * (f.num_vars + 1)
        _, soft = evaluate(f, a)
        assert soft <= f.soft_weight_sum < f.top


def test_lift_to_partial_variant_mapping(ex_ms, ex_wpms):
    sbp = [(-3,), (-1, 3)]
    lifted = lift_to_partial(ex_ms, sbp)
    assert lifted.variant is Variant.PMS
    assert len(lifted.hard_clauses) == 2
    assert [wc.weight for wc in lifted.soft_clauses] == [1] * 5

    wms = build_formula(2, soft=[([1], 2), ([2], 3)])
    assert lift_to_partial(wms, [(-1,)]).variant is Variant.WPMS

    assert lift_to_partial(ex_wpms, [(-1,)]).variant is Variant.WPMS


def test_lift_to_partial_noop():
    f = example_ms()
    assert lift_to_partial(f, []) == f


def test_lift_to_partial_aux_variables():
    f = example_ms()
    lifted = lift_to_partial(f, [(-1, 4)], new_num_vars=4)
    assert lifted.num_vars == 4
    with pytest.raises(ValueError):
        lift_to_partial(f, [(-1, 9)], new_num_vars=4)


def test_lift_raises_top_when_needed():
    # parsed file may have top == soft sum; lifting must re-raise it
    f = parse_dimacs("p wcnf 1 2 2\n1 1 0\n1 -1 0\n")
    lifted = lift_to_partial(f, [(1,)])
    assert lifted.top > lifted.soft_weight_sum


def test_variant_classification():
    assert build_formula(1, soft=[([1], 1)]).variant is Variant.MS
    assert build_formula(1, soft=[([1], 1)], hard=[[-1]]).variant is Variant.PMS
    assert build_formula(1, soft=[([1], 2)]).variant is Variant.WMS
    assert build_formula(1, soft=[([1], 2)], hard=[[-1]]).variant is Variant.WPMS


def test_weighted_clause_normalization():
    wc = WeightedClause((2, -1, 2), 1)
    assert wc.lits == (-1, 2)
    with pytest.raises(ValueError):
        WeightedClause((1,), 0)

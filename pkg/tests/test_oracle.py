"""Exhaustive recounts arbitrating the closed forms and the fast lift."""

import pytest

from chaincodes.chain import preset
from chaincodes.enumeration import count_so_type, sigma, total_counts
from chaincodes.fieldcodes import make_field_code, zero_code
from chaincodes.lifting import SOChain, base_lift, lift_once, stage_count_formula
from chaincodes.oracle import (
    BudgetError,
    OracleBudget,
    brute_force_code_count,
    brute_force_doubly_even_count,
    brute_force_lift_count,
    enumerate_codes_of_type,
    reproduce_table,
)
from chaincodes.tables import GOLDEN_TABLES

from _util import all_types


def test_first_table_rows_recounted_exhaustively():
    r41 = preset("R4,1")
    for lambdas, expected in GOLDEN_TABLES[1].rows:
        assert brute_force_code_count(r41, 3, lambdas, "so") == expected, lambdas


def test_single_type_spot_checks():
    r41 = preset("R4,1")
    assert brute_force_code_count(r41, 1, (0, 0, 0, 1), "so") == 1
    assert brute_force_code_count(r41, 3, (0, 0, 1, 0), "so") == 28


def test_unit_multiples_deduplicate():
    r41 = preset("R4,1")
    codes = list(enumerate_codes_of_type(r41, 1, (1, 0, 0, 0)))
    assert len(codes) == 1


def _brute_total(spec, n, predicate):
    total = 0
    for lam in all_types(spec.e, n):
        total += brute_force_code_count(spec, n, lam, predicate)
    return total


def test_exhaustive_totals_match_closed_forms():
    r41 = preset("R4,1")
    assert _brute_total(r41, 3, "so") == 291
    assert _brute_total(r41, 2, "sd") == 3
    assert _brute_total(r41, 3, "sd") == total_counts(r41, 3)[1] == 7


def test_doubly_even_recount_pins():
    assert brute_force_doubly_even_count(4, 1, 1, True) == 1
    assert brute_force_doubly_even_count(2, 1, 1, False) == 0
    assert brute_force_doubly_even_count(3, 0, 1, False) == 1


def test_doubly_even_recount_grid_matches_subspace_walk():
    for m in (1, 2):
        for n in range(1, 5):
            for d in range(0, 3):
                for with_one in (False, True):
                    got = brute_force_doubly_even_count(n, d, m, with_one)
                    assert got == sigma(n, d, m, with_one), (n, d, m, with_one)


def test_reproduce_first_table():
    reports = reproduce_table(1)
    assert len(reports) == 17
    assert all(r.match is True for r in reports)
    assert [r.closed_form for r in reports] == [
        v for _, v in GOLDEN_TABLES[1].rows
    ]
    assert all(r.brute_force == r.closed_form for r in reports)


def test_reproduce_table_can_skip_large_rows():
    reports = reproduce_table(1, max_oracle_count=10)
    skipped = [r for r in reports if r.brute_force is None]
    assert skipped
    for r in reports:
        if r.closed_form <= 10:
            assert r.match is True
        else:
            assert r.brute_force is None and r.match is None


def test_budget_guards():
    r82 = preset("R8,2")
    with pytest.raises(BudgetError, match="ceiling"):
        brute_force_code_count(r82, 2, (1, 0, 0, 0, 0, 0, 0, 0), "so")
    r41 = preset("R4,1")
    with pytest.raises(BudgetError, match="ceiling"):
        brute_force_code_count(r41, 6, (1, 0, 0, 0), "so")
    tiny = OracleBudget(max_candidates=2, max_length=5, max_ring_bits=13)
    with pytest.raises(BudgetError):
        brute_force_code_count(r41, 2, (0, 1, 0, 0), "so", budget=tiny)
    # a roomier explicit budget admits what the default refuses
    wide = OracleBudget(max_candidates=10**6, max_length=10, max_ring_bits=13)
    assert brute_force_code_count(r41, 6, (0, 0, 0, 1), "so", budget=wide) == 63


def test_lift_recount_flat_zone():
    r41 = preset("R4,1")
    ones4 = make_field_code(r41.gr, 4, [(1, 1, 1, 1)])
    chain = SOChain(r41, 4, (ones4, ones4))
    base = list(base_lift(chain, 1))
    assert len(base) == 12
    for code in base[:2]:
        fast = len(list(lift_once(code, chain, 0)))
        assert fast == 32
        assert brute_force_lift_count(code, chain.codes, 0) == 32


def test_lift_recount_small_type():
    r41 = preset("R4,1")
    pair = make_field_code(r41.gr, 3, [(1, 1, 0)])
    chain = SOChain(r41, 3, (zero_code(r41.gr, 3), pair))
    base = list(base_lift(chain, 1))
    assert len(base) == 2
    for code in base:
        assert len(list(lift_once(code, chain, 1))) == 1
        assert brute_force_lift_count(code, chain.codes, 1) == 1


def test_lift_recount_odd_depth():
    r51 = preset("R5,1")
    lam = (0, 0, 1, 1, 0)
    total = 0
    for w in ((1, 1, 0), (1, 0, 1), (0, 1, 1)):
        outer = make_field_code(r51.gr, 3, [w])
        z3 = zero_code(r51.gr, 3)
        chain = SOChain(r51, 3, (z3, z3, outer))
        base_formula = stage_count_formula(r51, 3, lam, chain.contains_one, 3)
        top_formula = stage_count_formula(r51, 3, lam, chain.contains_one, 5)
        base = list(base_lift(chain, 1))
        assert len(base) == base_formula == 6
        for code in base:
            fast = len(list(lift_once(code, chain, 0)))
            assert fast == top_formula == 4
            assert brute_force_lift_count(code, chain.codes, 0) == fast
            total += fast
    assert total == count_so_type(r51, 3, lam) == 72

from fractions import Fraction

import pytest

from cone_analysis import (REASON_M_NOT_INTEGRAL, REASON_N1_EMPTY, REASON_NONSQUARE_DISCRIMINANT,
                           REASON_OUTSIDE_WINDOW, ConeCandidate, alpha_pairs, cone_bounds, cone_case_search,
                           cone_quadratic, cone_vertex_count, run_cone_search)
from exact_arith import SqClass


def test_bounds_for_t3():
    b = cone_bounds(3)
    assert (b.lower_strict, b.lower_root, b.upper_square) == (20, 22, 29)
    assert b.upper_ratio == Fraction(29)
    assert (b.lowest, b.highest) == (22, 29)
    assert b.admits(22) and not b.admits(21)


def test_bounds_for_t5():
    b = cone_bounds(5)
    assert (b.lowest, b.highest) == (46, 46)
    assert b.feasible


@pytest.mark.parametrize("t", [6, 7, 12])
def test_window_closes_from_t6(t):
    assert not cone_bounds(t).feasible


def test_bounds_reject_small_t():
    with pytest.raises(ValueError):
        cone_bounds(2)


def test_alpha_pairs_t3():
    assert alpha_pairs(3) == [(SqClass(1, 4), SqClass(1, 1)), (SqClass(2, 2), SqClass(2, 1))]


def test_vertex_count_and_quadratic():
    assert cone_vertex_count(3, SqClass(2, 2), SqClass(2, 1)) == 22
    assert cone_quadratic(3, 22, 7) == 0
    assert cone_quadratic(3, 22, 9) == 0


def test_ledger_for_t3():
    records = [case.to_record() for case in run_cone_search(3).ledger]
    assert records[0]["n"] == 29
    assert records[0]["discriminant"] == 193
    assert records[0]["reason"] == REASON_NONSQUARE_DISCRIMINANT
    by_root = {rec["s"]: rec for rec in records[1:]}
    assert by_root[7]["reason"] == REASON_N1_EMPTY
    assert by_root[9]["reason"] == REASON_M_NOT_INTEGRAL
    assert by_root[9]["m"] == "15/2"


def test_outside_window_case_for_t5():
    ledger = run_cone_search(5).ledger
    case = next(c for c in ledger if (c.alpha_x, c.alpha_y) == (SqClass(2, 4), SqClass(2, 1)) and c.s == 35)
    assert case.n == 56
    assert case.discriminant == 576
    assert (case.m, case.n1, case.n2) == (15, 40, 15)
    assert case.reason == REASON_OUTSIDE_WINDOW


@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_no_cone_survives(t):
    assert cone_case_search(t) == []


@pytest.mark.parametrize("t", [2, 7])
def test_search_range(t):
    with pytest.raises(ValueError):
        run_cone_search(t)


def test_cone_candidate_validation():
    candidate = ConeCandidate(3, SqClass(2, 2), SqClass(2, 1), 22, 9, 6, 15)
    assert candidate.perron_ok()
    assert candidate.m == Fraction(15, 2)
    with pytest.raises(ValueError):
        ConeCandidate(3, SqClass(2, 2), SqClass(2, 1), 22, 8, 6, 15)
    with pytest.raises(ValueError):
        ConeCandidate(3, SqClass(1, 4), SqClass(2, 1), 22, 9, 6, 15)

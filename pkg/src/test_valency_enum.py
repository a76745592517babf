import itertools

import pytest

from exact_arith import ClassMismatchError, is_squarefree
from gold_tables import TABLE1
from spectral_enum import SearchConfig, SpectralParams, enumerate_spectral
from valency_enum import (ValencyArray, check_valency_conditions, enumerate_valency_arrays, k1_min, k_max,
                          tail_value)

ROW_T4 = SpectralParams(t=4, n=31, s=15, m=9)
ROW_T5 = SpectralParams(t=5, n=36, s=19, m=9)


@pytest.mark.parametrize("t,expected", [(3, 4), (5, 6), (7, 9), (10, 12), (11, 14), (29, 32)])
def test_k1_min(t, expected):
    assert k1_min(t) == expected


def test_k_max():
    assert k_max(4) == 29


def test_report_for_four_valencies():
    array = ValencyArray.from_valencies(ROW_T4, [5, 8, 13, 20])
    assert array.omega == 1
    assert array.betas == (1, 2, 3, 4)
    report = check_valency_conditions(array)
    assert report.all_pass()
    assert report.closed_walks == (0, 36, 96, 180)
    assert report.tail_value == 224
    assert report.tail_needed == 15


def test_tail_value_readings():
    assert tail_value(ROW_T4, (5, 8, 13, 20), "printed") == 209
    assert tail_value(ROW_T4, (5, 8, 13, 20), "lemma") == 224


def test_report_for_nonsquare_class():
    array = ValencyArray.from_valencies(ROW_T5, [7, 13, 23])
    assert array.omega == 2
    assert array.alphas[2].beta == 3
    assert check_valency_conditions(array).all_pass()


def test_mixed_classes_are_rejected():
    with pytest.raises(ClassMismatchError):
        ValencyArray.from_valencies(ROW_T4, [5, 6, 8])


def test_betas_must_increase():
    with pytest.raises(ValueError):
        ValencyArray(params=ROW_T4, omega=1, betas=(2, 1, 3))


def test_bracket_toggle():
    # k_1 < s < k_r fails when s sits above the top valency
    array = ValencyArray.from_valencies(ROW_T4, [5, 8, 13])
    report = check_valency_conditions(array)
    assert not report.bracket
    assert not report.all_pass(SearchConfig(bracket_condition=True))


def test_survivor_arrays_are_enumerated():
    assert any(a.valencies == (5, 8, 13, 20) for a in enumerate_valency_arrays(ROW_T4))
    assert any(a.valencies == (7, 13, 23) for a in enumerate_valency_arrays(ROW_T5))


def _k_count(t: int) -> int:
    return sum(1 for p in enumerate_spectral(t) if enumerate_valency_arrays(p))


@pytest.mark.parametrize("t", range(3, 9))
def test_k_counts_match_published(t):
    assert _k_count(t) == TABLE1[t][1]


@pytest.mark.slow
@pytest.mark.parametrize("t", range(9, 30))
def test_k_counts_match_published_large_t(t):
    assert _k_count(t) == TABLE1[t][1]


def test_cone_valencies_are_excluded():
    # k_r = n - 1 is a dominating vertex, left to the cone case analysis
    p = SpectralParams(t=3, n=20, s=9, m=7)
    array = ValencyArray(params=p, omega=1, betas=(1, 2, 4))
    assert array.valencies == (4, 7, 19)
    report = check_valency_conditions(array)
    assert not report.non_cone
    assert not report.all_pass()
    assert all(a.valencies[-1] <= p.n - 2 for a in enumerate_valency_arrays(p))


def _brute_force_arrays(p: SpectralParams, config: SearchConfig) -> list[ValencyArray]:
    found = []
    for omega in range(1, k_max(p.t) - p.t + 1):
        if not is_squarefree(omega):
            continue
        betas = [b for b in range(1, p.t + 2) if p.t + omega * b * b <= k_max(p.t)]
        for r in range(3, len(betas) + 1):
            for combo in itertools.combinations(betas, r):
                array = ValencyArray(params=p, omega=omega, betas=combo)
                if check_valency_conditions(array, config).all_pass(config):
                    found.append(array)
    return sorted(found, key=lambda a: (a.omega, a.betas))


@pytest.mark.parametrize("t", [3, 4])
@pytest.mark.parametrize("config", [SearchConfig(), SearchConfig(valency_tail_bound="printed"),
                                    SearchConfig(bracket_condition=False, pair_condition_allows_equal=False)])
def test_search_matches_exhaustive_subsets(t, config):
    for p in enumerate_spectral(t, config):
        assert enumerate_valency_arrays(p, config) == _brute_force_arrays(p, config)

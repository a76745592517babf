import pytest
from hypothesis import given, settings, strategies as st

from conftest import make_candidate
from gold_tables import TABLE2
from graph_verify import build_clebsch, build_kneser_pairs, candidate_from_graph
from multiplicity_enum import STATUS_FLAGGED, STATUS_OPEN, STATUS_REFUTED, Candidate, MultiplicityArray
from refinement import (CHECK_BR, CHECK_CONVEXITY, CHECK_QUOTIENT, CHECK_SATURATION, VERDICT_NOT_APPLICABLE,
                        VERDICT_OPEN, VERDICT_REFUTED, LocalProfile, balanced_pair_coverage, closed_walks3,
                        brute_force_profiles, br_equality_flag, double_count_check, enumerate_profiles, nu_pair,
                        quotient_matrix_search, refute_all, refute_candidate, replay_finding)
from spectral_enum import SearchConfig, SpectralParams
from valency_enum import ValencyArray, k_max


def test_common_neighbour_counts(survivor_rows):
    v = survivor_rows[(4, 31)].valencies
    assert nu_pair(v, 0, 0, adjacent=True) == -2
    assert nu_pair(v, 1, 1, adjacent=False) == 4


def test_closed_walks(survivor_rows):
    assert closed_walks3(survivor_rows[(4, 31)].valencies, 0) == 0
    assert closed_walks3(survivor_rows[(5, 45)].valencies, 0) == 4
    assert closed_walks3(survivor_rows[(5, 36)].valencies, 0) == 10


def test_profiles_of_smallest_class(survivor_rows):
    assert enumerate_profiles(survivor_rows[(4, 31)], 0) == [LocalProfile(0, (0, 0, 5, 0))]
    assert enumerate_profiles(survivor_rows[(5, 45)], 0) == [LocalProfile(0, (0, 0, 2, 4))]


def test_balanced_pair_coverage():
    assert balanced_pair_coverage(12, 3) == 18
    assert balanced_pair_coverage(24, 33) == 0
    assert balanced_pair_coverage(7, 2) == 9


def test_saturation_witness(survivor_rows):
    c = survivor_rows[(4, 31)]
    finding = double_count_check(c, 0, enumerate_profiles(c, 0))
    assert finding.check == CHECK_SATURATION
    assert finding.verdict == VERDICT_REFUTED
    assert dict(finding.witness) == {"shared": 5, "limit": 1}


def test_convexity_witness(survivor_rows):
    c = survivor_rows[(5, 45)]
    finding = double_count_check(c, 0, enumerate_profiles(c, 0))
    assert finding.check == CHECK_CONVEXITY
    assert finding.detail == "convexity double-count: 18 > 15"


def test_quotient_walk_mismatch(survivor_rows):
    matrices, finding = quotient_matrix_search(survivor_rows[(5, 36)])
    assert matrices == []
    assert finding.check == CHECK_QUOTIENT
    assert finding.detail == "quotient-matrix infeasible (141 != 145)"
    assert finding.class_index == 0


def test_quotient_needs_at_most_three_classes(survivor_rows):
    _, finding = quotient_matrix_search(survivor_rows[(7, 45)])
    assert finding.verdict == VERDICT_NOT_APPLICABLE


def test_bell_rowlinson_equality():
    assert br_equality_flag(SpectralParams(t=7, n=45, s=20, m=8)).detail == "BR-equality: 45 = 9*10/2"
    assert br_equality_flag(SpectralParams(t=4, n=31, s=15, m=9)).verdict == VERDICT_OPEN


@pytest.mark.parametrize("key,reason", [
    ((4, 31), "double-count saturation: two class-1 vertices share 5 > 1 common neighbours"),
    ((5, 36), "quotient-matrix infeasible (141 != 145)"),
    ((5, 45), "convexity double-count: 18 > 15"),
    ((7, 45), "BR-equality: 45 = 9*10/2 (uniqueness of the equality case)"),
])
def test_every_survivor_is_refuted(survivor_rows, key, reason):
    settled = refute_candidate(survivor_rows[key])
    assert settled.status == STATUS_REFUTED
    assert settled.reason == reason


def test_quotient_row_has_open_classes(survivor_rows):
    settled = refute_candidate(survivor_rows[(5, 36)])
    per_class = [f for f in settled.findings if f.class_index is not None and f.check != CHECK_QUOTIENT]
    assert all(f.verdict == VERDICT_OPEN for f in per_class)


def test_br_row_is_flagged_without_uniqueness(survivor_rows):
    settled = refute_candidate(survivor_rows[(7, 45)], SearchConfig(apply_br_uniqueness=False))
    assert settled.status == STATUS_FLAGGED
    assert settled.findings[-1].check == CHECK_BR


def test_report_counts(survivor_rows):
    report = refute_all(survivor_rows.values(), SearchConfig(apply_br_uniqueness=False))
    assert (report.refuted_count, report.flagged_count, report.open_count) == (3, 1, 0)


def test_refuting_findings_replay(survivor_rows):
    for c in survivor_rows.values():
        settled = refute_candidate(c)
        for finding in settled.findings:
            if finding.verdict == VERDICT_REFUTED:
                assert replay_finding(c, finding)


@pytest.mark.parametrize("graph", [build_kneser_pairs(6), build_kneser_pairs(7), build_clebsch()])
def test_real_graphs_stay_open(graph):
    settled = refute_candidate(candidate_from_graph(graph))
    assert settled.status == STATUS_OPEN
    _, finding = quotient_matrix_search(settled)
    assert finding.verdict == VERDICT_OPEN


def test_hand_built_regular_candidate():
    c = make_candidate(3, 15, 6, 5, (6,), (15,))
    assert enumerate_profiles(c, 0) == [LocalProfile(0, (6,))]
    assert refute_candidate(c).status == STATUS_OPEN


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(4, 31), (5, 36), (5, 45), (7, 45)]), st.integers(min_value=0, max_value=3))
def test_profiles_match_exhaustive_search(key, i):
    row = next(r for r in TABLE2 if (r[0], r[1]) == key)
    c = make_candidate(*row)
    i = min(i, c.valencies.r - 1)
    assert set(enumerate_profiles(c, i)) == set(brute_force_profiles(c, i))


def _betas_within_range(t: int, omega: int) -> list[int]:
    return [b for b in range(1, t + 2) if t + omega * b * b <= k_max(t)]


@st.composite
def synthetic_candidates(draw):
    """Any valency array with r = 3 or 4 and any composition of n <= 60 into its classes."""
    t = draw(st.integers(min_value=3, max_value=5))
    omega = draw(st.sampled_from([w for w in (1, 2, 3, 5, 6) if len(_betas_within_range(t, w)) >= 3]))
    available = _betas_within_range(t, omega)
    r = draw(st.integers(min_value=3, max_value=min(4, len(available))))
    betas = tuple(sorted(draw(st.lists(st.sampled_from(available), min_size=r, max_size=r, unique=True))))
    k_top = t + omega * betas[-1] ** 2
    n = draw(st.integers(min_value=max(k_top + 2, r + 1), max_value=60))
    m_low = -(-n // (t + 1))
    m = draw(st.integers(min_value=m_low, max_value=m_low + 5))
    params = SpectralParams.from_linkage(t=t, n=n, m=m)
    cuts = sorted(draw(st.lists(st.integers(min_value=1, max_value=n - 1), min_size=r - 1, max_size=r - 1,
                                unique=True)))
    edges = [0, *cuts, n]
    counts = tuple(b - a for a, b in zip(edges, edges[1:]))
    array = ValencyArray(params=params, omega=omega, betas=betas)
    return Candidate.from_array(MultiplicityArray(valencies=array, counts=counts))


@settings(max_examples=100, deadline=None)
@given(synthetic_candidates(), st.integers(min_value=0, max_value=3))
def test_profiles_match_exhaustive_search_on_random_candidates(c, i):
    i = min(i, c.valencies.r - 1)
    assert set(enumerate_profiles(c, i)) == set(brute_force_profiles(c, i))

import math
from dataclasses import dataclass, field

from multiplicity_enum import STATUS_FLAGGED, STATUS_OPEN, STATUS_REFUTED, Candidate
from spectral_enum import SearchConfig, SpectralParams
from valency_enum import ValencyArray

CHECK_PROFILES = "profiles"
CHECK_SATURATION = "saturation"
CHECK_CONVEXITY = "convexity"
CHECK_DOUBLE_COUNT = "double-count"
CHECK_QUOTIENT = "quotient"
CHECK_BR = "br-equality"

VERDICT_REFUTED = "refuted"
VERDICT_OPEN = "open"
VERDICT_FLAGGED = "flagged"
VERDICT_NOT_APPLICABLE = "not-applicable"

QUOTIENT_MAX_CLASSES = 3   # the valency partition is equitable with at most three valencies


@dataclass(frozen=True)
class LocalProfile:
    class_index: int                  # 0-based class of the centre vertex
    neighbor_counts: tuple[int, ...]  # m_1..m_r


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int, ...], ...]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)


@dataclass(frozen=True)
class Finding:
    """Outcome of one check, carrying the exact integers that decide it."""
    check: str
    verdict: str
    detail: str
    class_index: int | None = None
    witness: tuple[tuple[str, int], ...] = ()

    def to_record(self) -> dict:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "detail": self.detail,
            "class": None if self.class_index is None else self.class_index + 1,
            "witness": dict(self.witness),
        }


@dataclass(frozen=True)
class RefutationReport:
    candidates: tuple[Candidate, ...] = field(default=())

    def count(self, status: str) -> int:
        return sum(1 for c in self.candidates if c.status == status)

    @property
    def open_count(self) -> int:
        return self.count(STATUS_OPEN)

    @property
    def flagged_count(self) -> int:
        return self.count(STATUS_FLAGGED)

    @property
    def refuted_count(self) -> int:
        return self.count(STATUS_REFUTED)


#  ==========================================
#    LOCAL COUNTS
#  ==========================================

def nu_pair(v: ValencyArray, i: int, j: int, adjacent: bool) -> int:
    """Common neighbours of a class-i and a class-j vertex; negative means the pair cannot occur."""
    return (1 - v.params.t) * int(adjacent) + v.omega * v.betas[i] * v.betas[j]


def closed_walks3(v: ValencyArray, i: int) -> int:
    return v.closed_walks(i)


def _neighbor_caps(c: Candidate, i: int) -> list[int]:
    counts = c.counts.counts
    return [counts[j] - 1 if j == i else counts[j] for j in range(len(counts))]


def enumerate_profiles(c: Candidate, i: int) -> list[LocalProfile]:
    """Every neighbourhood breakdown of a class-i vertex consistent with its degree and triangles."""
    v = c.valencies
    r = v.r
    degree = v.valencies[i]
    walks = closed_walks3(v, i)
    weights = [nu_pair(v, i, j, adjacent=True) for j in range(r)]
    caps = _neighbor_caps(c, i)
    allowed = [j for j in range(r) if weights[j] >= 0]
    profiles = []
    counts = [0] * r

    def place(pos: int, degree_left: int, walks_left: int):
        if pos == len(allowed):
            if degree_left == 0 and walks_left == 0:
                profiles.append(LocalProfile(class_index=i, neighbor_counts=tuple(counts)))
            return
        j = allowed[pos]
        for amount in range(min(caps[j], degree_left) + 1):
            spent = amount * weights[j]
            if spent > walks_left:
                break
            counts[j] = amount
            place(pos + 1, degree_left - amount, walks_left - spent)
        counts[j] = 0

    place(0, degree, walks)
    return profiles


def brute_force_profiles(c: Candidate, i: int) -> list[LocalProfile]:
    """Reference enumeration over every weak composition of k_i into r parts."""
    v = c.valencies
    r = v.r
    degree = v.valencies[i]
    walks = closed_walks3(v, i)
    caps = _neighbor_caps(c, i)
    found = []

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for m in compositions(degree, r):
        if any(m[j] > caps[j] for j in range(r)):
            continue
        if any(m[j] and nu_pair(v, i, j, adjacent=True) < 0 for j in range(r)):
            continue
        if sum(m[j] * nu_pair(v, i, j, adjacent=True) for j in range(r)) != walks:
            continue
        found.append(LocalProfile(class_index=i, neighbor_counts=m))
    return found


def _pair_limit(v: ValencyArray, i: int) -> int:
    """Largest common-neighbour count two class-i vertices may have."""
    options = [nu_pair(v, i, i, adjacent=False)]
    adjacent = nu_pair(v, i, i, adjacent=True)
    if adjacent >= 0:
        options.append(adjacent)
    return max(options)


def balanced_pair_coverage(edges: int, bins: int) -> int:
    """Minimum of sum C(d_y, 2) over bins with sum d_y = edges."""
    base, extra = divmod(edges, bins)
    return (bins - extra) * math.comb(base, 2) + extra * math.comb(base + 1, 2)


def double_count_check(c: Candidate, i: int, profiles) -> Finding:
    v = c.valencies
    counts = c.counts.counts
    n_i = counts[i]
    if n_i < 2:
        return Finding(CHECK_DOUBLE_COUNT, VERDICT_OPEN, f"class {i + 1} has a single vertex", i)
    if not profiles:
        return Finding(CHECK_DOUBLE_COUNT, VERDICT_NOT_APPLICABLE, "no profiles to count", i)

    limit = _pair_limit(v, i)
    others = [j for j in range(v.r) if j != i]

    saturated = [j for j in others
                 if all(p.neighbor_counts[j] == counts[j] for p in profiles)]
    shared = sum(counts[j] for j in saturated)
    if saturated and shared > limit:
        return Finding(
            CHECK_SATURATION, VERDICT_REFUTED,
            f"double-count saturation: two class-{i + 1} vertices share {shared} > {limit} common neighbours",
            i, (("shared", shared), ("limit", limit)),
        )

    coverage = 0
    for j in others:
        least = min(p.neighbor_counts[j] for p in profiles)
        coverage += balanced_pair_coverage(n_i * least, counts[j])
    capacity = math.comb(n_i, 2) * limit
    if coverage > capacity:
        return Finding(
            CHECK_CONVEXITY, VERDICT_REFUTED,
            f"convexity double-count: {coverage} > {capacity}",
            i, (("coverage", coverage), ("capacity", capacity)),
        )
    return Finding(
        CHECK_DOUBLE_COUNT, VERDICT_OPEN,
        f"class {i + 1}: shared {shared} <= {limit}, coverage {coverage} <= {capacity}",
        i, (("shared", shared), ("limit", limit), ("coverage", coverage), ("capacity", capacity)),
    )


#  ==========================================
#    QUOTIENT MATRIX
#  ==========================================

def _row_options(c: Candidate, i: int):
    """Rows b_i. meeting degree, caps, forbidden adjacency and the eigenvector condition."""
    v = c.valencies
    r = v.r
    caps = _neighbor_caps(c, i)
    for j in range(r):
        if nu_pair(v, i, j, adjacent=True) < 0:
            caps[j] = 0
    target = c.params.s * v.betas[i]
    degree = v.valencies[i]
    rows = []

    def fill(j, left, row):
        if j == r - 1:
            if left <= caps[j]:
                full = row + [left]
                if sum(b * beta for b, beta in zip(full, v.betas)) == target:
                    rows.append(tuple(full))
            return
        for amount in range(min(caps[j], left) + 1):
            fill(j + 1, left - amount, row + [amount])

    fill(0, degree, [])
    return rows


def _walk_target(c: Candidate, i: int) -> int:
    v = c.valencies
    t = c.params.t
    perron = sum(n * b for n, b in zip(c.counts.counts, v.betas))
    return (1 - t) * v.valencies[i] + t + v.omega * v.betas[i] * perron


def _walk_value(c: Candidate, row) -> int:
    return sum(b * k for b, k in zip(row, c.valencies.valencies))


def quotient_matrix_search(c: Candidate) -> tuple[list[QuotientMatrix], Finding]:
    v = c.valencies
    r = v.r
    if r > QUOTIENT_MAX_CLASSES:
        return [], Finding(CHECK_QUOTIENT, VERDICT_NOT_APPLICABLE,
                           f"{r} valencies; the valency partition need not be equitable")

    counts = c.counts.counts
    per_row = []
    blocker = None
    for i in range(r):
        eigen_rows = _row_options(c, i)
        target = _walk_target(c, i)
        good = [row for row in eigen_rows if _walk_value(c, row) == target]
        if not good and blocker is None:
            if eigen_rows:
                value = _walk_value(c, eigen_rows[0])
                blocker = Finding(
                    CHECK_QUOTIENT, VERDICT_REFUTED,
                    f"quotient-matrix infeasible ({value} != {target})",
                    i, (("walks", value), ("required", target)),
                )
            else:
                blocker = Finding(
                    CHECK_QUOTIENT, VERDICT_REFUTED,
                    f"quotient-matrix infeasible (class {i + 1} has no eigenvector-compatible row)", i,
                )
        per_row.append(good)

    matrices = []
    if blocker is None:
        def combine(i, chosen):
            if i == r:
                matrices.append(QuotientMatrix(entries=tuple(chosen)))
                return
            for row in per_row[i]:
                if all(counts[i] * row[j] == counts[j] * chosen[j][i] for j in range(i)):
                    combine(i + 1, chosen + [row])

        combine(0, [])

    if matrices:
        return matrices, Finding(CHECK_QUOTIENT, VERDICT_OPEN, f"{len(matrices)} quotient matrix solution(s)")
    if blocker is None:
        blocker = Finding(CHECK_QUOTIENT, VERDICT_REFUTED,
                          "quotient-matrix infeasible (no balanced combination of rows)")
    return [], blocker


#  ==========================================
#    BELL-ROWLINSON EQUALITY
#  ==========================================

def br_equality_flag(p: SpectralParams) -> Finding:
    for l in (p.m + 1, p.n - p.m):
        if 2 * p.n == l * (l + 1):
            return Finding(CHECK_BR, VERDICT_FLAGGED, f"BR-equality: {p.n} = {l}*{l + 1}/2",
                           witness=(("n", p.n), ("l", l)))
    return Finding(CHECK_BR, VERDICT_OPEN, "Bell-Rowlinson bound strict")


#  ==========================================
#    DRIVER
#  ==========================================

def refute_candidate(c: Candidate, config: SearchConfig | None = None) -> Candidate:
    """Runs every check and settles the status from the first decisive finding.

    Order: per class (profiles, then double counting), then the quotient
    search, then the Bell-Rowlinson rule.
    """
    config = config or SearchConfig()
    findings = []
    for i in range(c.valencies.r):
        profiles = enumerate_profiles(c, i)
        if profiles:
            findings.append(Finding(CHECK_PROFILES, VERDICT_OPEN, f"class {i + 1}: {len(profiles)} profile(s)", i))
        else:
            k = c.valencies.valencies[i]
            findings.append(Finding(CHECK_PROFILES, VERDICT_REFUTED,
                                    f"no admissible neighborhood for class {i + 1} (k={k})", i))
        findings.append(double_count_check(c, i, profiles))
    findings.append(quotient_matrix_search(c)[1])
    br = br_equality_flag(c.params)
    findings.append(br)

    settled = c.with_findings(findings)
    decisive = next((f for f in findings if f.verdict == VERDICT_REFUTED), None)
    if decisive is not None:
        return settled.transition(STATUS_REFUTED, decisive.detail)
    if br.verdict == VERDICT_FLAGGED:
        if config.apply_br_uniqueness:
            return settled.transition(STATUS_REFUTED, f"{br.detail} (uniqueness of the equality case)")
        return settled.transition(STATUS_FLAGGED, br.detail)
    return settled


def refute_all(candidates, config: SearchConfig | None = None) -> RefutationReport:
    return RefutationReport(candidates=tuple(refute_candidate(c, config) for c in candidates))


def replay_finding(c: Candidate, finding: Finding) -> bool:
    """Recomputes a refuting finding from scratch; True when the same violation reappears."""
    if finding.verdict != VERDICT_REFUTED:
        return False
    i = finding.class_index
    if finding.check == CHECK_PROFILES:
        return not enumerate_profiles(c, i)
    if finding.check in (CHECK_SATURATION, CHECK_CONVEXITY):
        again = double_count_check(c, i, enumerate_profiles(c, i))
        return again.check == finding.check and again.witness == finding.witness
    if finding.check == CHECK_QUOTIENT:
        matrices, again = quotient_matrix_search(c)
        return not matrices and again.witness == finding.witness
    return False

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction

from exact_arith import ceil_div
from spectral_enum import SpectralParams
from valency_enum import ValencyArray

STATUS_OPEN = "open"
STATUS_REFUTED = "refuted"
STATUS_FLAGGED = "flagged"


@dataclass(frozen=True)
class MultiplicityArray:
    valencies: ValencyArray
    counts: tuple[int, ...]   # n_1..n_r, one per valency

    def __post_init__(self):
        if len(self.counts) != self.valencies.r:
            raise ValueError(f"expected {self.valencies.r} counts, got {self.counts}")
        if any(c < 1 for c in self.counts):
            raise ValueError(f"counts must be positive, got {self.counts}")
        if sum(self.counts) != self.valencies.params.n:
            raise ValueError(
                f"counts {self.counts} sum to {sum(self.counts)}, not n={self.valencies.params.n}"
            )


@dataclass(frozen=True)
class Candidate:
    """A surviving (spectrum, valencies, multiplicities) triple and its refutation state."""
    params: SpectralParams
    valencies: ValencyArray
    counts: MultiplicityArray
    status: str = STATUS_OPEN
    reason: str | None = None
    findings: tuple = field(default=(), compare=False)

    @classmethod
    def from_array(cls, counts: MultiplicityArray) -> "Candidate":
        return cls(params=counts.valencies.params, valencies=counts.valencies, counts=counts)

    def transition(self, status: str, reason: str) -> "Candidate":
        if self.status != STATUS_OPEN:
            raise ValueError(f"candidate already {self.status}; cannot move to {status}")
        if status not in (STATUS_REFUTED, STATUS_FLAGGED):
            raise ValueError(f"unknown status {status!r}")
        return replace(self, status=status, reason=reason)

    def with_findings(self, findings) -> "Candidate":
        return replace(self, findings=tuple(findings))

    @property
    def key(self) -> tuple:
        p = self.params
        return (p.t, p.n, p.s, p.m, self.valencies.valencies, self.counts.counts)


@dataclass(frozen=True)
class MultiplicityReport:
    perron_ok: bool     # sum n_i k_i beta_i = s sum n_i beta_i
    norm_ok: bool       # omega (sum n_i beta_i)^2 = sum n_i (k_i - 1)(k_i + t)
    edge_sum_ok: bool   # sum n_i k_i = T
    walk_sum_ok: bool   # sum n_i tau_i = W3
    perron_sum: int     # sum n_i beta_i
    degree_sum: int
    walk_total: int

    @property
    def all_pass(self) -> bool:
        return self.perron_ok and self.norm_ok and self.edge_sum_ok and self.walk_sum_ok


def h_frak(v: ValencyArray) -> int:
    """Longest prefix of classes whose vertices are pairwise forced non-adjacent."""
    bound = v.params.n - 2 * v.params.m
    for h in range(v.r):
        if any(v.pair_reach(i, h) >= bound for i in range(h + 1)):
            return h
    return v.r


def count_bounds(v: ValencyArray, i: int, fixed_tail) -> tuple[Fraction, Fraction]:
    """Rational interval for n_i (1-based i in 2..r) given n_{i+1}..n_r.

    Every class below i is assumed to hold at least one vertex.
    """
    if not 2 <= i <= v.r:
        raise ValueError(f"class index must lie in 2..{v.r}, got {i}")
    tail = tuple(fixed_tail)
    if len(tail) != v.r - i:
        raise ValueError(f"class {i} needs {v.r - i} fixed tail counts, got {len(tail)}")
    p = v.params
    k = v.valencies
    big_t = p.edge_double
    k1, k_prev, k_i = k[0], k[i - 2], k[i - 1]
    upper_top = (big_t - p.n * k1
                 - sum(c * (kj - k1) for c, kj in zip(tail, k[i:]))
                 - sum(kj - k1 for kj in k[:i - 1]))
    lower_top = (big_t - p.n * k_prev
                 - sum(c * (kj - k_prev) for c, kj in zip(tail, k[i:]))
                 - sum(kj - k_prev for kj in k[:i - 1]))
    return Fraction(lower_top, k_i - k_prev), Fraction(upper_top, k_i - k1)


def check_multiplicity_equations(arr: MultiplicityArray) -> MultiplicityReport:
    v = arr.valencies
    p = v.params
    k = v.valencies
    n_i = arr.counts
    perron = sum(c * b for c, b in zip(n_i, v.betas))
    weighted = sum(c * kk * b for c, kk, b in zip(n_i, k, v.betas))
    norm = sum(c * (kk - 1) * (kk + p.t) for c, kk in zip(n_i, k))
    degrees = sum(c * kk for c, kk in zip(n_i, k))
    walks = sum(c * v.closed_walks(idx) for idx, c in enumerate(n_i))
    return MultiplicityReport(
        perron_ok=weighted == p.s * perron,
        norm_ok=v.omega * perron * perron == norm,
        edge_sum_ok=degrees == p.edge_double,
        walk_sum_ok=walks == p.walk_sum,
        perron_sum=perron,
        degree_sum=degrees,
        walk_total=walks,
    )


def _within_bounds(v: ValencyArray, counts) -> bool:
    for i in range(2, v.r + 1):
        lower, upper = count_bounds(v, i, counts[i:])
        if not lower <= counts[i - 1] <= upper:
            return False
    return True


def _independence_ok(v: ValencyArray, counts) -> bool:
    return sum(counts[:h_frak(v)]) <= v.params.m


def is_feasible(arr: MultiplicityArray) -> bool:
    """The defining predicate of a feasible multiplicity array, checked from scratch."""
    v = arr.valencies
    return (check_multiplicity_equations(arr).all_pass
            and _within_bounds(v, arr.counts)
            and _independence_ok(v, arr.counts))


def enumerate_multiplicity_arrays(v: ValencyArray) -> list[MultiplicityArray]:
    """Fixes n_r, then n_{r-1}, ..., pruning each with the rational bounds; n_1 closes the sum."""
    n, r = v.params.n, v.r
    counts = [0] * r
    found = []

    def descend(i: int):
        fixed = sum(counts[i:])
        if i == 1:
            counts[0] = n - fixed
            if counts[0] >= 1:
                arr = MultiplicityArray(valencies=v, counts=tuple(counts))
                if check_multiplicity_equations(arr).all_pass and _independence_ok(v, arr.counts):
                    found.append(arr)
            return
        lower, upper = count_bounds(v, i, counts[i:])
        lo = max(1, ceil_div(lower.numerator, lower.denominator))
        hi = min(upper.numerator // upper.denominator, n - fixed - (i - 1))
        for value in range(lo, hi + 1):
            counts[i - 1] = value
            descend(i - 1)
        counts[i - 1] = 0

    descend(r)
    return found


def brute_force_multiplicity_arrays(v: ValencyArray) -> list[MultiplicityArray]:
    """Reference enumeration: every composition of n into r positive parts, filtered by is_feasible."""
    n, r = v.params.n, v.r
    found = []
    for cuts in itertools.combinations(range(1, n), r - 1):
        edges = (0,) + cuts + (n,)
        counts = tuple(b - a for a, b in zip(edges, edges[1:]))
        arr = MultiplicityArray(valencies=v, counts=counts)
        if is_feasible(arr):
            found.append(arr)
    return found

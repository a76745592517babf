import math
from dataclasses import asdict, dataclass
from fractions import Fraction

T_LOW = 3
T_BOUND = 29   # no graph of the family exists with t > 29

TAIL_BOUND_CHOICES = ("printed", "lemma")


class LinkageError(ValueError):
    """Raised for a spectral parameter record that breaks m(t+1) = n + s - 1."""


@dataclass(frozen=True)
class SearchConfig:
    """Toggles shared by every stage of the search; recorded verbatim in the manifest."""
    bracket_condition: bool = True             # valency bracket k_1 < s < k_r
    apply_n_lower_bound: bool = False          # require 8n > (2t - 1)^2 inside S(t)
    apply_br_uniqueness: bool = True           # refute Bell-Rowlinson equality via the cited uniqueness result
    valency_tail_bound: str = "lemma"          # "lemma" | "printed" reading of valency condition (h)
    pair_condition_allows_equal: bool = True   # valency condition (g) admits i == j

    def __post_init__(self):
        if self.valency_tail_bound not in TAIL_BOUND_CHOICES:
            raise ValueError(
                f"valency_tail_bound must be one of {TAIL_BOUND_CHOICES}, got {self.valency_tail_bound!r}"
            )

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, order=True)
class SpectralParams:
    """Candidate spectrum {s, 1^(n-1-m), (-t)^m} of an n-vertex graph."""
    t: int
    n: int
    s: int
    m: int

    def __post_init__(self):
        if self.t < T_LOW or self.n < 1 or self.s < 1 or self.m < 1:
            raise LinkageError(f"non-positive or out-of-range field in {self}")
        if self.m * (self.t + 1) != self.n + self.s - 1:
            raise LinkageError(
                f"linkage m(t+1) = n + s - 1 fails for t={self.t}, n={self.n}, s={self.s}, m={self.m}"
            )

    @classmethod
    def from_linkage(cls, t: int, n: int, m: int) -> "SpectralParams":
        return cls(t=t, n=n, s=1 - n + m * (t + 1), m=m)

    @property
    def edge_double(self) -> int:
        """T = s^2 + (n-1-m) + m t^2, the trace of A^2."""
        return edge_double(self.t, self.n, self.s, self.m)

    @property
    def walk_sum(self) -> int:
        """W3 = s^3 + (n-1-m) - m t^3, the trace of A^3."""
        return walk_sum(self.t, self.n, self.s, self.m)

    @property
    def label(self) -> str:
        return f"({self.n},{self.s},{self.m})"


@dataclass(frozen=True)
class SpectralReport:
    params: SpectralParams
    a_vertex_bound: bool     # n <= n_max(t)
    b_multiplicity: bool     # Bell-Rowlinson for both non-principal eigenvalues
    c_radius: bool           # n < s^2 + 1
    d_radius_window: bool    # t < s < min((t+1)^2 + t, n - 6)
    e_edge_count: bool       # T even and T < ns
    f_walk_count: bool       # W3 divisible by 6
    edge_double: int
    walk_sum: int
    n_lower_bound: bool      # 8n > (2t-1)^2, informational unless toggled

    @property
    def all_pass(self) -> bool:
        return (self.a_vertex_bound and self.b_multiplicity and self.c_radius
                and self.d_radius_window and self.e_edge_count and self.f_walk_count)


def edge_double(t: int, n: int, s: int, m: int) -> int:
    return s * s + n - 1 - m + m * t * t


def walk_sum(t: int, n: int, s: int, m: int) -> int:
    return s ** 3 + n - 1 - m - m * t ** 3


def _check_t(t: int):
    if not T_LOW <= t <= T_BOUND:
        raise ValueError(f"t must lie in {T_LOW}..{T_BOUND}, got {t}")


def n_max(t: int) -> int:
    """Largest admissible vertex count for smallest eigenvalue -t."""
    _check_t(t)
    if t <= 10:
        bound = Fraction(t * t + 8 * t + 18) + Fraction(18, t - 1)
    else:
        bound = Fraction(t * t, 4) + Fraction(17 * t, 2) + 48 + Fraction(116, t - 1)
    return math.floor(bound)


def n_lower_ok(t: int, n: int) -> bool:
    """n > (t - 1/2)^2 / 2, cleared of denominators."""
    return 8 * n > (2 * t - 1) ** 2


def _conditions(t: int, n: int, s: int, m: int, vertex_cap: int | None) -> tuple:
    big_t = edge_double(t, n, s, m)
    w3 = walk_sum(t, n, s, m)
    a = vertex_cap is not None and n <= vertex_cap
    b = (n - m) * (n - m + 1) >= 2 * n and (m + 1) * (m + 2) >= 2 * n
    c = n < s * s + 1
    d = t < s < min((t + 1) ** 2 + t, n - 6)
    e = big_t % 2 == 0 and big_t < n * s
    f = w3 % 6 == 0
    return a, b, c, d, e, f, big_t, w3


def check_spectral_conditions(p: SpectralParams) -> SpectralReport:
    cap = n_max(p.t) if p.t <= T_BOUND else None
    a, b, c, d, e, f, big_t, w3 = _conditions(p.t, p.n, p.s, p.m, cap)
    return SpectralReport(
        params=p,
        a_vertex_bound=a,
        b_multiplicity=b,
        c_radius=c,
        d_radius_window=d,
        e_edge_count=e,
        f_walk_count=f,
        edge_double=big_t,
        walk_sum=w3,
        n_lower_bound=n_lower_ok(p.t, p.n),
    )


def enumerate_spectral(t: int, config: SearchConfig | None = None) -> list[SpectralParams]:
    """All spectral parameter arrays S(t), sorted by (n, s)."""
    config = config or SearchConfig()
    cap = n_max(t)
    found = []
    for n in range(1, cap + 1):
        if config.apply_n_lower_bound and not n_lower_ok(t, n):
            continue
        for m in range(1, n):
            s = 1 - n + m * (t + 1)
            if s <= 0:
                continue
            flags = _conditions(t, n, s, m, cap)[:6]
            if all(flags):
                found.append(SpectralParams(t=t, n=n, s=s, m=m))
    return found

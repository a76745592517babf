from dataclasses import dataclass

from exact_arith import ClassMismatchError, SqClass, is_squarefree, squarefree_split
from spectral_enum import SearchConfig, SpectralParams


@dataclass(frozen=True)
class ValencyArray:
    """Valencies k_i = t + omega * beta_i**2 sharing one squarefree class."""
    params: SpectralParams
    omega: int
    betas: tuple[int, ...]

    def __post_init__(self):
        if not is_squarefree(self.omega):
            raise ValueError(f"omega must be squarefree, got {self.omega}")
        if not self.betas or self.betas[0] < 1:
            raise ValueError(f"betas must be positive, got {self.betas}")
        if any(b1 >= b2 for b1, b2 in zip(self.betas, self.betas[1:])):
            raise ValueError(f"betas must be strictly increasing, got {self.betas}")

    @classmethod
    def from_valencies(cls, params: SpectralParams, valencies) -> "ValencyArray":
        splits = [squarefree_split(k - params.t) for k in valencies]
        omegas = {sp.omega for sp in splits}
        if len(omegas) != 1:
            raise ClassMismatchError(f"valencies {tuple(valencies)} span classes {sorted(omegas)}")
        return cls(params=params, omega=splits[0].omega, betas=tuple(sp.beta for sp in splits))

    @property
    def r(self) -> int:
        return len(self.betas)

    @property
    def valencies(self) -> tuple[int, ...]:
        return tuple(self.params.t + self.omega * b * b for b in self.betas)

    @property
    def alphas(self) -> tuple[SqClass, ...]:
        return tuple(SqClass(omega=self.omega, beta=b) for b in self.betas)

    def c(self, i: int, j: int) -> int:
        """c_t(k_i, k_j) for 0-based class indices."""
        return self.omega * self.betas[i] * self.betas[j]

    def closed_walks(self, i: int) -> int:
        p = self.params
        return (p.s - p.t + 1) * (self.valencies[i] - p.t) - (p.t - 1) * p.t

    def pair_reach(self, i: int, j: int) -> int:
        """k_i + k_j - c_t(k_i, k_j) + t - 1, compared against n - 2m."""
        k = self.valencies
        return k[i] + k[j] - self.c(i, j) + self.params.t - 1


@dataclass(frozen=True)
class ValencyReport:
    array: ValencyArray
    a_shared_class: bool
    b_valency_range: bool
    c_pair_gap: bool
    d_forced_pairs: bool
    e_closed_walks: bool
    f_top_pair: bool
    g_some_pair: bool
    h_tail_bound: bool
    non_cone: bool      # k_r <= n - 2; cones are settled by the cone case analysis
    bracket: bool
    at_least_three: bool
    closed_walks: tuple[int, ...]
    tail_value: int     # left side of (h)
    tail_needed: int    # right side of (h), k_r - k_1

    def all_pass(self, config: SearchConfig | None = None) -> bool:
        config = config or SearchConfig()
        core = (self.a_shared_class and self.b_valency_range and self.c_pair_gap
                and self.d_forced_pairs and self.e_closed_walks and self.f_top_pair
                and self.g_some_pair and self.h_tail_bound and self.non_cone
                and self.at_least_three)
        return core and (self.bracket or not config.bracket_condition)


def k1_min(t: int) -> int:
    if t >= 11:
        return t + 3
    if t >= 7:
        return t + 2
    return t + 1


def k_max(t: int) -> int:
    return (t + 1) ** 2 + t


def tail_value(params: SpectralParams, valencies, tail_bound: str = "lemma") -> int:
    """T - n k_1 - sum of (k_i - k_1), the sum running to r ("printed") or r - 1 ("lemma")."""
    k1 = valencies[0]
    stop = len(valencies) if tail_bound == "printed" else len(valencies) - 1
    return params.edge_double - params.n * k1 - sum(k - k1 for k in valencies[1:stop])


def check_valency_conditions(a: ValencyArray, config: SearchConfig | None = None) -> ValencyReport:
    config = config or SearchConfig()
    p = a.params
    t, r = p.t, a.r
    k = a.valencies
    bound = p.n - 2 * p.m

    gaps_ok = True
    forced_ok = True
    for i in range(r):
        for j in range(i):
            gap = a.c(i, j) - (k[j] - t)
            if gap > 2 * t - 2:
                gaps_ok = False
            if gap > t and a.pair_reach(i, j) < bound:
                forced_ok = False

    walks = tuple(a.closed_walks(i) for i in range(r))
    top_ok = any(a.c(r - 1, i) - (k[i] - t) <= t for i in range(r - 1))
    some_ok = any(
        a.pair_reach(i, j) >= bound
        for i in range(r)
        for j in range(i if config.pair_condition_allows_equal else i + 1, r)
    )
    tail = tail_value(p, k, config.valency_tail_bound)

    return ValencyReport(
        array=a,
        a_shared_class=len({squarefree_split(v - t).omega for v in k}) == 1,
        b_valency_range=k[-1] <= k_max(t) and k[0] >= k1_min(t),
        c_pair_gap=gaps_ok,
        d_forced_pairs=forced_ok,
        e_closed_walks=all(w >= 0 and w % 2 == 0 for w in walks),
        f_top_pair=top_ok,
        g_some_pair=some_ok,
        h_tail_bound=tail >= k[-1] - k[0],
        non_cone=k[-1] <= p.n - 2,
        bracket=k[0] < p.s < k[-1],
        at_least_three=r >= 3,
        closed_walks=walks,
        tail_value=tail,
        tail_needed=k[-1] - k[0],
    )


def _squarefree_classes(t: int):
    return [w for w in range(1, k_max(t) - t + 1) if is_squarefree(w)]


def enumerate_valency_arrays(p: SpectralParams, config: SearchConfig | None = None) -> list[ValencyArray]:
    """Depth-first search over increasing beta tuples, one squarefree class at a time.

    Conditions (b), (c), (d), (e), (h) and the non-cone cap only tighten as a tuple
    grows, so they prune partial tuples; the bracket, (f) and (g) are checked on
    complete ones.
    """
    config = config or SearchConfig()
    t, n, m, s = p.t, p.n, p.m, p.s
    bound = n - 2 * m
    big_t = p.edge_double
    lemma_tail = config.valency_tail_bound == "lemma"
    lowest = k1_min(t)
    results = []

    for omega in _squarefree_classes(t):
        betas = []
        b = 1
        while t + omega * b * b <= min(k_max(t), n - 2):
            k_new = t + omega * b * b
            walks = (s - t + 1) * (k_new - t) - (t - 1) * t
            if walks >= 0 and walks % 2 == 0:
                betas.append(b)
            b += 1
        if not betas:
            continue

        chosen: list[int] = []
        vals: list[int] = []

        def complete_ok() -> bool:
            r = len(vals)
            if r < 3:
                return False
            if config.bracket_condition and not (vals[0] < s < vals[-1]):
                return False
            if not any(omega * chosen[-1] * chosen[i] - (vals[i] - t) <= t for i in range(r - 1)):
                return False
            lo = 0 if config.pair_condition_allows_equal else 1
            return any(
                vals[i] + vals[j] - omega * chosen[i] * chosen[j] + t - 1 >= bound
                for i in range(r)
                for j in range(i + lo, r)
            )

        def extend(start: int):
            if complete_ok():
                results.append(ValencyArray(params=p, omega=omega, betas=tuple(chosen)))
            for pos in range(start, len(betas)):
                b_new = betas[pos]
                k_new = t + omega * b_new * b_new
                if not chosen and k_new < lowest:
                    continue
                admissible = True
                for b_old, k_old in zip(chosen, vals):
                    c_val = omega * b_old * b_new
                    gap = c_val - (k_old - t)
                    if gap > 2 * t - 2 or (gap > t and k_new + k_old - c_val + t - 1 < bound):
                        admissible = False
                        break
                if not admissible:
                    continue
                k1 = vals[0] if vals else k_new
                spread = sum(v - k1 for v in vals[1:]) + (k_new - k1)
                if lemma_tail:
                    spread -= k_new - k1
                if big_t - n * k1 - spread < k_new - k1:
                    continue
                chosen.append(b_new)
                vals.append(k_new)
                extend(pos + 1)
                chosen.pop()
                vals.pop()

        extend(0)

    return sorted(results, key=lambda a: (a.omega, a.betas))

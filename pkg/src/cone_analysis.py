import math
from dataclasses import dataclass
from fractions import Fraction

from exact_arith import SqClass, isqrt_exact, is_squarefree

CONE_T_RANGE = range(3, 7)

REASON_NEGATIVE_DISCRIMINANT = "negative discriminant"
REASON_NONSQUARE_DISCRIMINANT = "non-square discriminant"
REASON_ROOT_TOO_SMALL = "root s <= t"
REASON_M_NOT_INTEGRAL = "m not integral"
REASON_N1_NOT_INTEGRAL = "n_1 not integral"
REASON_N1_EMPTY = "n_1 < 1"
REASON_N2_EMPTY = "n_2 < 1"
REASON_OUTSIDE_WINDOW = "outside window"


@dataclass(frozen=True)
class ConeBounds:
    """Vertex-count window for a cone with three valencies and smallest eigenvalue -t."""
    t: int
    lower_strict: int        # n > 9t - 7
    upper_square: int        # n <= (2t - 1)^2 + t + 1
    upper_ratio: Fraction    # n <= (2t - 2)^2 / (t - 2) + 6t - 5
    lower_root: int          # least n with n >= 6t - 6 + sqrt(8(2t - 2)(2t - 3))

    @property
    def lowest(self) -> int:
        return max(self.lower_strict + 1, self.lower_root)

    @property
    def highest(self) -> int:
        return min(self.upper_square, math.floor(self.upper_ratio))

    @property
    def feasible(self) -> bool:
        return self.lowest <= self.highest

    def admits(self, n: int) -> bool:
        return self.lowest <= n <= self.highest


def cone_bounds(t: int) -> ConeBounds:
    if t < 3:
        raise ValueError(f"cone bounds need t >= 3, got {t}")
    base = 6 * t - 6
    product = 8 * (2 * t - 2) * (2 * t - 3)
    excess = math.isqrt(product)
    if excess * excess < product:
        excess += 1
    return ConeBounds(
        t=t,
        lower_strict=9 * t - 7,
        upper_square=(2 * t - 1) ** 2 + t + 1,
        upper_ratio=Fraction((2 * t - 2) ** 2, t - 2) + 6 * t - 5,
        lower_root=base + excess,
    )


@dataclass(frozen=True)
class ConeCandidate:
    t: int
    alpha_x: SqClass   # Perron entry of the larger non-apex class
    alpha_y: SqClass
    n: int
    s: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.alpha_x.omega != self.alpha_y.omega:
            raise ValueError(f"{self.alpha_x} and {self.alpha_y} lie in different classes")
        if self.alpha_x.omega * self.alpha_x.beta * self.alpha_y.beta != 2 * (self.t - 1):
            raise ValueError(f"alpha product of {self.alpha_x}, {self.alpha_y} is not 2(t-1)")
        if self.n != cone_vertex_count(self.t, self.alpha_x, self.alpha_y):
            raise ValueError(f"n={self.n} does not match the apex norm")
        if cone_quadratic(self.t, self.n, self.s) != 0:
            raise ValueError(f"s={self.s} is not a root of the cone quadratic for n={self.n}")
        if self.n1 + self.n2 + 1 != self.n:
            raise ValueError(f"class sizes {self.n1} + {self.n2} + 1 != {self.n}")

    @property
    def m(self) -> Fraction:
        return Fraction(self.n - 1 + self.s, self.t + 1)

    def perron_ok(self) -> bool:
        """n_1 alpha_x + n_2 alpha_y = s alpha_apex, with alpha_apex = alpha_x + alpha_y."""
        bx, by = self.alpha_x.beta, self.alpha_y.beta
        return self.n1 * bx + self.n2 * by == self.s * (bx + by)


@dataclass(frozen=True)
class ConeCase:
    """One (pair, root) line of the case ledger; reason is None for survivors."""
    t: int
    alpha_x: SqClass
    alpha_y: SqClass
    n: int
    discriminant: int
    reason: str | None
    s: int | None = None
    m: Fraction | None = None
    n1: Fraction | None = None
    n2: Fraction | None = None

    def to_record(self) -> dict:
        def num(value):
            if value is None:
                return None
            value = Fraction(value)
            return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

        return {
            "t": self.t,
            "alpha_x": str(self.alpha_x),
            "alpha_y": str(self.alpha_y),
            "n": self.n,
            "discriminant": self.discriminant,
            "s": self.s,
            "m": num(self.m),
            "n1": num(self.n1),
            "n2": num(self.n2),
            "reason": self.reason or "survives",
        }


@dataclass(frozen=True)
class ConeSearchResult:
    t: int
    bounds: ConeBounds
    survivors: tuple[ConeCandidate, ...]
    ledger: tuple[ConeCase, ...]


def cone_vertex_count(t: int, alpha_x: SqClass, alpha_y: SqClass) -> int:
    """(alpha_x + alpha_y)^2 + 1 + t, exact because both surds share one class."""
    return alpha_x.omega * (alpha_x.beta + alpha_y.beta) ** 2 + 1 + t


def cone_quadratic(t: int, n: int, s: int) -> int:
    return s * s - (n - 2 * t) * s + (n - 1) * (2 * t - 3)


def alpha_pairs(t: int) -> list[tuple[SqClass, SqClass]]:
    """Same-class factorizations alpha_x * alpha_y = 2(t - 1) with alpha_x > alpha_y."""
    target = 2 * (t - 1)
    pairs = []
    for omega in range(1, target + 1):
        if target % omega or not is_squarefree(omega):
            continue
        rest = target // omega
        for by in range(1, rest + 1):
            bx, leftover = divmod(rest, by)
            if leftover or bx <= by:
                continue
            pairs.append((SqClass(omega, bx), SqClass(omega, by)))
    return pairs


def _roots(t: int, n: int) -> tuple[int, list[int] | None]:
    b = n - 2 * t
    disc = b * b - 4 * (n - 1) * (2 * t - 3)
    if disc < 0:
        return disc, None
    root = isqrt_exact(disc)
    if root is None or (b + root) % 2:
        return disc, []
    return disc, sorted({(b - root) // 2, (b + root) // 2})


def run_cone_search(t: int) -> ConeSearchResult:
    if t not in CONE_T_RANGE:
        raise ValueError(f"cone case search covers t in 3..6, got {t}")
    bounds = cone_bounds(t)
    ledger, survivors = [], []
    for ax, ay in alpha_pairs(t):
        n = cone_vertex_count(t, ax, ay)
        disc, roots = _roots(t, n)
        if roots is None:
            ledger.append(ConeCase(t, ax, ay, n, disc, REASON_NEGATIVE_DISCRIMINANT))
            continue
        if not roots:
            ledger.append(ConeCase(t, ax, ay, n, disc, REASON_NONSQUARE_DISCRIMINANT))
            continue
        for s in roots:
            m = Fraction(n - 1 + s, t + 1)
            n1 = Fraction(s * (ax.beta + ay.beta) - (n - 1) * ay.beta, ax.beta - ay.beta)
            n2 = n - 1 - n1
            if s <= t:
                reason = REASON_ROOT_TOO_SMALL
            elif m.denominator != 1 or m < 1:
                reason = REASON_M_NOT_INTEGRAL
            elif n1.denominator != 1:
                reason = REASON_N1_NOT_INTEGRAL
            elif n1 < 1:
                reason = REASON_N1_EMPTY
            elif n2 < 1:
                reason = REASON_N2_EMPTY
            elif not bounds.admits(n):
                reason = REASON_OUTSIDE_WINDOW
            else:
                reason = None
            ledger.append(ConeCase(t, ax, ay, n, disc, reason, s=s, m=m, n1=n1, n2=n2))
            if n1.denominator == 1:
                candidate = ConeCandidate(t, ax, ay, n, s, int(n1), int(n2))
                if not candidate.perron_ok():
                    raise ArithmeticError(f"Perron identity fails for {candidate}")
                if reason is None:
                    survivors.append(candidate)
    return ConeSearchResult(t=t, bounds=bounds, survivors=tuple(survivors), ledger=tuple(ledger))


def cone_case_search(t: int) -> list[ConeCandidate]:
    return list(run_cone_search(t).survivors)

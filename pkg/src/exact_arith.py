import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint


class ClassMismatchError(ValueError):
    """Raised when two surds from different squarefree classes are multiplied as if shared."""


@dataclass(frozen=True)
class SqClass:
    """The surd beta * sqrt(omega) with omega squarefree."""
    omega: int  # squarefree part
    beta: int   # integer coefficient, >= 1

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError(f"SqClass beta must be >= 1, got {self.beta}")
        if not is_squarefree(self.omega):
            raise ValueError(f"SqClass omega must be squarefree, got {self.omega}")

    @property
    def square(self) -> int:
        return self.omega * self.beta ** 2

    def __str__(self):
        if self.omega == 1:
            return str(self.beta)
        coef = "" if self.beta == 1 else str(self.beta)
        return f"{coef}√{self.omega}"


#  ==========================================
#    INTEGER HELPERS
#  ==========================================

@lru_cache(maxsize=None)
def is_squarefree(k: int) -> bool:
    if k < 1:
        return False
    return all(exp == 1 for exp in factorint(k).values())


@lru_cache(maxsize=None)
def squarefree_split(k: int) -> SqClass:
    """Writes k = omega * beta**2 with omega squarefree.

    Parameters
    ----------
    k : positive integer

    Returns
    -------
    SqClass(omega, beta)
    """
    if k < 1:
        raise ValueError(f"squarefree_split needs k >= 1, got {k}")
    omega, beta = 1, 1
    for prime, exp in factorint(k).items():
        beta *= prime ** (exp // 2)
        if exp % 2:
            omega *= prime
    return SqClass(omega=omega, beta=beta)


def isqrt_exact(k: int) -> int | None:
    """Integer square root of k when k is a perfect square, else None."""
    if k < 0:
        raise ValueError(f"isqrt_exact needs k >= 0, got {k}")
    root = math.isqrt(k)
    return root if root * root == k else None


def c_t(a: int, b: int, t: int) -> int:
    """Exact value of sqrt((a - t)(b - t)) for two valencies in one squarefree class."""
    if a <= t or b <= t:
        raise ValueError(f"c_t needs valencies above t={t}, got ({a}, {b})")
    sa = squarefree_split(a - t)
    sb = squarefree_split(b - t)
    if sa.omega != sb.omega:
        raise ClassMismatchError(
            f"valencies {a} and {b} lie in classes {sa.omega} and {sb.omega} for t={t}"
        )
    return sa.omega * sa.beta * sb.beta


def ceil_div(num: int, den: int) -> int:
    return -((-num) // den)


#  ==========================================
#    SUMS OF SQUARE ROOTS
#  ==========================================

@dataclass(frozen=True)
class RadicalSum:
    """A finite sum c_1*sqrt(w_1) + ... with distinct squarefree w_i and rational c_i.

    Square roots of distinct squarefree integers are linearly independent over
    the rationals, so the normalized term tuple decides equality exactly.
    """
    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, mapping: dict[int, Fraction]) -> "RadicalSum":
        cleaned = tuple(sorted((w, Fraction(c)) for w, c in mapping.items() if c != 0))
        return cls(terms=cleaned)

    @classmethod
    def rational(cls, value) -> "RadicalSum":
        return cls.from_terms({1: Fraction(value)})

    @classmethod
    def surd(cls, coef, radicand: int) -> "RadicalSum":
        """coef * sqrt(radicand) for any nonnegative integer radicand."""
        if radicand < 0:
            raise ValueError(f"negative radicand {radicand}")
        if radicand == 0:
            return cls()
        split = squarefree_split(radicand)
        return cls.from_terms({split.omega: Fraction(coef) * split.beta})

    @classmethod
    def sqrt(cls, value) -> "RadicalSum":
        """Principal square root of a nonnegative rational."""
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"square root of negative value {value}")
        return cls.surd(Fraction(1, value.denominator), value.numerator * value.denominator)

    @staticmethod
    def _coerce(other) -> "RadicalSum":
        if isinstance(other, RadicalSum):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalSum.rational(other)
        return NotImplemented

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = self.as_dict()
        for w, c in other.terms:
            merged[w] = merged.get(w, Fraction(0)) + c
        return RadicalSum.from_terms(merged)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum(terms=tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: dict[int, Fraction] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                # sqrt(w1 w2) = g sqrt((w1/g)(w2/g)), and the cofactor is squarefree
                g = math.gcd(w1, w2)
                w = (w1 // g) * (w2 // g)
                product[w] = product.get(w, Fraction(0)) + c1 * c2 * g
        return RadicalSum.from_terms(product)

    __rmul__ = __mul__

    @property
    def is_rational(self) -> bool:
        return all(w == 1 for w, _ in self.terms)

    @property
    def rational_part(self) -> Fraction:
        return self.as_dict().get(1, Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self.terms:
            if w == 1:
                pieces.append(_fmt_fraction(c))
            elif c == 1:
                pieces.append(f"√{w}")
            elif c == -1:
                pieces.append(f"-√{w}")
            else:
                pieces.append(f"{_fmt_fraction(c)}√{w}")
        return " + ".join(pieces).replace("+ -", "- ")


def _fmt_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

import hashlib
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import networkx as nx
import numpy as np
import sympy

from exact_arith import RadicalSum, is_squarefree, squarefree_split
from multiplicity_enum import Candidate, MultiplicityArray
from refinement import QuotientMatrix
from spectral_enum import SpectralParams
from valency_enum import ValencyArray

MAX_CERTIFIED_DEGREE = 3


class UnsupportedAlgebraicError(ValueError):
    """Raised when a quantity leaves the integers-plus-one-radical setting."""


#  ==========================================
#    GRAPH CONTAINER
#  ==========================================

@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset   # of (u, v) with u < v

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError(f"graph needs at least one vertex, got {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) is a loop, unordered or out of range")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise ValueError(f"repeated edge {pair}")
            normalized.add(pair)
        return cls(vertex_count=vertex_count, edges=frozenset(normalized))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(relabeled.number_of_nodes(), relabeled.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def degrees(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.adjacency().sum(axis=1))

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def edges_hash(self) -> str:
        text = ";".join(f"{u},{v}" for u, v in self.sorted_edges())
        return hashlib.sha256(f"{self.vertex_count}|{text}".encode("ascii")).hexdigest()


#  ==========================================
#    EIGENVALUES IN Q(sqrt d)
#  ==========================================

@total_ordering
@dataclass(frozen=True)
class AlgebraicEigenvalue:
    """p + q*sqrt(d) with d squarefree; rationals carry q = 0 and d = 1."""
    p: Fraction
    q: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        if not is_squarefree(self.d):
            raise ValueError(f"radicand must be squarefree, got {self.d}")
        if (self.d == 1) != (self.q == 0):
            raise ValueError(f"non-normalized eigenvalue p={self.p}, q={self.q}, d={self.d}")

    @classmethod
    def of(cls, p, q=0, d: int = 1) -> "AlgebraicEigenvalue":
        p, q = Fraction(p), Fraction(q)
        if q == 0 or d == 0:
            return cls(p=p)
        split = squarefree_split(d)
        if split.omega == 1:
            return cls(p=p + q * split.beta)
        return cls(p=p, q=q * split.beta, d=split.omega)

    @classmethod
    def parse(cls, text: str) -> "AlgebraicEigenvalue":
        """Accepts '5', '-2', '3/2', 'sqrt6', '-sqrt(6)', '2sqrt3', '1+2sqrt(5)', '1-sqrt5'."""
        cleaned = text.replace(" ", "").replace("√", "sqrt")
        match = re.fullmatch(
            r"(?P<p>[+-]?\d+(?:/\d+)?(?![\d/]*\*?sqrt))?"
            r"(?:(?P<sign>[+-])?(?P<q>\d+(?:/\d+)?)?\*?sqrt\(?(?P<d>\d+)\)?)?",
            cleaned,
        )
        if not cleaned or match is None or (match["p"] is None and match["d"] is None):
            raise ValueError(f"cannot parse eigenvalue {text!r}")
        p = Fraction(match["p"]) if match["p"] else Fraction(0)
        if match["d"] is None:
            return cls.of(p)
        q = Fraction(match["q"]) if match["q"] else Fraction(1)
        if match["sign"] == "-":
            q = -q
        return cls.of(p, q, int(match["d"]))

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_radical(self) -> RadicalSum:
        return RadicalSum.rational(self.p) + RadicalSum.surd(self.q, self.d)

    def conjugate(self) -> "AlgebraicEigenvalue":
        return AlgebraicEigenvalue.of(self.p, -self.q, self.d)

    def sign(self) -> int:
        a, b, d = self.p, self.q, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        gap = a * a - b * b * d
        return (gap > 0) - (gap < 0) if a > 0 else (gap < 0) - (gap > 0)

    def __sub__(self, other: "AlgebraicEigenvalue") -> "AlgebraicEigenvalue":
        if self.d != other.d and not (self.is_rational or other.is_rational):
            raise UnsupportedAlgebraicError(f"{self} and {other} lie in different quadratic fields")
        d = other.d if self.is_rational else self.d
        return AlgebraicEigenvalue.of(self.p - other.p, self.q - other.q, d)

    def __lt__(self, other: "AlgebraicEigenvalue") -> bool:
        return (self - other).sign() < 0

    def __str__(self):
        return str(self.to_radical())


@dataclass(frozen=True)
class SpectrumReport:
    minimal_degree: int | None                              # None when above MAX_CERTIFIED_DEGREE
    eigenvalues: tuple[tuple[AlgebraicEigenvalue, int], ...]  # descending, with multiplicities
    trace_ok: bool

    @property
    def is_three_eigenvalue(self) -> bool:
        return self.minimal_degree == 3

    def values(self) -> tuple[AlgebraicEigenvalue, ...]:
        return tuple(value for value, _ in self.eigenvalues)

    def multiplicity(self, value: AlgebraicEigenvalue) -> int:
        return dict(self.eigenvalues).get(value, 0)


def _minimal_polynomial(a: sympy.Matrix) -> list | None:
    """Coefficients c_0..c_{d-1} with A^d = sum c_i A^i for the least d <= 3, else None."""
    n = a.rows
    power = sympy.eye(n)
    basis = [power.reshape(n * n, 1)]
    for degree in range(1, MAX_CERTIFIED_DEGREE + 1):
        power = power * a
        target = power.reshape(n * n, 1)
        try:
            solution, free = sympy.Matrix.hstack(*basis).gauss_jordan_solve(target)
        except ValueError:
            basis.append(target)
            continue
        if free.shape[0] == 0:
            return [sympy.Rational(solution[i]) for i in range(degree)]
        basis.append(target)
    return None


def distinct_spectrum(g: Graph) -> SpectrumReport:
    """Distinct eigenvalues and multiplicities from the exact minimal polynomial."""
    a = sympy.Matrix(g.adjacency().tolist())
    n = g.vertex_count
    coeffs = _minimal_polynomial(a)
    if coeffs is None:
        return SpectrumReport(minimal_degree=None, eigenvalues=(), trace_ok=False)

    x = sympy.Symbol("x")
    degree = len(coeffs)
    poly = sympy.Poly(x ** degree - sum(c * x ** i for i, c in enumerate(coeffs)), x, domain="QQ")
    rational_roots, quadratic = [], None
    for factor, _ in poly.factor_list()[1]:
        fc = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in factor.all_coeffs()]
        if len(fc) == 2:
            rational_roots.append(AlgebraicEigenvalue.of(-fc[1] / fc[0]))
        elif len(fc) == 3 and quadratic is None:
            quadratic = fc
        else:
            raise UnsupportedAlgebraicError(f"minimal polynomial factor {factor.as_expr()} is not supported")

    eigenvalues = []
    taken = 0
    for root in rational_roots:
        shifted = a - sympy.Rational(root.p.numerator, root.p.denominator) * sympy.eye(n)
        mult = n - shifted.rank()
        taken += mult
        eigenvalues.append((root, mult))
    if quadratic is not None:
        qa, qb, qc = quadratic
        disc = qb * qb - 4 * qa * qc
        centre = -qb / (2 * qa)
        # sqrt(num/den) = sqrt(num*den)/den
        offset = AlgebraicEigenvalue.of(0, Fraction(1, 2 * qa * disc.denominator), disc.numerator * disc.denominator)
        plus = AlgebraicEigenvalue.of(centre, offset.q, offset.d)
        if plus.is_rational:
            raise UnsupportedAlgebraicError(f"quadratic factor with square discriminant {disc}")
        pair_mult = (n - taken) // 2
        eigenvalues += [(plus, pair_mult), (plus.conjugate(), pair_mult)]

    eigenvalues.sort(key=lambda item: item[0], reverse=True)
    trace = sum((value.to_radical() * mult for value, mult in eigenvalues), RadicalSum())
    total = sum(mult for _, mult in eigenvalues)
    return SpectrumReport(
        minimal_degree=degree,
        eigenvalues=tuple(eigenvalues),
        trace_ok=trace == RadicalSum() and total == n,
    )


#  ==========================================
#    RANK-ONE CERTIFICATE
#  ==========================================

@dataclass(frozen=True)
class Certificate:
    theta: tuple[AlgebraicEigenvalue, AlgebraicEigenvalue, AlgebraicEigenvalue]
    alpha: tuple[RadicalSum | None, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self, g: Graph, spectrum: SpectrumReport | None = None) -> dict:
        record = {
            "n": g.vertex_count,
            "edges_hash": g.edges_hash,
            "theta": [str(th) for th in self.theta],
            "alpha": [None if a is None else str(a) for a in self.alpha],
            "ok": self.ok,
            "failures": list(self.failures),
        }
        if spectrum is not None:
            record["eigenvalues"] = [[str(value), mult] for value, mult in spectrum.eigenvalues]
        return record


def certify_three_ev(g: Graph, theta0, theta1, theta2) -> Certificate:
    """Checks (A - th1 I)(A - th2 I) = alpha alpha^T entrywise and A alpha = th0 alpha."""
    theta = (theta0, theta1, theta2)
    if not theta0 > theta1 > theta2:
        raise ValueError(f"eigenvalues must be strictly decreasing, got {[str(th) for th in theta]}")
    t0, t1, t2 = (th.to_radical() for th in theta)
    th_sum, th_prod = t1 + t2, t1 * t2
    a = g.adjacency()
    common = a @ a
    degrees = g.degrees()
    failures = []

    alpha = []
    for v, d in enumerate(degrees):
        square = th_prod + d
        if not square.is_rational:
            failures.append(f"vertex {v}: d + th1*th2 = {square} is irrational")
            alpha.append(None)
        elif square.rational_part < 0:
            failures.append(f"vertex {v}: d + th1*th2 = {square} is negative")
            alpha.append(None)
        else:
            alpha.append(RadicalSum.sqrt(square.rational_part))
    if failures:
        return Certificate(theta=theta, alpha=tuple(alpha), failures=tuple(failures))

    for v, d in enumerate(degrees):
        if alpha[v] * alpha[v] != th_prod + d:
            failures.append(f"diagonal {v}: alpha^2 != d + th1*th2")
    for x, y in itertools.combinations(range(g.vertex_count), 2):
        lhs = th_sum * (-int(a[x, y])) + int(common[x, y])
        rhs = alpha[x] * alpha[y]
        if lhs != rhs:
            failures.append(f"entry ({x},{y}): {lhs} != {rhs}")
    for x in range(g.vertex_count):
        row = sum((alpha[y] for y in np.flatnonzero(a[x])), RadicalSum())
        if row != t0 * alpha[x]:
            failures.append(f"eigenvector row {x}: {row} != {t0 * alpha[x]}")
    return Certificate(theta=theta, alpha=tuple(alpha), failures=tuple(failures))


def closed_walk3_check(g: Graph, certificate: Certificate) -> bool:
    """Compares 2 * triangles(v) with the diagonal of the cubic identity at every vertex."""
    if not certificate.ok:
        return False
    t0, t1, t2 = (th.to_radical() for th in certificate.theta)
    constant = -(t1 + t2) * (t1 * t2)
    scale = t0 + t1 + t2
    triangles = nx.triangles(g.to_networkx())
    return all(
        RadicalSum.rational(2 * triangles[v]) == constant + scale * certificate.alpha[v] * certificate.alpha[v]
        for v in range(g.vertex_count)
    )


#  ==========================================
#    VALENCY PARTITION
#  ==========================================

def valency_partition(g: Graph) -> list[tuple[int, ...]]:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_degree.setdefault(d, []).append(v)
    return [tuple(by_degree[d]) for d in sorted(by_degree)]


def is_equitable(g: Graph, partition) -> tuple[bool, QuotientMatrix | None]:
    a = g.adjacency()
    rows = []
    for cell in partition:
        row = None
        for v in cell:
            counts = tuple(int(a[v, list(other)].sum()) for other in partition)
            if row is None:
                row = counts
            elif counts != row:
                return False, None
        rows.append(row)
    return True, QuotientMatrix(entries=tuple(rows))


def independence_bound_check(g: Graph, m: int) -> tuple[int, bool]:
    """Size of a greedy maximal independent set and whether it stays within m."""
    independent = nx.maximal_independent_set(g.to_networkx(), seed=0)
    return len(independent), len(independent) <= m


#  ==========================================
#    CONSTRUCTORS
#  ==========================================

def build_complete_bipartite(a: int, b: int) -> Graph:
    if not a >= b >= 1:
        raise ValueError(f"complete bipartite graph needs a >= b >= 1, got ({a}, {b})")
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def build_petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def build_cone(g: Graph) -> Graph:
    apex = g.vertex_count
    return Graph.from_edges(g.vertex_count + 1, list(g.edges) + [(v, apex) for v in range(apex)])


def build_fano() -> Graph:
    """Outer vertices O_i = i, inner vertices I_i = 7 + i; inner vertices form a clique."""
    edges = [(7 + i, 7 + j) for i, j in itertools.combinations(range(7), 2)]
    for i in range(7):
        for offset in (0, 1, -1, 3):
            edges.append((i, 7 + (i + offset) % 7))
    return Graph.from_edges(14, edges)


def build_kneser_pairs(q: int) -> Graph:
    """Disjointness graph on the 2-subsets of a q-set."""
    if q < 5:
        raise ValueError(f"Kneser pair graph needs q >= 5, got {q}")
    pairs = list(itertools.combinations(range(q), 2))
    edges = [(i, j) for (i, p), (j, r) in itertools.combinations(enumerate(pairs), 2) if not set(p) & set(r)]
    return Graph.from_edges(len(pairs), edges)


def build_clebsch() -> Graph:
    """Folded 5-cube: 4-bit words joined when they differ in one bit or in all four."""
    edges = [(u, v) for u, v in itertools.combinations(range(16), 2) if bin(u ^ v).count("1") in (1, 4)]
    return Graph.from_edges(16, edges)


#  ==========================================
#    GRAPH TO CANDIDATE
#  ==========================================

def candidate_from_graph(g: Graph, spectrum: SpectrumReport | None = None) -> Candidate:
    """Recasts a certified graph with spectrum {s, 1, -t} as a candidate record."""
    spectrum = spectrum or distinct_spectrum(g)
    if not spectrum.is_three_eigenvalue:
        raise ValueError("graph does not have exactly three distinct eigenvalues")
    theta0, theta1, theta2 = spectrum.values()
    if not (theta0.is_rational and theta2.is_rational and theta1 == AlgebraicEigenvalue.of(1)):
        raise ValueError(f"spectrum {[str(v) for v in spectrum.values()]} is not of the form s > 1 > -t")
    if theta0.p.denominator != 1 or theta2.p.denominator != 1:
        raise ValueError("principal and smallest eigenvalues must be integers")
    params = SpectralParams(t=int(-theta2.p), n=g.vertex_count, s=int(theta0.p), m=spectrum.multiplicity(theta2))
    degrees = g.degrees()
    classes = valency_partition(g)
    valencies = ValencyArray.from_valencies(params, [degrees[cell[0]] for cell in classes])
    counts = MultiplicityArray(valencies=valencies, counts=tuple(len(cell) for cell in classes))
    return Candidate.from_array(counts)

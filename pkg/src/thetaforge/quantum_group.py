"""Irreducible representations of the quantized sl(2) at t = exp(i*pi/2r),
the duality isomorphism, the fusion ring, and admissible colorings.

The k-dimensional irreducible acts on weight vectors e_j, j = -k0..k0
with k0 = (k-1)/2 (weights are half-integers for even k; everything is
stored through the doubled weight 2j so arithmetic stays integral):

    X e_j = [k0+j+1] e_{j+1},  Y e_j = [k0-j+1] e_{j-1},  K e_j = t^{2j} e_j.

Tensor products decompose by the truncated Clebsch-Gordan rule, which
makes the span of V^1..V^{r-1} a commutative ring isomorphic to
C[V^2]/S_{r-1}(V^2); admissible colorings of trivalent graphs count its
structure constants and give the dimensions that the numeric Verlinde
sum reproduces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import mpmath

from . import linalg
from .scalar import CycScalar, qint, qint_factorial, t_power


# -- irreducible representations ----------------------------------------------

@dataclass(frozen=True)
class QGroupRep:
    """Matrices of X, Y, K on a weight basis, lowest weight first."""

    k: int
    r: int
    X: tuple
    Y: tuple
    K: tuple

    def relations_hold(self) -> bool:
        """All defining relations, K^{4r} = 1, and nilpotency of X and Y."""
        k, r = self.k, self.r
        X = [list(row) for row in self.X]
        Y = [list(row) for row in self.Y]
        K = [list(row) for row in self.K]
        one = CycScalar.one(r)
        ident = linalg.mat_identity(k, one)
        kinv = linalg.mat_inverse(K)
        t2 = t_power(r, 2)
        if not linalg.mat_eq(linalg.mat_mul(K, kinv), ident):
            return False
        if not linalg.mat_eq(linalg.mat_mul(K, X), linalg.mat_scale(t2, linalg.mat_mul(X, K))):
            return False
        if not linalg.mat_eq(
            linalg.mat_mul(K, Y), linalg.mat_scale(t_power(r, -2), linalg.mat_mul(Y, K))
        ):
            return False
        comm = linalg.mat_sub(linalg.mat_mul(X, Y), linalg.mat_mul(Y, X))
        k2 = linalg.mat_mul(K, K)
        k2inv = linalg.mat_mul(kinv, kinv)
        denom = (t_power(r, 2) - t_power(r, -2)).inverse()
        rhs = linalg.mat_scale(denom, linalg.mat_sub(k2, k2inv))
        if not linalg.mat_eq(comm, rhs):
            return False
        kp = ident
        for _ in range(4 * self.r):
            kp = linalg.mat_mul(kp, K)
        if not linalg.mat_eq(kp, ident):
            return False
        xp, yp = X, Y
        for _ in range(k - 1):
            xp = linalg.mat_mul(xp, X)
            yp = linalg.mat_mul(yp, Y)
        return linalg.mat_is_zero(xp) and linalg.mat_is_zero(yp)


def _empty(k, r):
    zero = CycScalar.zero(r)
    return [[zero] * k for _ in range(k)]


def irrep(k: int, r: int) -> QGroupRep:
    """The k-dimensional irreducible V^k, 1 <= k <= r-1."""
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must lie in [1, {r - 1}]")
    X, Y, K = _empty(k, r), _empty(k, r), _empty(k, r)
    for i in range(k):  # weight 2j = 2i - (k-1)
        if i + 1 < k:
            X[i + 1][i] = qint(i + 1, r)
        if i - 1 >= 0:
            Y[i - 1][i] = qint(k - i, r)
        K[i][i] = t_power(r, 2 * i - (k - 1))
    return QGroupRep(k, r, _freeze(X), _freeze(Y), _freeze(K))


def dual_rep(k: int, r: int) -> QGroupRep:
    """The action on the dual basis e^j of V^{k*}."""
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must lie in [1, {r - 1}]")
    X, Y, K = _empty(k, r), _empty(k, r), _empty(k, r)
    mt2 = -t_power(r, 2)
    mtm2 = -t_power(r, -2)
    for i in range(k):
        if i - 1 >= 0:
            X[i - 1][i] = mt2 * qint(i, r)
        if i + 1 < k:
            Y[i + 1][i] = mtm2 * qint(k - 1 - i, r)
        K[i][i] = t_power(r, (k - 1) - 2 * i)
    return QGroupRep(k, r, _freeze(X), _freeze(Y), _freeze(K))


def _freeze(mat):
    return tuple(tuple(row) for row in mat)


class DualityIso(NamedTuple):
    matrix: list
    branch: str  # which square root of -t^2 was used for odd weights


def d_iso(k: int, r: int) -> DualityIso:
    """The isomorphism V^{k*} -> V^k intertwining the two actions.

    e^j maps to a multiple of e_{-j}; the ratio of consecutive scalars is
    forced by intertwining X to c_j / c_{j-1} = -t^2 [k0+j]/[k0-j+1],
    giving c_j = (-t^2)^j [k0+j]! [k0-j]! / [2k0]!.  For even k the
    half-integer power (-t^2)^j is read as nu^{2j} with nu^2 = -t^2;
    nu = i t = t^{r+1} is the recorded branch (the other choice only
    flips the global sign, which intertwines equally well).
    """
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must lie in [1, {r - 1}]")
    std = irrep(k, r)
    dual = dual_rep(k, r)
    denom = qint_factorial(k - 1, r).inverse()
    for branch, nu_exp in (("+i*t", r + 1), ("-i*t", 3 * r + 1)):
        D = _empty(k, r)
        for i in range(k):  # column e^j with 2j = 2i-(k-1); row e_{-j} = k-1-i
            two_j = 2 * i - (k - 1)
            scale = (
                t_power(r, nu_exp * two_j)
                * qint_factorial(i, r)
                * qint_factorial(k - 1 - i, r)
                * denom
            )
            D[k - 1 - i][i] = scale
        if _intertwines(D, dual, std):
            return DualityIso(D, branch)
    raise ArithmeticError(f"no square-root branch intertwines V^{k}* with V^{k}")


def _intertwines(D, dual: QGroupRep, std: QGroupRep) -> bool:
    for g_dual, g_std in ((dual.X, std.X), (dual.Y, std.Y), (dual.K, std.K)):
        lhs = linalg.mat_mul(D, [list(r_) for r_ in g_dual])
        rhs = linalg.mat_mul([list(r_) for r_ in g_std], D)
        if not linalg.mat_eq(lhs, rhs):
            return False
    return True


# -- the fusion ring -----------------------------------------------------------

@dataclass(frozen=True)
class FusionElement:
    """Integer combination of V^1, ..., V^{r-1}."""

    r: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.r - 1:
            raise ValueError("coefficient length must be r-1")

    @classmethod
    def zero(cls, r):
        return cls(r, (0,) * (r - 1))

    @classmethod
    def basis(cls, n, r):
        if not 1 <= n <= r - 1:
            raise ValueError("basis index out of range")
        return cls(r, tuple(1 if i == n - 1 else 0 for i in range(r - 1)))

    @classmethod
    def one(cls, r):
        return cls.basis(1, r)

    def __add__(self, other):
        self._check(other)
        return FusionElement(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return FusionElement(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return FusionElement(self.r, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return fusion_mul(self, other)

    def _check(self, other):
        if self.r != other.r:
            raise ValueError("mixed levels")

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)


def clebsch_gordan_range(m: int, n: int, r: int):
    """Indices p with V^p appearing in V^m V^n (parity and level cutoff)."""
    return range(abs(m - n) + 1, min(m + n - 1, 2 * r - 1 - m - n) + 1, 2)


def fusion_mul(a: FusionElement, b: FusionElement) -> FusionElement:
    a._check(b)
    r = a.r
    out = [0] * (r - 1)
    for m in range(1, r):
        ca = a.coeffs[m - 1]
        if not ca:
            continue
        for n in range(1, r):
            cb = b.coeffs[n - 1]
            if not cb:
                continue
            for p in clebsch_gordan_range(m, n, r):
                out[p - 1] += ca * cb
    return FusionElement(r, tuple(out))


def fusion_from_chebyshev(n: int, r: int) -> FusionElement:
    """S_{n-1}(V^2) evaluated in the fusion ring."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return FusionElement.zero(r)
    prev = FusionElement.zero(r)  # S_{-1}
    cur = FusionElement.one(r)  # S_0
    v2 = FusionElement.basis(2, r) if r > 2 else FusionElement.zero(r)
    for _ in range(n - 1):
        prev, cur = cur, fusion_mul(v2, cur) - prev
    return cur


def fusion_fold(n: int, r: int) -> FusionElement:
    """V^n reduced by V^r = 0, V^{r+j} = -V^{r-j}, V^{n+2r} = V^n."""
    m = n % (2 * r)
    if m % r == 0:
        return FusionElement.zero(r)
    if m < r:
        return FusionElement.basis(m, r)
    return -FusionElement.basis(2 * r - m, r)


def fusion_matrix(a: int, r: int):
    """Integer matrix of multiplication by V^a on the basis."""
    cols = [fusion_mul(FusionElement.basis(a, r), FusionElement.basis(n, r)) for n in range(1, r)]
    return [[cols[n - 1].coeffs[p - 1] for n in range(1, r)] for p in range(1, r)]


# -- trivalent graphs and colorings --------------------------------------------

@dataclass(frozen=True)
class TrivalentGraph:
    """A connected trivalent graph; loops allowed, multi-edges allowed.

    Edges are (u, v) vertex pairs; the vertexless circle (genus one) is
    the single edge (None, None).
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if not self.vertices:
            if self.edges != ((None, None),):
                raise ValueError("a vertexless graph must be the single circle")
            return
        degree = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            if u not in degree or v not in degree:
                raise ValueError("edge endpoint is not a vertex")
            degree[u] += 1
            degree[v] += 1
        if any(d != 3 for d in degree.values()):
            raise ValueError("every vertex must have degree 3 (loops count twice)")
        # connectivity
        adjacency = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.vertices):
            raise ValueError("graph must be connected")

    @property
    def genus(self):
        if not self.vertices:
            return 1
        return len(self.edges) - len(self.vertices) + 1


def circle_graph():
    return TrivalentGraph((), ((None, None),))


def theta_graph():
    return TrivalentGraph((0, 1), ((0, 1), (0, 1), (0, 1)))


def dumbbell_graph():
    return TrivalentGraph((0, 1), ((0, 0), (0, 1), (1, 1)))


def caterpillar_graph(genus: int):
    """A chain of loops joined by bridges; inner circles split into two arcs."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if genus == 1:
        return circle_graph()
    if genus == 2:
        return dumbbell_graph()
    vertices = ["L"]
    for i in range(1, genus - 1):
        vertices += [f"a{i}", f"b{i}"]
    vertices.append("R")
    edges = [("L", "L")]
    prev = "L"
    for i in range(1, genus - 1):
        edges.append((prev, f"a{i}"))
        edges.append((f"a{i}", f"b{i}"))
        edges.append((f"a{i}", f"b{i}"))
        prev = f"b{i}"
    edges.append((prev, "R"))
    edges.append(("R", "R"))
    return TrivalentGraph(tuple(vertices), tuple(edges))


def vertex_admissible(m: int, n: int, p: int, r: int) -> bool:
    return (
        (m + n + p) % 2 == 1
        and abs(m - n) + 1 <= p <= min(m + n - 1, 2 * r - 1 - m - n)
    )


def admissible_colorings(graph: TrivalentGraph, r: int):
    """(count, colorings): exhaustive backtracking over edge colors."""
    edges = graph.edges
    if not graph.vertices:
        colorings = [{0: c} for c in range(1, r)]
        return len(colorings), colorings

    incident = {v: [] for v in graph.vertices}
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)

    # a vertex can be checked once all its edge slots are colored
    last_edge_at = {v: max(slots) for v, slots in incident.items()}
    checks_after = {i: [] for i in range(len(edges))}
    for v, last in last_edge_at.items():
        checks_after[last].append(v)

    colorings = []
    assignment = {}

    def backtrack(i):
        if i == len(edges):
            colorings.append(dict(assignment))
            return
        for color in range(1, r):
            assignment[i] = color
            ok = True
            for v in checks_after[i]:
                m, n, p = (assignment[e] for e in incident[v])
                if not vertex_admissible(m, n, p, r):
                    ok = False
                    break
            if ok:
                backtrack(i + 1)
        del assignment[i]

    backtrack(0)
    return len(colorings), colorings


def verlinde_numeric(genus: int, r: int) -> float:
    """sum_j (eta [j])^{2-2g}; the numeric count of admissible colorings."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    with mpmath.workprec(80):
        total = mpmath.mpf(0)
        for j in range(1, r):
            term = mpmath.sqrt(mpmath.mpf(2) / r) * mpmath.sinpi(mpmath.mpf(j) / r)
            total += term ** (2 - 2 * genus)
        return float(total)


__all__ = [
    "QGroupRep",
    "DualityIso",
    "FusionElement",
    "TrivalentGraph",
    "irrep",
    "dual_rep",
    "d_iso",
    "clebsch_gordan_range",
    "fusion_mul",
    "fusion_from_chebyshev",
    "fusion_fold",
    "fusion_matrix",
    "vertex_admissible",
    "admissible_colorings",
    "verlinde_numeric",
    "circle_graph",
    "theta_graph",
    "dumbbell_graph",
    "caterpillar_graph",
]

"""Weyl quantization of the moduli space of flat SU(2)-connections on the torus.

The moduli space is the pillow case, the torus modulo the antipodal
map; its regular functions are spanned by f(x,y) = 2cos 2pi(px+qy), and
quantization at hbar = 1/2r acts on the odd theta combinations zeta_1,
..., zeta_{r-1} by

    Op(2cos 2pi(px+qy)) zeta_j
        = t^{-pq} (t^{2qj} zeta_{j-p} + t^{-2qj} zeta_{j+p}),

with zeta_0 = 0, zeta_{j+2r} = zeta_j, zeta_{r-j} = -zeta_{r+j}.  This
module is written directly from the cosine side; agreement with the
skein-algebra matrices (rt_torus) is a checked theorem, not shared code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

from . import linalg
from .scalar import CycScalar, t_power


class CosObservable(NamedTuple):
    """The function 2cos 2pi(px+qy); (p,q) and (-p,-q) are the same one."""

    p: int
    q: int


def zeta_fold(j: int, r: int):
    """(sign, index) with zeta_j = sign * zeta_index, index in [1, r-1]."""
    m = j % (2 * r)
    if m == 0 or m == r:
        return 0, None
    if m < r:
        return 1, m
    return -1, 2 * r - m


def weyl_cos_matrix(obs, r: int):
    """Matrix of Op(2cos 2pi(px+qy)) on the zeta basis."""
    if r < 2:
        raise ValueError("r must be >= 2")
    p, q = obs
    n = r - 1
    zero = CycScalar.zero(r)
    mat = [[zero] * n for _ in range(n)]
    pref = t_power(r, -p * q)
    for j in range(1, r):
        for target, phase in ((j - p, 2 * q * j), (j + p, -2 * q * j)):
            sign, idx = zeta_fold(target, r)
            if sign:
                term = pref * t_power(r, phase)
                if sign < 0:
                    term = -term
                mat[idx - 1][j - 1] = mat[idx - 1][j - 1] + term
    return mat


@dataclass(frozen=True)
class WilsonCombination:
    """W_{gamma,n} written in the cosine basis: sum of cosines plus a constant."""

    cosines: tuple
    constant: int


def wilson_decompose(p: int, q: int, n: int) -> WilsonCombination:
    """Expand the n-dimensional Wilson line of the primitive curve (p,q).

    sin(n u)/sin(u) = sum over m = n-1, n-3, ... of 2cos(m u), the m = 0
    term contributing 1; here u = 2pi(px+qy).
    """
    if (p, q) == (0, 0):
        raise ValueError("need a curve, not the constant map")
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError("(p,q) must be primitive")
    if n < 0:
        raise ValueError("dimension must be >= 0")
    cosines = []
    constant = 0
    for m in range(n - 1, -1, -2):
        if m == 0:
            constant = 1
        else:
            cosines.append(CosObservable(m * p, m * q))
    return WilsonCombination(tuple(cosines), constant)


def wilson_cos_matrix(p: int, q: int, n: int, r: int):
    """W_{gamma,n} recomposed through the cosine quantization."""
    comb = wilson_decompose(p, q, n)
    size = r - 1
    acc = [[CycScalar.zero(r)] * size for _ in range(size)]
    for obs in comb.cosines:
        acc = linalg.mat_add(acc, weyl_cos_matrix(obs, r))
    if comb.constant:
        acc = linalg.mat_add(
            acc,
            linalg.mat_scale(
                CycScalar.from_int(comb.constant, r),
                linalg.mat_identity(size, CycScalar.one(r)),
            ),
        )
    return acc


def equivalence_check(r: int, bound: int = None):
    """Compare the cosine quantization with the skein-algebra matrices.

    The two models share the ordered basis (zeta_j matches V^j), so the
    unitary equivalence is the identity: the matrices must agree exactly
    for every (p,q) in the window.
    """
    from .rt_torus import rt_rep_matrix

    if bound is None:
        bound = 3 * r
    checked = 0
    mismatches = []
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            checked += 1
            lhs = weyl_cos_matrix(CosObservable(p, q), r)
            if p == 0 and q == 0:
                rhs = linalg.mat_scale(
                    CycScalar.from_int(2, r), linalg.mat_identity(r - 1, CycScalar.one(r))
                )
            else:
                rhs = rt_rep_matrix((p, q), r)
            if not linalg.mat_eq(lhs, rhs):
                mismatches.append(
                    {
                        "p": p,
                        "q": q,
                        "weyl": [[str(x) for x in row] for row in lhs],
                        "skein": [[str(x) for x in row] for row in rhs],
                    }
                )
    return {"r": r, "checked": checked, "mismatches": mismatches}


def generated_algebra_span(r: int):
    """Exact span of words in the two generating cosine operators."""
    gens = [
        weyl_cos_matrix(CosObservable(1, 0), r),
        weyl_cos_matrix(CosObservable(0, 1), r),
    ]
    n = r - 1
    span = linalg.RowSpan()
    frontier = [linalg.mat_identity(n, CycScalar.one(r))]
    span.add(linalg.flatten(frontier[0]))
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                cand = linalg.mat_mul(g, m)
                if span.add(linalg.flatten(cand)):
                    new.append(cand)
        frontier = new
    return span


def svn_irreducibility(r: int):
    """Cyclic-vector and commutant evidence for irreducibility.

    Every standard basis vector must generate the whole space under the
    algebra spanned by the two generating cosine operators, the span of
    that algebra must be everything, and its commutant must be scalars.
    """
    n = r - 1
    gens = [
        weyl_cos_matrix(CosObservable(1, 0), r),
        weyl_cos_matrix(CosObservable(0, 1), r),
    ]
    cyclic = []
    for j in range(n):
        vec = [CycScalar.one(r) if i == j else CycScalar.zero(r) for i in range(n)]
        span = linalg.RowSpan()
        span.add(vec)
        frontier = [vec]
        while frontier and span.rank < n:
            new = []
            for v in frontier:
                for g in gens:
                    w = linalg.mat_vec(g, v)
                    if span.add(w):
                        new.append(w)
            frontier = new
        cyclic.append(span.rank == n)
    algebra_dim = generated_algebra_span(r).rank
    commutant_dim = _commutant_dimension(gens, n, r)
    return {
        "r": r,
        "cyclic": cyclic,
        "all_cyclic": all(cyclic),
        "algebra_dimension": algebra_dim,
        "commutant_dimension": commutant_dim,
    }


def _commutant_dimension(gens, n, r):
    """Nullity of the commutation equations [G, X] = 0 over the field."""
    rows = linalg.RowSpan()
    zero = CycScalar.zero(r)
    for g in gens:
        for i in range(n):
            for j in range(n):
                # entry (i,j) of GX - XG as a linear form in X
                row = [zero] * (n * n)
                for s in range(n):
                    if g[i][s]:
                        row[s * n + j] = row[s * n + j] + g[i][s]
                    if g[s][j]:
                        row[i * n + s] = row[i * n + s] - g[s][j]
                rows.add(row)
    return n * n - rows.rank


__all__ = [
    "CosObservable",
    "WilsonCombination",
    "zeta_fold",
    "weyl_cos_matrix",
    "wilson_decompose",
    "wilson_cos_matrix",
    "equivalence_check",
    "svn_irreducibility",
    "generated_algebra_span",
]

"""The integer and finite Heisenberg groups and their theta-basis action.

The group H(Z) has elements (p, q, k) with multiplication

    (p,q,k)(p',q',k') = (p+p', q+q', k+k' + (pq'-qp')),

and for even N the finite quotient H(Z_N) acts on the N theta basis
vectors through

    (p,q,k) . theta_j = t^{k - pq - 2jq} theta_{j+p},   t = exp(i*pi/N).

The discrete Fourier transforms rho(h), h in SL(2,Z), intertwine this
action with the mapping-class-group action on exponentials.  rho is
generated by

    rho(S) = N^{-1/2} [t^{2jk}]_{jk},     rho(T) = diag(t^{-j^2}),

whose conjugation actions on the (p,q)-labels are S itself and the
transpose of T.  That pairing is forced: the twist skein that solves the
intertwining equation (1,1) F(T) = F(T) (1,0) has coefficients t^{j^2}
on (0,j) and represents as diag(t^{-j^2}) up to a Gauss-sum scalar, and
no diagonal operator can intertwine the untransposed column action of T.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

import mpmath

from .scalar import ComplexAP, CycScalar, DEFAULT_PREC_BITS
from . import linalg
from .sl2z import IDENTITY, S, T, SL2Z, sl2z_decompose, word_matrix


class HeisElt(NamedTuple):
    """Element (p, q, k) of the integer Heisenberg group."""

    p: int
    q: int
    k: int


def heis_mul(x: HeisElt, y: HeisElt) -> HeisElt:
    return HeisElt(x.p + y.p, x.q + y.q, x.k + y.k + (x.p * y.q - x.q * y.p))


def heis_inverse(x: HeisElt) -> HeisElt:
    return HeisElt(-x.p, -x.q, -x.k)


class FiniteHeisElt(NamedTuple):
    """Canonical representative in H(Z_N): p, q in [0,N), k in [0,2N)."""

    N: int
    p: int
    q: int
    k: int


def heis_reduce(x: HeisElt, N: int) -> FiniteHeisElt:
    """Canonical form in the quotient by {(p,q,k)^N, k even}.

    Reducing p or q by N needs a compensating k shift; plain
    componentwise reduction would break the homomorphism property.
    """
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    p, q, k = x
    while p >= N:
        p, k = p - N, k - N * q
    while p < 0:
        p, k = p + N, k + N * q
    while q >= N:
        q, k = q - N, k + N * p
    while q < 0:
        q, k = q + N, k - N * p
    return FiniteHeisElt(N, p, q, k % (2 * N))


def finite_mul(x: FiniteHeisElt, y: FiniteHeisElt) -> FiniteHeisElt:
    if x.N != y.N:
        raise ValueError("mixed moduli")
    return heis_reduce(heis_mul(HeisElt(x.p, x.q, x.k), HeisElt(y.p, y.q, y.k)), x.N)


def _field_order(N: int) -> int:
    # t = exp(i*pi/N) = zeta_{2N}; CycScalar(r) holds Q(zeta_{4r})
    return N // 2


def t_heis(N: int, e: int) -> CycScalar:
    """t^e with t = exp(i*pi/N), as an exact cyclotomic scalar."""
    return CycScalar.root_power(_field_order(N), e)


def schrodinger_matrix(e: FiniteHeisElt):
    """N x N matrix of (p,q,k): theta_j -> t^{k-pq-2jq} theta_{j+p}."""
    N, p, q, k = e
    r = _field_order(N)
    zero = CycScalar.zero(r)
    mat = [[zero] * N for _ in range(N)]
    for j in range(N):
        mat[(j + p) % N][j] = t_heis(N, k - p * q - 2 * j * q)
    return mat


class HeisAlgElt:
    """Element of the N-th Heisenberg group algebra on basis b(p,q).

    Coefficients are exact scalars in Q(zeta_{2N}); the central generator
    acts as the scalar t, so products fold the cocycle into powers of t.
    """

    def __init__(self, N: int, terms=None):
        if N % 2 or N < 2:
            raise ValueError("N must be even and >= 2")
        self.N = N
        clean = {}
        for key, c in (terms or {}).items():
            if c:
                clean[(key[0] % N, key[1] % N)] = c
        self.terms = clean

    @classmethod
    def basis(cls, N, p, q, coeff=None):
        c = coeff if coeff is not None else CycScalar.one(_field_order(N))
        return cls(N, {(p, q): c})

    @classmethod
    def zero(cls, N):
        return cls(N, {})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            out[key] = c if s is None else s + c
        return HeisAlgElt(self.N, out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return HeisAlgElt(self.N, {key: v * c for key, v in self.terms.items()})

    def __mul__(self, other):
        """Algebra product; the group cocycle becomes a power of t."""
        self._check(other)
        out = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                red = heis_reduce(
                    heis_mul(HeisElt(p1, q1, 0), HeisElt(p2, q2, 0)), self.N
                )
                key = (red.p, red.q)
                term = c1 * c2 * t_heis(self.N, red.k)
                s = out.get(key)
                out[key] = term if s is None else s + term
        return HeisAlgElt(self.N, out)

    def __eq__(self, other):
        if not isinstance(other, HeisAlgElt):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def _check(self, other):
        if self.N != other.N:
            raise ValueError("mixed moduli")

    def __repr__(self):
        return f"HeisAlgElt(N={self.N}, {len(self.terms)} terms)"


def algebra_rep(x: HeisAlgElt):
    """Linear extension of the theta-basis action to the group algebra."""
    N = x.N
    r = _field_order(N)
    zero = CycScalar.zero(r)
    mat = [[zero] * N for _ in range(N)]
    for (p, q), c in x.terms.items():
        for j in range(N):
            i = (j + p) % N
            mat[i][j] = mat[i][j] + c * t_heis(N, -p * q - 2 * j * q)
    return mat


def nctorus_convert(e: HeisElt):
    """(p,q,k) as the noncommutative-torus monomial t^{k-pq} U^p V^q."""
    return (e.p, e.q), e.k - e.p * e.q


def nctorus_convert_inverse(exponents, laurent_power):
    p, q = exponents
    return HeisElt(p, q, laurent_power + p * q)


def mcg_action_abelian(h: SL2Z, e: HeisElt) -> HeisElt:
    """Column action of SL(2,Z) on homology labels: (p,q,k) -> (ap+bq, cp+dq, k)."""
    h.check()
    p, q = h.apply(e.p, e.q)
    return HeisElt(p, q, e.k)


# The conjugation action of rho on quantized exponentials.  On the
# generators it is S -> S and T -> transpose(T); words multiply through.
_OBS_IMAGE = {"S": S, "T": T.transpose()}


def observable_action_matrix(word_or_h) -> SL2Z:
    word = _as_word(word_or_h)
    out = IDENTITY
    for letter, exp in word:
        out = out * (_OBS_IMAGE[letter] ** exp)
    return out


def _as_word(word_or_h):
    if isinstance(word_or_h, SL2Z):
        return sl2z_decompose(word_or_h)
    return list(word_or_h)


# -- discrete Fourier transforms --------------------------------------------

def fourier_generator_exact(letter: str, exp: int, N: int):
    """Exact matrix part of rho(letter^exp); overall positive scalars dropped."""
    r = _field_order(N)
    zero = CycScalar.zero(r)
    if letter == "T":
        return [
            [t_heis(N, -exp * j * j) if i == j else zero for j in range(N)]
            for i in range(N)
        ]
    if letter == "S":
        out = None
        sign = 1 if exp >= 0 else -1
        for _ in range(abs(exp)):
            step = [[t_heis(N, sign * 2 * j * k) for k in range(N)] for j in range(N)]
            out = step if out is None else linalg.mat_mul(out, step)
        return out if out is not None else linalg.mat_identity(N, CycScalar.one(r))
    raise ValueError(f"unknown generator {letter!r}")


def fourier_word_exact(word, N: int):
    """Exact-part product for a word; scalar normalization is dropped."""
    r = _field_order(N)
    out = linalg.mat_identity(N, CycScalar.one(r))
    for letter, exp in word:
        out = linalg.mat_mul(out, fourier_generator_exact(letter, exp, N))
    return out


def fourier_abelian(h, N: int, precision_bits: int = DEFAULT_PREC_BITS):
    """Unitary rho(h) as an mpmath matrix (list of rows), phase-normalized.

    h may be an SL2Z matrix or a word over {S, T}.  The result conjugates
    the theta-basis action of b(p,q) to that of observable_action_matrix(h)
    applied to (p,q); it is canonical up to the remaining 2pi/N phase
    window, which is fixed on the first nonzero entry of column 0.
    """
    word = _as_word(h)
    with mpmath.workprec(precision_bits + 16):
        t = mpmath.expjpi(mpmath.mpf(1) / N)
        inv_sqrt_n = 1 / mpmath.sqrt(N)
        mat = _nmat_identity(N)
        for letter, exp in word:
            if letter == "T":
                gen = [
                    [t ** ((-exp * j * j) % (2 * N)) if i == j else mpmath.mpc(0) for j in range(N)]
                    for i in range(N)
                ]
                mat = _nmat_mul(mat, gen)
            else:
                sign = 1 if exp >= 0 else -1
                for _ in range(abs(exp)):
                    gen = [
                        [inv_sqrt_n * t ** ((sign * 2 * j * k) % (2 * N)) for k in range(N)]
                        for j in range(N)
                    ]
                    mat = _nmat_mul(mat, gen)
        return _phase_normalize(mat, N)


def _nmat_identity(n):
    return [[mpmath.mpc(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _nmat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return [
        [mpmath.fsum(a[i][s] * b[s][j] for s in range(k)) for j in range(m)]
        for i in range(n)
    ]


def _phase_normalize(mat, N):
    n = len(mat)
    top = max(abs(mat[i][j]) for i in range(n) for j in range(n))
    entry = None
    for i in range(n):
        if abs(mat[i][0]) > top * mpmath.mpf(2) ** -40:
            entry = mat[i][0]
            break
    if entry is None:
        return mat
    window = 2 * mpmath.pi / N
    phi = mpmath.arg(entry) % (2 * mpmath.pi)
    shift = mpmath.floor(phi / window) * window
    scale = mpmath.expj(-shift)
    return [[x * scale for x in row] for row in mat]


def f_of_t_skein(N: int) -> HeisAlgElt:
    """The twist skein sum_j t^{j^2} b(0,j); unit norm needs a 1/sqrt(N) factor.

    Its theta-basis representation is a Gauss-sum multiple of diag(t^{-j^2}),
    i.e. of fourier_abelian(T, N).
    """
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    return HeisAlgElt(N, {(0, j): t_heis(N, j * j) for j in range(N)})


def f_of_t_norm(N: int) -> float:
    return 1.0 / math.sqrt(N)


def twist_skein_solve(N: int) -> HeisAlgElt:
    """Solve (1,1) F = F (1,0) for F supported on b(0,j), normalized c_0 = 1.

    Recovers the t^{j^2} coefficients of f_of_t_skein from the
    intertwining equation alone.
    """
    r = _field_order(N)
    one = CycScalar.one(r)
    left = HeisAlgElt.basis(N, 1, 1)
    right = HeisAlgElt.basis(N, 1, 0)
    # b(1,1) b(0,j) = u_j b(1, j+1) and b(0,j) b(1,0) = v_j b(1, j)
    u, v = {}, {}
    for j in range(N):
        prod = left * HeisAlgElt.basis(N, 0, j)
        ((key, coeff),) = prod.terms.items()
        u[(key[1] - 1) % N] = coeff
        prod = HeisAlgElt.basis(N, 0, j) * right
        ((key, coeff),) = prod.terms.items()
        v[key[1]] = coeff
    c = {0: one}
    for m in range(1, N):
        # coefficient match on b(1, m): c_{m-1} u_{m-1} = c_m v_m
        c[m] = c[m - 1] * u[m - 1] / v[m]
    # closure of the cyclic system
    if c[N - 1] * u[N - 1] != c[0] * v[0]:
        raise ArithmeticError("twist constraint system is inconsistent")
    return HeisAlgElt(N, {(0, j): c[j] for j in range(N)})


def matrix_to_heisenberg(mat, N: int) -> HeisAlgElt:
    """Exact coefficients c(p,q) with sum c(p,q) rep(b(p,q)) = mat.

    Inverts the character sum on each shift diagonal:
    c(p,q) = t^{pq} N^{-1} sum_j t^{2jq} mat[j+p, j].
    """
    if len(mat) != N or any(len(row) != N for row in mat):
        raise ValueError("matrix size does not match N")
    r = _field_order(N)
    terms = {}
    for p in range(N):
        diag = [mat[(j + p) % N][j] for j in range(N)]
        for q in range(N):
            acc = CycScalar.zero(r)
            for j in range(N):
                if diag[j]:
                    acc = acc + diag[j] * t_heis(N, 2 * j * q)
            if acc:
                terms[(p, q)] = acc * t_heis(N, p * q) / N
    return HeisAlgElt(N, terms)


# -- theta vectors and the abelian surgery element ---------------------------

@dataclass(frozen=True)
class ThetaVector:
    """Coefficient vector over a named theta-like basis."""

    basis_tag: str  # "abelian_theta" or "nonabelian_zeta"
    size_param: int  # N for the abelian basis, r for the zeta basis
    coeffs: tuple

    def __post_init__(self):
        want = self.size_param if self.basis_tag == "abelian_theta" else self.size_param - 1
        if len(self.coeffs) != want:
            raise ValueError("coefficient length does not match basis")


def omega_u1(N: int, precision_bits: int = DEFAULT_PREC_BITS) -> ThetaVector:
    """The constant vector N^{-1/2} (1, ..., 1); column 0 of rho(S)."""
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    with mpmath.workprec(precision_bits):
        c = 1 / mpmath.sqrt(N)
        return ThetaVector("abelian_theta", N, tuple([c] * N))


# -- Maslov index and the Z-extension ----------------------------------------

class LagrangianLine(NamedTuple):
    """A line in the plane spanned by a primitive integer vector."""

    a: int
    b: int

    @classmethod
    def of(cls, a, b):
        if a == 0 and b == 0:
            raise ValueError("a Lagrangian line needs a nonzero direction")
        g = math.gcd(abs(a), abs(b))
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(a, b)

    def apply(self, h: SL2Z):
        return LagrangianLine.of(*h.apply(self.a, self.b))


def _symp(u, v):
    return u[0] * v[1] - v[0] * u[1]


def maslov(l1: LagrangianLine, l2: LagrangianLine, l3: LagrangianLine) -> int:
    """Signature of Q(x) = w12 x1 x2 + w23 x2 x3 + w31 x3 x1 on l1+l2+l3.

    The doubled symmetric matrix [[0,w12,w31],[w12,0,w23],[w31,w23,0]] has
    characteristic polynomial x^3 - (w12^2+w23^2+w31^2) x - 2 w12 w23 w31,
    all roots real; positive/negative root counts come from Descartes'
    rule applied exactly.
    """
    w12 = _symp(l1, l2)
    w23 = _symp(l2, l3)
    w31 = _symp(l3, l1)
    s = w12 * w12 + w23 * w23 + w31 * w31
    p = 2 * w12 * w23 * w31
    pos = _sign_changes([1, 0, -s, -p])
    neg = _sign_changes([-1, 0, s, -p])
    return pos - neg


def _sign_changes(coeffs):
    signs = [c for c in coeffs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if (x > 0) != (y > 0))


def extended_compose(first, second, line: LagrangianLine):
    """((h',n') o (h,n)) in the Z-extension with the Maslov cocycle.

    The cocycle is tau(L, h'(L), h'h(L)); taking h(L) as the middle line
    instead fails the cocycle identity, hence associativity, on words of
    length three.
    """
    h2, n2 = first
    h1, n1 = second
    h2.check()
    h1.check()
    tau = maslov(line, line.apply(h2), line.apply(h2 * h1))
    return (h2 * h1, n1 + n2 - tau)


__all__ = [
    "HeisElt",
    "FiniteHeisElt",
    "HeisAlgElt",
    "ThetaVector",
    "LagrangianLine",
    "heis_mul",
    "heis_inverse",
    "heis_reduce",
    "finite_mul",
    "schrodinger_matrix",
    "algebra_rep",
    "nctorus_convert",
    "nctorus_convert_inverse",
    "mcg_action_abelian",
    "observable_action_matrix",
    "fourier_abelian",
    "fourier_word_exact",
    "f_of_t_skein",
    "f_of_t_norm",
    "twist_skein_solve",
    "matrix_to_heisenberg",
    "omega_u1",
    "maslov",
    "extended_compose",
]

"""Exact arithmetic in the cyclotomic fields Q(zeta_{4r}).

The whole library works over the field generated by t = zeta_{4r} =
exp(i*pi/2r).  Elements are stored as integer coefficient vectors in the
power basis 1, zeta, ..., zeta^{phi(4r)-1} (reduced modulo the 4r-th
cyclotomic polynomial) over a single positive denominator, so equality
testing, inversion and linear algebra are exact.  A quotient by the
cyclotomic polynomial, rather than by x^{4r}-1, is essential: the former
is a field, the latter has zero divisors.

Also provided: quantized integers [n], Chebyshev polynomials of both
kinds with the downward extensions S_{-1} = 0 and S_{-2} = -1, Laurent
polynomials over Q for generic-parameter computations, and
arbitrary-precision complex embedding via mpmath.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath

DEFAULT_PREC_BITS = 128


# ---------------------------------------------------------------------------
# integer polynomials (dense tuples, constant term first)
# ---------------------------------------------------------------------------

def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return tuple(out)


def poly_trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def poly_divmod_exact(n, d):
    """Quotient/remainder of integer polynomials; requires exact leading division."""
    n = list(n)
    q = [0] * max(len(n) - len(d) + 1, 0)
    while len(poly_trim(n)) >= len(d):
        n = list(poly_trim(n))
        shift = len(n) - len(d)
        lead, rem = divmod(n[-1], d[-1])
        if rem:
            raise ArithmeticError("non-exact polynomial division")
        q[shift] = lead
        for i, c in enumerate(d):
            n[shift + i] -= lead * c
    return poly_trim(q), poly_trim(n)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int):
    """Coefficients of the m-th cyclotomic polynomial Phi_m.

    Computed by dividing x^m - 1 by Phi_d for all proper divisors d of m.
    """
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = tuple([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly, rem = poly_divmod_exact(poly, cyclotomic_poly(d))
            assert rem == ()
    return poly


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@functools.lru_cache(maxsize=None)
def _reduction_data(m: int):
    """(degree, tail) with x^deg = sum(tail[i] x^i) modulo Phi_m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    return deg, tuple(-c for c in phi[:-1])


def _reduce_mod_cyclotomic(vec, m):
    """Reduce an integer coefficient list in place modulo Phi_m."""
    deg, tail = _reduction_data(m)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - deg
            for j, tc in enumerate(tail):
                if tc:
                    vec[base + j] += c * tc
    del vec[deg:]
    while len(vec) < deg:
        vec.append(0)
    return vec


@functools.lru_cache(maxsize=None)
def _root_power_vec(m: int, e: int):
    """Coefficient vector of zeta_m^e (0 <= e < m) reduced modulo Phi_m."""
    deg, _ = _reduction_data(m)
    vec = [0] * (e + 1)
    vec[e] = 1
    return tuple(_reduce_mod_cyclotomic(vec, m))


def _content(vec):
    g = 0
    for c in vec:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


class CycScalar:
    """An exact element of Q(zeta_{4r}), zeta_{4r} = exp(i*pi/2r).

    Stored as an integer vector over a common positive denominator in the
    power basis modulo Phi_{4r}.  All arithmetic is exact; two elements are
    equal iff their normalized vectors agree.  Instances are immutable and
    safe to share between threads.
    """

    __slots__ = ("r", "num", "den")

    def __init__(self, r: int, num, den: int = 1, _normalized: bool = False):
        if r < 1:
            raise ValueError("order parameter r must be >= 1")
        self.r = r
        if _normalized:
            self.num = num
            self.den = den
            return
        deg = euler_phi(4 * r)
        vec = list(num)
        if len(vec) > deg:
            vec = _reduce_mod_cyclotomic(vec, 4 * r)
        elif len(vec) < deg:
            vec = vec + [0] * (deg - len(vec))
        if den < 0:
            den = -den
            vec = [-c for c in vec]
        elif den == 0:
            raise ZeroDivisionError("zero denominator")
        g = gcd(_content(vec), den)
        if g > 1:
            vec = [c // g for c in vec]
            den //= g
        self.num = tuple(vec)
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, r):
        return cls(r, (0,) * euler_phi(4 * r), 1, _normalized=True)

    @classmethod
    def one(cls, r):
        return cls.from_int(1, r)

    @classmethod
    def from_int(cls, n, r):
        vec = [0] * euler_phi(4 * r)
        vec[0] = n
        return cls(r, tuple(vec), 1, _normalized=True)

    @classmethod
    def from_fraction(cls, q, r):
        q = Fraction(q)
        vec = [0] * euler_phi(4 * r)
        vec[0] = q.numerator
        return cls(r, tuple(vec), q.denominator, _normalized=True)

    @classmethod
    def root_power(cls, r, e):
        """zeta_{4r}^e as a field element (e taken modulo 4r)."""
        m = 4 * r
        return cls(r, _root_power_vec(m, e % m), 1, _normalized=True)

    # -- ring/field operations ---------------------------------------------

    def _check(self, other):
        if self.r != other.r:
            raise ValueError(f"mixed cyclotomic orders r={self.r} and r={other.r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(other, self.r)
        elif not isinstance(other, CycScalar):
            return NotImplemented
        self._check(other)
        da, db = self.den, other.den
        if da == db:
            return CycScalar(self.r, [a + b for a, b in zip(self.num, other.num)], da)
        return CycScalar(
            self.r, [a * db + b * da for a, b in zip(self.num, other.num)], da * db
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.r, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(other, self.r)
        elif not isinstance(other, CycScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycScalar(self.r, tuple(c * other for c in self.num), self.den)
        if isinstance(other, Fraction):
            return CycScalar(
                self.r,
                tuple(c * other.numerator for c in self.num),
                self.den * other.denominator,
            )
        if not isinstance(other, CycScalar):
            return NotImplemented
        self._check(other)
        prod = list(poly_mul(self.num, other.num))
        if not prod:
            return CycScalar.zero(self.r)
        _reduce_mod_cyclotomic(prod, 4 * self.r)
        return CycScalar(self.r, prod, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        m = 4 * self.r
        phi = [Fraction(c) for c in cyclotomic_poly(m)]
        a = [Fraction(c, self.den) for c in self.num]
        # Bezout: find u with a*u = 1 (mod Phi_m).
        r0, r1 = phi, _ftrim(a)
        s0, s1 = [], [Fraction(1)]
        while True:
            q, rem = _fdivmod(r0, r1)
            rem = _ftrim(rem)
            if not rem:
                break
            s0, s1 = s1, _ftrim(_fsub(s0, _fmul(q, s1)))
            r0, r1 = r1, rem
        lead = r1[-1]
        if len(r1) != 1:
            raise ArithmeticError("element is a zero divisor; Phi reduction broken")
        inv = [c / lead for c in s1]
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        vec = [int(c * den) for c in inv]
        return CycScalar(self.r, vec, den)

    def __truediv__(self, other):
        if isinstance(other, int):
            return CycScalar(self.r, self.num, self.den * other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycScalar.one(self.r)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == CycScalar.from_int(other, self.r)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.r == other.r and self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.r, self.num, self.den))

    def is_zero(self):
        return all(c == 0 for c in self.num)

    def __bool__(self):
        return not self.is_zero()

    # -- views ---------------------------------------------------------------

    @property
    def coeffs(self):
        """Coefficients in the power basis as Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def conjugate(self):
        """Complex conjugation, i.e. the Galois map zeta -> zeta^{-1}."""
        m = 4 * self.r
        out = CycScalar.zero(self.r)
        for e, c in enumerate(self.num):
            if c:
                out = out + CycScalar.root_power(self.r, -e) * c
        return CycScalar(self.r, out.num, out.den * self.den)

    def embed(self, precision_bits: int = DEFAULT_PREC_BITS):
        """Numerical value at zeta = exp(i*pi/2r) as a ComplexAP."""
        m = 4 * self.r
        with mpmath.workprec(precision_bits + 16):
            zeta = mpmath.expjpi(mpmath.mpf(2) / m)
            acc = mpmath.mpc(0)
            for c in reversed(self.num):
                acc = acc * zeta + c
            acc = acc / self.den
            return ComplexAP(acc.real, acc.imag, precision_bits)

    def to_complex(self) -> complex:
        """Fast double-precision value (for numeric sweeps, not certified)."""
        m = 4 * self.r
        root = _float_root(m)
        acc = 0j
        for c in reversed(self.num):
            acc = acc * root + c
        return acc / self.den

    def to_json(self):
        return {"r": self.r, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        r = obj["r"]
        vals = [Fraction(s) for s in obj["coeffs"]]
        if len(vals) != euler_phi(4 * r):
            raise ValueError("coefficient vector has wrong length")
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        return cls(r, [int(v * den) for v in vals], den)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"CycScalar(r={self.r}: {body})"


@functools.lru_cache(maxsize=None)
def _float_root(m):
    import cmath

    return cmath.exp(2j * cmath.pi / m)


# Fraction-polynomial helpers used only by CycScalar.inverse.

def _ftrim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return list(a[:n])


def _fsub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _fmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _fdivmod(n, d):
    n = _ftrim(n)
    d = _ftrim(d)
    q = [Fraction(0)] * max(len(n) - len(d) + 1, 1)
    while n and len(n) >= len(d):
        shift = len(n) - len(d)
        coef = n[-1] / d[-1]
        q[shift] = coef
        for i, c in enumerate(d):
            n[shift + i] -= coef * c
        n = _ftrim(n)
    return q, n


# ---------------------------------------------------------------------------
# quantized integers and Gauss sums
# ---------------------------------------------------------------------------

def t_power(r: int, e: int) -> CycScalar:
    """t^e where t = zeta_{4r} = exp(i*pi/2r)."""
    return CycScalar.root_power(r, e)


def qint(n: int, r: int) -> CycScalar:
    """The quantized integer [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).

    For n >= 1 this equals t^{2(n-1)} + t^{2(n-3)} + ... + t^{-2(n-1)},
    which is how it is computed here (no division needed); [0] = 0 and
    [-n] = -[n].
    """
    if r < 2:
        raise ValueError("qint needs r >= 2")
    if n == 0:
        return CycScalar.zero(r)
    if n < 0:
        return -qint(-n, r)
    acc = CycScalar.zero(r)
    for i in range(n):
        acc = acc + t_power(r, 2 * (n - 1 - 2 * i))
    return acc


def qint_factorial(n: int, r: int) -> CycScalar:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    acc = CycScalar.one(r)
    for i in range(1, n + 1):
        acc = acc * qint(i, r)
    return acc


def gauss_sum(j: int, r: int) -> CycScalar:
    """sum_{k=1}^{r-1} [jk][k] t^{-k^2}, exactly.

    Equals a j-independent constant times [j] t^{j^2}; the constant is
    gauss_sum(1, r) * t^{-1}.
    """
    if r < 2:
        raise ValueError("gauss_sum needs r >= 2")
    acc = CycScalar.zero(r)
    for k in range(1, r):
        acc = acc + qint(j * k, r) * qint(k, r) * t_power(r, -k * k)
    return acc


# ---------------------------------------------------------------------------
# Chebyshev polynomials (integer coefficients, constant term first)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def cheb_s(n: int):
    """Chebyshev polynomial of the second kind S_n.

    S_0 = 1, S_1 = x, S_{n+1} = x S_n - S_{n-1}; running the recursion
    backwards fixes S_{-1} = 0 and S_{-2} = -1.
    """
    if n < -2:
        raise ValueError("cheb_s defined for n >= -2")
    if n == -2:
        return (-1,)
    if n == -1:
        return ()
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    return poly_trim(
        tuple(
            a - b
            for a, b in zip(
                (0,) + cheb_s(n - 1), cheb_s(n - 2) + (0, 0)
            )
        )
    )


@functools.lru_cache(maxsize=None)
def cheb_t(n: int):
    """Chebyshev polynomial of the first kind, normalized T_0 = 2, T_1 = x."""
    if n < 0:
        raise ValueError("cheb_t defined for n >= 0")
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    return poly_trim(
        tuple(
            a - b
            for a, b in zip(
                (0,) + cheb_t(n - 1), cheb_t(n - 2) + (0, 0)
            )
        )
    )


def poly_eval(poly, x, one=None):
    """Evaluate an integer polynomial at x (anything with +, *, int-mul)."""
    if one is None:
        one = 1
    acc = None
    for c in reversed(poly):
        if acc is None:
            acc = one * c
        else:
            acc = acc * x + one * c
    if acc is None:
        return one * 0
    return acc


# ---------------------------------------------------------------------------
# Laurent polynomials over Q (generic-parameter coefficient ring)
# ---------------------------------------------------------------------------

class LaurentPoly:
    """A Laurent polynomial in one variable with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls, e=1, coeff=1):
        return cls({e: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def specialize(self, r: int) -> CycScalar:
        """Evaluate at t = zeta_{4r}."""
        acc = CycScalar.zero(r)
        for e, c in self.terms.items():
            acc = acc + t_power(r, e) * c
        return acc

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"{c}*t^{e}" for e, c in sorted(self.terms.items())]
        return "LaurentPoly(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# arbitrary-precision complex values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexAP:
    """A complex number carried at an explicit binary precision."""

    re: object
    im: object
    precision_bits: int = DEFAULT_PREC_BITS

    def to_mpc(self):
        return mpmath.mpc(self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        with mpmath.workprec(self.precision_bits + 16):
            return abs(mpmath.mpc(self.re, self.im))

    def __sub__(self, other):
        prec = max(self.precision_bits, getattr(other, "precision_bits", 0))
        with mpmath.workprec(prec + 16):
            d = self.to_mpc() - (other.to_mpc() if isinstance(other, ComplexAP) else mpmath.mpc(other))
            return ComplexAP(d.real, d.imag, prec)

    def __add__(self, other):
        prec = max(self.precision_bits, getattr(other, "precision_bits", 0))
        with mpmath.workprec(prec + 16):
            d = self.to_mpc() + (other.to_mpc() if isinstance(other, ComplexAP) else mpmath.mpc(other))
            return ComplexAP(d.real, d.imag, prec)

    def __mul__(self, other):
        prec = max(self.precision_bits, getattr(other, "precision_bits", 0))
        with mpmath.workprec(prec + 16):
            d = self.to_mpc() * (other.to_mpc() if isinstance(other, ComplexAP) else mpmath.mpc(other))
            return ComplexAP(d.real, d.imag, prec)

    def to_json(self):
        return {"re": mpmath.nstr(mpmath.mpf(self.re), 17), "im": mpmath.nstr(mpmath.mpf(self.im), 17)}


def embed(s: CycScalar, precision_bits: int = DEFAULT_PREC_BITS) -> ComplexAP:
    """Module-level alias for CycScalar.embed."""
    return s.embed(precision_bits)

"""Shifted Chebyshev coefficients d_k(a) and the power series P_a(T), Q(T).

``P_a(X) = 2 - 2*T_a(1 - X/2) = d_1(a) X + ... + d_a(a) X^a`` for integers
``a >= 0``.  The coefficient map ``a -> d_k(a)`` is l-adically continuous,
so ``d_k`` is evaluated at any ``a`` in Z_l through

    d_k(a) = (-1)^(k-1) * a * (a+k-1)(a+k-2)...(a-k+1) / ((2k-1)! * k)

with the l-part of the denominator cancelled exactly and the unit part
inverted.  Each such division costs ``ord_l((2k-1)! * k)`` digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import InsufficientPrecision, InternalConsistencyError
from .padic import PadicInt, make_from_integer, valuation
from .seeds import IntegerSeed, SeedSpec


@lru_cache(maxsize=None)
def _recurrence_table(a: int) -> tuple:
    if a == 0:
        return ()
    if a == 1:
        return ((0,), (0, 1))
    prev = _recurrence_table(a - 1)
    # P_a = X * (a^2 - sum_{j<a} (a-j) P_j)
    inner = [0] * a
    inner[0] = a * a
    for j in range(1, a):
        for k, c in enumerate(prev[j]):
            inner[k] -= (a - j) * c
    return prev + ((0, *inner),)


def p_recurrence(a: int) -> tuple[int, ...]:
    """Coefficients ``(0, d_1(a), ..., d_a(a))`` of P_a from the defining recurrence.

    Quadratic in ``a``; kept as an independent check on :func:`coeff_closed`.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if a == 0:
        return (0,)
    return _recurrence_table(a)[a]


def coeff_closed(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k > n:
        return 0
    num = comb(n + k - 1, 2 * k - 1) * n
    q, r = divmod(num, k)
    assert r == 0
    return q if k % 2 else -q


def integer_coeff(a: int, k: int) -> int:
    """d_k(a) for any integer a; d_k is even in a and vanishes at 0."""
    return 0 if a == 0 else coeff_closed(abs(a), k)


def legendre(n: int, ell: int) -> int:
    """ord_l(n!)."""
    e, p = 0, ell
    while p <= n:
        e += n // p
        p *= ell
    return e


def coeff_loss(ell: int, k: int) -> int:
    """Digits lost computing d_k: ord_l((2k-1)! * k)."""
    e, kk = legendre(2 * k - 1, ell), k
    while kk % ell == 0:
        kk //= ell
        e += 1
    return e


def precision_buffer(ell: int, K: int) -> int:
    return max(coeff_loss(ell, k) for k in range(1, K + 1))


def coeff_padic(a: PadicInt, k: int) -> PadicInt:
    """d_k(a) for ``a`` in Z_l; the result has ``a.precision - coeff_loss(l, k)`` digits."""
    ell = a.prime
    b = coeff_loss(ell, k)
    out_prec = a.precision - b
    if out_prec < 1:
        raise InsufficientPrecision(
            f"d_{k} needs more than {b} digits of input, got {a.precision}")
    m = a.modulus
    num = a.residue
    for j in range(-(k - 1), k):
        num = num * (a.residue + j) % m
    den_unit = factorial(2 * k - 1) * k // ell ** b
    if num % ell ** b:
        raise InternalConsistencyError("numerator not divisible by the l-part of the denominator")
    out_mod = ell ** out_prec
    value = (num // ell ** b) * pow(den_unit, -1, out_mod) % out_mod
    if k % 2 == 0:
        value = -value % out_mod
    return PadicInt(ell, out_prec, value)


@dataclass(frozen=True)
class PadicSeries:
    """Truncation ``c_1 T + ... + c_K T^K`` of a series in Z_l[[T]].

    ``tail_zero`` records that every coefficient beyond ``K`` is known to vanish
    (the series is a polynomial of degree at most K).
    """
    prime: int
    coefficients: tuple
    tail_zero: bool = False

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least one coefficient")
        if any(c.prime != self.prime for c in self.coefficients):
            raise ValueError("coefficient prime mismatch")

    @property
    def K(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k):
        """``series[k]`` is c_k, 1-based."""
        if not 1 <= k <= self.K:
            raise IndexError(k)
        return self.coefficients[k - 1]

    def __add__(self, other):
        if other.prime != self.prime:
            raise ValueError("prime mismatch")
        K = min(self.K, other.K)
        tail = (self.tail_zero and other.tail_zero and self.K == other.K)
        return PadicSeries(self.prime,
                           tuple(x + y for x, y in zip(self.coefficients[:K], other.coefficients[:K])),
                           tail)

    def scaled(self, m: int) -> PadicSeries:
        """Multiply by l^m; each coefficient gains m known digits."""
        f = self.prime ** m
        return PadicSeries(self.prime, tuple(
            PadicInt(self.prime, c.precision + m, c.residue * f) for c in self.coefficients),
            self.tail_zero)

    def valuations(self):
        return [valuation(c) for c in self.coefficients]

    def with_precision(self, n: int) -> PadicSeries:
        return PadicSeries(self.prime, tuple(c.with_precision(n) for c in self.coefficients),
                           self.tail_zero)


def series_P(seed, K: int, ell: int, N: int) -> PadicSeries:
    """P_a(T) to K terms, every coefficient to exactly N digits."""
    if K < 1:
        raise ValueError("K must be positive")
    if isinstance(seed, IntegerSeed):
        coeffs = tuple(make_from_integer(integer_coeff(seed.n, k), ell, N) for k in range(1, K + 1))
        return PadicSeries(ell, coeffs, abs(seed.n) <= K)
    a = seed.resolve(ell, N + precision_buffer(ell, K))
    return PadicSeries(ell, tuple(coeff_padic(a, k).with_precision(N) for k in range(1, K + 1)))


def series_Q(spec: SeedSpec, K: int, N: int) -> PadicSeries:
    """Q(T) = P_{a_1}(T) + ... + P_{a_t}(T)."""
    spec.require_unit_seed()
    parts = [series_P(s, K, spec.prime, N) for s in spec.seeds]
    q = parts[0]
    for p in parts[1:]:
        q = q + p
    square_sum = sum((a * a for a in spec.resolve(N)), make_from_integer(0, spec.prime, N))
    if q[1] != square_sum:
        raise InternalConsistencyError("c_1 differs from the sum of squared seeds")
    return q

"""Fixed-precision arithmetic in the ring of l-adic integers.

An element is stored as a residue modulo ``prime**precision``.  Precision
travels with the value: binary operations return the smaller of the two
operand precisions and never silently gain digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BranchInvalid,
    DenominatorNotUnit,
    EvenPrimeUnsupported,
    NotAResidue,
    NotAUnit,
    NotPrime,
    PrecisionExceeded,
    PrimeMismatch,
    ZeroInput,
)

EXACT = "exact"
AT_LEAST = "at-least"


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(ell: int) -> int:
    if not isinstance(ell, int) or not is_prime(ell):
        raise NotPrime(f"{ell!r} is not a prime")
    return ell


@dataclass(frozen=True)
class ValuationResult:
    kind: str
    value: int

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    def __str__(self):
        return str(self.value) if self.exact else f">={self.value}"


@dataclass(frozen=True)
class PadicInt:
    prime: int
    precision: int
    residue: int

    def __post_init__(self):
        check_prime(self.prime)
        if self.precision < 1:
            raise ValueError(f"precision must be positive, got {self.precision}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue out of canonical range")

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def is_unit(self) -> bool:
        return self.residue % self.prime != 0

    def with_precision(self, precision: int) -> PadicInt:
        """Drop digits.  Raising precision is refused: the digits are unknown."""
        if precision > self.precision:
            raise PrecisionExceeded(
                f"cannot raise precision from {self.precision} to {precision}")
        return PadicInt(self.prime, precision, self.residue % self.prime ** precision)

    def _coerce(self, other) -> PadicInt:
        if isinstance(other, int):
            return make_from_integer(other, self.prime, self.precision)
        if not isinstance(other, PadicInt):
            return NotImplemented
        if other.prime != self.prime:
            raise PrimeMismatch(f"Z_{self.prime} vs Z_{other.prime}")
        return other

    def _binary(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.precision, other.precision)
        return PadicInt(self.prime, n, op(self.residue, other.residue) % self.prime ** n)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return PadicInt(self.prime, self.precision, -self.residue % self.modulus)

    def __str__(self):
        return render_digits(self, self.precision)

    def __repr__(self):
        return f"PadicInt({self.prime}, {self.precision}, {self.residue})"


def make_from_integer(n: int, ell: int, precision: int) -> PadicInt:
    return PadicInt(ell, precision, n % ell ** precision)


def make_from_rational(p: int, q: int, ell: int, precision: int) -> PadicInt:
    if q % ell == 0:
        raise DenominatorNotUnit(f"{ell} divides the denominator {q}")
    m = ell ** precision
    return PadicInt(ell, precision, p * pow(q, -1, m) % m)


def add(x: PadicInt, y: PadicInt) -> PadicInt:
    return x + y


def sub(x: PadicInt, y: PadicInt) -> PadicInt:
    return x - y


def mul(x: PadicInt, y: PadicInt) -> PadicInt:
    return x * y


def invert(x: PadicInt) -> PadicInt:
    if not x.is_unit():
        raise NotAUnit(f"{x!r} is divisible by {x.prime}")
    return PadicInt(x.prime, x.precision, pow(x.residue, -1, x.modulus))


def valuation(x: PadicInt) -> ValuationResult:
    if x.residue == 0:
        return ValuationResult(AT_LEAST, x.precision)
    return ValuationResult(EXACT, big_ord(x.residue, x.prime))


def big_ord(n: int, ell: int) -> int:
    """Exponent of the largest power of ``ell`` dividing the nonzero integer ``n``."""
    if n == 0:
        raise ZeroInput("the valuation of 0 is infinite")
    n = abs(n)
    if n % ell:
        return 0
    # Square the divisor while it still divides; keeps huge inputs cheap.
    e = 0
    powers = [ell]
    while n % (powers[-1] ** 2) == 0:
        powers.append(powers[-1] ** 2)
    for i in range(len(powers) - 1, -1, -1):
        if n % powers[i] == 0:
            n //= powers[i]
            e += 1 << i
    while n % ell == 0:
        n //= ell
        e += 1
    return e


def hensel_sqrt(m: int, ell: int, branch: int, precision: int) -> PadicInt:
    """Square root of ``m`` congruent to ``branch`` mod ``ell``, by Newton lifting."""
    check_prime(ell)
    if ell == 2:
        raise EvenPrimeUnsupported("2-adic square roots are not supported")
    if m % ell == 0:
        raise NotAResidue(f"{m} is not a unit mod {ell}")
    if pow(m, (ell - 1) // 2, ell) != 1:
        raise NotAResidue(f"{m} is not a square mod {ell}")
    if (branch * branch - m) % ell:
        raise BranchInvalid(f"{branch}^2 is not {m} mod {ell}")
    x = branch % ell
    known = 1
    while known < precision:
        known = min(2 * known, precision)
        mod = ell ** known
        x = (x - (x * x - m) * pow(2 * x, -1, mod)) % mod
    return PadicInt(ell, precision, x % ell ** precision)


def digits(x: PadicInt, k: int) -> list[int]:
    if k > x.precision:
        raise PrecisionExceeded(f"{k} digits requested, only {x.precision} known")
    out = []
    r = x.residue
    for _ in range(k):
        r, d = divmod(r, x.prime)
        out.append(d)
    return out


def render_digits(x: PadicInt, k: int) -> str:
    """Base-l expansion ``a0.a1a2...`` of the first ``k`` digits, lowest first.

    For primes above 9 the digits after the dot are separated by spaces,
    e.g. ``"3.4 9 6"`` in Z_13.
    """
    ds = digits(x, k)
    sep = " " if x.prime > 9 else ""
    return f"{ds[0]}." + sep.join(str(d) for d in ds[1:])


def parse_digits(text: str, ell: int) -> int:
    """Inverse of :func:`render_digits`: the residue modulo ``ell**k``."""
    head, _, tail = text.rstrip("…").partition(".")
    ds = [int(head)] + ([int(d) for d in tail.split()] if ell > 9 else [int(d) for d in tail])
    return sum(d * ell ** i for i, d in enumerate(ds))

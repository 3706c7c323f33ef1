"""Seed descriptors: the l-adic integers a_1, ..., a_t that define a tower."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoUnitSeed, SemanticError
from .padic import PadicInt, check_prime, hensel_sqrt, make_from_integer, make_from_rational


@dataclass(frozen=True)
class IntegerSeed:
    n: int

    def resolve(self, ell, precision):
        return make_from_integer(self.n, ell, precision)

    def is_unit(self, ell):
        return self.n % ell != 0

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class RationalSeed:
    """``p/q`` in lowest terms.  Integral values collapse to :class:`IntegerSeed` in :func:`parse_seed`."""
    p: int
    q: int

    def __post_init__(self):
        f = Fraction(self.p, self.q)
        object.__setattr__(self, "p", f.numerator)
        object.__setattr__(self, "q", f.denominator)

    def resolve(self, ell, precision):
        return make_from_rational(self.p, self.q, ell, precision)

    def is_unit(self, ell):
        return self.p % ell != 0

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class SqrtSeed:
    """The square root of ``m`` whose residue mod l is ``branch``."""
    m: int
    branch: int

    def resolve(self, ell, precision):
        return hensel_sqrt(self.m, ell, self.branch, precision)

    def is_unit(self, ell):
        return self.m % ell != 0

    def __str__(self):
        return f"sqrt({self.m})@{self.branch}"


_INT = re.compile(r"^\s*([+-]?\d+)\s*$")
_RAT = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")
_SQRT = re.compile(r"^\s*sqrt\(\s*([+-]?\d+)\s*\)\s*@\s*(\d+)\s*$")


def parse_seed(text):
    """Parse ``"7"``, ``"1/3"`` or ``"sqrt(3)@4"``.  Raises ValueError on bad syntax."""
    if isinstance(text, int) and not isinstance(text, bool):
        return IntegerSeed(text)
    if not isinstance(text, str):
        raise ValueError(f"seed must be a string or integer, got {text!r}")
    if m := _INT.match(text):
        return IntegerSeed(int(m.group(1)))
    if m := _RAT.match(text):
        p, q = int(m.group(1)), int(m.group(2))
        if q == 0:
            raise ValueError(f"zero denominator in seed {text!r}")
        f = Fraction(p, q)
        if f.denominator == 1:
            return IntegerSeed(f.numerator)
        return RationalSeed(f.numerator, f.denominator)
    if m := _SQRT.match(text):
        return SqrtSeed(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unrecognised seed {text!r}; expected n, p/q or sqrt(m)@r")


@dataclass(frozen=True)
class SeedSpec:
    prime: int
    seeds: tuple

    def __post_init__(self):
        try:
            check_prime(self.prime)
        except ValueError as exc:
            raise SemanticError(str(exc)) from None
        object.__setattr__(self, "seeds", tuple(
            s if not isinstance(s, (str, int)) else parse_seed(s) for s in self.seeds))
        if not self.seeds:
            raise SemanticError("at least one seed is required")
        for s in self.seeds:
            try:
                s.resolve(self.prime, 1)
            except ArithmeticError as exc:
                raise SemanticError(f"seed {s} is not in Z_{self.prime}: {exc}") from None

    @property
    def t(self) -> int:
        return len(self.seeds)

    def has_unit_seed(self) -> bool:
        return any(s.is_unit(self.prime) for s in self.seeds)

    def require_unit_seed(self):
        if not self.has_unit_seed():
            raise NoUnitSeed(f"no seed is a unit in Z_{self.prime}; the tower is disconnected")

    def resolve(self, precision) -> list[PadicInt]:
        return [s.resolve(self.prime, precision) for s in self.seeds]

    def __str__(self):
        return f"l={self.prime}, seeds=({', '.join(map(str, self.seeds))})"

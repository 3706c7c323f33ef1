"""Iwasawa invariants mu and lambda read off a truncated Q(T)."""

from __future__ import annotations

from dataclasses import dataclass

from .chebyshev import PadicSeries
from .errors import AllCoefficientsIndistinguishableFromZero
from .padic import make_from_integer
from .seeds import SeedSpec


@dataclass(frozen=True)
class InvariantResult:
    mu: int
    lam: int
    k0: int
    provisional: bool
    n0_bound: int
    nu: int | None = None
    reason: str = ""


def n0_sufficient(ell: int, lam: int) -> int:
    """Least n0 >= 0 with l^n0 >= l/(l-1) * (lam+1), in exact integers."""
    if lam < 1:
        raise ValueError("lambda must be positive")
    n0, p = 0, 1
    while p * (ell - 1) < ell * (lam + 1):
        n0 += 1
        p *= ell
    return n0


def extract_mu_lambda(Q: PadicSeries) -> InvariantResult:
    """mu = min v(c_j), lambda = 2*k0 - 1 for the first k0 attaining mu.

    The result is provisional when truncation or precision could hide a
    smaller valuation.  A unit coefficient settles mu = 0; a series known
    to be a polynomial of degree <= K settles mu outright.
    """
    vals = Q.valuations()
    exact = [(j, v.value) for j, v in enumerate(vals, 1) if v.exact]
    if not exact:
        raise AllCoefficientsIndistinguishableFromZero(
            f"all {Q.K} coefficients vanish to working precision; raise K or N")
    mu = min(v for _, v in exact)
    k0 = min(j for j, v in exact if v == mu)
    reasons = []
    for j, v in enumerate(vals, 1):
        if v.exact:
            continue
        if v.value < mu:
            reasons.append(f"c_{j} is only known to have valuation >= {v.value}")
        elif j < k0 and v.value <= mu:
            reasons.append(f"c_{j} could also attain valuation {mu}")
    if mu > 0 and not Q.tail_zero:
        reasons.append(f"mu = {mu} witnessed within {Q.K} terms only")
    lam = 2 * k0 - 1
    return InvariantResult(mu, lam, k0, bool(reasons), n0_sufficient(Q.prime, lam),
                           reason="; ".join(reasons))


def fast_path(spec: SeedSpec) -> InvariantResult | None:
    """mu=0, lambda=1, nu=0 when l does not divide a_1^2 + ... + a_t^2."""
    c1 = sum((a * a for a in spec.resolve(1)), make_from_integer(0, spec.prime, 1))
    if c1.residue == 0:
        return None
    return InvariantResult(0, 1, 1, False, n0_sufficient(spec.prime, 1), nu=0)


def phi_prime_power(ell: int, n: int) -> int:
    """Euler phi of l^n."""
    return 1 if n == 0 else ell ** n - ell ** (n - 1)


def predict_ord(n: int, mu: int, lam: int, nu: int, ell: int | None = None) -> int:
    """mu*l^n + lam*n + nu.  ``ell`` may be omitted only when mu is 0."""
    if mu and ell is None:
        raise ValueError("ell is required when mu is nonzero")
    return (mu * ell ** n if mu else 0) + lam * n + nu

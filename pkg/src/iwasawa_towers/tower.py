"""End-to-end check of ord_l(kappa_n) = mu*l^n + lambda*n + nu on a tower."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace

from .chebyshev import series_Q
from .errors import InsufficientLevels, InternalConsistencyError, LevelTooLarge
from .invariants import extract_mu_lambda, fast_path, phi_prime_power, predict_ord
from .padic import render_digits
from .seeds import SeedSpec
from .spanning import DEFAULT_VERTEX_CAP, ord_profile

SCHEMA = "iwasawa-tower-report"
SCHEMA_VERSION = 1

DEFAULT_TERMS = 12
DEFAULT_PRECISION = 24
DEFAULT_LEVELS = 5

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class NuFit:
    nu: int
    onset: int
    holds: bool


@dataclass
class TowerReport:
    prime: int
    seeds: list
    terms: int
    precision: int
    levels: int
    series: list
    mu: int
    lam: int
    k0: int
    provisional: bool
    fast_path: bool
    n0_bound: int
    measured: list  # [n, ord_l(kappa_n), l-free cofactor of kappa_n]
    nu: int | None
    onset: int | None
    differences_ok: bool
    verdict: str
    diagnostics: list = field(default_factory=list)

    def law(self) -> str:
        return format_law(self.mu, self.lam, self.nu, self.prime)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["measured"] = [[n, e, str(c)] for n, e, c in self.measured]
        return {"schema": SCHEMA, "version": SCHEMA_VERSION, **d}

    @classmethod
    def from_dict(cls, d: dict) -> TowerReport:
        if d.get("schema") != SCHEMA or d.get("version") != SCHEMA_VERSION:
            raise ValueError(f"not a {SCHEMA} v{SCHEMA_VERSION} document")
        d = {k: v for k, v in d.items() if k not in ("schema", "version")}
        d["measured"] = [(n, e, int(c)) for n, e, c in d["measured"]]
        return cls(**d)


def fit_nu(measured, mu: int, lam: int, ell: int, n0_bound: int) -> NuFit:
    """Fit nu at the deepest level and find where the law starts to hold.

    ``measured`` holds ``(n, ord)`` pairs (extra fields are ignored) and
    must cover every level 0..n0_bound+1.
    """
    ords = {row[0]: row[1] for row in measured}
    missing = [n for n in range(n0_bound + 2) if n not in ords]
    if missing:
        raise InsufficientLevels(
            f"levels {missing} missing; need 0..{n0_bound + 1} (n_max >= {n0_bound + 1})")
    levels = sorted(ords)
    residual = {n: ords[n] - predict_ord(n, mu, lam, 0, ell) for n in levels}
    nu = residual[levels[-1]]
    onset = levels[-1]
    for n in reversed(levels):
        if residual[n] != nu:
            break
        onset = n
    return NuFit(nu, onset, onset <= n0_bound)


def differences_hold(measured, mu, lam, ell, onset) -> bool:
    """First differences from onset equal mu*phi(l^n) + lambda."""
    ords = {row[0]: row[1] for row in measured}
    levels = [n for n in sorted(ords) if n > onset]
    if not levels:
        return False
    return all(ords[n] - ords[n - 1] == mu * phi_prime_power(ell, n) + lam for n in levels)


def cross_check_differences(report: TowerReport) -> bool:
    if report.onset is None:
        return False
    return differences_hold(report.measured, report.mu, report.lam, report.prime, report.onset)


def evaluate_verdict(report: TowerReport) -> str:
    """Re-derive the verdict from the fields of a report, trusting none of them."""
    levels = [n for n, _, _ in report.measured]
    if not levels or max(levels) < report.n0_bound + 1:
        return INCONCLUSIVE
    if report.nu is None or report.onset is None or report.onset > report.n0_bound:
        return FAIL
    checked = [(n, e) for n, e, _ in report.measured if n >= report.onset]
    if len(checked) < 2:
        return FAIL
    ok = all(e == predict_ord(n, report.mu, report.lam, report.nu, report.prime)
             for n, e in checked)
    return PASS if ok else FAIL


def run_tower(spec: SeedSpec, n_max: int | None = None, K: int = DEFAULT_TERMS,
              N: int = DEFAULT_PRECISION, cap: int = DEFAULT_VERTEX_CAP, jobs: int = 1,
              digits: int = 4) -> TowerReport:
    Q = series_Q(spec, K, N)
    inv = extract_mu_lambda(Q)
    fast = fast_path(spec)
    if fast is not None and (fast.mu, fast.lam) != (inv.mu, inv.lam):
        raise InternalConsistencyError("fast path disagrees with the series")
    if n_max is None:
        n_max = DEFAULT_LEVELS
        while spec.prime ** n_max > cap:
            n_max -= 1
    elif spec.prime ** n_max > cap:
        raise LevelTooLarge(
            f"level {n_max} has {spec.prime ** n_max} vertices, above the cap of {cap}")
    if n_max < 1:
        raise ValueError("need at least one level above the base")

    measured = [(n, e, kappa // spec.prime ** e)
                for n, e, kappa in ord_profile(spec, n_max, cap, jobs)]
    notes = []
    if inv.provisional:
        notes.append(f"invariants provisional: {inv.reason}")
    if fast is not None:
        notes.append("fast path: l does not divide the sum of squared seeds")

    nu = onset = None
    diff_ok = False
    if n_max < inv.n0_bound + 1:
        notes.append(f"inconclusive: n_max = {n_max} is below n0 + 1; "
                     f"n_max >= {inv.n0_bound + 1} would suffice")
    else:
        fit = fit_nu(measured, inv.mu, inv.lam, spec.prime, inv.n0_bound)
        nu, onset = fit.nu, fit.onset
        diff_ok = differences_hold(measured, inv.mu, inv.lam, spec.prime, onset)
        if onset < inv.n0_bound:
            notes.append(f"law observed from n = {onset}, before the sufficient bound n0 = {inv.n0_bound}")

    report = TowerReport(
        prime=spec.prime, seeds=[str(s) for s in spec.seeds], terms=K, precision=N,
        levels=n_max, series=[render_digits(c, min(digits, c.precision)) for c in Q.coefficients],
        mu=inv.mu, lam=inv.lam, k0=inv.k0, provisional=inv.provisional,
        fast_path=fast is not None, n0_bound=inv.n0_bound, measured=measured,
        nu=nu, onset=onset, differences_ok=diff_ok, verdict=INCONCLUSIVE, diagnostics=notes)
    verdict = evaluate_verdict(report)
    if verdict == FAIL:
        notes.append(f"measured valuations do not follow the law from n0 = {inv.n0_bound}")
        if inv.provisional:
            notes.append("mu/lambda were provisional; retry with larger --terms or --precision")
    elif verdict == PASS and inv.provisional:
        notes.append("pass with provisional invariants; confirmed by the measured levels")
    return replace(report, verdict=verdict)


def _signed(term: str, first: bool) -> str:
    if term.startswith("-"):
        return ("−" if first else " − ") + term[1:]
    return term if first else " + " + term


def format_law(mu, lam, nu, ell) -> str:
    parts = []
    if mu:
        parts.append(f"{ell}^n" if mu == 1 else f"{mu}·{ell}^n")
    parts.append("n" if lam == 1 else f"{lam}n")
    if nu:
        parts.append(str(nu))
    return "".join(_signed(p, i == 0) for i, p in enumerate(parts))


def render_table(report: TowerReport) -> str:
    width = max(2, len(str(report.levels)))
    lines = [
        f"tower l = {report.prime}, seeds = ({', '.join(report.seeds)})",
        f"terms K = {report.terms}, precision N = {report.precision}, levels 0..{report.levels}",
        "",
        "Q(T) coefficients:",
    ]
    lines += [f"  c{k} = {s}…" for k, s in enumerate(report.series, 1)]
    lines += [
        "",
        f"mu = {report.mu}, lambda = {report.lam} (k0 = {report.k0}), "
        f"provisional: {'yes' if report.provisional else 'no'}",
        f"n0 bound = {report.n0_bound}, fast path: {'yes' if report.fast_path else 'no'}",
        "",
    ]
    header = f"  {'n':>{width}}  {'vertices':>10}  {'ord':>6}"
    if report.nu is not None:
        header += f"  {'predicted':>9}  {'match':>5}"
    lines.append(header)
    for n, e, _ in report.measured:
        row = f"  {n:>{width}}  {report.prime ** n:>10}  {e:>6}"
        if report.nu is not None:
            p = predict_ord(n, report.mu, report.lam, report.nu, report.prime)
            mark = "yes" if p == e else ("-" if n < report.onset else "NO")
            row += f"  {p:>9}  {mark:>5}"
        lines.append(row)
    lines.append("")
    lines += [f"note: {d}" for d in report.diagnostics]
    if report.nu is not None:
        lines.append(f"consecutive differences: {'ok' if report.differences_ok else 'mismatch'}")
    lines.append(f"verdict: {report.verdict}")
    if report.verdict == PASS:
        lines.append(f"ord = {report.law()} for n ≥ {report.onset}")
    return "\n".join(lines) + "\n"


def render_machine(report: TowerReport) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def parse_machine(text: str) -> TowerReport:
    return TowerReport.from_dict(json.loads(text))

from dataclasses import replace

import pytest

from iwasawa_towers.cayley import build_cayley_serre
from iwasawa_towers.errors import InsufficientLevels
from iwasawa_towers.invariants import n0_sufficient, phi_prime_power
from iwasawa_towers.padic import big_ord
from iwasawa_towers.seeds import SeedSpec
from iwasawa_towers.tower import (FAIL, INCONCLUSIVE, PASS, cross_check_differences,
                                  evaluate_verdict, fit_nu, format_law, parse_machine,
                                  render_machine, render_table, run_tower)

from test_spanning import brute_force_trees

EX1 = SeedSpec(2, ("1/3", "3/5"))
EX2 = SeedSpec(3, ("1/2", "1/5", "1/7"))
EX3 = SeedSpec(13, ("sqrt(3)@4", "sqrt(10)@6"))


def test_fit_nu_examples():
    fit = fit_nu([(0, 0), (1, 2), (2, 5), (3, 12), (4, 17), (5, 22)], 0, 5, 2, 4)
    assert (fit.nu, fit.onset, fit.holds) == (-3, 3, True)
    fit = fit_nu([(0, 0), (1, 3), (2, 6), (3, 9)], 0, 3, 3, 2)
    assert (fit.nu, fit.onset) == (0, 0)
    fit = fit_nu([(0, 0), (1, 3), (2, 6)], 0, 3, 13, 1)
    assert (fit.nu, fit.onset) == (0, 0)


def test_fit_nu_needs_levels():
    with pytest.raises(InsufficientLevels):
        fit_nu([(0, 0), (1, 2), (2, 5), (3, 12)], 0, 5, 2, 4)


def test_fit_nu_detects_late_onset():
    fit = fit_nu([(0, 0), (1, 1), (2, 3), (3, 4)], 0, 1, 5, 1)
    assert fit.onset == 2 and not fit.holds


def test_run_tower_example_1():
    r = run_tower(EX1, 5)
    assert (r.mu, r.lam, r.nu, r.onset, r.verdict) == (0, 5, -3, 3, PASS)
    assert [e for _, e, _ in r.measured] == [0, 2, 5, 12, 17, 22]
    assert r.series[:4] == ["0.101", "0.100", "1.010", "0.000"]
    assert r.differences_ok and cross_check_differences(r)
    assert render_table(r).rstrip().endswith("ord = 5n − 3 for n ≥ 3")


def test_run_tower_example_2():
    r = run_tower(EX2, 3)
    assert (r.mu, r.lam, r.nu, r.onset, r.verdict) == (0, 3, 0, 0, PASS)


def test_run_tower_example_3():
    r = run_tower(EX3, 2)
    assert (r.mu, r.lam, r.nu, r.verdict) == (0, 3, 0, PASS)
    assert [e for _, e, _ in r.measured] == [0, 3, 6]


def test_fast_path_tower():
    r = run_tower(SeedSpec(5, (1, 1)), 2)
    assert (r.mu, r.lam, r.nu, r.onset, r.verdict, r.fast_path) == (0, 1, 0, 0, PASS, True)
    assert [e for _, e, _ in r.measured] == [0, 1, 2]
    # the 5- and 25-vertex double cycles: 2^(m-1) * m spanning trees on m vertices
    for n, _, cof in r.measured:
        m = 5 ** n
        assert 5 ** n * cof == (2 ** (m - 1) * m if m > 1 else 1)


def test_positive_mu_tower_against_enumeration():
    spec = SeedSpec(2, (1, 1))
    r = run_tower(spec, 3, K=4, N=10)
    assert (r.mu, r.lam, r.nu, r.verdict, r.provisional) == (1, 1, -1, PASS, False)
    for n, e, _ in r.measured:
        assert big_ord(brute_force_trees(build_cayley_serre(spec, n)), 2) == e
    ords = [e for _, e, _ in r.measured]
    for n in range(1, 4):
        assert ords[n] - ords[n - 1] == phi_prime_power(2, n) + 1
    assert cross_check_differences(r)


def test_positive_mu_odd_prime():
    r = run_tower(SeedSpec(3, (1, 1, 1)), 4, K=4, N=10)
    assert (r.mu, r.lam, r.nu, r.verdict) == (1, 1, -1, PASS)
    assert cross_check_differences(r)


def test_inconclusive_when_too_shallow():
    r = run_tower(EX1, 3)
    assert r.verdict == INCONCLUSIVE and r.nu is None
    assert any("n_max >= 5" in d for d in r.diagnostics)


@pytest.mark.parametrize("spec, n_max", [(EX1, 5), (EX2, 3), (EX3, 2)])
def test_negative_controls(spec, n_max):
    r = run_tower(spec, n_max)
    assert evaluate_verdict(r) == PASS
    assert evaluate_verdict(replace(r, lam=r.lam + 2)) == FAIL
    assert evaluate_verdict(replace(r, nu=r.nu + 1)) == FAIL
    assert evaluate_verdict(replace(r, nu=r.nu - 1)) == FAIL
    assert evaluate_verdict(replace(r, mu=r.mu + 1)) == FAIL
    # refitting with the corrupted lambda cannot rescue the law either
    measured = [(n, e) for n, e, _ in r.measured]
    assert not fit_nu(measured, r.mu, r.lam + 2, r.prime, r.n0_bound).holds


@pytest.mark.parametrize("spec, n_max", [(EX1, 5), (EX2, 3), (SeedSpec(7, (1, 2)), 2)])
def test_onset_within_bound(spec, n_max):
    r = run_tower(spec, n_max)
    assert r.verdict == PASS
    assert r.onset <= n0_sufficient(spec.prime, r.lam)


def test_deterministic_reports():
    a = render_machine(run_tower(EX2, 3))
    b = render_machine(run_tower(EX2, 3, jobs=2))
    assert a == b
    assert render_table(run_tower(EX1, 5)) == render_table(run_tower(EX1, 5))


def test_machine_round_trip():
    r = run_tower(EX1, 5)
    assert parse_machine(render_machine(r)) == r


def test_format_law():
    assert format_law(0, 5, -3, 2) == "5n − 3"
    assert format_law(0, 3, 0, 3) == "3n"
    assert format_law(1, 1, -1, 3) == "3^n + n − 1"
    assert format_law(2, 3, 4, 5) == "2·5^n + 3n + 4"

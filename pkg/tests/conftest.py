import random

import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")


def pytest_addoption(parser):
    parser.addoption("--test-seed", type=int, default=20211,
                     help="seed for the randomized oracle suites")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--test-seed"))


def egcd_inverse(q, m):
    """Modular inverse by the extended Euclidean algorithm (independent of pow)."""
    r0, r1, s0, s1 = m, q % m, 0, 1
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    assert r0 == 1
    return s0 % m


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if rep.when == "call" and "criterion" in props:
                lines.append((props["criterion"], outcome.upper()[:4], props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status, detail in sorted(lines, key=lambda x: int(x[0].split()[1])):
            terminalreporter.write_line(f"{crit:<6} {status}  {detail}")

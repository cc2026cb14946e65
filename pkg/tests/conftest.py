import random

import pytest

from divpow.identity import DELTA, VARS
from divpow.ratfun import DenomBasis
from divpow.ring import Polynomial, VarTable

_ACCEPTANCE = []


def random_poly(rng: random.Random, vars: VarTable, max_deg: int = 4, max_terms: int = 5,
                coeff: int = 9, modulus=None) -> Polynomial:
    n = len(vars)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_deg)
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        terms[tuple(exps)] = rng.randint(-coeff, coeff)
    return Polynomial(vars, terms, modulus)


def koszul_syzygy_coeffs(rng: random.Random, basis: DenomBasis, max_deg: int = 1):
    """Random combination of the Koszul relations (f2,-f1,0), (f3,0,-f1), (0,f3,-f2)."""
    f1, f2, f3 = basis
    a, b, c = (random_poly(rng, basis.vars, max_deg=max_deg, max_terms=2, coeff=3)
               for _ in range(3))
    return (a * f2 + b * f3, -(a * f1) + c * f3, -(b * f1) - (c * f2))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def gens():
    return dict(zip(VARS.names, VARS.gens()))


@pytest.fixture(scope="session")
def delta():
    return DELTA


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        n, title = marker.args
        _ACCEPTANCE.append((n, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, passed, duration in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {n}: {title} ({duration:.2f} s)")

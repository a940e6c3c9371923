import cmath
import random

import pytest
from hypothesis import settings

from seqroots.bench import load_coeffs

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Published roots of the degree-20 example, 5 decimals.
DEG20_ROOTS = [
    complex(s.replace("i", "j"))
    for s in """
    -0.09074+5.81549i 0.89105+0.21904i 0.54897+0.52784i 0.74874+0.81131i
    0.34122+1.15526i -0.05401+0.89515i -0.43302+1.16667i 0.56340-0.21258i
    -0.68143+0.72467i -0.67024+0.23777i -1.19293+0.33327i -0.77633-0.08160i
    -0.89380-0.36960i -0.75081-0.62499i -0.49219-0.87189i 0.02587-1.00949i
    0.12709-1.15164i 0.61401-0.77163i 1.17894-0.49591i 0.99621-0.29716i
    """.split()
]
ISOLATED_ROOT = DEG20_ROOTS[0]
DEG20_PRINTED_RESIDUALS = [
    29.155, 22.163, 26.980, 18.675, 25.491, 17.029, 25.958, 20.517, 27.224, 23.756,
    24.042, 9.436, 8.123, 19.077, 41.067, 4.243, 42.463, 12.268, 30.720, 4.823,
]


@pytest.fixture(scope="session")
def deg20():
    return load_coeffs("builtin:deg20")


def naive_eval(coeffs, z):
    """Term-by-term power sum, independent of Horner."""
    n = len(coeffs)
    return sum(a * z**m for m, a in enumerate(coeffs)) + z**n


def separated_roots(rng, n, radius=2.0, min_sep=1e-2):
    """Random points in a disc with pairwise distance at least ``min_sep``."""
    out = []
    while len(out) < n:
        z = cmath.rect(radius * rng.random() ** 0.5, 2 * cmath.pi * rng.random())
        if all(abs(z - w) >= min_sep for w in out):
            out.append(z)
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


# --- acceptance reporting -------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    cid, title = mark.args
    detail = ""
    if rep.failed:
        detail = str(call.excinfo.value).splitlines()[0][:160]
    prev = _ACCEPTANCE.get(cid)
    if prev is not None and prev[0] == "FAIL":
        return
    _ACCEPTANCE[cid] = ("PASS" if rep.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=lambda c: (len(c), c)):
        status, title, detail = _ACCEPTANCE[cid]
        line = f"{cid:<4} {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)

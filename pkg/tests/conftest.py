from fractions import Fraction

import pytest

from surfsym.arith import MPoly
from surfsym.cli import parse_input

ENNEPER = """
x = -s^3 + 3*s*t^2 + 3*s
y = 3*s^2*t - t^3 + 3*t
z = 3*s^2 - 3*t^2
"""
PARABOLOID = "x = t\ny = s\nz = t^2 + s^2\n"
HYPERBOLIC = "x = t\ny = s\nz = t*s\n"
MONKEY = "x = t\ny = s\nz = t^3 - 3*t*s^2\n"

# the rotation with Pythagorean entries and the shift used for equivariance checks
R345 = ((Fraction(3, 5), Fraction(-4, 5), 0), (Fraction(4, 5), Fraction(3, 5), 0), (0, 0, 1))
W = (1, -2, 3)


def surface(text):
    return parse_input(text).parametrization()


def uv(text, vars=("u", "v")):
    """Polynomial from a Python expression in the named variables."""
    env = {name: MPoly.var(name, vars) for name in vars}
    env["Fraction"] = Fraction
    return MPoly.const(0, vars) + eval(text, {"__builtins__": {}}, env)


def tsp(text):
    return uv(text, ("t", "s"))


@pytest.fixture(scope="session")
def enneper():
    return surface(ENNEPER)


@pytest.fixture(scope="session")
def paraboloid():
    return surface(PARABOLOID)


@pytest.fixture(scope="session")
def hyperbolic():
    return surface(HYPERBOLIC)


@pytest.fixture(scope="session")
def reports():
    """Engine reports shared across test modules (each surface analyzed once)."""
    from surfsym import analyze
    cache = {}

    def get(name, text):
        if name not in cache:
            cache[name] = analyze(surface(text))
        return cache[name]
    return get


# -- acceptance summary: one PASS/FAIL line per criterion --------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")

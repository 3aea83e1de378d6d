import pytest

from ucl import bell, congruence
from ucl.poly import IntPolynomial


@pytest.fixture
def fresh_caches():
    congruence.clear_caches()
    yield
    congruence.clear_caches()


@pytest.fixture
def corrupted_bell_table(fresh_caches):
    """Bump one coefficient of B_4(x) in the integer table the checkers read."""
    bell.bell_polynomial(6)
    rows = bell._bell["recurrence"]
    coeffs = list(rows[4].coeffs)
    coeffs[2] += 1
    rows[4] = IntPolynomial(coeffs)
    yield


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion for the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(criterion, ok, detail=""):
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

import pytest
from hypothesis import HealthCheck, settings

from yukawa_length.jacobian import default_point, validate_params

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_PAIRS = [(4, 2), (6, 2), (6, 3), (8, 2)]

_acceptance_lines: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number} [{status}] {name}" + (f" ({detail})" if detail else "")
        _acceptance_lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(params=SMALL_PAIRS, ids=lambda p: f"m{p[0]}r{p[1]}")
def small_case(request):
    params = validate_params(*request.param)
    return params, default_point(params)

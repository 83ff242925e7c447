import pytest

from uavfire.fire_model import FireParams
from uavfire.scenario import ScenarioSpec, generate


@pytest.fixture
def params():
    return FireParams(spread_rate=0.05, quench_rate=20.0, uav_speed=20.0)


@pytest.fixture
def desk_scenario():
    return generate(ScenarioSpec(uav_count=2, fire_count=6, seed=3))


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, label = mark.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = _criteria.get(number, (label, "PASS"))[1]
        _criteria[number] = (label, "FAIL" if failed or prev == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        label, verdict = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {label}")

"""Collects acceptance results and prints one PASS/FAIL line per criterion."""

import pytest

CRITERIA = {
    1: "first worked example: pencil 8h, no pinv at 0, closed form at four pitches",
    2: "second worked example: projector and its kernel at h = 1, 2",
    3: "fourth worked example: joint rates, error term and its zeros",
    4: "axiom suite on random rational Jacobians; Moore-Penrose at rank 6",
    5: "classification and pairings invariant under rigid motions and basis changes",
    6: "systems without any h-pseudoinverse and their reciprocals",
    7: "Sylvester factorisations and the six three-line involution cases",
    8: "singular Gram matrices give isotropic reciprocal certificates",
    9: "analytic gradient of the error matches finite differences; zero at the pinv",
    10: "damped solutions converge monotonically to the pseudoinverse solution",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    number = getattr(report, "criterion", None)
    if number is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes.setdefault(number, []).append(report.outcome == "passed")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        results = _outcomes.get(number)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {CRITERIA[number]}")

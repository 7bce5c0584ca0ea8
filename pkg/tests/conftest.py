import re

import pytest
from hypothesis import settings

settings.register_profile("polytype", max_examples=60, deadline=None)
settings.load_profile("polytype")

_CRITERIA = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[k] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {k}: {_CRITERIA[k]}")


@pytest.fixture(scope="session")
def poly_rotations():
    """Rotation systems of every polyhedron on 4..10 vertices, keyed by order."""
    from polytype.enumeration import polyhedron_rotations

    return {n: polyhedron_rotations(n) for n in range(4, 11)}

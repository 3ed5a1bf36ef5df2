import math

import pytest

from slitlab import ApertureState, SlitGeometry, analytic_amplitude

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def unit_geometry():
    return SlitGeometry(width=1.0, momentum=20 * math.pi, hbar=1.0, mass=1.0)


@pytest.fixture(scope="session")
def boxcar(unit_geometry):
    return ApertureState.boxcar(unit_geometry)


@pytest.fixture(scope="session")
def well(unit_geometry):
    return ApertureState.well(unit_geometry)


@pytest.fixture(scope="session")
def boxcar_amp(boxcar):
    return analytic_amplitude(boxcar)


@pytest.fixture(scope="session")
def well_amp(well):
    return analytic_amplitude(well)


@pytest.fixture(scope="session")
def well_report(well):
    from slitlab import uncertainty_report
    return uncertainty_report(well)

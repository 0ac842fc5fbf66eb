import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--full-scale", action="store", default=None, metavar="PATH",
                     help="SNAP web-Google edge list for the long-running full-scale check")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def golden_dir():
    return GOLDEN


# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

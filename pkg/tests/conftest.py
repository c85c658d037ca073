import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symquandle.algebra import dihedral_quandle, p3, p3_symmetric, symmetric_quandle, trivial_quandle  # noqa: E402
from symquandle.io import assets_dir  # noqa: E402


@pytest.fixture
def P3():
    return p3()


@pytest.fixture
def P3rho():
    return p3_symmetric()


@pytest.fixture
def R3id():
    return symmetric_quandle(dihedral_quandle(3))


@pytest.fixture
def T2id():
    return symmetric_quandle(trivial_quandle(2))


@pytest.fixture
def assets():
    return assets_dir()


def small_quandles():
    """Named quandles with at most four elements."""
    return [trivial_quandle(1), trivial_quandle(2), trivial_quandle(3), dihedral_quandle(3), p3(), dihedral_quandle(4), trivial_quandle(4)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")

from __future__ import annotations

from pathlib import Path

import pytest

from zerocert.lfunc import ZeroList

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_zeros(name: str) -> ZeroList:
    return ZeroList.load(FIXTURES / name)


@pytest.fixture(scope="session")
def zeta_103() -> ZeroList:
    return load_zeros("zeta_0_103.txt")


@pytest.fixture(scope="session")
def zeta_1000() -> ZeroList:
    return load_zeros("zeta_990_1030.txt")


@pytest.fixture(scope="session")
def zeta_80() -> ZeroList:
    return load_zeros("zeta_m80_80.txt")


@pytest.fixture(scope="session")
def gaussian_60() -> ZeroList:
    return load_zeros("gaussian_m60_60.txt")


@pytest.fixture(scope="session")
def ec_25() -> ZeroList:
    return load_zeros("ec11a1_m25_25.txt")


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

import numpy as np
import pytest

from anyonwalk import AnyonModel

NONABELIAN = ["ising", "su2k:2", "su2k:3", "su2k:4", "su2k:5"]


@pytest.fixture(params=NONABELIAN)
def nonabelian(request):
    return AnyonModel.parse(request.param)


def unitary_error(M: np.ndarray) -> float:
    return float(np.abs(M.conj().T @ M - np.eye(M.shape[0])).max())


_CRITERIA: list[str] = []


@pytest.fixture
def verdict():
    """Record (and print) one acceptance line; returns the pass flag for asserting."""

    def _record(n: int, ok: bool, detail: str) -> bool:
        line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        _CRITERIA.append(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

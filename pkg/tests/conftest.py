import numpy as np
import pytest

from taustar import PairedSample, naive_t_star_u, naive_t_star_v, t_star

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session", autouse=True)
def warm_compiled_kernels():
    """Compile every jit kernel up front so timed tests never pay for it."""
    tied = PairedSample(
        [1.0, 1.0, 2.0, 3.0, 3.0, 4.0], [2.0, 1.0, 2.0, 5.0, 3.0, 3.0]
    )
    clean = PairedSample([1.0, 2.0, 3.0, 4.0, 5.0], [2.0, 1.0, 4.0, 3.0, 5.0])
    t_star(tied, kind="U")
    t_star(tied, kind="V")
    t_star(clean, kind="U")
    naive_t_star_u(tied)
    naive_t_star_v(tied)


@pytest.fixture(scope="session")
def acceptance_log():
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    def record(line: str) -> None:
        _acceptance_lines.append(line)
        print(line, flush=True)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture()
def rng():
    """Fresh deterministic generator per test."""
    return np.random.default_rng(20260823)

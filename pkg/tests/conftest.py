import numpy as np
import pytest
from hypothesis import strategies as st

from toffolikit.circuit import Angle, Circuit, cx, rz, sx

_results: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion, reported in the summary")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label = marker.args[0]
    outcome = "PASS" if call.excinfo is None else "FAIL"
    if _results.get(label, ("", "PASS"))[1] == "FAIL":
        outcome = "FAIL"
    _results[label] = (item.nodeid, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split()[0].rstrip("."))):
        terminalreporter.write_line(f"{_results[label][1]}  {label}")


angles = st.builds(Angle, st.integers(-64, 64), st.integers(0, 6))


@st.composite
def native_circuits(draw, max_qubits=6, max_gates=40):
    n = draw(st.integers(2, max_qubits))
    gates = []
    for _ in range(draw(st.integers(0, max_gates))):
        kind = draw(st.sampled_from(["rz", "rz", "sx", "cx"]))
        if kind == "cx":
            a, b = draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
            gates.append(cx(a, b))
        else:
            q = draw(st.integers(0, n - 1))
            gates.append(rz(q, draw(angles)) if kind == "rz" else sx(q))
    return Circuit(n, tuple(gates))


def random_native_circuit(rng: np.random.Generator, max_qubits=6, max_gates=40) -> Circuit:
    n = int(rng.integers(2, max_qubits + 1))
    gates = []
    for _ in range(int(rng.integers(0, max_gates + 1))):
        r = rng.random()
        if r < 0.3:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(cx(int(a), int(b)))
        elif r < 0.45:
            gates.append(sx(int(rng.integers(n))))
        else:
            gates.append(rz(int(rng.integers(n)), Angle(int(rng.integers(-16, 17)), int(rng.integers(0, 5)))))
    return Circuit(n, tuple(gates))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

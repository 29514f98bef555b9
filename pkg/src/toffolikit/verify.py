"""Dense statevector / unitary simulation and Toffoli oracles.

Qubit ``i`` is bit ``i`` of the basis-state index (little-endian).
RZ(l) = diag(1, e^{il}); SX = (1/2)[[1+i, 1-i], [1-i, 1+i]].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .circuit import Circuit, Kind, require_native
from .synth import ToffoliSpec

MAX_QUBITS = 8
PROB_TOL = 1e-10

SX = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
HADAMARD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)


class SimulationError(ValueError):
    pass


def rz_matrix(radians: float) -> np.ndarray:
    return np.diag([1, np.exp(1j * radians)])


def _axis(q: int, n: int) -> int:
    # C-order reshape puts the most significant bit first
    return n - 1 - q


def _apply(state: np.ndarray, c: Circuit) -> np.ndarray:
    """Apply ``c`` to ``state`` of shape (2,)*n + batch."""
    n = c.num_qubits
    for g in c.gates:
        if g.kind is Kind.CX:
            ctrl, tgt = (_axis(q, n) for q in g.qubits)
            idx = [slice(None)] * state.ndim
            idx[ctrl] = 1
            sub = state[tuple(idx)]
            t_axis = tgt if tgt < ctrl else tgt - 1
            state[tuple(idx)] = np.flip(sub, axis=t_axis).copy()
            continue
        m = SX if g.kind is Kind.SX else rz_matrix(g.angle.radians)
        ax = _axis(g.qubits[0], n)
        state = np.moveaxis(np.tensordot(m, state, axes=([1], [ax])), 0, ax)
    return state


def _check(c: Circuit) -> None:
    require_native(c, "simulation")
    if c.num_qubits > MAX_QUBITS:
        raise SimulationError(f"{c.num_qubits} qubits exceeds the {MAX_QUBITS}-qubit simulator cap")


def simulate(c: Circuit, state: np.ndarray) -> np.ndarray:
    _check(c)
    dim = 2 ** c.num_qubits
    psi = np.array(state, dtype=complex).reshape((2,) * c.num_qubits)
    if psi.size != dim:
        raise SimulationError(f"state has {psi.size} amplitudes, expected {dim}")
    return _apply(psi.copy(), c).reshape(dim)


def basis_state(num_qubits: int, bits: Mapping[int, int]) -> np.ndarray:
    psi = np.zeros(2 ** num_qubits, dtype=complex)
    psi[basis_index(bits)] = 1
    return psi


def basis_index(bits: Mapping[int, int]) -> int:
    return sum(1 << q for q, v in bits.items() if v)


def unitary_of(c: Circuit) -> np.ndarray:
    _check(c)
    n = c.num_qubits
    dim = 2 ** n
    u = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    return _apply(u, c).reshape(dim, dim)


def mcx_oracle(n: int, target: int = 0) -> np.ndarray:
    """Exact multi-controlled X on n qubits; every other qubit is a control."""
    if not 3 <= n <= MAX_QUBITS:
        raise SimulationError(f"oracle size must be in [3, {MAX_QUBITS}], got {n}")
    if not 0 <= target < n:
        raise SimulationError(f"target {target} outside {n} qubits")
    dim = 2 ** n
    u = np.eye(dim, dtype=complex)
    zero = (dim - 1) & ~(1 << target)
    one = dim - 1
    u[[zero, one]] = u[[one, zero]]
    return u


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, atol: float = 1e-12) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    k = np.unravel_index(np.argmax(np.abs(a)), a.shape)
    if abs(a[k]) < atol or abs(b[k]) < atol:
        return bool(np.allclose(a, b, rtol=0, atol=atol))
    pa, pb = a[k] / abs(a[k]), b[k] / abs(b[k])
    return bool(np.allclose(a * np.conj(pa), b * np.conj(pb), rtol=0, atol=atol))


@dataclass(frozen=True)
class TruthRow:
    controls: tuple[int, ...]  # bit for controls[0], controls[1], ...
    expected: int
    probability: float

    @property
    def passed(self) -> bool:
        return self.probability >= 1 - PROB_TOL


@dataclass(frozen=True)
class TruthTable:
    rows: tuple[TruthRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[TruthRow]:
        return [r for r in self.rows if not r.passed]


def check_and_behavior(c: Circuit, spec: ToffoliSpec,
                       output_spec: ToffoliSpec | None = None) -> TruthTable:
    """Run every control basis input with the target at |0>.

    Each row passes when the output carries at least 1 - 1e-10 probability on
    the same control bits with target = AND(controls); all other qubits must
    stay |0>. ``output_spec`` says where the controls and target are read out
    when routing has permuted them (defaults to ``spec``).
    """
    _check(c)
    out = output_spec or spec
    if out.m != spec.m:
        raise SimulationError("input and output specs disagree on the number of controls")
    rows = []
    for bits in product((0, 1), repeat=spec.m):
        psi = basis_state(c.num_qubits, dict(zip(spec.controls, bits)))
        result = simulate(c, psi)
        expected = int(all(bits))
        want = dict(zip(out.controls, bits))
        want[out.target] = expected
        rows.append(TruthRow(bits, expected, float(abs(result[basis_index(want)]) ** 2)))
    return TruthTable(tuple(rows))


def effective_target_operator(c: Circuit, spec: ToffoliSpec, bits: Sequence[int]) -> np.ndarray:
    """2x2 operator applied to the target with the controls held at ``bits``.

    ``bits[i]`` is the value of ``spec.controls[i]``. Raises if the circuit
    leaks amplitude out of the chosen control basis state.
    """
    _check(c)
    if len(bits) != spec.m or any(b not in (0, 1) for b in bits):
        raise SimulationError(f"controls must be a 0/1 assignment of length {spec.m}, got {bits}")
    fixed = dict(zip(spec.controls, bits))
    op = np.zeros((2, 2), dtype=complex)
    for col in (0, 1):
        result = simulate(c, basis_state(c.num_qubits, {**fixed, spec.target: col}))
        for row in (0, 1):
            op[row, col] = result[basis_index({**fixed, spec.target: row})]
    leaked = 2 - float(np.sum(np.abs(op) ** 2))
    if leaked > PROB_TOL:
        raise SimulationError(f"controls do not stay in a basis state (leaked {leaked:.3g})")
    return op


def closed_form_operator(m: int) -> np.ndarray:
    """Target operator with all m controls at |1>, from the rotation-angle model.

    With a = e^{i 2^(m-1) theta}, b = e^{i 2^(m-1) phi}, theta = -phi = pi/2^m:
    (1/2) [[a + b, -a + b], [a - b, -a - b]].
    """
    theta = np.pi / 2 ** m
    a = np.exp(1j * 2 ** (m - 1) * theta)
    b = np.exp(-1j * 2 ** (m - 1) * theta)
    return 0.5 * np.array([[a + b, -a + b], [a - b, -a - b]])

from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings

from toffolikit.circuit import Angle, Circuit, HALF_PI, Kind, expand_macros, h, rz, swap, cx
from toffolikit.optimize import fuse_rz
from toffolikit.synth import ToffoliSpec, layout_aware_toffoli
from toffolikit.verify import (
    HADAMARD, SX, SimulationError, check_and_behavior, closed_form_operator,
    effective_target_operator, equal_up_to_global_phase, mcx_oracle, unitary_of,
)

from conftest import native_circuits

I2 = np.eye(2)
P0, P1 = np.diag([1, 0]), np.diag([0, 1])
X = np.array([[0, 1], [1, 0]])


def _kron_ops(ops: dict[int, np.ndarray], n: int) -> np.ndarray:
    # qubit 0 is the least significant bit, so it is the rightmost factor
    return reduce(np.kron, [ops.get(q, I2) for q in reversed(range(n))])


def kron_unitary(c: Circuit) -> np.ndarray:
    """Reference simulator built from explicit Kronecker products."""
    n = c.num_qubits
    u = np.eye(2 ** n, dtype=complex)
    for g in c.gates:
        if g.kind is Kind.CX:
            a, b = g.qubits
            m = _kron_ops({a: P0}, n) + _kron_ops({a: P1, b: X}, n)
        elif g.kind is Kind.SX:
            m = _kron_ops({g.qubits[0]: SX}, n)
        else:
            m = _kron_ops({g.qubits[0]: np.diag([1, np.exp(1j * g.angle.radians)])}, n)
        u = m @ u
    return u


def layout_aware(n):
    spec = ToffoliSpec(tuple(range(1, n)), 0)
    return spec, fuse_rz(expand_macros(layout_aware_toffoli(spec)))


@settings(max_examples=60, deadline=None)
@given(native_circuits(max_qubits=5, max_gates=25))
def test_unitary_matches_kron_reference(c):
    np.testing.assert_allclose(unitary_of(c), kron_unitary(c), atol=1e-12, rtol=0)


def test_cx_convention():
    u = unitary_of(Circuit(2, (cx(0, 1),)))
    # control is qubit 0 (bit 0): |01> (index 1) -> |11> (index 3)
    assert u[3, 1] == 1 and u[1, 3] == 1 and u[0, 0] == 1 and u[2, 2] == 1


def test_empty_circuit_identity():
    np.testing.assert_array_equal(unitary_of(Circuit(1)), np.eye(2))


def test_hadamard_expansion():
    u = unitary_of(expand_macros(Circuit(1, (h(0),))))
    assert equal_up_to_global_phase(u, HADAMARD, atol=1e-12)
    assert not np.allclose(u, HADAMARD)


def test_swap_expansion_exact():
    u = unitary_of(expand_macros(Circuit(2, (swap(0, 1),))))
    want = np.eye(4)[[0, 2, 1, 3]]
    np.testing.assert_allclose(u, want, atol=0)


@pytest.mark.parametrize("n", range(3, 9))
def test_synthesized_unitary_is_unitary(n):
    _, c = layout_aware(n)
    u = unitary_of(c)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(2 ** n), atol=1e-12, rtol=0)


def test_three_bit_column():
    spec = ToffoliSpec((0, 2), 1)
    u = unitary_of(fuse_rz(expand_macros(layout_aware_toffoli(spec))))
    # controls q0=q2=1, target q1=0 -> index 0b101; expect all mass on 0b111
    assert abs(u[0b111, 0b101]) ** 2 == pytest.approx(1, abs=1e-12)


class TestOracle:
    def test_n3(self):
        u = mcx_oracle(3)
        want = np.eye(8)[[0, 1, 2, 3, 4, 5, 7, 6]]
        np.testing.assert_array_equal(u, want)

    def test_involutory(self):
        u = mcx_oracle(3)
        np.testing.assert_array_equal(u @ u, np.eye(8))

    def test_n4_off_diagonal(self):
        u = mcx_oracle(4)
        assert np.count_nonzero(u - np.diag(np.diag(u))) == 2

    def test_range(self):
        with pytest.raises(SimulationError):
            mcx_oracle(2)
        with pytest.raises(SimulationError):
            mcx_oracle(9)


class TestTruthTable:
    def test_three_bit(self):
        spec = ToffoliSpec((0, 2), 1)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        table = check_and_behavior(c, spec)
        assert len(table.rows) == 4 and table.passed
        rows = {r.controls: r.expected for r in table.rows}
        assert rows[(1, 1)] == 1 and rows[(0, 0)] == 0

    def test_seven_bit(self):
        spec, c = layout_aware(7)
        table = check_and_behavior(c, spec)
        assert len(table.rows) == 64 and table.passed
        assert [r.controls for r in table.rows if r.expected] == [(1,) * 6]

    def test_mutation_detected(self):
        spec = ToffoliSpec((0, 2), 1)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        # flip the sign of one core rotation
        i = next(i for i, g in enumerate(c) if g.kind is Kind.RZ and g.angle == Angle(-1, 2))
        bad = c.with_gates(c.gates[:i] + (rz(1, Angle(1, 2)),) + c.gates[i + 1:])
        assert not check_and_behavior(bad, spec).passed

    def test_macro_rejected(self):
        spec = ToffoliSpec((0, 2), 1)
        with pytest.raises(ValueError):
            check_and_behavior(layout_aware_toffoli(spec), spec)

    def test_qubit_cap(self):
        with pytest.raises(SimulationError):
            unitary_of(Circuit(9))


class TestEffectiveOperator:
    def test_three_bit_all_ones(self):
        spec = ToffoliSpec((0, 2), 1)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        op = effective_target_operator(c, spec, (1, 1))
        assert equal_up_to_global_phase(op, np.array([[0, -1j], [1j, 0]]), atol=1e-12)

    def test_closed_form_three_bit(self):
        # (1/2)[[e^{2it}+e^{2ip}, ...]] at t=pi/4, p=-pi/4
        np.testing.assert_allclose(closed_form_operator(2), [[0, -1j], [1j, 0]], atol=1e-12)

    def test_inner_control_only_is_identity(self):
        spec = ToffoliSpec((0, 2), 1)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        # C1 (controls[1]) set, C0 clear
        assert equal_up_to_global_phase(effective_target_operator(c, spec, (0, 1)), I2, atol=1e-12)

    def test_outer_control_only_is_z(self):
        spec = ToffoliSpec((0, 2), 1)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        op = effective_target_operator(c, spec, (1, 0))
        assert equal_up_to_global_phase(op, np.diag([1, -1]), atol=1e-12)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_all_ones_matches_model(self, n):
        spec, c = layout_aware(n)
        op = effective_target_operator(c, spec, (1,) * spec.m)
        assert equal_up_to_global_phase(op, closed_form_operator(spec.m), atol=1e-12)
        assert abs(abs((op @ [1, 0])[1]) - 1) < 1e-12

    @pytest.mark.parametrize("n", range(3, 7))
    def test_any_zero_control_keeps_target(self, n):
        spec, c = layout_aware(n)
        for k in range(2 ** spec.m - 1):
            bits = tuple((k >> i) & 1 for i in range(spec.m))
            op = effective_target_operator(c, spec, bits)
            assert abs(abs(op[0, 0]) - 1) < 1e-12

    def test_not_an_exact_toffoli(self):
        spec = ToffoliSpec((1, 2), 0)
        c = fuse_rz(expand_macros(layout_aware_toffoli(spec)))
        assert not equal_up_to_global_phase(unitary_of(c), mcx_oracle(3, target=0), atol=1e-6)

    def test_bad_bits(self):
        spec, c = layout_aware(3)
        with pytest.raises(SimulationError):
            effective_target_operator(c, spec, (1, 2))


def test_global_phase_comparison():
    a = np.array([[0, 1j], [1, 0]])
    assert equal_up_to_global_phase(a, a * np.exp(0.3j))
    assert not equal_up_to_global_phase(a, np.array([[0, 1j], [-1, 0]]))
    assert not equal_up_to_global_phase(a, np.eye(3))


def test_half_pi_constant():
    assert HALF_PI.radians == pytest.approx(np.pi / 2)

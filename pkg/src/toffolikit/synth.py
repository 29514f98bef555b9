"""Toffoli constructions from rz/sx/cx.

The layout-aware gate is H(t) . core . H(t). The core is a mirrored binary
tree of CX gates, all aimed at the target, with RZ(+-pi/2**m) rotations on
the target between them; control ``i`` (0 = outermost) drives ``2**i`` CXs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Angle, Circuit, CircuitError, Gate, cx, h, rz

T_ANGLE = Angle(1, 2)  # pi/4


class InvalidSpecError(CircuitError):
    pass


@dataclass(frozen=True)
class ToffoliSpec:
    """``controls[0]`` is the outermost control (one CX), ``controls[-1]`` the innermost."""

    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        controls = tuple(int(c) for c in self.controls)
        object.__setattr__(self, "controls", controls)
        if len(controls) < 2:
            raise InvalidSpecError(f"need at least 2 controls, got {len(controls)}")
        qubits = controls + (self.target,)
        if min(qubits) < 0:
            raise InvalidSpecError("qubit indices must be non-negative")
        if len(set(qubits)) != len(qubits):
            raise InvalidSpecError(f"controls and target must be distinct: {qubits}")

    @classmethod
    def standard(cls, n: int) -> "ToffoliSpec":
        """Controls on qubits 0..n-2, target on qubit n-1."""
        return cls(tuple(range(n - 1)), n - 1)

    @property
    def m(self) -> int:
        return len(self.controls)

    @property
    def n(self) -> int:
        return len(self.controls) + 1

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    @property
    def min_width(self) -> int:
        return max(self.qubits) + 1


def rotation_angle(m: int) -> Angle:
    """pi / 2**m; the clockwise partner is its negation."""
    if m < 2:
        raise InvalidSpecError(f"need at least 2 controls, got {m}")
    return Angle(1, m)


def _width(spec_width: int, num_qubits: int | None) -> int:
    if num_qubits is None:
        return spec_width
    if num_qubits < spec_width:
        raise InvalidSpecError(f"{num_qubits} qubits cannot hold a gate on qubit {spec_width - 1}")
    return num_qubits


def _core3_gates(c_a: int, c_b: int, target: int, theta: Angle) -> list[Gate]:
    phi = -theta
    return [
        rz(target, theta),
        cx(c_b, target),
        rz(target, phi),
        cx(c_a, target),
        rz(target, theta),
        cx(c_b, target),
        rz(target, phi),
    ]


def core_3bit(c_a: int, c_b: int, target: int, theta: Angle, num_qubits: int | None = None) -> Circuit:
    """Seven-gate core: ``c_b`` is used twice (inner), ``c_a`` once (outer)."""
    if len({c_a, c_b, target}) != 3:
        raise InvalidSpecError(f"duplicate qubit in ({c_a}, {c_b}, {target})")
    if theta.is_zero():
        raise InvalidSpecError("core rotation angle must be nonzero")
    width = _width(max(c_a, c_b, target) + 1, num_qubits)
    return Circuit(width, tuple(_core3_gates(c_a, c_b, target, theta)))


def toffoli_core(spec: ToffoliSpec, num_qubits: int | None = None) -> Circuit:
    controls, t = spec.controls, spec.target
    theta = rotation_angle(spec.m)
    gates = _core3_gates(controls[-2], controls[-1], t, theta)
    for r in range(spec.m - 2, 0, -1):
        gates = gates + [cx(controls[r - 1], t)] + gates
    return Circuit(_width(spec.min_width, num_qubits), tuple(gates))


def layout_aware_toffoli(spec: ToffoliSpec, num_qubits: int | None = None) -> Circuit:
    """H(t), core, H(t); the Hadamards stay as macros."""
    core = toffoli_core(spec, num_qubits)
    t = spec.target
    return core.with_gates((h(t),) + core.gates + (h(t),))


def conventional_toffoli_3bit(spec: ToffoliSpec, num_qubits: int | None = None) -> Circuit:
    """Textbook 6-CX Toffoli with T/T-dagger written as RZ(+-pi/4)."""
    if spec.m != 2:
        raise InvalidSpecError(f"conventional baseline only covers 2 controls, got {spec.m}")
    a, b = spec.controls
    t = spec.target
    T, Tdg = T_ANGLE, -T_ANGLE
    gates = [
        h(t),
        cx(b, t), rz(t, Tdg),
        cx(a, t), rz(t, T),
        cx(b, t), rz(t, Tdg),
        cx(a, t), rz(b, T), rz(t, T),
        h(t),
        cx(a, b), rz(a, T), rz(b, Tdg),
        cx(a, b),
    ]
    return Circuit(_width(spec.min_width, num_qubits), tuple(gates))

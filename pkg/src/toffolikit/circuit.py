"""Gate-level circuit IR.

Contains:
    - Angle: exact dyadic multiple of pi, reduced into (-pi, pi]
    - Kind / Gate: native gates (RZ, SX, CX) plus the H and SWAP macros
    - Circuit: immutable ordered gate list over indexed qubits
    - compose, expand_macros, gate_counts, depth
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import pi
from typing import Iterable


class CircuitError(ValueError):
    """Malformed gate or circuit."""


class CompositionError(CircuitError):
    pass


class MacroGateError(CircuitError):
    """A macro gate (H or SWAP) reached a pass that needs native gates only."""


@dataclass(frozen=True)
class Angle:
    """``numerator / 2**log2_denominator`` times pi, kept canonical.

    Canonical means the value lies in (-pi, pi], the numerator is odd (or zero),
    and a zero angle has ``log2_denominator == 0``.
    """

    numerator: int = 0
    log2_denominator: int = 0

    def __post_init__(self):
        num, k = int(self.numerator), int(self.log2_denominator)
        if k < 0:
            raise CircuitError(f"negative log2 denominator: {k}")
        period = 1 << (k + 1)
        num %= period
        if num > period // 2:
            num -= period
        while num != 0 and num % 2 == 0 and k > 0:
            num //= 2
            k -= 1
        if num == 0:
            k = 0
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "log2_denominator", k)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Angle":
        """Angle of ``value * pi``; the denominator must be a power of two."""
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise CircuitError(f"{value}*pi is not a dyadic angle")
        return cls(value.numerator, den.bit_length() - 1)

    @property
    def fraction(self) -> Fraction:
        """The angle as a multiple of pi."""
        return Fraction(self.numerator, 1 << self.log2_denominator)

    @property
    def radians(self) -> float:
        return float(self.fraction) * pi

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __add__(self, other: "Angle") -> "Angle":
        if not isinstance(other, Angle):
            return NotImplemented
        k = max(self.log2_denominator, other.log2_denominator)
        num = (self.numerator << (k - self.log2_denominator)) + (
            other.numerator << (k - other.log2_denominator)
        )
        return Angle(num, k)

    def __neg__(self) -> "Angle":
        return Angle(-self.numerator, self.log2_denominator)

    def __sub__(self, other: "Angle") -> "Angle":
        return self + (-other)

    def __str__(self) -> str:
        num, den = self.numerator, 1 << self.log2_denominator
        if num == 0:
            return "0"
        sign = "-" if num < 0 else ""
        head = "pi" if abs(num) == 1 else f"{abs(num)}*pi"
        return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


ZERO = Angle(0)
HALF_PI = Angle(1, 1)


class Kind(str, Enum):
    RZ = "rz"
    SX = "sx"
    CX = "cx"
    H = "h"
    SWAP = "swap"

    @property
    def native(self) -> bool:
        return self in (Kind.RZ, Kind.SX, Kind.CX)

    @property
    def arity(self) -> int:
        return 2 if self in (Kind.CX, Kind.SWAP) else 1


@dataclass(frozen=True)
class Gate:
    kind: Kind
    qubits: tuple[int, ...]
    angle: Angle | None = None

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, "qubits", qubits)
        if len(qubits) != self.kind.arity:
            raise CircuitError(f"{self.kind.value} takes {self.kind.arity} qubit(s), got {qubits}")
        if any(q < 0 for q in qubits):
            raise CircuitError(f"negative qubit index in {qubits}")
        if len(set(qubits)) != len(qubits):
            raise CircuitError(f"{self.kind.value} on repeated qubit {qubits}")
        if (self.kind is Kind.RZ) != (self.angle is not None):
            raise CircuitError("only rz carries an angle")

    def relabel(self, mapping) -> "Gate":
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits), self.angle)

    def __str__(self) -> str:
        args = ",".join(f"q{q}" for q in self.qubits)
        if self.angle is not None:
            return f"{self.kind.value}({self.angle}) {args}"
        return f"{self.kind.value} {args}"


def rz(qubit: int, angle: Angle) -> Gate:
    return Gate(Kind.RZ, (qubit,), angle)


def sx(qubit: int) -> Gate:
    return Gate(Kind.SX, (qubit,))


def cx(control: int, target: int) -> Gate:
    return Gate(Kind.CX, (control, target))


def h(qubit: int) -> Gate:
    return Gate(Kind.H, (qubit,))


def swap(a: int, b: int) -> Gate:
    return Gate(Kind.SWAP, (a, b))


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise CircuitError("a circuit needs at least one qubit")
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for g in gates:
            if max(g.qubits) >= self.num_qubits:
                raise CircuitError(f"{g} out of range for {self.num_qubits} qubits")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __getitem__(self, index):
        return self.gates[index]

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.num_qubits, tuple(gates))

    def is_native(self) -> bool:
        return all(g.kind.native for g in self.gates)

    def __str__(self) -> str:
        body = "\n".join(f"  {g}" for g in self.gates)
        return f"Circuit({self.num_qubits} qubits, {len(self.gates)} gates)\n{body}"


def compose(a: Circuit, b: Circuit) -> Circuit:
    """``a`` followed by ``b``."""
    if a.num_qubits != b.num_qubits:
        raise CompositionError(f"cannot compose {a.num_qubits}-qubit and {b.num_qubits}-qubit circuits")
    return Circuit(a.num_qubits, a.gates + b.gates)


def expand_macros(c: Circuit) -> Circuit:
    """Rewrite H and SWAP into rz/sx/cx.

    H -> RZ(pi/2) SX RZ(pi/2), which equals the Hadamard up to global phase.
    SWAP(a, b) -> CX(a, b) CX(b, a) CX(a, b), exact.
    """
    out: list[Gate] = []
    for g in c.gates:
        if g.kind is Kind.H:
            (q,) = g.qubits
            out += [rz(q, HALF_PI), sx(q), rz(q, HALF_PI)]
        elif g.kind is Kind.SWAP:
            a, b = g.qubits
            out += [cx(a, b), cx(b, a), cx(a, b)]
        else:
            out.append(g)
    return c.with_gates(out)


def require_native(c: Circuit, what: str = "this operation") -> None:
    for g in c.gates:
        if not g.kind.native:
            raise MacroGateError(f"{what} needs native gates only; found macro {g}")


def gate_counts(c: Circuit) -> tuple[int, int]:
    """(single-qubit native count, CX count)."""
    require_native(c, "gate counting")
    n2 = sum(1 for g in c.gates if g.kind is Kind.CX)
    return len(c.gates) - n2, n2


def depth(c: Circuit) -> int:
    """Longest chain of gates linked by shared qubits, unit duration per gate."""
    require_native(c, "depth")
    level = [0] * c.num_qubits
    for g in c.gates:
        layer = 1 + max(level[q] for q in g.qubits)
        for q in g.qubits:
            level[q] = layer
    return max(level, default=0)


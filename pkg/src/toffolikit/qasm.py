"""OpenQASM 2.0 export/import for the rz, sx, cx, h, swap subset.

Angles are written as exact multiples of pi (``pi/8``, ``-3*pi/4``, ``0``),
never as decimals, so a dump/load round trip is lossless.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .circuit import Angle, Circuit, CircuitError, Gate, Kind

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_ANGLE = re.compile(r"^(-)?(?:(\d+)\*)?pi(?:/(\d+))?$")
_QREG = re.compile(r"^qreg\s+(\w+)\s*\[\s*(\d+)\s*\]$")
_CREG = re.compile(r"^creg\s+\w+\s*\[\s*\d+\s*\]$")
_GATE = re.compile(r"^(\w+)\s*(?:\(([^)]*)\))?\s+(.+)$")
_ARG = re.compile(r"^(\w+)\s*\[\s*(\d+)\s*\]$")


class QasmError(ValueError):
    pass


def dumps(c: Circuit, reg: str = "q") -> str:
    lines = [HEADER + f"qreg {reg}[{c.num_qubits}];"]
    for g in c.gates:
        args = ",".join(f"{reg}[{q}]" for q in g.qubits)
        head = g.kind.value if g.angle is None else f"{g.kind.value}({g.angle})"
        lines.append(f"{head} {args};")
    return "\n".join(lines) + "\n"


def parse_angle(text: str) -> Angle:
    s = re.sub(r"\s+", "", text)
    if re.fullmatch(r"[+-]?0+", s):
        return Angle(0)
    m = _ANGLE.match(s)
    if not m:
        raise QasmError(f"angle {text!r} is not an exact dyadic multiple of pi")
    sign, num, den = m.groups()
    value = Fraction(int(num or 1), int(den or 1))
    try:
        return Angle.from_fraction(-value if sign else value)
    except CircuitError as exc:
        raise QasmError(str(exc)) from None


def loads(text: str) -> Circuit:
    text = re.sub(r"//[^\n]*", "", text)
    statements = [s.strip() for s in text.split(";")]
    statements = [s for s in statements if s]
    if not statements or not re.fullmatch(r"OPENQASM\s+2(\.0)?", statements[0]):
        raise QasmError("missing 'OPENQASM 2.0;' header")
    reg = size = None
    gates: list[Gate] = []
    kinds = {k.value: k for k in Kind}
    for stmt in statements[1:]:
        if stmt.startswith("include"):
            continue
        if m := _QREG.match(stmt):
            if reg is not None:
                raise QasmError("only a single qreg is supported")
            reg, size = m.group(1), int(m.group(2))
            continue
        if _CREG.match(stmt):
            continue
        m = _GATE.match(stmt)
        if not m or m.group(1) not in kinds:
            raise QasmError(f"unsupported statement: {stmt!r}")
        if reg is None:
            raise QasmError(f"gate before qreg declaration: {stmt!r}")
        kind = kinds[m.group(1)]
        qubits = []
        for arg in m.group(3).split(","):
            a = _ARG.match(arg.strip())
            if not a or a.group(1) != reg:
                raise QasmError(f"bad qubit argument {arg.strip()!r} in {stmt!r}")
            qubits.append(int(a.group(2)))
        params = m.group(2)
        if (kind is Kind.RZ) != (params is not None):
            raise QasmError(f"wrong parameters for {kind.value}: {stmt!r}")
        angle = parse_angle(params) if params is not None else None
        try:
            gates.append(Gate(kind, tuple(qubits), angle))
        except CircuitError as exc:
            raise QasmError(f"{stmt!r}: {exc}") from None
    if reg is None:
        raise QasmError("no qreg declared")
    try:
        return Circuit(size, tuple(gates))
    except CircuitError as exc:
        raise QasmError(str(exc)) from None

"""RZ fusion.

Merges RZ gates on the same qubit when no gate in between touches that qubit,
and drops rotations whose exact angle is zero. Nothing else is rewritten: CX
and SX are left alone and RZ is never moved through a CX.
"""
from __future__ import annotations

from .circuit import Circuit, Gate, Kind, require_native, rz


def fuse_rz(c: Circuit) -> Circuit:
    require_native(c, "rz fusion")
    out: list[Gate | None] = []
    # index into `out` of the pending rz on each qubit, if the wire ends in one
    open_rz: dict[int, int] = {}
    for g in c.gates:
        if g.kind is Kind.RZ:
            (q,) = g.qubits
            i = open_rz.get(q)
            if i is None:
                open_rz[q] = len(out)
                out.append(g)
            else:
                out[i] = rz(q, out[i].angle + g.angle)
            continue
        for q in g.qubits:
            open_rz.pop(q, None)
        out.append(g)
    return c.with_gates(g for g in out if not (g.kind is Kind.RZ and g.angle.is_zero()))

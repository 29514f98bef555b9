"""Placement and SWAP routing onto a coupling layout.

Routing is deterministic. A CX whose endpoints are not linked moves its control
along the lexicographically smallest shortest path until it sits next to the
target. The moved control stays there until some later CX cannot be served
from the current arrangement; then every pending SWAP is undone in reverse
order before routing that CX. Anything still pending is undone at the end,
so the final map equals the initial map.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .circuit import Circuit, Gate, Kind, cx, expand_macros, swap
from .optimize import fuse_rz
from .synth import ToffoliSpec, conventional_toffoli_3bit, layout_aware_toffoli
from .topology import CouplingLayout, LayoutError, NClass, Placement, classify, enumerate_configurations


class RoutingError(ValueError):
    pass


@dataclass(frozen=True)
class MappedCircuit:
    circuit: Circuit
    layout: CouplingLayout
    initial_map: dict[int, int]
    final_map: dict[int, int]
    swap_count: int
    placement: Placement | None = field(default=None, compare=False)


def place(spec: ToffoliSpec, layout: CouplingLayout) -> Placement:
    """Physical qubits for the target and each control of ``spec``.

    Optimal-n: the first star configuration. Otherwise the target goes to the
    lowest-indexed qubit of maximum degree and the controls are handed out
    busiest first (innermost control) to the nearest free qubits.
    """
    n = spec.n
    if n > layout.num_qubits:
        raise LayoutError(f"n={n} exceeds layout capacity ({layout.num_qubits} qubits)")
    if classify(layout, n) is NClass.OPTIMAL:
        return enumerate_configurations(layout, n)[0]
    qubits = range(layout.num_qubits)
    target = max(qubits, key=lambda q: (layout.degree(q), -q))
    dist = layout.distances_from(target)
    nearest = sorted((q for q in qubits if q != target), key=lambda q: (dist[q], q))
    busiest_first = nearest[: spec.m]
    return Placement(target, tuple(reversed(busiest_first)))


def _path_to_neighbor(layout: CouplingLayout, src: int, dst: int) -> list[int]:
    """Lexicographically smallest shortest path src -> dst, dst excluded."""
    dist = layout.distances_from(dst)
    if src not in dist:
        raise RoutingError(f"qubits {src} and {dst} are disconnected in {layout.name}")
    path = [src]
    while dist[path[-1]] > 1:
        here = path[-1]
        path.append(min(q for q in layout.neighbors(here) if dist[q] == dist[here] - 1))
    return path


def route(c: Circuit, placement: Placement, layout: CouplingLayout,
          spec: ToffoliSpec | None = None) -> MappedCircuit:
    """Map ``c`` onto ``layout`` and return the expanded, fused physical circuit.

    ``spec`` names the logical qubits of ``c`` that ``placement`` assigns; it
    defaults to the standard arrangement (controls 0..n-2, target n-1).
    """
    placement.check(layout)
    if spec is None:
        spec = ToffoliSpec.standard(len(placement.qubits))
    if spec.m != len(placement.controls):
        raise RoutingError(f"placement has {len(placement.controls)} controls, circuit spec has {spec.m}")
    initial = dict(zip(spec.qubits, placement.qubits))
    for g in c.gates:
        stray = [q for q in g.qubits if q not in initial]
        if stray:
            raise RoutingError(f"gate {g} uses qubit(s) {stray} not covered by the placement")

    pos = dict(initial)
    at = {p: q for q, p in pos.items()}
    out: list[Gate] = []
    pending: list[tuple[int, int]] = []

    def do_swap(a: int, b: int) -> None:
        out.append(swap(a, b))
        qa, qb = at.pop(a, None), at.pop(b, None)
        if qa is not None:
            pos[qa], at[b] = b, qa
        if qb is not None:
            pos[qb], at[a] = a, qb

    def restore() -> None:
        while pending:
            do_swap(*pending.pop())

    for g in c.gates:
        if g.kind is Kind.SWAP:
            raise RoutingError("input circuit already contains SWAP gates")
        if g.kind is Kind.CX:
            ctrl, tgt = g.qubits
            if not layout.adjacent(pos[ctrl], pos[tgt]):
                restore()
            if not layout.adjacent(pos[ctrl], pos[tgt]):
                path = _path_to_neighbor(layout, pos[ctrl], pos[tgt])
                for a, b in zip(path, path[1:]):
                    do_swap(a, b)
                    pending.append((a, b))
            out.append(cx(pos[ctrl], pos[tgt]))
        else:
            out.append(g.relabel(pos))
    restore()

    swaps = sum(1 for g in out if g.kind is Kind.SWAP)
    native = fuse_rz(expand_macros(Circuit(layout.num_qubits, tuple(out))))
    return MappedCircuit(native, layout, initial, dict(pos), swaps, placement)


def transpile(n: int, layout: CouplingLayout, placement: Placement | None = None,
              mode: str = "layout-aware") -> MappedCircuit:
    """Synthesize the n-qubit gate on standard logical qubits and route it."""
    if n > layout.num_qubits:
        raise LayoutError(f"n={n} exceeds layout capacity ({layout.num_qubits} qubits)")
    spec = ToffoliSpec.standard(n)
    if mode == "layout-aware":
        logical = layout_aware_toffoli(spec)
        if placement is None:
            placement = place(spec, layout)
    elif mode == "conventional":
        logical = conventional_toffoli_3bit(spec)
        if placement is None:
            placement = Placement(spec.target, spec.controls)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if len(placement.qubits) != n:
        raise LayoutError(f"placement names {len(placement.qubits)} qubits, n={n}")
    return route(logical, placement, layout, spec)

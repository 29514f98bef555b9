"""Device coupling layouts and star placements."""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from pathlib import Path

import networkx as nx


class LayoutError(ValueError):
    pass


@dataclass(frozen=True)
class CouplingLayout:
    name: str
    num_qubits: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        edges = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise LayoutError(f"self-loop on qubit {a}")
            if not (0 <= a < self.num_qubits and 0 <= b < self.num_qubits):
                raise LayoutError(f"edge ({a}, {b}) outside {self.num_qubits} qubits")
            edges.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(edges))
        if self.num_qubits < 1:
            raise LayoutError("layout needs at least one qubit")
        if not nx.is_connected(self.graph):
            raise LayoutError(f"layout {self.name!r} is not connected")

    @property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.num_qubits))
        g.add_edges_from(self.edges)
        return g

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, q: int) -> list[int]:
        return sorted(b if a == q else a for a, b in self.edges if q in (a, b))

    def degree(self, q: int) -> int:
        return len(self.neighbors(q))

    def distances_from(self, q: int) -> dict[int, int]:
        return nx.single_source_shortest_path_length(self.graph, q)

    def to_json(self) -> dict:
        return {"name": self.name, "num_qubits": self.num_qubits,
                "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, doc: dict) -> "CouplingLayout":
        try:
            return cls(str(doc["name"]), int(doc["num_qubits"]),
                       frozenset(tuple(e) for e in doc["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, LayoutError):
                raise
            raise LayoutError(f"bad layout document: {exc}") from exc


PRESETS: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    # ibmq_manila
    "linear5": (5, ((0, 1), (1, 2), (2, 3), (3, 4))),
    # ibmq_lima / belem / quito
    "tlike5": (5, ((0, 1), (1, 2), (1, 3), (3, 4))),
    # ibmq_jakarta / nairobi / lagos / perth
    "ilike7": (7, ((0, 1), (1, 2), (1, 3), (3, 5), (4, 5), (5, 6))),
}

DEVICES = {"linear5": "ibmq_manila", "tlike5": "ibmq_quito", "ilike7": "ibmq_perth"}


def preset_layout(name: str) -> CouplingLayout:
    try:
        num_qubits, edges = PRESETS[name]
    except KeyError:
        raise LayoutError(f"unknown layout {name!r}; presets are {', '.join(PRESETS)}") from None
    return CouplingLayout(name, num_qubits, frozenset(edges))


def load_layout(spec: str) -> CouplingLayout:
    """A preset name, or a path to a layout JSON file."""
    if spec in PRESETS:
        return preset_layout(spec)
    path = Path(spec)
    if not path.is_file():
        raise LayoutError(f"{spec!r} is neither a preset nor a layout file")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise LayoutError(f"{path}: {exc}") from exc
    return CouplingLayout.from_json(doc)


@dataclass(frozen=True)
class Placement:
    target: int
    controls: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        qubits = self.qubits
        if len(set(qubits)) != len(qubits) or min(qubits) < 0:
            raise LayoutError(f"placement qubits must be distinct and non-negative: {qubits}")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def check(self, layout: CouplingLayout) -> None:
        if max(self.qubits) >= layout.num_qubits:
            raise LayoutError(f"placement {self.qubits} does not fit {layout.name} ({layout.num_qubits} qubits)")

    def is_star(self, layout: CouplingLayout) -> bool:
        return all(layout.adjacent(c, self.target) for c in self.controls)

    def to_json(self) -> dict:
        return {"target": self.target, "controls": list(self.controls)}


class NClass(str, Enum):
    OPTIMAL = "optimal-n"
    CRITICAL = "critical-n"


def enumerate_configurations(layout: CouplingLayout, n: int) -> list[Placement]:
    """Every star placement: target plus an ordered choice of n-1 of its neighbours."""
    if not 3 <= n <= 4:
        raise LayoutError(f"optimal-n configurations are only defined for 3 <= n <= 4, got {n}")
    m = n - 1
    return [
        Placement(t, ctrls)
        for t in range(layout.num_qubits)
        for ctrls in permutations(layout.neighbors(t), m)
    ]


def classify(layout: CouplingLayout, n: int) -> NClass:
    if n > layout.num_qubits:
        raise LayoutError(f"n={n} exceeds layout capacity ({layout.num_qubits} qubits)")
    if n < 3:
        raise LayoutError(f"n must be at least 3, got {n}")
    if n <= 4 and enumerate_configurations(layout, n):
        return NClass.OPTIMAL
    return NClass.CRITICAL

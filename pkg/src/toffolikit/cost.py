"""Transpilation quantum cost: N1 + N2 + XC + D."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .circuit import depth, gate_counts
from .router import MappedCircuit


@dataclass(frozen=True)
class TqcReport:
    n1: int
    n2: int
    xc: int
    d: int

    def __post_init__(self):
        if min(self.n1, self.n2, self.xc, self.d) < 0:
            raise ValueError(f"negative cost component in {self!r}")

    @property
    def tqc(self) -> int:
        return self.n1 + self.n2 + self.xc + self.d

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return self.n1, self.n2, self.xc, self.d, self.tqc


def compute_tqc(mc: MappedCircuit) -> TqcReport:
    n1, n2 = gate_counts(mc.circuit)
    return TqcReport(n1, n2, mc.swap_count, depth(mc.circuit))


REPORT_FIELDS = ("layout", "n", "mode", "n1", "n2", "xc", "depth", "tqc", "placement")


def report_dict(report: TqcReport, layout: str, n: int, mode: str, placement=None) -> dict:
    doc = asdict(report)
    doc["depth"] = doc.pop("d")
    doc.update(layout=layout, n=n, mode=mode, tqc=report.tqc,
               placement=placement.to_json() if placement is not None else None)
    return {k: doc[k] for k in REPORT_FIELDS}


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"

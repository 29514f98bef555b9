"""Configuration-count and transpilation-cost tables for the three presets.

Published reference numbers (IBM QPU runs) are kept alongside so our own
figures can be printed next to them. Conventional-gate rows above n=3 come
from IBM's transpiler and are shown as external citations only.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cost import TqcReport, compute_tqc
from .router import transpile
from .topology import DEVICES, NClass, classify, enumerate_configurations, preset_layout

# (layout, n) -> (n1, n2, xc, d, tqc)
PUBLISHED_LAYOUT_AWARE = {
    ("linear5", 3): (8, 3, 0, 11, 22),
    ("tlike5", 3): (8, 3, 0, 11, 22),
    ("ilike7", 3): (8, 3, 0, 11, 22),
    ("linear5", 4): (12, 13, 2, 19, 46),
    ("tlike5", 4): (12, 7, 0, 19, 38),
    ("ilike7", 4): (12, 7, 0, 19, 38),
    ("linear5", 5): (20, 33, 6, 41, 100),
    ("tlike5", 5): (20, 21, 2, 35, 78),
    ("ilike7", 5): (20, 21, 2, 35, 78),
    ("ilike7", 6): (36, 55, 8, 76, 175),
    ("ilike7", 7): (68, 123, 20, 152, 363),
}

PUBLISHED_CONVENTIONAL = {
    ("linear5", 3): (12, 9, 1, 19, 41),
    ("tlike5", 3): (12, 9, 1, 19, 41),
    ("ilike7", 3): (12, 9, 1, 19, 41),
    ("linear5", 4): (20, 29, 5, 30, 84),
    ("tlike5", 4): (20, 20, 2, 33, 75),
    ("ilike7", 4): (20, 29, 5, 30, 84),
    ("linear5", 5): (61, 87, 17, 77, 242),
    ("tlike5", 5): (61, 69, 11, 51, 192),
    ("ilike7", 5): (61, 69, 11, 51, 192),
    ("ilike7", 6): (98, 173, 26, 159, 456),
    ("ilike7", 7): (194, 335, 49, 284, 862),
}

PUBLISHED_CONFIGURATIONS = {
    ("linear5", 3): 6, ("linear5", 4): None,
    ("tlike5", 3): 8, ("tlike5", 4): 6,
    ("ilike7", 3): 14, ("ilike7", 4): 12,
}

LAYOUT_ORDER = ("linear5", "tlike5", "ilike7")


def configuration_table() -> list[dict]:
    rows = []
    for name in LAYOUT_ORDER:
        layout = preset_layout(name)
        for n in (3, 4):
            count = len(enumerate_configurations(layout, n)) or None
            rows.append({
                "layout": name, "device": DEVICES[name], "n": n, "linkages": n - 1,
                "configurations": count,
                "published": PUBLISHED_CONFIGURATIONS[(name, n)],
            })
    return rows


@dataclass(frozen=True)
class CostRow:
    layout: str
    n: int
    nclass: NClass
    report: TqcReport
    placement: object
    published: tuple[int, ...]
    conventional: TqcReport | None
    published_conventional: tuple[int, ...]

    @property
    def contracted(self) -> bool:
        """Star placement: the numbers are fixed by construction, not by the router."""
        return self.nclass is NClass.OPTIMAL

    @property
    def matches(self) -> bool:
        return self.report.as_tuple() == self.published

    def to_json(self) -> dict:
        return {
            "layout": self.layout,
            "device": DEVICES[self.layout],
            "n": self.n,
            "class": self.nclass.value,
            "contracted": self.contracted,
            "ours": dict(zip(("n1", "n2", "xc", "depth", "tqc"), self.report.as_tuple())),
            "published": dict(zip(("n1", "n2", "xc", "depth", "tqc"), self.published)),
            "matches_published": self.matches,
            "placement": self.placement.to_json(),
            "conventional_ours": (dict(zip(("n1", "n2", "xc", "depth", "tqc"), self.conventional.as_tuple()))
                                  if self.conventional else None),
            "conventional_published_external": dict(zip(("n1", "n2", "xc", "depth", "tqc"),
                                                         self.published_conventional)),
        }


def cost_table() -> list[CostRow]:
    rows = []
    for (name, n), published in PUBLISHED_LAYOUT_AWARE.items():
        layout = preset_layout(name)
        mc = transpile(n, layout)
        conventional = compute_tqc(transpile(3, layout, mode="conventional")) if n == 3 else None
        rows.append(CostRow(name, n, classify(layout, n), compute_tqc(mc), mc.placement,
                            published, conventional, PUBLISHED_CONVENTIONAL[(name, n)]))
    rows.sort(key=lambda r: (r.n, LAYOUT_ORDER.index(r.layout)))
    return rows

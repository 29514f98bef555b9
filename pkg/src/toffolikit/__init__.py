"""Layout-aware multi-controlled Toffoli synthesis, routing and transpilation cost."""
from .circuit import Angle, Circuit, Gate, Kind, compose, depth, expand_macros, gate_counts
from .cost import TqcReport, compute_tqc
from .optimize import fuse_rz
from .router import MappedCircuit, place, route, transpile
from .synth import ToffoliSpec, conventional_toffoli_3bit, layout_aware_toffoli, rotation_angle
from .topology import CouplingLayout, NClass, Placement, classify, enumerate_configurations, preset_layout

__all__ = [
    "Angle", "Circuit", "Gate", "Kind", "compose", "depth", "expand_macros", "gate_counts",
    "TqcReport", "compute_tqc", "fuse_rz", "MappedCircuit", "place", "route", "transpile",
    "ToffoliSpec", "conventional_toffoli_3bit", "layout_aware_toffoli", "rotation_angle",
    "CouplingLayout", "NClass", "Placement", "classify", "enumerate_configurations", "preset_layout",
]

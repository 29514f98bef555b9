import numpy as np
import pytest

from toffolikit.circuit import Circuit, Kind, cx, expand_macros, gate_counts, h
from toffolikit.cost import compute_tqc
from toffolikit.optimize import fuse_rz
from toffolikit.router import RoutingError, place, route, transpile
from toffolikit.synth import ToffoliSpec, layout_aware_toffoli
from toffolikit.topology import (
    NClass, Placement, classify, enumerate_configurations, preset_layout,
)
from toffolikit.verify import basis_index, basis_state, check_and_behavior, simulate, unitary_of

PRESETS = ["linear5", "tlike5", "ilike7"]
CASES = [(name, n) for name in PRESETS for n in range(3, preset_layout(name).num_qubits + 1)]


def physical_specs(mc):
    logical = ToffoliSpec.standard(len(mc.initial_map))
    spec_in = ToffoliSpec(tuple(mc.initial_map[q] for q in logical.controls), mc.initial_map[logical.target])
    spec_out = ToffoliSpec(tuple(mc.final_map[q] for q in logical.controls), mc.final_map[logical.target])
    return spec_in, spec_out


class TestPlace:
    def test_tlike5_n3_is_star(self):
        layout = preset_layout("tlike5")
        p = place(ToffoliSpec.standard(3), layout)
        assert p.is_star(layout)

    def test_linear5_n5(self):
        layout = preset_layout("linear5")
        p = place(ToffoliSpec.standard(5), layout)
        assert p.target in (1, 2)
        assert not p.is_star(layout)

    def test_tlike5_n4_hub(self):
        assert place(ToffoliSpec.standard(4), preset_layout("tlike5")).target == 1

    def test_busiest_control_adjacent(self):
        for name, n in CASES:
            layout = preset_layout(name)
            p = place(ToffoliSpec.standard(n), layout)
            assert layout.adjacent(p.controls[-1], p.target)

    def test_too_large(self):
        with pytest.raises(ValueError):
            place(ToffoliSpec.standard(6), preset_layout("tlike5"))


class TestRoute:
    @pytest.mark.parametrize("name, n", [(name, n) for name in PRESETS for n in (3, 4)])
    def test_every_star_configuration_is_swap_free(self, name, n):
        layout = preset_layout(name)
        configs = enumerate_configurations(layout, n)
        spec = ToffoliSpec.standard(n)
        logical = layout_aware_toffoli(spec)
        for p in configs:
            mc = route(logical, p, layout, spec)
            assert mc.swap_count == 0
            direct = fuse_rz(expand_macros(layout_aware_toffoli(ToffoliSpec(p.controls, p.target), layout.num_qubits)))
            assert mc.circuit == direct

    def test_linear5_n4_forced(self):
        mc = transpile(4, preset_layout("linear5"))
        assert mc.swap_count == 2
        assert gate_counts(mc.circuit)[1] == 13

    def test_empty_circuit(self):
        layout = preset_layout("tlike5")
        mc = route(Circuit(3), Placement(1, (0, 2)), layout)
        assert mc.swap_count == 0 and len(mc.circuit) == 0

    @pytest.mark.parametrize("name, n", CASES)
    def test_legality(self, name, n):
        layout = preset_layout(name)
        mc = transpile(n, layout)
        assert mc.circuit.is_native()
        for g in mc.circuit:
            if g.kind is Kind.CX:
                assert layout.adjacent(*g.qubits), g

    @pytest.mark.parametrize("name, n", CASES)
    def test_functional_preservation(self, name, n):
        mc = transpile(n, preset_layout(name))
        spec_in, spec_out = physical_specs(mc)
        table = check_and_behavior(mc.circuit, spec_in, spec_out)
        assert table.passed, table.failures

    @pytest.mark.parametrize("name, n", CASES)
    def test_swap_accounting(self, name, n):
        mc = transpile(n, preset_layout(name))
        assert gate_counts(mc.circuit)[1] == 2 ** (n - 1) - 1 + 3 * mc.swap_count
        assert (mc.swap_count > 0) == (classify(preset_layout(name), n) is NClass.CRITICAL)

    @pytest.mark.parametrize("name, n", CASES)
    def test_final_map_restored(self, name, n):
        mc = transpile(n, preset_layout(name))
        assert mc.final_map == mc.initial_map

    @pytest.mark.parametrize("name", PRESETS)
    def test_tqc_monotone(self, name):
        layout = preset_layout(name)
        tqcs = [compute_tqc(transpile(n, layout)).tqc for n in range(3, layout.num_qubits + 1)]
        assert all(a < b for a, b in zip(tqcs, tqcs[1:]))

    def test_conventional_routed_is_exact_toffoli_on_used_qubits(self):
        layout = preset_layout("linear5")
        mc = transpile(3, layout, mode="conventional")
        assert mc.swap_count > 0
        for g in mc.circuit:
            if g.kind is Kind.CX:
                assert layout.adjacent(*g.qubits)
        spec_in, spec_out = physical_specs(mc)
        assert check_and_behavior(mc.circuit, spec_in, spec_out).passed
        # the conventional gate is a true Toffoli: check a superposed target too
        psi = basis_state(5, {0: 1, 1: 1}) + basis_state(5, {0: 1, 1: 1, 2: 1})
        out = simulate(mc.circuit, psi / np.sqrt(2))
        i0, i1 = basis_index({0: 1, 1: 1}), basis_index({0: 1, 1: 1, 2: 1})
        assert abs(out[i0] - out[i1]) < 1e-12 and abs(abs(out[i0]) ** 2 - 0.5) < 1e-12

    def test_routed_unitary_equals_logical_when_restored(self):
        # Routing with restoration is exact: on the used qubits it reproduces the
        # relabelled logical unitary, not just the |0>-target truth table.
        layout = preset_layout("linear5")
        spec = ToffoliSpec.standard(4)
        p = place(spec, layout)
        mc = route(layout_aware_toffoli(spec), p, layout, spec)
        direct = fuse_rz(expand_macros(layout_aware_toffoli(ToffoliSpec(p.controls, p.target), layout.num_qubits)))
        np.testing.assert_allclose(unitary_of(mc.circuit), unitary_of(direct), atol=1e-10, rtol=0)

    def test_rejects_uncovered_qubits(self):
        layout = preset_layout("linear5")
        with pytest.raises(RoutingError):
            route(Circuit(5, (cx(0, 4),)), Placement(2, (0, 1)), layout)

    def test_rejects_control_count_mismatch(self):
        with pytest.raises(RoutingError):
            route(Circuit(3, (h(2),)), Placement(2, (0, 1)), preset_layout("linear5"), ToffoliSpec.standard(4))

"""Command line entry point: synth, verify, cost, table, layouts.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import qasm
from .circuit import Circuit, CircuitError, depth, gate_counts
from .cost import TqcReport, compute_tqc, dumps_report, report_dict
from .router import MappedCircuit, RoutingError, transpile
from .synth import ToffoliSpec
from .tables import configuration_table, cost_table
from .topology import PRESETS, CouplingLayout, LayoutError, Placement, load_layout, preset_layout
from .verify import SimulationError, check_and_behavior

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

INPUT_ERRORS = (CircuitError, LayoutError, RoutingError, SimulationError, qasm.QasmError, OSError)


class UsageError(ValueError):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k) for k in fields})
    return buf.getvalue()


def _json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _parse_placement(text: str | None) -> Placement | None:
    """``c0,c1,...,target``: controls outermost first, target last."""
    if text is None:
        return None
    try:
        qubits = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--placement must be a comma list of integers, got {text!r}") from None
    if len(qubits) < 3:
        raise UsageError("--placement needs at least two controls and a target")
    return Placement(qubits[-1], tuple(qubits[:-1]))


def _layout_and_n(args) -> tuple[CouplingLayout, int]:
    layout = load_layout(args.layout)
    placement = _parse_placement(args.placement)
    n = args.n if args.n is not None else (len(placement.qubits) if placement else None)
    if n is None:
        raise UsageError("--n is required")
    if n < 3:
        raise UsageError(f"n must be at least 3, got {n}")
    if n > layout.num_qubits:
        raise LayoutError(f"n exceeds layout capacity: n={n}, {layout.name} has {layout.num_qubits} qubits")
    if args.mode == "conventional" and n != 3:
        raise UsageError("the conventional baseline is only available for n=3")
    if placement is not None and len(placement.qubits) != n:
        raise UsageError(f"--placement names {len(placement.qubits)} qubits but n={n}")
    return layout, n


def _transpile(args) -> tuple[MappedCircuit, int]:
    layout, n = _layout_and_n(args)
    return transpile(n, layout, _parse_placement(args.placement), mode=args.mode), n


def _gate_rows(c: Circuit) -> list[dict]:
    return [{"index": i, "gate": g.kind.value, "qubits": list(g.qubits),
             "angle": str(g.angle) if g.angle is not None else None}
            for i, g in enumerate(c.gates)]


def _report_text(doc: dict) -> str:
    placement = doc["placement"]
    where = f" target={placement['target']} controls={placement['controls']}" if placement else ""
    return (f"{doc['layout']} n={doc['n']} {doc['mode']}{where}\n"
            f"N1={doc['n1']} N2={doc['n2']} XC={doc['xc']} D={doc['depth']} TQC={doc['tqc']}\n")


def cmd_synth(args) -> int:
    mc, n = _transpile(args)
    doc = report_dict(compute_tqc(mc), mc.layout.name, n, args.mode, mc.placement)
    c = mc.circuit
    if args.format == "qasm":
        text = qasm.dumps(c)
    elif args.format == "json":
        text = _json({"num_qubits": c.num_qubits,
                      "gates": [{k: v for k, v in row.items() if k != "index"} for row in _gate_rows(c)],
                      "report": doc})
    elif args.format == "csv":
        rows = _gate_rows(c)
        for row in rows:
            row["qubits"] = " ".join(map(str, row["qubits"]))
        text = _csv(rows, ["index", "gate", "qubits", "angle"])
    else:
        text = _report_text(doc) + "".join(f"{g}\n" for g in c.gates)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.qasm:
        circuit = qasm.loads(Path(args.qasm).read_text())
        placement = _parse_placement(args.placement)
        if placement is not None:
            spec_in = ToffoliSpec(placement.controls, placement.target)
        elif args.n is not None:
            spec_in = ToffoliSpec.standard(args.n)
        else:
            raise UsageError("--qasm needs --placement or --n to know the controls and target")
        spec_out = spec_in
    else:
        mc, _ = _transpile(args)
        circuit = mc.circuit
        logical = ToffoliSpec.standard(len(mc.initial_map))
        spec_in = ToffoliSpec(tuple(mc.initial_map[q] for q in logical.controls), mc.initial_map[logical.target])
        spec_out = ToffoliSpec(tuple(mc.final_map[q] for q in logical.controls), mc.final_map[logical.target])
    table = check_and_behavior(circuit, spec_in, spec_out)
    rows = [{"controls": "".join(map(str, r.controls)), "expected": r.expected,
             "probability": round(r.probability, 12), "pass": r.passed} for r in table.rows]
    if args.format == "json":
        text = _json({"controls": list(spec_in.controls), "target": spec_in.target,
                      "rows": rows, "passed": table.passed})
    elif args.format == "csv":
        text = _csv(rows, ["controls", "expected", "probability", "pass"])
    else:
        lines = [f"controls={list(spec_in.controls)} target={spec_in.target} (control bits listed outermost first)"]
        lines += [f"{r['controls']} -> {r['expected']}  p={r['probability']:.12f}  "
                  f"{'PASS' if r['pass'] else 'FAIL'}" for r in rows]
        lines.append(f"{'all rows pass' if table.passed else f'{len(table.failures)} row(s) FAILED'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if table.passed else EXIT_FAILED


def cmd_cost(args) -> int:
    if args.qasm:
        circuit = qasm.loads(Path(args.qasm).read_text())
        n1, n2 = gate_counts(circuit)
        doc = report_dict(TqcReport(n1, n2, 0, depth(circuit)), args.layout or "unmapped",
                          args.n or circuit.num_qubits, args.mode, _parse_placement(args.placement))
    else:
        mc, n = _transpile(args)
        doc = report_dict(compute_tqc(mc), mc.layout.name, n, args.mode, mc.placement)
    if args.format == "json":
        text = dumps_report(doc)
    elif args.format == "csv":
        flat = dict(doc, placement=json.dumps(doc["placement"], sort_keys=True))
        text = _csv([flat], list(doc))
    else:
        text = _report_text(doc)
    _emit(text, args.out)
    return EXIT_OK


def _fmt(values) -> str:
    return " ".join(f"{v:>4}" for v in values)


def cmd_table(args) -> int:
    if args.which == "3":
        rows = configuration_table()
        if args.format == "json":
            text = _json(rows)
        elif args.format == "csv":
            text = _csv(rows, ["layout", "device", "n", "linkages", "configurations", "published"])
        else:
            lines = ["layout   device       n  linkages  configurations  published"]
            for r in rows:
                show = lambda v: "N.A." if v is None else str(v)
                lines.append(f"{r['layout']:<8} {r['device']:<12} {r['n']}  {r['linkages']:>8}  "
                             f"{show(r['configurations']):>14}  {show(r['published']):>9}")
            text = "\n".join(lines) + "\n"
    else:
        rows = cost_table()
        if args.format == "json":
            text = _json([r.to_json() for r in rows])
        elif args.format == "csv":
            flat = []
            for r in rows:
                flat.append({"layout": r.layout, "n": r.n, "class": r.nclass.value,
                             "contracted": r.contracted, "matches_published": r.matches,
                             **{f"ours_{k}": v for k, v in zip(("n1", "n2", "xc", "depth", "tqc"), r.report.as_tuple())},
                             **{f"published_{k}": v for k, v in zip(("n1", "n2", "xc", "depth", "tqc"), r.published)}})
            text = _csv(flat, list(flat[0]))
        else:
            lines = ["layout   n  class       ours: N1   N2   XC    D  TQC | published: N1   N2   XC    D  TQC  status",]
            for r in rows:
                status = ("exact" if r.matches else "MISMATCH") if r.contracted else (
                    "router-dependent" + (", matches" if r.matches else ""))
                lines.append(f"{r.layout:<8} {r.n}  {r.nclass.value:<10}  {_fmt(r.report.as_tuple())} |"
                             f"            {_fmt(r.published)}  {status}")
            lines.append("")
            lines.append("conventional gate (ours: 6-CX decomposition, standard placement, n=3 only;"
                         " published values are external citations)")
            for r in rows:
                ours = _fmt(r.conventional.as_tuple()) if r.conventional else "   -    -    -    -    -"
                lines.append(f"{r.layout:<8} {r.n}  ours {ours} | external {_fmt(r.published_conventional)}")
            text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_layouts(args) -> int:
    layouts = [load_layout(args.layout)] if args.layout else [preset_layout(name) for name in PRESETS]
    if args.format == "json":
        text = _json([l.to_json() for l in layouts])
    else:
        lines = []
        for l in layouts:
            degrees = ", ".join(f"q{q}:{l.degree(q)}" for q in range(l.num_qubits))
            edges = " ".join(f"{a}-{b}" for a, b in sorted(l.edges))
            lines.append(f"{l.name}: {l.num_qubits} qubits, {len(l.edges)} edges [{edges}] degrees {degrees}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toffolikit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def circuit_options(p, formats, need_layout=True):
        p.add_argument("--layout", required=need_layout, help="preset (linear5, tlike5, ilike7) or layout JSON file")
        p.add_argument("--n", type=int, help="total qubits: controls plus target")
        p.add_argument("--placement", help="physical qubits c0,c1,...,target (outermost control first)")
        p.add_argument("--mode", choices=["layout-aware", "conventional"], default="layout-aware")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("synth", help="synthesize, route and print the native circuit")
    circuit_options(p, ["text", "json", "csv", "qasm"])
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="brute-force truth table check")
    circuit_options(p, ["text", "json", "csv"], need_layout=False)
    p.add_argument("--qasm", help="check this OpenQASM file instead of synthesizing")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cost", help="transpilation cost report")
    circuit_options(p, ["text", "json", "csv"], need_layout=False)
    p.add_argument("--qasm", help="cost this OpenQASM file instead of synthesizing (XC taken as 0)")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("table", help="reproduce the configuration or cost table")
    p.add_argument("which", choices=["3", "4-layout-aware"])
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("layouts", help="list preset layouts or show a layout file")
    p.add_argument("--layout")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_layouts)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "qasm", None) is None and args.command in ("verify", "cost") and not args.layout:
        print("error: --layout is required unless --qasm is given", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

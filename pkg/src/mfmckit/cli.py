"""Command line front end."""

from __future__ import annotations

import argparse
import json
import sys

from .clutters import MINOR_CAP, enumerate_clutters
from .cones import qa_vertices_direct, support_hyperplanes
from .decisions import conjecture_scan, decide_mfmc
from .errors import (
    EmptyEdge,
    NotAntichain,
    NotSquareFree,
    NotZeroOne,
    OverlappingSpec,
    ParseError,
    SizeLimit,
    ZeroCone,
)
from .hilbert import hilbert_basis
from .reporting import (
    analyze,
    generator_block,
    hyperplane_block,
    parse_input,
    powers_lines,
    powers_table,
    render_text,
    report_to_json,
    verdict_lines,
    vertex_lines,
)

INPUT_ERRORS = (ParseError, NotZeroOne, NotAntichain, EmptyEdge,
                OverlappingSpec, NotSquareFree, ZeroCone)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_analyze(args) -> int:
    doc = parse_input(_read(args.input))
    report = analyze(doc, i_max=args.imax, tdi_bound=args.tdi_bound,
                     minor_cap=args.minor_cap)
    _emit(report_to_json(report) if args.format == "json"
          else render_text(report))
    return 0


def _cmd_facets(args) -> int:
    doc = parse_input(_read(args.input))
    fc = support_hyperplanes(doc.matrix)
    if args.format == "json":
        _emit(json.dumps({
            "coordinate_indices": list(fc.coordinate_indices),
            "vertex_normals": [list(f) for f in fc.vertex_normals],
        }, indent=2, sort_keys=True))
    else:
        _emit(hyperplane_block(fc.all_rows()))
    return 0


def _cmd_hilbert(args) -> int:
    doc = parse_input(_read(args.input))
    basis = hilbert_basis(doc.matrix)
    if args.format == "json":
        _emit(json.dumps([list(z) for z in basis], indent=2))
    else:
        _emit(generator_block(basis))
    return 0


def _cmd_vertices(args) -> int:
    doc = parse_input(_read(args.input))
    qa = qa_vertices_direct(doc.matrix)
    if args.format == "json":
        _emit(json.dumps([[str(x) for x in v] for v in qa.vertices], indent=2))
    else:
        _emit(vertex_lines(qa.vertices))
    return 0


def _cmd_powers(args) -> int:
    doc = parse_input(_read(args.input))
    rows = powers_table(doc.clutter(), args.imax)
    if args.format == "json":
        _emit(json.dumps([vars(r) for r in rows], indent=2))
    else:
        _emit(powers_lines(rows))
    return 0


def _cmd_mfmc(args) -> int:
    doc = parse_input(_read(args.input))
    verdict = decide_mfmc(doc.clutter(), i_max=args.imax,
                          minor_cap=args.minor_cap)
    if args.format == "json":
        from .reporting import _witnesses_to_json

        _emit(json.dumps({
            "mfmc": verdict.mfmc, "normal": verdict.normal,
            "integral": verdict.integral, "koenig": verdict.koenig,
            "packing": verdict.packing, "torsion_free": verdict.torsion_free,
            "ntf": verdict.ntf,
            "witnesses": _witnesses_to_json(verdict.witnesses),
            "i_max_checked": verdict.i_max_checked,
        }, indent=2, sort_keys=True))
    else:
        _emit(verdict_lines(verdict))
    return 0


def _cmd_scan(args) -> int:
    family = enumerate_clutters(args.max_vertices, args.max_edges)
    report = conjecture_scan(family, i_max=args.imax)
    note = "bounded evidence only; the underlying conjectures stay open"
    if args.format == "json":
        _emit(json.dumps({
            "total": report.total,
            "packing_true": report.packing_true,
            "reduced_confirmed": report.reduced_confirmed,
            "reduced_counterexamples": [
                [list(e) for e in c.edges] for c in report.reduced_counterexamples
            ],
            "uniform_tested": report.uniform_tested,
            "torsion_free_confirmed": report.torsion_free_confirmed,
            "torsion_counterexamples": [
                [list(e) for e in c.edges] for c in report.torsion_counterexamples
            ],
            "note": note,
        }, indent=2, sort_keys=True))
    else:
        lines = [
            f"scanned {report.total} clutters "
            f"(up to {args.max_vertices} vertices, {args.max_edges} edges)",
            f"packing property holds: {report.packing_true}",
            f"reduced associated graded ring: {report.reduced_confirmed} "
            f"confirmed, {len(report.reduced_counterexamples)} counterexamples",
            f"uniform edge size >= 2: {report.uniform_tested} tested, "
            f"{report.torsion_free_confirmed} torsion-free, "
            f"{len(report.torsion_counterexamples)} counterexamples",
        ]
        for c in report.reduced_counterexamples:
            lines.append("COUNTEREXAMPLE (reduced): " + repr(c.edge_labels()))
        for c in report.torsion_counterexamples:
            lines.append("COUNTEREXAMPLE (torsion): " + repr(c.edge_labels()))
        lines.append(note)
        _emit("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mfmckit",
        description="Exact max-flow min-cut analysis of clutters via Rees cones",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", nargs="?", default="-",
                            help="input file, or - for stdin")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--imax", type=int, default=3,
                        help="largest ideal power to inspect")
        sp.add_argument("--tdi-bound", type=int, default=0, dest="tdi_bound",
                        help="demand bound for the duality-gap scan (0 = off)")
        sp.add_argument("--minor-cap", type=int, default=MINOR_CAP,
                        dest="minor_cap", help="cap on minor enumeration states")

    for name, fn in [("analyze", _cmd_analyze), ("facets", _cmd_facets),
                     ("hilbert", _cmd_hilbert), ("vertices", _cmd_vertices),
                     ("powers", _cmd_powers), ("mfmc", _cmd_mfmc)]:
        sp = sub.add_parser(name)
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("scan")
    common(sp, with_input=False)
    sp.add_argument("--max-vertices", type=int, default=4, dest="max_vertices")
    sp.add_argument("--max-edges", type=int, default=4, dest="max_edges")
    sp.set_defaults(fn=_cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SizeLimit as e:
        print(f"size limit: {e}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

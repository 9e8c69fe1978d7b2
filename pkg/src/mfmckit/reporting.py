"""Input parsing, the full analysis pipeline, and text/JSON rendering.

Two input dialects are accepted: the classic integer-block format
(count, dimension, rows, trailing mode digit) and a line-oriented edge
list.  Text output mirrors the classic generator/hyperplane blocks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from fractions import Fraction

from .clutters import Clutter, ExponentMatrix, MinorSpec, MINOR_CAP
from .cones import (
    FacetClassification,
    QAPolyhedron,
    qa_vertices_direct,
    qa_vertices_via_rees,
    support_hyperplanes,
)
from .decisions import (
    TdiCounterexample,
    TdiReport,
    Verdict,
    decide_mfmc,
    integrality_equivalences,
    tdi_bounded_check,
)
from .errors import (
    DimensionMismatch,
    InconsistencyError,
    ParseError,
    UnsupportedMode,
)
from .hilbert import hilbert_basis
from .ideals import closure_power, ordinary_power, symbolic_power

REES_MODE = "rees"


@dataclass(frozen=True)
class InputDocument:
    matrix: ExponentMatrix
    labels: tuple
    mode: str
    source_format: str

    def clutter(self) -> Clutter:
        return Clutter(self.matrix, self.labels)


def _natural_key(name: str):
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


def _parse_normaliz(lines) -> InputDocument:
    stream = [(no, ln.split()) for no, ln in lines if ln.split()]
    pos = 0

    def take_int_line(what):
        nonlocal pos
        if pos >= len(stream):
            last = stream[-1][0] if stream else 1
            raise DimensionMismatch(last, f"missing {what}")
        no, toks = stream[pos]
        if len(toks) != 1 or not re.fullmatch(r"-?\d+", toks[0]):
            raise ParseError(no, f"expected a single integer ({what})")
        pos += 1
        return no, int(toks[0])

    _, q = take_int_line("generator count")
    _, n = take_int_line("dimension")
    if q < 1 or n < 1:
        raise DimensionMismatch(stream[0][0], f"bad shape {q} x {n}")
    rows = []
    for r in range(q):
        if pos >= len(stream):
            raise DimensionMismatch(stream[-1][0],
                                    f"expected {q} rows, found {r}")
        no, toks = stream[pos]
        pos += 1
        if len(toks) != n:
            raise DimensionMismatch(no, f"row has {len(toks)} entries, expected {n}")
        try:
            row = tuple(int(t) for t in toks)
        except ValueError:
            raise ParseError(no, "non-integer entry") from None
        if any(x < 0 for x in row):
            raise ParseError(no, "negative entry")
        rows.append(row)
    no, mode = take_int_line("mode digit")
    if mode != 3:
        raise UnsupportedMode(no, f"mode {mode} is not supported (only 3)")
    if pos < len(stream):
        raise ParseError(stream[pos][0], "unexpected trailing content")
    matrix = ExponentMatrix(tuple(rows))
    labels = tuple(f"x{i + 1}" for i in range(n))
    return InputDocument(matrix, labels, REES_MODE, "normaliz")


def _parse_native(lines) -> InputDocument:
    edges = []
    for no, ln in lines:
        text = ln.strip()
        if not text or text.startswith("#"):
            continue
        text = text.rstrip(";").strip()
        toks = text.split()
        if toks[0] != "edge":
            raise ParseError(no, f"unknown directive {toks[0]!r}")
        if len(toks) == 1:
            raise ParseError(no, "edge without vertices")
        edges.append(tuple(toks[1:]))
    if not edges:
        raise ParseError(1, "no edges given")
    names = sorted({v for e in edges for v in e}, key=_natural_key)
    index = {v: i for i, v in enumerate(names)}
    rows = []
    for e in edges:
        row = [0] * len(names)
        for v in e:
            row[index[v]] = 1
        rows.append(tuple(row))
    return InputDocument(ExponentMatrix(tuple(rows)), tuple(names),
                         REES_MODE, "native")


def parse_input(text: str) -> InputDocument:
    """Parse either input dialect, sniffing from the first content line."""
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), start=1)]
    content = [(no, ln) for no, ln in lines
               if ln.strip() and not ln.strip().startswith("#")]
    if not content:
        raise ParseError(1, "empty input")
    first = content[0][1].split()[0]
    if re.fullmatch(r"-?\d+", first):
        return _parse_normaliz(content)
    if first == "edge":
        return _parse_native(content)
    raise ParseError(content[0][0], f"unrecognized input starting with {first!r}")


@dataclass(frozen=True)
class PowerRow:
    i: int
    ordinary: int
    symbolic: int
    closure: int
    ordinary_eq_symbolic: bool
    closure_eq_symbolic: bool
    ordinary_eq_closure: bool


@dataclass(frozen=True)
class Report:
    document: InputDocument
    verdict: Verdict
    hilbert_basis: tuple
    facets: FacetClassification
    vertices: QAPolyhedron
    powers: tuple
    tdi: TdiReport = None


def powers_table(c: Clutter, i_max: int = 3):
    fc = support_hyperplanes(c.matrix)
    out = []
    for i in range(1, i_max + 1):
        o = ordinary_power(c.matrix, i)
        s = symbolic_power(c, i)
        cl = closure_power(c.matrix, i, fc)
        out.append(PowerRow(i, len(o), len(s), len(cl),
                            o.gens == s.gens, cl.gens == s.gens, o.gens == cl.gens))
    return tuple(out)


def analyze(doc: InputDocument, i_max: int = 3, tdi_bound: int = 0,
            minor_cap: int = MINOR_CAP) -> Report:
    """Run the whole pipeline on a clutter input document.

    The covering-polyhedron vertices are computed twice, by basic
    solutions and through the Rees cone facets; a mismatch is a bug and
    raises InconsistencyError.  integrality_equivalences adds the same
    kind of cross-route guarantee for the power/facet readings."""
    c = doc.clutter()
    verdict = decide_mfmc(c, i_max=i_max, minor_cap=minor_cap)
    basis = hilbert_basis(c.matrix)
    fc = support_hyperplanes(c.matrix)
    direct = qa_vertices_direct(c.matrix)
    via_rees = qa_vertices_via_rees(c.matrix)
    if direct.vertices != via_rees.vertices:
        raise InconsistencyError(
            f"vertex routes disagree: {direct.vertices} vs {via_rees.vertices}"
        )
    integrality_equivalences(c, i_max)
    tdi = tdi_bounded_check(c, tdi_bound) if tdi_bound else None
    return Report(doc, verdict, basis, fc, direct, powers_table(c, i_max), tdi)


# ---------------------------------------------------------------- text


def _bool(b) -> str:
    return "true" if b else "false"


def generator_block(rows) -> str:
    lines = [f"{len(rows)} generators of integral closure of Rees algebra: "]
    lines += ["".join(f"{x:3d}" for x in r) for r in sorted(rows)]
    return "\n".join(lines)


def hyperplane_block(rows) -> str:
    lines = [f"{len(rows)} support hyperplanes: "]
    lines += ["".join(f"{x:4d}" for x in r) for r in sorted(rows)]
    return "\n".join(lines)


def vertex_lines(vertices) -> str:
    return "\n".join(" ".join(str(x) for x in v) for v in vertices)


def verdict_lines(v: Verdict) -> str:
    keys = ["mfmc", "normal", "integral", "koenig", "packing",
            "torsion_free", "ntf"]
    lines = []
    for k in keys:
        line = f"{k}: {_bool(getattr(v, k))}"
        if k in v.witnesses:
            w = v.witnesses[k]
            if k == "integral":
                line += "   witness: " + " ".join(str(x) for x in w)
            elif k == "normal":
                line += "   witness: " + " ".join(str(x) for x in w)
            elif k == "packing":
                line += (f"   witness: zeros={list(w.zeros)}"
                         f" ones={list(w.ones)}")
            elif k == "koenig":
                line += f"   covering {w[0]} != matching {w[1]}"
            elif k == "torsion_free":
                line += f"   invariant factors {list(w)}"
            elif k == "ntf":
                line += (f"   witness: i={w[0]} monomial "
                         + " ".join(str(x) for x in w[1]))
        lines.append(line)
    lines.append(f"powers checked up to i = {v.i_max_checked}")
    return "\n".join(lines)


def powers_lines(rows) -> str:
    head = "  i  ordinary  symbolic  closure  ord=symb  clos=symb  ord=clos"
    lines = [head]
    for r in rows:
        lines.append(
            f"{r.i:3d}{r.ordinary:10d}{r.symbolic:10d}{r.closure:9d}"
            f"{_bool(r.ordinary_eq_symbolic):>10}{_bool(r.closure_eq_symbolic):>11}"
            f"{_bool(r.ordinary_eq_closure):>10}"
        )
    return "\n".join(lines)


def tdi_lines(t: TdiReport) -> str:
    lines = [f"tdi check up to demand bound {t.bound}: {t.checked} vectors examined"]
    if t.counterexample is None:
        lines.append("no duality gap found")
    else:
        ce = t.counterexample
        lines.append(
            "duality gap at alpha = " + " ".join(str(x) for x in ce.alpha)
            + f": rational {ce.rational_value}, integral {ce.integral_value}"
        )
    return "\n".join(lines)


def render_text(report: Report) -> str:
    parts = [
        generator_block(report.hilbert_basis),
        "",
        hyperplane_block(report.facets.all_rows()),
        "",
        "vertices of covering polyhedron:",
        vertex_lines(report.vertices.vertices),
        "",
        verdict_lines(report.verdict),
        "",
        powers_lines(report.powers),
    ]
    if report.tdi is not None:
        parts += ["", tdi_lines(report.tdi)]
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------- json


def _frac_str(x) -> str:
    return str(Fraction(x))


def _witnesses_to_json(w: dict) -> dict:
    out = {}
    for k, v in w.items():
        if k == "integral":
            out[k] = [_frac_str(x) for x in v]
        elif k == "packing":
            out[k] = {"zeros": list(v.zeros), "ones": list(v.ones)}
        elif k == "ntf":
            out[k] = {"i": v[0], "monomial": list(v[1])}
        elif k == "koenig":
            out[k] = {"covering": v[0], "matching": v[1]}
        else:
            out[k] = list(v)
    return out


def _witnesses_from_json(data: dict) -> dict:
    out = {}
    for k, v in data.items():
        if k == "integral":
            out[k] = tuple(Fraction(s) for s in v)
        elif k == "packing":
            out[k] = MinorSpec(tuple(v["zeros"]), tuple(v["ones"]))
        elif k == "ntf":
            out[k] = (v["i"], tuple(v["monomial"]))
        elif k == "koenig":
            out[k] = (v["covering"], v["matching"])
        else:
            out[k] = tuple(v)
    return out


def report_to_dict(report: Report) -> dict:
    doc = report.document
    v = report.verdict
    data = {
        "input": {
            "columns": [list(c) for c in doc.matrix.columns],
            "labels": list(doc.labels),
            "mode": doc.mode,
            "source_format": doc.source_format,
        },
        "verdict": {
            "mfmc": v.mfmc,
            "normal": v.normal,
            "integral": v.integral,
            "koenig": v.koenig,
            "packing": v.packing,
            "torsion_free": v.torsion_free,
            "ntf": v.ntf,
            "witnesses": _witnesses_to_json(v.witnesses),
            "i_max_checked": v.i_max_checked,
        },
        "hilbert_basis": [list(z) for z in report.hilbert_basis],
        "support_hyperplanes": {
            "coordinate_indices": list(report.facets.coordinate_indices),
            "vertex_normals": [list(f) for f in report.facets.vertex_normals],
        },
        "vertices": [[_frac_str(x) for x in vv] for vv in report.vertices.vertices],
        "powers": [
            {
                "i": r.i,
                "ordinary": r.ordinary,
                "symbolic": r.symbolic,
                "closure": r.closure,
                "ordinary_eq_symbolic": r.ordinary_eq_symbolic,
                "closure_eq_symbolic": r.closure_eq_symbolic,
                "ordinary_eq_closure": r.ordinary_eq_closure,
            }
            for r in report.powers
        ],
        "tdi": None,
    }
    if report.tdi is not None:
        t = {"bound": report.tdi.bound, "checked": report.tdi.checked,
             "counterexample": None}
        if report.tdi.counterexample is not None:
            ce = report.tdi.counterexample
            t["counterexample"] = {
                "alpha": list(ce.alpha),
                "rational": _frac_str(ce.rational_value),
                "integral": ce.integral_value,
            }
        data["tdi"] = t
    return data


def report_to_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"


def report_from_dict(data: dict) -> Report:
    inp = data["input"]
    matrix = ExponentMatrix(tuple(tuple(c) for c in inp["columns"]))
    doc = InputDocument(matrix, tuple(inp["labels"]), inp["mode"],
                        inp["source_format"])
    dv = data["verdict"]
    verdict = Verdict(
        mfmc=dv["mfmc"],
        normal=dv["normal"],
        integral=dv["integral"],
        koenig=dv["koenig"],
        packing=dv["packing"],
        torsion_free=dv["torsion_free"],
        ntf=dv["ntf"],
        witnesses=_witnesses_from_json(dv["witnesses"]),
        i_max_checked=dv["i_max_checked"],
    )
    basis = tuple(tuple(z) for z in data["hilbert_basis"])
    sh = data["support_hyperplanes"]
    fc = FacetClassification(
        matrix.n + 1,
        tuple(sh["coordinate_indices"]),
        tuple(tuple(f) for f in sh["vertex_normals"]),
    )
    vertices = QAPolyhedron(
        matrix, tuple(tuple(Fraction(s) for s in vv) for vv in data["vertices"])
    )
    powers = tuple(
        PowerRow(r["i"], r["ordinary"], r["symbolic"], r["closure"],
                 r["ordinary_eq_symbolic"], r["closure_eq_symbolic"],
                 r["ordinary_eq_closure"])
        for r in data["powers"]
    )
    tdi = None
    if data.get("tdi") is not None:
        t = data["tdi"]
        ce = None
        if t["counterexample"] is not None:
            cd = t["counterexample"]
            ce = TdiCounterexample(tuple(cd["alpha"]), Fraction(cd["rational"]),
                                   cd["integral"])
        tdi = TdiReport(t["bound"], t["checked"], ce)
    return Report(doc, verdict, basis, fc, vertices, powers, tdi)


def report_from_json(text: str) -> Report:
    return report_from_dict(json.loads(text))

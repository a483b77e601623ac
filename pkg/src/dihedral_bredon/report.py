"""Serializations of :class:`~dihedral_bredon.engine.HomologyReport`.

Three formats:

``text``
    An aligned grid (rows ``q``, columns ``p = 0..3``) followed by the
    derivation trail, warnings and notes.  Deterministic byte for byte.

``records``
    UTF-8, one tab-separated line per cell: ``p  q  group  exactness  trail``
    where ``exactness`` is ``exact``, ``bounded`` or ``error`` and the trail
    entries are joined by ``"; "``.  Report-level data precede the cells as
    ``# key=value`` lines (``ring``, ``n``, repeated ``warning`` and
    ``note``).  :func:`parse_records` inverts :func:`render_records`.

``tablemarkup``
    A LaTeX ``tabular`` environment for publication.
"""

from __future__ import annotations

import re

from .abelian import Bounded, is_exact, parse_group, render
from .engine import TOP_DEGREE, HomologyReport

DEGREES = tuple(range(TOP_DEGREE + 1))


def _cell_text(report: HomologyReport, i: int, q: int) -> str:
    if (i, q) in report.errors:
        return "!error"
    return render(report.table[(i, q)])


def render_text(report: HomologyReport) -> str:
    parity = "even" if report.n % 2 == 0 else "odd"
    lines = [f"E2[p,q] = H_p^vc(A_{report.n}; K_q({report.ring}[-]))   (n = {report.n}, {parity})"]
    header = ["q"] + [f"p={i}" for i in DEGREES]
    rows = [[str(q)] + [_cell_text(report, i, q) for i in DEGREES] for q in report.q_values]
    widths = [max(len(r[c]) for r in [header, *rows]) for c in range(len(header))]

    def fmt(row):
        return " | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()

    lines.append(fmt(header))
    lines.append("-+-".join("-" * w for w in widths))
    lines.extend(fmt(r) for r in rows)
    lines.append(f"columns p >= {TOP_DEGREE + 1}: 0")
    lines.append("")
    lines.append("trail:")
    for q in report.q_values:
        for i in DEGREES:
            if (i, q) in report.errors:
                lines.append(f"  [{i},{q}] error: {report.errors[(i, q)]}")
            elif (i, q) in report.trail:
                lines.append(f"  [{i},{q}] " + "; ".join(report.trail[(i, q)]))
    if report.warnings:
        lines.append("warnings:")
        lines.extend(f"  - {w}" for w in report.warnings)
    if report.notes:
        lines.append("notes:")
        lines.extend(f"  - {m}" for m in report.notes)
    return "\n".join(lines) + "\n"


def _clean(field: str) -> str:
    return field.replace("\t", " ").replace("\n", " ")


def render_records(report: HomologyReport) -> str:
    lines = [f"# ring={report.ring}", f"# n={report.n}"]
    lines += [f"# warning={_clean(w)}" for w in report.warnings]
    lines += [f"# note={_clean(m)}" for m in report.notes]
    for q in report.q_values:
        for i in DEGREES:
            if (i, q) in report.errors:
                fields = [str(i), str(q), "!", "error", _clean(report.errors[(i, q)])]
            else:
                value = report.table[(i, q)]
                kind = "exact" if is_exact(value) else "bounded"
                fields = [str(i), str(q), render(value), kind, "; ".join(map(_clean, report.trail[(i, q)]))]
            lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def parse_records(text: str) -> HomologyReport:
    meta: dict[str, str] = {}
    warnings, notes, cells = [], [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            if key == "warning":
                warnings.append(value)
            elif key == "note":
                notes.append(value)
            else:
                meta[key] = value
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ValueError(f"record line {lineno}: expected 5 tab-separated fields, got {len(fields)}")
        cells.append(fields)
    report = HomologyReport(meta.get("ring", "?"), int(meta.get("n", "0")))
    report.warnings, report.notes = warnings, notes
    for p, q, group, kind, trail in cells:
        i, q = int(p), int(q)
        if kind == "error":
            if q not in report.q_values:
                report.q_values.append(q)
            report.errors[(i, q)] = trail
            continue
        value = parse_group(group)
        if (kind == "bounded") != isinstance(value, Bounded):
            raise ValueError(f"cell [{i},{q}]: exactness flag {kind!r} disagrees with {group!r}")
        report.set(i, q, value, trail.split("; ") if trail else [])
    return report


_LATEX_RULES = [
    (re.compile(r"\(\+\)_\{w\} "), r"\\bigoplus_{\\aleph_0} "),
    (re.compile(r" \(\+\) "), r" \\oplus "),
    (re.compile(r"Z\^(\w+)\[(\d+)\.\.(\w+)\]"), r"Z^{\1}"),
    (re.compile(r"\(Z/(\d+)\)\^(\d+)"), r"(Z/\1)^{\2}"),
    (re.compile(r"\bZ\^(\d+)"), r"Z^{\1}"),
    (re.compile(r"\bZ\b"), r"\\mathbb{Z}"),
]


def latex_group(text: str) -> str:
    for pattern, repl in _LATEX_RULES:
        text = pattern.sub(repl, text)
    return text


def _latex_cell(report: HomologyReport, i: int, q: int) -> str:
    if (i, q) in report.errors:
        return "--"
    value = report.table[(i, q)]
    if isinstance(value, Bounded):
        return rf"$[{latex_group(render(value.lower))},\ {latex_group(render(value.upper))}]$"
    return f"${latex_group(render(value))}$"


def render_latex(report: HomologyReport) -> str:
    lines = [
        rf"% E2 page of A_{report.n} with coefficients in K_q({report.ring}[-])",
        r"\begin{tabular}{r|" + "l" * len(DEGREES) + "}",
        "$q$ & " + " & ".join(f"$p={i}$" for i in DEGREES) + r" \\",
        r"\hline",
    ]
    for q in report.q_values:
        lines.append(f"${q}$ & " + " & ".join(_latex_cell(report, i, q) for i in DEGREES) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


RENDERERS = {"text": render_text, "records": render_records, "tablemarkup": render_latex}

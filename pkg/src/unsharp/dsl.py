"""Line-oriented text format for effect algebras, plus table/graph emitters.

A document looks like

    # three-element chain
    algebra C3
    elements 0 m 1
    zero 0
    one 1
    sum m m = 1

with one `sum` line per unordered pair (symmetry and the zero row are
filled in automatically) and optional `complement X = Y` declarations that
are cross-checked against the sums.  Parsing reports line and column for
every complaint; re-emitting a parsed document reproduces it up to
whitespace and comments.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Optional, Union

from .algebra import EffectAlgebra, InvalidAlgebraError, validate_tables
from .implication import ImplicationTable
from .reports import ValidationReport


class DslError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class SumEntry:
    x: str
    y: str
    value: str
    line: int


@dataclass(frozen=True)
class CompEntry:
    x: str
    y: str
    line: int


@dataclass
class AlgebraSpec:
    name: str
    labels: tuple[str, ...]
    zero: str
    one: str
    sums: list[SumEntry] = field(default_factory=list)
    comps: list[CompEntry] = field(default_factory=list)


def _column_of(raw: str, token: str, occurrence: int = 1) -> int:
    pos = -1
    for _ in range(occurrence):
        pos = raw.find(token, pos + 1)
        if pos < 0:
            return 1
    return pos + 1


def parse_spec(text: str) -> AlgebraSpec:
    name: Optional[str] = None
    labels: Optional[tuple[str, ...]] = None
    zero: Optional[str] = None
    one: Optional[str] = None
    sums: list[SumEntry] = []
    comps: list[CompEntry] = []
    seen_pairs: dict[frozenset, SumEntry] = {}
    seen_comp: dict[str, CompEntry] = {}

    def known(label: str, lineno: int, raw: str):
        if labels is None:
            raise DslError("elements must be declared first", lineno)
        if label not in labels:
            raise DslError(
                f"unknown label {label!r}", lineno, _column_of(raw, label)
            )

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head == "algebra":
            if len(words) != 2:
                raise DslError("expected: algebra NAME", lineno)
            if name is not None:
                raise DslError("algebra declared twice", lineno)
            name = words[1]
        elif head == "elements":
            if labels is not None:
                raise DslError("elements declared twice", lineno)
            if len(words) < 2:
                raise DslError("expected at least one element label", lineno)
            if len(set(words[1:])) != len(words) - 1:
                dup = next(w for w in words[1:] if words[1:].count(w) > 1)
                raise DslError(
                    f"duplicate label {dup!r}", lineno, _column_of(raw, dup, 2)
                )
            labels = tuple(words[1:])
        elif head in ("zero", "one"):
            if len(words) != 2:
                raise DslError(f"expected: {head} LABEL", lineno)
            known(words[1], lineno, raw)
            if head == "zero":
                if zero is not None:
                    raise DslError("zero declared twice", lineno)
                zero = words[1]
            else:
                if one is not None:
                    raise DslError("one declared twice", lineno)
                one = words[1]
        elif head == "sum":
            if len(words) != 5 or words[3] != "=":
                raise DslError("expected: sum X Y = Z", lineno)
            x, y, value = words[1], words[2], words[4]
            for lab in (x, y, value):
                known(lab, lineno, raw)
            pair = frozenset((x, y))
            if pair in seen_pairs:
                prev = seen_pairs[pair]
                what = "conflicting" if prev.value != value else "duplicate"
                raise DslError(
                    f"{what} sum for {x}+{y} (first given on line {prev.line})",
                    lineno,
                    _column_of(raw, x, 1 + (x == head)),
                )
            entry = SumEntry(x, y, value, lineno)
            seen_pairs[pair] = entry
            sums.append(entry)
        elif head == "complement":
            if len(words) != 4 or words[2] != "=":
                raise DslError("expected: complement X = Y", lineno)
            x, y = words[1], words[3]
            known(x, lineno, raw)
            known(y, lineno, raw)
            for lab, other in ((x, y), (y, x)):
                if lab in seen_comp and _comp_partner(seen_comp[lab], lab) != other:
                    raise DslError(
                        f"conflicting complement for {lab} "
                        f"(first given on line {seen_comp[lab].line})",
                        lineno,
                    )
            entry = CompEntry(x, y, lineno)
            seen_comp[x] = seen_comp[y] = entry
            comps.append(entry)
        else:
            raise DslError(f"unknown directive {head!r}", lineno)

    if labels is None:
        raise DslError("missing elements declaration", max(1, text.count("\n") + 1))
    for what, val in (("zero", zero), ("one", one)):
        if val is None:
            raise DslError(f"missing {what} declaration", text.count("\n") + 1)
    return AlgebraSpec(name or "E", labels, zero, one, sums, comps)


def _comp_partner(entry: CompEntry, label: str) -> str:
    return entry.y if entry.x == label else entry.x


def spec_report(spec: AlgebraSpec) -> ValidationReport:
    'Run the declared tables through the axiom checker.'
    n = len(spec.labels)
    index = {lab: i for i, lab in enumerate(spec.labels)}
    sums: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for e in spec.sums:
        x, y, v = index[e.x], index[e.y], index[e.value]
        sums[x][y] = v
        sums[y][x] = v
    declared = None
    if spec.comps:
        declared = {}
        for e in spec.comps:
            declared[index[e.x]] = index[e.y]
            declared[index[e.y]] = index[e.x]
    return validate_tables(
        spec.labels, sums, index[spec.zero], index[spec.one],
        declared_comp=declared, name=spec.name,
    )


def load_algebra(text: str) -> EffectAlgebra:
    'Parse and validate in one step; raises DslError or InvalidAlgebraError.'
    report = spec_report(parse_spec(text))
    if not report.ok:
        raise InvalidAlgebraError(report)
    return report.algebra


def emit_spec(source: Union[AlgebraSpec, EffectAlgebra]) -> str:
    lines: list[str]
    if isinstance(source, AlgebraSpec):
        lines = [
            f"algebra {source.name}",
            "elements " + " ".join(source.labels),
            f"zero {source.zero}",
            f"one {source.one}",
        ]
        lines += [f"sum {e.x} {e.y} = {e.value}" for e in source.sums]
        lines += [f"complement {e.x} = {e.y}" for e in source.comps]
    else:
        E = source
        lines = [
            f"algebra {E.name}",
            "elements " + " ".join(E.labels),
            f"zero {E.labels[E.zero]}",
            f"one {E.labels[E.one]}",
        ]
        for x in range(E.n):
            if x == E.zero:
                continue
            for y in range(x, E.n):
                v = E.sums[x][y]
                if y == E.zero or v is None:
                    continue
                lines.append(
                    f"sum {E.labels[x]} {E.labels[y]} = {E.labels[v]}"
                )
    return "\n".join(lines) + "\n"


def emit_dot(E: EffectAlgebra) -> str:
    'Hasse diagram of the induced order as a DOT digraph, bottom to top.'
    out = [f'digraph "{E.name}" {{', "  rankdir=BT;"]
    for lab in E.labels:
        out.append(f'  "{lab}";')
    for lo, hi in E.order.hasse_edges():
        out.append(f'  "{E.labels[lo]}" -> "{E.labels[hi]}";')
    out.append("}")
    return "\n".join(out) + "\n"


def _table_cells(source: Union[ImplicationTable, EffectAlgebra]):
    if isinstance(source, ImplicationTable):
        E = source.algebra
        corner = "->"
        cells = [
            [E.render(source[x, y]) for y in range(E.n)] for x in range(E.n)
        ]
    else:
        E = source
        corner = "+"
        cells = [
            [
                "-" if E.sums[x][y] is None else E.labels[E.sums[x][y]]
                for y in range(E.n)
            ]
            for x in range(E.n)
        ]
    return E, corner, cells


def emit_table(
    source: Union[ImplicationTable, EffectAlgebra], format: str = "aligned"
) -> str:
    E, corner, cells = _table_cells(source)
    header = [corner, *E.labels]
    rows = [[E.labels[x], *cells[x]] for x in range(E.n)]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if format != "aligned":
        raise ValueError(f"unknown table format {format!r}")
    widths = [
        max(len(header[col]), *(len(r[col]) for r in rows))
        for col in range(len(header))
    ]
    lines = []
    for row in [header, *rows]:
        line = "  ".join(cell.ljust(w) for cell, w in zip(row, widths))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"

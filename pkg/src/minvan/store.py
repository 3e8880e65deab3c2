"""Persistence: the weight-indexed type database, the per-type sorou cache,
and the CSV / LaTeX reports.

Everything is line-oriented text: the database is the scientific result and
must be diffable and reviewable.  Writes are atomic (temp file + rename);
loads validate every line and the structural invariants.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass, field

from minvan.sorou import Sorou, parse_sorou, render_sorou
from minvan.types import (
    MinVanType,
    TypeRecord,
    parse_type,
    render_type,
    render_type_latex,
    sum_key,
    type_weight,
)

DB_FORMAT = "minvan-db v1"
CSV_HEADER = (
    "Weight,\tTop Prime,\tRelative Order,\tWeight Partition,"
    "\tType,\tHeight,\tParities,\tHasEquisigned"
)
_PARITY_RE = re.compile(r"^\((\d+);(\d+)\)$")


@dataclass
class TypeDatabase:
    """All minimal vanishing types with weight <= max_complete_weight."""

    max_complete_weight: int = 1
    collapse: bool = True
    records: list[TypeRecord] = field(default_factory=list)

    def sort(self) -> None:
        self.records.sort(key=lambda r: (r.weight, sum_key(r.type)))

    def commit_weight(self, weight: int, records: list[TypeRecord]) -> None:
        if weight != self.max_complete_weight + 1:
            raise ValueError("weights must be committed in order")
        self.records.extend(records)
        self.max_complete_weight = weight
        self.sort()

    def records_for_weight(self, weight: int) -> list[TypeRecord]:
        return [r for r in self.records if r.weight == weight]

    def minimal_types_by_weight(self) -> dict[int, list[MinVanType]]:
        out: dict[int, list[MinVanType]] = {}
        for r in self.records:
            out.setdefault(r.weight, []).append(r.type.components[0])
        return out


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".minvan-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render_partition(partition: tuple[int, ...]) -> str:
    return "(" + ";".join(str(x) for x in sorted(partition, reverse=True)) + ")"


def _render_parities(parities: frozenset[tuple[int, int]]) -> str:
    return ";".join(f"({a};{b})" for a, b in sorted(parities))


def _parse_parities(text: str) -> frozenset[tuple[int, int]]:
    out = []
    for item in re.findall(r"\(\d+;\d+\)", text):
        m = _PARITY_RE.match(item)
        out.append((int(m.group(1)), int(m.group(2))))
    if not out:
        raise ValueError(f"unparseable parity list: {text!r}")
    return frozenset(out)


def save_db(db: TypeDatabase, path: str) -> None:
    lines = [
        f"{DB_FORMAT} maxweight={db.max_complete_weight} "
        f"collapse={'on' if db.collapse else 'off'}"
    ]
    for r in sorted(db.records, key=lambda r: (r.weight, sum_key(r.type))):
        lines.append(
            "\t".join(
                [
                    str(r.weight),
                    render_type(r.type),
                    ";".join(str(x) for x in sorted(r.relative_orders)),
                    _render_partition(r.partition),
                    _render_parities(r.parities),
                    ";".join(str(x) for x in sorted(r.heights)),
                    str(r.equisigned),
                ]
            )
        )
    _atomic_write(path, "\n".join(lines) + "\n")


def load_db(path: str) -> TypeDatabase:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty database file")
    header = lines[0]
    m = re.match(
        rf"^{re.escape(DB_FORMAT)} maxweight=(\d+) collapse=(on|off)$", header
    )
    if not m:
        raise ValueError(f"{path}:1: bad header or version: {header!r}")
    db = TypeDatabase(max_complete_weight=int(m.group(1)), collapse=m.group(2) == "on")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 7:
            raise ValueError(f"{path}:{lineno}: expected 7 fields, got {len(fields)}")
        try:
            weight = int(fields[0])
            t = parse_type(fields[1])
            rel_orders = frozenset(int(x) for x in fields[2].split(";"))
            partition = tuple(sorted(int(x) for x in fields[3].strip("()").split(";")))
            parities = _parse_parities(fields[4])
            heights = frozenset(int(x) for x in fields[5].split(";"))
            equisigned = {"True": True, "False": False}[fields[6]]
        except (ValueError, KeyError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
        if not t.is_minimal_claim:
            raise ValueError(f"{path}:{lineno}: database rows must be minimal types")
        if type_weight(t) != weight:
            raise ValueError(f"{path}:{lineno}: weight {weight} != type weight {type_weight(t)}")
        if weight > db.max_complete_weight:
            raise ValueError(f"{path}:{lineno}: record beyond max complete weight")
        if equisigned != any(a == b for a, b in parities):
            raise ValueError(f"{path}:{lineno}: equisigned flag contradicts parities")
        db.records.append(
            TypeRecord(
                type=t,
                weight=weight,
                top_prime=t.components[0].p,
                partition=partition,
                relative_orders=rel_orders,
                parities=parities,
                heights=heights,
                equisigned=equisigned,
            )
        )
    db.sort()
    return db


def save_cache(classes: dict[str, tuple[Sorou, ...]], path: str) -> None:
    lines = []
    for key in sorted(classes):
        lines.append(key + "\t" + ",".join(render_sorou(s) for s in classes[key]))
    _atomic_write(path, "\n".join(lines) + ("\n" if lines else ""))


def load_cache(path: str) -> dict[str, tuple[Sorou, ...]]:
    out: dict[str, tuple[Sorou, ...]] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh.read().splitlines(), start=1):
            if not line:
                continue
            key, sep, rest = line.partition("\t")
            if not sep:
                raise ValueError(f"{path}:{lineno}: missing tab separator")
            try:
                parse_type(key)
                sorous = tuple(parse_sorou(s) for s in rest.split(",")) if rest else ()
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
            out[key] = sorous
    return out


def _csv_rows(db: TypeDatabase) -> list[str]:
    rows = [CSV_HEADER]
    for r in sorted(db.records, key=lambda r: (r.weight, sum_key(r.type))):
        rows.append(
            ",\t".join(
                [
                    str(r.weight),
                    str(r.top_prime),
                    ";".join(str(x) for x in sorted(r.relative_orders)),
                    _render_partition(r.partition),
                    render_type_latex(r.type),
                    ";".join(str(x) for x in sorted(r.heights)),
                    _render_parities(r.parities),
                    str(r.equisigned),
                ]
            )
        )
    return rows


def csv_report_text(db: TypeDatabase) -> str:
    if not db.records:
        raise ValueError("no statistics to report")
    return "\n".join(_csv_rows(db)) + "\n"


def write_csv_report(db: TypeDatabase, path: str) -> None:
    _atomic_write(path, csv_report_text(db))


def latex_report_text(db: TypeDatabase) -> str:
    if not db.records:
        raise ValueError("no statistics to report")
    lines = [
        r"\begin{longtable}{c|c|c|c|c|l}",
        r"\caption{Minimal vanishing sums of roots of unity and their"
        r" possible parities of orders.} \\",
        r" & Top & Relative & Weight & & Possible\\",
        r"Weight & prime & order & partition & Type & parities \\ \hline\hline",
        r"\endfirsthead",
        r"\hline",
        r"weight & prime & order & partition & type & parities \\ \hline",
        r"\endhead",
        r"\hline",
        r"\endfoot",
    ]
    records = sorted(db.records, key=lambda r: (r.weight, sum_key(r.type)))
    for i, r in enumerate(records):
        partition = ",".join(str(x) for x in r.partition)
        parities = ",\\,".join(f"({a},{b})" for a, b in sorted(r.parities))
        rel = ",".join(str(x) for x in sorted(r.relative_orders))
        sep = r" \\ \hline"
        if i + 1 < len(records) and records[i + 1].weight != r.weight:
            sep = r" \\ \hline\hline"
        lines.append(
            f"${r.weight}$ & ${r.top_prime}$ & ${rel}$ & $({partition})$ & "
            f"${render_type_latex(r.type)}$ & ${parities}$" + sep
        )
    lines.append(r"\end{longtable}")
    return "\n".join(lines) + "\n"


def write_latex_report(db: TypeDatabase, path: str) -> None:
    _atomic_write(path, latex_report_text(db))

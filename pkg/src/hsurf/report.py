"""Reports: tables plus the provenance notes that justify them, rendered as JSON or text."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .profile import INF, CohomologyTable
from .provenance import CITATIONS

REPORT_SCHEMA = 1


@dataclass
class Report:
    command: str
    tables: list[tuple[str, CohomologyTable]] = field(default_factory=list)
    values: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    extra_notes: list[str] = field(default_factory=list)

    def add(self, title: str, table: CohomologyTable) -> None:
        self.tables.append((title, table))

    @property
    def notes(self) -> list[tuple[str, str]]:
        """(key, statement) for every citation used, in first-use order."""
        keys: list[str] = []
        for _, table in self.tables:
            for row in table.rows:
                for key in row.provenance:
                    if key not in keys:
                        keys.append(key)
        for key in self.extra_notes:
            if key not in keys:
                keys.append(key)
        for key in keys:
            if key not in CITATIONS:
                raise AssertionError(f"row cites unregistered statement {key!r}")
        return [(k, CITATIONS[k]) for k in keys]

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "tables": [{"title": title, **table.to_json()} for title, table in self.tables],
            "values": self.values,
            "notes": [{"key": k, "statement": s} for k, s in self.notes],
            "warnings": list(self.warnings),
        }


def render_json(report: Report) -> str:
    return json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n"


def _fmt(v) -> str:
    if v == INF:
        return "inf"
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def render_table(title: str, table: CohomologyTable) -> list[str]:
    header = ("k", "group", "free", "source")
    body = [
        (
            str(g.degree),
            g.group_text() + (f"  (stated bound {g.stated_bound})" if g.stated_bound is not None else ""),
            "yes" if g.known_free else "?",
            ", ".join(g.provenance),
        )
        for g in table.rows
    ]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(3)]
    lines = [f"{title} [{table.variant.value}]"]
    for row in [header, *body]:
        cells = [row[i].ljust(widths[i]) for i in range(3)] + [row[3]]
        lines.append("  " + "  ".join(cells).rstrip())
    return lines


def render_text(report: Report) -> str:
    lines: list[str] = []
    for title, table in report.tables:
        lines.extend(render_table(title, table))
        lines.append("")
    if report.values:
        width = max(len(k) for k in report.values)
        for k, v in report.values.items():
            lines.append(f"{k.ljust(width)} : {_fmt(v)}")
        lines.append("")
    notes = report.notes
    if notes:
        lines.append("notes:")
        lines.extend(f"  [{k}] {s}" for k, s in notes)
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines).rstrip() + "\n"

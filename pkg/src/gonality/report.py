"""Report documents rendered as markdown, JSON or CSV.

Row order is fixed by the caller and columns keep their declared order, so
equal inputs give byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

FORMATS = ("md", "json", "csv")


@dataclass
class Document:
    kind: str
    columns: list[str]
    rows: list[dict[str, Any]]
    meta: dict[str, Any] = field(default_factory=dict)
    rows_key: str = "rows"
    title: str = ""
    notes: list[str] = field(default_factory=list)
    transpose: bool = False  # horizontal table, one column per index

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return to_json(self)
        if fmt == "csv":
            return to_csv(self)
        if fmt == "md":
            return to_markdown(self)
        raise ValueError(f"unknown format {fmt!r}")


def _plain(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def to_json(doc: Document) -> str:
    body = {"kind": doc.kind, **doc.meta,
            doc.rows_key: [{c: _plain(row.get(c)) for c in doc.columns} for row in doc.rows]}
    return json.dumps(body, indent=2) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ";".join(_cell(x) for x in v)
    return str(v)


def to_csv(doc: Document) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(doc.columns)
    for row in doc.rows:
        w.writerow([_cell(row.get(c)) for c in doc.columns])
    return buf.getvalue()


def _md_row(cells) -> str:
    return "| " + " | ".join(cells) + " |"


def to_markdown(doc: Document) -> str:
    lines = []
    if doc.title:
        lines += [f"## {doc.title}", ""]
    for k, v in doc.meta.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"- {k}:")
            lines += ["  - " + ", ".join(f"{a}={_cell(b)}" for a, b in item.items()) for item in v]
            continue
        if isinstance(v, dict):
            lines.append(f"- {k}:")
            lines += [f"  - {a}: {_cell(b)}" for a, b in v.items()]
            continue
        lines.append(f"- {k}: {_cell(v) if not isinstance(v, list) or v else '(none)'}")
    if doc.meta:
        lines.append("")
    if doc.rows:
        if doc.transpose:
            head, *rest = doc.columns
            lines.append(_md_row([head] + [_cell(r[head]) for r in doc.rows]))
            lines.append(_md_row(["---"] * (len(doc.rows) + 1)))
            for c in rest:
                lines.append(_md_row([c] + [_cell(r.get(c)) for r in doc.rows]))
        else:
            lines.append(_md_row(doc.columns))
            lines.append(_md_row(["---"] * len(doc.columns)))
            for r in doc.rows:
                lines.append(_md_row([_cell(r.get(c)) for c in doc.columns]))
    else:
        lines.append("(no rows)")
    if doc.notes:
        lines.append("")
        lines += [f"> {n}" for n in doc.notes]
    return "\n".join(lines) + "\n"

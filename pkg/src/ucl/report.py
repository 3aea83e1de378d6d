"""Serialization of verdict reports as JSON, CSV or plain text.

Every integer value is written as a decimal string: Bell numbers overflow
64-bit and floating-point types long before the ranges we sweep. The only
native numbers are the counts in ``summary``. Elapsed time is deliberately
left out so identical runs produce byte-identical output.
"""

import csv
import io
import json

from . import __version__
from .congruence import EXCLUDED, FAILS, HOLDS

TOOL = f"ucl {__version__}"
FORMATS = ("json", "csv", "text")

_SIDE = {"oneOf": [{"type": "string"}, {"type": "array", "items": {"type": "string"}}]}
_VERDICT = {
    "type": "object",
    "required": ["check_id", "params", "status", "lhs", "rhs"],
    "properties": {
        "check_id": {"type": "string"},
        "params": {"type": "object", "additionalProperties": {"type": "string"}},
        "status": {"enum": [HOLDS, FAILS, EXCLUDED]},
        "lhs": _SIDE,
        "rhs": _SIDE,
        "note": {"type": "string"},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["tool", "command", "config", "verdicts", "counterexamples", "summary"],
    "properties": {
        "tool": {"type": "string"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "verdicts": {"type": "array", "items": _VERDICT},
        "counterexamples": {"type": "array", "items": _VERDICT},
        "summary": {
            "type": "object",
            "required": ["total", "holds", "fails", "excluded"],
            "properties": {k: {"type": "integer", "minimum": 0}
                           for k in ("total", "holds", "fails", "excluded")},
        },
    },
}


def _verdict_json(v):
    d = v.to_dict()
    # excluded cells carry no sides; the schema wants strings
    for side in ("lhs", "rhs"):
        if d[side] is None:
            d[side] = ""
    return d


def build_report(command, config, verdicts, extra=None):
    """The JSON-ready report dictionary."""
    summary = {"total": len(verdicts), HOLDS: 0, FAILS: 0, EXCLUDED: 0}
    for v in verdicts:
        summary[v.status] += 1
    doc = {
        "tool": TOOL,
        "command": command,
        "config": {k: v if isinstance(v, (str, bool)) else str(v) for k, v in config.items()},
        "verdicts": [_verdict_json(v) for v in verdicts],
        "counterexamples": [_verdict_json(v) for v in verdicts if v.status == FAILS],
        "summary": summary,
    }
    if extra:
        doc.update(extra)
    return doc


def to_json(doc):
    return json.dumps(doc, indent=2) + "\n"


def _flat(side):
    if side is None or side == "":
        return ""
    if isinstance(side, list):
        return "[" + ",".join(side) + "]"
    return side


def to_csv(doc):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "params", "holds", "lhs", "rhs"])
    for v in doc["verdicts"]:
        holds = {HOLDS: "true", FAILS: "false"}.get(v["status"], v["status"])
        params = ";".join(f"{k}={val}" for k, val in v["params"].items())
        writer.writerow([v["check_id"], params, holds, _flat(v["lhs"]), _flat(v["rhs"])])
    return buf.getvalue()


def to_text(doc):
    lines = [f"{doc['tool']} {doc['command']}"]
    s = doc["summary"]
    lines.append(f"total={s['total']} holds={s['holds']} fails={s['fails']} excluded={s['excluded']}")
    if "constant" in doc:
        lines.append(f"constant={doc['constant']}")
        lines.append(f"{'p':>6}  {'residue':>8}  {'predicted':>9}  match")
        for v in doc["verdicts"]:
            p = v["params"]["p"]
            if v["status"] == EXCLUDED:
                lines.append(f"{p:>6}  {'-':>8}  {'-':>9}  excluded")
            else:
                lines.append(f"{p:>6}  {v['lhs']:>8}  {v['rhs']:>9}  {v['status'] == HOLDS}")
    if "census" in doc:
        cols = ("n", "bell", "singleton_free", "derangements", "stirling2_by_blocks", "cycles_by_count")
        lines.append("  ".join(cols))
        for row in doc["census"]:
            lines.append("  ".join(_flat(row.get(c)) or "-" for c in cols))
    for v in doc["counterexamples"]:
        params = ",".join(f"{k}={val}" for k, val in v["params"].items())
        lines.append(f"FAIL {v['check_id']}({params}): lhs={_flat(v['lhs'])} rhs={_flat(v['rhs'])}"
                     + (f" [{v['note']}]" if v.get("note") else ""))
    return "\n".join(lines) + "\n"


def render(doc, fmt):
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    if fmt == "text":
        return to_text(doc)
    raise ValueError(f"unknown format {fmt!r}")

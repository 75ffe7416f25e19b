"""Structured verification records and their JSON/CSV/text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SCHEMA_ID = "catalanok.report.v1"

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

EXIT_PASS = 0
EXIT_CLAIM_FAILED = 1
EXIT_INCONCLUSIVE = 3


@dataclass(frozen=True)
class Record:
    result_id: str
    paper_anchor: str
    verdict: str
    witness: dict | None = None
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "result_id": self.result_id,
            "paper_anchor": self.paper_anchor,
            "verdict": self.verdict,
            "witness": self.witness,
            "params": self.params,
        }


def render_json(records: list[Record]) -> str:
    payload = {"schema": SCHEMA_ID, "records": [r.to_dict() for r in records]}
    return json.dumps(payload, indent=2, sort_keys=False, default=str)


def render_csv(records: list[Record]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["result_id", "paper_anchor", "verdict", "witness", "params"])
    for r in records:
        writer.writerow([
            r.result_id,
            r.paper_anchor,
            r.verdict,
            json.dumps(r.witness, default=str) if r.witness is not None else "",
            json.dumps(r.params, default=str),
        ])
    return buf.getvalue()


def render_text(records: list[Record]) -> str:
    width = max((len(r.result_id) for r in records), default=10)
    lines = []
    for r in records:
        line = f"{r.result_id:<{width}}  {r.verdict.upper():<12}  {r.paper_anchor}"
        if r.witness:
            line += f"  witness={json.dumps(r.witness, default=str)}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def exit_code(records: list[Record]) -> int:
    if any(r.verdict == FAIL for r in records):
        return EXIT_CLAIM_FAILED
    if any(r.verdict == INCONCLUSIVE for r in records):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS

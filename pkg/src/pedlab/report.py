"""Verification reports: typed run entries, human-readable text, JSON I/O.

A report is a list of runs, each either a congruence-claim scan or a
series-level proof step, plus a metadata block (tool version, parameters,
wall time).  Failing runs always carry the smallest witness found.  The JSON
form round-trips: ``VerificationReport.from_json(r.to_json()) == r``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

KINDS = ("claim", "proof-step")
STATUSES = ("pass", "fail", "empirical-pass")

_STATUS_TAGS = {"pass": "PASS", "fail": "FAIL", "empirical-pass": "EMPIRICAL"}


@dataclass
class RunEntry:
    """One verification run.

    ``checked`` describes the verified range ("n <= 100" for scans,
    "order 400" for series identities).  ``witness`` is the smallest
    counterexample, as (n, residue) for claims and (exponent, value) for
    proof steps; it is required exactly when the status is "fail".
    """

    label: str
    kind: str
    status: str
    checked: str
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown run kind {self.kind!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown run status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing run must carry a witness")
        if self.witness is not None:
            self.witness = (int(self.witness[0]), int(self.witness[1]))


@dataclass
class VerificationReport:
    meta: dict
    runs: list[RunEntry] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for e in self.runs:
            out[e.status] += 1
        return out

    def to_json(self) -> str:
        payload = {
            "meta": self.meta,
            "runs": [
                {
                    "label": e.label,
                    "kind": e.kind,
                    "status": e.status,
                    "checked": e.checked,
                    "witness": list(e.witness) if e.witness is not None else None,
                }
                for e in self.runs
            ],
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        runs = [
            RunEntry(
                label=r["label"],
                kind=r["kind"],
                status=r["status"],
                checked=r["checked"],
                witness=tuple(r["witness"]) if r["witness"] is not None else None,
            )
            for r in data["runs"]
        ]
        return cls(meta=data["meta"], runs=runs)


def format_report(report: VerificationReport) -> str:
    meta = report.meta
    lines = [f"pedlab {meta.get('version', '?')} -- {meta.get('command', 'run')}"]
    for key, val in sorted(meta.get("parameters", {}).items()):
        lines.append(f"  {key} = {val}")
    lines.append("")
    for e in report.runs:
        lines.append(f"[{_STATUS_TAGS[e.status]:9}] {e.label}   ({e.checked})")
        if e.witness is not None:
            what = "n" if e.kind == "claim" else "exponent"
            lines.append(f"{'':12}first mismatch at {what} = {e.witness[0]}"
                         f" (residue {e.witness[1]})")
    counts = report.counts()
    lines.append("")
    lines.append(f"{counts['pass']} pass, {counts['fail']} fail, "
                 f"{counts['empirical-pass']} empirical-pass")
    if counts["empirical-pass"]:
        lines.append("EMPIRICAL entries are conjecture-status: verified for "
                     "the scanned range, not proven.")
    if meta.get("note"):
        lines.append(str(meta["note"]))
    return "\n".join(lines)

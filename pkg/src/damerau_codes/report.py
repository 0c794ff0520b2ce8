"""Verification report record shared by the ball utilities and the harness."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass
class VerificationReport:
    """Outcome of one disjointness / round-trip / bound check.

    ``witness`` is a (u, v, z) triple for disjointness failures (z reachable
    from both codewords u and v) and an (expected, got, input) triple for
    decoder round-trip failures.  ``measured_redundancy`` is n - log2(size)
    and is reported only for nonempty codes.
    """

    code_id: str
    kind: str
    status: str  # "pass" | "fail"
    witness: tuple[str, str, str] | None = None
    codeword_count: int | None = None
    measured_redundancy: float | None = None
    bound_value: float | None = None
    wall_time_s: float = 0.0
    notes: str = ""

    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "code_id": self.code_id,
            "kind": self.kind,
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "codeword_count": self.codeword_count,
            "measured_redundancy": self.measured_redundancy,
            "bound_value": self.bound_value,
            "wall_time_s": self.wall_time_s,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if value is None or value == "":
                continue
            if key == "witness":
                value = " ".join(w if w else "<empty>" for w in value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


def failed(reports: list[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if not r.ok()]

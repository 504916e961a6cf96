"""Verification reports shared by the exact and numeric checks."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one verification claim.

    ``tier`` is ``"exact"`` for rational identities, ``"A"`` for tight
    numeric checks and ``"B"`` for convergence-trend checks. Only exact and
    tier-A failures count as hard failures.
    """

    claim: str
    k: int
    order: int
    passed: bool
    diff: list[Any] = field(default_factory=list)
    tier: str = "exact"
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def hard_failure(self) -> bool:
        return not self.passed and self.tier != "B"

    def to_json(self) -> dict[str, Any]:
        out = {
            "claim": self.claim,
            "k": self.k,
            "order": self.order,
            "status": self.status,
            "diff": self.diff,
            "tier": self.tier,
        }
        if self.details:
            out["details"] = self.details
        return out

    def summary(self) -> str:
        return f"[{self.status.upper()}] {self.claim} (k={self.k}, order={self.order}, tier={self.tier})"


CONVERGENCE_COLUMNS = ("s", "M", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual")


def convergence_csv(rows: list[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["claim", "tau", "z", *CONVERGENCE_COLUMNS], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()

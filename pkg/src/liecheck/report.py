"""Verification reports: claim-by-claim pass/fail records and their rendering."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from . import __version__

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _plain(v: Any) -> Any:
    """JSON-friendly rendering with a stable shape."""
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


@dataclass(frozen=True)
class ReportItem:
    claim_id: str
    anchor: str
    computed: Any
    expected: Any
    status: str

    def as_dict(self) -> dict:
        return {"claim": self.claim_id, "anchor": self.anchor,
                "computed": _plain(self.computed), "expected": _plain(self.expected),
                "status": self.status}


@dataclass
class VerificationReport:
    title: str = ""
    items: list[ReportItem] = field(default_factory=list)

    def check(self, claim_id: str, anchor: str, computed: Any, expected: Any) -> bool:
        """Record a comparison; the status is decided by equality alone."""
        ok = computed == expected
        self.items.append(ReportItem(claim_id, anchor, computed, expected, PASS if ok else FAIL))
        return ok

    def record(self, claim_id: str, anchor: str, value: Any, note: str = "given") -> None:
        """Record data that is taken as given rather than derived."""
        self.items.append(ReportItem(claim_id, anchor, value, note, SKIPPED))

    def fail(self, claim_id: str, anchor: str, computed: Any, expected: Any) -> None:
        self.items.append(ReportItem(claim_id, anchor, computed, expected, FAIL))

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.items.extend(other.items)
        return self

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for it in self.items:
            out[it.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts()[FAIL] == 0

    def failures(self) -> list[ReportItem]:
        return [it for it in self.items if it.status == FAIL]

    # -- rendering -------------------------------------------------------------
    def as_dict(self) -> dict:
        c = self.counts()
        return {"title": self.title, "engine_version": __version__, "timestamp": None,
                "summary": {"total": len(self.items), "pass": c[PASS], "fail": c[FAIL],
                            "skipped": c[SKIPPED]},
                "items": [it.as_dict() for it in self.items]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"

    def to_markdown(self) -> str:
        c = self.counts()
        lines = [f"# {self.title or 'Verification report'}", "",
                 f"engine {__version__}: {len(self.items)} claims, {c[PASS]} pass, "
                 f"{c[FAIL]} fail, {c[SKIPPED]} skipped", "",
                 "| claim | anchor | computed | expected | status |",
                 "|---|---|---|---|---|"]
        for it in self.items:
            cells = [it.claim_id, it.anchor, _cell(it.computed), _cell(it.expected), it.status]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    s = json.dumps(_plain(v)) if not isinstance(v, str) else v
    return s.replace("|", "\\|")


def merge(title: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(title)
    for r in reports:
        out.extend(r)
    return out

"""
Staged reports: one data structure, rendered as JSON or as text.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.core.verdict import Status, Verdict


@dataclass
class StageResult:
    stage: str
    verdict: Verdict
    notes: List[str] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stage": self.stage,
            "verdict": self.verdict.to_dict(),
            "notes": list(self.notes),
            "data": self.data,
        }


@dataclass
class Report:
    title: str
    stages: List[StageResult] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    def add(self, stage: str, verdict: Verdict, notes: Optional[List[str]] = None, **data: Any) -> StageResult:
        result = StageResult(stage, verdict, notes or [], dict(data))
        self.stages.append(result)
        return result

    @property
    def status(self) -> Status:
        statuses = [s.verdict.status for s in self.stages]
        if Status.FAIL in statuses:
            return Status.FAIL
        if Status.UNKNOWN in statuses:
            return Status.UNKNOWN
        return Status.PASS

    def stage(self, name: str) -> StageResult:
        for s in self.stages:
            if s.stage == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "status": self.status.value,
            "stages": [s.to_dict() for s in self.stages],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def render(self) -> str:
        lines = ["=" * 50, self.title.upper(), "=" * 50]
        for i, s in enumerate(self.stages, 1):
            v = s.verdict
            lines.append(f"[{i}] {s.stage}: {v.status.value} ({v.certificate.value})")
            if v.detail:
                lines.append(f"    {v.detail}")
            for note in s.notes:
                lines.append(f"    - {note}")
        if self.summary:
            lines.append("")
            for key, value in self.summary.items():
                lines.append(f"{key}: {value}")
        lines.append("=" * 50)
        lines.append(f"Status: {self.status.value}")
        return "\n".join(lines) + "\n"

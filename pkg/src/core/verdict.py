"""
Verdicts and violations shared by every checking operation.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


class Certificate(str, Enum):
    """How much a verdict actually certifies."""
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    FAMILY = "family"        # exact per-family argument (ball arithmetic, valuation shift)
    AUTOMATIC = "automatic"  # vacuous for the carrier type, e.g. openness on a discrete set


@dataclass(frozen=True)
class Violation:
    """A violated law together with its witness elements."""
    axiom: str
    witness: Tuple[Any, ...]
    count: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {"axiom": self.axiom, "witness": list(self.witness), "count": self.count}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: pass / fail / unknown plus whatever backs it up."""
    status: Status
    witness: Any = None
    detail: str = ""
    certificate: Certificate = Certificate.EXHAUSTIVE
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    @property
    def unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    @classmethod
    def ok(cls, detail: str = "", certificate: Certificate = Certificate.EXHAUSTIVE,
           **data: Any) -> "Verdict":
        return cls(Status.PASS, None, detail, certificate, dict(data))

    @classmethod
    def fail(cls, witness: Any, detail: str = "",
             certificate: Certificate = Certificate.EXHAUSTIVE, **data: Any) -> "Verdict":
        return cls(Status.FAIL, witness, detail, certificate, dict(data))

    @classmethod
    def undecided(cls, detail: str = "", certificate: Certificate = Certificate.SAMPLED,
                  witness: Any = None, **data: Any) -> "Verdict":
        return cls(Status.UNKNOWN, witness, detail, certificate, dict(data))

    def to_dict(self, encode: Optional[Any] = None) -> Dict[str, Any]:
        """Machine-readable rendering; ``encode`` maps elements to JSON values."""
        enc = encode or _plain
        return {
            "status": self.status.value,
            "certificate": self.certificate.value,
            "detail": self.detail,
            "witness": enc(self.witness),
            "data": {k: enc(v) for k, v in self.data.items()},
        }


def _plain(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return items
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)

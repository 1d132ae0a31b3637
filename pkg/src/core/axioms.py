"""
Axiom checking for finite local groups.

The axiom set for the discrete case: identity laws, inverse laws, local
associativity and involutivity of the inversion where defined.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.core.local_group import UNDEFINED, FiniteLocalGroup
from src.core.verdict import Status, Violation
from src.errors import AxiomError
from src.logging_config import get_logger

logger = get_logger("core.axioms")

IDENTITY_LAW = "identity-law"
INVERSE_LAW = "inverse-law"
LOCAL_ASSOCIATIVITY = "local-associativity"
INVOLUTION = "involution"


@dataclass(frozen=True)
class AxiomReport:
    """Verdict plus one minimal witness per violated axiom."""
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> Status:
        return Status.PASS if not self.violations else Status.FAIL

    @property
    def passed(self) -> bool:
        return not self.violations

    def violation(self, axiom: str) -> Optional[Violation]:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "violations": [v.to_dict() for v in self.violations],
        }


def check_axioms(G: FiniteLocalGroup) -> AxiomReport:
    """
    Check every local-group axiom exhaustively.

    Witnesses are the first offending instance in carrier index order, so
    they are minimal in that order; ``count`` says how many instances fail.
    """
    n = len(G)
    t = G.product_table
    inv = G.inverse_table
    e = G.identity_index
    label = G.carrier

    found: Dict[str, List[Tuple]] = {}

    def record(axiom: str, witness: Tuple):
        found.setdefault(axiom, []).append(witness)

    for x in range(n):
        if t[e][x] != x or t[x][e] != x:
            record(IDENTITY_LAW, (label[x],))

    for x in range(n):
        xi = inv[x]
        if xi == UNDEFINED:
            continue
        if t[x][xi] != e or t[xi][x] != e:
            record(INVERSE_LAW, (label[x], label[xi]))

    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy == UNDEFINED:
                continue
            for z in range(n):
                yz = t[y][z]
                if yz == UNDEFINED:
                    continue
                left = t[xy][z]
                right = t[x][yz]
                if left != UNDEFINED and right != UNDEFINED and left != right:
                    record(LOCAL_ASSOCIATIVITY, (label[x], label[y], label[z]))

    for x in range(n):
        xi = inv[x]
        if xi != UNDEFINED and inv[xi] != UNDEFINED and inv[xi] != x:
            record(INVOLUTION, (label[x],))

    violations = tuple(
        Violation(axiom, witnesses[0], len(witnesses))
        for axiom, witnesses in found.items()
    )
    report = AxiomReport(violations)
    logger.debug(
        f"Axiom check: {len(violations)} violated axioms",
        extra={"group": G.name or "?", "verdict": report.verdict.value},
    )
    return report


def require_axioms(G: FiniteLocalGroup) -> None:
    """Raise AxiomError when G is not a local group."""
    report = check_axioms(G)
    if not report.passed:
        first = report.violations[0]
        raise AxiomError(
            f"{G.name or 'local group'} violates {first.axiom} at {first.witness}",
            list(report.violations),
        )

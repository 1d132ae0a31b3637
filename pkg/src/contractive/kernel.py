"""
Membership in the kernel tower D = union of ker(phi~^n) inside the
globalization H of a finite local group.

phi~ is the extension of a local-group endomorphism to H: a generator
g_x goes to iota(phi(x)) and a formal inverse to the inverse of that word.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Sequence

from src.core.local_group import FiniteLocalGroup
from src.core.morphisms import check_morphism, is_injective
from src.errors import IncompleteSystemError, MorphismError, PreconditionError
from src.globalization.presentation import GenWord, Presentation, present
from src.globalization.rewriting import RewriteSystem
from src.logging_config import get_logger

logger = get_logger("contractive.kernel")


class Membership(str, Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class KernelTowerQuery:
    word: GenWord
    depth: int = 8

    def __post_init__(self):
        if self.depth < 0:
            raise PreconditionError("kernel tower depth must be >= 0")


@dataclass(frozen=True)
class KernelAnswer:
    answer: Membership
    iterates: int
    normal_form: GenWord
    certificate: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "answer": self.answer.value,
            "iterates": self.iterates,
            "normal_form": " ".join(self.normal_form) or "ε",
            "certificate": self.certificate,
        }


class ExtendedEndomorphism:
    """phi~ on generator words of H."""

    def __init__(self, presentation: Presentation, phi: Mapping[Any, Any]):
        self.presentation = presentation
        self.images: Dict[str, GenWord] = {}
        for x, g in presentation.generator_of.items():
            self.images[g] = presentation.iota(phi[x])
        for x, X in presentation.formal_inverse_of.items():
            self.images[X] = presentation.inverse_word(presentation.iota(phi[x]))

    def __call__(self, word: Sequence[str]) -> GenWord:
        out = []
        for s in word:
            out.extend(self.images[s])
        return tuple(out)


def kernel_tower_membership(
    G: FiniteLocalGroup,
    rs: RewriteSystem,
    phi: Mapping[Any, Any],
    q: KernelTowerQuery,
    presentation: Optional[Presentation] = None,
) -> KernelAnswer:
    if not rs.complete:
        raise IncompleteSystemError("kernel tower membership needs a complete rewriting system")
    violations = check_morphism(G, G, phi)
    if violations:
        first = violations[0]
        raise MorphismError(f"phi violates {first.axiom} at {list(first.witness)}", first)
    presentation = presentation or present(G)
    phi_tilde = ExtendedEndomorphism(presentation, phi)

    start = rs.normal_form(q.word)
    word = start
    for n in range(q.depth + 1):
        if word == ():
            logger.debug(f"phi~^{n} kills {' '.join(q.word) or 'ε'}", extra={"steps": n})
            return KernelAnswer(Membership.MEMBER, n, start, f"phi~^{n} reduces to ε")
        if n < q.depth:
            word = rs.normal_form(phi_tilde(word))

    certificate = _non_member_certificate(G, rs, presentation, phi, start)
    if certificate:
        return KernelAnswer(Membership.NON_MEMBER, q.depth, start, certificate)
    return KernelAnswer(Membership.UNKNOWN, q.depth, start, f"no iterate up to {q.depth} reduces to ε")


def _non_member_certificate(
    G: FiniteLocalGroup,
    rs: RewriteSystem,
    presentation: Presentation,
    phi: Mapping[Any, Any],
    form: GenWord,
) -> str:
    # phi a permutation with a morphism inverse: phi~ is an automorphism of H
    if is_injective(phi, G.carrier):
        inverse = {y: x for x, y in phi.items()}
        if not check_morphism(G, G, inverse):
            return "phi~ is an automorphism of H"

        # D meets iota(G) only in 1 when phi is injective and iota separates points
        forms = {rs.normal_form(presentation.iota(x)): x for x in G.carrier}
        if len(forms) == len(G) and form in forms and forms[form] != G.identity:
            return f"iota({forms[form]!r}) with phi injective"
    return ""

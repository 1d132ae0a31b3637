"""
Extending local-group morphisms to the globalization.

For a finite local group, phi: G -> L extends to H by sending each
generator g_x to phi(x); the extension is checked to respect every
rewrite rule, so it is well defined on classes. For instance views there
is no finite presentation: words are evaluated directly and the
evaluation is replayed across contraction moves instead.
"""

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Union

from src.config import get_config
from src.core.local_group import FiniteLocalGroup
from src.core.morphisms import check_morphism
from src.core.verdict import Certificate, Verdict, Violation
from src.errors import FormatError, IncompleteSystemError, MorphismError
from src.globalization.presentation import GenWord, Presentation, present
from src.globalization.rewriting import RewriteSystem
from src.globalization.targets import CircleGroup, target_from_dict, target_to_dict
from src.logging_config import get_logger
from src.moves.move import Move, apply_move

logger = get_logger("globalization.extension")

ImageMap = Union[Mapping[Any, Any], Callable[[Any], Any]]


@dataclass(frozen=True)
class MorphismSpec:
    """A target group and the images of carrier elements (a mapping, or a callable for instances)."""
    target: Any
    images: ImageMap

    def image(self, x: Any) -> Any:
        if callable(self.images) and not isinstance(self.images, Mapping):
            return self.images(x)
        return self.images[x]

    def as_mapping(self, carrier: Sequence[Any]) -> Dict[Any, Any]:
        return {x: self.image(x) for x in carrier}

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: Any = None) -> "MorphismSpec":
        """
        {"target": ..., "images": [[x, fx], ...]} or, for a source that
        sits inside its target, {"target": ..., "map": "inclusion"}.
        """
        try:
            target = target_from_dict(data["target"])
        except KeyError:
            raise FormatError("morphism spec needs a target") from None
        parse = target.parse if isinstance(target, CircleGroup) else (lambda v: v)
        if data.get("map") == "inclusion":
            if isinstance(target, CircleGroup):
                return cls(target, target.reduce)
            if source is None:
                raise FormatError("inclusion needs the source local group")
            return cls(target, {x: x for x in source.carrier})
        try:
            images = {tuple(k) if isinstance(k, list) else k: parse(v) for k, v in data["images"]}
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"Malformed morphism images: {e}") from None
        return cls(target, images)

    def to_dict(self, carrier: Sequence[Any]) -> Dict[str, Any]:
        enc = self.target.encode if isinstance(self.target, CircleGroup) else (lambda v: v)
        return {
            "target": target_to_dict(self.target),
            "images": [[x, enc(self.image(x))] for x in carrier],
        }


class GroupExtension:
    """The extended morphism H -> L, queried on generator words."""

    def __init__(self, presentation: Presentation, rs: RewriteSystem, target: Any, phi: Dict[Any, Any]):
        self.presentation = presentation
        self.rs = rs
        self.target = target
        self.values: Dict[str, Any] = {}
        for x, g in presentation.generator_of.items():
            self.values[g] = phi[x]
        for x, X in presentation.formal_inverse_of.items():
            self.values[X] = target.inverse(phi[x])

    def evaluate(self, word: GenWord) -> Any:
        value = self.target.identity
        for s in word:
            try:
                value = self.target.product(value, self.values[s])
            except KeyError:
                raise FormatError(f"unknown generator symbol {s!r}") from None
        return value

    def evaluate_normal_form(self, word: GenWord) -> Any:
        return self.evaluate(self.rs.normal_form(word))

    def in_kernel(self, word: GenWord) -> bool:
        return self.evaluate(word) == self.target.identity

    def rule_violations(self) -> List[str]:
        bad = []
        for lhs, rhs in self.rs.rules:
            if self.evaluate(self.rs.decode(lhs)) != self.evaluate(self.rs.decode(rhs)):
                bad.append(f"{self.rs.render(lhs)} -> {self.rs.render(rhs)}")
        for lhs, rhs in self.presentation.relations:
            if self.evaluate(lhs) != self.evaluate(rhs):
                bad.append(f"{' '.join(lhs)} = {' '.join(rhs) or 'ε'}")
        return bad


def extend_morphism(
    G: FiniteLocalGroup,
    spec: MorphismSpec,
    rs: RewriteSystem,
    presentation: Optional[Presentation] = None,
) -> GroupExtension:
    presentation = presentation or present(G)
    if not rs.complete:
        raise IncompleteSystemError("extension needs a complete rewriting system")
    phi = spec.as_mapping(G.carrier)
    violations = check_morphism(G, spec.target, phi)
    if violations:
        first = violations[0]
        raise MorphismError(f"images violate {first.axiom} at {list(first.witness)}", first)

    extension = GroupExtension(presentation, rs, spec.target, phi)
    bad = extension.rule_violations()
    if bad:
        raise MorphismError(f"extension not constant on classes: {bad[0]}", Violation("rule", (bad[0],), len(bad)))
    logger.info(f"Extended morphism to H through {len(rs.rules)} rules",
                extra={"group": G.name, "rules": len(rs.rules)})
    return extension


# ==================== INSTANCES ====================

class InstanceExtension:
    """Word evaluation for a morphism out of an instance view, alongside the ambient value."""

    def __init__(self, view: Any, target: Any, f: Callable[[Any], Any]):
        self.view = view
        self.target = target
        self.f = f

    def evaluate(self, word: Sequence[Any]) -> Any:
        value = self.target.identity
        for x in word:
            value = self.target.product(value, self.f(x))
        return value

    def ambient(self, word: Sequence[Any]) -> Any:
        return self.view.globalize(word)

    def in_kernel(self, word: Sequence[Any]) -> bool:
        return self.evaluate(word) == self.target.identity

    def replay_contractions(self, samples: Optional[int] = None, seed: Optional[int] = None,
                            max_len: Optional[int] = None) -> Verdict:
        """
        Both evaluations must be constant along every contract-I move of
        sampled words.
        """
        config = get_config()
        samples = config.samples if samples is None else samples
        max_len = config.max_len if max_len is None else max_len
        rng = random.Random(config.seed if seed is None else seed)
        moves = 0
        for _ in range(samples):
            word = tuple(self.view.sample(rng, rng.randint(2, max(2, max_len))))
            value, amb = self.evaluate(word), self.ambient(word)
            for i in range(1, len(word)):
                if self.view.product(word[i - 1], word[i]) is None:
                    continue
                shorter = apply_move(self.view, word, Move.contract_i(i))
                moves += 1
                if self.evaluate(shorter) != value or self.ambient(shorter) != amb:
                    return Verdict.fail({"word": list(word), "position": i},
                                        detail="evaluation changed under a contraction",
                                        certificate=Certificate.SAMPLED)
        return Verdict.ok(f"constant across {moves} sampled contractions", Certificate.SAMPLED, moves=moves)


def check_morphism_sampled(view: Any, target: Any, f: Callable[[Any], Any],
                           samples: Optional[int] = None, seed: Optional[int] = None) -> List[Violation]:
    """Morphism laws of f on sampled elements and pairs of an instance view."""
    config = get_config()
    samples = config.samples if samples is None else samples
    rng = random.Random(config.seed if seed is None else seed)
    found: Dict[str, Violation] = {}
    if f(view.identity) != target.identity:
        found["morphism-identity"] = Violation("morphism-identity", (view.identity,))
    for _ in range(samples):
        x, y = view.sample(rng, 2)
        xy = view.product(x, y)
        if xy is not None and target.product(f(x), f(y)) != f(xy):
            found.setdefault("morphism-product", Violation("morphism-product", (x, y)))
        if target.inverse(f(x)) != f(view.inverse(x)):
            found.setdefault("morphism-inverse", Violation("morphism-inverse", (x,)))
    return list(found.values())


def extend_instance_morphism(view: Any, target: Any, f: Callable[[Any], Any],
                             samples: Optional[int] = None, seed: Optional[int] = None) -> InstanceExtension:
    violations = check_morphism_sampled(view, target, f, samples, seed)
    if violations:
        first = violations[0]
        raise MorphismError(f"images violate {first.axiom} at {list(first.witness)}", first)
    return InstanceExtension(view, target, f)

"""
Morphisms preserve bracketing values, and contraction forces global
associativity.
"""

import random
from typing import Any, Optional, Sequence

from src.config import get_config
from src.contractive.pseudo_auto import (
    ElementMap, PseudoAutoCheckConfig, as_map, as_view, check_pseudo_automorphism, iterate,
)
from src.core.verdict import Certificate, Verdict
from src.errors import PreconditionError
from src.instances.balls import strong_ball
from src.instances.view import InstanceView
from src.logging_config import get_logger
from src.words.associativity import check_global_assoc
from src.words.evaluation import eval_all, eval_some

logger = get_logger("contractive.lemmas")


def phi_preserves_eval(G: Any, phi: ElementMap, w: Sequence[Any]) -> Verdict:
    """Every value b of w has phi(b) among the values of the image word."""
    G = as_view(G)
    f = as_map(G, phi)
    values = eval_some(G, w)
    image_values = eval_some(G, [f(x) for x in w])
    for b in sorted(values, key=_key(G)):
        if f(b) not in image_values:
            return Verdict.fail({"word": list(w), "value": b}, detail="phi(value) missing from the image word")
    return Verdict.ok(f"{len(values)} values carried over", values=len(values))


def _key(G: Any):
    return getattr(G, "sort_key", repr)


def contractive_implies_assoc(
    G: Any,
    phi: ElementMap,
    max_len: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> Verdict:
    """
    Global associativity of a local group with a contractive
    pseudo-automorphism. On instances the argument is replayed too: a
    sampled word is pushed by phi^m into a ball where every bracketing is
    defined, and each of its values must land on that single value.
    """
    config = get_config()
    max_len = config.max_len if max_len is None else max_len
    samples = config.samples if samples is None else samples
    seed = config.seed if seed is None else seed
    G = as_view(G)

    pre = check_pseudo_automorphism(G, phi, PseudoAutoCheckConfig(samples=samples, seed=seed))
    if not pre.passed:
        raise PreconditionError(f"phi is not a contractive pseudo-automorphism: {pre.detail}")

    verdict = check_global_assoc(G, max_len=max_len, samples=samples, seed=seed)
    if not verdict.passed or not isinstance(G, InstanceView):
        return verdict

    f = as_map(G, phi)
    rng = random.Random(seed + 1)
    replayed = 0
    deepest = 0
    budget = config.contraction_budget
    for _ in range(samples):
        word = G.sample(rng, rng.randint(2, max(2, max_len)))
        values = eval_some(G, word)
        if len(values) > 1:
            return Verdict.fail({"word": list(word), "values": sorted(values, key=G.sort_key)[:2]},
                                detail="two values survived", certificate=Certificate.SAMPLED)
        if not values:
            continue
        ball = strong_ball(G.spec, len(word))
        pushed = word
        m = 0
        while not all(ball.contains(x) for x in pushed):
            if m == budget:
                return Verdict.undecided(f"word not pushed into the strong ball within {budget} steps",
                                         witness={"word": list(word)})
            pushed = [f(x) for x in pushed]
            m += 1
        strong_value = eval_all(G, pushed)
        for b in values:
            if iterate(f, b, m) != strong_value:
                return Verdict.fail({"word": list(word), "value": b, "steps": m},
                                    detail="phi^m(value) differs from the strong value",
                                    certificate=Certificate.SAMPLED)
        replayed += 1
        deepest = max(deepest, m)

    logger.info(f"Contraction argument replayed on {replayed} words (deepest push {deepest})",
                extra={"group": G.name, "steps": deepest})
    return Verdict.ok(
        f"{verdict.detail}; {replayed} words replayed through the strong ball",
        Certificate.SAMPLED, replayed=replayed, deepest=deepest, **verdict.data,
    )

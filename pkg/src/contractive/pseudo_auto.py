"""
Contractive pseudo-automorphism checks.

phi must be a morphism, injective and open on U, and every point of U
must be driven to the identity by the iterates of phi. On finite tables
"open" is automatic and contraction means reaching the identity; on
instances injectivity and openness come from the family (scaling and
x -> px) and contraction is certified against a monotone ball family.
"""

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Union

from src.config import get_config
from src.core.local_group import FiniteLocalGroup
from src.core.morphisms import check_morphism, is_injective
from src.core.verdict import Certificate, Verdict
from src.errors import FormatError, PreconditionError
from src.globalization.extension import check_morphism_sampled
from src.instances.balls import BallSet, cofinal_balls
from src.instances.spec import EndoSpec, Family, InstanceSpec
from src.instances.view import InstanceView, as_local_group_view
from src.logging_config import get_logger

logger = get_logger("contractive.pseudo_auto")

ElementMap = Union[Mapping[Any, Any], EndoSpec]


@dataclass
class PseudoAutoCheckConfig:
    """Witness neighborhood U, iteration budget and contraction targets."""
    U: Any = None                       # subset (finite) or BallSet (instance); None = whole carrier
    budget: Optional[int] = None
    targets: Optional[List[BallSet]] = None
    samples: Optional[int] = None
    seed: Optional[int] = None

    def resolved(self) -> "PseudoAutoCheckConfig":
        config = get_config()
        return PseudoAutoCheckConfig(
            U=self.U,
            budget=config.contraction_budget if self.budget is None else self.budget,
            targets=self.targets,
            samples=config.samples if self.samples is None else self.samples,
            seed=config.seed if self.seed is None else self.seed,
        )


def as_view(G: Any) -> Any:
    return as_local_group_view(G) if isinstance(G, InstanceSpec) else G


def as_map(G: Any, phi: ElementMap) -> Callable[[Any], Any]:
    """Element map of phi on G's view."""
    if isinstance(phi, EndoSpec):
        view = as_view(G)
        phi.validate_for(view.spec)
        return lambda x: view.apply_endo(phi, x, 1)
    if isinstance(phi, Mapping):
        return lambda x: phi[x]
    raise FormatError(f"cannot use {phi!r} as an element map")


def iterate(f: Callable[[Any], Any], x: Any, n: int) -> Any:
    for _ in range(n):
        x = f(x)
    return x


def check_pseudo_automorphism(G: Any, phi: ElementMap, cfg: Optional[PseudoAutoCheckConfig] = None) -> Verdict:
    cfg = (cfg or PseudoAutoCheckConfig()).resolved()
    G = as_view(G)
    if isinstance(G, FiniteLocalGroup):
        verdict = _check_finite(G, phi, cfg)
    elif isinstance(G, InstanceView):
        if not isinstance(phi, EndoSpec):
            raise FormatError("instances take an EndoSpec")
        verdict = _check_instance(G, phi, cfg)
    else:
        raise FormatError(f"unsupported local group {G!r}")
    logger.info(f"Pseudo-automorphism check: {verdict.status.value} ({verdict.detail})",
                extra={"group": getattr(G, "name", ""), "verdict": verdict.status.value})
    return verdict


# ==================== FINITE ====================

def _check_finite(G: FiniteLocalGroup, phi: Mapping[Any, Any], cfg: PseudoAutoCheckConfig) -> Verdict:
    if not isinstance(phi, Mapping):
        raise FormatError("finite local groups take an element map")
    U = list(G.carrier) if cfg.U is None else [x for x in G.carrier if x in frozenset(cfg.U)]
    if G.identity not in U:
        raise PreconditionError("U must contain the identity")
    parts: Dict[str, str] = {}

    violations = check_morphism(G, G, phi)
    if violations:
        v = violations[0]
        return Verdict.fail(v.witness, detail=f"not a morphism: {v.axiom}", failed="morphism", **parts)
    parts["morphism"] = "pass"

    if not is_injective(phi, U):
        return Verdict.fail(_collision(phi, U), detail="not injective on U", failed="injective", **parts)
    parts["injective"] = "pass"
    parts["open"] = Certificate.AUTOMATIC.value

    f = as_map(G, phi)
    unknown = None
    for x in U:
        seen = set()
        y = x
        for _ in range(cfg.budget):
            if y == G.identity:
                break
            if y in seen:
                return Verdict.fail((x,), detail=f"orbit of {x!r} cycles without reaching the identity",
                                    failed="contraction", **parts)
            seen.add(y)
            y = f(y)
        if y != G.identity and unknown is None:
            unknown = x
    if unknown is not None:
        return Verdict.undecided(f"budget {cfg.budget} exhausted at {unknown!r}", Certificate.EXHAUSTIVE,
                                 witness=(unknown,), failed="contraction", **parts)
    parts["contraction"] = "pass"
    return Verdict.ok("morphism, injective, open (discrete), contracting", **parts)


def _collision(phi: Mapping[Any, Any], U: Iterable[Any]) -> tuple:
    first: Dict[Any, Any] = {}
    for x in U:
        if phi[x] in first:
            return (first[phi[x]], x)
        first[phi[x]] = x
    return ()


# ==================== INSTANCES ====================

def _check_instance(view: InstanceView, endo: EndoSpec, cfg: PseudoAutoCheckConfig) -> Verdict:
    spec = view.spec
    endo.validate_for(spec)
    carrier = BallSet.whole(spec)
    U = carrier if cfg.U is None else cfg.U
    if not isinstance(U, BallSet):
        raise FormatError("instance neighborhoods are BallSets")
    if not U.within(spec):
        raise PreconditionError(f"U = {U.describe()} is not inside the carrier")
    f = as_map(view, endo)
    parts: Dict[str, Any] = {}

    violations = check_morphism_sampled(view, view, f, cfg.samples, cfg.seed)
    if violations:
        v = violations[0]
        return Verdict.fail(v.witness, detail=f"not a morphism: {v.axiom}", certificate=Certificate.SAMPLED,
                            failed="morphism")
    parts["morphism"] = "pass (linear family map, sampled)"
    injective = check_injective(spec, endo, view.sample(random.Random(cfg.seed), cfg.samples))
    if not injective.passed:
        return injective
    parts["injective"] = f"pass ({injective.detail})"

    image = U.image(endo)
    parts["open"] = f"phi({U.describe()}) = {image.describe()}"
    whole_image = carrier.image(endo)
    parts["surjective"] = whole_image == carrier
    parts["image"] = whole_image.describe()

    targets = cfg.targets if cfg.targets is not None else cofinal_balls(spec, _default_depth(spec))
    for B in targets:
        if not B.image(endo).subset_of(B):
            raise PreconditionError(f"target family is not phi-invariant at {B.describe()}")

    rng = random.Random(cfg.seed)
    points = [x for x in view.sample(rng, cfg.samples) if U.contains(x)]
    worst = 0
    for x in points:
        for B in targets:
            n = _steps_into(view, f, x, B, cfg.budget)
            if n is None:
                return Verdict.undecided(
                    f"budget {cfg.budget} exhausted driving {view.encode_element(x)} into {B.describe()}",
                    Certificate.FAMILY, witness=(x,), failed="contraction", **parts,
                )
            worst = max(worst, n)
    parts["contraction"] = f"{len(points)} points into {len(targets)} balls, at most {worst} steps"
    return Verdict.ok("morphism, injective, open, contracting", Certificate.FAMILY,
                      points=len(points), max_steps=worst, **parts)



def _collapses(spec: InstanceSpec, endo: EndoSpec, x: Any) -> bool:
    """x is off the identity but phi(x) is the identity, read at the precision x carries."""
    if spec.is_product:
        # a kernel point of either factor pairs with the identity of the other
        return _collapses(spec.left, endo.left, x[0]) or _collapses(spec.right, endo.right, x[1])
    if spec.family is Family.PADIC:
        v = x.valuation()
        # times_p keeps the precision, so a point of valuation k-1 loses its last digit
        return v is not None and v < x.precision - 1 and x.times_p().is_zero()
    return x != 0 and x * endo.scale == 0


def check_injective(spec: InstanceSpec, endo: EndoSpec, points: Iterable[Any]) -> Verdict:
    """
    Kernel test on sampled points. The carriers are abelian groups and phi
    a morphism, so phi(x) = phi(y) with x != y puts x - y in the kernel.
    """
    points = list(points)
    for x in points:
        if _collapses(spec, endo, x):
            return Verdict.fail((x,), detail=f"phi sends {x!r} to the identity", certificate=Certificate.SAMPLED,
                                failed="injective")
    return Verdict.ok(f"trivial kernel on {len(points)} sampled points", Certificate.SAMPLED, points=len(points))


def _default_depth(spec: InstanceSpec) -> int:
    """Configured ball depth, capped so p-adic targets stay decidable at the tracked precision."""
    depth = get_config().ball_depth
    for leaf in spec.factors():
        if leaf.family is Family.PADIC:
            depth = min(depth, leaf.precision - leaf.e)
    return depth


def _steps_into(view: InstanceView, f, x: Any, B: BallSet, budget: int) -> Optional[int]:
    """Least n <= budget with phi^n(x) in B; B is phi-invariant so the orbit stays."""
    y = x
    for n in range(budget + 1):
        if B.contains(y):
            return n
        y = f(y)
    return None


def padic_steps(valuation: Optional[int], m: int) -> int:
    """Iterates of x -> px needed to enter p^m Z_p from valuation v: max(0, m - v)."""
    if valuation is None:
        return 0
    return max(0, m - valuation)

"""
Shrinking a compact neighborhood V to one that phi maps into itself.

V_l is the intersection of phi^k(V) over all integers k <= l, negative
powers being preimages inside the carrier. Preimages grow until they
reach the carrier, so only finitely many terms matter and every V_l is a
ball computed exactly.
"""

import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.config import get_config
from src.contractive.pseudo_auto import check_injective
from src.core.verdict import Certificate, Verdict
from src.errors import FormatError, PrecisionError, PreconditionError
from src.instances.balls import BallSet, cofinal_balls
from src.instances.spec import EndoSpec, Family, InstanceSpec
from src.instances.view import InstanceView, as_local_group_view
from src.logging_config import get_logger

logger = get_logger("contractive.shrink")


@dataclass
class ShrinkResult:
    U: BallSet
    balls: Dict[int, BallSet]
    properties: Dict[str, Verdict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.properties.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "U": self.U.to_dict(),
            "balls": {str(l): b.describe() for l, b in sorted(self.balls.items())},
            "properties": {name: v.to_dict() for name, v in self.properties.items()},
            "passed": self.passed,
        }


class _Levels:
    """V_l on demand: the intersection of phi^k(V) for k <= l."""

    def __init__(self, spec: InstanceSpec, endo: EndoSpec, V: BallSet):
        self.spec = spec
        self.endo = endo
        self.V = V
        self.carrier = BallSet.whole(spec)
        # preimages phi^-1(V), phi^-2(V), ... until they stop growing
        self.preimages: List[BallSet] = []
        ball = V
        for _ in range(get_config().contraction_budget):
            grown = ball.preimage(endo, spec)
            if grown == ball:
                break
            self.preimages.append(grown)
            ball = grown
        self.floor = -len(self.preimages)
        self._cache: Dict[int, BallSet] = {}

    def power(self, k: int) -> BallSet:
        if k < 0:
            return self.preimages[min(-k, len(self.preimages)) - 1]
        return self.V.power_image(self.endo, self.spec, k)

    def __getitem__(self, l: int) -> BallSet:
        if l < self.floor:
            l = self.floor
        if l not in self._cache:
            if l == self.floor:
                ball = self.power(l) if l < 0 else self.V
                ball = ball.intersect(self.carrier)
            else:
                ball = self[l - 1].intersect(self.power(l))
            self._cache[l] = ball
        return self._cache[l]


def _sample_points(view: InstanceView, endo: EndoSpec, depth: int) -> List[Any]:
    """Sampled carrier points and their phi-orbits, so the deep balls hold points too."""
    config = get_config()
    points = []
    for x in view.sample(random.Random(config.seed), config.samples):
        points.extend(view.apply_endo(endo, x, n) for n in range(depth + 1))
    return points


def _inside(ball: BallSet, x: Any) -> Optional[bool]:
    """Membership, or None when the tracked p-adic digits cannot decide it."""
    try:
        return ball.contains(x)
    except PrecisionError:
        return None


def _check_symmetric(view: InstanceView, balls: List[BallSet], points: List[Any]) -> Verdict:
    for ball in balls:
        for x in points:
            if _inside(ball, x) != _inside(ball, view.inverse(x)):
                return Verdict.fail((x,), detail=f"{ball.describe()} holds only one of x and x^-1",
                                    certificate=Certificate.SAMPLED)
    return Verdict.ok(f"x and x^-1 agree on {len(balls)} balls at {len(points)} points", Certificate.SAMPLED)


def _check_V(spec: InstanceSpec, V: BallSet) -> None:
    if V.family is not spec.family:
        raise FormatError(f"a {V.family.value} ball does not fit a {spec.family.value} instance")
    if spec.family is Family.PRODUCT:
        _check_V(spec.left, V.left)
        _check_V(spec.right, V.right)
        return
    if spec.family is not Family.PADIC and not V.closed:
        raise PreconditionError(f"V = {V.describe()} must be a closed ball")
    if not V.within(spec):
        raise PreconditionError(f"V = {V.describe()} is not inside the carrier")


def shrink_neighborhood(
    spec: InstanceSpec,
    endo: EndoSpec,
    V: BallSet,
    depth: Optional[int] = None,
) -> ShrinkResult:
    """
    Compute V_l for -depth <= l <= depth, U = interior(V_0), and check the
    ball laws and the properties of U exactly.
    """
    depth = get_config().ball_depth if depth is None else depth
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    endo.validate_for(spec)
    _check_V(spec, V)

    levels = _Levels(spec, endo, V)
    span = range(-depth, depth + 1)
    balls = {l: levels[l] for l in span}
    U = balls[0].interior()
    props: Dict[str, Verdict] = {}

    view = as_local_group_view(spec)
    points = _sample_points(view, endo, depth)
    props["symmetric"] = _check_symmetric(view, [balls[l] for l in span], points)

    props["nested"] = Verdict.ok("V_l+1 inside V_l", Certificate.FAMILY)
    for l in span[:-1]:
        if not balls[l + 1].subset_of(balls[l]):
            props["nested"] = Verdict.fail((l,), detail=f"V_{l + 1} not inside V_{l}", certificate=Certificate.FAMILY)
            break

    props["phi_step"] = Verdict.ok("phi(V_l) inside V_l+1", Certificate.FAMILY)
    for l in span[:-1]:
        if not balls[l].image(endo).subset_of(balls[l + 1]):
            props["phi_step"] = Verdict.fail((l,), detail=f"phi(V_{l}) not inside V_{l + 1}",
                                             certificate=Certificate.FAMILY)
            break

    covered = next((l for l in span if balls[l] == levels.carrier), None)
    if covered is None:
        props["cover"] = Verdict.undecided(f"no V_l equals the carrier for l >= {-depth}", Certificate.FAMILY)
    else:
        props["cover"] = Verdict.ok(f"V_{covered} is the carrier", Certificate.FAMILY, level=covered)

    props["base"] = _check_base(spec, levels)

    props["U_symmetric"] = _check_symmetric(view, [U], points)
    if U.pairs_in_omega(spec):
        props["U_pairs"] = Verdict.ok("U x U inside Omega", Certificate.FAMILY)
    else:
        props["U_pairs"] = Verdict.fail(U.to_dict(), detail="U x U leaves Omega", certificate=Certificate.FAMILY)
    if U.image(endo).subset_of(U):
        props["U_invariant"] = Verdict.ok(f"phi(U) = {U.image(endo).describe()}", Certificate.FAMILY)
    else:
        props["U_invariant"] = Verdict.fail(U.to_dict(), detail="phi(U) leaves U", certificate=Certificate.FAMILY)
    props["U_injective"] = check_injective(spec, endo, [x for x in points if _inside(U, x)])

    result = ShrinkResult(U, balls, props)
    logger.info(f"Shrunk {V.describe()} to U = {U.describe()}",
                extra={"family": spec.family.value, "verdict": "pass" if result.passed else "fail"})
    return result


def _check_base(spec: InstanceSpec, levels: _Levels) -> Verdict:
    """Every cofinal target ball contains some V_l."""
    config = get_config()
    budget = config.contraction_budget
    deepest = 0
    for B in cofinal_balls(spec, config.ball_depth):
        l = next((l for l in range(0, budget + 1) if levels[l].subset_of(B)), None)
        if l is None:
            return Verdict.undecided(f"no V_l inside {B.describe()} for l <= {budget}", Certificate.FAMILY)
        deepest = max(deepest, l)
    return Verdict.ok(f"each target ball holds some V_l, l <= {deepest}", Certificate.FAMILY, deepest=deepest)

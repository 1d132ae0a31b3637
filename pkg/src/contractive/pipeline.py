"""
Structure pipeline for an instance with a contractive pseudo-automorphism.

Stages run in order and the first one that does not pass aborts the run:

    pseudo-automorphism -> shrink -> neatness -> associativity -> factorization

The factorization stage classifies the leaves of the instance: interval
and arc leaves make up the connected factor, p-adic leaves the totally
disconnected one with its near-automorphism x -> px.
"""

import random
from typing import Any, Dict, List, Optional

from src.config import get_config
from src.contractive.lemmas import contractive_implies_assoc
from src.contractive.pseudo_auto import PseudoAutoCheckConfig, check_pseudo_automorphism
from src.contractive.report import Report
from src.contractive.shrink import shrink_neighborhood
from src.core.verdict import Certificate, Status, Verdict
from src.errors import PipelineStageError
from src.instances.balls import BallSet
from src.instances.spec import EndoSpec, Family, InstanceSpec
from src.instances.view import InstanceView, as_local_group_view
from src.logging_config import get_logger

logger = get_logger("contractive.pipeline")

ANALYTIC_NOTES = [
    "a locally compact contractive group splits as connected x totally disconnected factor",
    "the connected factor is a simply connected nilpotent Lie group",
    "components and Lie identification are analytic steps, not computed",
]


def default_V(spec: InstanceSpec) -> BallSet:
    """Closed ball of half the radius on interval/arc, the whole carrier on padic."""
    if spec.family is Family.PADIC:
        return BallSet.whole(spec)
    if spec.family is Family.PRODUCT:
        return BallSet.pair(default_V(spec.left), default_V(spec.right))
    return BallSet.closed_ball(spec.family, spec.radius / 2)


def check_neat_sampled(view: InstanceView, U: BallSet, samples: int, seed: int) -> Verdict:
    """
    Neatness of the restriction to U on sampled pairs: every x in U has an
    inverse in U, and a defined product xy keeps (xy, y^-1) defined.
    """
    rng = random.Random(seed)
    pairs = 0
    for _ in range(samples):
        x, y = view.sample(rng, 2)
        if not (U.contains(x) and U.contains(y)):
            continue
        if not U.contains(view.inverse(x)):
            return Verdict.fail((x,), detail="inverse leaves U", certificate=Certificate.SAMPLED)
        xy = view.product(x, y)
        if xy is None or not U.contains(xy):
            continue
        pairs += 1
        back = view.product(xy, view.inverse(y))
        if back is None or not U.contains(back):
            return Verdict.fail((x, y), detail="(xy, y^-1) not in Omega of U", certificate=Certificate.SAMPLED)
    return Verdict.ok(f"{pairs} sampled products in U", Certificate.SAMPLED, pairs=pairs)


def factorization(spec: InstanceSpec, endo: EndoSpec) -> Dict[str, List[Dict[str, Any]]]:
    connected: List[Dict[str, Any]] = []
    disconnected: List[Dict[str, Any]] = []
    for leaf, leaf_endo in _leaves(spec, endo):
        if leaf.family is Family.PADIC:
            disconnected.append({"factor": f"Z_{leaf.p}", "near_automorphism": f"x -> {leaf.p}x"})
        else:
            connected.append({"factor": "R", "from": leaf.family.value, "dimension": 1,
                              "contraction": f"x -> {leaf_endo.scale}x"})
    return {"L": connected, "P": disconnected}


def _leaves(spec: InstanceSpec, endo: EndoSpec):
    if spec.family is Family.PRODUCT:
        yield from _leaves(spec.left, endo.left)
        yield from _leaves(spec.right, endo.right)
    else:
        yield spec, endo


def _describe_factor(parts: List[Dict[str, Any]], empty: str) -> str:
    if not parts:
        return empty
    return " x ".join(p["factor"] for p in parts)


def structure_pipeline(
    spec: InstanceSpec,
    endo: Optional[EndoSpec] = None,
    V: Optional[BallSet] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    max_len: Optional[int] = None,
) -> Report:
    config = get_config()
    samples = config.samples if samples is None else samples
    seed = config.seed if seed is None else seed
    max_len = config.max_len if max_len is None else max_len
    endo = endo or EndoSpec.default_for(spec)
    view = as_local_group_view(spec)
    report = Report(f"Structure of {spec.describe()}")

    def stage(name: str, verdict: Verdict, notes=None, **data) -> None:
        report.add(name, verdict, notes, **data)
        logger.info(f"Stage {name}: {verdict.status.value}",
                    extra={"stage": name, "verdict": verdict.status.value, "family": spec.family.value})
        if not verdict.passed:
            raise PipelineStageError(f"stage {name} did not pass: {verdict.detail}", name, report,
                                     undecided=verdict.status is Status.UNKNOWN)

    stage("pseudo-automorphism",
          check_pseudo_automorphism(view, endo, PseudoAutoCheckConfig(samples=samples, seed=seed)),
          endo=endo.describe())

    shrunk = shrink_neighborhood(spec, endo, V or default_V(spec))
    failed = [name for name, v in shrunk.properties.items() if not v.passed]
    if failed:
        shrink_verdict = Verdict.fail(failed, detail=f"ball properties not established: {', '.join(failed)}",
                                      certificate=Certificate.FAMILY)
    else:
        shrink_verdict = Verdict.ok(f"U = {shrunk.U.describe()}", Certificate.FAMILY)
    stage("shrink", shrink_verdict, U=shrunk.U.to_dict(),
          balls={str(l): b.describe() for l, b in sorted(shrunk.balls.items())})

    stage("neatness", check_neat_sampled(view, shrunk.U, samples, seed))

    stage("associativity", contractive_implies_assoc(view, endo, max_len=max_len, samples=samples, seed=seed))

    factors = factorization(spec, endo)
    L = _describe_factor(factors["L"], "trivial")
    P = _describe_factor(factors["P"], "trivial")
    stage("factorization",
          Verdict.ok(f"L = {L}, P = {P}", Certificate.FAMILY, **factors),
          notes=ANALYTIC_NOTES)

    report.summary = {"L": L, "P": P, "U": shrunk.U.describe()}
    return report

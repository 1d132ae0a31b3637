import random
from fractions import Fraction
from types import SimpleNamespace

import pytest

from src.contractive import (
    KernelTowerQuery, Membership, PseudoAutoCheckConfig, Report, check_injective, check_pseudo_automorphism,
    contractive_implies_assoc, default_V, finite_contractive_degeneracy, kernel_tower_membership, padic_steps,
    phi_preserves_eval, search_degeneracy, shrink_neighborhood, structure_pipeline,
)
from src.contractive.kernel import ExtendedEndomorphism
from src.contractive.shrink import _check_symmetric
from src.core import Status, Verdict, cyclic
from src.errors import (
    FormatError, IncompleteSystemError, MorphismError, PipelineStageError, PreconditionError,
)
from src.globalization import RewriteSystem, complete, present
from src.instances import BallSet, EndoSpec, Family, InstanceSpec, as_local_group_view
from src.words import eval_some


IDENTITY = {0: 0, 1: 1, 4: 4}
SWAP = {0: 0, 1: 4, 4: 1}
COLLAPSE = {0: 0, 1: 0, 4: 0}


# ==================== PSEUDO-AUTOMORPHISMS ====================

def test_halving_is_contractive(interval, halving):
    verdict = check_pseudo_automorphism(interval, halving, PseudoAutoCheckConfig(samples=100, seed=1))
    assert verdict.passed
    assert verdict.data["surjective"] is False
    assert verdict.data["open"].startswith("phi(")


def test_times_p_is_contractive_but_not_onto(padic3):
    verdict = check_pseudo_automorphism(padic3, EndoSpec.times_p(), PseudoAutoCheckConfig(samples=100, seed=2))
    assert verdict.passed
    assert verdict.certificate.value == "family"
    assert verdict.data["surjective"] is False
    assert verdict.data["image"] == "p^1Z_p"


def test_padic_steps_match_iteration(padic3):
    view = as_local_group_view(padic3)
    times_p = EndoSpec.times_p()
    rng = random.Random(4)
    for x in view.sample(rng, 60):
        n = padic_steps(x.valuation(), 5)
        assert view.apply_endo(times_p, x, n).in_ball(5)
        if n > 0:
            assert not view.apply_endo(times_p, x, n - 1).in_ball(5)
    assert padic_steps(None, 5) == 0


def test_identity_map_does_not_contract(c5arc):
    verdict = check_pseudo_automorphism(c5arc, IDENTITY)
    assert verdict.failed
    assert verdict.data["failed"] == "contraction"
    assert verdict.data["morphism"] == "pass"


def test_non_morphism_is_reported_first(c5arc):
    verdict = check_pseudo_automorphism(c5arc, {0: 0, 1: 1, 4: 1})
    assert verdict.data["failed"] == "morphism"


def test_trivial_group_is_contractive():
    trivial = cyclic(1).as_local_group()
    assert check_pseudo_automorphism(trivial, {0: 0}).passed


def test_wrong_map_kinds_are_rejected(c5arc, interval):
    with pytest.raises(FormatError):
        check_pseudo_automorphism(interval, IDENTITY)
    with pytest.raises(FormatError):
        check_pseudo_automorphism(c5arc, EndoSpec.times_p())
    with pytest.raises(PreconditionError):
        check_pseudo_automorphism(c5arc, IDENTITY, PseudoAutoCheckConfig(U=[1, 4]))


# ==================== DEGENERACY ====================

def test_degeneracy_names_the_failed_hypothesis(c5arc):
    assert finite_contractive_degeneracy(c5arc, SWAP).data["failed"] == "contraction"
    assert finite_contractive_degeneracy(c5arc, {0: 0, 1: 1, 4: 1}).data["failed"] == "morphism"
    assert finite_contractive_degeneracy(c5arc, COLLAPSE).data["failed"] == "injective"


def test_no_small_degenerate_counterexample():
    verdict = search_degeneracy(5, 3)
    assert verdict.passed
    assert verdict.data["survivors"] == 0
    assert verdict.data["tables"] > 0


@pytest.mark.slow
def test_degeneracy_cross_check_over_four_element_tables():
    small = search_degeneracy(5, 3)
    verdict = search_degeneracy(5, 4)
    assert verdict.passed
    assert verdict.data["tables"] > small.data["tables"]


# ==================== LEMMAS ====================

def test_phi_preserves_eval_example(interval, halving):
    view = as_local_group_view(interval)
    w = [Fraction(1, 2), Fraction(7, 10), Fraction(-9, 10)]
    assert eval_some(view, w) == frozenset({Fraction(3, 10)})
    assert Fraction(3, 20) in eval_some(view, [x / 2 for x in w])
    assert phi_preserves_eval(interval, halving, w).passed


def test_phi_preserves_eval_on_sampled_words(interval, arc, padic3, halving):
    for spec, endo in ((interval, halving), (arc, EndoSpec.default_for(arc)), (padic3, EndoSpec.times_p())):
        view = as_local_group_view(spec)
        rng = random.Random(12)
        for _ in range(1000):
            w = view.sample(rng, rng.randint(1, 4))
            assert phi_preserves_eval(view, endo, w).passed


def test_phi_preserves_eval_on_finite_morphisms(c5arc):
    assert phi_preserves_eval(c5arc, SWAP, [1, 1, 4]).passed
    assert phi_preserves_eval(c5arc, COLLAPSE, [1, 4, 4]).passed


def test_contraction_gives_associativity(interval, padic3, halving):
    for spec, endo in ((interval, halving), (padic3, EndoSpec.times_p())):
        verdict = contractive_implies_assoc(spec, endo, max_len=5, samples=80, seed=3)
        assert verdict.passed
        assert verdict.data["replayed"] > 0


def test_contraction_precondition(c5arc):
    with pytest.raises(PreconditionError):
        contractive_implies_assoc(c5arc, IDENTITY)


# ==================== KERNEL TOWER ====================

def test_empty_word_is_in_the_kernel_tower(c5arc):
    rs = complete(present(c5arc))
    answer = kernel_tower_membership(c5arc, rs, IDENTITY, KernelTowerQuery(()))
    assert answer.answer is Membership.MEMBER
    assert answer.iterates == 0


def test_identity_map_has_trivial_kernel_tower(c5arc):
    presentation = present(c5arc)
    rs = complete(presentation)
    answer = kernel_tower_membership(c5arc, rs, IDENTITY, KernelTowerQuery(("1",) * 5), presentation)
    assert answer.answer is Membership.NON_MEMBER
    assert answer.normal_form == ("1",) * 5
    assert "automorphism" in answer.certificate
    for x in (1, 4):
        q = KernelTowerQuery(presentation.iota(x), depth=3)
        assert kernel_tower_membership(c5arc, rs, IDENTITY, q).answer is Membership.NON_MEMBER


def test_collapsing_map_kills_everything(c5arc):
    presentation = present(c5arc)
    rs = complete(presentation)
    phi_tilde = ExtendedEndomorphism(presentation, COLLAPSE)
    rng = random.Random(6)
    for _ in range(50):
        word = tuple(rng.choice(presentation.symbols) for _ in range(rng.randint(1, 6)))
        answer = kernel_tower_membership(c5arc, rs, COLLAPSE, KernelTowerQuery(word), presentation)
        assert answer.answer is Membership.MEMBER
        assert answer.iterates <= 1
        # phi~ maps the tower into itself
        image = kernel_tower_membership(c5arc, rs, COLLAPSE, KernelTowerQuery(phi_tilde(word)), presentation)
        assert image.answer is Membership.MEMBER
    assert answer.to_dict()["answer"] == "member"


def test_kernel_tower_preconditions(c5arc):
    rs = complete(present(c5arc))
    with pytest.raises(PreconditionError):
        KernelTowerQuery(("1",), depth=-1)
    with pytest.raises(IncompleteSystemError):
        kernel_tower_membership(c5arc, RewriteSystem(rs.symbols, rs.rules), IDENTITY, KernelTowerQuery(("1",)))
    with pytest.raises(MorphismError):
        kernel_tower_membership(c5arc, rs, {0: 0, 1: 1, 4: 1}, KernelTowerQuery(("1",)))


# ==================== SHRINKING ====================

@pytest.mark.parametrize("r", [1, 2, 3])
def test_padic_shrink_levels(padic3, r):
    result = shrink_neighborhood(padic3, EndoSpec.times_p(), BallSet.padic_ball(r), depth=r)
    for l in range(-r, r + 1):
        assert result.balls[l] == BallSet.padic_ball(max(0, r + l))
    assert result.U == BallSet.padic_ball(r)
    assert result.passed, {k: v.detail for k, v in result.properties.items() if not v.passed}


def test_interval_shrink_levels(interval, halving):
    result = shrink_neighborhood(interval, halving, BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2)), depth=4)
    for l in range(0, 5):
        assert result.balls[l] == BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2 ** (l + 1)))
    for l in range(-4, 0):
        assert result.balls[l] == BallSet.whole(interval)
    assert result.U == BallSet.open_ball(Family.INTERVAL, Fraction(1, 2))
    assert result.passed
    assert result.properties["cover"].data["level"] == -4
    assert result.to_dict()["passed"] is True


def test_product_shrink(product_spec):
    endo = EndoSpec.default_for(product_spec)
    result = shrink_neighborhood(product_spec, endo, default_V(product_spec), depth=3)
    assert result.passed
    assert result.U.left == BallSet.open_ball(Family.INTERVAL, Fraction(1, 2))
    assert result.U.right == BallSet.whole(InstanceSpec.padic(3, 0, 8))


def test_shrink_properties_are_checked_on_points(padic3, interval, halving):
    result = shrink_neighborhood(padic3, EndoSpec.times_p(), BallSet.padic_ball(2), depth=2)
    for name in ("symmetric", "U_symmetric", "U_injective"):
        assert result.properties[name].passed
        assert result.properties[name].certificate.value == "sampled"
    assert result.properties["U_injective"].data["points"] > 0

    result = shrink_neighborhood(interval, halving, BallSet.closed_ball(Family.INTERVAL, Fraction(1, 2)), depth=2)
    assert result.properties["U_injective"].data["points"] > 0


def test_one_sided_neighborhood_is_not_symmetric(interval):
    view = as_local_group_view(interval)
    one_sided = SimpleNamespace(contains=lambda x: x >= 0, describe=lambda: "[0, 1)")
    verdict = _check_symmetric(view, [one_sided], [Fraction(0), Fraction(1, 3)])
    assert verdict.failed
    assert verdict.witness == (Fraction(1, 3),)


def test_injectivity_is_read_off_the_kernel(interval, padic3, halving):
    view = as_local_group_view(interval)
    points = view.sample(random.Random(8), 50)
    assert check_injective(interval, halving, points).passed
    assert check_injective(padic3, EndoSpec.times_p(), as_local_group_view(padic3).sample(random.Random(8), 50)).passed
    # a map sending everything to the identity is caught on the first nonzero point
    collapse = SimpleNamespace(scale=Fraction(0))
    verdict = check_injective(interval, collapse, [Fraction(0), Fraction(1, 4)])
    assert verdict.failed
    assert verdict.witness == (Fraction(1, 4),)
    data = check_pseudo_automorphism(interval, halving, PseudoAutoCheckConfig(samples=30, seed=1)).data
    assert "trivial kernel" in data["injective"]


def test_shrink_rejects_bad_starting_balls(interval, halving):
    with pytest.raises(PreconditionError):
        shrink_neighborhood(interval, halving, BallSet.open_ball(Family.INTERVAL, Fraction(1, 2)))
    with pytest.raises(PreconditionError):
        shrink_neighborhood(interval, halving, BallSet.closed_ball(Family.INTERVAL, 1))
    with pytest.raises(FormatError):
        shrink_neighborhood(interval, halving, BallSet.padic_ball(1))


# ==================== PIPELINE ====================

def test_padic_pipeline(padic3):
    report = structure_pipeline(padic3, samples=60, seed=1, max_len=4)
    assert report.status is Status.PASS
    assert [s.stage for s in report.stages] == [
        "pseudo-automorphism", "shrink", "neatness", "associativity", "factorization",
    ]
    assert report.summary["L"] == "trivial"
    assert report.summary["P"] == "Z_3"


def test_interval_pipeline(interval):
    report = structure_pipeline(interval, samples=60, seed=1, max_len=4)
    assert report.summary == {"L": "R", "P": "trivial", "U": "(|x| < 1/2)"}
    factors = report.stage("factorization").verdict.data
    assert factors["L"][0]["dimension"] == 1


def test_product_pipeline(product_spec):
    report = structure_pipeline(product_spec, samples=60, seed=2, max_len=4)
    assert (report.summary["L"], report.summary["P"]) == ("R", "Z_3")
    assert "Status: pass" in report.render()


def test_pipeline_stops_at_the_first_unsettled_stage(interval, monkeypatch):
    monkeypatch.setattr(
        "src.contractive.pipeline.check_pseudo_automorphism",
        lambda *args, **kwargs: Verdict.undecided("budget exhausted"),
    )
    with pytest.raises(PipelineStageError) as info:
        structure_pipeline(interval, samples=10, seed=0)
    assert info.value.stage == "pseudo-automorphism"
    assert len(info.value.report.stages) == 1
    assert info.value.report.status is Status.UNKNOWN
    assert info.value.undecided


def test_report_rendering():
    report = Report("demo")
    report.add("first", Verdict.ok("fine"), ["a note"], size=3)
    report.add("second", Verdict.undecided("ran out"))
    assert report.status is Status.UNKNOWN
    text = report.render()
    assert text.startswith("=" * 50 + "\nDEMO\n")
    assert "[1] first: pass (exhaustive)" in text
    assert "    - a note" in text
    data = report.to_dict()
    assert data["stages"][0]["data"] == {"size": 3}
    assert report.to_json().endswith("}\n")
    report.add("third", Verdict.fail((1,)))
    assert report.status is Status.FAIL
    with pytest.raises(KeyError):
        report.stage("missing")

import random
from fractions import Fraction

import pytest

from src.core import cyclic, from_group_restriction
from src.core.local_group import read_json
from src.errors import CompletionLimitError, FormatError, IncompleteSystemError, MorphismError, PreconditionError
from src.globalization import (
    CircleGroup, MorphismSpec, RewriteSystem, check_local_equality, complete, extend_instance_morphism,
    extend_morphism, present, verify_iota,
)
from src.instances import as_local_group_view
from tests.conftest import fixture_path


def test_presentation_of_c5arc(c5arc):
    presentation = present(c5arc)
    assert presentation.symbols == ("1", "4")
    assert (("1", "4"), ()) in presentation.relations
    assert presentation.iota(0) == ()
    assert presentation.inverse_word(("1", "1")) == ("4", "4")


def test_formal_inverses_for_elements_outside_lambda(nonglobal5):
    presentation = present(nonglobal5)
    assert "x^-1" in presentation.symbols
    assert presentation.inverse_word(("x",)) == ("x^-1",)
    assert (("x", "x^-1"), ()) in presentation.relations


def test_c5arc_globalization(c5arc, z5):
    presentation = present(c5arc)
    rs = complete(presentation)
    assert rs.complete
    assert len(rs.rules) <= 4
    assert verify_iota(c5arc, rs, presentation).passed

    a5 = ("1",) * 5
    assert rs.normal_form(a5) != ()
    spec = MorphismSpec.from_dict(read_json(fixture_path("c5arc_to_z5.json")), source=c5arc)
    extension = extend_morphism(c5arc, spec, rs, presentation)
    assert extension.evaluate_normal_form(a5) == 0
    assert extension.in_kernel(a5)
    assert not extension.in_kernel(("1",))


def test_normal_forms_of_c5arc_are_powers(c5arc):
    rs = complete(present(c5arc))
    assert rs.normal_form(("1", "4", "4", "1", "1")) == ("1",)
    assert rs.normal_form(()) == ()
    assert rs.normal_forms(2) == [(), ("1",), ("4",), ("1", "1"), ("4", "4")]


def test_group_restriction_globalizes_to_its_group():
    H = cyclic(6)
    G = from_group_restriction(H, list(range(6)))
    rs = complete(present(G))
    # every word collapses to one of the six elements
    forms = {rs.normal_form(w) for w in rs.normal_forms(4)}
    assert len(forms) == 6
    assert verify_iota(G, rs).passed


def test_rewriting_system_round_trip(c5arc, tmp_path):
    rs = complete(present(c5arc))
    path = tmp_path / "rules.json"
    rs.dump(str(path))
    again = RewriteSystem.load(str(path))
    assert again.rules == rs.rules
    assert again.complete
    assert again.to_json() == path.read_text(encoding="utf-8")


def test_parse_and_render(c5arc):
    rs = complete(present(c5arc))
    assert rs.parse("1, 4 1") == ("1", "4", "1")
    assert rs.parse("ε") == ()
    assert rs.render(rs.encode(())) == "ε"
    with pytest.raises(FormatError):
        rs.parse("2")


def test_completion_limit_carries_partial_system(z12arc):
    with pytest.raises(CompletionLimitError) as info:
        complete(present(z12arc), max_rules=1)
    partial = info.value.partial
    assert not partial.complete
    with pytest.raises(IncompleteSystemError):
        partial.normal_form(("1",))
    partial.reduce(("1", "11"))


def test_rules_must_decrease():
    with pytest.raises(FormatError):
        RewriteSystem(("a",), [((0,), (0, 0))])


def test_critical_pairs_vanish_after_completion(z6arc):
    rs = complete(present(z6arc))
    assert rs.critical_pairs() == []


def test_local_equality(c5arc, z12arc):
    rs = complete(present(c5arc))
    assert check_local_equality(c5arc, [0], rs).passed
    with pytest.raises(PreconditionError):
        check_local_equality(c5arc, [0, 1, 4], rs)      # 1*1 leaves Omega
    with pytest.raises(PreconditionError):
        check_local_equality(c5arc, [1, 4], rs)
    rs12 = complete(present(z12arc))
    assert check_local_equality(z12arc, [0, 1, 11], rs12).passed


def test_bad_images_are_rejected(c5arc, z5):
    rs = complete(present(c5arc))
    with pytest.raises(MorphismError):
        extend_morphism(c5arc, MorphismSpec(z5, {0: 0, 1: 2, 4: 2}), rs)
    with pytest.raises(IncompleteSystemError):
        extend_morphism(c5arc, MorphismSpec(z5, {0: 0, 1: 1, 4: 4}), RewriteSystem(rs.symbols, rs.rules))


def test_extensions_from_equal_images_agree(c5arc, z5):
    presentation = present(c5arc)
    rs = complete(presentation)
    images = {0: 0, 1: 2, 4: 3}
    first = extend_morphism(c5arc, MorphismSpec(z5, dict(images)), rs, presentation)
    second = extend_morphism(c5arc, MorphismSpec(z5, dict(images)), rs, presentation)
    rng = random.Random(9)
    for _ in range(1000):
        word = tuple(rng.choice(presentation.symbols) for _ in range(rng.randint(0, 8)))
        form = rs.normal_form(word)
        assert first.evaluate(form) == second.evaluate(form)
        assert first.evaluate(word) == first.evaluate(form)


def test_arc_extension_to_the_circle(arc):
    view = as_local_group_view(arc)
    spec = MorphismSpec.from_dict(read_json(fixture_path("arc_to_circle.json")))
    assert isinstance(spec.target, CircleGroup)
    extension = extend_instance_morphism(view, spec.target, spec.image, samples=100, seed=3)
    fifths = [Fraction(1, 5)] * 5
    assert extension.evaluate(fifths) == 0
    assert extension.ambient(fifths) == 1
    assert extension.in_kernel(fifths)
    assert extension.replay_contractions(samples=50, seed=4, max_len=5).passed


def test_circle_group_arithmetic():
    T = CircleGroup()
    assert T.product(Fraction(3, 4), Fraction(1, 2)) == Fraction(1, 4)
    assert T.inverse(Fraction(1, 3)) == Fraction(2, 3)
    assert T.parse("-1/4") == Fraction(3, 4)

import json
import random

import pytest

from src.core import (
    FiniteGroup, FiniteLocalGroup, check_axioms, check_morphism, cyclic, dihedral, enumerate_local_groups,
    from_group_restriction, is_neat, is_symmetric, random_local_group, require_axioms, restrict,
    restrict_endomorphism, symmetrize,
)
from src.core.local_group import UNDEFINED
from src.errors import AxiomError, FormatError, GroupAxiomError, PreconditionError


def test_fixtures_are_local_groups(c5arc, z6arc, z12arc, nonglobal5):
    for G in (c5arc, z6arc, z12arc, nonglobal5):
        assert check_axioms(G).passed, G.name


def test_c5arc_tables(c5arc):
    assert c5arc.carrier == (0, 1, 4)
    assert c5arc.product(1, 4) == 0
    assert c5arc.product(1, 1) is None
    assert c5arc.inverse(4) == 1
    assert set(c5arc.lam()) == {0, 1, 4}
    assert (1, 4) in c5arc.omega()
    assert (4, 4) not in c5arc.omega()


def test_broken_associativity_is_reported():
    # x*x = y, x*y = e, y*x = x: (x x) x = y x = x but x (x x) = x y = e
    G = FiniteLocalGroup.from_tables(
        ["e", "x", "y"], "e",
        [("e", "e", "e"), ("e", "x", "x"), ("e", "y", "y"), ("x", "e", "x"), ("y", "e", "y"),
         ("x", "x", "y"), ("x", "y", "e"), ("y", "x", "x")],
        [("e", "e")],
    )
    report = check_axioms(G)
    assert not report.passed
    violation = report.violation("local-associativity")
    assert violation is not None
    assert violation.witness == ("x", "x", "x")
    with pytest.raises(AxiomError):
        require_axioms(G)


def test_missing_identity_row_is_reported():
    G = FiniteLocalGroup.from_tables(["e", "a"], "e", [("e", "e", "e"), ("a", "e", "a")])
    assert check_axioms(G).violation("identity-law").witness == ("a",)


def test_malformed_tables_raise_format_error():
    with pytest.raises(FormatError):
        FiniteLocalGroup.from_tables(["e"], "z", [])
    with pytest.raises(FormatError):
        FiniteLocalGroup.from_tables(["e", "a"], "e", [("e", "a", "q")])
    with pytest.raises(FormatError):
        FiniteLocalGroup.from_dict({"carrier": [0, 0], "identity": 0})


def test_local_group_json_round_trip(c5arc, tmp_path):
    text = c5arc.to_json()
    path = tmp_path / "g.json"
    path.write_text(text, encoding="utf-8")
    again = FiniteLocalGroup.from_dict(json.loads(path.read_text(encoding="utf-8")))
    assert again == c5arc
    assert again.to_json() == text


def test_cyclic_and_dihedral_groups():
    Z6 = cyclic(6)
    assert Z6.identity == 0
    assert Z6.inverse(2) == 4
    assert Z6.power(5, 3) == 3
    D4 = dihedral(4)
    assert len(D4.elements) == 8
    assert D4.product("s1", "s1") == "r0"
    assert D4.product("r1", "s0") != D4.product("s0", "r1")
    assert D4.generated_subgroup(["r1"]) == frozenset({"r0", "r1", "r2", "r3"})


def test_non_group_table_is_rejected():
    with pytest.raises(GroupAxiomError):
        FiniteGroup.from_function([0, 1, 2], lambda a, b: max(a, b))


def test_symmetrize_and_restrict():
    Z5 = cyclic(5).as_local_group()
    assert symmetrize(Z5, [0, 1, 2]) == frozenset({0})
    assert symmetrize(Z5, [0, 1, 4]) == frozenset({0, 1, 4})
    assert is_symmetric(Z5, [0, 2, 3])
    G = restrict(Z5, [0, 1, 4])
    assert G.product(1, 4) == 0
    assert G.product(1, 1) is None
    with pytest.raises(PreconditionError):
        restrict(Z5, [1, 4])


def test_symmetrize_is_idempotent_and_monotone(c5arc, nonglobal5):
    rng = random.Random(21)
    for G in (cyclic(12).as_local_group(), dihedral(4).as_local_group(), c5arc, nonglobal5):
        carrier = list(G.carrier)
        for _ in range(40):
            X = set(rng.sample(carrier, rng.randint(0, len(carrier))))
            Y = X | set(rng.sample(carrier, rng.randint(0, len(carrier))))
            S = symmetrize(G, X)
            assert symmetrize(G, S) == S
            assert is_symmetric(G, S)
            assert S <= symmetrize(G, Y)


def test_restricting_twice_is_restricting_once():
    rng = random.Random(22)
    for G in (cyclic(12).as_local_group(), dihedral(4).as_local_group()):
        for _ in range(20):
            U = {G.identity} | set(rng.sample(list(G.carrier), 6))
            V = {G.identity} | set(rng.sample(sorted(U, key=str), 3))
            assert restrict(restrict(G, U), V) == restrict(G, V)


def test_restriction_matches_fixture(c5arc):
    G = from_group_restriction(cyclic(5), [0, 1, 4])
    assert G == c5arc
    assert G.ambient is not None


def test_neatness(c5arc, nonglobal5):
    assert is_neat(c5arc).passed
    verdict = is_neat(nonglobal5)
    assert verdict.failed
    assert verdict.data["reason"] == "lambda"


def test_restrict_endomorphism(c5arc):
    swap = {0: 0, 1: 4, 4: 1}
    G, phi = restrict_endomorphism(c5arc, swap, [0, 1, 4, 4])
    assert phi == swap
    with pytest.raises(PreconditionError):
        restrict_endomorphism(cyclic(6).as_local_group(), {x: (2 * x) % 6 for x in range(6)}, [0, 1, 5])


def test_inclusion_is_a_morphism(c5arc, z5):
    assert check_morphism(c5arc, z5, {x: x for x in c5arc.carrier}) == []


def test_morphism_violations_name_the_law(c5arc, z5):
    violations = check_morphism(c5arc, z5, {0: 0, 1: 1, 4: 1})
    laws = {v.axiom for v in violations}
    assert "morphism-product" in laws
    assert "morphism-inverse" in laws


def test_enumeration_sizes():
    assert len(list(enumerate_local_groups(1))) == 1
    groups = list(enumerate_local_groups(2))
    assert groups
    assert all(check_axioms(G).passed for G in groups)
    # the group Z/2 appears with its full table
    assert any(G.product(1, 1) == 0 and G.inverse(1) == 1 for G in groups)
    # and the discrete local group with nothing defined off the identity
    assert any(G.product_table[1][1] == UNDEFINED and G.inverse_table[1] == UNDEFINED for G in groups)


def test_random_tables_pass_axioms_when_returned():
    rng = random.Random(3)
    drawn = [random_local_group(4, rng, 0.4) for _ in range(200)]
    kept = [G for G in drawn if G is not None]
    assert kept
    assert all(check_axioms(G).passed for G in kept)

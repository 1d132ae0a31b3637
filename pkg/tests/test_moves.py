import json
import random

import pytest

from src.errors import FormatError, InapplicableMoveError, NeatnessError
from src.globalization import complete, present
from src.moves import (
    Answer, Move, MoveKind, MoveTrace, apply_move, commutation_bound, commute_step, enumerate_moves,
    equivalent_bounded, make_special,
)
from tests.conftest import fixture_path


def test_contractions(c5arc):
    assert apply_move(c5arc, (1, 4, 1), Move.contract_i(1)) == (0, 1)
    assert apply_move(c5arc, (1, 4, 1), Move.contract_ii(2)) == (1,)
    with pytest.raises(InapplicableMoveError) as info:
        apply_move(c5arc, (1, 1), Move.contract_i(1))
    assert "Omega" in info.value.condition


def test_expansions(c5arc):
    assert apply_move(c5arc, (0,), Move.expand_i(1, 1, 4)) == (1, 4)
    assert apply_move(c5arc, (1,), Move.expand_ii(0, 4)) == (4, 1, 1)
    assert apply_move(c5arc, (), Move.expand_ii(0, 1)) == (1, 4)
    with pytest.raises(InapplicableMoveError):
        apply_move(c5arc, (1,), Move.expand_i(1, 1, 4))
    with pytest.raises(InapplicableMoveError):
        apply_move(c5arc, (1,), Move.contract_i(1))


def test_moves_keep_nonglobal_values(nonglobal5):
    # x x x x ~> e and ~> v; contracting the middle pair keeps only one of them
    assert apply_move(nonglobal5, ("x", "x", "x", "x"), Move.contract_i(2)) == ("x", "y", "x")
    with pytest.raises(InapplicableMoveError):
        apply_move(nonglobal5, ("x", "x"), Move.contract_ii(1))


def test_move_parameters_are_checked():
    with pytest.raises(FormatError):
        Move(MoveKind.EXPAND_I, 1, (1,))
    assert Move.from_dict({"kind": "expand-II", "position": 0, "params": [4]}) == Move.expand_ii(0, 4)


def test_enumerate_moves_splits_over_omega(c5arc):
    moves = dict((str(m), w) for m, w in enumerate_moves(c5arc, (0,)))
    assert moves["expand-I@1 [1, 4]"] == (1, 4)
    assert moves["expand-I@1 [4, 1]"] == (4, 1)
    with_alphabet = [m for m, _ in enumerate_moves(c5arc, (0,), expand_alphabet=[1])]
    assert Move.expand_ii(0, 1) in with_alphabet
    assert Move.expand_ii(1, 1) in with_alphabet


def test_trace_fixture_replays(c5arc):
    with open(fixture_path("c5arc_trace.json"), encoding="utf-8") as f:
        trace = MoveTrace.from_dict(json.load(f), c5arc)
    assert trace.words == ((1, 4), (0,), (4, 1))
    assert not trace.is_special()
    trace.validate(c5arc)
    assert MoveTrace.from_dict(json.loads(trace.to_json()), c5arc) == trace


def test_commute_step_overlap(c5arc):
    x = (1, 4)
    swapped = commute_step(c5arc, x, Move.contract_i(1), Move.expand_i(1, 4, 1))
    assert swapped.start == x
    assert swapped.end == (4, 1)
    assert swapped.is_special()
    assert [m.kind for m in swapped.moves] == [MoveKind.EXPAND_I, MoveKind.EXPAND_I, MoveKind.CONTRACT_II]


def test_commute_step_disjoint(c5arc):
    x = (1, 4, 1)
    swapped = commute_step(c5arc, x, Move.contract_i(1), Move.expand_ii(2, 4))
    assert swapped.end == apply_move(c5arc, apply_move(c5arc, x, Move.contract_i(1)), Move.expand_ii(2, 4))
    assert len(swapped) == 2
    assert swapped.is_special()


def test_commute_step_needs_inverses(nonglobal5):
    with pytest.raises(NeatnessError):
        commute_step(nonglobal5, ("x", "x"), Move.contract_i(1), Move.expand_i(1, "x", "x"))


def test_make_special_on_fixture(c5arc):
    trace = MoveTrace.replay(c5arc, (1, 4), [Move.contract_i(1), Move.expand_i(1, 4, 1)])
    special, steps = make_special(c5arc, trace)
    assert special.is_special()
    assert (special.start, special.end) == (trace.start, trace.end)
    assert steps <= commutation_bound(1, 1)
    special.validate(c5arc)


def _random_critical_trace(G, rng, contractions, expansions):
    """A trace of contractions followed by expansions, drawn at random."""
    word = tuple(rng.choice(G.carrier) for _ in range(contractions + 2))
    moves = []
    current = word
    for kinds, count in ((True, contractions), (False, expansions)):
        for _ in range(count):
            options = [(m, w) for m, w in enumerate_moves(G, current, G.carrier)
                       if m.is_contraction == kinds and len(w) <= 8]
            if not options:
                break
            move, current = rng.choice(options)
            moves.append(move)
    return MoveTrace.replay(G, word, moves)


def test_commutation_bound_on_critical_traces(c5arc, z6arc, z12arc):
    rng = random.Random(17)
    checked = 0
    for G in (c5arc, z6arc, z12arc):
        for _ in range(40):
            trace = _random_critical_trace(G, rng, rng.randint(1, 4), rng.randint(1, 3))
            m = sum(1 for mv in trace.moves if mv.is_contraction)
            special, steps = make_special(G, trace)
            assert special.is_special()
            assert (special.start, special.end) == (trace.start, trace.end)
            assert steps <= commutation_bound(m, len(trace) - m)
            checked += 1
    assert checked == 120


def test_commutation_bound_values():
    assert commutation_bound(0, 3) == 3
    assert commutation_bound(2, 1) == 7


def test_equivalent_bounded(c5arc):
    found = equivalent_bounded(c5arc, (1, 4), (0,))
    assert found.answer is Answer.YES
    assert found.trace.start == (1, 4) and found.trace.end == (0,)
    assert equivalent_bounded(c5arc, (1,), (1,)).answer is Answer.YES


def test_equivalent_bounded_no_and_unknown(c5arc):
    # every word reachable from (1,) within the bounds is visited
    exhausted = equivalent_bounded(c5arc, (1,), (4,), max_word_len=2, max_steps=30)
    assert exhausted.answer is Answer.NO
    cut = equivalent_bounded(c5arc, (1,), (4,), max_word_len=4, max_steps=1)
    assert cut.answer is Answer.UNKNOWN


def test_yes_traces_agree_with_normal_forms(c5arc, z6arc):
    rng = random.Random(8)
    for G in (c5arc, z6arc):
        presentation = present(G)
        rs = complete(presentation)
        for _ in range(250):
            x = tuple(rng.choice(G.carrier) for _ in range(rng.randint(0, 3)))
            y = tuple(rng.choice(G.carrier) for _ in range(rng.randint(0, 3)))
            found = equivalent_bounded(G, x, y, max_word_len=4, max_steps=3)
            if found.answer is Answer.YES:
                found.trace.validate(G)
                assert rs.equal(presentation.word_of(x), presentation.word_of(y)), (x, y)

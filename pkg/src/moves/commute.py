"""
Moving contractions past expansions.

commute_step turns "contract, then expand" into "expand (once or twice),
then contract once" with the same endpoints. make_special applies it to
the last such pair until every expansion precedes every contraction.

Position bookkeeping, with c acting at i on x and e acting at j on
y = c(x):

    c = contract-I (y has x_i x_{i+1} at i)
        expand-I   j == i   u, v construction (below)
                   j <  i   expand x at j,    contract-I at i+1
                   j >  i   expand x at j+1,  contract-I at i
        expand-II  j <= i-1 insert at gap j,  contract-I at i+2
                   j >= i   insert at gap j+1, contract-I at i
    c = contract-II (y lost x_i, x_{i+1})
        expand-I   j <  i   expand x at j,    contract-II at i+1
                   j >= i   expand x at j+2,  contract-II at i
        expand-II  j <= i-1 insert at gap j,  contract-II at i+2
                   j >= i   insert at gap j+2, contract-II at i

u, v construction for e = expand-I at i with ab = x_i x_{i+1}:
    u = x with x_i expanded to (ab, x_{i+1}^-1)
    v = u with ab expanded to (a, b)
    z = v with (x_{i+1}^-1, x_{i+1}) removed by contract-II at i+2
The first step needs (ab, x_{i+1}^-1) in Omega, which neatness guarantees.
"""

from typing import Any, List, Sequence, Tuple

from src.core.local_group import LocalGroupView
from src.errors import FormatError, NeatnessError, ResourceLimitError
from src.logging_config import get_logger
from src.moves.move import Move, MoveKind, apply_move
from src.moves.trace import MoveTrace

logger = get_logger("moves.commute")


def commute_step(G: LocalGroupView, x: Sequence[Any], c: Move, e: Move) -> MoveTrace:
    """Trace from x to e(c(x)) made of expansions followed by one contraction."""
    if not c.is_contraction or e.is_contraction:
        raise FormatError("commute_step takes a contraction followed by an expansion")
    x = tuple(x)
    y = apply_move(G, x, c)
    z = apply_move(G, y, e)
    i, j = c.position, e.position

    if c.kind is MoveKind.CONTRACT_I:
        if e.kind is MoveKind.EXPAND_I:
            if j == i:
                moves = _overlap(G, x, i, e)
            elif j < i:
                moves = [e, Move.contract_i(i + 1)]
            else:
                moves = [Move(e.kind, j + 1, e.params), Move.contract_i(i)]
        elif j <= i - 1:
            moves = [e, Move.contract_i(i + 2)]
        else:
            moves = [Move(e.kind, j + 1, e.params), Move.contract_i(i)]
    else:
        if e.kind is MoveKind.EXPAND_I:
            if j < i:
                moves = [e, Move.contract_ii(i + 1)]
            else:
                moves = [Move(e.kind, j + 2, e.params), Move.contract_ii(i)]
        elif j <= i - 1:
            moves = [e, Move.contract_ii(i + 2)]
        else:
            moves = [Move(e.kind, j + 2, e.params), Move.contract_ii(i)]

    trace = MoveTrace.replay(G, x, moves)
    if trace.end != z:
        raise FormatError(f"commutation of {c} and {e} ends at {list(trace.end)}, expected {list(z)}")
    return trace


def _overlap(G: LocalGroupView, x: Tuple[Any, ...], i: int, e: Move) -> List[Move]:
    a, b = e.params
    ab = G.product(a, b)
    right = x[i]
    right_inv = G.inverse(right)
    if right_inv is None:
        raise NeatnessError(f"{right!r} has no inverse; the overlapping commutation needs Lambda = carrier")
    if G.product(ab, right_inv) is None:
        raise NeatnessError(f"({ab!r}, {right_inv!r}) not in Omega; the overlapping commutation needs neatness")
    return [Move.expand_i(i, ab, right_inv), Move.expand_i(i, a, b), Move.contract_ii(i + 2)]


def _last_inversion(moves: Sequence[Move]) -> int:
    """Largest k with a contraction at k followed by an expansion at k+1; -1 if special."""
    for k in range(len(moves) - 2, -1, -1):
        if moves[k].is_contraction and not moves[k + 1].is_contraction:
            return k
    return -1


def make_special(G: LocalGroupView, trace: MoveTrace, max_commutes: int = 100000) -> Tuple[MoveTrace, int]:
    """
    Same endpoints, all expansions first. Returns the trace and the number
    of commute_step calls, always resolving the last contraction that is
    followed by an expansion.
    """
    words = list(trace.words)
    moves = list(trace.moves)
    steps = 0
    while True:
        k = _last_inversion(moves)
        if k < 0:
            break
        if steps >= max_commutes:
            raise ResourceLimitError(f"make_special gave up after {steps} commutations")
        swapped = commute_step(G, words[k], moves[k], moves[k + 1])
        moves[k:k + 2] = list(swapped.moves)
        words[k:k + 3] = list(swapped.words)
        steps += 1

    result = MoveTrace(tuple(words), tuple(moves))
    if result.start != trace.start or result.end != trace.end:
        raise FormatError("normalization changed the trace endpoints")
    logger.debug(f"Special form after {steps} commutations", extra={"steps": steps})
    return result, steps


def commutation_bound(contractions: int, expansions: int) -> int:
    """Commutation budget (2^(c+1) - 1) * e for c contractions followed by e expansions."""
    return (2 ** (contractions + 1) - 1) * expansions

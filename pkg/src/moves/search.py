"""
Bounded breadth-first search for admissible sequences between two words.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from src.config import get_config
from src.core.local_group import LocalGroupView
from src.errors import PreconditionError
from src.logging_config import get_logger
from src.moves.move import Move, Word, enumerate_moves
from src.moves.trace import MoveTrace

logger = get_logger("moves.search")


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Equivalence:
    answer: Answer
    trace: Optional[MoveTrace] = None
    visited: int = 0


def equivalent_bounded(
    G: LocalGroupView,
    x: Sequence[Any],
    y: Sequence[Any],
    max_word_len: Optional[int] = None,
    max_steps: Optional[int] = None,
    alphabet: Optional[Iterable[Any]] = None,
) -> Equivalence:
    """
    Search the move graph from x for y, never leaving words of length
    <= max_word_len and never taking more than max_steps moves.

    "no" means every word reachable inside those bounds was visited and
    none was y. The expansion alphabet defaults to the whole carrier for
    finite local groups and to nothing for instances.
    """
    config = get_config()
    max_word_len = config.bfs_max_word_len if max_word_len is None else max_word_len
    max_steps = config.bfs_max_steps if max_steps is None else max_steps
    if max_word_len < 0 or max_steps < 0:
        raise PreconditionError("search bounds must be >= 0")
    if alphabet is None:
        alphabet = list(G.carrier) if G.is_finite else []
    alphabet = list(alphabet)

    start, goal = tuple(x), tuple(y)
    if start == goal:
        return Equivalence(Answer.YES, MoveTrace.trivial(start), 1)
    if len(start) > max_word_len:
        return Equivalence(Answer.UNKNOWN, None, 0)

    parent: Dict[Word, Tuple[Word, Move]] = {start: None}
    frontier = deque([start])
    depth = 0
    while frontier and depth < max_steps:
        depth += 1
        next_frontier = deque()
        for word in frontier:
            for move, result in enumerate_moves(G, word, alphabet):
                if len(result) > max_word_len or result in parent:
                    continue
                parent[result] = (word, move)
                if result == goal:
                    trace = _rebuild(G, parent, start, goal)
                    logger.debug(f"Equivalent after {len(trace)} moves", extra={"steps": len(trace)})
                    return Equivalence(Answer.YES, trace, len(parent))
                next_frontier.append(result)
        frontier = next_frontier

    answer = Answer.UNKNOWN if frontier else Answer.NO
    return Equivalence(answer, None, len(parent))


def _rebuild(G: LocalGroupView, parent: Dict, start: Word, goal: Word) -> MoveTrace:
    moves = []
    word = goal
    while word != start:
        word, move = parent[word]
        moves.append(move)
    return MoveTrace.replay(G, start, list(reversed(moves)))

"""
Admissible sequences of words as replayable move traces.
"""

import json
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.core.local_group import LocalGroupView
from src.errors import FormatError
from src.moves.move import Move, Word, apply_move


@dataclass(frozen=True)
class MoveTrace:
    """Words w_1..w_N and the N-1 moves linking them."""
    words: Tuple[Word, ...]
    moves: Tuple[Move, ...]

    def __post_init__(self):
        if not self.words:
            raise FormatError("a trace has at least one word")
        if len(self.moves) != len(self.words) - 1:
            raise FormatError(f"{len(self.words)} words need {len(self.words) - 1} moves, got {len(self.moves)}")

    @classmethod
    def replay(cls, G: LocalGroupView, start: Sequence[Any], moves: Sequence[Move]) -> "MoveTrace":
        """Apply the moves in order; raises InapplicableMoveError on the first bad step."""
        words = [tuple(start)]
        for move in moves:
            words.append(apply_move(G, words[-1], move))
        return cls(tuple(words), tuple(moves))

    @classmethod
    def trivial(cls, w: Sequence[Any]) -> "MoveTrace":
        return cls((tuple(w),), ())

    @property
    def start(self) -> Word:
        return self.words[0]

    @property
    def end(self) -> Word:
        return self.words[-1]

    def __len__(self) -> int:
        return len(self.moves)

    def validate(self, G: LocalGroupView) -> None:
        """Every recorded word must be what its move produces."""
        for k, move in enumerate(self.moves):
            produced = apply_move(G, self.words[k], move)
            if produced != self.words[k + 1]:
                raise FormatError(f"step {k + 1} ({move}) yields {list(produced)}, trace records {list(self.words[k + 1])}")

    def is_special(self) -> bool:
        """All expansions precede all contractions."""
        seen_contraction = False
        for move in self.moves:
            if move.is_contraction:
                seen_contraction = True
            elif seen_contraction:
                return False
        return True

    def then(self, other: "MoveTrace") -> "MoveTrace":
        if other.start != self.end:
            raise FormatError("traces do not meet")
        return MoveTrace(self.words + other.words[1:], self.moves + other.moves)

    # ==================== SERIALIZATION ====================

    def to_dict(self, encode: Optional[Callable[[Any], Any]] = None) -> Dict[str, Any]:
        enc = encode or (lambda x: x)
        return {
            "start": [enc(x) for x in self.start],
            "moves": [m.to_dict(enc) for m in self.moves],
        }

    def to_json(self, encode: Optional[Callable[[Any], Any]] = None) -> str:
        data = self.to_dict(encode)
        lines = ["{", f'  "start": {json.dumps(data["start"])},']
        if data["moves"]:
            lines.append('  "moves": [')
            rows = [json.dumps(m) for m in data["moves"]]
            lines.extend(f"    {row}," for row in rows[:-1])
            lines.append(f"    {rows[-1]}")
            lines.append("  ]")
        else:
            lines.append('  "moves": []')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: Dict[str, Any], G: LocalGroupView,
                  parse: Optional[Callable[[Any], Any]] = None) -> "MoveTrace":
        dec = parse or (lambda x: x)
        try:
            start = [dec(x) for x in data["start"]]
            moves: List[Move] = [Move.from_dict(m, dec) for m in data.get("moves", [])]
        except (KeyError, TypeError) as e:
            raise FormatError(f"Malformed trace: {e}") from None
        return cls.replay(G, start, moves)

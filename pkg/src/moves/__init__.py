# Word move module
from src.moves.move import Move, MoveKind, apply_move, enumerate_moves
from src.moves.trace import MoveTrace
from src.moves.commute import commute_step, make_special, commutation_bound
from src.moves.search import Answer, Equivalence, equivalent_bounded

__all__ = [
    "Move", "MoveKind", "apply_move", "enumerate_moves",
    "MoveTrace",
    "commute_step", "make_special", "commutation_bound",
    "Answer", "Equivalence", "equivalent_bounded",
]

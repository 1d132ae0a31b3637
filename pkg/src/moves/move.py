"""
Contractions and expansions of words.

Positions are 1-based, matching the usual x_1..x_m notation:

    contract-I  at i   (x_i, x_{i+1}) in Omega         -> x_i x_{i+1}        1 <= i <= m-1
    contract-II at i   x_{i+1} = x_i^-1, x_i in Lambda -> pair removed       1 <= i <= m-1
    expand-I    at i   (a, b) in Omega with ab = x_i   -> x_i replaced by a, b   1 <= i <= m
    expand-II   at i   a in Lambda                     -> a, a^-1 inserted after x_i   0 <= i <= m
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from src.core.local_group import LocalGroupView
from src.errors import FormatError, InapplicableMoveError

Word = Tuple[Any, ...]


class MoveKind(str, Enum):
    CONTRACT_I = "contract-I"
    CONTRACT_II = "contract-II"
    EXPAND_I = "expand-I"
    EXPAND_II = "expand-II"

    @property
    def is_contraction(self) -> bool:
        return self in (MoveKind.CONTRACT_I, MoveKind.CONTRACT_II)

    @property
    def is_expansion(self) -> bool:
        return not self.is_contraction


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    position: int
    params: Tuple[Any, ...] = ()

    def __post_init__(self):
        expected = {MoveKind.EXPAND_I: 2, MoveKind.EXPAND_II: 1}.get(self.kind, 0)
        if len(self.params) != expected:
            raise FormatError(f"{self.kind.value} takes {expected} parameters, got {len(self.params)}")

    @classmethod
    def contract_i(cls, i: int) -> "Move":
        return cls(MoveKind.CONTRACT_I, i)

    @classmethod
    def contract_ii(cls, i: int) -> "Move":
        return cls(MoveKind.CONTRACT_II, i)

    @classmethod
    def expand_i(cls, i: int, a: Any, b: Any) -> "Move":
        return cls(MoveKind.EXPAND_I, i, (a, b))

    @classmethod
    def expand_ii(cls, i: int, a: Any) -> "Move":
        return cls(MoveKind.EXPAND_II, i, (a,))

    @property
    def is_contraction(self) -> bool:
        return self.kind.is_contraction

    def to_dict(self, encode=None) -> dict:
        enc = encode or (lambda x: x)
        return {"kind": self.kind.value, "position": self.position, "params": [enc(p) for p in self.params]}

    @classmethod
    def from_dict(cls, data: dict, parse=None) -> "Move":
        dec = parse or (lambda x: x)
        try:
            return cls(MoveKind(data["kind"]), int(data["position"]), tuple(dec(p) for p in data.get("params", [])))
        except (KeyError, ValueError, TypeError) as e:
            raise FormatError(f"Malformed move {data!r}: {e}") from None

    def __str__(self) -> str:
        params = f" {list(self.params)}" if self.params else ""
        return f"{self.kind.value}@{self.position}{params}"


def _fail(move: Move, condition: str) -> InapplicableMoveError:
    return InapplicableMoveError(f"{move} not applicable: {condition}", condition)


def apply_move(G: LocalGroupView, w: Sequence[Any], move: Move) -> Word:
    w = tuple(w)
    m = len(w)
    i = move.position
    kind = move.kind

    if kind.is_contraction:
        if not 1 <= i <= m - 1:
            raise _fail(move, f"position must lie in 1..{m - 1}")
        x, y = w[i - 1], w[i]
        if kind is MoveKind.CONTRACT_I:
            xy = G.product(x, y)
            if xy is None:
                raise _fail(move, f"({x!r}, {y!r}) not in Omega")
            return w[:i - 1] + (xy,) + w[i + 1:]
        x_inv = G.inverse(x)
        if x_inv is None:
            raise _fail(move, f"{x!r} not in Lambda")
        if y != x_inv:
            raise _fail(move, f"{y!r} is not the inverse of {x!r}")
        return w[:i - 1] + w[i + 1:]

    if kind is MoveKind.EXPAND_I:
        if not 1 <= i <= m:
            raise _fail(move, f"position must lie in 1..{m}")
        a, b = move.params
        for z in (a, b):
            if not G.contains(z):
                raise _fail(move, f"{z!r} not in the carrier")
        ab = G.product(a, b)
        if ab is None:
            raise _fail(move, f"({a!r}, {b!r}) not in Omega")
        if ab != w[i - 1]:
            raise _fail(move, f"{a!r}*{b!r} = {ab!r} differs from {w[i - 1]!r}")
        return w[:i - 1] + (a, b) + w[i:]

    if not 0 <= i <= m:
        raise _fail(move, f"gap must lie in 0..{m}")
    (a,) = move.params
    if not G.contains(a):
        raise _fail(move, f"{a!r} not in the carrier")
    a_inv = G.inverse(a)
    if a_inv is None:
        raise _fail(move, f"{a!r} not in Lambda")
    return w[:i] + (a, a_inv) + w[i:]


def enumerate_moves(
    G: LocalGroupView,
    w: Sequence[Any],
    expand_alphabet: Iterable[Any] = (),
    full_omega: Optional[bool] = None,
) -> List[Tuple[Move, Word]]:
    """
    Every applicable move with its result, in a fixed order: contract-I,
    contract-II, expand-I, expand-II, each by position then parameters.

    expand-I splits range over all of Omega when ``full_omega`` (the
    default for finite local groups); otherwise over a in the alphabet
    with b = a^-1 x_i.
    """
    w = tuple(w)
    m = len(w)
    alphabet = list(dict.fromkeys(expand_alphabet))
    if full_omega is None:
        full_omega = G.is_finite
    moves: List[Tuple[Move, Word]] = []

    for i in range(1, m):
        xy = G.product(w[i - 1], w[i])
        if xy is not None:
            moves.append((Move.contract_i(i), w[:i - 1] + (xy,) + w[i + 1:]))
    for i in range(1, m):
        x_inv = G.inverse(w[i - 1])
        if x_inv is not None and w[i] == x_inv:
            moves.append((Move.contract_ii(i), w[:i - 1] + w[i + 1:]))

    splits = list(G.omega()) if full_omega else None
    for i in range(1, m + 1):
        target = w[i - 1]
        if splits is not None:
            pairs = [(a, b) for a, b in splits if G.product(a, b) == target]
        else:
            pairs = []
            for a in alphabet:
                a_inv = G.inverse(a)
                b = None if a_inv is None else G.product(a_inv, target)
                if b is not None and G.product(a, b) == target:
                    pairs.append((a, b))
        for a, b in pairs:
            moves.append((Move.expand_i(i, a, b), w[:i - 1] + (a, b) + w[i:]))

    for i in range(0, m + 1):
        for a in alphabet:
            a_inv = G.inverse(a)
            if a_inv is not None:
                moves.append((Move.expand_ii(i, a), w[:i] + (a, a_inv) + w[i:]))
    return moves

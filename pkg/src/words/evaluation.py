"""
Bracketing evaluation of words.

eval_some(G, w): every value some full bracketing of w produces.
eval_all(G, w):  the value every bracketing produces, when each split
                 of every subword succeeds with a common value.

Both are interval dynamic programs over the subwords w[i..j]; splits are
explored left to right.
"""

from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.core.local_group import UNDEFINED, FiniteLocalGroup, LocalGroupView
from src.errors import FormatError

Word = Tuple[Any, ...]


def _check_word(G: LocalGroupView, w: Sequence[Any]) -> None:
    for position, x in enumerate(w, start=1):
        if not G.contains(x):
            raise FormatError(f"word entry {position} ({x!r}) is not in the carrier")


def eval_some(G: LocalGroupView, w: Sequence[Any]) -> FrozenSet[Any]:
    """{b : w ~> b}; the empty word has the single value identity."""
    _check_word(G, w)
    if not w:
        return frozenset({G.identity})
    if isinstance(G, FiniteLocalGroup):
        indices = [G.index(x) for x in w]
        return frozenset(G.carrier[k] for k in _some_indices(G.product_table, indices))

    n = len(w)
    V: Dict[Tuple[int, int], set] = {(i, i): {w[i]} for i in range(n)}
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            values = set()
            for k in range(i, j):
                for a in V[(i, k)]:
                    for b in V[(k + 1, j)]:
                        c = G.product(a, b)
                        if c is not None:
                            values.add(c)
            V[(i, j)] = values
    return frozenset(V[(0, n - 1)])


def _some_indices(table, indices: Sequence[int]) -> set:
    columns: List[List[set]] = []
    for letter in indices:
        extend_column(table, columns, letter)
    return columns[-1][0]


def extend_column(table, columns: List[List[set]], letter: int) -> None:
    """
    Append one letter to an index word whose DP columns are known.

    ``columns[j][i]`` is the value set of the subword i..j. Only the new
    column is computed, bottom-up in i.
    """
    n = len(columns)
    column: List[Optional[set]] = [None] * (n + 1)
    column[n] = {letter}
    for i in range(n - 1, -1, -1):
        values = set()
        for k in range(i, n):
            left = columns[k][i]
            right = column[k + 1]
            if not left or not right:
                continue
            for a in left:
                row = table[a]
                for b in right:
                    c = row[b]
                    if c != UNDEFINED:
                        values.add(c)
        column[i] = values
    columns.append(column)


def eval_all(G: LocalGroupView, w: Sequence[Any]) -> Optional[Any]:
    """The b with w -> b, or None when some split of some subword fails."""
    _check_word(G, w)
    if not w:
        return G.identity
    n = len(w)
    A: Dict[Tuple[int, int], Optional[Any]] = {(i, i): w[i] for i in range(n)}
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            value = None
            for k in range(i, j):
                a, b = A[(i, k)], A[(k + 1, j)]
                c = None if a is None or b is None else G.product(a, b)
                if c is None or (value is not None and c != value):
                    value = None
                    break
                value = c
            A[(i, j)] = value
    return A[(0, n - 1)]

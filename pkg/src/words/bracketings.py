"""
Brute-force bracketing oracle.

Enumerates every full binary bracketing of a word (Catalan many) and
evaluates each one directly. Exponential; only for cross-checking
eval_some on short words.
"""

from functools import lru_cache
from typing import Any, FrozenSet, Optional, Sequence, Tuple, Union

from src.core.local_group import LocalGroupView

Tree = Union[int, Tuple["Tree", "Tree"]]


@lru_cache(maxsize=None)
def bracketings(i: int, j: int) -> Tuple[Tree, ...]:
    """All binary trees whose leaves are positions i..j in order."""
    if i == j:
        return (i,)
    trees = []
    for k in range(i, j):
        for left in bracketings(i, k):
            for right in bracketings(k + 1, j):
                trees.append((left, right))
    return tuple(trees)


def evaluate_tree(G: LocalGroupView, w: Sequence[Any], tree: Tree) -> Optional[Any]:
    if isinstance(tree, int):
        return w[tree]
    a = evaluate_tree(G, w, tree[0])
    if a is None:
        return None
    b = evaluate_tree(G, w, tree[1])
    if b is None:
        return None
    return G.product(a, b)


def eval_by_bracketings(G: LocalGroupView, w: Sequence[Any]) -> FrozenSet[Any]:
    if not w:
        return frozenset({G.identity})
    values = set()
    for tree in bracketings(0, len(w) - 1):
        value = evaluate_tree(G, w, tree)
        if value is not None:
            values.add(value)
    return frozenset(values)


def render_tree(w: Sequence[Any], tree: Tree) -> str:
    """Parenthesized form, e.g. ((1 1) 4)."""
    if isinstance(tree, int):
        return str(w[tree])
    return f"({render_tree(w, tree[0])} {render_tree(w, tree[1])})"

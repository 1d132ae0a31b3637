"""
Exhaustive and random generation of small local-group tables.

Elements are 0..n-1 with 0 the identity; identity rows and columns are
fixed by the identity law and 0 is its own inverse.
"""

import random
from typing import Iterator, List, Optional

from src.core.axioms import check_axioms
from src.core.local_group import UNDEFINED, FiniteLocalGroup


def _assoc_ok(table: List[List[Optional[int]]], n: int) -> bool:
    """Local associativity on the triples whose four entries are all assigned and defined."""
    for x in range(1, n):
        for y in range(1, n):
            xy = table[x][y]
            if xy is None or xy == UNDEFINED:
                continue
            for z in range(1, n):
                yz = table[y][z]
                if yz is None or yz == UNDEFINED:
                    continue
                left = table[xy][z]
                right = table[x][yz]
                if left is None or right is None or left == UNDEFINED or right == UNDEFINED:
                    continue
                if left != right:
                    return False
    return True


def _inverse_tables(table, n: int) -> Iterator[tuple]:
    """All inversions compatible with the inverse laws and involution."""
    candidates = [[UNDEFINED]]
    for x in range(1, n):
        options = [UNDEFINED] + [y for y in range(n) if table[x][y] == 0 and table[y][x] == 0]
        candidates.append(options)

    def extend(prefix: list, x: int):
        if x == n:
            inv = [0] + prefix
            for a in range(1, n):
                b = inv[a]
                if b != UNDEFINED and inv[b] != UNDEFINED and inv[b] != a:
                    return
            yield tuple(inv)
            return
        for option in candidates[x]:
            yield from extend(prefix + [option], x + 1)

    yield from extend([], 1)


def enumerate_local_groups(n: int) -> Iterator[FiniteLocalGroup]:
    """
    Every local group on labels 0..n-1 (identity 0), pruned by local
    associativity as cells are filled. Practical for n <= 4.
    """
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[0][x] = x
        table[x][0] = x

    def fill(k: int):
        if k == len(cells):
            frozen = tuple(tuple(row) for row in table)
            for inv in _inverse_tables(frozen, n):
                yield FiniteLocalGroup(tuple(range(n)), 0, frozen, inv)
            return
        i, j = cells[k]
        for value in [UNDEFINED] + list(range(n)):
            table[i][j] = value
            if _assoc_ok(table, n):
                yield from fill(k + 1)
        table[i][j] = None

    yield from fill(0)


def random_local_group(n: int, rng: random.Random, density: float = 0.3) -> Optional[FiniteLocalGroup]:
    """
    A random table on 0..n-1: each non-identity product is defined with
    probability ``density``. Returns None when the draw breaks an axiom.
    """
    table = [[UNDEFINED] * n for _ in range(n)]
    for x in range(n):
        table[0][x] = x
        table[x][0] = x
    for i in range(1, n):
        for j in range(1, n):
            if rng.random() < density:
                table[i][j] = rng.randrange(n)
    inv = [UNDEFINED] * n
    inv[0] = 0
    for x in range(1, n):
        options = [y for y in range(1, n) if table[x][y] == 0 and table[y][x] == 0]
        if options and rng.random() < 0.5:
            inv[x] = rng.choice(options)
    G = FiniteLocalGroup(tuple(range(n)), 0, tuple(tuple(r) for r in table), tuple(inv))
    if not check_axioms(G).passed:
        return None
    return G

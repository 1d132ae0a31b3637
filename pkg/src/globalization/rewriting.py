"""
String rewriting and Knuth-Bendix completion.

Words are tuples of symbol indices; the reduction order is shortlex with
symbols compared by index. Completion keeps the rule set interreduced:
no left side contains another left side and every right side is
irreducible, so critical pairs only come from proper overlaps.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.config import get_config
from src.core.local_group import read_json
from src.errors import CompletionLimitError, FormatError, IncompleteSystemError, PreconditionError
from src.globalization.presentation import GenWord, Presentation
from src.logging_config import get_logger

logger = get_logger("globalization.rewriting")

IWord = Tuple[int, ...]
Rule = Tuple[IWord, IWord]


def shortlex_key(w: IWord) -> Tuple[int, IWord]:
    return (len(w), w)


def orient(u: IWord, v: IWord) -> Rule:
    return (u, v) if shortlex_key(u) > shortlex_key(v) else (v, u)


class _Reducer:
    """Leftmost-innermost reduction with a left-side lookup table."""

    def __init__(self, rules: Iterable[Rule]):
        self.table: Dict[IWord, IWord] = dict(rules)
        self.lengths = sorted({len(l) for l in self.table})

    def add(self, lhs: IWord, rhs: IWord) -> None:
        self.table[lhs] = rhs
        if len(lhs) not in self.lengths:
            self.lengths = sorted(self.lengths + [len(lhs)])

    def remove(self, lhs: IWord) -> None:
        del self.table[lhs]
        self.lengths = sorted({len(l) for l in self.table})

    def reduce(self, word: IWord) -> IWord:
        if not self.table:
            return tuple(word)
        stack: List[int] = []
        pending = list(reversed(word))
        while pending:
            stack.append(pending.pop())
            for L in self.lengths:
                if L > len(stack):
                    break
                tail = tuple(stack[-L:])
                rhs = self.table.get(tail)
                if rhs is not None:
                    del stack[-L:]
                    pending.extend(reversed(rhs))
                    break
        return tuple(stack)

    def reducible(self, word: IWord) -> bool:
        n = len(word)
        for L in self.lengths:
            for i in range(n - L + 1):
                if word[i:i + L] in self.table:
                    return True
        return False


@dataclass
class RewriteSystem:
    """Ordered rules over named symbols; ``complete`` certifies confluence."""
    symbols: Tuple[str, ...]
    rules: List[Rule] = field(default_factory=list)
    complete: bool = False

    def __post_init__(self):
        self._index = {s: i for i, s in enumerate(self.symbols)}
        if len(self._index) != len(self.symbols):
            raise FormatError("duplicate symbols")
        for lhs, rhs in self.rules:
            if shortlex_key(lhs) <= shortlex_key(rhs):
                raise FormatError(f"rule {self.render(lhs)} -> {self.render(rhs)} does not decrease shortlex")
        self._reducer = _Reducer(self.rules)

    # ==================== WORDS ====================

    def encode(self, word: Sequence[str]) -> IWord:
        try:
            return tuple(self._index[s] for s in word)
        except KeyError as e:
            raise FormatError(f"unknown generator symbol {e}") from None

    def decode(self, word: IWord) -> GenWord:
        return tuple(self.symbols[i] for i in word)

    def render(self, word: IWord) -> str:
        return " ".join(self.symbols[i] for i in word) if word else "ε"

    def parse(self, text: str) -> GenWord:
        """Symbols separated by whitespace or commas; '', 'ε' and 'e' mean the empty word."""
        text = text.strip()
        if text in ("", "ε", "eps"):
            return ()
        tokens = text.replace(",", " ").split()
        self.encode(tokens)
        return tuple(tokens)

    # ==================== REDUCTION ====================

    def reduce(self, word: Sequence[str]) -> GenWord:
        """Rewrite to an irreducible word; without completeness the result need not be unique."""
        return self.decode(self._reducer.reduce(self.encode(word)))

    def normal_form(self, word: Sequence[str]) -> GenWord:
        if not self.complete:
            raise IncompleteSystemError("normal forms need a complete rewriting system; use reduce()")
        return self.reduce(word)

    def equal(self, u: Sequence[str], v: Sequence[str]) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    def critical_pairs(self) -> List[Tuple[IWord, IWord]]:
        """Unjoinable critical pairs of the current rules (empty for a confluent system)."""
        return [pair for pair in _overlaps(self.rules, self._reducer) if pair[0] != pair[1]]

    def normal_forms(self, max_len: int) -> List[GenWord]:
        """Irreducible words up to max_len in shortlex order."""
        words: List[IWord] = [()]
        layer: List[IWord] = [()]
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for s in range(len(self.symbols)):
                    v = w + (s,)
                    if not self._reducer.reducible(v):
                        nxt.append(v)
            words.extend(nxt)
            layer = nxt
        return [self.decode(w) for w in words]

    # ==================== SERIALIZATION ====================

    def to_dict(self) -> dict:
        return {
            "symbols": list(self.symbols),
            "complete": self.complete,
            "rules": [[" ".join(self.decode(l)), " ".join(self.decode(r))] for l, r in self.rules],
        }

    def to_json(self) -> str:
        data = self.to_dict()
        lines = ["{", f'  "symbols": {json.dumps(data["symbols"])},', f'  "complete": {json.dumps(data["complete"])},']
        if data["rules"]:
            lines.append('  "rules": [')
            rows = [json.dumps(r, ensure_ascii=False) for r in data["rules"]]
            lines.extend(f"    {row}," for row in rows[:-1])
            lines.append(f"    {rows[-1]}")
            lines.append("  ]")
        else:
            lines.append('  "rules": []')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RewriteSystem":
        try:
            symbols = tuple(data["symbols"])
            index = {s: i for i, s in enumerate(symbols)}
            rules = [
                (tuple(index[s] for s in l.split()), tuple(index[s] for s in r.split()))
                for l, r in data["rules"]
            ]
            return cls(symbols, rules, bool(data.get("complete", False)))
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise FormatError(f"Malformed rewriting system: {e}") from None

    def dump(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())

    @classmethod
    def load(cls, path: str) -> "RewriteSystem":
        return cls.from_dict(read_json(path))


def _overlaps(rules: Sequence[Rule], reducer: _Reducer):
    """Both reducts of every proper overlap l1 = p s, l2 = s q."""
    for l1, r1 in rules:
        for l2, r2 in rules:
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    left = reducer.reduce(r1 + l2[k:])
                    right = reducer.reduce(l1[:-k] + r2)
                    yield left, right


def complete(
    presentation: Presentation,
    max_rules: Optional[int] = None,
    max_len: Optional[int] = None,
) -> RewriteSystem:
    """
    Knuth-Bendix completion of the presentation's relations.

    Raises CompletionLimitError carrying the partial (incomplete) system
    when more than ``max_rules`` rules or a left side longer than
    ``max_len`` would be needed.
    """
    config = get_config()
    max_rules = config.max_rules if max_rules is None else max_rules
    max_len = config.max_rule_len if max_len is None else max_len
    if max_rules < 1 or max_len < 1:
        raise PreconditionError("completion limits must be positive")

    symbols = presentation.symbols
    index = {s: i for i, s in enumerate(symbols)}
    pending = deque(
        (tuple(index[s] for s in l), tuple(index[s] for s in r)) for l, r in presentation.relations
    )
    rules: Dict[IWord, IWord] = {}
    reducer = _Reducer([])
    rounds = 0

    def partial() -> RewriteSystem:
        return RewriteSystem(symbols, sorted(rules.items(), key=lambda r: shortlex_key(r[0])), complete=False)

    while True:
        while pending:
            u, v = pending.popleft()
            u, v = reducer.reduce(u), reducer.reduce(v)
            if u == v:
                continue
            lhs, rhs = orient(u, v)
            if len(lhs) > max_len:
                raise CompletionLimitError(f"rule left side of length {len(lhs)} exceeds {max_len}", partial())

            # rules whose left side the new rule rewrites are retired and re-queued
            for old in [l for l in rules if l != lhs and _contains(l, lhs)]:
                pending.append((old, rules.pop(old)))
                reducer.remove(old)
            rules[lhs] = rhs
            reducer.add(lhs, rhs)
            for l in list(rules):
                reduced = reducer.reduce(rules[l])
                if reduced != rules[l]:
                    rules[l] = reduced
                    reducer.add(l, reduced)
            if len(rules) > max_rules:
                raise CompletionLimitError(f"more than {max_rules} rules", partial())

        rounds += 1
        fresh = [(u, v) for u, v in _overlaps(list(rules.items()), reducer) if u != v]
        if not fresh:
            break
        pending.extend(fresh)
        logger.debug(f"Completion round {rounds}: {len(rules)} rules, {len(fresh)} new pairs",
                     extra={"rules": len(rules), "steps": rounds})

    system = RewriteSystem(symbols, sorted(rules.items(), key=lambda r: shortlex_key(r[0])), complete=True)
    logger.info(f"Completed with {len(system.rules)} rules after {rounds} rounds",
                extra={"rules": len(system.rules), "steps": rounds})
    return system


def _contains(word: IWord, sub: IWord) -> bool:
    L = len(sub)
    return any(word[i:i + L] == sub for i in range(len(word) - L + 1))

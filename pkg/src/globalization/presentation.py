"""
Group presentation of the globalization of a finite local group.

One generator per non-identity element; an element outside Lambda gets a
formal inverse symbol "<label>^-1" placed right after its generator.
Relations: g_x g_y = g_xy for (x, y) in Omega (g_identity is the empty
word), plus g_x X = X g_x = empty for formal inverses.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from src.core.axioms import require_axioms
from src.core.local_group import FiniteLocalGroup
from src.errors import FormatError
from src.logging_config import get_logger

logger = get_logger("globalization.presentation")

Symbol = str
GenWord = Tuple[Symbol, ...]


@dataclass(frozen=True)
class Presentation:
    symbols: Tuple[Symbol, ...]
    relations: Tuple[Tuple[GenWord, GenWord], ...]
    generator_of: Dict[Any, Symbol]
    formal_inverse_of: Dict[Any, Symbol]
    inverse_symbol: Dict[Symbol, GenWord]

    def iota(self, x: Any) -> GenWord:
        """Generator word of a carrier element; the identity maps to the empty word."""
        if x not in self.generator_of:
            return ()
        return (self.generator_of[x],)

    def word_of(self, elements) -> GenWord:
        """Concatenated iota images of a word over the carrier."""
        out: List[Symbol] = []
        for x in elements:
            out.extend(self.iota(x))
        return tuple(out)

    def inverse_word(self, word: GenWord) -> GenWord:
        out: List[Symbol] = []
        for s in reversed(word):
            out.extend(self.inverse_symbol[s])
        return tuple(out)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "symbols": list(self.symbols),
            "relations": [[" ".join(l), " ".join(r)] for l, r in self.relations],
        }


def _symbol(label: Any) -> Symbol:
    text = str(label)
    if not text or any(ch.isspace() for ch in text):
        raise FormatError(f"label {label!r} cannot be used as a generator symbol")
    return text


def present(G: FiniteLocalGroup) -> Presentation:
    require_axioms(G)
    e = G.identity
    symbols: List[Symbol] = []
    generator_of: Dict[Any, Symbol] = {}
    formal: Dict[Any, Symbol] = {}
    for x in G.carrier:
        if x == e:
            continue
        generator_of[x] = _symbol(x)
        symbols.append(generator_of[x])
        if not G.in_lambda(x):
            formal[x] = f"{generator_of[x]}^-1"
            symbols.append(formal[x])
    if len(set(symbols)) != len(symbols):
        raise FormatError("generator symbols collide; relabel the carrier")

    def iota(x) -> GenWord:
        return () if x == e else (generator_of[x],)

    relations: List[Tuple[GenWord, GenWord]] = []
    seen = set()
    for x, y in G.omega():
        if x == e or y == e:
            continue
        rel = (iota(x) + iota(y), iota(G.product(x, y)))
        if rel not in seen:
            seen.add(rel)
            relations.append(rel)
    for x, X in formal.items():
        for rel in (((generator_of[x], X), ()), ((X, generator_of[x]), ())):
            if rel not in seen:
                seen.add(rel)
                relations.append(rel)

    inverse_symbol: Dict[Symbol, GenWord] = {}
    for x, g in generator_of.items():
        if x in formal:
            inverse_symbol[g] = (formal[x],)
            inverse_symbol[formal[x]] = (g,)
        else:
            inverse_symbol[g] = iota(G.inverse(x))

    logger.debug(f"Presentation with {len(symbols)} symbols and {len(relations)} relations",
                 extra={"group": G.name})
    return Presentation(tuple(symbols), tuple(relations), generator_of, formal, inverse_symbol)

"""
Global associativity checking and strong evaluation domains.

For a finite local group every word of length <= max_len is covered.
Inserting or deleting identity entries never changes eval_some, so only
words over the non-identity alphabet are enumerated; each word extends
its parent by one letter and only the new DP column is computed.
Instances are checked on seeded random words and the verdict says so.
"""

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

from src.config import get_config
from src.core.local_group import FiniteLocalGroup, LocalGroupView
from src.core.verdict import Certificate, Verdict
from src.errors import PreconditionError
from src.logging_config import get_logger
from src.words.evaluation import eval_all, eval_some, extend_column

logger = get_logger("words.associativity")


def check_global_assoc(
    G: LocalGroupView,
    max_len: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> Verdict:
    """
    Pass when no word up to ``max_len`` has two distinct values.

    On failure the witness is ``{"word": [...], "values": [b, c]}``, the
    lexicographically least such word in carrier-index order for finite G.
    """
    config = get_config()
    max_len = config.max_len if max_len is None else max_len
    if max_len < 0:
        raise PreconditionError("max_len must be >= 0")

    if isinstance(G, FiniteLocalGroup):
        verdict = _exhaustive(G, max_len, workers or config.assoc_workers)
    else:
        verdict = _sampled(
            G, max_len,
            config.samples if samples is None else samples,
            config.seed if seed is None else seed,
        )

    name = getattr(G, "name", "")
    if verdict.failed:
        logger.info(f"Global associativity fails at {verdict.witness['word']}",
                    extra={"group": name, "verdict": "fail"})
    else:
        logger.info(f"Global associativity holds up to length {max_len} ({verdict.certificate.value})",
                    extra={"group": name, "verdict": verdict.status.value})
    return verdict


# ==================== FINITE ====================

def _first_witness(G: FiniteLocalGroup, prefix: Tuple[int, ...], max_len: int) -> Optional[Tuple[tuple, tuple]]:
    """Depth-first over non-identity index words starting with ``prefix``; first two-valued word wins."""
    table = G.product_table
    e = G.identity_index
    alphabet = [i for i in range(len(G)) if i != e]

    columns: List[List[set]] = []
    for letter in prefix:
        extend_column(table, columns, letter)
    if len(columns[-1][0]) > 1:
        return prefix, tuple(sorted(columns[-1][0]))

    def walk(word: Tuple[int, ...]):
        if len(word) == max_len:
            return None
        for letter in alphabet:
            extend_column(table, columns, letter)
            values = columns[-1][0]
            if len(values) > 1:
                return word + (letter,), tuple(sorted(values))
            found = walk(word + (letter,))
            columns.pop()
            if found:
                return found
        return None

    return walk(prefix)


def _exhaustive(G: FiniteLocalGroup, max_len: int, workers: int) -> Verdict:
    e = G.identity_index
    firsts = [(i,) for i in range(len(G)) if i != e]
    total = sum(len(firsts) ** k for k in range(1, max_len + 1))
    if max_len < 2 or not firsts:
        return Verdict.ok(f"no word of length <= {max_len} can be ambiguous", words=total)

    if workers > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_first_witness, itertools.repeat(G), firsts, itertools.repeat(max_len)))
    else:
        results = []
        for first in firsts:
            results.append(_first_witness(G, first, max_len))
            if results[-1]:
                break

    # shards are in first-letter order, so the first hit is the least word
    for found in results:
        if found:
            word, values = found
            labels = [G.carrier[k] for k in word]
            pair = [G.carrier[k] for k in values[:2]]
            return Verdict.fail(
                {"word": labels, "values": pair},
                detail=f"word {labels} has values {pair}",
                words=total,
            )
    return Verdict.ok(f"all {total} identity-free words up to length {max_len} single-valued", words=total)


# ==================== INSTANCES ====================

def _sampled(G: Any, max_len: int, samples: int, seed: int) -> Verdict:
    if max_len < 2:
        return Verdict.ok(f"no word of length <= {max_len} can be ambiguous", Certificate.SAMPLED, words=0)
    rng = random.Random(seed)
    defined = 0
    for _ in range(samples):
        length = rng.randint(2, max_len)
        word = G.sample(rng, length)
        values = eval_some(G, word)
        if values:
            defined += 1
        if len(values) > 1:
            ordered = sorted(values, key=G.sort_key)[:2]
            return Verdict.fail(
                {"word": list(word), "values": ordered},
                detail="sampled word with two values",
                certificate=Certificate.SAMPLED,
                words=samples,
            )
    return Verdict.ok(
        f"{samples} sampled words up to length {max_len} single-valued ({defined} with a value)",
        Certificate.SAMPLED, words=samples, defined=defined, seed=seed,
    )


# ==================== STRONG DOMAIN ====================

@dataclass(frozen=True)
class StrongDomain:
    """n-tuples on which every bracketing is defined and agrees, plus maximal cubes S^n inside them."""
    n: int
    tuples: frozenset
    maximal_subsets: Tuple[frozenset, ...] = field(default=())

    def __contains__(self, t) -> bool:
        return tuple(t) in self.tuples


def strong_domain(G: FiniteLocalGroup, n: int) -> StrongDomain:
    """
    All n-tuples with eval_all defined. The maximal subsets are found
    greedily: seed {1, x} for each x in carrier order, then add further
    elements in carrier order while S^n stays inside the domain.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    tuples = frozenset(t for t in itertools.product(G.carrier, repeat=n) if eval_all(G, t) is not None)

    def cube_fits(S: Sequence[Any]) -> bool:
        return all(t in tuples for t in itertools.product(S, repeat=n))

    found: List[frozenset] = []
    for seed_element in G.carrier:
        S = [G.identity] if seed_element == G.identity else [G.identity, seed_element]
        if not cube_fits(S):
            continue
        for x in G.carrier:
            if x not in S and cube_fits(S + [x]):
                S.append(x)
        S = frozenset(S)
        if S not in found:
            found.append(S)
    logger.debug(f"Strong domain n={n}: {len(tuples)} tuples, {len(found)} maximal subsets",
                 extra={"group": G.name})
    return StrongDomain(n, tuples, tuple(found))

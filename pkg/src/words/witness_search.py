"""
Seeded random search for local groups that are not globally associative.
"""

import random
from dataclasses import dataclass
from typing import Optional

from src.config import get_config
from src.core.enumeration import random_local_group
from src.core.local_group import FiniteLocalGroup
from src.core.verdict import Verdict
from src.logging_config import get_logger
from src.words.associativity import check_global_assoc

logger = get_logger("words.witness_search")


@dataclass(frozen=True)
class SearchResult:
    group: FiniteLocalGroup
    verdict: Verdict
    attempts: int


def search_non_associative(
    n: int = 5,
    max_len: Optional[int] = None,
    seed: Optional[int] = None,
    attempts: int = 20000,
    density: float = 0.35,
) -> Optional[SearchResult]:
    """
    Draw random tables on n elements until one passes the local-group
    axioms but has a word with two values. None when the budget runs out.
    """
    config = get_config()
    max_len = config.max_len if max_len is None else max_len
    rng = random.Random(config.seed if seed is None else seed)

    for attempt in range(1, attempts + 1):
        G = random_local_group(n, rng, density)
        if G is None:
            continue
        verdict = check_global_assoc(G, max_len=max_len, workers=1)
        if verdict.failed:
            logger.info(f"Found a non-globally-associative table after {attempt} draws",
                        extra={"word": verdict.witness["word"], "steps": attempt})
            return SearchResult(G, verdict, attempt)
    logger.warning(f"No witness within {attempts} draws", extra={"steps": attempts})
    return None

"""
Checks on the canonical map iota: G -> H.
"""

import itertools
from typing import Any, Iterable, Optional

from src.core.constructions import is_symmetric
from src.core.local_group import FiniteLocalGroup
from src.core.verdict import Verdict
from src.errors import IncompleteSystemError, PreconditionError
from src.globalization.presentation import Presentation, present
from src.globalization.rewriting import RewriteSystem
from src.logging_config import get_logger

logger = get_logger("globalization.iota")


def verify_iota(G: FiniteLocalGroup, rs: RewriteSystem, presentation: Optional[Presentation] = None) -> Verdict:
    """
    Pass iff iota is injective on normal forms, iota(1) reduces to the empty
    word, iota(x^-1) inverts iota(x) and iota(x) iota(y) = iota(xy) on Omega.
    """
    presentation = presentation or present(G)
    if not rs.complete:
        raise IncompleteSystemError("verify_iota needs a complete rewriting system")
    nf = rs.normal_form
    iota = presentation.iota

    if nf(iota(G.identity)) != ():
        return Verdict.fail((G.identity,), detail="iota(1) is not the identity of H", law="identity")

    seen = {}
    for x in G.carrier:
        form = nf(iota(x))
        if form in seen:
            return Verdict.fail((seen[form], x), detail=f"iota({seen[form]!r}) = iota({x!r})", law="injective")
        seen[form] = x

    for x in G.lam():
        if nf(iota(x) + iota(G.inverse(x))) != ():
            return Verdict.fail((x,), detail=f"iota({x!r}^-1) does not invert iota({x!r})", law="inverse")

    for x, y in G.omega():
        if nf(iota(x) + iota(y)) != nf(iota(G.product(x, y))):
            return Verdict.fail((x, y), detail=f"iota({x!r}) iota({y!r}) != iota({x!r}{y!r})", law="product")

    logger.info("iota is an injective morphism", extra={"group": G.name, "verdict": "pass"})
    return Verdict.ok(f"{len(G)} distinct normal forms, {len(G.omega())} products preserved")


def check_local_equality(
    G: FiniteLocalGroup,
    U: Iterable[Any],
    rs: RewriteSystem,
    presentation: Optional[Presentation] = None,
) -> Verdict:
    """G|U = H|U for symmetric U with U x U inside Omega."""
    presentation = presentation or present(G)
    if not rs.complete:
        raise IncompleteSystemError("local equality needs a complete rewriting system")
    wanted = frozenset(U)
    U = [x for x in G.carrier if x in wanted]
    if len(U) != len(wanted):
        raise PreconditionError("U must be a subset of the carrier")
    if G.identity not in U:
        raise PreconditionError("U must contain the identity")
    if not is_symmetric(G, U):
        raise PreconditionError("U must be symmetric")
    for x, y in itertools.product(U, repeat=2):
        if not G.in_omega(x, y):
            raise PreconditionError(f"U x U is not inside Omega: ({x!r}, {y!r})")

    nf = rs.normal_form
    forms = {nf(presentation.iota(u)): u for u in U}
    for x, y in itertools.product(U, repeat=2):
        h = nf(presentation.iota(x) + presentation.iota(y))
        xy = G.product(x, y)
        in_G = xy in forms.values()
        in_H = h in forms
        if in_G != in_H:
            return Verdict.fail((x, y), detail=f"product of {x!r}, {y!r} lies in U in {'G' if in_G else 'H'} only")
        if in_H and forms[h] != xy:
            return Verdict.fail((x, y), detail=f"H gives {forms[h]!r}, G gives {xy!r}")
    return Verdict.ok(f"G|U = H|U on {len(U)} elements")

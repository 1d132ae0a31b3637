"""
Constructions on local groups: symmetrization, restriction, neatness and
restrictions of groups.
"""

from typing import Any, Iterable, Mapping, Optional, Tuple

from src.core.groups import FiniteGroup
from src.core.local_group import UNDEFINED, FiniteLocalGroup, Label
from src.core.verdict import Verdict
from src.errors import FormatError, PreconditionError
from src.logging_config import get_logger

logger = get_logger("core.constructions")


def _as_subset(G: FiniteLocalGroup, X: Iterable[Label]) -> frozenset:
    X = frozenset(X)
    for x in X:
        if not G.contains(x):
            raise FormatError(f"{x!r} is not in the carrier")
    return X


def symmetrize(G: FiniteLocalGroup, X: Iterable[Label]) -> frozenset:
    """Largest symmetric subset of X: {x in X & Lambda : x^-1 in X & Lambda}."""
    X = _as_subset(G, X)
    result = set()
    for x in X:
        xi = G.inverse(x)
        if xi is not None and xi in X and G.in_lambda(xi):
            result.add(x)
    return frozenset(result)


def is_symmetric(G: FiniteLocalGroup, X: Iterable[Label]) -> bool:
    X = _as_subset(G, X)
    return symmetrize(G, X) == X


def restrict(G: FiniteLocalGroup, U: Iterable[Label], name: str = "") -> FiniteLocalGroup:
    """
    G|U: keep products and inverses of elements of U that land in U.
    The carrier keeps G's order.
    """
    U = _as_subset(G, U)
    if G.identity not in U:
        raise PreconditionError(f"identity {G.identity!r} must lie in U")

    keep = [i for i, x in enumerate(G.carrier) if x in U]
    new_index = {old: new for new, old in enumerate(keep)}

    # UNDEFINED and products leaving U both map to UNDEFINED
    table = tuple(
        tuple(new_index.get(G.product_table[i][j], UNDEFINED) for j in keep)
        for i in keep
    )
    inverse = tuple(new_index.get(G.inverse_table[i], UNDEFINED) for i in keep)
    return FiniteLocalGroup(
        tuple(G.carrier[i] for i in keep),
        G.identity,
        table,
        inverse,
        name=name or (f"{G.name}|U" if G.name else ""),
        ambient=G.ambient,
    )


def is_neat(G: FiniteLocalGroup) -> Verdict:
    """Neat: Lambda is the whole carrier and (xy, y^-1) in Omega for (x, y) in Omega."""
    missing = [x for x in G.carrier if not G.in_lambda(x)]
    if missing:
        return Verdict.fail(
            (missing[0],),
            detail=f"{missing[0]!r} has no inverse (Lambda != carrier)",
            reason="lambda",
        )
    for x, y in G.omega():
        xy = G.product(x, y)
        if not G.in_omega(xy, G.inverse(y)):
            return Verdict.fail(
                (x, y),
                detail=f"({xy!r}, {G.inverse(y)!r}) not in Omega",
                reason="omega",
            )
    return Verdict.ok("Lambda = carrier and Omega closed under (xy, y^-1)")


def from_group_restriction(H: FiniteGroup, U: Iterable[Label], name: str = "") -> FiniteLocalGroup:
    """
    H|U for a finite group H: Omega = {(x, y) in U x U : xy in U} and
    Lambda = {x in U : x^-1 in U}. The result remembers H as its ambient group.
    """
    if not isinstance(H, FiniteGroup):
        raise PreconditionError("from_group_restriction needs a validated FiniteGroup")
    U = frozenset(U)
    for x in U:
        if not H.contains(x):
            raise FormatError(f"{x!r} is not an element of {H.name}")
    if H.identity not in U:
        raise PreconditionError(f"identity {H.identity!r} must lie in U")

    carrier = tuple(x for x in H.elements if x in U)
    products = []
    inverses = []
    for x in carrier:
        for y in carrier:
            z = H.product(x, y)
            if z in U:
                products.append((x, y, z))
        xi = H.inverse(x)
        if xi in U:
            inverses.append((x, xi))
    G = FiniteLocalGroup.from_tables(
        carrier, H.identity, products, inverses,
        name=name or f"{H.name}|{len(carrier)}", ambient=H,
    )
    logger.debug(f"Restricted {H.name} to {len(carrier)} elements", extra={"group": G.name})
    return G


def restrict_endomorphism(
    G: FiniteLocalGroup,
    phi: Mapping[Label, Label],
    X: Iterable[Label],
) -> Tuple[FiniteLocalGroup, dict]:
    """
    Carry an endomorphism to G|X_s. Requires phi(X_s) to stay inside X_s.
    """
    Xs = symmetrize(G, X)
    if G.identity not in Xs:
        raise PreconditionError("identity is not in the symmetrization")
    for x in Xs:
        if phi.get(x) not in Xs:
            raise PreconditionError(f"phi({x!r}) = {phi.get(x)!r} leaves the symmetrization")
    restricted = restrict(G, Xs)
    return restricted, {x: phi[x] for x in restricted.carrier}


def images_of(phi: Any, x: Label) -> Optional[Label]:
    """Apply a dict-like or callable element map."""
    if isinstance(phi, Mapping):
        return phi.get(x)
    return phi(x)

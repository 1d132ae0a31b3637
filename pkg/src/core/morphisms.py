"""
Local-group morphism laws.

f(1) = 1; (x, y) in Omega  =>  (f x, f y) in Omega' and f(xy) = f(x) f(y);
x in Lambda  =>  f(x) in Lambda' and f(x^-1) = f(x)^-1.
"""

from typing import Any, List, Mapping

from src.core.local_group import FiniteLocalGroup, LocalGroupView
from src.core.verdict import Violation

IDENTITY = "morphism-identity"
DOMAIN = "morphism-domain"
PRODUCT = "morphism-product"
INVERSE = "morphism-inverse"


def check_morphism(
    source: FiniteLocalGroup,
    target: LocalGroupView,
    images: Mapping[Any, Any],
) -> List[Violation]:
    """Return the violated morphism laws, first witness per law, in carrier order."""
    found = {}

    def record(law: str, witness: tuple):
        if law in found:
            found[law] = Violation(law, found[law].witness, found[law].count + 1)
        else:
            found[law] = Violation(law, witness)

    for x in source.carrier:
        if x not in images or not target.contains(images[x]):
            record(DOMAIN, (x,))
    if DOMAIN in found:
        return list(found.values())

    if images[source.identity] != target.identity:
        record(IDENTITY, (source.identity,))

    for x, y in source.omega():
        fx, fy = images[x], images[y]
        fxy = target.product(fx, fy)
        if fxy is None or fxy != images[source.product(x, y)]:
            record(PRODUCT, (x, y))

    for x in source.lam():
        fx_inv = target.inverse(images[x])
        if fx_inv is None or fx_inv != images[source.inverse(x)]:
            record(INVERSE, (x,))

    return list(found.values())


def is_injective(images: Mapping[Any, Any], domain) -> bool:
    seen = set()
    for x in domain:
        y = images[x]
        if y in seen:
            return False
        seen.add(y)
    return True

"""
Local-group view over an exact instance.

Elements: Fraction for interval/arc, PadicInt for padic, tuples for
products. Products are exact; nothing is ever rounded.
"""

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence

from src.config import get_config
from src.errors import FormatError, PreconditionError
from src.instances.padic import PadicInt
from src.instances.spec import EndoSpec, Family, InstanceSpec


class InstanceView:
    """Uniform local-group interface (identity, partial product, inverse, Omega) for an InstanceSpec."""

    is_finite = False

    def __init__(self, spec: InstanceSpec):
        self.spec = spec
        self.name = spec.describe()
        self._identity = _identity(spec)
        if spec.is_product:
            self._left = InstanceView(spec.left)
            self._right = InstanceView(spec.right)

    def __repr__(self) -> str:
        return f"InstanceView({self.name})"

    # ==================== LOCAL GROUP ====================

    @property
    def identity(self) -> Any:
        return self._identity

    def contains(self, x: Any) -> bool:
        family = self.spec.family
        if family is Family.PRODUCT:
            return (
                isinstance(x, tuple) and len(x) == 2
                and self._left.contains(x[0]) and self._right.contains(x[1])
            )
        if family is Family.PADIC:
            return (
                isinstance(x, PadicInt) and x.p == self.spec.p
                and x.precision <= self.spec.precision and x.in_ball(self.spec.e)
            )
        return isinstance(x, (int, Fraction)) and abs(x) < self.spec.radius

    def product(self, x: Any, y: Any) -> Optional[Any]:
        family = self.spec.family
        if family is Family.PRODUCT:
            a = self._left.product(x[0], y[0])
            b = self._right.product(x[1], y[1])
            return None if a is None or b is None else (a, b)
        if family is Family.PADIC:
            return x + y
        # arc widths are at most 1/4 so representative sums never wrap
        s = Fraction(x) + Fraction(y)
        return s if abs(s) < self.spec.radius else None

    def in_omega(self, x: Any, y: Any) -> bool:
        return self.product(x, y) is not None

    def inverse(self, x: Any) -> Any:
        if self.spec.is_product:
            return (self._left.inverse(x[0]), self._right.inverse(x[1]))
        return -x

    # ==================== ENDOMORPHISM ====================

    def apply_endo(self, endo: EndoSpec, x: Any, n: int = 1) -> Any:
        if n < 0:
            raise PreconditionError("iterate count must be >= 0")
        if self.spec.is_product:
            return (
                self._left.apply_endo(endo.left, x[0], n),
                self._right.apply_endo(endo.right, x[1], n),
            )
        if self.spec.family is Family.PADIC:
            for _ in range(n):
                x = x.times_p()
            return x
        return Fraction(x) * endo.scale ** n

    # ==================== SAMPLING ====================

    def sample(self, rng: random.Random, n: int, denominator_bound: Optional[int] = None) -> List[Any]:
        bound = denominator_bound or get_config().denominator_bound
        return [self._draw(rng, bound) for _ in range(n)]

    def _draw(self, rng: random.Random, bound: int) -> Any:
        spec = self.spec
        if spec.is_product:
            return (self._left._draw(rng, bound), self._right._draw(rng, bound))
        if spec.family is Family.PADIC:
            tail = tuple(rng.randrange(spec.p) for _ in range(spec.precision - spec.e))
            return PadicInt(spec.p, (0,) * spec.e + tail)
        d = rng.randint(1, bound)
        top = math.ceil(spec.radius * d) - 1   # largest numerator with top/d < r
        return Fraction(rng.randint(-top, top), d)

    # ==================== GLOBALIZATION ====================

    def globalize(self, word: Sequence[Any]) -> Any:
        """
        Value of the formal word in the ambient group: Q for interval and
        arc (the arc globalizes to the line, not the circle), Z_p for padic.
        """
        if self.spec.is_product:
            return (
                self._left.globalize([x[0] for x in word]),
                self._right.globalize([x[1] for x in word]),
            )
        total = self._identity
        for x in word:
            total = total + x
        return total

    # ==================== TEXT ====================

    def encode_element(self, x: Any) -> Any:
        if self.spec.is_product:
            return [self._left.encode_element(x[0]), self._right.encode_element(x[1])]
        if self.spec.family is Family.PADIC:
            return x.encode()
        return str(x)

    def parse_element(self, text: Any) -> Any:
        """Parse one element: '1/2', '0:2:1' (digits), or 'a|b' / [a, b] for products."""
        if self.spec.is_product:
            parts = text if isinstance(text, list) else str(text).split("|", 1)
            if len(parts) != 2:
                raise FormatError(f"product element needs two components, got {text!r}")
            x = (self._left.parse_element(parts[0]), self._right.parse_element(parts[1]))
        elif self.spec.family is Family.PADIC:
            x = PadicInt.parse(self.spec.p, str(text).strip())
        else:
            try:
                x = Fraction(str(text).strip())
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"{text!r} is not a rational") from None
        if not self.contains(x):
            raise FormatError(f"{text!r} is not in {self.name}")
        return x

    def sort_key(self, x: Any) -> Any:
        if self.spec.is_product:
            return (self._left.sort_key(x[0]), self._right.sort_key(x[1]))
        if self.spec.family is Family.PADIC:
            return (x.precision, x.value)
        return x


def _identity(spec: InstanceSpec) -> Any:
    if spec.is_product:
        return (_identity(spec.left), _identity(spec.right))
    if spec.family is Family.PADIC:
        return PadicInt.zero(spec.p, spec.precision)
    return Fraction(0)


@lru_cache(maxsize=64)
def as_local_group_view(spec: InstanceSpec) -> InstanceView:
    return InstanceView(spec)


def sample(spec: InstanceSpec, seed: int, n: int) -> List[Any]:
    """n deterministic carrier elements; denominators bounded by ``denominator_bound``."""
    if n < 0:
        raise PreconditionError("sample count must be >= 0")
    return as_local_group_view(spec).sample(random.Random(seed), n)


def partial_product(spec: InstanceSpec, x: Any, y: Any) -> Optional[Any]:
    view = as_local_group_view(spec)
    for z in (x, y):
        if not view.contains(z):
            raise FormatError(f"{z!r} is not in {view.name}")
    return view.product(x, y)


def apply_endo(spec: InstanceSpec, endo: EndoSpec, x: Any, n: int = 1) -> Any:
    endo.validate_for(spec)
    view = as_local_group_view(spec)
    if not view.contains(x):
        raise FormatError(f"{x!r} is not in {view.name}")
    return view.apply_endo(endo, x, n)

"""
p-adic integers at finite, tracked precision.

An element is a little-endian digit vector (digit of p^0 first); its
length is the precision k, i.e. the element is known modulo p^k.
Operations that would need a digit that is not there raise PrecisionError.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.errors import FormatError, PrecisionError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PadicInt:
    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= d < self.p for d in self.digits):
            raise FormatError(f"digits must lie in [0, {self.p})")

    @classmethod
    def from_int(cls, p: int, n: int, precision: int) -> "PadicInt":
        n %= p ** precision
        digits = []
        for _ in range(precision):
            n, d = divmod(n, p)
            digits.append(d)
        return cls(p, tuple(digits))

    @classmethod
    def zero(cls, p: int, precision: int) -> "PadicInt":
        return cls(p, (0,) * precision)

    @property
    def precision(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        """Representative in [0, p^k)."""
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero digit; None when zero at this precision."""
        for i, d in enumerate(self.digits):
            if d:
                return i
        return None

    def is_zero(self) -> bool:
        return not any(self.digits)

    def _need(self, other: Optional["PadicInt"] = None) -> int:
        if other is not None and other.p != self.p:
            raise FormatError(f"cannot mix {self.p}-adic and {other.p}-adic elements")
        k = self.precision if other is None else min(self.precision, other.precision)
        if k == 0:
            raise PrecisionError("p-adic precision exhausted (k = 0)")
        return k

    def __add__(self, other: "PadicInt") -> "PadicInt":
        k = self._need(other)
        return PadicInt.from_int(self.p, self.value + other.value, k)

    def __neg__(self) -> "PadicInt":
        k = self._need()
        return PadicInt.from_int(self.p, -self.value, k)

    def times_p(self) -> "PadicInt":
        """Multiplication by p at unchanged precision: prepend a zero digit."""
        self._need()
        return PadicInt(self.p, (0,) + self.digits[:-1])

    def truncate(self, precision: int) -> "PadicInt":
        return PadicInt(self.p, self.digits[:precision])

    def agrees_with(self, other: "PadicInt") -> bool:
        """Equality modulo p^min(k, k')."""
        k = min(self.precision, other.precision)
        return self.p == other.p and self.digits[:k] == other.digits[:k]

    def in_ball(self, m: int) -> bool:
        """Membership in p^m Z_p."""
        if m <= 0:
            return True
        if m <= self.precision:
            return not any(self.digits[:m])
        if not self.is_zero():
            return False
        raise PrecisionError(f"deciding membership in p^{m}Z_p needs more than {self.precision} digits")

    def encode(self) -> str:
        return ":".join(str(d) for d in self.digits)

    @classmethod
    def parse(cls, p: int, text: str) -> "PadicInt":
        try:
            digits = tuple(int(part) for part in text.split(":")) if text else ()
        except ValueError:
            raise FormatError(f"bad p-adic digit vector {text!r}") from None
        return cls(p, digits)

    def __repr__(self) -> str:
        return f"PadicInt({self.p}, [{self.encode()}])"

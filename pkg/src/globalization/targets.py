"""
Group targets for extended morphisms.

FiniteGroup (from core) covers table groups; CircleGroup is Q/Z with
representatives in [0, 1).
"""

from fractions import Fraction
from typing import Any, Dict

from src.core.groups import FiniteGroup, cyclic
from src.errors import FormatError


class CircleGroup:
    """Rational points of the circle R/Z, added mod 1."""

    is_finite = False
    name = "Q/Z"

    @property
    def identity(self) -> Fraction:
        return Fraction(0)

    def contains(self, x: Any) -> bool:
        return isinstance(x, (int, Fraction)) and 0 <= x < 1

    def reduce(self, x: Any) -> Fraction:
        x = Fraction(x)
        return x - (x.numerator // x.denominator)

    def product(self, x: Any, y: Any) -> Fraction:
        return self.reduce(Fraction(x) + Fraction(y))

    def inverse(self, x: Any) -> Fraction:
        return self.reduce(-Fraction(x))

    def encode(self, x: Any) -> str:
        return str(x)

    def parse(self, text: Any) -> Fraction:
        try:
            return self.reduce(Fraction(str(text)))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{text!r} is not a rational") from None

    def __repr__(self) -> str:
        return "CircleGroup()"


def target_from_dict(data: Any):
    """
    {"circle": true}, {"cyclic": n} or a full group table
    {"elements": [...], "table": [[...]]}.
    """
    if data == "circle" or (isinstance(data, dict) and data.get("circle")):
        return CircleGroup()
    if isinstance(data, dict) and "cyclic" in data:
        return cyclic(int(data["cyclic"]))
    if isinstance(data, dict) and "elements" in data:
        return FiniteGroup.from_dict(data, name=data.get("name", "target"))
    raise FormatError(f"unknown morphism target {data!r}")


def target_to_dict(target) -> Dict[str, Any]:
    if isinstance(target, CircleGroup):
        return {"circle": True}
    return target.to_dict()

"""
Exact symbolic local groups and their endomorphisms, as data.

Families:
    interval  {x in Q : |x| < r}, product x + y defined when |x + y| < r
    arc       same on (-w, w) with w <= 1/4, read as representatives mod 1
    padic     p^e Z_p with digit vectors of tracked precision (a group)
    product   pair of specs, componentwise
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from src.config import get_config
from src.core.local_group import read_json
from src.errors import FormatError
from src.instances.padic import is_prime

ARC_MAX_WIDTH = Fraction(1, 4)


class Family(str, Enum):
    INTERVAL = "interval"
    ARC = "arc"
    PADIC = "padic"
    PRODUCT = "product"


def _fraction(value: Any, what: str) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{what} must be a rational, got {value!r}") from None


@dataclass(frozen=True)
class InstanceSpec:
    family: Family
    radius: Optional[Fraction] = None   # interval radius r / arc width w
    p: Optional[int] = None
    e: int = 0
    precision: int = 8
    left: Optional["InstanceSpec"] = None
    right: Optional["InstanceSpec"] = None

    def __post_init__(self):
        if self.family in (Family.INTERVAL, Family.ARC):
            if self.radius is None or self.radius <= 0:
                raise FormatError(f"{self.family.value} needs a positive rational radius")
            if self.family is Family.ARC and self.radius > ARC_MAX_WIDTH:
                raise FormatError("arc width must be at most 1/4")
        elif self.family is Family.PADIC:
            if self.p is None or not is_prime(self.p):
                raise FormatError(f"padic needs a prime p, got {self.p!r}")
            if self.e < 0:
                raise FormatError("ball exponent e must be >= 0")
            if self.precision < 1:
                raise FormatError("precision must be >= 1")
            if self.e >= self.precision:
                raise FormatError("ball exponent must be below the precision")
        elif self.family is Family.PRODUCT:
            if self.left is None or self.right is None:
                raise FormatError("product needs two factors")

    # ==================== CONSTRUCTION ====================

    @classmethod
    def interval(cls, r) -> "InstanceSpec":
        return cls(Family.INTERVAL, radius=_fraction(r, "radius"))

    @classmethod
    def arc(cls, w) -> "InstanceSpec":
        return cls(Family.ARC, radius=_fraction(w, "width"))

    @classmethod
    def padic(cls, p: int, e: int = 0, precision: Optional[int] = None) -> "InstanceSpec":
        if precision is None:
            precision = get_config().padic_precision
        return cls(Family.PADIC, p=p, e=e, precision=precision)

    @classmethod
    def product(cls, left: "InstanceSpec", right: "InstanceSpec") -> "InstanceSpec":
        return cls(Family.PRODUCT, left=left, right=right)

    @property
    def is_product(self) -> bool:
        return self.family is Family.PRODUCT

    def factors(self):
        """Leaf specs, left to right."""
        if self.is_product:
            return self.left.factors() + self.right.factors()
        return [self]

    # ==================== SERIALIZATION ====================

    def to_dict(self) -> Dict[str, Any]:
        if self.family is Family.INTERVAL:
            return {"family": "interval", "radius": str(self.radius)}
        if self.family is Family.ARC:
            return {"family": "arc", "width": str(self.radius)}
        if self.family is Family.PADIC:
            return {"family": "padic", "p": self.p, "e": self.e, "precision": self.precision}
        return {"family": "product", "left": self.left.to_dict(), "right": self.right.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "InstanceSpec":
        try:
            family = Family(data["family"])
        except (KeyError, ValueError, TypeError):
            raise FormatError(f"unknown instance family in {data!r}") from None
        try:
            if family is Family.INTERVAL:
                return cls.interval(data["radius"])
            if family is Family.ARC:
                return cls.arc(data["width"])
            if family is Family.PADIC:
                return cls.padic(int(data["p"]), int(data.get("e", 0)), data.get("precision"))
            return cls.product(cls.from_dict(data["left"]), cls.from_dict(data["right"]))
        except KeyError as e:
            raise FormatError(f"{family.value} instance is missing {e}") from None

    def describe(self) -> str:
        if self.family is Family.INTERVAL:
            return f"interval(r={self.radius})"
        if self.family is Family.ARC:
            return f"arc(w={self.radius})"
        if self.family is Family.PADIC:
            return f"padic(p={self.p}, e={self.e}, k={self.precision})"
        return f"product({self.left.describe()}, {self.right.describe()})"


@dataclass(frozen=True)
class EndoSpec:
    """
    Family-compatible endomorphism: scaling x -> s x (0 < |s| < 1) on
    interval/arc, x -> p x on padic, componentwise on products.
    """
    family: Family
    scale: Optional[Fraction] = None
    left: Optional["EndoSpec"] = None
    right: Optional["EndoSpec"] = None

    def __post_init__(self):
        if self.family in (Family.INTERVAL, Family.ARC):
            if self.scale is None or not 0 < abs(self.scale) < 1:
                raise FormatError("scaling endomorphism needs 0 < |s| < 1")
        elif self.family is Family.PRODUCT:
            if self.left is None or self.right is None:
                raise FormatError("product endomorphism needs two factors")

    @classmethod
    def scaling(cls, family: Family, s) -> "EndoSpec":
        return cls(family, scale=_fraction(s, "scale"))

    @classmethod
    def times_p(cls) -> "EndoSpec":
        return cls(Family.PADIC)

    @classmethod
    def product(cls, left: "EndoSpec", right: "EndoSpec") -> "EndoSpec":
        return cls(Family.PRODUCT, left=left, right=right)

    @classmethod
    def default_for(cls, spec: InstanceSpec) -> "EndoSpec":
        """Halving on interval/arc, multiplication by p on padic."""
        if spec.family is Family.PADIC:
            return cls.times_p()
        if spec.family is Family.PRODUCT:
            return cls.product(cls.default_for(spec.left), cls.default_for(spec.right))
        return cls.scaling(spec.family, Fraction(1, 2))

    def validate_for(self, spec: InstanceSpec) -> None:
        if self.family is not spec.family:
            raise FormatError(f"{self.family.value} endomorphism does not fit a {spec.family.value} instance")
        if self.family is Family.PRODUCT:
            self.left.validate_for(spec.left)
            self.right.validate_for(spec.right)

    def to_dict(self) -> Dict[str, Any]:
        if self.family in (Family.INTERVAL, Family.ARC):
            return {"family": self.family.value, "scale": str(self.scale)}
        if self.family is Family.PADIC:
            return {"family": "padic", "map": "times_p"}
        return {"family": "product", "left": self.left.to_dict(), "right": self.right.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EndoSpec":
        try:
            family = Family(data["family"])
        except (KeyError, ValueError, TypeError):
            raise FormatError(f"unknown endomorphism family in {data!r}") from None
        if family is Family.PADIC:
            return cls.times_p()
        try:
            if family is Family.PRODUCT:
                return cls.product(cls.from_dict(data["left"]), cls.from_dict(data["right"]))
            return cls.scaling(family, data["scale"])
        except KeyError as e:
            raise FormatError(f"{family.value} endomorphism is missing {e}") from None

    def describe(self) -> str:
        if self.family in (Family.INTERVAL, Family.ARC):
            return f"x -> {self.scale} x"
        if self.family is Family.PADIC:
            return "x -> p x"
        return f"({self.left.describe()}) x ({self.right.describe()})"


def load_instance(path: str) -> InstanceSpec:
    return InstanceSpec.from_dict(read_json(path))


def load_endo(path: str) -> EndoSpec:
    return EndoSpec.from_dict(read_json(path))

"""
Ball arithmetic for instance neighborhoods.

A BallSet is a symmetric neighborhood of the identity whose membership,
inclusion, image and preimage under the family endomorphisms are all
computed exactly:

    interval/arc   open or closed ball {|x| < rho} / {|x| <= rho}, rho rational
    padic          p^m Z_p, m >= 0
    product        pair of BallSets
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.errors import FormatError, PreconditionError
from src.instances.spec import EndoSpec, Family, InstanceSpec


@dataclass(frozen=True)
class BallSet:
    family: Family
    radius: Optional[Fraction] = None
    closed: bool = False
    exponent: Optional[int] = None
    left: Optional["BallSet"] = None
    right: Optional["BallSet"] = None

    def __post_init__(self):
        if self.family in (Family.INTERVAL, Family.ARC):
            if self.radius is None or self.radius <= 0:
                raise FormatError("ball radius must be a positive rational")
        elif self.family is Family.PADIC:
            if self.exponent is None or self.exponent < 0:
                raise FormatError("p-adic ball exponent must be >= 0")
        elif self.left is None or self.right is None:
            raise FormatError("product ball needs two factors")

    # ==================== CONSTRUCTION ====================

    @classmethod
    def open_ball(cls, family: Family, radius) -> "BallSet":
        return cls(family, radius=Fraction(radius), closed=False)

    @classmethod
    def closed_ball(cls, family: Family, radius) -> "BallSet":
        return cls(family, radius=Fraction(radius), closed=True)

    @classmethod
    def padic_ball(cls, m: int) -> "BallSet":
        return cls(Family.PADIC, exponent=m)

    @classmethod
    def pair(cls, left: "BallSet", right: "BallSet") -> "BallSet":
        return cls(Family.PRODUCT, left=left, right=right)

    @classmethod
    def whole(cls, spec: InstanceSpec) -> "BallSet":
        """The carrier itself as a ball."""
        if spec.family is Family.PADIC:
            return cls.padic_ball(spec.e)
        if spec.family is Family.PRODUCT:
            return cls.pair(cls.whole(spec.left), cls.whole(spec.right))
        return cls.open_ball(spec.family, spec.radius)

    # ==================== SET ALGEBRA ====================

    def contains(self, x: Any) -> bool:
        if self.family is Family.PADIC:
            return x.in_ball(self.exponent)
        if self.family is Family.PRODUCT:
            return self.left.contains(x[0]) and self.right.contains(x[1])
        return abs(x) <= self.radius if self.closed else abs(x) < self.radius

    def subset_of(self, other: "BallSet") -> bool:
        self._same_shape(other)
        if self.family is Family.PADIC:
            return self.exponent >= other.exponent
        if self.family is Family.PRODUCT:
            return self.left.subset_of(other.left) and self.right.subset_of(other.right)
        # closed rho inside open sigma needs rho < sigma; every other pairing rho <= sigma
        if self.closed and not other.closed:
            return self.radius < other.radius
        return self.radius <= other.radius

    def intersect(self, other: "BallSet") -> "BallSet":
        self._same_shape(other)
        if self.family is Family.PRODUCT:
            return BallSet.pair(self.left.intersect(other.left), self.right.intersect(other.right))
        return self if self.subset_of(other) else other

    def interior(self) -> "BallSet":
        """Open ball of the same radius; p-adic balls are already open."""
        if self.family is Family.PRODUCT:
            return BallSet.pair(self.left.interior(), self.right.interior())
        if self.family is Family.PADIC or not self.closed:
            return self
        return BallSet.open_ball(self.family, self.radius)

    def measure(self, spec: InstanceSpec) -> Fraction:
        if self.family is Family.PADIC:
            return Fraction(1, spec.p ** self.exponent)
        if self.family is Family.PRODUCT:
            return max(self.left.measure(spec.left), self.right.measure(spec.right))
        return self.radius

    # ==================== ENDOMORPHISMS ====================

    def image(self, endo: EndoSpec) -> "BallSet":
        """phi(B), exactly: scaling multiplies the radius, x -> px raises the exponent."""
        self._fits(endo)
        if self.family is Family.PADIC:
            return BallSet.padic_ball(self.exponent + 1)
        if self.family is Family.PRODUCT:
            return BallSet.pair(self.left.image(endo.left), self.right.image(endo.right))
        return BallSet(self.family, radius=self.radius * abs(endo.scale), closed=self.closed)

    def preimage(self, endo: EndoSpec, spec: InstanceSpec) -> "BallSet":
        """phi^-1(B) intersected with the carrier."""
        self._fits(endo)
        if self.family is Family.PADIC:
            return BallSet.padic_ball(max(spec.e, self.exponent - 1))
        if self.family is Family.PRODUCT:
            return BallSet.pair(
                self.left.preimage(endo.left, spec.left),
                self.right.preimage(endo.right, spec.right),
            )
        grown = BallSet(self.family, radius=self.radius / abs(endo.scale), closed=self.closed)
        return grown.intersect(BallSet.whole(spec))

    def power_image(self, endo: EndoSpec, spec: InstanceSpec, k: int) -> "BallSet":
        """phi^k(B) for k >= 0, (phi^-|k|)(B) within the carrier for k < 0."""
        ball = self
        for _ in range(abs(k)):
            ball = ball.image(endo) if k > 0 else ball.preimage(endo, spec)
        return ball

    # ==================== INSTANCE FACTS ====================

    def within(self, spec: InstanceSpec) -> bool:
        return self.subset_of(BallSet.whole(spec))

    def pairs_in_omega(self, spec: InstanceSpec) -> bool:
        """B x B inside Omega: |x + y| < r for all x, y in B."""
        if self.family is Family.PADIC:
            return True
        if self.family is Family.PRODUCT:
            return self.left.pairs_in_omega(spec.left) and self.right.pairs_in_omega(spec.right)
        if self.closed:
            return 2 * self.radius < spec.radius
        return 2 * self.radius <= spec.radius

    # ==================== SERIALIZATION ====================

    def to_dict(self) -> Dict[str, Any]:
        if self.family is Family.PADIC:
            return {"family": "padic", "exponent": self.exponent}
        if self.family is Family.PRODUCT:
            return {"family": "product", "left": self.left.to_dict(), "right": self.right.to_dict()}
        return {"family": self.family.value, "radius": str(self.radius), "closed": self.closed}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BallSet":
        try:
            family = Family(data["family"])
            if family is Family.PADIC:
                return cls.padic_ball(int(data["exponent"]))
            if family is Family.PRODUCT:
                return cls.pair(cls.from_dict(data["left"]), cls.from_dict(data["right"]))
            return cls(family, radius=Fraction(str(data["radius"])), closed=bool(data.get("closed", False)))
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as e:
            raise FormatError(f"Malformed ball {data!r}: {e}") from None

    def describe(self) -> str:
        if self.family is Family.PADIC:
            return f"p^{self.exponent}Z_p"
        if self.family is Family.PRODUCT:
            return f"{self.left.describe()} x {self.right.describe()}"
        return f"{'[' if self.closed else '('}|x| {'<=' if self.closed else '<'} {self.radius}{']' if self.closed else ')'}"

    # ==================== HELPERS ====================

    def _same_shape(self, other: "BallSet") -> None:
        if self.family is not other.family:
            raise FormatError(f"cannot compare a {self.family.value} ball with a {other.family.value} ball")

    def _fits(self, endo: EndoSpec) -> None:
        if endo.family is not self.family:
            raise FormatError(f"{endo.family.value} endomorphism applied to a {self.family.value} ball")


def cofinal_balls(spec: InstanceSpec, depth: int) -> List[BallSet]:
    """
    Monotone family of shrinking balls used as contraction targets:
    radius r/2^j on interval/arc, p^(e+j)Z_p on padic, componentwise on
    products; j = 1..depth.
    """
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    return [_ball_at(spec, j) for j in range(1, depth + 1)]


def _ball_at(spec: InstanceSpec, j: int) -> BallSet:
    if spec.family is Family.PADIC:
        return BallSet.padic_ball(spec.e + j)
    if spec.family is Family.PRODUCT:
        return BallSet.pair(_ball_at(spec.left, j), _ball_at(spec.right, j))
    return BallSet.open_ball(spec.family, spec.radius / 2 ** j)


def strong_ball(spec: InstanceSpec, n: int) -> BallSet:
    """
    A ball B with B^n inside the strong domain: every bracketing of a word
    of n entries from B is defined (open radius r/n; padic is a group).
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if spec.family is Family.PADIC:
        return BallSet.whole(spec)
    if spec.family is Family.PRODUCT:
        return BallSet.pair(strong_ball(spec.left, n), strong_ball(spec.right, n))
    return BallSet.open_ball(spec.family, spec.radius / n)

"""
Finite groups given by full multiplication tables.
Used as ambient groups for restrictions and as morphism targets.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from src.core.local_group import FiniteLocalGroup, read_json
from src.errors import FormatError, GroupAxiomError

Label = Hashable


@dataclass(frozen=True)
class FiniteGroup:
    """
    Group as an element list plus a Cayley table on indices.
    Validated on construction: closure, identity, inverses, associativity.
    """
    elements: Tuple[Label, ...]
    table: Tuple[Tuple[int, ...], ...]
    name: str = field(default="group", compare=False)
    _index: Dict[Label, int] = field(default_factory=dict, init=False, compare=False, repr=False)
    _identity: int = field(default=0, init=False, compare=False, repr=False)
    _inverse: Tuple[int, ...] = field(default=(), init=False, compare=False, repr=False)

    is_finite = True

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise FormatError("A group needs at least one element")
        index = {label: i for i, label in enumerate(self.elements)}
        if len(index) != n:
            raise FormatError("Duplicate group element labels")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise FormatError(f"Group table must be {n}x{n}")
        for row in self.table:
            for k in row:
                if not 0 <= k < n:
                    raise FormatError(f"Group table entry {k} out of range")
        object.__setattr__(self, "_index", index)

        identity = self._find_identity()
        object.__setattr__(self, "_identity", identity)
        object.__setattr__(self, "_inverse", self._find_inverses(identity))
        self._check_associative()

    def _find_identity(self) -> int:
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        raise GroupAxiomError(f"{self.name}: no two-sided identity")

    def _find_inverses(self, e: int) -> Tuple[int, ...]:
        n = len(self.elements)
        inverse = []
        for x in range(n):
            for y in range(n):
                if self.table[x][y] == e and self.table[y][x] == e:
                    inverse.append(y)
                    break
            else:
                raise GroupAxiomError(f"{self.name}: {self.elements[x]!r} has no inverse")
        return tuple(inverse)

    def _check_associative(self):
        t = self.table
        n = len(self.elements)
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                for z in range(n):
                    if t[xy][z] != t[x][t[y][z]]:
                        raise GroupAxiomError(
                            f"{self.name}: not associative at "
                            f"{(self.elements[x], self.elements[y], self.elements[z])}"
                        )

    # ==================== ACCESS ====================

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def contains(self, x: Any) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise FormatError(f"{x!r} is not an element of {self.name}") from None

    @property
    def identity(self) -> Label:
        return self.elements[self._identity]

    def product(self, x: Label, y: Label) -> Label:
        return self.elements[self.table[self.index(x)][self.index(y)]]

    def inverse(self, x: Label) -> Label:
        return self.elements[self._inverse[self.index(x)]]

    def power(self, x: Label, n: int) -> Label:
        result = self.identity
        base = x if n >= 0 else self.inverse(x)
        for _ in range(abs(n)):
            result = self.product(result, base)
        return result

    def generated_subgroup(self, gens: Sequence[Label]) -> frozenset:
        """Closure of ``gens`` under the product (finite, so also under inverses)."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.product(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def as_local_group(self) -> FiniteLocalGroup:
        """The group itself viewed as a local group with total Omega."""
        from src.core.constructions import from_group_restriction
        return from_group_restriction(self, self.elements)

    # ==================== SERIALIZATION ====================

    def to_dict(self) -> Dict[str, Any]:
        return {
            "elements": list(self.elements),
            "table": [[self.elements[k] for k in row] for row in self.table],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], name: str = "group") -> "FiniteGroup":
        try:
            elements = list(data["elements"])
            rows = data["table"]
        except (KeyError, TypeError) as e:
            raise FormatError(f"Malformed group table: {e}") from None
        index = {label: i for i, label in enumerate(elements)}
        try:
            table = tuple(tuple(index[label] for label in row) for row in rows)
        except (KeyError, TypeError) as e:
            raise FormatError(f"Group table mentions unknown element {e}") from None
        return cls(tuple(elements), table, name=data.get("name", name))

    @classmethod
    def from_function(cls, elements: Sequence[Label], op, name: str = "group") -> "FiniteGroup":
        elements = tuple(elements)
        index = {label: i for i, label in enumerate(elements)}
        table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        return cls(elements, table, name=name)


def cyclic(n: int) -> FiniteGroup:
    """Z/n with elements 0..n-1."""
    if n < 1:
        raise FormatError("cyclic group order must be positive")
    return FiniteGroup.from_function(range(n), lambda a, b: (a + b) % n, name=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """
    Dihedral group of order 2n.
    Rotations are labelled r0..r{n-1}, reflections s0..s{n-1}.
    """
    if n < 1:
        raise FormatError("dihedral group needs n >= 1")
    labels: List[str] = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]

    def decode(label: str) -> Tuple[int, int]:
        return int(label[1:]), 1 if label[0] == "s" else 0

    def op(a: str, b: str) -> str:
        k1, f1 = decode(a)
        k2, f2 = decode(b)
        k = (k1 + (-k2 if f1 else k2)) % n
        return ("s" if f1 ^ f2 else "r") + str(k)

    return FiniteGroup.from_function(labels, op, name=f"D{n}")


def load_group(path: str) -> FiniteGroup:
    return FiniteGroup.from_dict(read_json(path), name=Path(path).stem)

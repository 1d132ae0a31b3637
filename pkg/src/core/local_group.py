"""
Finite local groups as data.

A local group is a carrier with an identity, a partial product whose
domain is Omega and a partial inversion whose domain is Lambda.  Elements
are user labels; internally every label has a dense integer index and the
tables are stored densely with ``UNDEFINED`` for missing entries.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import (
    Any, Dict, Hashable, Iterable, Iterator, List, Optional, Protocol, Sequence, Tuple,
    runtime_checkable,
)

from src.errors import FormatError

Label = Hashable
UNDEFINED = -1


@runtime_checkable
class LocalGroupView(Protocol):
    """Uniform interface shared by finite tables, groups and exact instances."""

    is_finite: bool

    @property
    def identity(self) -> Any: ...

    def product(self, x: Any, y: Any) -> Optional[Any]: ...

    def inverse(self, x: Any) -> Optional[Any]: ...

    def contains(self, x: Any) -> bool: ...


@dataclass(frozen=True)
class FiniteLocalGroup:
    """
    Finite local group with dense partial tables.

    ``product_table[i][j]`` is the index of ``x_i * x_j`` or ``UNDEFINED``;
    ``inverse_table[i]`` is the index of ``x_i^-1`` or ``UNDEFINED``.
    """
    carrier: Tuple[Label, ...]
    identity: Label
    product_table: Tuple[Tuple[int, ...], ...]
    inverse_table: Tuple[int, ...]
    name: str = field(default="", compare=False)
    # Ambient group when the table was cut out of one (oracle use only)
    ambient: Any = field(default=None, compare=False, repr=False)
    _index: Dict[Label, int] = field(default_factory=dict, init=False, compare=False, repr=False)

    is_finite = True

    def __post_init__(self):
        n = len(self.carrier)
        if n == 0:
            raise FormatError("Carrier must be nonempty")
        index = {}
        for i, label in enumerate(self.carrier):
            if label is None:
                raise FormatError("None is not a valid element label")
            if label in index:
                raise FormatError(f"Duplicate carrier label {label!r}")
            index[label] = i
        if self.identity not in index:
            raise FormatError(f"Identity {self.identity!r} not in carrier")
        if len(self.product_table) != n or any(len(row) != n for row in self.product_table):
            raise FormatError(f"Product table must be {n}x{n}")
        if len(self.inverse_table) != n:
            raise FormatError(f"Inverse table must have {n} entries")
        for row in self.product_table:
            for k in row:
                if k != UNDEFINED and not 0 <= k < n:
                    raise FormatError(f"Product entry {k} out of range")
        for k in self.inverse_table:
            if k != UNDEFINED and not 0 <= k < n:
                raise FormatError(f"Inverse entry {k} out of range")
        object.__setattr__(self, "_index", index)

    # ==================== CONSTRUCTION ====================

    @classmethod
    def from_tables(
        cls,
        carrier: Sequence[Label],
        identity: Label,
        products: Iterable[Tuple[Label, Label, Label]],
        inverses: Iterable[Tuple[Label, Label]] = (),
        name: str = "",
        ambient: Any = None,
    ) -> "FiniteLocalGroup":
        """Build from label triples ``(x, y, xy)`` and pairs ``(x, x^-1)``."""
        carrier = tuple(carrier)
        index = {label: i for i, label in enumerate(carrier)}

        def idx(label: Label) -> int:
            try:
                return index[label]
            except (KeyError, TypeError):
                raise FormatError(f"Label {label!r} not in carrier") from None

        n = len(carrier)
        table = [[UNDEFINED] * n for _ in range(n)]
        for x, y, z in products:
            i, j, k = idx(x), idx(y), idx(z)
            if table[i][j] not in (UNDEFINED, k):
                raise FormatError(f"Conflicting products for ({x!r}, {y!r})")
            table[i][j] = k
        inv = [UNDEFINED] * n
        for x, xi in inverses:
            i, k = idx(x), idx(xi)
            if inv[i] not in (UNDEFINED, k):
                raise FormatError(f"Conflicting inverses for {x!r}")
            inv[i] = k
        return cls(carrier, identity, tuple(tuple(r) for r in table), tuple(inv), name, ambient)

    # ==================== ACCESS ====================

    def __len__(self) -> int:
        return len(self.carrier)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.carrier)

    def __contains__(self, x: Any) -> bool:
        return self.contains(x)

    def contains(self, x: Any) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise FormatError(f"Label {x!r} not in carrier") from None

    @property
    def identity_index(self) -> int:
        return self._index[self.identity]

    def product(self, x: Label, y: Label) -> Optional[Label]:
        k = self.product_table[self.index(x)][self.index(y)]
        return None if k == UNDEFINED else self.carrier[k]

    def inverse(self, x: Label) -> Optional[Label]:
        k = self.inverse_table[self.index(x)]
        return None if k == UNDEFINED else self.carrier[k]

    def in_omega(self, x: Label, y: Label) -> bool:
        return self.product_table[self.index(x)][self.index(y)] != UNDEFINED

    def in_lambda(self, x: Label) -> bool:
        return self.inverse_table[self.index(x)] != UNDEFINED

    def omega(self) -> List[Tuple[Label, Label]]:
        """Domain of the product, in index order."""
        return [
            (self.carrier[i], self.carrier[j])
            for i, row in enumerate(self.product_table)
            for j, k in enumerate(row)
            if k != UNDEFINED
        ]

    def lam(self) -> List[Label]:
        """Domain of the inversion, in index order."""
        return [self.carrier[i] for i, k in enumerate(self.inverse_table) if k != UNDEFINED]

    def non_identity(self) -> List[Label]:
        return [x for x in self.carrier if x != self.identity]

    def sort_key(self, x: Label) -> int:
        return self.index(x)

    # ==================== SERIALIZATION ====================

    def to_dict(self) -> Dict[str, Any]:
        return {
            "carrier": list(self.carrier),
            "identity": self.identity,
            "product": [
                [self.carrier[i], self.carrier[j], self.carrier[k]]
                for i, row in enumerate(self.product_table)
                for j, k in enumerate(row)
                if k != UNDEFINED
            ],
            "inverse": [
                [self.carrier[i], self.carrier[k]]
                for i, k in enumerate(self.inverse_table)
                if k != UNDEFINED
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], name: str = "") -> "FiniteLocalGroup":
        try:
            carrier = data["carrier"]
            identity = data["identity"]
            products = [tuple(t) for t in data.get("product", [])]
            inverses = [tuple(t) for t in data.get("inverse", [])]
        except (KeyError, TypeError) as e:
            raise FormatError(f"Malformed local group: {e}") from None
        if not isinstance(carrier, list):
            raise FormatError("carrier must be a list")
        if any(len(t) != 3 for t in products) or any(len(t) != 2 for t in inverses):
            raise FormatError("product entries are [x, y, xy], inverse entries are [x, x^-1]")
        return cls.from_tables(carrier, identity, products, inverses, name=name or data.get("name", ""))

    def to_json(self) -> str:
        """Stable text form: one table entry per line."""
        return dumps_rows(self.to_dict(), ("product", "inverse"))


def dumps_rows(data: Dict[str, Any], row_keys: Sequence[str]) -> str:
    """JSON with the listed keys written one row per line; byte-stable."""
    lines = ["{"]
    items = list(data.items())
    for n, (key, value) in enumerate(items):
        comma = "," if n < len(items) - 1 else ""
        if key in row_keys and isinstance(value, list) and value:
            lines.append(f"  {json.dumps(key)}: [")
            for m, row in enumerate(value):
                row_comma = "," if m < len(value) - 1 else ""
                lines.append(f"    {json.dumps(row)}{row_comma}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_json(path: str) -> Any:
    """Read a JSON document, turning I/O and syntax problems into FormatError."""
    if path is None:
        raise FormatError("no input file given")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise FormatError(f"Cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"Invalid JSON in {path}: {e}") from None


def load_local_group(path: str) -> FiniteLocalGroup:
    """Load a local group from its JSON file."""
    return FiniteLocalGroup.from_dict(read_json(path), name=Path(path).stem)


def dump_local_group(G: FiniteLocalGroup, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(G.to_json())

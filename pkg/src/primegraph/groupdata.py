"""Character degree sets and vertex data for the group families we scan."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

from .numtheory import FactoredInteger, factor, is_prime, prime_power_part, prime_support

DATA_ENV_VAR = "PRIMEGRAPH_DATA"
SOURCES = ("paper-quoted", "external-table")
KINDS = ("simple", "solvable", "other")


class DataError(ValueError):
    """Malformed bundled data."""


class DataGapError(LookupError):
    """A required table entry is missing."""


class UnknownGroupError(LookupError):
    def __init__(self, group_id: str, available: Iterable[str]):
        self.group_id = group_id
        self.available = sorted(available)
        super().__init__(f"unknown group id {group_id!r}; available: {', '.join(self.available)}")


@dataclass(frozen=True)
class DegreeSet:
    """cd(G): sorted, duplicate-free character degrees containing 1."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(self.degrees)
        if any(isinstance(d, bool) or not isinstance(d, int) for d in degs):
            raise TypeError(f"degrees must be integers: {degs}")
        if any(d < 1 for d in degs):
            raise ValueError(f"degrees must be positive: {degs}")
        if list(degs) != sorted(set(degs)):
            raise ValueError(f"degrees must be sorted and distinct: {degs}")
        if 1 not in degs:
            raise ValueError(f"degree set must contain 1: {degs}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, values: Iterable[int]) -> "DegreeSet":
        return cls(tuple(sorted(set(values))))

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, item) -> bool:
        return item in self.degrees

    def rho(self) -> list[int]:
        """Primes dividing some degree."""
        primes: set[int] = set()
        for d in self.degrees:
            primes.update(prime_support(d))
        return sorted(primes)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.degrees)) + "}"


# --- group descriptors -------------------------------------------------------


@dataclass(frozen=True)
class Psl2:
    q: int

    def __post_init__(self) -> None:
        if self.q < 4 or prime_power_part(self.q) is None:
            raise ValueError(f"PSL2 needs a prime power q >= 4, got {self.q}")
        if self.q == 5:
            # PSL2(5) and PSL2(4) are isomorphic; keep the even-q form.
            object.__setattr__(self, "q", 4)

    def __str__(self) -> str:
        return f"PSL2({self.q})"


@dataclass(frozen=True)
class Named:
    id: str

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True)
class Product:
    left: "GroupDescriptor"
    right: "GroupDescriptor"

    def __str__(self) -> str:
        return f"{self.left} x {self.right}"


@dataclass(frozen=True)
class SuzukiPartial:
    q_squared: int

    def __post_init__(self) -> None:
        pp = prime_power_part(self.q_squared) if self.q_squared >= 2 else None
        if pp is None or pp[0] != 2 or pp[1] < 3 or pp[1] % 2 == 0:
            raise ValueError(f"Suzuki groups need q^2 = 2^(2m+1) with m >= 1, got {self.q_squared}")

    def __str__(self) -> str:
        return f"Sz({self.q_squared})"


@dataclass(frozen=True)
class Psl3Partial:
    epsilon: int
    q: int

    def __post_init__(self) -> None:
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.q <= 2 or self.q == 4 or prime_power_part(self.q) is None:
            raise ValueError(f"PSL3 vertex data needs a prime power q > 2, q != 4, got {self.q}")

    def __str__(self) -> str:
        return f"{'PSL3' if self.epsilon == 1 else 'PSU3'}({self.q})"


GroupDescriptor = Union[Psl2, Named, Product, SuzukiPartial, Psl3Partial]
PARTIAL_TYPES = (SuzukiPartial, Psl3Partial)


def is_partial(desc: GroupDescriptor) -> bool:
    if isinstance(desc, Product):
        return is_partial(desc.left) or is_partial(desc.right)
    return isinstance(desc, PARTIAL_TYPES)


def descriptor_to_dict(desc: GroupDescriptor) -> dict:
    if isinstance(desc, Psl2):
        return {"family": "PSL2", "q": desc.q}
    if isinstance(desc, Named):
        return {"family": "named", "id": desc.id}
    if isinstance(desc, Product):
        return {"family": "product", "left": descriptor_to_dict(desc.left),
                "right": descriptor_to_dict(desc.right)}
    if isinstance(desc, SuzukiPartial):
        return {"family": "Suzuki", "q_squared": desc.q_squared}
    return {"family": "PSL3", "epsilon": desc.epsilon, "q": desc.q}


# --- named-group table -------------------------------------------------------


@dataclass(frozen=True)
class NamedGroupEntry:
    id: str
    degree_set: DegreeSet
    source: str
    kind: str = "other"
    notes: str = ""

    @property
    def solvable(self) -> bool:
        return self.kind == "solvable"


@dataclass(frozen=True)
class NamedGroupTable:
    entries: Mapping[str, NamedGroupEntry] = field(default_factory=dict)
    path: Optional[str] = None

    def __contains__(self, group_id: str) -> bool:
        return group_id in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def ids(self) -> list[str]:
        return list(self.entries)

    def get(self, group_id: str) -> NamedGroupEntry:
        try:
            return self.entries[group_id]
        except KeyError:
            raise UnknownGroupError(group_id, self.entries) from None


def parse_named_groups(text: str, origin: str = "<string>") -> NamedGroupTable:
    """Parse ``id;degrees;source[;kind[;notes]]`` records, one per line."""
    entries: dict[str, NamedGroupEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(";", 4)]
        where = f"{origin}:{lineno}"
        if len(fields) < 3:
            raise DataError(f"{where}: expected id;degrees;source, got {line!r}")
        gid, degs, source = fields[:3]
        kind = fields[3] if len(fields) > 3 and fields[3] else "other"
        notes = fields[4] if len(fields) > 4 else ""
        if not gid:
            raise DataError(f"{where}: empty id")
        if gid in entries:
            raise DataError(f"{where}: duplicate id {gid!r}")
        if source not in SOURCES:
            raise DataError(f"{where}: unknown source tag {source!r}")
        if kind not in KINDS:
            raise DataError(f"{where}: unknown kind {kind!r}")
        try:
            values = [int(tok) for tok in degs.split(",")]
            degree_set = DegreeSet(tuple(values))
        except (ValueError, TypeError) as exc:
            raise DataError(f"{where}: bad degree list {degs!r}: {exc}") from None
        entries[gid] = NamedGroupEntry(gid, degree_set, source, kind, notes)
    return NamedGroupTable(entries, origin)


def load_named_groups(path: Union[str, Path, None] = None) -> NamedGroupTable:
    if path is None:
        text = resources.files("primegraph").joinpath("data/named_groups.txt").read_text("utf-8")
        return parse_named_groups(text, "named_groups.txt")
    path = Path(path)
    return parse_named_groups(path.read_text("utf-8"), str(path))


@lru_cache(maxsize=None)
def _cached_table(path: Optional[str], stamp: Optional[tuple[int, int]]) -> NamedGroupTable:
    # stamp is part of the key so an edited override file is reloaded
    return load_named_groups(path)


def default_table() -> NamedGroupTable:
    """The bundled table, or the file named by $PRIMEGRAPH_DATA. Loaded once per file version."""
    path = os.environ.get(DATA_ENV_VAR) or None
    stamp = None
    if path is not None:
        try:
            st = os.stat(path)
            stamp = (st.st_mtime_ns, st.st_size)
        except OSError:
            pass
    return _cached_table(path, stamp)


def named_degrees(group_id: str, table: Optional[NamedGroupTable] = None) -> DegreeSet:
    table = table if table is not None else default_table()
    return table.get(group_id).degree_set


# --- degree formulas ---------------------------------------------------------


def psl2_degrees(q: int) -> DegreeSet:
    """cd(PSL2(q)) for a prime power q >= 4."""
    q = Psl2(q).q
    if q % 2 == 0:
        return DegreeSet((1, q - 1, q, q + 1))
    eps = -1 if (q - 1) // 2 % 2 else 1
    return DegreeSet.of((1, (q + eps) // 2, q - 1, q, q + 1))


def product_degrees(a: DegreeSet, b: DegreeSet) -> DegreeSet:
    """cd(H x K) = {x*y}."""
    return DegreeSet.of(x * y for x in a for y in b)


def degrees(desc: GroupDescriptor, table: Optional[NamedGroupTable] = None) -> DegreeSet:
    """Full degree set of an exact descriptor; partial families are rejected."""
    if isinstance(desc, Psl2):
        return psl2_degrees(desc.q)
    if isinstance(desc, Named):
        return named_degrees(desc.id, table)
    if isinstance(desc, Product):
        return product_degrees(degrees(desc.left, table), degrees(desc.right, table))
    raise ValueError(f"{desc} only carries partial vertex data, not a degree set")


@dataclass(frozen=True)
class PartialVertexData:
    """Vertex set plus a certified clique; the rest of the adjacency is unknown."""

    vertices: tuple[int, ...]
    complete_on: tuple[int, ...]
    partial: bool = True


def suzuki_vertices(q_squared: int) -> PartialVertexData:
    SuzukiPartial(q_squared)
    odd = set(prime_support(q_squared - 1)) | set(prime_support(q_squared**2 + 1))
    return PartialVertexData(tuple(sorted(odd | {2})), tuple(sorted(odd)))


def psl3_vertices(epsilon: int, q: int) -> PartialVertexData:
    desc = Psl3Partial(epsilon, q)
    p = prime_power_part(q)[0]
    rest = set(prime_support((q * q - 1) * (q * q + desc.epsilon * q + 1))) - {p}
    return PartialVertexData(tuple(sorted(rest | {p})), tuple(sorted(rest)))


def partial_vertex_data(desc: GroupDescriptor) -> PartialVertexData:
    if isinstance(desc, SuzukiPartial):
        return suzuki_vertices(desc.q_squared)
    if isinstance(desc, Psl3Partial):
        return psl3_vertices(desc.epsilon, desc.q)
    raise ValueError(f"{desc} is not a partial family")


def psl2_even_maximal_indices(f: int) -> list[FactoredInteger]:
    """Indices of maximal subgroups of PSL2(2^f), each factored.

    The last block has one entry per prime n dividing f, with a = f/n.
    """
    if f < 2:
        raise ValueError(f"f must be >= 2, got {f}")
    q = 2**f
    values = [q // 2 * (q + 1), q // 2 * (q - 1), q + 1]
    for n in range(2, f + 1):
        if f % n == 0 and is_prime(n):
            a = f // n
            values.append(q * (q * q - 1) // (2**a * (4**a - 1)))
    return [factor(v) for v in values]


# --- textual specs -----------------------------------------------------------


def parse_spec(text: str, table: Optional[NamedGroupTable] = None) -> GroupDescriptor:
    """Parse ``PSL2:q``, ``Sz:q2``, ``PSL3:q``, ``PSU3:q``, ``product:A,B`` or a named id.

    Exact table ids win over family prefixes, so ids that contain a colon work.
    """
    table = table if table is not None else default_table()
    text = text.strip()
    if text in table:
        return Named(text)
    head, sep, rest = text.partition(":")
    if sep:
        key = head.lower()
        if key == "product":
            parts = [p for p in rest.split(",")]
            if len(parts) < 2 or any(not p.strip() for p in parts):
                raise ValueError(f"product needs at least two comma-separated operands: {text!r}")
            descs = [parse_spec(p, table) for p in parts]
            out = descs[0]
            for d in descs[1:]:
                out = Product(out, d)
            return out
        families = {"psl2": Psl2, "sz": SuzukiPartial,
                    "psl3": lambda q: Psl3Partial(1, q), "psu3": lambda q: Psl3Partial(-1, q)}
        if key in families:
            try:
                value = int(rest)
            except ValueError:
                raise ValueError(f"expected an integer parameter in {text!r}") from None
            return families[key](value)
    raise UnknownGroupError(text, table.ids())

"""Prime graphs, degree graphs and the structural predicates we classify them by."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .groupdata import DegreeSet, PartialVertexData
from .numtheory import is_prime, prime_support

MAX_ISO_VERTICES = 8


class ContractError(ValueError):
    """A query that is not meaningful for the given graph (e.g. on partial data)."""


class _Graph:
    """Undirected simple graph over sorted integer labels.

    Adjacency is a tuple of bitmasks indexed by vertex position.
    """

    partial = False

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        verts = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in index or v not in index:
                raise ValueError(f"edge {u}-{v} uses a vertex outside {list(verts)}")
            i, j = index[u], index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.vertices = verts
        self.adj = tuple(adj)
        self._index = index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: int) -> int:
        return self._index[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self._index[u]] >> self._index[v] & 1)

    def neighbours(self, v: int) -> list[int]:
        mask = self.adj[self._index[v]]
        return [w for j, w in enumerate(self.vertices) if mask >> j & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[self._index[v]]).count("1")

    def degree_sequence(self) -> list[int]:
        return sorted(bin(m).count("1") for m in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        out = []
        for i, u in enumerate(self.vertices):
            mask = self.adj[i] >> (i + 1)
            j = i + 1
            while mask:
                if mask & 1:
                    out.append((u, self.vertices[j]))
                mask >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def __eq__(self, other) -> bool:
        return (type(self) is type(other) and self.vertices == other.vertices
                and self.adj == other.adj and self.partial == other.partial)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.vertices, self.adj, self.partial))

    def __repr__(self) -> str:
        flag = ", partial=True" if self.partial else ""
        return f"{type(self).__name__}({list(self.vertices)}, {self.edges()}{flag})"


class PrimeGraph(_Graph):
    """Graph on primes; ``partial`` graphs only certify a subset of their edges."""

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = (),
                 partial: bool = False):
        super().__init__(vertices, edges)
        bad = [v for v in self.vertices if not is_prime(v)]
        if bad:
            raise ValueError(f"prime graph vertices must be prime: {bad}")
        self.partial = bool(partial)


class DegreeGraph(_Graph):
    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        super().__init__(vertices, edges)
        if any(v <= 1 for v in self.vertices):
            raise ValueError("degree graph vertices must be integers > 1")


Graph = Union[PrimeGraph, DegreeGraph]


def _require_exact(g: _Graph, what: str) -> None:
    if g.partial:
        raise ContractError(f"{what} is undefined on a partial graph")


# --- construction ------------------------------------------------------------


def build_prime_graph(d: DegreeSet) -> PrimeGraph:
    """Delta(G): u ~ v iff u*v divides some degree."""
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for deg in d:
        primes = prime_support(deg)
        verts.update(primes)
        edges.update(itertools.combinations(primes, 2))
    return PrimeGraph(verts, edges)


def build_degree_graph(d: DegreeSet) -> DegreeGraph:
    """Gamma(G): nontrivial degrees, a ~ b iff gcd(a, b) > 1."""
    verts = [x for x in d if x > 1]
    edges = [(a, b) for a, b in itertools.combinations(verts, 2) if gcd(a, b) > 1]
    return DegreeGraph(verts, edges)


def partial_graph(data: PartialVertexData) -> PrimeGraph:
    """Lower-bound prime graph: the certified clique and nothing else."""
    return PrimeGraph(data.vertices, itertools.combinations(data.complete_on, 2), partial=True)


# --- queries -----------------------------------------------------------------


def _least_triangle(g: _Graph) -> Optional[tuple[int, int, int]]:
    n = len(g)
    for i in range(n):
        for j in range(i + 1, n):
            if not g.adj[i] >> j & 1:
                continue
            common = g.adj[i] & g.adj[j] & ~((1 << (j + 1)) - 1)
            if common:
                k = (common & -common).bit_length() - 1
                return g.vertices[i], g.vertices[j], g.vertices[k]
    return None


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least triangle, or None.

    On a partial graph a found triangle is conclusive but absence is not,
    so a missing triangle raises ContractError there.
    """
    tri = _least_triangle(g)
    if tri is None and g.partial:
        raise ContractError("no certified triangle; absence is inconclusive on a partial "
                            "graph, use has_triangle_lower_bound")
    return tri


def has_triangle_lower_bound(g: Graph) -> bool:
    return _least_triangle(g) is not None


def connected_components(g: Graph) -> list[list[int]]:
    _require_exact(g, "connected_components")
    seen = 0
    comps = []
    for start in range(len(g)):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in range(len(g)):
                if frontier >> i & 1:
                    nxt |= g.adj[i]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append([v for i, v in enumerate(g.vertices) if comp >> i & 1])
    return comps


def _is_connected(g: _Graph) -> bool:
    return len(g) > 0 and len(connected_components(g)) == 1


def complete_bipartite_parts(g: Graph) -> Optional[tuple[int, int]]:
    """(m, n) with m <= n if g is K_{m,n} (m >= 1), else None."""
    _require_exact(g, "complete_bipartite_parts")
    n = len(g)
    if n < 2:
        return None
    full = (1 << n) - 1
    # In K_{m,n} the side containing vertex 0 is exactly the non-neighbours of vertex 0.
    side = full & ~g.adj[0]
    other = full & ~side
    if not other:
        return None
    for i in range(n):
        expected = other if side >> i & 1 else side
        if g.adj[i] != expected:
            return None
    m, k = bin(side).count("1"), bin(other).count("1")
    return (min(m, k), max(m, k))


@dataclass(frozen=True)
class ShapeFlags:
    is_cycle: bool
    is_tree: bool
    is_path: bool
    complete_bipartite: Optional[tuple[int, int]]

    def to_dict(self) -> dict:
        return {"is_cycle": self.is_cycle, "is_tree": self.is_tree, "is_path": self.is_path,
                "complete_bipartite": list(self.complete_bipartite) if self.complete_bipartite else None}


def shape_predicates(g: Graph) -> ShapeFlags:
    _require_exact(g, "shape_predicates")
    n = len(g)
    connected = _is_connected(g)
    degs = g.degree_sequence()
    is_cycle = connected and n >= 3 and all(d == 2 for d in degs)
    is_tree = connected and g.edge_count() == n - 1
    is_path = is_tree and all(d <= 2 for d in degs)
    return ShapeFlags(is_cycle, is_tree, is_path, complete_bipartite_parts(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism test for graphs on at most 8 vertices."""
    _require_exact(g1, "is_isomorphic")
    _require_exact(g2, "is_isomorphic")
    for g in (g1, g2):
        if len(g) > MAX_ISO_VERTICES:
            raise ContractError(f"isomorphism test limited to {MAX_ISO_VERTICES} vertices, got {len(g)}")
    if len(g1) != len(g2) or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    n = len(g1)
    deg1 = [bin(m).count("1") for m in g1.adj]
    deg2 = [bin(m).count("1") for m in g2.adj]
    for perm in itertools.permutations(range(n)):
        if any(deg1[i] != deg2[perm[i]] for i in range(n)):
            continue
        if all((g1.adj[i] >> j & 1) == (g2.adj[perm[i]] >> perm[j] & 1)
               for i in range(n) for j in range(i + 1, n)):
            return True
    return False


class FigureA(enum.Enum):
    FIRST = "First"
    SECOND = "Second"


# K_{2,3}: the two degree-3 vertices 2 and 3 joined to each of 5, 7, 11.
FIGURE_A_FIRST = PrimeGraph([2, 3, 5, 7, 11], [(2, 5), (2, 7), (2, 11), (3, 5), (3, 7), (3, 11)])
# an isolated vertex plus two disjoint edges
FIGURE_A_SECOND = PrimeGraph([2, 3, 5, 7, 11], [(3, 7), (5, 11)])


def figure_a_match(g: Graph) -> Optional[FigureA]:
    _require_exact(g, "figure_a_match")
    if len(g) != 5:
        return None
    if is_isomorphic(g, FIGURE_A_FIRST):
        return FigureA.FIRST
    if is_isomorphic(g, FIGURE_A_SECOND):
        return FigureA.SECOND
    return None


# --- serialization -----------------------------------------------------------


def to_dot(g: Graph, name: str = "G") -> str:
    if not len(g) and not g.partial:
        return f"graph {name} {{ }}\n"
    lines = [f"graph {name} {{"]
    if g.partial:
        lines.append("  // partial: edges are a certified lower bound")
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges()],
            "partial": bool(g.partial)}


def prime_graph_from_json(obj: dict) -> PrimeGraph:
    edges = [tuple(e) for e in obj.get("edges", [])]
    for e in edges:
        if len(e) != 2:
            raise ValueError(f"edge must have two endpoints: {list(e)}")
    verts = list(obj.get("vertices", [])) + [v for e in edges for v in e]
    return PrimeGraph(verts, edges, bool(obj.get("partial", False)))

"""Core graph types and elementary operations.

Vertices are dense integer indices 0..vertex_count-1 and edges are
unordered pairs stored as sorted tuples, so every structure has one
canonical in-memory form and equality is plain value equality.  The
public types are:

* ``Graph``: immutable simple graph.
* ``MultiGraph``: immutable multigraph with per-pair edge multiplicities,
  used for the parallel-edge expansion oracle.
* ``FamilyParams``: the integer pair (n, m) with 0 < m < n that fixes the
  threshold n/m used everywhere.
* ``Bipartition``: the two color classes of a tree, with the convention
  that side_a is never smaller than side_b.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping


class CapacityError(RuntimeError):
    """Raised when an input exceeds a configured exhaustive-search cap."""


def resolve_cap(explicit, env_name: str, default: int) -> int:
    """Pick a search cap: explicit argument, else environment, else default."""
    if explicit is not None:
        return int(explicit)
    value = os.environ.get(env_name)
    if value is not None:
        return int(value)
    return default


def ordered_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range or unordered")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as bitmasks, for subset-enumeration loops."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        count = 0
        for a, b in self.edges:
            if v in (a, b):
                count += 1
        return count

    def has_edge(self, u: int, v: int) -> bool:
        return ordered_edge(u, v) in self.edges

    def without_edge(self, u: int, v: int) -> "Graph":
        edge = ordered_edge(u, v)
        if edge not in self.edges:
            raise ValueError(f"edge {edge} not in graph")
        return Graph(self.vertex_count, self.edges - {edge})

    def spanning_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Same vertex set, edges restricted to the given subset."""
        chosen = frozenset(ordered_edge(u, v) for u, v in edges)
        missing = chosen - self.edges
        if missing:
            raise ValueError(f"edges {sorted(missing)} not in graph")
        return Graph(self.vertex_count, chosen)

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        return len(_reachable(self.adjacency(), 0)) == self.vertex_count

    def is_tree(self) -> bool:
        return self.edge_count == self.vertex_count - 1 and self.is_connected()

    def _check_vertex(self, v: int):
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} out of range")


def build_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Normalize an edge list into a Graph.

    Duplicate edges (in either orientation) collapse to one.  Loops and
    out-of-range endpoints are rejected with the offending pair named.
    """
    edges = set()
    for u, v in edge_list:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        edges.add(ordered_edge(u, v))
    return Graph(vertex_count, frozenset(edges))


@dataclass(frozen=True)
class MultiGraph:
    """Immutable multigraph: unordered pairs with positive multiplicities."""

    vertex_count: int
    multiplicities: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = {}
        for pair, mult in self.multiplicities.items():
            u, v = ordered_edge(*pair)
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u and v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if mult <= 0:
                raise ValueError(f"multiplicity of ({u}, {v}) must be positive")
            normalized[(u, v)] = normalized.get((u, v), 0) + int(mult)
        object.__setattr__(self, "multiplicities", MappingProxyType(normalized))

    def multiplicity(self, u: int, v: int) -> int:
        return self.multiplicities.get(ordered_edge(u, v), 0)

    def degree(self, v: int) -> int:
        total = 0
        for (a, b), mult in self.multiplicities.items():
            if v in (a, b):
                total += mult
        return total

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.multiplicities)


@dataclass(frozen=True)
class FamilyParams:
    """The ratio parameters (n, m) with 0 < m < n.

    The quotient n/m is the upper degree bound of the fractional factors
    under study and the slope of the isolated-vertex condition.
    """

    n: int
    m: int

    def __post_init__(self):
        if not (0 < self.m < self.n):
            raise ValueError(f"need 0 < m < n, got n={self.n}, m={self.m}")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.n, self.m)

    def allows_circuit(self, half_length: int) -> bool:
        """Whether an odd circuit on 2 * half_length + 1 vertices is admitted.

        A circuit that long stays compatible with the factor bounds exactly
        when half_length * (n - m) < m.
        """
        return half_length >= 1 and half_length * (self.n - self.m) < self.m


@dataclass(frozen=True)
class Bipartition:
    """Color classes of a tree; side_a is at least as large as side_b."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    def __post_init__(self):
        if len(self.side_b) > len(self.side_a):
            raise ValueError("side_a must not be smaller than side_b")
        if not self.side_b:
            raise ValueError("side_b must be nonempty")
        if self.side_a & self.side_b:
            raise ValueError("sides must be disjoint")

    def swapped(self) -> "Bipartition":
        """The other orientation; only meaningful when the sides tie."""
        if len(self.side_a) != len(self.side_b):
            raise ValueError("sides differ in size; orientation is forced")
        return Bipartition(self.side_b, self.side_a)


def iso_count(graph: Graph, removed: Iterable[int]) -> int:
    """Number of vertices isolated after deleting the given vertex set.

    A vertex counts when it is outside the removed set and every neighbor
    it has lies inside it; vertices of degree 0 therefore always count.
    """
    removed_set = frozenset(removed)
    for v in removed_set:
        if not (0 <= v < graph.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    adj = graph.adjacency()
    count = 0
    for v in graph.vertices():
        if v not in removed_set and adj[v] <= removed_set:
            count += 1
    return count


def _reachable(adj: list[set[int]], start: int) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def components(graph: Graph) -> list[tuple[frozenset[int], Graph]]:
    """Connected components in ascending order of smallest vertex.

    Each entry pairs the original vertex set with the induced subgraph,
    relabeled order-preservingly onto 0..k-1.
    """
    adj = graph.adjacency()
    seen = set()
    result = []
    for start in graph.vertices():
        if start in seen:
            continue
        comp = _reachable(adj, start)
        seen |= comp
        ordered = sorted(comp)
        index = {v: i for i, v in enumerate(ordered)}
        local_edges = frozenset(
            ordered_edge(index[u], index[v]) for u, v in graph.edges if u in comp
        )
        result.append((frozenset(comp), Graph(len(ordered), local_edges)))
    return result


def induced_vertex_map(component_vertices: frozenset[int]) -> dict[int, int]:
    """Order-preserving relabeling used by :func:`components`."""
    return {v: i for i, v in enumerate(sorted(component_vertices))}


def bipartition(tree: Graph) -> Bipartition:
    """Two-color a tree by parity of distance from vertex 0.

    The larger color class becomes side_a; on a tie the side containing
    vertex 0 does.  Callers needing the other orientation of a tied split
    must ask for ``swapped()`` explicitly.
    """
    if tree.vertex_count < 2:
        raise ValueError("bipartition needs a tree with at least 2 vertices")
    if not tree.is_tree():
        raise ValueError("bipartition requires a tree")
    adj = tree.adjacency()
    parity = {0: 0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in parity:
                parity[w] = parity[v] ^ 1
                frontier.append(w)
    even = frozenset(v for v, p in parity.items() if p == 0)
    odd = frozenset(v for v, p in parity.items() if p == 1)
    if len(even) >= len(odd):
        return Bipartition(even, odd)
    return Bipartition(odd, even)


def path_graph(vertex_count: int) -> Graph:
    return build_graph(vertex_count, [(i, i + 1) for i in range(vertex_count - 1)])


def cycle_graph(vertex_count: int) -> Graph:
    if vertex_count < 3:
        raise ValueError("a circuit needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(vertex_count - 1)] + [(0, vertex_count - 1)]
    return build_graph(vertex_count, edges)


def complete_graph(vertex_count: int) -> Graph:
    return build_graph(vertex_count, combinations(range(vertex_count), 2))


def star_graph(leaf_count: int) -> Graph:
    """K_{1, leaf_count} with the center at vertex 0."""
    return build_graph(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])

"""Fractional assignments with degree bounds [1, n/m].

An assignment maps every edge of a host graph to an exact value in
[0, 1]; it is a valid factor for parameters (n, m) when each vertex's
incident values sum to at least 1 and at most n/m.  The search routines
here are restricted to the discrete grid {0, 1/m, ..., 1}, which is
exactly as expressive as arbitrary values for these bounds; the
parallel-edge expansion oracle (multigraph_expand plus gf_violation)
provides an independent route to the same yes/no answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Sequence

from .condition import DEFAULT_EXHAUSTIVE_CAP, EXHAUSTIVE_CAP_ENV
from .graphs import (
    CapacityError,
    FamilyParams,
    Graph,
    MultiGraph,
    ordered_edge,
    resolve_cap,
)

DEFAULT_BRUTEFORCE_CAP = 10**7
BRUTEFORCE_CAP_ENV = "ISOFACTOR_BRUTEFORCE_CAP"

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class FractionalAssignment:
    """Immutable edge-value map covering every edge of its host graph."""

    host: Graph
    values: Mapping[tuple[int, int], Fraction]

    def __post_init__(self):
        normalized = {}
        for (u, v), value in self.values.items():
            edge = ordered_edge(u, v)
            value = Fraction(value)
            if edge not in self.host.edges:
                raise ValueError(f"value given for non-edge {edge}")
            if not 0 <= value <= 1:
                raise ValueError(f"value {value} on edge {edge} outside [0, 1]")
            normalized[edge] = value
        missing = self.host.edges - normalized.keys()
        if missing:
            raise ValueError(f"edges without values: {sorted(missing)}")
        object.__setattr__(self, "values", MappingProxyType(normalized))

    def value(self, u: int, v: int) -> Fraction:
        return self.values[ordered_edge(u, v)]

    def degree_sum(self, v: int) -> Fraction:
        """Sum of values on the edges incident to v."""
        total = Fraction(0)
        for (a, b), value in self.values.items():
            if v in (a, b):
                total += value
        return total

    def replaced(self, updates: Mapping[tuple[int, int], Fraction]) -> "FractionalAssignment":
        merged = dict(self.values)
        for (u, v), value in updates.items():
            merged[ordered_edge(u, v)] = value
        return FractionalAssignment(self.host, merged)


def vertex_signs(assignment: FractionalAssignment) -> dict[int, str]:
    """Tag each vertex "plus" (degree sum above 1) or "minus" (exactly 1).

    Only defined for assignments meeting the lower degree bound; a vertex
    below 1 raises ValueError.
    """
    signs = {}
    for v in assignment.host.vertices():
        degree = assignment.degree_sum(v)
        if degree < 1:
            raise ValueError(f"vertex {v} has degree sum {degree} below 1")
        signs[v] = MINUS if degree == 1 else PLUS
    return signs


@dataclass(frozen=True)
class FactorViolation:
    """One failed bound: kind, the vertex or edge, and a readable detail."""

    kind: str
    where: object
    detail: str


def verify_factor(
    assignment: FractionalAssignment,
    params: FamilyParams,
    require_denominator_m: bool = False,
) -> list[FactorViolation]:
    """All bound violations of the assignment; empty means a valid factor.

    With require_denominator_m, values must additionally lie on the grid
    {0, 1/m, ..., 1}.
    """
    violations = []
    for edge, value in sorted(assignment.values.items()):
        if require_denominator_m and (value * params.m).denominator != 1:
            violations.append(
                FactorViolation(
                    "value_denominator",
                    edge,
                    f"value {value} not a multiple of 1/{params.m}",
                )
            )
    ratio = params.ratio
    for v in assignment.host.vertices():
        degree = assignment.degree_sum(v)
        if degree < 1:
            violations.append(
                FactorViolation("degree_low", v, f"degree sum {degree} below 1")
            )
        elif degree > ratio:
            violations.append(
                FactorViolation("degree_high", v, f"degree sum {degree} above {ratio}")
            )
    return violations


def iter_discrete_factors(graph: Graph, params: FamilyParams, max_vectors: int | None = None):
    """Yield every valid grid factor as an edge-value dict.

    Edges are filled in sorted order with values ascending from 0, so the
    yield order is the lexicographic order of value vectors.  The nominal
    search space (m + 1) ** edge_count must stay within the cap (argument,
    then environment, then default); the actual walk prunes with partial
    degree bounds, so the first hit usually arrives far sooner.
    """
    cap = resolve_cap(max_vectors, BRUTEFORCE_CAP_ENV, DEFAULT_BRUTEFORCE_CAP)
    edges = graph.sorted_edges()
    n, m = params.n, params.m
    if (m + 1) ** len(edges) > cap:
        raise CapacityError(
            f"search space ({m + 1})**{len(edges)} exceeds cap {cap}"
        )
    if any(graph.degree(v) == 0 for v in graph.vertices()):
        return

    incident: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for index, (u, v) in enumerate(edges):
        incident[u].append(index)
        incident[v].append(index)
    closing = [indices[-1] if indices else -1 for indices in incident]
    remaining = [len(indices) for indices in incident]
    # sums are tracked in units of 1/m: valid means m <= sum <= n at closing
    sums = [0] * graph.vertex_count
    chosen = [0] * len(edges)

    def feasible(v: int) -> bool:
        return sums[v] + remaining[v] * m >= m

    def walk(index: int):
        if index == len(edges):
            yield {edge: Fraction(chosen[i], m) for i, edge in enumerate(edges)}
            return
        u, v = edges[index]
        remaining[u] -= 1
        remaining[v] -= 1
        for k in range(m + 1):
            chosen[index] = k
            sums[u] += k
            sums[v] += k
            ok = sums[u] <= n and sums[v] <= n and feasible(u) and feasible(v)
            if ok and closing[u] == index:
                ok = sums[u] >= m
            if ok and closing[v] == index:
                ok = sums[v] >= m
            if ok:
                yield from walk(index + 1)
            sums[u] -= k
            sums[v] -= k
        remaining[u] += 1
        remaining[v] += 1

    yield from walk(0)


def bruteforce_factor_exists(
    graph: Graph, params: FamilyParams, max_vectors: int | None = None
) -> FractionalAssignment | None:
    """Lexicographically first valid grid factor, or None when none exists."""
    for values in iter_discrete_factors(graph, params, max_vectors):
        return FractionalAssignment(graph, values)
    return None


def multigraph_expand(graph: Graph, copies: int) -> MultiGraph:
    """Replace every edge by the given number of parallel copies."""
    if copies < 1:
        raise ValueError("copies must be at least 1")
    return MultiGraph(
        graph.vertex_count, {edge: copies for edge in graph.edges}
    )


def gf_violation(
    multigraph: MultiGraph,
    lower: int,
    upper: int,
    max_vertices: int | None = None,
) -> frozenset[int] | None:
    """First subset S violating the degree-constrained-subgraph criterion.

    With T the vertices outside S whose remaining degree falls below the
    lower bound, a violation is lower * |T| - sum of those degrees >
    upper * |S|.  Subsets are scanned by size then lexicographic order;
    None means the bounds are achievable.
    """
    if not 0 <= lower < upper:
        raise ValueError("need 0 <= lower < upper")
    cap = resolve_cap(max_vertices, EXHAUSTIVE_CAP_ENV, DEFAULT_EXHAUSTIVE_CAP)
    if multigraph.vertex_count > cap:
        raise CapacityError(
            f"{multigraph.vertex_count} vertices over exhaustive cap {cap}"
        )
    neighbors: list[list[tuple[int, int]]] = [[] for _ in range(multigraph.vertex_count)]
    for (u, v), mult in multigraph.multiplicities.items():
        neighbors[u].append((v, mult))
        neighbors[v].append((u, mult))
    for size in range(multigraph.vertex_count + 1):
        for subset in combinations(range(multigraph.vertex_count), size):
            inside = set(subset)
            shortfall = 0
            for v in range(multigraph.vertex_count):
                if v in inside:
                    continue
                degree = sum(mult for w, mult in neighbors[v] if w not in inside)
                if degree < lower:
                    shortfall += lower - degree
            if shortfall > upper * size:
                return frozenset(subset)
    return None


def factor_from_subgraph(host: Graph, chosen: MultiGraph, m: int) -> FractionalAssignment:
    """Convert multiplicities k(e) of a chosen sub-multigraph into values k(e)/m.

    The chosen multigraph must live on the host's vertex set, use only host
    edges, and keep every multiplicity at most m; host edges it omits get 0.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if chosen.vertex_count != host.vertex_count:
        raise ValueError("vertex counts differ between host and sub-multigraph")
    values = {edge: Fraction(0) for edge in host.edges}
    for edge, mult in chosen.multiplicities.items():
        if edge not in host.edges:
            raise ValueError(f"pair {edge} not an edge of the host")
        if mult > m:
            raise ValueError(f"multiplicity {mult} on {edge} exceeds {m}")
        values[edge] = Fraction(mult, m)
    return FractionalAssignment(host, values)


def _trail_vertices(
    host: Graph, walk: Sequence[tuple[int, int]]
) -> list[int]:
    """Vertex sequence of a trail given as consecutive edges."""
    if not walk:
        raise ValueError("walk must contain at least one edge")
    edges = [ordered_edge(u, v) for u, v in walk]
    for edge in edges:
        if edge not in host.edges:
            raise ValueError(f"walk edge {edge} not in host")
    if len(set(edges)) != len(edges):
        raise ValueError("walk repeats an edge, so it is not a trail")
    if len(edges) == 1:
        return list(edges[0])
    first, second = set(edges[0]), set(edges[1])
    shared = first & second
    if len(shared) != 1:
        raise ValueError(f"edges {edges[0]} and {edges[1]} are not consecutive")
    pivot = shared.pop()
    vertices = [(first - {pivot}).pop(), pivot]
    for edge in edges[1:]:
        here = vertices[-1]
        a, b = edge
        if here == a:
            vertices.append(b)
        elif here == b:
            vertices.append(a)
        else:
            raise ValueError(f"edge {edge} does not continue the walk at {here}")
    return vertices


def alternate_shift(
    assignment: FractionalAssignment,
    walk: Sequence[tuple[int, int]],
    first_sign: str,
    step: Fraction,
) -> FractionalAssignment:
    """Shift values along a trail by +-step with alternating signs.

    The first edge moves by +step when first_sign is "plus", by -step when
    "minus", and the sign flips on every following edge.  Any value that
    would leave [0, 1] rejects the whole shift, naming the edge.  Interior
    vertices keep their degree sums; a closed trail of even length keeps
    every degree sum, while an open trail moves only its two endpoints.
    """
    if first_sign not in (PLUS, MINUS):
        raise ValueError(f"first_sign must be {PLUS!r} or {MINUS!r}")
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    _trail_vertices(assignment.host, walk)
    sign = 1 if first_sign == PLUS else -1
    updates = {}
    for u, v in walk:
        edge = ordered_edge(u, v)
        moved = assignment.values[edge] + sign * step
        if not 0 <= moved <= 1:
            raise ValueError(
                f"shift pushes edge {edge} to {moved}, outside [0, 1]"
            )
        updates[edge] = moved
        sign = -sign
    return assignment.replaced(updates)


@dataclass(frozen=True)
class FractionalFactorResult:
    """Either an assignment, or the witness set that rules one out."""

    assignment: FractionalAssignment | None
    witness: frozenset[int] | None


def find_fractional_factor(graph: Graph, params: FamilyParams) -> FractionalFactorResult:
    """Construct a grid factor through the minimal component factor.

    The route runs the condition check, extracts an edge-minimal factor,
    classifies its components, and assigns values per component: a
    constant ceil(m/2)/m on odd circuits and a pinned tree assignment on
    family trees.  Edges outside the factor get 0.  When the condition
    fails, the witness set is returned instead.
    """
    from .component_factors import FamilyTree, OddCircuit, assign_circuit, find_component_factor
    from .graphs import induced_vertex_map
    from .trees import is_member, pinned_assignment

    report = find_component_factor(graph, params)
    if report.witness is not None:
        return FractionalFactorResult(None, report.witness)
    values = {edge: Fraction(0) for edge in graph.edges}
    for vertex_set, kind in report.components:
        ordered = sorted(vertex_set)
        local_map = induced_vertex_map(vertex_set)
        local_edges = [
            ordered_edge(local_map[u], local_map[v])
            for u, v in report.factor.edges
            if u in vertex_set
        ]
        local = Graph(len(ordered), frozenset(local_edges))
        if isinstance(kind, OddCircuit):
            local_assignment = assign_circuit(local, params)
        elif isinstance(kind, FamilyTree):
            certificate = is_member(local, params)
            pin = min(certificate.side_b)
            local_assignment = pinned_assignment(local, params, pin)
        else:
            raise AssertionError(f"unusable component kind {kind!r}")
        for (a, b), value in local_assignment.values.items():
            values[ordered_edge(ordered[a], ordered[b])] = value
    return FractionalFactorResult(FractionalAssignment(graph, values), None)

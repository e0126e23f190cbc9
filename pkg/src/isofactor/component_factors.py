"""Edge-minimal factors and their component structure.

When a graph satisfies the isolated-vertex condition, greedily deleting
edges while the condition survives terminates in an edge-minimal factor.
Every component of such a factor is forced into one of two shapes: an
odd circuit short enough for the parameters, or a tree from the
edge-minimal family.  verify_minimal_structure re-checks that shape
claim from scratch and, on failure, reports the most specific forbidden
pattern it finds: an even circuit, two circuits sharing an edge, two
circuits sharing a vertex, two disjoint circuits inside one component,
or a circuit living with a degree-1 vertex.  Any such pattern also
yields a closed trail of even length, the umbrella obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .condition import check_condition
from .fractional import FractionalAssignment
from .graphs import FamilyParams, Graph, components
from .trees import is_member


@dataclass(frozen=True)
class OddCircuit:
    """Circuit on 2 * half_length + 1 vertices."""

    half_length: int


@dataclass(frozen=True)
class FamilyTree:
    """Tree from the edge-minimal family."""


@dataclass(frozen=True)
class Invalid:
    """Component shape unusable in a minimal factor."""

    reason: str


ComponentKind = OddCircuit | FamilyTree | Invalid


@dataclass(frozen=True)
class FactorReport:
    """Minimal factor with classified components, or the failure witness."""

    factor: Graph | None
    components: tuple[tuple[frozenset[int], ComponentKind], ...] | None
    witness: frozenset[int] | None


@dataclass(frozen=True)
class StructureReport:
    """Outcome of the shape re-check, with evidence for the first violation."""

    ok: bool
    violation: str | None = None
    evidence: tuple | None = None


def minimal_factor(graph: Graph, params: FamilyParams) -> Graph | None:
    """Edge-minimal spanning factor still satisfying the condition.

    Edges are scanned in ascending order and deleted whenever the rest
    still satisfies the condition; passes repeat until one deletes
    nothing.  None when the graph itself fails the condition.
    """
    if not check_condition(graph, params, "reduced").holds:
        return None
    edges = set(graph.edges)
    while True:
        deleted = False
        for edge in sorted(edges):
            trial = Graph(graph.vertex_count, frozenset(edges - {edge}))
            if check_condition(trial, params, "reduced").holds:
                edges.remove(edge)
                deleted = True
        if not deleted:
            return Graph(graph.vertex_count, frozenset(edges))


def classify_component(component: Graph, params: FamilyParams) -> ComponentKind:
    """Shape of a connected graph as a minimal-factor component."""
    if not component.is_connected():
        raise ValueError("classification expects a connected graph")
    size = component.vertex_count
    if size >= 3 and all(component.degree(v) == 2 for v in component.vertices()):
        if size % 2 == 0:
            return Invalid("even circuit")
        half = (size - 1) // 2
        if not params.allows_circuit(half):
            return Invalid(
                f"odd circuit on {size} vertices too long for threshold {params.ratio}"
            )
        return OddCircuit(half)
    if component.is_tree():
        if is_member(component, params).member:
            return FamilyTree()
        return Invalid("tree outside the edge-minimal family")
    return Invalid("component is neither a circuit nor a tree")


def find_component_factor(graph: Graph, params: FamilyParams) -> FactorReport:
    """Condition check, minimal factor, and component classification in one.

    The shape claim guarantees no component classifies as Invalid; hitting
    one raises, since it means an invariant broke.
    """
    verdict = check_condition(graph, params, "reduced")
    if not verdict.holds:
        return FactorReport(None, None, verdict.witness)
    factor = minimal_factor(graph, params)
    classified = []
    for vertex_set, local in components(factor):
        kind = classify_component(local, params)
        if isinstance(kind, Invalid):
            raise AssertionError(
                f"minimal factor component {sorted(vertex_set)} unusable: {kind.reason}"
            )
        classified.append((vertex_set, kind))
    return FactorReport(factor, tuple(classified), None)


def _simple_cycles(adj: list[set[int]], vertex_count: int) -> list[tuple[int, ...]]:
    """Every simple cycle once, rooted at its smallest vertex, direction
    normalized so the second vertex is smaller than the last."""
    cycles = []
    for start in range(vertex_count):
        stack = [[start]]
        while stack:
            path = stack.pop()
            v = path[-1]
            for w in sorted(adj[v]):
                if w < start or (len(path) >= 2 and w == path[-2]):
                    continue
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                elif w not in path:
                    stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def _cycle_edges(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    edges = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        edges.add((u, v) if u < v else (v, u))
    return edges


def _linking_path(adj, source: set[int], target: set[int]) -> tuple[int, ...]:
    """Shortest vertex path from one cycle to another, endpoints included."""
    frontier = sorted(source)
    back = {v: None for v in frontier}
    while frontier:
        fresh = []
        for v in frontier:
            for w in sorted(adj[v]):
                if w in back:
                    continue
                back[w] = v
                if w in target:
                    path = [w]
                    while back[path[-1]] is not None:
                        path.append(back[path[-1]])
                    return tuple(reversed(path))
                fresh.append(w)
        frontier = fresh
    raise AssertionError("cycles reported in one component but not linked")


def _component_violation(local: Graph):
    adj = local.adjacency()
    cycles = _simple_cycles(adj, local.vertex_count)
    for cycle in cycles:
        if len(cycle) % 2 == 0:
            return ("even_circuit", (cycle,))
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if _cycle_edges(cycles[i]) & _cycle_edges(cycles[j]):
                return ("circuits_sharing_edge", (cycles[i], cycles[j]))
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if set(cycles[i]) & set(cycles[j]):
                return ("circuits_sharing_vertex", (cycles[i], cycles[j]))
    if len(cycles) >= 2:
        first, second = cycles[0], cycles[1]
        path = _linking_path(adj, set(first), set(second))
        return ("disjoint_circuits_linked", (first, second, path))
    leaves = [v for v in local.vertices() if local.degree(v) == 1]
    if cycles and leaves:
        return ("circuit_with_leaf", (cycles[0], leaves[0]))
    raise AssertionError("component fails the shape check without a nameable pattern")


def verify_minimal_structure(factor: Graph) -> StructureReport:
    """Re-check that every component is an odd circuit or a tree.

    Reports the first violating component's most specific forbidden
    pattern, with the cycles, path, or leaf involved (in the factor's own
    vertex labels).
    """
    for vertex_set, local in components(factor):
        if local.is_tree():
            continue
        size = local.vertex_count
        if (
            size >= 3
            and size % 2 == 1
            and all(local.degree(v) == 2 for v in local.vertices())
        ):
            continue
        name, evidence = _component_violation(local)
        ordered = sorted(vertex_set)
        mapped = tuple(
            tuple(ordered[v] for v in item) if isinstance(item, tuple) else ordered[item]
            for item in evidence
        )
        return StructureReport(False, name, mapped)
    return StructureReport(True)


def assign_circuit(circuit: Graph, params: FamilyParams) -> FractionalAssignment:
    """Constant assignment ceil(m/2)/m on an admitted odd circuit.

    Every vertex then has degree sum 2 * ceil(m/2) / m, which sits inside
    [1, n/m] exactly because the circuit length is admitted.
    """
    kind = classify_component(circuit, params)
    if not isinstance(kind, OddCircuit):
        reason = kind.reason if isinstance(kind, Invalid) else "not a circuit"
        raise ValueError(f"assignment needs an admitted odd circuit: {reason}")
    value = Fraction((params.m + 1) // 2, params.m)
    return FractionalAssignment(circuit, {edge: value for edge in circuit.edges})

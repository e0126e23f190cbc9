"""The family of edge-minimal condition trees.

A tree belongs to the family for parameters (n, m) when it satisfies the
isolated-vertex condition but deleting any single edge breaks it.  That
definition is equivalent to a local characterization on the color
classes {A, B} of the tree (side_a, side_b here, with |B| <= |A|):

* globally, |A| <= (n/m) |B|, and
* for every edge e, the component of T - e containing e's endpoint in A
  holds strictly more A-vertices than (n/m) times its B-vertices.

The strict surpluses are the membership margins.  Members admit two
distinguished assignments.  The canonical one sets each edge to the A
surplus of its split measured against |A|/|B| instead of n/m, giving
degree sums of exactly 1 on A and |A|/|B| on B.  The pinned one fixes a
vertex x in B, forces degree 1 on A and n/m on B away from x, and
propagates edge values from the leaves toward x; the forced root degree
n/m + |A| - (n/m)|B| and values inside {1/m, ..., 1} come out
automatically for members, so the propagation asserts them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .condition import check_condition
from .enumeration import all_trees
from .fractional import FractionalAssignment
from .graphs import (
    CapacityError,
    FamilyParams,
    Graph,
    bipartition,
    ordered_edge,
    resolve_cap,
)

DEFAULT_ENUM_CAP = 12
ENUM_CAP_ENV = "ISOFACTOR_ENUM_CAP"


@dataclass(frozen=True)
class MembershipCertificate:
    """Membership verdict with the orientation it was decided under.

    On success, margins maps each edge to its strict surplus.  On failure,
    global_violation marks that every admissible orientation already fails
    the size clause |A| <= (n/m)|B|; otherwise violating_edge names the
    first edge whose split fails.
    """

    member: bool
    side_a: frozenset[int]
    side_b: frozenset[int]
    margins: Mapping[tuple[int, int], Fraction] | None
    global_violation: bool = False
    violating_edge: tuple[int, int] | None = None


def _subtree_counts(
    tree: Graph, edge: tuple[int, int], side_a: frozenset[int]
) -> tuple[int, int]:
    """Sizes (|A part|, |B part|) of the half of T - edge holding the
    edge's endpoint in side_a."""
    u, v = edge
    anchor = u if u in side_a else v
    adj = tree.adjacency()
    seen = {anchor}
    stack = [anchor]
    removed = {u, v}
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if {x, w} == removed or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    a_count = len(seen & side_a)
    return a_count, len(seen) - a_count


def _check_orientation(tree, params, side_a, side_b):
    """Margins dict when the orientation satisfies the characterization,
    else a ("global", None) or ("edge", edge) failure."""
    if params.m * len(side_a) > params.n * len(side_b):
        return ("global", None)
    margins = {}
    for edge in tree.sorted_edges():
        a_count, b_count = _subtree_counts(tree, edge, side_a)
        margin = Fraction(params.m * a_count - params.n * b_count, params.m)
        if margin <= 0:
            return ("edge", edge)
        margins[edge] = margin
    return margins


def _orientations(tree: Graph):
    split = bipartition(tree)
    yield split.side_a, split.side_b
    if len(split.side_a) == len(split.side_b):
        yield split.side_b, split.side_a


def is_member(tree: Graph, params: FamilyParams) -> MembershipCertificate:
    """Decide family membership through the local characterization.

    Tied color classes are tried in both orientations.  A single vertex is
    never a member (it already fails the condition at the empty set).
    """
    if not tree.is_tree():
        raise ValueError("membership is defined for trees only")
    if tree.vertex_count == 1:
        return MembershipCertificate(
            False, frozenset({0}), frozenset(), None, global_violation=True
        )
    edge_failure = None
    failures = 0
    first = None
    for side_a, side_b in _orientations(tree):
        if first is None:
            first = (side_a, side_b)
        outcome = _check_orientation(tree, params, side_a, side_b)
        if isinstance(outcome, dict):
            return MembershipCertificate(
                True, frozenset(side_a), frozenset(side_b), outcome
            )
        failures += 1
        if outcome[0] == "edge" and edge_failure is None:
            edge_failure = outcome[1]
    side_a, side_b = first
    return MembershipCertificate(
        False,
        frozenset(side_a),
        frozenset(side_b),
        None,
        global_violation=edge_failure is None,
        violating_edge=edge_failure,
    )


def is_member_by_definition(
    tree: Graph, params: FamilyParams, max_vertices: int | None = None
) -> bool:
    """Membership straight from the definition: the condition holds and
    every single-edge deletion breaks it.  Exhaustive checks throughout."""
    if not tree.is_tree():
        raise ValueError("membership is defined for trees only")
    if not check_condition(tree, params, "exhaustive", max_vertices).holds:
        return False
    for u, v in tree.sorted_edges():
        if check_condition(tree.without_edge(u, v), params, "exhaustive", max_vertices).holds:
            return False
    return True


def canonical_assignment(tree: Graph) -> FractionalAssignment:
    """The parameter-free member assignment with degrees 1 on side_a and
    |A|/|B| on side_b.

    Works from the color classes alone, so it cannot check full membership
    (that needs parameters); it rejects trees whose splits already fail
    against the |A|/|B| threshold, which rules out membership for every
    parameter choice.
    """
    if not tree.is_tree() or tree.vertex_count < 2:
        raise ValueError("canonical assignment needs a tree with at least 2 vertices")
    for side_a, side_b in _orientations(tree):
        values = {}
        for edge in tree.sorted_edges():
            a_count, b_count = _subtree_counts(tree, edge, side_a)
            values[edge] = Fraction(
                a_count * len(side_b) - len(side_a) * b_count, len(side_b)
            )
        if all(value > 0 for value in values.values()):
            bad = [e for e, value in values.items() if value > 1]
            if bad:
                raise AssertionError(f"positive split surplus above 1 on {bad}")
            return FractionalAssignment(tree, values)
    raise ValueError("some split has no A surplus; the tree is not a member for any parameters")


def pinned_assignment(tree: Graph, params: FamilyParams, pin: int) -> FractionalAssignment:
    """Member assignment with degree 1 on side_a, n/m on side_b except at
    the pinned vertex, built by propagating from the leaves toward the pin.

    Membership forces every propagated value into {1/m, ..., 1} and the
    pin's degree to n/m + |A| - (n/m)|B|; both are asserted, so a failure
    here means a broken invariant, not bad input.
    """
    certificate = is_member(tree, params)
    if not certificate.member:
        raise ValueError("pinned assignment requires a family member")
    side_a, side_b = certificate.side_a, certificate.side_b
    if pin not in side_b:
        swapped_ok = (
            len(side_a) == len(side_b)
            and pin in side_a
            and isinstance(_check_orientation(tree, params, side_b, side_a), dict)
        )
        if swapped_ok:
            side_a, side_b = side_b, side_a
        else:
            raise ValueError(f"pinned vertex {pin} is not in side_b")

    adj = tree.adjacency()
    parent: dict[int, int | None] = {pin: None}
    order = [pin]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    ratio = params.ratio
    values: dict[tuple[int, int], Fraction] = {}
    for v in reversed(order):
        if v == pin:
            continue
        target = Fraction(1) if v in side_a else ratio
        child_sum = sum(
            (values[ordered_edge(v, w)] for w in adj[v] if w != parent[v]),
            Fraction(0),
        )
        value = target - child_sum
        if not 0 < value <= 1 or (value * params.m).denominator != 1:
            raise AssertionError(
                f"propagated value {value} on edge {ordered_edge(v, parent[v])} "
                f"leaves the grid; membership invariant broken"
            )
        values[ordered_edge(v, parent[v])] = value
    pin_degree = sum(
        (values[ordered_edge(pin, w)] for w in adj[pin]), Fraction(0)
    )
    expected = ratio + len(side_a) - ratio * len(side_b)
    if pin_degree != expected:
        raise AssertionError(
            f"pin degree {pin_degree} differs from forced value {expected}"
        )
    return FractionalAssignment(tree, values)


@dataclass(frozen=True)
class CorollaryReport:
    """Structural facts every family member satisfies.

    * leaves_in_larger_side: every leaf lies in side_a (K_{1,1} exempt).
    * larger_side_degrees_bounded: degrees in side_a stay at most m.
    * smaller_side_degrees_bounded: degrees in side_b stay at most n.
    * trimmed_leaf_degrees_exact: each leaf of the leaf-trimmed tree has
      degree exactly floor(n/m) + 1 in the full tree.
    * size_pattern_when_remainder_one: when m divides n - 1 and the tree
      is not a star, |A| = (n/m)|B| and the vertex count is a multiple of
      n + m.  True when the gate does not apply.
    """

    leaves_in_larger_side: bool
    larger_side_degrees_bounded: bool
    smaller_side_degrees_bounded: bool
    trimmed_leaf_degrees_exact: bool
    size_pattern_when_remainder_one: bool
    failures: tuple[str, ...]

    @property
    def all_pass(self) -> bool:
        return not self.failures


def _is_star(tree: Graph) -> bool:
    if tree.vertex_count < 2:
        return False
    degrees = sorted(tree.degree(v) for v in tree.vertices())
    return degrees[-1] == tree.vertex_count - 1 and all(d == 1 for d in degrees[:-1])


def corollary_report(tree: Graph, params: FamilyParams) -> CorollaryReport:
    """Evaluate the member-only structural facts; rejects non-members."""
    certificate = is_member(tree, params)
    if not certificate.member:
        raise ValueError("corollary report requires a family member")
    side_a, side_b = certificate.side_a, certificate.side_b
    degrees = {v: tree.degree(v) for v in tree.vertices()}
    leaves = {v for v, d in degrees.items() if d == 1}
    failures = []

    leaves_ok = tree.vertex_count == 2 or leaves <= side_a
    if not leaves_ok:
        failures.append(f"leaves outside side_a: {sorted(leaves - side_a)}")

    a_ok = all(degrees[v] <= params.m for v in side_a)
    if not a_ok:
        bad = sorted(v for v in side_a if degrees[v] > params.m)
        failures.append(f"side_a degrees above m at {bad}")

    b_ok = all(degrees[v] <= params.n for v in side_b)
    if not b_ok:
        bad = sorted(v for v in side_b if degrees[v] > params.n)
        failures.append(f"side_b degrees above n at {bad}")

    trimmed = set(tree.vertices()) - leaves
    adj = tree.adjacency()
    trimmed_leaves = {v for v in trimmed if len(adj[v] & trimmed) == 1}
    wanted = params.n // params.m + 1
    trimmed_ok = all(degrees[v] == wanted for v in trimmed_leaves)
    if not trimmed_ok:
        bad = sorted(v for v in trimmed_leaves if degrees[v] != wanted)
        failures.append(f"trimmed-tree leaves without degree {wanted} at {bad}")

    size_ok = True
    if (params.n - 1) % params.m == 0 and not _is_star(tree):
        balanced = params.m * len(side_a) == params.n * len(side_b)
        divisible = tree.vertex_count % (params.n + params.m) == 0
        size_ok = balanced and divisible
        if not size_ok:
            failures.append(
                f"size pattern broken: |A|={len(side_a)}, |B|={len(side_b)}, "
                f"|V|={tree.vertex_count}"
            )

    return CorollaryReport(
        leaves_ok, a_ok, b_ok, trimmed_ok, size_ok, tuple(failures)
    )


def construct_blown_tree(base: Graph, k: int) -> Graph:
    """Inflate a base tree into a member candidate for parameters (2k+1, 2).

    For k = 1 the base must be a tree with all degrees in {1, 3}; every
    edge is subdivided and every original leaf gets one new pendant edge.
    For k >= 2 the constraints move to the leaf-trimmed core: each core
    vertex needs an odd core degree d <= 2k+1 with 2 * (leaf neighbors)
    + d <= 2k+1; every core edge is subdivided and each core vertex with
    d = 2l+1 < 2k+1 receives k - l - (leaf neighbors) new pendant edges.

    New vertices are labeled deterministically: base labels stay, then
    subdivision vertices in ascending edge order, then pendants in
    ascending order of their attachment vertex.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not base.is_tree():
        raise ValueError("base must be a tree")
    if k == 1:
        for v in base.vertices():
            if base.degree(v) not in (1, 3):
                raise ValueError(
                    f"vertex {v} has degree {base.degree(v)}, outside {{1, 3}}"
                )
        edges = []
        next_label = base.vertex_count
        for u, v in base.sorted_edges():
            edges += [(u, next_label), (v, next_label)]
            next_label += 1
        for v in base.vertices():
            if base.degree(v) == 1:
                edges.append((v, next_label))
                next_label += 1
        return Graph(next_label, frozenset(edges))

    adj = base.adjacency()
    leaves = {v for v in base.vertices() if base.degree(v) == 1}
    core = [v for v in base.vertices() if v not in leaves]
    if not core:
        raise ValueError("base has no internal vertices, so the core degree "
                         "constraint is unsatisfiable")
    core_set = set(core)
    limit = 2 * k + 1
    core_degree = {v: len(adj[v] & core_set) for v in core}
    leaf_nbrs = {v: len(adj[v] & leaves) for v in core}
    for v in core:
        d = core_degree[v]
        if d % 2 == 0 or d > limit:
            raise ValueError(
                f"vertex {v}: core degree {d} is not an odd number up to {limit}"
            )
        if 2 * leaf_nbrs[v] + d > limit:
            raise ValueError(
                f"vertex {v}: {leaf_nbrs[v]} leaf neighbors overload core degree {d}"
            )
    edges = [e for e in base.sorted_edges() if not (set(e) <= core_set)]
    next_label = base.vertex_count
    for u, v in base.sorted_edges():
        if u in core_set and v in core_set:
            edges += [(u, next_label), (v, next_label)]
            next_label += 1
    for v in core:
        surplus = k - (core_degree[v] - 1) // 2 - leaf_nbrs[v]
        for _ in range(surplus):
            edges.append((v, next_label))
            next_label += 1
    return Graph(next_label, frozenset(ordered_edge(u, v) for u, v in edges))


def enumerate_members(
    params: FamilyParams, max_vertices: int, cap: int | None = None
) -> list[Graph]:
    """All family members with 2..max_vertices vertices, one canonical
    representative per isomorphism class, in (size, canonical key) order."""
    limit = resolve_cap(cap, ENUM_CAP_ENV, DEFAULT_ENUM_CAP)
    if max_vertices > limit:
        raise CapacityError(f"max_vertices {max_vertices} over enumeration cap {limit}")
    members = []
    for size in range(2, max_vertices + 1):
        for tree in all_trees(size):
            if is_member(tree, params).member:
                members.append(tree)
    return members

"""Isolated-vertex condition checking and isolated toughness.

A graph G satisfies the condition for parameters (n, m) when every vertex
subset S obeys iso(G - S) <= (n/m) * |S|, where iso counts the vertices
outside S whose neighbors all lie in S.  The empty set is always tested,
so any graph with an isolated vertex fails immediately.  All comparisons
are done on cross-multiplied integers; no floats are involved.

Reduced search space lemma.  For any subset S let I be the set of
vertices isolated by removing S.  Then I is independent, every neighbor
of I lies in S, and removing only N(I) still isolates all of I.  Since
|N(I)| <= |S| and iso(G - N(I)) >= |I| = iso(G - S), the deficiency
m * iso - n * |S| at N(I) is at least the deficiency at S.  The maximum
deficiency over all subsets is therefore attained on a set of the form
N(I) with I independent, which is exactly the family reduced mode
enumerates.  Moreover every minimum-size maximizer is of that form, so
the two modes agree on the reported witness as well.  The agreement is
cross-checked against exhaustive mode in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import CapacityError, FamilyParams, Graph, resolve_cap
from .rational import INFINITY

DEFAULT_EXHAUSTIVE_CAP = 16
DEFAULT_REDUCED_CAP = 20
EXHAUSTIVE_CAP_ENV = "ISOFACTOR_EXHAUSTIVE_CAP"
REDUCED_CAP_ENV = "ISOFACTOR_REDUCED_CAP"


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a condition check.

    worst_deficiency is the maximum of iso(G - S) - (n/m) * |S| over the
    tested subsets; the witness is present exactly when that maximum is
    positive and is then a maximizer of smallest size, ties broken by
    lexicographic vertex order.
    """

    holds: bool
    witness: frozenset[int] | None
    worst_deficiency: Fraction


def _iso_of_mask(masks: list[int], vertex_count: int, removed: int) -> int:
    count = 0
    for v in range(vertex_count):
        bit = 1 << v
        if not (removed & bit) and masks[v] & ~removed == 0:
            count += 1
    return count


def _scan_subsets(graph: Graph, params: FamilyParams, subset_masks) -> ConditionVerdict:
    """Evaluate deficiencies over masks given in (size, lex) order."""
    masks = graph.adjacency_masks()
    n, m = params.n, params.m
    best_def = None
    best_mask = 0
    for removed in subset_masks:
        deficiency = m * _iso_of_mask(masks, graph.vertex_count, removed) - n * removed.bit_count()
        if best_def is None or deficiency > best_def:
            best_def = deficiency
            best_mask = removed
    witness = None
    if best_def > 0:
        witness = frozenset(v for v in graph.vertices() if best_mask & (1 << v))
    return ConditionVerdict(best_def <= 0, witness, Fraction(best_def, m))


def _masks_by_size(vertex_count: int):
    for size in range(vertex_count + 1):
        for subset in combinations(range(vertex_count), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            yield mask


def _independent_set_masks(masks: list[int], vertex_count: int):
    stack = [(0, 0)]
    while stack:
        v, chosen = stack.pop()
        if v == vertex_count:
            yield chosen
            continue
        if masks[v] & chosen == 0:
            stack.append((v + 1, chosen | (1 << v)))
        stack.append((v + 1, chosen))


def _neighborhood_masks(graph: Graph) -> list[int]:
    """Distinct masks N(I) over independent sets I, in (size, lex) order."""
    masks = graph.adjacency_masks()
    seen = set()
    for indep in _independent_set_masks(masks, graph.vertex_count):
        neighborhood = 0
        rest = indep
        while rest:
            low = rest & -rest
            neighborhood |= masks[low.bit_length() - 1]
            rest ^= low
        seen.add(neighborhood)
    ordered = sorted(seen, key=lambda mask: (mask.bit_count(), _mask_vertices(mask)))
    return ordered


def _mask_vertices(mask: int) -> tuple[int, ...]:
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return tuple(result)


def check_condition(
    graph: Graph,
    params: FamilyParams,
    mode: str = "reduced",
    max_vertices: int | None = None,
) -> ConditionVerdict:
    """Decide whether the graph satisfies the (n/m) isolated-vertex condition.

    mode "exhaustive" iterates every vertex subset; mode "reduced" only the
    neighborhoods of independent sets, which suffices by the lemma in the
    module docstring.  Both return identical verdicts.  Graphs beyond the
    mode's vertex cap (argument, then environment, then default) are
    rejected with CapacityError.
    """
    if mode == "exhaustive":
        cap = resolve_cap(max_vertices, EXHAUSTIVE_CAP_ENV, DEFAULT_EXHAUSTIVE_CAP)
        if graph.vertex_count > cap:
            raise CapacityError(
                f"{graph.vertex_count} vertices over exhaustive-mode cap {cap}"
            )
        return _scan_subsets(graph, params, _masks_by_size(graph.vertex_count))
    if mode == "reduced":
        cap = resolve_cap(max_vertices, REDUCED_CAP_ENV, DEFAULT_REDUCED_CAP)
        if graph.vertex_count > cap:
            raise CapacityError(
                f"{graph.vertex_count} vertices over reduced-mode cap {cap}"
            )
        return _scan_subsets(graph, params, _neighborhood_masks(graph))
    raise ValueError(f"unknown mode {mode!r}")


def isolated_toughness(graph: Graph):
    """min |S| / iso(G - S) over subsets isolating at least two vertices.

    Returns the infinity marker when no subset isolates two vertices,
    which happens exactly for complete graphs (including K_1 and K_2).
    """
    masks = graph.adjacency_masks()
    best = None
    for removed in range(1 << graph.vertex_count):
        isolated = _iso_of_mask(masks, graph.vertex_count, removed)
        if isolated >= 2:
            ratio = Fraction(removed.bit_count(), isolated)
            if best is None or ratio < best:
                best = ratio
    return INFINITY if best is None else best

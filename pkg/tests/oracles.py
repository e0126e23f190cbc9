"""Reference implementations used only by the tests.

Everything here recomputes results straight from definitions with no
pruning and no shared code paths with the package, so agreement is
meaningful.  All of it is exponential and meant for small inputs.
"""

from fractions import Fraction
from itertools import combinations, product

from isofactor.graphs import Graph


def brute_iso(graph: Graph, removed: frozenset) -> int:
    count = 0
    for v in graph.vertices():
        if v in removed:
            continue
        if all(w in removed for w in graph.neighbors(v)):
            count += 1
    return count


def brute_condition(graph: Graph, n: int, m: int):
    """Worst subset by the (deficiency, -size, lex) preference used for
    witnesses.  Returns (holds, witness_or_None, worst_deficiency)."""
    best = None
    vertices = list(graph.vertices())
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            removed = frozenset(subset)
            deficiency = Fraction(m * brute_iso(graph, removed) - n * size, m)
            if best is None or deficiency > best[0]:
                best = (deficiency, removed)
    deficiency, removed = best
    if deficiency > 0:
        return False, removed, deficiency
    return True, None, deficiency


def brute_toughness(graph: Graph):
    best = None
    vertices = list(graph.vertices())
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            iso = brute_iso(graph, frozenset(subset))
            if iso >= 2:
                ratio = Fraction(size, iso)
                if best is None or ratio < best:
                    best = ratio
    return best


def brute_grid_factors(graph: Graph, n: int, m: int):
    """Every valid grid assignment as an edge -> Fraction dict."""
    edges = graph.sorted_edges()
    low, high = Fraction(1), Fraction(n, m)
    found = []
    for numerators in product(range(m + 1), repeat=len(edges)):
        sums = [Fraction(0)] * graph.vertex_count
        for (u, v), numerator in zip(edges, numerators):
            value = Fraction(numerator, m)
            sums[u] += value
            sums[v] += value
        if all(low <= s <= high for s in sums):
            found.append(
                {e: Fraction(k, m) for e, k in zip(edges, numerators)}
            )
    return found


def brute_has_grid_factor(graph: Graph, n: int, m: int) -> bool:
    edges = graph.sorted_edges()
    low, high = Fraction(1), Fraction(n, m)
    for numerators in product(range(m + 1), repeat=len(edges)):
        sums = [Fraction(0)] * graph.vertex_count
        for (u, v), numerator in zip(edges, numerators):
            value = Fraction(numerator, m)
            sums[u] += value
            sums[v] += value
        if all(low <= s <= high for s in sums):
            return True
    return False


def brute_tree_member(tree: Graph, n: int, m: int) -> bool:
    """Edge-minimal factor support, stated through existence: the tree
    admits a grid factor and no single-edge deletion still does."""
    if not brute_has_grid_factor(tree, n, m):
        return False
    for u, v in tree.sorted_edges():
        if brute_has_grid_factor(tree.without_edge(u, v), n, m):
            return False
    return True

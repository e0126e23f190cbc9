"""Exhaustive generation of small trees and connected graphs.

Trees are enumerated up to isomorphism by growing every tree on k
vertices from every tree on k - 1 (attach a new leaf at each vertex) and
deduplicating by a canonical form.  The canonical form of a free tree is
the classic rooted-encoding at its center: a leaf encodes as the empty
tuple and an inner vertex as the sorted tuple of its child encodings.
Bicentral trees encode as the sorted pair of the two halves.  Because
the canonical graph is rebuilt from the encoding alone, equal trees get
bit-identical labelings regardless of how they were produced.

A labeled route through integer-sequence codes is kept alongside as an
independent cross-check; it visits all vertex-labeled trees and reduces
them with the same canonical form, so both routes must produce the same
catalogs on sizes where the labeled route is affordable.

Connected simple graphs are enumerated by walking every edge subset as a
bitmask and deduplicating with an exact canonical form: the minimum
relabeled mask over all permutations that sort the degree sequence,
which prunes the permutation space without losing exactness.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import Graph, build_graph, ordered_edge


def _tree_centers(adj: list[set[int]], vertex_count: int) -> list[int]:
    """Center vertex or vertices, found by peeling leaf layers."""
    if vertex_count == 1:
        return [0]
    degree = [len(adj[v]) for v in range(vertex_count)]
    layer = [v for v in range(vertex_count) if degree[v] == 1]
    remaining = vertex_count
    while remaining > 2:
        remaining -= len(layer)
        next_layer = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    next_layer.append(w)
            degree[v] = 0
        layer = next_layer
    return sorted(layer)


def _encode(adj: list[set[int]], root: int, parent: int | None) -> tuple:
    children = sorted(
        _encode(adj, child, root) for child in adj[root] if child != parent
    )
    return tuple(children)


def tree_canonical_key(tree: Graph) -> tuple:
    """Canonical key of a free tree; equal exactly for isomorphic trees."""
    if not tree.is_tree():
        raise ValueError("canonical tree key requires a tree")
    if tree.vertex_count == 1:
        return ("c1", ())
    adj = tree.adjacency()
    centers = _tree_centers(adj, tree.vertex_count)
    if len(centers) == 1:
        return ("c1", _encode(adj, centers[0], None))
    first, second = centers
    halves = sorted((_encode(adj, first, second), _encode(adj, second, first)))
    return ("c2", tuple(halves))


def _build_from_encoding(enc: tuple, start: int, edges: list) -> int:
    next_free = start + 1
    for child in enc:
        edges.append((start, next_free))
        next_free = _build_from_encoding(child, next_free, edges)
    return next_free


def _encoding_size(enc: tuple) -> int:
    return 1 + sum(_encoding_size(child) for child in enc)


def canonical_tree_form(tree: Graph) -> Graph:
    """Deterministically labeled representative of the tree's class."""
    kind, payload = tree_canonical_key(tree)
    edges: list[tuple[int, int]] = []
    if kind == "c1":
        total = _build_from_encoding(payload, 0, edges)
    else:
        first, second = payload
        split = _build_from_encoding(first, 0, edges)
        total = _build_from_encoding(second, split, edges)
        edges.append((0, split))
    return build_graph(total, edges)


def _attach_leaf(tree: Graph, at: int) -> Graph:
    new_vertex = tree.vertex_count
    return Graph(
        tree.vertex_count + 1,
        tree.edges | {ordered_edge(at, new_vertex)},
    )


@lru_cache(maxsize=None)
def all_trees(vertex_count: int) -> tuple[Graph, ...]:
    """All non-isomorphic trees on the given vertex count, canonically labeled
    and sorted by canonical key."""
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    if vertex_count == 1:
        return (Graph(1, frozenset()),)
    catalog: dict[tuple, Graph] = {}
    for smaller in all_trees(vertex_count - 1):
        for at in smaller.vertices():
            candidate = _attach_leaf(smaller, at)
            key = tree_canonical_key(candidate)
            if key not in catalog:
                catalog[key] = canonical_tree_form(candidate)
    return tuple(catalog[key] for key in sorted(catalog))


def trees_up_to(max_vertices: int) -> dict[int, tuple[Graph, ...]]:
    return {size: all_trees(size) for size in range(1, max_vertices + 1)}


def _tree_from_code(code: tuple[int, ...], vertex_count: int) -> Graph:
    """Decode the classic integer-sequence tree code on labeled vertices."""
    degree = [1] * vertex_count
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(vertex_count) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    last = [v for v in range(vertex_count) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return build_graph(vertex_count, edges)


def labeled_trees(vertex_count: int):
    """Every vertex-labeled tree, via integer-sequence codes."""
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    if vertex_count == 1:
        yield Graph(1, frozenset())
        return
    if vertex_count == 2:
        yield build_graph(2, [(0, 1)])
        return
    for code in product(range(vertex_count), repeat=vertex_count - 2):
        yield _tree_from_code(code, vertex_count)


def _edge_positions(vertex_count: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(vertex_count), 2))}


def graph_canonical_key(graph: Graph) -> tuple[int, int]:
    """(vertex_count, minimal relabeled edge mask) over degree-sorting
    permutations; equal exactly for isomorphic graphs."""
    n = graph.vertex_count
    positions = _edge_positions(n)
    degrees = [graph.degree(v) for v in range(n)]
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(degrees[v], []).append(v)
    block_degrees = sorted(by_degree, reverse=True)
    slots: dict[int, list[int]] = {}
    offset = 0
    for d in block_degrees:
        slots[d] = list(range(offset, offset + len(by_degree[d])))
        offset += len(by_degree[d])
    edges = graph.sorted_edges()
    best = None
    for combo in product(*(permutations(by_degree[d]) for d in block_degrees)):
        mapping = [0] * n
        for d, perm in zip(block_degrees, combo):
            for pos, vertex in zip(slots[d], perm):
                mapping[vertex] = pos
        mask = 0
        for u, v in edges:
            mask |= 1 << positions[ordered_edge(mapping[u], mapping[v])]
        if best is None or mask < best:
            best = mask
    return (n, best if best is not None else 0)


def _graph_from_mask(vertex_count: int, mask: int) -> Graph:
    pairs = list(combinations(range(vertex_count), 2))
    edges = [pairs[i] for i in range(len(pairs)) if mask & (1 << i)]
    return build_graph(vertex_count, edges)


def _mask_connected(vertex_count: int, adjacency: list[int]) -> bool:
    if vertex_count <= 1:
        return True
    reach = 1
    while True:
        grown = reach
        rest = reach
        while rest:
            low = rest & -rest
            grown |= adjacency[low.bit_length() - 1]
            rest ^= low
        if grown == reach:
            break
        reach = grown
    return reach == (1 << vertex_count) - 1


@lru_cache(maxsize=None)
def connected_graphs(vertex_count: int) -> tuple[Graph, ...]:
    """All non-isomorphic connected simple graphs on the given vertex count,
    as canonical representatives sorted by (edge count, canonical mask)."""
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    pairs = list(combinations(range(vertex_count), 2))
    seen: set[int] = set()
    for mask in range(1 << len(pairs)):
        adjacency = [0] * vertex_count
        for i, (u, v) in enumerate(pairs):
            if mask & (1 << i):
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
        if not _mask_connected(vertex_count, adjacency):
            continue
        _, canonical = graph_canonical_key(_graph_from_mask(vertex_count, mask))
        seen.add(canonical)
    ordered = sorted(seen, key=lambda m: (m.bit_count(), m))
    return tuple(_graph_from_mask(vertex_count, m) for m in ordered)


def connected_graphs_up_to(max_vertices: int) -> tuple[Graph, ...]:
    result: list[Graph] = []
    for size in range(1, max_vertices + 1):
        result.extend(connected_graphs(size))
    return tuple(result)

"""Undirected simple graphs and the structural queries everything else uses.

Graphs are immutable after construction: dense 0-based vertex ids, sorted
adjacency tuples, and a per-vertex neighborhood bitmask (plain ints) that the
masked traversals below and the exhaustive matching oracle share.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad ids)."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int
    # neighborhood bitmasks, nbr_masks[v] has bit u set iff {u,v} is an edge
    nbr_masks: tuple[int, ...] = field(repr=False)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.vertex_count)
                for v in self.adjacency[u] if u < v]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on vertices 0..n-1 from unordered pairs.

    Rejects loops, duplicate pairs (in either orientation) and out-of-range
    ids, naming the offending pair in the error.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) not allowed")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
        m += 1
    masks = tuple(sum(1 << u for u in s) for s in adj)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj), m, masks)


@dataclass(frozen=True)
class ComponentPartition:
    component_of: tuple[int, ...]
    component_sizes: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)


def components(g: Graph) -> ComponentPartition:
    """Connected components by BFS in vertex-id order (deterministic)."""
    comp = [-1] * g.vertex_count
    sizes: list[int] = []
    for start in range(g.vertex_count):
        if comp[start] != -1:
            continue
        idx = len(sizes)
        comp[start] = idx
        size = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if comp[u] == -1:
                    comp[u] = idx
                    size += 1
                    queue.append(u)
        sizes.append(size)
    return ComponentPartition(tuple(comp), tuple(sizes))


def odd_components_after_deletion(g: Graph, deleted: Iterable[int]) -> int:
    """Number of odd-order components of the graph with `deleted` removed.

    The deleted vertices are masked during traversal; nothing is rebuilt.
    """
    blocked = 0
    for v in deleted:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range for n={g.vertex_count}")
        blocked |= 1 << v
    remaining = (1 << g.vertex_count) - 1 & ~blocked
    nbr = g.nbr_masks
    odd = 0
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            t = frontier
            while t:
                bit = t & -t
                t ^= bit
                reach |= nbr[bit.bit_length() - 1]
            frontier = reach & remaining & ~comp
            comp |= frontier
        remaining ^= comp
        odd += comp.bit_count() & 1
    return odd


@dataclass(frozen=True)
class DegreeProfile:
    max_degree: int
    degree_counts: dict[int, int]


def degree_profile(g: Graph) -> DegreeProfile:
    counts: dict[int, int] = {}
    for v in range(g.vertex_count):
        d = len(g.adjacency[v])
        counts[d] = counts.get(d, 0) + 1
    return DegreeProfile(max(counts) if counts else 0, counts)


class Regularity(NamedTuple):
    overall: bool
    per_component: tuple[bool, ...]


def is_k_regular(g: Graph, k: int) -> Regularity:
    """Whether every vertex has degree exactly k, overall and per component."""
    if k < 0:
        raise GraphError(f"degree must be non-negative, got {k}")
    parts = components(g)
    flags = [True] * parts.component_count
    for v in range(g.vertex_count):
        if len(g.adjacency[v]) != k:
            flags[parts.component_of[v]] = False
    per = tuple(flags)
    return Regularity(all(per), per)

"""Deterministic generators for the extremal families.

Each generator returns a :class:`GeneratedGraph`: the graph plus its
predicted order, size and matching number in closed form, so tests can
check the prediction against the matching algorithm exactly.

Two gadgets appear throughout. ``complete_minus_edge(k)`` is the complete
graph on k+1 vertices with one edge removed; its two endpoints have degree
k-1 and are the *link vertices* where an attachment edge may land without
pushing any degree past k. ``single_link_gadget(k)`` (odd k) is the graph
on k+2 vertices whose complement is a 2-edge path plus (k-1)/2 disjoint
edges; exactly one vertex — the path's center — has degree k-1 and serves
as the sole link vertex.

The families:

* ``block_chain(k, r, blocks)`` (even k) — r connector vertices, each
  adjacent to k blocks out of a row of r*(k-1)+1; consecutive connectors
  share one block. Every block is either a lone vertex or a
  complete-minus-edge gadget, per the ``blocks`` pattern. All-singles
  gives a tree; all-gadgets gives the densest member.
* ``tree_with_gadgets(k, tree)`` (odd k) — a bipartite tree whose
  second-part vertices are topped up to degree k by attaching
  single-link gadgets.
* ``regular_gadget_ring(k, r)`` (even k) — k*r/2 two-link gadgets wired
  to r hub vertices in a ring; connected and k-regular by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from matchbound.graphs import Graph, build_graph, components, degree_profile


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int
    r: int | None = None
    blocks: tuple[bool, ...] | None = None  # per block: True = gadget
    tree: "BipartiteTree | None" = None


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    predicted_n: int
    predicted_m: int
    predicted_alpha: int
    link_vertices: tuple[int, ...]
    spec: FamilySpec

    def __post_init__(self) -> None:
        assert self.graph.vertex_count == self.predicted_n
        assert self.graph.edge_count == self.predicted_m


def complete_minus_edge(k: int) -> GeneratedGraph:
    """Complete graph on k+1 vertices minus the edge {0, 1}."""
    if k < 2:
        raise ValueError(f"complete_minus_edge needs k >= 2, got {k}")
    n = k + 1
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if (u, v) != (0, 1)]
    g = build_graph(n, edges)
    spec = FamilySpec("complete_minus_edge", k)
    return GeneratedGraph(g, n, k * (k + 1) // 2 - 1, (k + 1) // 2,
                          (0, 1), spec)


def single_link_gadget(k: int) -> GeneratedGraph:
    """Dense gadget on k+2 vertices with one link vertex (vertex 0).

    Built as the complement of {0-1, 0-2} plus the perfect matching
    {3-4, 5-6, ..., k-(k+1)} on the remaining vertices. Vertex 0 ends at
    degree k-1, everything else at degree k.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"single_link_gadget needs odd k >= 3, got {k}")
    n = k + 2
    removed = {(0, 1), (0, 2)}
    removed.update((i, i + 1) for i in range(3, n, 2))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if (u, v) not in removed]
    g = build_graph(n, edges)
    spec = FamilySpec("single_link_gadget", k)
    return GeneratedGraph(g, n, (k * k + 2 * k - 1) // 2, (k + 1) // 2,
                          (0,), spec)


def _parse_blocks(blocks, length: int) -> tuple[bool, ...]:
    if isinstance(blocks, str):
        if blocks == "gadgets":
            return (True,) * length
        if blocks == "singles":
            return (False,) * length
        flags = []
        for ch in blocks:
            if ch in "g1":
                flags.append(True)
            elif ch in "s0":
                flags.append(False)
            else:
                raise ValueError(
                    f"block pattern may contain g/s (or 1/0), got {ch!r}")
        blocks = flags
    out = tuple(bool(b) for b in blocks)
    if len(out) != length:
        raise ValueError(
            f"need {length} block choices (r*(k-1)+1), got {len(out)}")
    return out


def block_chain(k: int, r: int, blocks="gadgets") -> GeneratedGraph:
    """Chain of r*(k-1)+1 blocks on r connector vertices (even k >= 4).

    Connector i is joined to blocks i*(k-1) .. i*(k-1)+k-1, so consecutive
    connectors share exactly one block; a shared gadget spends both of its
    link vertices, every other gadget one.
    """
    if k < 4 or k % 2:
        raise ValueError(f"block_chain needs even k >= 4, got {k}")
    if r < 1:
        raise ValueError(f"block_chain needs r >= 1, got {r}")
    length = r * (k - 1) + 1
    flags = _parse_blocks(blocks, length)

    edges: list[tuple[int, int]] = []
    link_vertices: list[int] = []
    attach: list[list[int]] = []  # per block: unused attachment points
    next_id = r
    for is_gadget in flags:
        if is_gadget:
            base = next_id
            next_id += k + 1
            edges.extend((base + u, base + v)
                         for u in range(k + 1) for v in range(u + 1, k + 1)
                         if (u, v) != (0, 1))
            link_vertices.extend((base, base + 1))
            attach.append([base, base + 1])
        else:
            attach.append([next_id, next_id])
            next_id += 1
    for i in range(r):
        for j in range(i * (k - 1), i * (k - 1) + k):
            edges.append((i, attach[j].pop(0)))
    g = build_graph(next_id, edges)

    gadget_count = sum(flags)
    single_count = length - gadget_count
    n = r + single_count + gadget_count * (k + 1)
    m = r * k + gadget_count * (k * (k + 1) // 2 - 1)
    alpha = r + gadget_count * k // 2
    spec = FamilySpec("block_chain", k, r, flags)
    return GeneratedGraph(g, n, m, alpha, tuple(link_vertices), spec)


@dataclass(frozen=True)
class BipartiteTree:
    """A tree with a designated bipartition, parts indexed 1 and 2."""
    graph: Graph
    part2: tuple[int, ...]

    @property
    def part1(self) -> tuple[int, ...]:
        in2 = set(self.part2)
        return tuple(v for v in range(self.graph.vertex_count)
                     if v not in in2)


def bipartite_tree(graph: Graph, part2) -> BipartiteTree:
    """Validate and wrap an explicit tree with its chosen second part."""
    n = graph.vertex_count
    if graph.edge_count != n - 1 or components(graph).component_count != 1:
        raise ValueError("input graph is not a tree")
    in2 = set(part2)
    if not all(0 <= v < n for v in in2):
        raise ValueError("part-2 ids out of range")
    for u, v in graph.edges():
        if (u in in2) == (v in in2):
            raise ValueError(
                f"edge ({u}, {v}) does not cross the given bipartition")
    return BipartiteTree(graph, tuple(sorted(in2)))


def canonical_tree(k: int, r: int, mode: str) -> BipartiteTree:
    """Deterministic caterpillar tree with |part2| = r.

    mode "tree": every part-2 vertex has degree exactly k (so attaching
    gadgets to cover part-2 deficiencies is a no-op and the family member
    stays a tree). mode "regular": every part-1 vertex has degree exactly
    k, which forces r = (k-1)*|part1| + 1; other r are rejected.
    """
    if k < 2:
        raise ValueError(f"canonical_tree needs k >= 2, got {k}")
    if r < 1:
        raise ValueError(f"canonical_tree needs r >= 1, got {r}")
    if mode not in ("tree", "regular"):
        raise ValueError(f"mode must be 'tree' or 'regular', got {mode!r}")

    if mode == "regular":
        if (r - 1) % (k - 1) != 0 or r < k:
            raise ValueError(
                f"no tree has every part-1 vertex of degree {k} with "
                f"|part2|={r}: counting edges forces |part2| = "
                f"(k-1)*|part1| + 1, so r must be 1 mod {k - 1} and >= {k}")
        spine_size = (r - 1) // (k - 1)
    else:
        spine_size = r

    # spine vertices 0..spine_size-1 all get degree k: consecutive spine
    # vertices share a connector, the rest is leaf padding
    edges: list[tuple[int, int]] = []
    next_id = spine_size
    for i in range(spine_size):
        spine_links = 0
        if i > 0:
            spine_links += 1  # connector created by the previous vertex
        if i + 1 < spine_size:
            connector = next_id
            next_id += 1
            edges.append((i, connector))
            edges.append((i + 1, connector))
            spine_links += 1
        for _ in range(k - spine_links):
            edges.append((i, next_id))
            next_id += 1
    g = build_graph(next_id, edges)
    spine = range(spine_size)
    others = range(spine_size, next_id)
    part2 = tuple(spine) if mode == "tree" else tuple(others)
    return BipartiteTree(g, part2)


def tree_with_gadgets(k: int, tree: BipartiteTree) -> GeneratedGraph:
    """Top up every part-2 vertex of the tree to degree k with gadgets.

    For each part-2 vertex x with degree d, k-d copies of the single-link
    gadget are attached by an edge from their link vertex to x (odd k).
    If every part-2 vertex already has degree k the result is the tree
    itself.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"tree_with_gadgets needs odd k >= 3, got {k}")
    base = tree.graph
    if degree_profile(base).max_degree > k:
        raise ValueError("tree has a vertex of degree above k")
    gadget = single_link_gadget(k).graph
    edges = list(base.edges())
    link_vertices: list[int] = []
    next_id = base.vertex_count
    for x in tree.part2:
        for _ in range(k - base.degree(x)):
            offset = next_id
            next_id += k + 2
            edges.extend((offset + u, offset + v) for u, v in gadget.edges())
            edges.append((x, offset))
            link_vertices.append(offset)
    g = build_graph(next_id, edges)

    n2 = len(tree.part2)
    n1 = base.vertex_count - n2
    n = (k * k + k - 1) * n2 - (k + 1) * n1 + (k + 2)
    m = ((k ** 3 + k * k - k + 1) * n2 - (k * k + 2 * k - 1) * n1
         + (k * k + 2 * k - 1)) // 2
    alpha = ((k * k + 1) * n2 - (k + 1) * n1 + (k + 1)) // 2
    spec = FamilySpec("tree_with_gadgets", k, tree=tree)
    return GeneratedGraph(g, n, m, alpha, tuple(link_vertices), spec)


def regular_gadget_ring(k: int, r: int) -> GeneratedGraph:
    """Connected k-regular graph from k*r/2 gadgets on r hubs (even k >= 4).

    Gadget i of the first r is shared between hub i and hub i+1 (mod r),
    which alone makes the graph connected; each hub then takes both link
    vertices of (k-2)/2 private gadgets to reach degree k.
    """
    if k < 4 or k % 2:
        raise ValueError(f"regular_gadget_ring needs even k >= 4, got {k}")
    if r < 1:
        raise ValueError(f"regular_gadget_ring needs r >= 1, got {r}")
    edges: list[tuple[int, int]] = []
    link_vertices: list[int] = []
    next_id = r

    def add_gadget(hub_a: int, hub_b: int) -> None:
        nonlocal next_id
        base = next_id
        next_id += k + 1
        edges.extend((base + u, base + v)
                     for u in range(k + 1) for v in range(u + 1, k + 1)
                     if (u, v) != (0, 1))
        link_vertices.extend((base, base + 1))
        edges.append((hub_a, base))
        edges.append((hub_b, base + 1))

    for i in range(r):
        add_gadget(i, (i + 1) % r)
    for hub in range(r):
        for _ in range((k - 2) // 2):
            add_gadget(hub, hub)
    g = build_graph(next_id, edges)

    n = r + (k * r // 2) * (k + 1)
    m = r * k + k * r * (k * k + k - 2) // 4
    alpha = r + k * k * r // 4
    spec = FamilySpec("regular_ring", k, r)
    return GeneratedGraph(g, n, m, alpha, tuple(link_vertices), spec)


def expected_matching_number(spec: FamilySpec) -> Fraction:
    """Closed-form predicted matching number for a family instance."""
    k = spec.k
    if spec.family == "complete_minus_edge":
        return Fraction((k + 1) // 2)
    if spec.family == "single_link_gadget":
        return Fraction((k + 1) // 2)
    if spec.family == "block_chain":
        if spec.r is None or spec.blocks is None:
            raise ValueError("block_chain spec needs r and blocks")
        return Fraction(spec.r + sum(spec.blocks) * k // 2)
    if spec.family == "tree_with_gadgets":
        if spec.tree is None:
            raise ValueError("tree_with_gadgets spec needs a tree")
        n2 = len(spec.tree.part2)
        n1 = spec.tree.graph.vertex_count - n2
        return Fraction((k * k + 1) * n2 - (k + 1) * n1 + (k + 1), 2)
    if spec.family == "regular_ring":
        if spec.r is None:
            raise ValueError("regular_ring spec needs r")
        return Fraction(spec.r) + Fraction(k * k * spec.r, 4)
    raise ValueError(f"unknown family {spec.family!r}")


def gadget_chain_average_degree(k: int, r: int) -> Fraction:
    """Average degree of the all-gadget block chain."""
    if k < 4 or k % 2:
        raise ValueError(f"needs even k >= 4, got {k}")
    if r < 1:
        raise ValueError(f"needs r >= 1, got {r}")
    return k - Fraction(r * (k - 2) + 2, r * k * k + k + 1)


def gadget_chain_average_degree_limit(k: int) -> Fraction:
    """Supremum of the all-gadget chain's average degree over all r."""
    if k < 4 or k % 2:
        raise ValueError(f"needs even k >= 4, got {k}")
    return k - Fraction(k - 2, k * k)

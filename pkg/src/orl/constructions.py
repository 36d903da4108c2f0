"""Deterministic builders for the named ordered graphs and colorings.

Positions are 1-based throughout.  Blocked graphs carry their block
intervals plus the designated inner/outer edges used when nesting cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from orl.core import (
    BLUE,
    Coloring,
    FormatError,
    OrderedGraph,
    RED,
    UnorderedGraph,
)


@dataclass(frozen=True)
class BlockedOrderedGraph:
    """An ordered graph with designated consecutive blocks and marker edges.

    Blocks are disjoint runs of consecutive positions listed left to right;
    they need not cover all positions (e.g. the leading outer pair of an odd
    alternating cycle and the matching part of a tee graph are unblocked).
    """

    graph: OrderedGraph
    blocks: tuple[tuple[int, ...], ...]
    inner_edge: Optional[tuple[int, int]] = None
    outer_edge: Optional[tuple[int, int]] = None

    def __post_init__(self):
        prev_end = 0
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be non-empty")
            if list(block) != list(range(block[0], block[-1] + 1)):
                raise ValueError("each block must be a run of consecutive positions")
            if block[0] <= prev_end:
                raise ValueError("blocks must be disjoint and left to right")
            if block[-1] > self.graph.n:
                raise ValueError("block exceeds the vertex range")
            prev_end = block[-1]
        for marker in (self.inner_edge, self.outer_edge):
            if marker is not None and tuple(sorted(marker)) not in self.graph.edges:
                raise ValueError(f"marker {marker} is not an edge")


@dataclass(frozen=True)
class TwoRegularSpec:
    """Cycle lengths of a 2-regular graph, in placement order."""

    cycle_lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycle_lengths", tuple(self.cycle_lengths))
        if not self.cycle_lengths:
            raise ValueError("at least one cycle is required")
        if any(length < 3 for length in self.cycle_lengths):
            raise ValueError("every cycle length must be at least 3")

    @property
    def total(self) -> int:
        return sum(self.cycle_lengths)


# ---------------------------------------------------------------------------
# paths, matchings, bipartite graphs
# ---------------------------------------------------------------------------

def alternating_path_order(n: int) -> list[int]:
    """Path vertices v_1..v_n listed in the alternating order.

    Odd-indexed vertices ascend first; they are followed by v_n (n even) or
    nothing extra (n odd, v_n is already odd-indexed), then the remaining
    even-indexed vertices in descending index order.
    """
    if n < 1:
        raise ValueError("the path needs at least one vertex")
    order = list(range(1, n + 1, 2))
    start = n if n % 2 == 0 else n - 1
    order.extend(range(start, 0, -2))
    return order


def alternating_path(n: int) -> OrderedGraph:
    """The path on n vertices under the alternating order."""
    order = alternating_path_order(n)
    pos = {v: k for k, v in enumerate(order, start=1)}
    edges = [(pos[i], pos[i + 1]) for i in range(1, n)]
    return OrderedGraph(n, edges)


def nested_matching(pairs: int) -> OrderedGraph:
    """The matching on 2*pairs positions with edges {i, 2*pairs+1-i}."""
    if pairs < 1:
        raise ValueError("at least one pair is required")
    n = 2 * pairs
    return OrderedGraph(n, [(i, n + 1 - i) for i in range(1, pairs + 1)])


def complete_bipartite(r: int, s: int) -> OrderedGraph:
    """Complete bipartite graph with the size-r interval left of the size-s one."""
    if r < 1 or s < 1:
        raise ValueError("both sides must be non-empty")
    edges = [(i, j) for i in range(1, r + 1) for j in range(r + 1, r + s + 1)]
    return OrderedGraph(r + s, edges)


# ---------------------------------------------------------------------------
# alternating cycles
# ---------------------------------------------------------------------------

def alternating_cycle(m: int) -> BlockedOrderedGraph:
    """The 2-regular alternating ordering of the cycle on m >= 3 positions.

    Even m: every position of the alternating path on m/2 + 1 vertices except
    the two degree-one endpoints (positions 1 and ceil((n+1)/2)) is split into
    a pair v_i < w_i, and each path edge {i, j} doubles into {v_i, w_j} and
    {w_i, v_j}.  Odd m: the same splitting with only position ceil((n+1)/2)
    of the path on (m-1)/2 vertices left unsplit, plus a leading outer pair
    joined as a triangle-like cap to the first block.
    """
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if m % 2 == 0:
        n = m // 2 + 1
        unsplit = {1, (n + 1 + 1) // 2}
        offset = 0
    else:
        n = (m - 1) // 2
        unsplit = {(n + 1 + 1) // 2}
        offset = 2
    path = alternating_path(n)
    v = [0] * (n + 1)
    w = [0] * (n + 1)
    pos = offset
    for i in range(1, n + 1):
        pos += 1
        v[i] = pos
        if i in unsplit:
            w[i] = pos
        else:
            pos += 1
            w[i] = pos
    assert pos == m
    edges = set()
    for i, j in path.edges:
        edges.add(tuple(sorted((v[i], w[j]))))
        edges.add(tuple(sorted((w[i], v[j]))))
    blocks = tuple(
        (v[i],) if v[i] == w[i] else (v[i], w[i]) for i in range(1, n + 1)
    )
    if m % 2 == 0:
        inner: Optional[tuple[int, int]] = (n - 1, n)
        outer = None
    else:
        edges.update({(1, 2), (1, w[1]), (2, v[1])})
        inner = (n + 2, n + 3) if m >= 5 else None
        outer = (1, 2)
    graph = OrderedGraph(m, edges)
    return BlockedOrderedGraph(graph, blocks, inner_edge=inner, outer_edge=outer)


# ---------------------------------------------------------------------------
# blow-ups and the tee/eff gadgets
# ---------------------------------------------------------------------------

def blowup_path(n: int, k: int) -> BlockedOrderedGraph:
    """The k-blow-up of the alternating path: each position becomes a block
    of k consecutive positions and each path edge a complete bipartite join."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    path = alternating_path(n)
    blocks = tuple(
        tuple(range((i - 1) * k + 1, i * k + 1)) for i in range(1, n + 1)
    )
    edges = [
        (u, v)
        for i, j in path.edges
        for u in blocks[i - 1]
        for v in blocks[j - 1]
    ]
    return BlockedOrderedGraph(OrderedGraph(n * k, edges), blocks)


def tee_graph(n: int, k: int) -> BlockedOrderedGraph:
    """Nested matching on 2n positions followed by n blocks of size k, with
    block i completely joined to both endpoints of the i-th matching edge."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    edges = set(nested_matching(n).edges)
    blocks = []
    for i in range(1, n + 1):
        block = tuple(range(2 * n + (i - 1) * k + 1, 2 * n + i * k + 1))
        blocks.append(block)
        for vtx in block:
            edges.add((i, vtx))
            edges.add((2 * n + 1 - i, vtx))
    return BlockedOrderedGraph(OrderedGraph((k + 2) * n, edges), tuple(blocks))


def eff_graph(n: int, k: int) -> BlockedOrderedGraph:
    """Union of the tee graph and the k-blow-up path placed on its blocks."""
    tee = tee_graph(n, k)
    path = alternating_path(n)
    edges = set(tee.graph.edges)
    for i, j in path.edges:
        for u in tee.blocks[i - 1]:
            for v in tee.blocks[j - 1]:
                edges.add((u, v))
    return BlockedOrderedGraph(OrderedGraph(tee.graph.n, edges), tee.blocks)


# ---------------------------------------------------------------------------
# orderings of 2-regular graphs
# ---------------------------------------------------------------------------

def _two_regular_token_order(
    spec: TwoRegularSpec, bipartite_mode: bool
) -> tuple[list[BlockedOrderedGraph], list[tuple[int, int]]]:
    """Nest the spec's alternating cycles; tokens are (cycle index, local position)."""
    if bipartite_mode and any(
        length % 2 or length < 4 for length in spec.cycle_lengths
    ):
        raise ValueError("bipartite mode needs even cycle lengths >= 4")

    cycles = [alternating_cycle(length) for length in spec.cycle_lengths]
    order: list[tuple[int, int]] = [(0, p) for p in range(1, cycles[0].graph.n + 1)]
    last_odd = 0 if spec.cycle_lengths[0] % 2 else None

    def insert_after(token: tuple[int, int], payload: list[tuple[int, int]]) -> None:
        at = order.index(token)
        order[at + 1 : at + 1] = payload

    for idx in range(1, len(cycles)):
        length = spec.cycle_lengths[idx]
        prev = cycles[idx - 1]
        tokens = [(idx, p) for p in range(1, length + 1)]
        if length % 2 == 0:
            body = tokens
        else:
            outer_pair, body = tokens[:2], tokens[2:]
            if last_odd is None:
                order[0:0] = outer_pair
            else:
                host_outer = cycles[last_odd].outer_edge
                assert host_outer is not None
                insert_after((last_odd, host_outer[0]), outer_pair)
            last_odd = idx
        if prev.inner_edge is None:
            # previous cycle is a triangle: place to its right
            rightmost = max(k for k, tok in enumerate(order) if tok[0] == idx - 1)
            order[rightmost + 1 : rightmost + 1] = body
        else:
            insert_after((idx - 1, prev.inner_edge[0]), body)
    return cycles, order


def order_two_regular(spec: TwoRegularSpec, bipartite_mode: bool = False) -> OrderedGraph:
    """Order the disjoint union of cycles by iteratively nesting alternating cycles.

    Even cycles are inserted between the endpoints of the previous cycle's
    inner edge (or directly to the right of a previous triangle, which has no
    inner edge).  Odd cycles put their outer pair between the endpoints of
    the most recent odd cycle's outer pair -- the first odd pair becomes the
    two leftmost positions -- and their remaining vertices go between the
    previous cycle's inner edge like the even case.  In bipartite mode all
    cycle lengths must be even and at least 4.
    """
    cycles, order = _two_regular_token_order(spec, bipartite_mode)
    position = {token: p for p, token in enumerate(order, start=1)}
    edges = []
    for idx, cyc in enumerate(cycles):
        for a, b in cyc.graph.edges:
            edges.append((position[(idx, a)], position[(idx, b)]))
    return OrderedGraph(len(order), edges)


def _cycle_decomposition(g: UnorderedGraph) -> tuple[list[list[int]], list[list[int]]]:
    """Split a maximum-degree-2 graph into its cycles and paths.

    Paths are returned as vertex sequences (isolated vertices are length-1
    paths); cycles as vertex sequences without the closing repeat.
    """
    if g.max_degree() > 2:
        raise ValueError("maximum degree exceeds 2")
    seen = set()
    paths, cycles = [], []
    # walk from every endpoint (degree <= 1) first: collects all paths
    for start in range(1, g.n + 1):
        if start in seen or g.degree(start) > 1:
            continue
        walk = [start]
        seen.add(start)
        cur, prev = start, None
        while True:
            nxt = [u for u in g.adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        paths.append(walk)
    # remaining vertices lie on cycles
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [u for u in g.adj[cur] if u != prev]
            if nxt[0] == walk[0] and len(walk) > 2:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        cycles.append(walk)
    return cycles, paths


def order_max_degree_two(g: UnorderedGraph, bipartite_mode: bool = False) -> OrderedGraph:
    """Order an arbitrary maximum-degree-2 graph via a 2-regular supergraph.

    Every path (and isolated vertex) is padded into a cycle of length
    max(3, its length) -- max(4, even length) in bipartite mode -- the padded
    2-regular graph is ordered with order_two_regular, and the resulting
    order is restricted to the original vertices.
    """
    cycles, paths = _cycle_decomposition(g)
    if bipartite_mode:
        for cyc in cycles:
            if len(cyc) % 2:
                raise ValueError("bipartite mode needs even cycles")

    def padded_length(p: int) -> int:
        if bipartite_mode:
            target = max(4, p)
            return target + (target % 2)
        return max(3, p)

    lengths = [len(c) for c in cycles] + [padded_length(len(p)) for p in paths]
    pieces: list[list[Optional[int]]] = [list(c) for c in cycles]
    for p in paths:
        pad: list[Optional[int]] = list(p)
        pad.extend([None] * (padded_length(len(p)) - len(p)))
        pieces.append(pad)

    spec = TwoRegularSpec(tuple(lengths))
    _, token_positions = _two_regular_token_order(spec, bipartite_mode)

    # Restricting the supergraph ordering to the original vertices only needs
    # to know which original vertex sits at each supergraph position.  The
    # t-th vertex along piece idx sits at the cycle's t-th walk position, so
    # consecutive piece vertices are cycle-adjacent and g stays a subgraph.
    cycle_vertex_at: dict[tuple[int, int], Optional[int]] = {}
    for idx, piece in enumerate(pieces):
        walk = _alternating_cycle_walk(lengths[idx])
        for t, vertex in enumerate(piece):
            cycle_vertex_at[(idx, walk[t])] = vertex
    keep = []
    for pos, token in enumerate(token_positions, start=1):
        original = cycle_vertex_at[token]
        if original is not None:
            keep.append((pos, original))
    keep.sort()
    relabel = {original: r for r, (_, original) in enumerate(keep, start=1)}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges]
    return OrderedGraph(g.n, edges)


def _alternating_cycle_walk(m: int) -> list[int]:
    """Ordered positions of the alternating cycle visited along the cycle."""
    cyc = alternating_cycle(m).graph
    start = 1
    walk = [start]
    prev = None
    cur = start
    while len(walk) < m:
        nxt = [u for u in cyc.neighbors(cur) if u != prev]
        prev, cur = cur, nxt[0]
        walk.append(cur)
    return walk


# ---------------------------------------------------------------------------
# greedy proper-coloring ordering
# ---------------------------------------------------------------------------

def order_by_proper_coloring(g: UnorderedGraph, max_degree: int) -> OrderedGraph:
    """Order a bounded-degree graph by greedy color classes placed as intervals.

    The greedy proper coloring uses at most max_degree + 1 colors, so the
    resulting ordering has interval chromatic number at most max_degree + 1.
    """
    if g.max_degree() > max_degree:
        raise ValueError(
            f"graph has maximum degree {g.max_degree()} > {max_degree}"
        )
    color: dict[int, int] = {}
    for v in range(1, g.n + 1):
        used = {color[u] for u in g.adj[v] if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    by_class = sorted(range(1, g.n + 1), key=lambda v: (color[v], v))
    position = {v: p for p, v in enumerate(by_class, start=1)}
    return OrderedGraph(g.n, [(position[a], position[b]) for a, b in g.edges])


# ---------------------------------------------------------------------------
# the quadratic lower-bound instance
# ---------------------------------------------------------------------------

def quadratic_lb_instance(n: int) -> tuple[OrderedGraph, Coloring]:
    """The 2-regular ordering (one cycle of length n/3 plus 2n/9 triangles in
    disjoint consecutive intervals, largest cycle first) together with the
    interval coloring of the complete order on (n/3 - 1) * (4n/9) positions:
    blue inside each of the 4n/9 size-(n/3 - 1) intervals, red across them.
    """
    if n < 9 or n % 9:
        raise ValueError("n must be a positive multiple of 9")
    lengths = [n // 3] + [3] * (2 * n // 9)
    edges = []
    offset = 0
    for length in lengths:
        cyc = alternating_cycle(length).graph
        edges.extend((offset + a, offset + b) for a, b in cyc.edges)
        offset += length
    graph = OrderedGraph(n, edges)

    size = n // 3 - 1
    count = 4 * n // 9
    host = size * count

    def interval_of(v: int) -> int:
        return (v - 1) // size

    coloring = Coloring.from_function(
        host, lambda i, j: BLUE if interval_of(i) == interval_of(j) else RED
    )
    return graph, coloring


# ---------------------------------------------------------------------------
# blocks sidecar format
# ---------------------------------------------------------------------------

def serialize_blocks(b: BlockedOrderedGraph) -> str:
    """One-line sidecar: `blocks s1 s2 ... [/ inner i j] [/ outer i j]`.

    Block sizes are listed left to right; block k starts where block k-1
    ended only when the blocks are contiguous, so the start of the first
    block is recorded as `at <start>` when it is not position 1.
    """
    parts = ["blocks"]
    if b.blocks and b.blocks[0][0] != 1:
        parts.append(f"at {b.blocks[0][0]}")
    parts.extend(str(len(block)) for block in b.blocks)
    text = " ".join(parts)
    if b.inner_edge is not None:
        text += f" / inner {b.inner_edge[0]} {b.inner_edge[1]}"
    if b.outer_edge is not None:
        text += f" / outer {b.outer_edge[0]} {b.outer_edge[1]}"
    return text + "\n"


def parse_blocks(text: str, graph: OrderedGraph) -> BlockedOrderedGraph:
    """Parse the sidecar emitted by serialize_blocks against its graph."""
    line = text.strip()
    if not line:
        raise FormatError(1, "empty blocks line")
    sections = [s.strip() for s in line.split("/")]
    head = sections[0].split()
    if head[0] != "blocks":
        raise FormatError(1, "expected `blocks ...`")
    head = head[1:]
    start = 1
    if head[:1] == ["at"]:
        try:
            start = int(head[1])
        except (IndexError, ValueError):
            raise FormatError(1, "expected `at <start>`") from None
        head = head[2:]
    try:
        sizes = [int(tok) for tok in head]
    except ValueError:
        raise FormatError(1, "block sizes must be integers") from None
    blocks = []
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    inner = outer = None
    for section in sections[1:]:
        parts = section.split()
        if len(parts) != 3 or parts[0] not in ("inner", "outer"):
            raise FormatError(1, "expected `inner i j` or `outer i j`")
        try:
            edge = (int(parts[1]), int(parts[2]))
        except ValueError:
            raise FormatError(1, "marker endpoints must be integers") from None
        if parts[0] == "inner":
            inner = edge
        else:
            outer = edge
    return BlockedOrderedGraph(graph, tuple(blocks), inner_edge=inner, outer_edge=outer)

"""Undirected simple graphs: parsing, canonical labeling, enumeration.

Vertices are always the integers 0..n-1.  Textual inputs may use arbitrary
whitespace-free names; these are renumbered in first-appearance order and
kept only as display labels, never consulted by any algorithm.  Two text
encodings are supported: a line-oriented edge list and the graph6 small
format (at most 62 vertices).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

GRAPH6_MAX = 62
CANONICAL_MAX = 10
ENUMERATE_MAX = 8


class ParseError(ValueError):
    """Malformed textual input (edge list, graph6, profile, dgraph)."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class LimitExceeded(ValueError):
    """Input is larger than a documented brute-force cap."""


class DuplicateEdgeWarning(UserWarning):
    """An edge appeared more than once in the input and was deduplicated."""


@dataclass(frozen=True)
class UndirectedGraph:
    """A finite simple graph; edges are (u, v) pairs with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"bad edge ({u}, {v}) in a graph on {self.n} vertices")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")

    @staticmethod
    def from_edges(
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> "UndirectedGraph":
        """Build a graph from unordered pairs, normalizing endpoint order."""
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edges.add((min(u, v), max(u, v)))
        return UndirectedGraph(n, frozenset(edges), labels)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor set of each vertex as a bitmask."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adjacency))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, frozenset())


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(
        n, frozenset((u, v) for u in range(n) for v in range(u + 1, n))
    )


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph(
        a + b, frozenset((u, a + v) for u in range(a) for v in range(b))
    )


def disjoint_union(g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    edges = set(g.edges)
    edges.update((u + g.n, v + g.n) for u, v in h.edges)
    return UndirectedGraph(g.n + h.n, frozenset(edges))


def graph_join(g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    """Disjoint union plus every cross edge."""
    base = disjoint_union(g, h)
    cross = {(u, g.n + v) for u in range(g.n) for v in range(h.n)}
    return UndirectedGraph(base.n, base.edges | cross)


def parse_edge_list(text: str) -> UndirectedGraph:
    """Parse the line-oriented edge-list format.

    An optional leading line ``vertices: <k>`` declares the vertex count
    (the way to get isolated vertices).  Every other significant line names
    one edge as two whitespace-separated labels; ``#`` starts a comment.
    Duplicate edges are deduplicated with a warning; self-loops are errors.
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    declared: int | None = None
    body_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if body_seen:
                raise ParseError("vertices: header must precede all edges", lineno)
            if declared is not None:
                raise ParseError("repeated vertices: header", lineno)
            rest = line[len("vertices:") :].strip()
            if not rest.isdigit():
                raise ParseError(f"bad vertex count {rest!r}", lineno)
            declared = int(rest)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(
                f"expected two labels per edge line, got {len(parts)}", lineno
            )
        a, b = parts
        if a == b:
            raise ParseError(f"self-loop at {a!r}", lineno)
        for name in (a, b):
            if name not in index:
                index[name] = len(labels)
                labels.append(name)
        edge = (min(index[a], index[b]), max(index[a], index[b]))
        if edge in edges:
            warnings.warn(
                f"duplicate edge {a} {b} (line {lineno})",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
        edges.add(edge)
        body_seen = True
    n = max(declared or 0, len(labels))
    if declared is not None and declared < len(labels):
        warnings.warn(
            f"vertices: {declared} is below the {len(labels)} labeled vertices",
            UserWarning,
            stacklevel=2,
        )
    while len(labels) < n:
        labels.append(str(len(labels)))
    return UndirectedGraph(n, frozenset(edges), tuple(labels) if labels else None)


def _pack_graph6(n: int, bits: list[int]) -> bytes:
    out = bytearray([n + 63])
    acc = 0
    width = 0
    for bit in bits:
        acc = acc << 1 | bit
        width += 1
        if width == 6:
            out.append(acc + 63)
            acc = 0
            width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out)


def parse_graph6(text: str | bytes) -> UndirectedGraph:
    """Decode one small-format graph6 record (n <= 62)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise ParseError("empty graph6 input")
    if data[0] == 126:
        raise ParseError("large-format graph6 (leading '~') is not supported")
    n = data[0] - 63
    if not 0 <= n <= GRAPH6_MAX:
        raise ParseError(f"invalid graph6 header byte {data[0]}")
    body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body for n={n} needs {need} bytes, got {len(body)}")
    bits = []
    for ch in body:
        if not 63 <= ch <= 126:
            raise ParseError(f"invalid graph6 byte {ch}")
        value = ch - 63
        bits.extend(value >> shift & 1 for shift in range(5, -1, -1))
    edges = set()
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.add((u, v))
            k += 1
    return UndirectedGraph(n, frozenset(edges))


def to_graph6(g: UndirectedGraph) -> str:
    """Encode with the identity vertex order (no canonicalization)."""
    if g.n > GRAPH6_MAX:
        raise LimitExceeded(f"graph6 caps at {GRAPH6_MAX} vertices, got {g.n}")
    bits = [1 if (u, v) in g.edges else 0 for v in range(g.n) for u in range(v)]
    return _pack_graph6(g.n, bits).decode("ascii")


def complement(g: UndirectedGraph) -> UndirectedGraph:
    edges = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    )
    return UndirectedGraph(g.n, edges, g.labels)


def connected_components(g: UndirectedGraph) -> tuple[tuple[int, ...], ...]:
    """Components as sorted vertex tuples, ordered by least vertex."""
    adj = g.adjacency
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            mask = adj[v]
            while mask:
                low = mask & -mask
                mask ^= low
                u = low.bit_length() - 1
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def induced_subgraph(g: UndirectedGraph, vertices: Iterable[int]) -> UndirectedGraph:
    """Restrict to a vertex set, renumbering it in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    edges = frozenset(
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    )
    labels = tuple(g.label_of(v) for v in vs) if g.labels is not None else None
    return UndirectedGraph(len(vs), edges, labels)


def _twins(adj: tuple[int, ...], u: int, w: int) -> bool:
    # Same neighbors apart from each other: swapping u and w is an automorphism.
    mask = ~((1 << u) | (1 << w))
    return adj[u] & mask == adj[w] & mask


def _minimal_bits(adj: tuple[int, ...], n: int) -> list[int]:
    """Lexicographically minimal upper-triangle bit sequence over all orders.

    Orders are grown one vertex at a time.  At each position only the
    candidates whose adjacency column against the placed prefix is minimal
    are expanded, interchangeable candidates (twins) only once, and any
    branch that falls behind the best complete order found so far is cut.
    """
    best: list[int] | None = None
    prefix: list[int] = []
    placed: list[int] = []
    used = 0

    def rec() -> None:
        nonlocal best, used
        pos = len(placed)
        if pos == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        offset = len(prefix)
        by_col: dict[tuple[int, ...], list[int]] = {}
        for u in range(n):
            if used >> u & 1:
                continue
            col = tuple(adj[u] >> p & 1 for p in placed)
            by_col.setdefault(col, []).append(u)
        col = min(by_col)
        if best is not None and prefix == best[:offset]:
            if list(col) > best[offset : offset + pos]:
                return
        reps: list[int] = []
        for u in by_col[col]:
            if not any(_twins(adj, u, w) for w in reps):
                reps.append(u)
        prefix.extend(col)
        for u in reps:
            placed.append(u)
            used |= 1 << u
            rec()
            placed.pop()
            used &= ~(1 << u)
        del prefix[offset:]

    rec()
    return best if best is not None else []


def canonical_form(g: UndirectedGraph) -> bytes:
    """graph6 bytes minimized over all vertex orders.

    Equal byte strings characterize isomorphic graphs.  The search is
    exponential in the worst case, hence the documented cap.
    """
    if g.n > CANONICAL_MAX:
        raise LimitExceeded(
            f"canonical_form is capped at n <= {CANONICAL_MAX}, got {g.n}"
        )
    return _pack_graph6(g.n, _minimal_bits(g.adjacency, g.n))


def enumerate_graphs(n: int, limit: int = ENUMERATE_MAX) -> list[UndirectedGraph]:
    """One canonical representative per isomorphism class on n vertices.

    Built level by level: each class on k-1 vertices is extended by a new
    vertex attached in all 2^(k-1) ways, then deduplicated by canonical
    form.  Results come relabeled into canonical form, sorted by their
    graph6 bytes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise LimitExceeded(f"enumeration is capped at n <= {limit}, got {n}")
    keys: list[bytes] = [canonical_form(empty_graph(0))]
    for k in range(1, n + 1):
        seen: set[bytes] = set()
        for key in keys:
            base = set(parse_graph6(key).edges)
            for nb in range(1 << (k - 1)):
                extra = {(i, k - 1) for i in range(k - 1) if nb >> i & 1}
                g = UndirectedGraph(k, frozenset(base | extra))
                seen.add(canonical_form(g))
        keys = sorted(seen)
    return [parse_graph6(key) for key in keys]

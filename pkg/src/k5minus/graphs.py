"""Immutable simple undirected graphs with graph6 and edge-list interchange.

Vertices are dense integers 0..n-1.  Graph values never change after
construction, so they can be shared freely between concurrent searches.
"""

from __future__ import annotations

from typing import Iterable


class GraphError(Exception):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class MalformedEncoding(GraphError):
    """Raised on a bad graph6 string; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency."""

    __slots__ = ("n", "m", "_adj", "_adj_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise OutOfRange(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        self._adj_sets: tuple[frozenset[int], ...] = tuple(
            frozenset(s) for s in adj
        )
        self.m = sum(len(s) for s in adj) // 2
        self._masks: tuple[int, ...] | None = None

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v set iff v adjacent)."""
        if self._masks is None:
            masks = []
            for u in range(self.n):
                m = 0
                for v in self._adj[u]:
                    m |= 1 << v
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self._adj)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and construct; duplicate edges are silently merged."""
    return Graph(n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on s, relabeled onto 0..|s|-1.

    Returns the subgraph and the old->new relabeling map (sorted order).
    """
    keep = sorted(set(s))
    for v in keep:
        if not (0 <= v < g.n):
            raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges()
        if u in relabel and v in relabel
    ]
    return Graph(len(keep), edges), relabel


# -- graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: str, offset: int) -> tuple[int, int]:
    """Decode the leading N(n) field; returns (n, bytes consumed)."""
    if not data:
        raise MalformedEncoding("empty graph6 string", offset)
    c = ord(data[0])
    if c != 126:
        if not 63 <= c <= 126:
            raise MalformedEncoding(f"bad size byte {c}", offset)
        return c - 63, 1
    if len(data) >= 2 and ord(data[1]) == 126:
        if len(data) < 8:
            raise MalformedEncoding("truncated 8-byte size field", offset)
        vals = [ord(ch) - 63 for ch in data[2:8]]
        if any(not 0 <= x <= 63 for x in vals):
            raise MalformedEncoding("bad size byte", offset + 2)
        n = 0
        for x in vals:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise MalformedEncoding("truncated 4-byte size field", offset)
    vals = [ord(ch) - 63 for ch in data[1:4]]
    if any(not 0 <= x <= 63 for x in vals):
        raise MalformedEncoding("bad size byte", offset + 1)
    n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (optionally prefixed with '>>graph6<<')."""
    line = text.strip()
    offset = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        offset = len(_G6_HEADER)
    n, used = _g6_size(line, offset)
    body = line[used:]
    offset += used
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise MalformedEncoding(
            f"need {nbytes} data bytes, got {len(body)}", offset + len(body)
        )
    if len(body) > nbytes:
        raise MalformedEncoding("trailing bytes", offset + nbytes)
    bits = []
    for i, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedEncoding(f"bad data byte {c}", offset + i)
        x = c - 63
        bits.extend((x >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    for i in range(nbits, len(bits)):
        if bits[i]:
            raise MalformedEncoding("nonzero padding", offset + i // 6)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode in standard graph6 (no header)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        out = ["~", "~"]
        out.extend(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


# -- plain edge-list text ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' on the first line followed by m lines 'u v'."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"expected 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- small helpers shared across modules ------------------------------------


def components(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> list[list[int]]:
    """Connected components of g minus `removed`, each sorted, ordered by min vertex."""
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps

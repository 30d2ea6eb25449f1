"""Simple undirected graphs as bit-packed adjacency rows, plus text codecs."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62

STANDARD_KINDS = ("complete", "path", "cycle", "edgeless")


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Row u is an int whose bit v is set iff {u, v} is an edge. Construction
    validates symmetry and a zero diagonal, so equality, XOR and neighborhood
    tests on any Graph are word-wise integer operations.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            m = row
            while m:
                v = (m & -m).bit_length() - 1
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                m &= m - 1
        self.n = n
        self.rows = rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            while m:
                yield (u, u + 1 + ((m & -m).bit_length() - 1))
                m &= m - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.rows), reverse=True))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, rows)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = 0
        out: list[list[int]] = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    nxt |= self.rows[v]
                    m &= m - 1
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(_mask_to_list(comp))
        return out

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; vertex k of the result is vertices[k]."""
        index = {v: k for k, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex in induced-subgraph selection")
        rows = [0] * len(vertices)
        for v, k in index.items():
            m = self.rows[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                j = index.get(w)
                if j is not None:
                    rows[k] |= 1 << j
        return Graph(len(vertices), rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def new_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicates collapse."""
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop pair ({u}, {v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def standard_graph(kind: str, n: int) -> Graph:
    """Named graph on vertices 0..n-1 with consecutive labeling.

    kind is one of "complete", "path", "cycle", "edgeless"; cycles need n >= 3.
    """
    if kind not in STANDARD_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {STANDARD_KINDS}")
    if n < 1:
        raise ValueError(f"standard graphs need n >= 1, got {n}")
    if kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif kind == "path":
        edges = [(v, v + 1) for v in range(n - 1)]
    elif kind == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        edges = [(v, (v + 1) % n) for v in range(n)]
    else:
        edges = []
    return new_graph(n, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; vertices of each part are shifted by a running offset."""
    n = sum(g.n for g in parts)
    rows: list[int] = []
    offset = 0
    for g in parts:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph(n, rows)


def graph6_encode(g: Graph) -> str:
    """Encode in graph6 short form (n <= 62)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form handles n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.rows[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def graph6_decode(s: str | bytes) -> Graph:
    """Decode a graph6 short-form string; optional '>>graph6<<' header allowed."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"graph6 character {ch!r} outside printable range 63..126")
    if ord(s[0]) == 126:
        raise ValueError("long-form graph6 (n >= 63) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise ValueError(f"truncated graph6 bit field: need {need} characters, got {len(body)}")
    if len(body) > need:
        raise ValueError(f"trailing data after graph6 bit field ({len(body) - need} extra characters)")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(body[pos // 6]) - 63
            if (chunk >> (5 - pos % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


def format_edge_list(g: Graph) -> str:
    """Plain text format: first line n, then one '0'-indexed 'u v' line per edge."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"edge-list header must be a vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return new_graph(n, edges)

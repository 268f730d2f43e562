"""Simple undirected graphs on dense integer labels.

Adjacency is stored as one Python int bitmask per vertex, so neighborhood
intersection, layering and containment search are word-parallel.  Graph
values are immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import Graph6ParseError, InvalidParameterError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; vertices are 0..n-1, adj[u] is a bitmask."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise InvalidParameterError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @cached_property
    def edge_total(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        return bits(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def with_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the map from new labels back to old ones."""
        vmap = tuple(vertices)
        index = {v: i for i, v in enumerate(vmap)}
        rows = [0] * len(vmap)
        for i, v in enumerate(vmap):
            for w in bits(self.adj[v]):
                j = index.get(w)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vmap), tuple(rows)), vmap


# ---------------------------------------------------------------------------
# named constructions


def construct_family(family: str, params: Sequence[int]) -> Graph:
    """Build one of the named graph families.

    complete [n], empty [n], star [n] (hub at vertex 0),
    split [n, k] (clique on 0..k-1 joined to an independent set),
    split_plus [n, k] (split plus the single edge (k, k+1)),
    join [a, b] (complete bipartite K_{a,b}).
    """
    name = family.lower().replace("-", "_")
    if name == "complete":
        (n,) = _expect_params(params, 1, family)
        _require(n >= 0, f"complete needs n >= 0, got {n}")
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if name == "empty":
        (n,) = _expect_params(params, 1, family)
        _require(n >= 0, f"empty needs n >= 0, got {n}")
        return Graph(n, (0,) * n)
    if name == "star":
        (n,) = _expect_params(params, 1, family)
        _require(n >= 1, f"star needs n >= 1, got {n}")
        return Graph.from_edges(n, ((0, v) for v in range(1, n)))
    if name == "split":
        n, k = _expect_params(params, 2, family)
        _require(1 <= k < n, f"split needs 1 <= k < n, got n={n} k={k}")
        return Graph.from_edges(n, _split_edges(n, k))
    if name == "split_plus":
        n, k = _expect_params(params, 2, family)
        _require(1 <= k < n, f"split_plus needs 1 <= k < n, got n={n} k={k}")
        _require(n - k >= 2, f"split_plus needs n - k >= 2, got n={n} k={k}")
        edges = list(_split_edges(n, k))
        edges.append((k, k + 1))
        return Graph.from_edges(n, edges)
    if name == "join":
        a, b = _expect_params(params, 2, family)
        _require(a >= 1 and b >= 1, f"join needs both sides >= 1, got {a},{b}")
        return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))
    raise InvalidParameterError(f"unknown family {family!r}")


def _split_edges(n: int, k: int) -> Iterator[tuple[int, int]]:
    for u in range(k):
        for v in range(u + 1, n):
            yield u, v


def _expect_params(params: Sequence[int], count: int, family: str) -> Sequence[int]:
    if len(params) != count:
        raise InvalidParameterError(
            f"family {family!r} takes {count} parameter(s), got {len(params)}"
        )
    return params


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


# ---------------------------------------------------------------------------
# layers, the two-layer link graph, edge counting, components


def distance_layers(G: Graph, u: int) -> list[int]:
    """Bitmasks of the BFS layers around u; index d holds the distance-d set."""
    if not 0 <= u < G.n:
        raise InvalidParameterError(f"vertex {u} outside 0..{G.n - 1}")
    seen = 1 << u
    layers = [seen]
    frontier = seen
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def neighborhood_layer(G: Graph, u: int, d: int) -> frozenset[int]:
    """Exact distance-d set around u (empty when nothing sits at distance d)."""
    if d < 0:
        raise InvalidParameterError(f"distance must be nonnegative, got {d}")
    layers = distance_layers(G, u)
    if d >= len(layers):
        return frozenset()
    return frozenset(bits(layers[d]))


def link_graph(G: Graph, u: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on the first two layers around u, keeping only edges that
    touch the first layer.  Edges inside the second layer are dropped.

    Returns the relabeled graph and the map from new labels back to G.
    """
    layers = distance_layers(G, u)
    n1 = layers[1] if len(layers) > 1 else 0
    n2 = layers[2] if len(layers) > 2 else 0
    vmap = tuple(bits(n1)) + tuple(bits(n2))
    index = {v: i for i, v in enumerate(vmap)}
    rows = [0] * len(vmap)
    for v in bits(n1):
        i = index[v]
        for w in bits(G.adj[v] & (n1 | n2)):
            j = index[w]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(len(vmap), tuple(rows)), vmap


def edge_count(G: Graph, U: Iterable[int], V: Iterable[int] | None = None) -> int:
    """e(U) for one vertex set, e(U, V) for two disjoint ones."""
    umask = mask_of(U)
    if V is None:
        return sum((G.adj[u] & umask).bit_count() for u in bits(umask)) // 2
    vmask = mask_of(V)
    if umask & vmask:
        raise InvalidParameterError("U and V must be disjoint for e(U, V)")
    return sum((G.adj[u] & vmask).bit_count() for u in bits(umask))


def components(G: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = 0
    out = []
    for start in range(G.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(bits(comp)))
    return out


def component_count(G: Graph) -> int:
    if G.n < 1:
        raise InvalidParameterError("component count needs at least one vertex")
    return len(components(G))


def is_connected(G: Graph) -> bool:
    return G.n >= 1 and len(components(G)) == 1


# ---------------------------------------------------------------------------
# twin classes (used by the containment searches to skip symmetric branches)


@lru_cache(maxsize=65536)
def twin_classes(G: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition vertices into interchangeability classes.

    Two vertices with N(u) = N(v) (or N[u] = N[v]) can be swapped by an
    automorphism, so any embedding search only needs one representative of
    a class at each choice point.  A vertex cannot have both kinds of twin,
    so the two groupings merge into a partition.
    """
    by_open: dict[int, list[int]] = {}
    for v in range(G.n):
        by_open.setdefault(G.adj[v], []).append(v)
    assigned = {}
    classes = []
    for group in by_open.values():
        if len(group) >= 2:
            classes.append(tuple(group))
            for v in group:
                assigned[v] = True
    by_closed: dict[int, list[int]] = {}
    for v in range(G.n):
        if v not in assigned:
            by_closed.setdefault(G.adj[v] | (1 << v), []).append(v)
    classes.extend(tuple(group) for group in by_closed.values())
    return tuple(sorted(classes))


def twin_class_ids(G: Graph) -> tuple[int, ...]:
    """Class index per vertex, aligned with twin_classes(G)."""
    ids = [0] * G.n
    for i, cls in enumerate(twin_classes(G)):
        for v in cls:
            ids[v] = i
    return tuple(ids)


# ---------------------------------------------------------------------------
# graph6 interchange (header byte n+63, upper triangle column-major,
# 6-bit groups offset by 63, one graph per newline-terminated line)


def graph6_encode(G: Graph) -> str:
    chunks = [_graph6_header(G.n)]
    buf = 0
    filled = 0
    for j in range(1, G.n):
        column = G.adj[j]
        for i in range(j):
            buf = (buf << 1) | (column >> i & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(buf + 63))
                buf = 0
                filled = 0
    if filled:
        chunks.append(chr((buf << (6 - filled)) + 63))
    return "".join(chunks)


def _graph6_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InvalidParameterError(f"graph too large for graph6: n={n}")


def graph6_decode(line: str) -> Graph:
    text = line.rstrip("\n")
    if not text:
        raise Graph6ParseError("empty graph6 line", 0)
    vals = []
    for off, ch in enumerate(text):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ParseError(f"byte {code} outside printable graph6 range", off)
        vals.append(code - 63)
    pos = 0
    if vals[0] == 63:  # '~' marks an extended size header
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise Graph6ParseError("truncated 8-byte size header", len(text))
            n = 0
            for v in vals[2:8]:
                n = n << 6 | v
            pos = 8
        else:
            if len(vals) < 4:
                raise Graph6ParseError("truncated 4-byte size header", len(text))
            n = vals[1] << 12 | vals[2] << 6 | vals[3]
            pos = 4
    else:
        n = vals[0]
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos < need:
        raise Graph6ParseError(
            f"payload too short: need {need} groups for n={n}", len(text)
        )
    if len(vals) - pos > need:
        raise Graph6ParseError(f"trailing bytes after n={n} payload", pos + need)
    rows = [0] * n
    bit = 0
    for gi in range(need):
        group = vals[pos + gi]
        for b in range(5, -1, -1):
            if bit >= nbits:
                if group >> b & 1:
                    raise Graph6ParseError("nonzero padding bits", pos + gi)
                continue
            if group >> b & 1:
                i, j = _pair_of_bit(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def _pair_of_bit(bit: int) -> tuple[int, int]:
    # column-major: bit index runs (0,1),(0,2),(1,2),(0,3),...
    j = 1
    base = 0
    while base + j <= bit:
        base += j
        j += 1
    return bit - base, j

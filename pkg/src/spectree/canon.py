"""Canonical labeling and isomorph-free graph enumeration at desk scale.

The canonical form comes from color refinement plus individualization:
refine vertex colors by neighbor color multisets, branch on the first
non-singleton cell, and take the maximum adjacency bit code over all
discrete leaves.  Twin vertices inside the branch cell are collapsed
because a twin transposition is an automorphism.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import ResourceLimitError
from .graphs import Graph, bits

# non-isomorphic simple graphs on 1..8 vertices, used as a self-check
GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _code_under(n: int, adj: tuple[int, ...], perm: list[int]) -> int:
    code = 0
    for j in range(1, n):
        row = adj[perm[j]]
        for i in range(j):
            code = code << 1 | (row >> perm[i] & 1)
    return code


def canonical_code(G: Graph) -> int:
    """Canonical adjacency bit code; equal codes mean isomorphic graphs
    of the same order."""
    n, adj = G.n, G.adj
    if n <= 1:
        return 0
    colors = _refine(n, adj, [adj[v].bit_count() for v in range(n)])
    best = -1

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        if len(cells) == n:
            perm = [cells[c][0] for c in sorted(cells)]
            code = _code_under(n, adj, perm)
            if code > best:
                best = code
            return
        target = min(c for c, members in cells.items() if len(members) > 1)
        members = cells[target]
        tried_masks: set[tuple[int, int]] = set()
        for v in members:
            # twin collapse: branches on twins produce the same leaf codes
            key = (adj[v] & ~(1 << v), 0)
            key_closed = (adj[v] | (1 << v), 1)
            if key in tried_masks or key_closed in tried_masks:
                continue
            tried_masks.add(key)
            tried_masks.add(key_closed)
            split = [colors[u] * 2 + (0 if u == v else 1) for u in range(n)]
            search(_refine(n, adj, split))

    search(colors)
    return best


def graph_from_code(n: int, code: int) -> Graph:
    """Rebuild a graph from its upper-triangle bit code (column-major,
    most significant bit first, matching canonical_code)."""
    nbits = n * (n - 1) // 2
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def canonical_form(G: Graph) -> Graph:
    """Canonically labeled copy; isomorphic graphs map to equal values."""
    return graph_from_code(G.n, canonical_code(G))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and canonical_code(G) == canonical_code(H)


@lru_cache(maxsize=None)
def _levels(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical codes of all graphs on n vertices, grouped by edge count.

    Incremental edge augmentation: every graph with m+1 edges arises from
    one with m edges by adding an edge, so growing level by level with
    canonical-form rejection visits each isomorphism class exactly once.
    """
    empty = Graph(n, (0,) * n)
    levels = [(canonical_code(empty),)]
    current = {levels[0][0]}
    memo: dict[tuple[int, ...], int] = {}
    max_edges = n * (n - 1) // 2
    for _ in range(max_edges):
        nxt: set[int] = set()
        for code in current:
            G = graph_from_code(n, code)
            for u in range(n):
                free = ~(G.adj[u] | (1 << u)) & ((1 << n) - 1)
                for v in bits(free >> (u + 1)):
                    H = G.with_edge(u, u + 1 + v)
                    child = memo.get(H.adj)
                    if child is None:
                        child = canonical_code(H)
                        memo[H.adj] = child
                    nxt.add(child)
        levels.append(tuple(sorted(nxt)))
        current = nxt
    return tuple(levels)


def enumerate_graphs(n: int, cap: int = 8) -> Iterator[Graph]:
    """All graphs on n vertices, one canonically labeled representative per
    isomorphism class, in (edge count, code) order."""
    if n < 1:
        raise ResourceLimitError(f"enumeration needs n >= 1, got {n}")
    if n > cap:
        raise ResourceLimitError(f"exhaustive enumeration capped at n <= {cap}, got {n}")
    for level in _levels(n):
        for code in level:
            yield graph_from_code(n, code)


def count_graphs(n: int, cap: int = 8) -> int:
    return sum(len(level) for level in _levels(n)) if n <= cap else _fail(n, cap)


def _fail(n: int, cap: int) -> int:
    raise ResourceLimitError(f"exhaustive enumeration capped at n <= {cap}, got {n}")

"""Trees of diameter at most four as root-plus-stars patterns.

A pattern is the nonincreasing tuple of star sizes hanging from the root:
(m_1, ..., m_p) with m_i >= 0, describing a tree of order 1 + p + sum(m_i).
Size 0 is a trivial star (a bare leaf at the root).  The canonical root is
a tree center; for bicentral trees the center whose removal leaves more
components wins, with remaining ties broken by the lexicographically
larger size vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidParameterError
from .graphs import Graph, bits

StarPattern = tuple[int, ...]

NAMED_TREES = ("s22", "t2", "t3", "t4", "t5")
_NAME_LABELS = {"s22": "S22", "t2": "T2", "t3": "T3", "t4": "T4", "t5": "T5"}


def pattern_order(pattern: StarPattern) -> int:
    return 1 + len(pattern) + sum(pattern)


def pattern_to_string(pattern: StarPattern) -> str:
    return ",".join(str(m) for m in pattern)


def parse_pattern(text: str) -> StarPattern:
    """Parse a comma-separated size list, canonicalizing as needed."""
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        sizes = [int(part) for part in stripped.split(",")]
    except ValueError as exc:
        raise InvalidParameterError(f"bad pattern {text!r}: {exc}") from None
    if any(m < 0 for m in sizes):
        raise InvalidParameterError(f"negative star size in {text!r}")
    return canonicalize_pattern(sizes)


def pattern_to_graph(pattern: StarPattern) -> Graph:
    """Explicit tree: root is vertex 0, star centers follow, leaves last."""
    p = len(pattern)
    edges = []
    leaf = 1 + p
    for i, m in enumerate(pattern):
        center = 1 + i
        edges.append((0, center))
        for _ in range(m):
            edges.append((center, leaf))
            leaf += 1
    return Graph.from_edges(leaf, edges)


def _eccentricities(G: Graph) -> list[int]:
    ecc = []
    full = (1 << G.n) - 1
    for u in range(G.n):
        seen = 1 << u
        frontier = seen
        d = 0
        while seen != full:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
        ecc.append(d)
    return ecc


def tree_diameter(G: Graph) -> int:
    return max(_eccentricities(G)) if G.n > 1 else 0


def _pattern_at(G: Graph, root: int) -> StarPattern:
    # valid whenever the tree rooted here has depth <= 2, which holds at
    # any center of a diameter <= 4 tree
    return tuple(sorted((G.degree(c) - 1 for c in G.neighbors(root)), reverse=True))


def canonicalize_pattern(sizes: Iterable[int]) -> StarPattern:
    """Re-root a star multiset at the tree's canonical center."""
    pattern = tuple(sorted(sizes, reverse=True))
    if any(m < 0 for m in pattern):
        raise InvalidParameterError("star sizes must be nonnegative")
    if not pattern:
        return ()
    T = pattern_to_graph(pattern)
    ecc = _eccentricities(T)
    low = min(ecc)
    centers = [v for v, e in enumerate(ecc) if e == low]
    if len(centers) == 1:
        return _pattern_at(T, centers[0])
    a, b = centers
    # removing v from a tree leaves deg(v) components
    if T.degree(a) != T.degree(b):
        return _pattern_at(T, a if T.degree(a) > T.degree(b) else b)
    return max(_pattern_at(T, a), _pattern_at(T, b))


@lru_cache(maxsize=None)
def enumerate_diam4_trees(order: int) -> frozenset[StarPattern]:
    """One canonical pattern per isomorphism class of trees with the given
    order and diameter at most four."""
    if order < 1:
        raise InvalidParameterError(f"order must be >= 1, got {order}")
    if order == 1:
        return frozenset({()})
    found = set()
    for p in range(1, order):
        for part in _partitions(order - 1 - p, p):
            found.add(canonicalize_pattern(part + (0,) * (p - len(part))))
    return frozenset(found)


def _partitions(total: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of total into at most max_parts positive parts."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return

    def rec(remaining: int, parts_left: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if parts_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - first, parts_left - 1, first, prefix + (first,))

    yield from rec(total, max_parts, total, ())


@dataclass(frozen=True)
class TreeClassification:
    p: int
    p_prime: int
    forest_edges: int
    diameter: int
    name: str | None


def classify_pattern(pattern: StarPattern) -> TreeClassification:
    """Star counts, nontrivial star counts, forest edges, realized diameter,
    and the family label when the pattern is one of the five named trees."""
    p = len(pattern)
    p_prime = sum(1 for m in pattern if m >= 1)
    forest_edges = sum(pattern)
    diameter = tree_diameter(pattern_to_graph(pattern))
    return TreeClassification(p, p_prime, forest_edges, diameter, _name_of(pattern))


def _name_of(pattern: StarPattern) -> str | None:
    order = pattern_order(pattern)
    if order < 5 or order % 2 == 0:
        return None
    k = (order - 3) // 2
    for name in NAMED_TREES:
        try:
            if named_tree(name, k) == pattern:
                return _NAME_LABELS[name]
        except InvalidParameterError:
            continue
    return None


def named_tree(name: str, k: int) -> StarPattern:
    """The five distinguished patterns of order 2k+3.

    s22 subdivides every edge of a (k+1)-star once; t2..t5 are the four
    trees whose nontrivial star count equals k.  t2..t5 need k >= 2 to be
    well formed and mutually distinct; s22 needs k >= 1.
    """
    key = name.lower().replace("_", "").replace("{", "").replace("}", "")
    if key == "s22":
        if k < 1:
            raise InvalidParameterError(f"s22 needs k >= 1, got {k}")
        return (1,) * (k + 1)
    if key not in NAMED_TREES:
        raise InvalidParameterError(f"unknown named tree {name!r}")
    if k < 2:
        raise InvalidParameterError(f"{name} needs k >= 2, got {k}")
    if key == "t2":
        return (1,) * k + (0, 0)
    if key == "t3":
        return (2,) + (1,) * (k - 1) + (0,)
    if key == "t4":
        return (2, 2) + (1,) * (k - 2)
    return (3,) + (1,) * (k - 1)  # t5


def family_set(k: int, which: str = "all") -> frozenset[StarPattern]:
    """Tree families of order 2k+3: "all", "script-T" (all except s22),
    or "T-star" (nontrivial star count at most k-1)."""
    if k < 2:
        raise InvalidParameterError(f"family sets need k >= 2, got {k}")
    key = which.lower().replace("_", "-").replace("script-t", "script-T")
    base = enumerate_diam4_trees(2 * k + 3)
    if key == "all":
        return base
    if key == "script-T":
        return base - {named_tree("s22", k)}
    if key in ("t-star", "t-star".replace("-", "")):
        return frozenset(p for p in base if sum(1 for m in p if m >= 1) <= k - 1)
    raise InvalidParameterError(f"unknown family {which!r}")

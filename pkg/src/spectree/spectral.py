"""Spectral radius estimation and integer column-sum certificates.

Two routes to the largest adjacency eigenvalue: an exact-integer
characteristic polynomial with Newton refinement for small graphs, and
shifted power iteration above that.  Certificates are pure integer
arithmetic so that verdicts never depend on floating point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NumericalFailureError, PreconditionError
from .graphs import Graph, components, link_graph

DENSE_MAX_N = 12
DEFAULT_TOLERANCE = 1e-10
MAX_ITERATIONS = 10**6


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    residual: float
    iterations: int
    method: str  # "power" or "dense"


def adjacency_matrix(G: Graph, dtype=np.int64) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=dtype)
    for u in range(G.n):
        row = G.adj[u]
        while row:
            low = row & -row
            A[u, low.bit_length() - 1] = 1
            row ^= low
    return A


def spectral_radius(
    G: Graph,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = MAX_ITERATIONS,
) -> SpectralEstimate:
    """Largest adjacency eigenvalue of G, deterministic for fixed inputs.

    n <= 12 uses the exact integer characteristic polynomial per component
    with Newton's method from above the root.  Larger graphs run power
    iteration on A + I (the shift keeps bipartite spectra converging) with
    the all-ones start vector.
    """
    if G.n < 1:
        raise InvalidParameterError("spectral radius needs at least one vertex")
    if tolerance <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tolerance}")
    if G.n <= DENSE_MAX_N:
        return _dense_radius(G)
    return _power_radius(G, tolerance, max_iterations)


def _dense_radius(G: Graph) -> SpectralEstimate:
    best = 0.0
    steps = 0
    for comp in components(G):
        if len(comp) == 1:
            continue
        sub, _ = G.subgraph(comp)
        coeffs = _char_poly(sub)
        root, used = _newton_largest_root(coeffs, start=max(sub.degrees) + 1.0)
        steps += used
        if root > best:
            best = root
    return SpectralEstimate(value=best, residual=0.0, iterations=steps, method="dense")


def _char_poly(G: Graph) -> list[int]:
    """Monic characteristic polynomial of the adjacency matrix, exact
    integer coefficients via the Faddeev-LeVerrier recurrence."""
    n = G.n
    A = adjacency_matrix(G)
    M = np.eye(n, dtype=np.int64)
    coeffs = [1, 0]  # trace of an adjacency matrix is 0
    c = 0
    for k in range(2, n + 1):
        M = A @ M + c * np.eye(n, dtype=np.int64)
        AM = A @ M
        tr = int(np.trace(AM))
        assert tr % k == 0
        c = -tr // k
        coeffs.append(c)
    return coeffs


def _newton_largest_root(coeffs: list[int], start: float) -> tuple[float, int]:
    # all roots are real and <= start; Newton from the right converges
    # monotonically to the largest root
    fc = [float(c) for c in coeffs]
    x = start
    for it in range(1, 200):
        p = 0.0
        dp = 0.0
        for c in fc:
            dp = dp * x + p
            p = p * x + c
        if dp == 0.0:
            break
        step = p / dp
        x -= step
        if abs(step) <= 1e-14 * max(1.0, abs(x)):
            return x, it
    return x, 200


def _power_radius(G: Graph, tolerance: float, max_iterations: int) -> SpectralEstimate:
    n = G.n
    A = adjacency_matrix(G, dtype=np.float64)
    x = np.full(n, 1.0 / math.sqrt(n))
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iterations + 1):
        y = A @ x + x  # (A + I) x
        lam = float(x @ y)
        r = y - lam * x
        residual = float(np.max(np.abs(r)))
        if residual <= tolerance:
            return SpectralEstimate(lam - 1.0, residual, it, "power")
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return SpectralEstimate(0.0, 0.0, it, "power")
        x = y / norm
    raise NumericalFailureError(
        f"power iteration did not reach residual {tolerance} in {max_iterations} steps",
        best_estimate=lam - 1.0,
        residual=residual,
    )


def split_radius_closed_form(n: int, k: int) -> float:
    """Spectral radius of the split graph (clique of k joined to n-k
    independent vertices): the largest root of x^2 - (k-1)x - k(n-k)."""
    if not 1 <= k < n:
        raise InvalidParameterError(f"need 1 <= k < n, got n={n} k={k}")
    return (k - 1 + math.sqrt((k - 1) ** 2 + 4 * k * (n - k))) / 2


# ---------------------------------------------------------------------------
# column-sum certificates for quadratic eigenvalue bounds


@dataclass(frozen=True)
class BoundCertificate:
    """Column sums of A^2 - a*A - b*I with the resulting verdict.

    For a connected graph, all sums <= 0 certifies that the spectral radius
    is at most the largest root of x^2 - a x - b; all sums = 0 certifies
    equality.
    """

    a: int
    b: int
    column_sums: tuple[int, ...]
    all_nonpositive: bool
    all_zero: bool
    violators: tuple[tuple[int, int], ...]

    @property
    def mu_prime(self) -> float:
        return (self.a + math.sqrt(self.a * self.a + 4 * self.b)) / 2


def column_sum_certificate(G: Graph, a: int, b: int) -> BoundCertificate:
    """Exact integer column sums of A^2 - a*A - b*I for connected G."""
    if a < 0 or b < 1:
        raise InvalidParameterError(f"need a >= 0 and b >= 1, got a={a} b={b}")
    comps = components(G)
    if len(comps) != 1:
        raise PreconditionError(
            f"certificate needs a connected graph; components: {comps}"
        )
    sums = _column_sums(G, a, b)
    violators = tuple((v, s) for v, s in enumerate(sums) if s > 0)
    return BoundCertificate(
        a=a,
        b=b,
        column_sums=sums,
        all_nonpositive=not violators,
        all_zero=all(s == 0 for s in sums),
        violators=violators,
    )


def _column_sums(G: Graph, a: int, b: int) -> tuple[int, ...]:
    A = adjacency_matrix(G)
    B = A @ A - a * A - b * np.eye(G.n, dtype=np.int64)
    return tuple(int(s) for s in B.sum(axis=0))


def certificate_vertex(G: Graph, a: int, b: int) -> int | None:
    """Smallest vertex u with column sum >= 0, or None when all are negative.

    Whenever the spectral radius reaches the bound's largest root, such a
    vertex must exist (contrapositive of the certificate direction).
    """
    cert = column_sum_certificate(G, a, b)
    for v, s in enumerate(cert.column_sums):
        if s >= 0:
            return v
    return None


def column_sum_cross_check(G: Graph, u: int, k: int) -> tuple[int, int]:
    """Column sum at u computed by two independent routes.

    Matrix route: column u of A^2 - (k-1)A - k(n-k)I, summed.  Structural
    route: sum of first-layer degrees inside the two-layer link graph of u,
    minus (k-2) deg(u) minus k(n-k).  The two must agree exactly.
    """
    if not 0 <= u < G.n:
        raise InvalidParameterError(f"vertex {u} outside 0..{G.n - 1}")
    if not 1 <= k < G.n:
        raise InvalidParameterError(f"need 1 <= k < n, got k={k} n={G.n}")
    n = G.n
    matrix_side = _column_sums(G, k - 1, k * (n - k))[u]
    L, vmap = link_graph(G, u)
    first_layer = G.degree(u)  # link_graph lists the first layer first
    deg_sum = sum(L.degree(i) for i in range(first_layer))
    formula_side = deg_sum - (k - 2) * G.degree(u) - k * (n - k)
    return matrix_side, formula_side

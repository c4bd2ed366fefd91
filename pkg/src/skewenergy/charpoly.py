"""Even coefficients of the skew characteristic polynomial.

``det(xI - S) = sum_i b_i x^(n-i)`` with ``b_i = 0`` for odd ``i``. Three
engines compute the ``b_2k``:

* :func:`coeffs_combinatorial` sums signed weights of evenly linear subgraphs,
* :func:`coeffs_unicyclic` corrects matching counts by the unique cycle,
* :func:`coeffs_exact` expands the determinant with a division-free
  integer algorithm and serves as ground truth.

:func:`family_coeffs` gives closed forms for the S_n^l and cycle families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from operator import mul

from .graph import (
    enumerate_evenly_linear,
    even_cycles,
    is_unicyclic,
    make_family,
    matching_counts,
    unique_cycle,
)
from .orient import EVENLY, MINUS, PLUS, OrientedGraph, cycle_parity, orient_unicyclic, skew_matrix


class InvariantViolation(RuntimeError):
    """A computed quantity contradicts a structural property of skew matrices."""


@dataclass(frozen=True)
class SkewCoeffs:
    """``coeffs[k]`` is ``b_2k`` for ``k = 0..order//2``."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order // 2 + 1:
            raise ValueError(f"order {self.order} needs {self.order // 2 + 1} coefficients, got {len(coeffs)}")
        if coeffs[0] != 1:
            raise InvariantViolation(f"leading coefficient must be 1, got {coeffs[0]}")
        if any(c < 0 for c in coeffs):
            raise InvariantViolation(f"negative coefficient in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def b(self, i: int) -> int:
        """Coefficient ``b_i`` of ``x^(n-i)``; zero for odd or out-of-range ``i``."""
        if i % 2 or not 0 <= i <= self.order:
            return 0
        return self.coeffs[i // 2]

    def polynomial(self) -> list:
        """All ``n+1`` coefficients of ``det(xI - S)``, highest degree first."""
        return [self.b(i) for i in range(self.order + 1)]


def _padded(values, order):
    size = order // 2 + 1
    values = list(values)[:size]
    return values + [0] * (size - len(values))


def berkowitz(A) -> list:
    """Coefficients of ``det(xI - A)`` for an integer matrix, highest degree first.

    Division-free: every step multiplies by a lower-triangular Toeplitz matrix
    built from the bordering row and column of the next leading submatrix.
    """
    A = [[int(x) for x in row] for row in A]
    n = len(A)
    if n == 0:
        return [1]
    poly = [1, -A[0][0]]
    for r in range(1, n):
        lead = [A[i][:r] for i in range(r)]
        row = A[r][:r]
        vec = [A[i][r] for i in range(r)]
        # q = (1, -a_rr, -R C, -R M C, ..., -R M^(r-1) C)
        q = [1, -A[r][r]]
        for _ in range(r):
            q.append(-sum(map(mul, row, vec)))
            vec = [sum(map(mul, a, vec)) for a in lead]
        poly = [sum(q[i - j] * poly[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return poly


def coeffs_exact(og: OrientedGraph) -> SkewCoeffs:
    poly = berkowitz(skew_matrix(og).tolist())
    odd = [(i, c) for i, c in enumerate(poly) if i % 2 and c]
    if odd:
        raise InvariantViolation(f"nonzero odd coefficients {odd} for a skew-symmetric matrix")
    return SkewCoeffs(tuple(poly[::2]), og.n)


@lru_cache(maxsize=4096)
def _linear_cycle_sets(G):
    # per k, the cycle tuples of every evenly linear subgraph on 2k vertices;
    # matching edges carry weight 1 so only the cycles are kept
    cycles = even_cycles(G)
    return cycles, tuple(
        tuple(L.cycles for L in enumerate_evenly_linear(G, 2 * k, cycles)) for k in range(G.n // 2 + 1)
    )


def coeffs_combinatorial(og: OrientedGraph) -> SkewCoeffs:
    cycles, by_size = _linear_cycle_sets(og.base)
    weight = {tuple(c): (-2 if cycle_parity(og, c) == EVENLY else 2) for c in cycles}
    out = []
    for subgraphs in by_size:
        total = 0
        for cyc in subgraphs:
            w = 1
            for c in cyc:
                w *= weight[c]
            total += w
        out.append(total)
    return SkewCoeffs(tuple(out), og.n)


def coeffs_unicyclic(og: OrientedGraph) -> SkewCoeffs:
    G = og.base
    if not is_unicyclic(G):
        raise ValueError("coeffs_unicyclic needs a unicyclic base graph")
    m = list(matching_counts(G))
    cycle = unique_cycle(G)
    length = len(cycle)
    if length % 2 == 0:
        sign = -2 if cycle_parity(og, cycle) == EVENLY else 2
        # G - C may be empty; its 0-matching count is still 1
        rest = matching_counts(G.delete_vertices(cycle))
        half = length // 2
        for k in range(half, len(m)):
            if k - half < len(rest):
                m[k] += sign * rest[k - half]
    return SkewCoeffs(tuple(m), G.n)


def verify_pendant_recurrence(og: OrientedGraph, edge) -> bool:
    """Check ``b_2k(G) = b_2k(G - e) + b_2k-2(G - u - v)`` for every ``k``.

    The edge must not lie on an even cycle of the base graph.
    """
    u, v = edge
    G = og.base
    if not G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    for c in even_cycles(G):
        pairs = {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}
        if frozenset((u, v)) in pairs:
            raise ValueError(f"edge ({u}, {v}) lies on the even cycle {c}")
    whole = coeffs_exact(og)
    minus_edge = coeffs_exact(og.remove_edge(u, v))
    minus_ends = coeffs_exact(og.delete_vertices((u, v)))
    for k in range(len(whole)):
        rhs = minus_edge[k] + (minus_ends[k - 1] if 1 <= k <= len(minus_ends) else 0)
        if whole[k] != rhs:
            return False
    return True


def _cycle_coeffs(n, sign):
    # m(C_n, k) = n / (n - k) * C(n - k, k)
    out = [1] + [n * comb(n - k, k) // (n - k) for k in range(1, n // 2 + 1)]
    if n % 2 == 0:
        out[-1] += -2 if sign == MINUS else 2
    return out


def family_coeffs(family: str, n: int, girth: int, sign: str = PLUS) -> SkewCoeffs:
    """Closed-form coefficients for ``snl`` (S_n^l), ``sn3`` (S_n^3) or ``cycle`` (C_n)."""
    if sign not in (PLUS, MINUS):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if family == "cycle":
        if girth != n or n < 3:
            raise ValueError(f"cycle family needs girth == n >= 3, got n={n}, girth={girth}")
        return SkewCoeffs(tuple(_cycle_coeffs(n, sign)), n)
    if family == "sn3" or (family == "snl" and girth == 3):
        if girth != 3 or n < 3:
            raise ValueError(f"S_n^3 needs girth 3 and n >= 3, got n={n}, girth={girth}")
        return SkewCoeffs(tuple(_padded([1, n, n - 3], n)), n)
    if family != "snl":
        raise ValueError(f"unknown family {family!r}")
    if girth == 4:
        if n < 4:
            raise ValueError(f"S_n^4 needs n >= 4, got {n}")
        b4 = 2 * n - 4 if sign == PLUS else 2 * n - 8
        return SkewCoeffs(tuple(_padded([1, n, b4], n)), n)
    if not 5 <= girth <= n:
        raise ValueError(f"S_n^l needs 3 <= l <= n, got n={n}, girth={girth}")
    b4 = (2 * n * girth - girth * girth + girth - 4 * n) // 2
    rest = coeffs_unicyclic(orient_unicyclic(make_family("snl", n, girth), sign))
    return SkewCoeffs((1, n, b4) + rest.coeffs[3:], n)

"""Skew energy through the spectrum and through the Coulson-type integral.

The spectral route takes square roots of the eigenvalues of ``-S @ S``,
a symmetric positive semidefinite matrix, found by cyclic Jacobi rotations.
The integral route only needs the even coefficients ``b_2k``::

    E = (1/pi) * integral over R of ln(1 + sum_k b_2k t^2k) / t^2 dt

which is evaluated after ``t = tan(theta)`` by adaptive Gauss-Legendre panels.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .charpoly import coeffs_exact
from .orient import OrientedGraph, skew_matrix

EQUAL = "equal"
GREATER = "greater"
LESS = "less"
INCOMPARABLE = "incomparable"

ZERO_FLOOR = 1e-12
DEFAULT_TOL = 1e-8

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)


def jacobi_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps."""
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.allclose(A, A.T):
        raise ValueError("matrix is not symmetric")
    scale = max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= tol * scale:
            return np.diag(A).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def spectrum(og: OrientedGraph) -> np.ndarray:
    """Eigenvalue magnitudes of the skew-adjacency matrix, sorted descending."""
    S = skew_matrix(og).astype(float)
    squares = jacobi_eigenvalues(-S @ S)
    squares[squares < ZERO_FLOOR] = 0.0
    return np.sort(np.sqrt(squares))[::-1]


def energy_spectral(og: OrientedGraph) -> float:
    return float(np.sum(spectrum(og)))


def _log_char(b, t):
    # ln(1 + sum_k b_k t^(2k)) without overflow for large t
    t = np.asarray(t, dtype=float)
    top = max(k for k, c in enumerate(b) if c)
    small = t <= 1.0
    out = np.empty_like(t)
    ts = t[small] ** 2
    acc = np.zeros_like(ts)
    for c in reversed(b[1 : top + 1]):
        acc = (acc + c) * ts
    out[small] = np.log1p(acc)
    u = 1.0 / t[~small] ** 2
    acc = np.zeros_like(u)
    for c in b[: top + 1]:
        acc = acc * u + c
    out[~small] = np.log(acc) + top * np.log(t[~small] ** 2)
    return out


def _panel(f, a, b):
    half = 0.5 * (b - a)
    return half * float(_GL_WEIGHTS @ f(half * _GL_NODES + a + half))


def coulson_integral(coeffs, tol: float = DEFAULT_TOL, max_panels: int = 20_000) -> float:
    """Energy from even coefficients ``(b_0, b_2, ...)`` via the log integral."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    b = [int(c) for c in coeffs]
    if not any(b[1:]):
        return 0.0

    def f(theta):
        return _log_char(b, np.tan(theta)) / np.sin(theta) ** 2

    def entry(a, c):
        m = 0.5 * (a + c)
        fine = _panel(f, a, m) + _panel(f, m, c)
        return (-abs(fine - _panel(f, a, c)), a, c, fine)

    edges = np.linspace(0.0, 0.5 * math.pi, 9)
    heap = [entry(a, c) for a, c in zip(edges[:-1], edges[1:])]
    heapq.heapify(heap)
    # E = (2/pi) * integral over (0, pi/2). The log endpoint converges only
    # linearly in panel width, but each halving adds one panel, so aim at tol/64.
    while True:
        total = sum(p[3] for p in heap)
        err = -sum(p[0] for p in heap)
        if err * 2.0 / math.pi <= tol / 64.0 * max(1.0, total * 2.0 / math.pi):
            break
        if len(heap) >= max_panels:
            warnings.warn(f"Coulson quadrature stopped at {len(heap)} panels, error estimate {err:.3g}")
            break
        _, a, c, _ = heapq.heappop(heap)
        m = 0.5 * (a + c)
        heapq.heappush(heap, entry(a, m))
        heapq.heappush(heap, entry(m, c))
    return 2.0 / math.pi * math.fsum(p[3] for p in heap)


def energy_coulson(og: OrientedGraph, tol: float = DEFAULT_TOL) -> float:
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return coulson_integral(coeffs_exact(og).coeffs, tol)


def quartic_energy(b2: int, b4: int) -> float:
    """Energy of a spectrum whose only nonzero coefficients are ``b_2`` and ``b_4``.

    With ``lambda^4 - b2 lambda^2 + b4 = 0`` the two magnitudes satisfy
    ``(l1 + l2)^2 = b2 + 2 sqrt(b4)``.
    """
    if b2 < 0 or b4 < 0:
        raise ValueError(f"coefficients must be non-negative, got b2={b2}, b4={b4}")
    if b2 * b2 < 4 * b4:
        raise ValueError(f"b2^2 < 4 b4 gives non-real magnitudes (b2={b2}, b4={b4})")
    return 2.0 * math.sqrt(b2 + 2.0 * math.sqrt(b4))


def quasi_compare(c1, c2) -> str:
    """Entrywise order of two coefficient vectors."""
    c1, c2 = tuple(c1), tuple(c2)
    if len(c1) != len(c2):
        raise ValueError(f"coefficient vectors differ in length: {len(c1)} vs {len(c2)}")
    ge = all(x >= y for x, y in zip(c1, c2))
    le = all(x <= y for x, y in zip(c1, c2))
    if ge and le:
        return EQUAL
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


@dataclass(frozen=True)
class EnergyReport:
    spectral: float
    coulson: float
    tolerance: float
    agreement: bool


def energy_report(og: OrientedGraph, tol: float = DEFAULT_TOL) -> EnergyReport:
    spectral = energy_spectral(og)
    coulson = energy_coulson(og, tol)
    # eigensolver and quadrature each carry their own error; compare at 1e-6 or looser
    tolerance = max(tol, 1e-6)
    agree = abs(spectral - coulson) <= tolerance * max(1.0, spectral)
    return EnergyReport(spectral, coulson, tolerance, agree)


"""Normalized Laplacian construction and its certified spectrum."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

ZERO_TOL = 1e-8
RESIDUAL_FACTOR = 1e-10


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order."""

    values: tuple[float, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def rho(self, i: int) -> float:
        """1-indexed access: ``rho(1)`` is the largest eigenvalue."""
        return self.values[i - 1]


def symmetrize(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {m.shape}")
    return (m + m.T) / 2


def normalized_laplacian(g: Graph) -> np.ndarray:
    """``I - D^{-1/2} A D^{-1/2}`` as a dense symmetric array."""
    if not g.connected:
        raise SpectralError("normalized Laplacian requires a connected graph")
    if min(g.degrees) == 0:
        raise SpectralError("zero-degree vertex: D^{-1/2} does not exist")
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    lap = np.eye(g.n)
    for u, v in g.edges:
        w = -inv_sqrt[u] * inv_sqrt[v]
        lap[u, v] = w
        lap[v, u] = w
    return symmetrize(lap)


def jacobi_eigh(a, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below ``tol``.

    Returns ``(eigenvalues, eigenvectors)`` in the solver's native order.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2)
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1))
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ rot
    else:
        raise SpectralError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.diag(a).copy(), v


def eigenvalues_symmetric(m, method: str = "lapack") -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending, residual-certified.

    Each eigenpair must satisfy ``||Mv - lv|| <= 1e-10 * n * max|M_ij|``.
    ``method`` picks LAPACK (``numpy.linalg.eigh``) or the in-house Jacobi solver.
    """
    m = np.asarray(m, dtype=float)
    if not np.all(np.isfinite(m)):
        raise SpectralError("matrix has non-finite entries")
    m = symmetrize(m)
    n = m.shape[0]
    if method == "lapack":
        w, vec = np.linalg.eigh(m)
    elif method == "jacobi":
        w, vec = jacobi_eigh(m)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    scale = float(np.max(np.abs(m))) if n else 0.0
    resid = np.linalg.norm(m @ vec - vec * w, axis=0)
    limit = RESIDUAL_FACTOR * n * max(scale, np.finfo(float).tiny)
    if resid.size and resid.max() > limit:
        raise SpectralError(f"eigenpair residual {resid.max():.3e} exceeds {limit:.3e}")
    order = np.argsort(-w, kind="stable")
    return Spectrum(tuple(float(x) for x in w[order]))


def graph_spectrum(g: Graph, method: str = "lapack") -> Spectrum:
    """Normalized Laplacian spectrum of a connected graph with the zero eigenvalue pinned.

    The smallest eigenvalue is checked to be within ``1e-8`` of zero and then
    set to exactly 0.
    """
    vals = list(eigenvalues_symmetric(normalized_laplacian(g), method).values)
    if abs(vals[-1]) > ZERO_TOL:
        raise SpectralError(f"smallest eigenvalue {vals[-1]!r} is not zero")
    vals[-1] = 0.0
    if g.n >= 2 and vals[-2] <= 0.0:
        raise SpectralError("zero eigenvalue is not simple; graph is not connected")
    return Spectrum(tuple(vals))


def moment_check(s: Spectrum, r_minus_one: float) -> tuple[float, float]:
    """Residuals of the trace identities sum(rho) = n and sum(rho^2) = n + 2 R_{-1}."""
    n = len(s)
    nonzero = s.values[: n - 1]
    s1 = sum(nonzero)
    s2 = sum(x * x for x in nonzero)
    return abs(s1 - n), abs(s2 - (n + 2 * r_minus_one))

"""Perron root and first-order eigenvalue sensitivities of nonnegative matrices.

All matrices handled here are small (a handful of sectors), nonnegative and
irreducible, so the dominant eigenpair is computed by simultaneous power
iteration on ``M`` and ``M.T`` rather than a general eigensolver.  The left
and right vectors are pinned to the normalization ``sum(u) == 1`` and
``v @ u == 1``, which makes the first-order sensitivity formulas unique.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotIrreducibleError,
)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


def as_square_matrix(entries) -> np.ndarray:
    """Validate and return a nonnegative square matrix of size >= 2.

    Raises
    ------
    DimensionMismatchError
        If the array is not square or smaller than 2x2.
    ValueError
        If any entry is negative or non-finite.
    """
    M = np.asarray(entries, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] < 2:
        raise DimensionMismatchError("matrix must be at least 2x2")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    if np.any(M < 0):
        raise ValueError("matrix entries must be nonnegative")
    return M


def is_irreducible(M: np.ndarray) -> bool:
    """True iff the directed graph of the nonzero pattern is strongly connected.

    Checked by breadth-first reachability from node 0 in the pattern and in
    its transpose; for a digraph this is equivalent to strong connectivity.
    """
    pattern = M > 0
    if np.all(pattern):
        return True
    n = M.shape[0]
    for adj in (pattern, pattern.T):
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for j in np.flatnonzero(adj[i]):
                    if not seen[j]:
                        seen[j] = True
                        nxt.append(j)
            frontier = nxt
        if not seen.all():
            return False
    return True


@dataclass(frozen=True)
class PerronTriple:
    """Spectral radius with its right and left Perron vectors.

    ``lam`` is the Perron root, ``right``/``left`` the strictly positive
    right and left eigenvectors normalized so that ``sum(right) == 1`` and
    ``left @ right == 1``.
    """

    lam: float
    right: np.ndarray
    left: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.right, dtype=float)
        v = np.asarray(self.left, dtype=float)
        if u.shape != v.shape or u.ndim != 1:
            raise DimensionMismatchError("Perron vectors must be equal-length 1-D arrays")
        if self.lam <= 0 or np.any(u <= 0) or np.any(v <= 0):
            raise ValueError("Perron data must be strictly positive")
        if abs(u.sum() - 1.0) > 1e-8 or abs(float(v @ u) - 1.0) > 1e-8:
            raise ValueError("Perron vectors must satisfy sum(u) = 1 and v @ u = 1")
        object.__setattr__(self, "right", u)
        object.__setattr__(self, "left", v)


def spectral_radius(
    M,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    u0: np.ndarray | None = None,
    v0: np.ndarray | None = None,
) -> PerronTriple:
    """Dominant eigentriple of a nonnegative irreducible matrix.

    Runs power iteration on ``M`` and ``M.T`` simultaneously, with the
    eigenvalue estimated by the quotient ``v @ M @ u / (v @ u)`` and
    convergence declared when both eigen-residuals fall below ``tol`` in
    max-norm.  ``u0``/``v0`` allow warm starts (e.g. from the previous
    integrator stage); the default uniform start is deterministic.

    Parameters
    ----------
    M : array_like
        Nonnegative irreducible square matrix.
    tol : float
        Max-norm residual tolerance on both eigenvector residuals.
    max_iter : int
        Iteration cap; exceeding it raises NoConvergenceError, which also
        covers near-degenerate dominant eigenvalues (they converge too
        slowly to pass the residual test).
    u0, v0 : ndarray, optional
        Strictly positive warm-start vectors.

    Returns
    -------
    PerronTriple

    Raises
    ------
    NotIrreducibleError
        If the nonzero pattern is not strongly connected.
    NoConvergenceError
        If the residual is still above ``tol`` after ``max_iter`` steps.
    """
    M = as_square_matrix(M)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_irreducible(M):
        raise NotIrreducibleError("matrix nonzero pattern is not strongly connected")
    n = M.shape[0]
    MT = M.T

    u = np.full(n, 1.0 / n) if u0 is None else np.asarray(u0, dtype=float) / np.sum(u0)
    v = np.full(n, 1.0) if v0 is None else np.asarray(v0, dtype=float)
    v = v / (v @ u)

    lam = float(v @ (M @ u))
    residual = np.inf
    for iteration in range(max_iter + 1):
        Mu = M @ u
        Mv = MT @ v
        lam = float(v @ Mu)  # v @ u == 1 by construction
        residual = max(
            float(np.max(np.abs(Mu - lam * u))),
            float(np.max(np.abs(Mv - lam * v))),
        )
        if residual < tol:
            break
        if iteration == max_iter:
            raise NoConvergenceError(
                f"power iteration stalled at residual {residual:.3e} after "
                f"{max_iter} iterations (tolerance {tol:.1e}); the dominant "
                "eigenvalue may be degenerate",
                iterations=max_iter,
                residual=residual,
            )
        u = Mu / Mu.sum()
        v = Mv / (Mv @ u)

    return PerronTriple(lam=lam, right=u, left=v)


def dlambda_dA(triple: PerronTriple) -> np.ndarray:
    """Matrix of sensitivities of the Perron root to each matrix entry.

    Entry ``(i, j)`` is ``left[i] * right[j]``; strictly positive, so the
    root is strictly increasing in every coefficient.
    """
    return np.outer(triple.left, triple.right)


def dlambda_direction(triple: PerronTriple, dM) -> float:
    """First-order change of the Perron root along a matrix perturbation.

    Returns ``left @ dM @ right``, linear in ``dM``.
    """
    dM = np.asarray(dM, dtype=float)
    n = triple.right.shape[0]
    if dM.shape != (n, n):
        raise DimensionMismatchError(
            f"perturbation shape {dM.shape} does not match matrix order {n}"
        )
    return float(triple.left @ dM @ triple.right)

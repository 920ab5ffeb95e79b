"""Production-economy value types, prices, and the profit-rate map.

The wage enters production costs through the augmented matrix
``M = A + b * (ones @ l.T)``: every sector pays the scalar real wage ``b``
(a uniform consumption basket) per unit of direct labor.  The uniform
profit rate is ``r = 1/lam - 1`` where ``lam`` is the Perron root of ``M``,
and production prices are its left Perron vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NonViableError, NotIrreducibleError
from .perron import PerronTriple, as_square_matrix, is_irreducible, spectral_radius


@dataclass(frozen=True)
class TechnologyState:
    """Material input matrix ``A`` and direct labor vector ``l`` at an instant."""

    A: np.ndarray
    l: np.ndarray

    def __post_init__(self):
        A = as_square_matrix(self.A)
        l = np.asarray(self.l, dtype=float)
        if l.shape != (A.shape[0],):
            raise DimensionMismatchError(
                f"labor vector shape {l.shape} does not match matrix order {A.shape[0]}"
            )
        if np.any(l <= 0):
            raise ValueError("labor coefficients must be strictly positive")
        if not is_irreducible(A):
            raise NotIrreducibleError("input matrix is not irreducible")
        A = A.copy()
        l = l.copy()
        A.flags.writeable = False
        l.flags.writeable = False
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "l", l)

    @property
    def n(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class WageState:
    """Scalar real-wage level and the wage elasticity."""

    b: float
    beta: float = 0.0

    def __post_init__(self):
        if self.b <= 0:
            raise ValueError("real wage b must be strictly positive")
        if self.beta < 0:
            raise ValueError("wage elasticity beta must be nonnegative")


@dataclass(frozen=True)
class PriceSystem:
    """Production prices, money wage, and the uniform profit rate.

    Prices are normalized to ``sum(p) == 1``, which makes the money wage
    equal the real-wage level: ``w = b * sum(p) = b``.
    """

    p: np.ndarray
    w: float
    r: float
    lam: float


def augmented_matrix(tech: TechnologyState, wage: WageState) -> np.ndarray:
    """Input matrix augmented by wage consumption: ``m_ij = a_ij + b * l_j``."""
    return tech.A + wage.b * tech.l


def profit_rate(lam: float) -> float:
    """Uniform profit rate ``1/lam - 1``; requires a productive economy.

    Raises
    ------
    NonViableError
        If ``lam >= 1`` (the profit rate would not be positive).
    """
    if lam <= 0:
        raise ValueError("spectral radius must be positive")
    if lam >= 1.0:
        raise NonViableError(f"economy is not viable: spectral radius {lam:.6g} >= 1")
    return 1.0 / lam - 1.0


def price_system(
    tech: TechnologyState,
    wage: WageState,
    tol: float = 1e-12,
) -> PriceSystem:
    """Equilibrium prices and profit rate for a technology/wage pair.

    The price vector is the left Perron vector of the augmented matrix,
    rescaled to ``sum(p) == 1``.
    """
    triple = spectral_radius(augmented_matrix(tech, wage), tol=tol)
    r = profit_rate(triple.lam)
    p = triple.left / triple.left.sum()
    return PriceSystem(p=p, w=wage.b, r=r, lam=triple.lam)


def cost_criterion_satisfied(
    old: TechnologyState,
    new: TechnologyState,
    prices: PriceSystem,
) -> np.ndarray:
    """Per-sector adoption test: does the new technique cut unit costs?

    Entry ``j`` is True iff ``p @ A_new[:, j] + w * l_new[j]`` is strictly
    below the old unit cost at the old prices.
    """
    if new.n != old.n or prices.p.shape != (old.n,):
        raise DimensionMismatchError("old state, new state and prices must share one order")
    old_cost = prices.p @ old.A + prices.w * old.l
    new_cost = prices.p @ new.A + prices.w * new.l
    return new_cost < old_cost


def dlambda_db(tech: TechnologyState, triple: PerronTriple) -> float:
    """Sensitivity of the Perron root to the scalar wage: ``(sum v)(l @ u)``."""
    return float(triple.left.sum() * (tech.l @ triple.right))


def k_sensitivity(tech: TechnologyState, wage: WageState, triple: PerronTriple) -> float:
    """Dimensionless wage sensitivity ``(b/lam) * d(lam)/db``; strictly positive.

    The profit rate rises at an instant iff ``beta * k < 1`` there, so this
    quantity is what the regime thresholds are built from.
    """
    return wage.b / triple.lam * dlambda_db(tech, triple)

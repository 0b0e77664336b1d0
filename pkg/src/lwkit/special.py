"""Closed-form fixtures: Hermite functions, Laguerre polynomials, Landau states.

Units m = omega = hbar = 1 are baked into this fixture family.  All
evaluations use normalized three-term recurrences; factorial ratios only
ever appear through lgamma differences, so indices up to the cap stay well
inside double precision.
"""

from __future__ import annotations

import math

import numpy as np

from .grids import GridSpec, SampledFunction

__all__ = [
    "HERMITE_CAP",
    "hermite_values",
    "hermite_fn",
    "laguerre_poly",
    "landau_eigenfunction",
]

HERMITE_CAP = 64


def hermite_values(k: int, x: np.ndarray) -> np.ndarray:
    """L2-normalized Hermite function phi_k at points x.

    phi_0 = pi^{-1/4} e^{-x^2/2}; the recurrence acts on the normalized
    functions directly: phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1}.
    """
    if k < 0:
        raise ValueError("Hermite index must be non-negative")
    if k > HERMITE_CAP:
        raise ValueError(f"Hermite index {k} exceeds cap {HERMITE_CAP}")
    x = np.asarray(x, dtype=float)
    prev = np.pi ** (-0.25) * np.exp(-0.5 * x**2)
    if k == 0:
        return prev
    cur = np.sqrt(2.0) * x * prev
    for j in range(1, k):
        prev, cur = cur, np.sqrt(2.0 / (j + 1)) * x * cur - np.sqrt(j / (j + 1.0)) * prev
    return cur


def hermite_fn(k: int, grid: GridSpec) -> SampledFunction:
    """phi_k sampled on a 1-D grid."""
    if grid.dim != 1:
        raise ValueError("hermite_fn needs a 1-D grid")
    return SampledFunction(grid, hermite_values(k, grid.axis(0)))


def laguerre_poly(j: int, k: int, x) -> np.ndarray | float:
    """Generalized Laguerre polynomial L_j^k(x) by the stable recurrence.

    L_j^k = ((2j-1+k-x) L_{j-1}^k - (j-1+k) L_{j-2}^k) / j.
    """
    if j < 0 or k < 0:
        raise ValueError("Laguerre indices must be non-negative")
    scalar = np.isscalar(x)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if j == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + k - x
    for i in range(2, j + 1):
        prev, cur = cur, ((2 * i - 1 + k - x) * cur - (i - 1 + k) * prev) / i
    return float(cur) if scalar else cur


def _radial_ladder(level: int, offset: int, w: np.ndarray) -> np.ndarray:
    """(-1)^level (2 pi)^{-1/2} sqrt(level!/(level+offset)!) 2^{-offset/2}
    w^offset L_level^offset(|w|^2/2) e^{-|w|^2/4} for complex w."""
    lognorm = 0.5 * (math.lgamma(level + 1) - math.lgamma(level + offset + 1))
    amp = (-1.0) ** level / math.sqrt(2.0 * math.pi) * math.exp(lognorm) * 2.0 ** (-offset / 2.0)
    r2 = np.abs(w) ** 2
    return amp * w**offset * laguerre_poly(level, offset, 0.5 * r2) * np.exp(-0.25 * r2)


def landau_eigenfunction(j: int, k: int, grid2: GridSpec) -> SampledFunction:
    """Landau state with energy j + 1/2 and degeneracy index k (units h=1, w_L=1/2).

    Equals the wavepacket transform of phi_j with window phi_k, including the
    phase: for k >= j the closed form carries (x+iy)^{k-j} (the k-varying
    ground family at j = 0), and for k < j it is the complex conjugate of the
    (k, j) state.  The family is orthonormal over all (j, k).
    """
    if grid2.dim != 2:
        raise ValueError("landau_eigenfunction needs a 2-D grid")
    if j < 0 or k < 0:
        raise ValueError("Landau indices must be non-negative")
    if max(j, k) > HERMITE_CAP:
        raise ValueError(f"Landau index exceeds cap {HERMITE_CAP}")
    x, y = grid2.meshgrid()
    w = x + 1j * y
    if k >= j:
        vals = _radial_ladder(j, k - j, w)
    else:
        vals = np.conj(_radial_ladder(k, j - k, w))
    return SampledFunction(grid2, vals)

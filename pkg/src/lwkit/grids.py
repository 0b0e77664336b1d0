"""Uniform grids on R^n / R^2n, quadrature, inner products and resampling.

Conventions used throughout the package:

* node i on an axis with half-extent L and N points sits at -L + i*(2L/N),
  so the grid covers [-L, L) left-closed;
* quadrature is the plain Riemann sum weighted by the product of spacings;
* every function handled here is assumed numerically negligible at the
  boundary, so off-grid evaluation treats everything outside [-L, L] as zero
  and trigonometric (band-limited) interpolation is accurate inside;
* the symplectic form is sigma(z, z') = Jz . z' = y.x' - x.y' for z = (x, y),
  J = [[0, I], [-I, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GridSpec",
    "SampledFunction",
    "PhasePoint",
    "make_grid",
    "inner_product",
    "norm",
    "symplectic_form",
]


def _as_tuple(value, dim, caster):
    if np.isscalar(value):
        return (caster(value),) * dim
    out = tuple(caster(v) for v in value)
    if len(out) != dim:
        raise ValueError(f"expected {dim} per-axis values, got {len(out)}")
    return out


@dataclass(frozen=True)
class GridSpec:
    """Uniform tensor grid on R^dim covering [-L, L) per axis."""

    dim: int
    half_extent: tuple[float, ...]
    points: tuple[int, ...]
    hbar: float
    spacing: tuple[float, ...] = field(init=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be a positive integer")
        for n in self.points:
            if n % 2 != 0 or n < 8:
                raise ValueError(f"points must be even and >= 8, got {n}")
        for ext in self.half_extent:
            if ext <= 0:
                raise ValueError("half_extent must be positive")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        object.__setattr__(
            self,
            "spacing",
            tuple(2.0 * ext / n for ext, n in zip(self.half_extent, self.points)),
        )

    @property
    def shape(self) -> tuple[int, ...]:
        return self.points

    @property
    def total_points(self) -> int:
        return int(np.prod(self.points))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def axis(self, i: int) -> np.ndarray:
        """Node coordinates along axis i."""
        L, n = self.half_extent[i], self.points[i]
        return -L + (2.0 * L / n) * np.arange(n)

    def axes(self) -> list[np.ndarray]:
        return [self.axis(i) for i in range(self.dim)]

    def meshgrid(self) -> list[np.ndarray]:
        return list(np.meshgrid(*self.axes(), indexing="ij"))

    def same_layout(self, other: "GridSpec") -> bool:
        return (
            self.dim == other.dim
            and self.half_extent == other.half_extent
            and self.points == other.points
            and self.hbar == other.hbar
        )

    def with_hbar(self, hbar: float) -> "GridSpec":
        return GridSpec(self.dim, self.half_extent, self.points, hbar)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "half_extent": list(self.half_extent),
            "points": list(self.points),
            "hbar": self.hbar,
        }


def make_grid(dim, half_extent, points, hbar=1.0) -> GridSpec:
    """Build a GridSpec; rejects odd/tiny point counts and non-positive sizes."""
    dim = int(dim)
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    return GridSpec(
        dim=dim,
        half_extent=_as_tuple(half_extent, dim, float),
        points=_as_tuple(points, dim, int),
        hbar=float(hbar),
    )


class SampledFunction:
    """Complex samples of a function on a GridSpec (C-order layout)."""

    __slots__ = ("grid", "values")

    def __init__(self, grid: GridSpec, values):
        values = np.asarray(values, dtype=complex)
        if values.size != grid.total_points:
            raise ValueError(
                f"value count {values.size} does not match grid ({grid.total_points})"
            )
        values = values.reshape(grid.shape)
        if not np.all(np.isfinite(values.view(float))):
            raise ValueError("sampled values must be finite")
        self.grid = grid
        self.values = values

    @classmethod
    def from_callable(cls, grid: GridSpec, fn) -> "SampledFunction":
        """Sample fn(*coordinate_arrays) on the grid nodes."""
        return cls(grid, fn(*grid.meshgrid()))

    def copy(self) -> "SampledFunction":
        return SampledFunction(self.grid, self.values.copy())

    def norm(self) -> float:
        w = self.grid.cell_volume
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * w))

    def __add__(self, other):
        self._check(other)
        return SampledFunction(self.grid, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return SampledFunction(self.grid, self.values - other.values)

    def __mul__(self, scalar):
        return SampledFunction(self.grid, self.values * scalar)

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, SampledFunction) or not self.grid.same_layout(other.grid):
            raise ValueError("grid mismatch")


@dataclass(frozen=True)
class PhasePoint:
    """Point z = (x, y) of phase space R^2n."""

    coords: tuple[float, ...]

    def __post_init__(self):
        if len(self.coords) % 2 != 0 or len(self.coords) == 0:
            raise ValueError("phase-space point needs an even number of coordinates")
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords) // 2

    @property
    def x(self) -> np.ndarray:
        return np.asarray(self.coords[: self.n])

    @property
    def y(self) -> np.ndarray:
        return np.asarray(self.coords[self.n :])

    def __array__(self, dtype=None):
        return np.asarray(self.coords, dtype=dtype)


def _coords(z) -> np.ndarray:
    z = np.asarray(z, dtype=float).ravel()
    if z.size % 2 != 0 or z.size == 0:
        raise ValueError("phase-space point needs an even number of coordinates")
    return z


def inner_product(f: SampledFunction, g: SampledFunction) -> complex:
    """Riemann-sum L2 inner product, conjugate-linear in the second slot."""
    if not f.grid.same_layout(g.grid):
        raise ValueError("grid mismatch")
    return complex(np.sum(f.values * np.conj(g.values)) * f.grid.cell_volume)


def norm(f: SampledFunction) -> float:
    return f.norm()


def symplectic_form(z, z2) -> float:
    """sigma(z, z') = Jz . z' = y.x' - x.y' with z = (x, y)."""
    a, b = _coords(z), _coords(z2)
    if a.size != b.size:
        raise ValueError("phase-space points must have equal length")
    n = a.size // 2
    return float(np.dot(a[n:], b[:n]) - np.dot(a[:n], b[n:]))

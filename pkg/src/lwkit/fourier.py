"""Band-limited resampling and oscillatory-integral helpers.

All off-grid evaluation in the package goes through trigonometric
interpolation of the sampled data (zero-padded Fourier interpolation),
with points outside the grid's closed extent mapped to zero.  Oscillatory
integrals int e^{i w x} f(x) dx are reduced to dense one-dimensional
Fourier sums; when the requested frequencies approach the Nyquist rate of
the sampling the integrand is upsampled first so the Riemann sum stays a
spectrally accurate quadrature.
"""

from __future__ import annotations

import numpy as np

from .grids import GridSpec, SampledFunction

__all__ = [
    "eval_axis",
    "resample_tensor",
    "eval_points",
    "upsample_axis",
    "fourier_sum",
    "oversample_factor",
    "spectral_derivative",
    "fine_axis",
]

# fraction of Nyquist beyond which quadratures switch to a finer grid
_NYQUIST_SAFETY = 0.8


def _mode_numbers(n: int) -> np.ndarray:
    return np.fft.fftfreq(n, 1.0 / n)


def _eval_matrix(half_extent: float, n: int, targets: np.ndarray) -> np.ndarray:
    """Rows evaluate the trig interpolant of n samples on [-L, L) at targets."""
    targets = np.asarray(targets, dtype=float)
    m = _mode_numbers(n)
    phase = np.exp(1j * np.pi / half_extent * np.outer(targets + half_extent, m))
    inside = (np.abs(targets) <= half_extent + 1e-12)[:, None]
    return np.where(inside, phase, 0.0)


def eval_axis(values: np.ndarray, half_extent: float, targets, axis: int = 0) -> np.ndarray:
    """Evaluate the interpolant of `values` along `axis` at arbitrary targets.

    Targets outside [-L, L] give zero (boundary-decay convention).
    """
    values = np.asarray(values, dtype=complex)
    n = values.shape[axis]
    coeff = np.fft.fft(values, axis=axis) / n
    mat = _eval_matrix(half_extent, n, np.atleast_1d(np.asarray(targets, dtype=float)))
    out = np.moveaxis(np.tensordot(mat, np.moveaxis(coeff, axis, 0), axes=(1, 0)), 0, axis)
    return out


def resample_tensor(f: SampledFunction, target_axes: list[np.ndarray]) -> np.ndarray:
    """Evaluate f on the tensor product of per-axis target coordinates."""
    if len(target_axes) != f.grid.dim:
        raise ValueError("need one target array per axis")
    out = f.values
    for ax in range(f.grid.dim):
        out = eval_axis(out, f.grid.half_extent[ax], target_axes[ax], axis=ax)
    return out


def eval_points(f: SampledFunction, pts: np.ndarray) -> np.ndarray:
    """Evaluate f at scattered points, shape (npts, dim)."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    if pts.shape[1] != f.grid.dim:
        raise ValueError("point dimension mismatch")
    coeff = np.fft.fftn(f.values) / f.grid.total_points
    out = coeff
    # contract one axis at a time against per-point phase rows
    for ax in range(f.grid.dim):
        mat = _eval_matrix(f.grid.half_extent[ax], f.grid.points[ax], pts[:, ax])
        if ax == 0:
            out = np.tensordot(mat, out, axes=(1, 0))
        else:
            out = np.einsum("pm,pm...->p...", mat, out)
    return out


def upsample_axis(values: np.ndarray, factor: int, axis: int = 0) -> np.ndarray:
    """Zero-padded Fourier upsampling along one axis (exact for band-limited data)."""
    if factor == 1:
        return np.asarray(values, dtype=complex)
    values = np.asarray(values, dtype=complex)
    n = values.shape[axis]
    nf = n * factor
    spec = np.fft.fft(values, axis=axis)
    spec = np.moveaxis(spec, axis, 0)
    padded = np.zeros((nf,) + spec.shape[1:], dtype=complex)
    half = n // 2
    padded[:half] = spec[:half]
    padded[nf - half + 1 :] = spec[half + 1 :]
    # split the Nyquist mode symmetrically
    padded[half] = 0.5 * spec[half]
    padded[nf - half] = 0.5 * spec[half]
    out = np.fft.ifft(padded, axis=0) * factor
    return np.moveaxis(out, 0, axis)


def oversample_factor(max_freq: float, spacing: float) -> int:
    """Smallest integer upsampling factor keeping max_freq below the safe Nyquist band."""
    if max_freq <= 0:
        return 1
    limit = _NYQUIST_SAFETY * np.pi / spacing
    return max(1, int(np.ceil(max_freq / limit)))


def fine_axis(half_extent: float, n: int, factor: int) -> np.ndarray:
    nf = n * factor
    return -half_extent + (2.0 * half_extent / nf) * np.arange(nf)


def fourier_sum(values: np.ndarray, nodes: np.ndarray, freqs: np.ndarray,
                sign: int, axis: int = 0) -> np.ndarray:
    """Quadrature of int e^{i*sign*w*x} f(x) dx along `axis` for each w in freqs.

    `values` are samples of f on the uniform `nodes`; the spacing is folded in.
    The caller is responsible for choosing nodes fine enough for the largest
    frequency (see oversample_factor).
    """
    values = np.asarray(values, dtype=complex)
    nodes = np.asarray(nodes, dtype=float)
    dx = nodes[1] - nodes[0]
    kernel = np.exp(1j * sign * np.outer(freqs, nodes)) * dx
    return np.moveaxis(np.tensordot(kernel, np.moveaxis(values, axis, 0), axes=(1, 0)), 0, axis)


def spectral_derivative(values: np.ndarray, half_extent: float, axis: int = 0,
                        order: int = 1) -> np.ndarray:
    """Periodic spectral derivative d^order/dx^order along one axis."""
    values = np.asarray(values, dtype=complex)
    n = values.shape[axis]
    k = 2.0 * np.pi * np.fft.fftfreq(n, d=2.0 * half_extent / n)
    shape = [1] * values.ndim
    shape[axis] = n
    mult = (1j * k.reshape(shape)) ** order
    return np.fft.ifft(np.fft.fft(values, axis=axis) * mult, axis=axis)

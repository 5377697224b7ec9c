"""Planar image containers, chroma resampling, Gaussian filtering, and
high-frequency energy measurement.

Planes are 2-D numpy arrays of integer codes, shape (height, width), uint8
at depth 8 and uint16 at depths 9 through 16. Filtering runs in float64 and
returns floats; rounding back to codes happens once, at the caller's output
boundary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, StructuralError
from .numeric import check_depth, dtype_for_depth, max_code


class Subsampling(enum.Enum):
    """Chroma resolution relative to luma."""

    S444 = "444"
    S422 = "422"
    S420 = "420"

    @property
    def chroma_divisors(self) -> tuple[int, int]:
        """(horizontal, vertical) divisor applied to chroma plane dimensions."""
        return _DIVISORS[self]


_DIVISORS = {
    Subsampling.S444: (1, 1),
    Subsampling.S422: (2, 1),
    Subsampling.S420: (2, 2),
}


def chroma_plane_shape(width: int, height: int, subsampling: Subsampling) -> tuple[int, int]:
    """Numpy shape (rows, cols) of a chroma plane for the given luma size."""
    dx, dy = subsampling.chroma_divisors
    return (height // dy, width // dx)


def _check_plane(name: str, plane, shape: tuple[int, int], depth: int) -> None:
    if not isinstance(plane, np.ndarray):
        raise StructuralError(f"{name} plane must be a numpy array, got {type(plane).__name__}")
    expected = dtype_for_depth(depth)
    if plane.dtype != expected:
        raise StructuralError(f"{name} plane at depth {depth} must have dtype {expected}, got {plane.dtype}")
    if plane.shape != shape:
        raise StructuralError(
            f"{name} plane must have shape {shape}, got {plane.shape}"
        )
    if plane.size and int(plane.max()) > max_code(depth):
        raise StructuralError(f"{name} plane holds codes above the {depth}-bit maximum")


@dataclass(frozen=True, eq=False)
class RgbImage:
    """An RGB image stored as three full-resolution planes of integer codes."""

    width: int
    height: int
    depth: int
    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        check_depth(self.depth)
        if self.width <= 0 or self.height <= 0:
            raise StructuralError(f"image dimensions must be positive, got {self.width}x{self.height}")
        shape = (self.height, self.width)
        for name in ("r", "g", "b"):
            _check_plane(name, getattr(self, name), shape, self.depth)

    @property
    def max_code(self) -> int:
        return max_code(self.depth)


@dataclass(frozen=True, eq=False)
class PlanarImage:
    """A planar luma/chroma image; chroma planes may be subsampled.

    Width and height describe the luma plane. Under 4:2:2 the width must be
    even; under 4:2:0 both dimensions must be even. There is no implicit
    padding anywhere in the pipeline.
    """

    width: int
    height: int
    depth: int
    subsampling: Subsampling
    y: np.ndarray
    cb: np.ndarray
    cr: np.ndarray

    def __post_init__(self):
        check_depth(self.depth)
        if self.width <= 0 or self.height <= 0:
            raise StructuralError(f"image dimensions must be positive, got {self.width}x{self.height}")
        dx, dy = self.subsampling.chroma_divisors
        if self.width % dx or self.height % dy:
            raise StructuralError(
                f"{self.subsampling.value} chroma requires dimensions divisible by "
                f"{dx}x{dy}, got {self.width}x{self.height}"
            )
        _check_plane("y", self.y, (self.height, self.width), self.depth)
        cshape = chroma_plane_shape(self.width, self.height, self.subsampling)
        _check_plane("cb", self.cb, cshape, self.depth)
        _check_plane("cr", self.cr, cshape, self.depth)

    @property
    def max_code(self) -> int:
        return max_code(self.depth)


def _block_mean(plane: np.ndarray, dx: int, dy: int) -> np.ndarray:
    # Integer mean of dx*dy blocks with halves rounded up (samples are
    # nonnegative, so half-up equals half-away-from-zero).
    acc = plane.astype(np.int64)
    if dx == 2:
        acc = acc[:, 0::2] + acc[:, 1::2]
    if dy == 2:
        acc = acc[0::2, :] + acc[1::2, :]
    n = dx * dy
    return ((acc + n // 2) // n).astype(plane.dtype)


def downsample_chroma(img: PlanarImage, target: Subsampling) -> PlanarImage:
    """Reduce chroma resolution by block averaging; luma is untouched.

    Starts from 4:4:4 and refuses odd dimensions rather than padding.
    """
    if target is Subsampling.S444:
        raise DomainError("downsampling target must be 4:2:2 or 4:2:0")
    if img.subsampling is not Subsampling.S444:
        raise StructuralError(
            f"chroma downsampling starts from 4:4:4, got {img.subsampling.value}"
        )
    dx, dy = target.chroma_divisors
    if img.width % dx or img.height % dy:
        raise StructuralError(
            f"{target.value} chroma requires dimensions divisible by {dx}x{dy}, "
            f"got {img.width}x{img.height}"
        )
    return PlanarImage(
        width=img.width, height=img.height, depth=img.depth, subsampling=target,
        y=img.y,
        cb=_block_mean(img.cb, dx, dy),
        cr=_block_mean(img.cr, dx, dy),
    )


def upsample_chroma(img: PlanarImage) -> PlanarImage:
    """Expand chroma back to full resolution by nearest-neighbour replication."""
    if img.subsampling is Subsampling.S444:
        return img
    dx, dy = img.subsampling.chroma_divisors
    cb = np.repeat(np.repeat(img.cb, dy, axis=0), dx, axis=1)
    cr = np.repeat(np.repeat(img.cr, dy, axis=0), dx, axis=1)
    return PlanarImage(
        width=img.width, height=img.height, depth=img.depth,
        subsampling=Subsampling.S444, y=img.y, cb=cb, cr=cr,
    )


@dataclass(frozen=True)
class GaussianSpec:
    """A normalized 1-D Gaussian kernel truncated at three standard deviations."""

    sigma: float

    def __post_init__(self):
        if not math.isfinite(self.sigma) or self.sigma <= 0.0:
            raise DomainError(f"sigma must be positive and finite, got {self.sigma!r}")

    @property
    def radius(self) -> int:
        return int(math.ceil(3.0 * self.sigma))

    def kernel(self) -> np.ndarray:
        """Taps exp(-i^2 / (2 sigma^2)) for i in [-radius, radius], renormalized to sum 1."""
        offsets = np.arange(-self.radius, self.radius + 1, dtype=np.float64)
        taps = np.exp(-(offsets * offsets) / (2.0 * self.sigma * self.sigma))
        return taps / taps.sum()


def _convolve_axis(plane: np.ndarray, taps: np.ndarray, radius: int, axis: int) -> np.ndarray:
    pad = [(0, 0), (0, 0)]
    pad[axis] = (radius, radius)
    # Mirror borders without repeating the edge sample; numpy folds the
    # reflection back on itself when the radius exceeds the axis length.
    padded = np.pad(plane, pad, mode="reflect")
    n = plane.shape[axis]
    acc = np.zeros(plane.shape, dtype=np.float64)
    index: list[slice] = [slice(None), slice(None)]
    for i, w in enumerate(taps):
        index[axis] = slice(i, i + n)
        acc += w * padded[tuple(index)]
    return acc


def gaussian_blur(plane: np.ndarray, spec: GaussianSpec) -> np.ndarray:
    """Separable Gaussian low-pass of one sample plane.

    Input may be integer codes or floats; accumulation and the return value
    are float64. Rows are filtered first, then columns; with mirrored borders
    the two orders agree to roundoff anyway.
    """
    out = np.asarray(plane, dtype=np.float64)
    if out.ndim != 2:
        raise StructuralError(f"blur expects a 2-D sample plane, got {out.ndim}-D")
    taps = spec.kernel()
    out = _convolve_axis(out, taps, spec.radius, axis=1)
    out = _convolve_axis(out, taps, spec.radius, axis=0)
    return out


def high_freq_energy(plane: np.ndarray, spec: GaussianSpec, depth: int) -> float:
    """Residual energy above the Gaussian low-pass.

    Samples are scaled into [0, 1] by the depth's maximum code before the
    residual sum of squares, so planes of different bit depth compare on the
    same footing.
    """
    scale = float(max_code(depth))
    x = np.asarray(plane, dtype=np.float64) / scale
    if x.ndim != 2:
        raise StructuralError(f"high-frequency energy expects a 2-D plane, got {x.ndim}-D")
    residual = x - gaussian_blur(x, spec)
    return float(np.sum(residual * residual))

"""RGB to Y'CbCr conversion with BT.2020 weights and bit-depth integer coding.

All conversions act on gamma-corrected (non-linear) components; the transfer
function itself is out of scope. Normalized luma lives in [0, 1], normalized
chroma in [-0.5, +0.5], and integer chroma uses offset binary so the middle
code stands for zero chroma (128 at 8 bits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numeric import dtype_for_depth, max_code, round_half_away
from .planes import PlanarImage, RgbImage, Subsampling, upsample_chroma


@dataclass(frozen=True)
class Bt2020Weights:
    """Luma weights and colour-difference divisors of the BT.2020 matrix.

    The defaults are the four-decimal published constants. Weights must sum
    to exactly 1.0 in floats, and each divisor must match 2 * (1 - weight)
    of its channel at the stored four-decimal precision.
    """

    wr: float = 0.2627
    wg: float = 0.6780
    wb: float = 0.0593
    cb_divisor: float = 1.8814
    cr_divisor: float = 1.4746

    def __post_init__(self):
        for name in ("wr", "wg", "wb"):
            w = getattr(self, name)
            if not math.isfinite(w) or w <= 0.0:
                raise DomainError(f"{name} must be positive and finite, got {w!r}")
        if self.wr + self.wg + self.wb != 1.0:
            raise DomainError("luma weights must sum to exactly 1.0")
        if round(self.cb_divisor, 4) != round(2.0 * (1.0 - self.wb), 4):
            raise DomainError("cb divisor must equal 2*(1-wb) to four decimals")
        if round(self.cr_divisor, 4) != round(2.0 * (1.0 - self.wr), 4):
            raise DomainError("cr divisor must equal 2*(1-wr) to four decimals")


BT2020 = Bt2020Weights()


def _check_unit(name: str, x: float) -> None:
    if not math.isfinite(x) or x < 0.0 or x > 1.0:
        raise DomainError(f"{name} component must lie in [0, 1], got {x!r}")


@dataclass(frozen=True)
class RgbTriplet:
    """One pixel of normalized gamma-corrected RGB."""

    r: float
    g: float
    b: float

    def __post_init__(self):
        _check_unit("r", self.r)
        _check_unit("g", self.g)
        _check_unit("b", self.b)


@dataclass(frozen=True)
class YCbCrTriplet:
    """One pixel of normalized luma plus blue and red colour differences."""

    y: float
    cb: float
    cr: float

    def __post_init__(self):
        _check_unit("y", self.y)
        for name, c in (("cb", self.cb), ("cr", self.cr)):
            if not math.isfinite(c) or c < -0.5 or c > 0.5:
                raise DomainError(f"{name} component must lie in [-0.5, 0.5], got {c!r}")


def rgb_arrays_to_ycbcr(r, g, b, weights: Bt2020Weights = BT2020):
    """Forward transform on scalars or arrays of normalized values.

    Chroma is clipped to [-0.5, 0.5]: the transform's real-valued range is
    exactly that interval, but the four-decimal divisors fall one ulp short
    of 2*(1-w), so the gamut corners can spill a single ulp past 0.5.
    """
    y = weights.wr * r + weights.wg * g + weights.wb * b
    cb = np.clip((b - y) / weights.cb_divisor, -0.5, 0.5)
    cr = np.clip((r - y) / weights.cr_divisor, -0.5, 0.5)
    return y, cb, cr


def ycbcr_arrays_to_rgb(y, cb, cr, weights: Bt2020Weights = BT2020):
    """Inverse transform on scalars or arrays; outputs clipped to [0, 1].

    Quantised inputs can land outside the RGB gamut, so the clip is part of
    the contract rather than a numerical patch.
    """
    r = y + weights.cr_divisor * cr
    b = y + weights.cb_divisor * cb
    g = (y - weights.wr * r - weights.wb * b) / weights.wg
    return (
        np.clip(r, 0.0, 1.0),
        np.clip(g, 0.0, 1.0),
        np.clip(b, 0.0, 1.0),
    )


def rgb_to_ycbcr(pixel: RgbTriplet, weights: Bt2020Weights = BT2020) -> YCbCrTriplet:
    y, cb, cr = rgb_arrays_to_ycbcr(pixel.r, pixel.g, pixel.b, weights)
    return YCbCrTriplet(float(y), float(cb), float(cr))


def ycbcr_to_rgb(pixel: YCbCrTriplet, weights: Bt2020Weights = BT2020) -> RgbTriplet:
    r, g, b = ycbcr_arrays_to_rgb(pixel.y, pixel.cb, pixel.cr, weights)
    return RgbTriplet(float(r), float(g), float(b))


def encode_value(x: float, depth: int, *, chroma: bool = False) -> int:
    """Map one normalized value to its integer code at the given depth.

    Chroma values are shifted by +0.5 first (offset binary), then scaled by
    the maximum code and rounded half away from zero. Full range: no head or
    foot room is reserved.
    """
    v = float(x) + (0.5 if chroma else 0.0)
    if not math.isfinite(v) or v < 0.0 or v > 1.0:
        raise DomainError(f"normalized value out of range for encoding: {x!r}")
    return int(round_half_away(v * max_code(depth)))


def decode_value(code: int, depth: int, *, chroma: bool = False) -> float:
    """Map an integer code back to its normalized value."""
    mc = max_code(depth)
    code = int(code)
    if code < 0 or code > mc:
        raise DomainError(f"code {code} out of range for depth {depth}")
    return code / mc - (0.5 if chroma else 0.0)


def encode_plane(values: np.ndarray, depth: int, *, chroma: bool = False) -> np.ndarray:
    """Vectorized encode_value over a plane of normalized floats."""
    v = np.asarray(values, dtype=np.float64) + (0.5 if chroma else 0.0)
    if v.size and (not np.all(np.isfinite(v)) or float(v.min()) < 0.0 or float(v.max()) > 1.0):
        raise DomainError("normalized samples out of range for encoding")
    return round_half_away(v * max_code(depth)).astype(dtype_for_depth(depth))


def decode_plane(codes: np.ndarray, depth: int, *, chroma: bool = False) -> np.ndarray:
    """Vectorized decode_value over a plane of integer codes."""
    mc = max_code(depth)
    c = np.asarray(codes)
    if c.size and (int(c.min()) < 0 or int(c.max()) > mc):
        raise DomainError(f"codes out of range for depth {depth}")
    return c.astype(np.float64) / mc - (0.5 if chroma else 0.0)


def convert_image(img: RgbImage, weights: Bt2020Weights = BT2020) -> PlanarImage:
    """Convert an RGB image to 4:4:4 planar luma/chroma at the same depth."""
    r = decode_plane(img.r, img.depth)
    g = decode_plane(img.g, img.depth)
    b = decode_plane(img.b, img.depth)
    y, cb, cr = rgb_arrays_to_ycbcr(r, g, b, weights)
    return PlanarImage(
        width=img.width, height=img.height, depth=img.depth,
        subsampling=Subsampling.S444,
        y=encode_plane(y, img.depth),
        cb=encode_plane(cb, img.depth, chroma=True),
        cr=encode_plane(cr, img.depth, chroma=True),
    )


def reconstruct_image(img: PlanarImage, weights: Bt2020Weights = BT2020) -> RgbImage:
    """Invert a planar image back to RGB, upsampling subsampled chroma first."""
    full = upsample_chroma(img)
    y = decode_plane(full.y, img.depth)
    cb = decode_plane(full.cb, img.depth, chroma=True)
    cr = decode_plane(full.cr, img.depth, chroma=True)
    r, g, b = ycbcr_arrays_to_rgb(y, cb, cr, weights)
    return RgbImage(
        width=img.width, height=img.height, depth=img.depth,
        r=encode_plane(r, img.depth),
        g=encode_plane(g, img.depth),
        b=encode_plane(b, img.depth),
    )


def rescale_depth(img: RgbImage, depth: int) -> RgbImage:
    """Re-encode an RGB image at a different bit depth."""
    if depth == img.depth:
        return img
    planes = [encode_plane(decode_plane(p, img.depth), depth) for p in (img.r, img.g, img.b)]
    return RgbImage(img.width, img.height, depth, *planes)

"""Uniform scalar quantisation with HEVC-style QP semantics, distortion
metrics, and the luma-versus-chroma sensitivity experiment."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .color import BT2020, Bt2020Weights, ycbcr_arrays_to_rgb
from .errors import DomainError, StructuralError
from .numeric import check_depth, max_code, round_half_away
from .planes import GaussianSpec, PlanarImage, Subsampling, gaussian_blur, high_freq_energy

QP_MIN = 0
LUMA_QP_CAP = 51
CHROMA_QP_CAP = 39

# Step sizes for QP 0..5. Six QP steps double the step size, so any step is
# base[qp % 6] * 2**(qp // 6); keeping the residue table makes the doubling
# exact in floats instead of drifting through repeated 2**(1/6) products.
_BASE_STEPS = tuple(2.0 ** ((r - 4) / 6.0) for r in range(6))


def _check_qp(qp: int, cap: int) -> int:
    try:
        qp = operator.index(qp)
    except TypeError:
        raise DomainError(f"QP must be an integer, got {qp!r}") from None
    if not QP_MIN <= qp <= cap:
        raise DomainError(f"QP must lie in [{QP_MIN}, {cap}], got {qp}")
    return qp


def qp_to_step(qp: int, depth: int) -> float:
    """Quantiser step size in code values.

    Anchored at step 1.0 for QP 4 at 8 bits; doubles every 6 QP and doubles
    again per extra bit of depth.
    """
    qp = _check_qp(qp, LUMA_QP_CAP)
    depth = check_depth(depth)
    return _BASE_STEPS[qp % 6] * (2.0 ** (qp // 6)) * (2.0 ** (depth - 8))


@dataclass(frozen=True)
class QuantSpec:
    """A QP schedule: luma QP plus an additive chroma offset.

    Caps follow the HEVC-style scheme: luma up to 51, chroma up to 39.
    The chroma cap only binds for 4:2:0 images; 4:2:2 and 4:4:4 chroma
    share the luma cap.
    """

    luma_qp: int
    chroma_qp_offset: int = 0
    chroma_qp_cap: int = CHROMA_QP_CAP
    luma_qp_cap: int = LUMA_QP_CAP

    def __post_init__(self):
        if not QP_MIN <= self.chroma_qp_cap <= self.luma_qp_cap <= LUMA_QP_CAP:
            raise DomainError(
                f"caps must satisfy {QP_MIN} <= chroma cap <= luma cap <= {LUMA_QP_CAP}, "
                f"got {self.chroma_qp_cap}/{self.luma_qp_cap}"
            )
        _check_qp(self.luma_qp, self.luma_qp_cap)
        try:
            operator.index(self.chroma_qp_offset)
        except TypeError:
            raise DomainError(
                f"chroma QP offset must be an integer, got {self.chroma_qp_offset!r}"
            ) from None


def effective_chroma_qp(spec: QuantSpec, subsampling: Subsampling = Subsampling.S420) -> int:
    """Chroma QP actually applied: luma QP plus offset, clamped to its cap."""
    cap = spec.chroma_qp_cap if subsampling is Subsampling.S420 else spec.luma_qp_cap
    return max(QP_MIN, min(spec.luma_qp + spec.chroma_qp_offset, cap))


def quantize_plane(plane: np.ndarray, qp: int, depth: int) -> np.ndarray:
    """Uniform mid-tread quantisation of one sample plane.

    Returns float64 reconstruction levels (integer multiples of the step,
    clamped to the code range). Requantising the result at the same QP is a
    bit-exact no-op.
    """
    step = qp_to_step(qp, depth)
    x = np.asarray(plane, dtype=np.float64)
    levels = round_half_away(x / step) * step
    return np.clip(levels, 0.0, float(max_code(depth)))


def mse(a: np.ndarray, b: np.ndarray) -> float:
    """Mean squared error between two same-shaped sample arrays."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise StructuralError(f"array shapes differ: {a.shape} vs {b.shape}")
    diff = a - b
    return float(np.mean(diff * diff))


def psnr_from_mse(error: float, depth: int) -> float:
    """PSNR in dB against the depth's peak code; +inf for zero error."""
    peak = float(max_code(depth))
    if not math.isfinite(error) or error < 0.0:
        raise DomainError(f"mean squared error must be nonnegative and finite, got {error!r}")
    if error == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / error)


def psnr(a: np.ndarray, b: np.ndarray, depth: int) -> float:
    """Peak signal-to-noise ratio between two planes of the given depth."""
    return psnr_from_mse(mse(a, b), depth)


@dataclass(frozen=True)
class MetricsReport:
    """Distortion and detail metrics for one QP schedule of a sweep.

    The two blur fields carry the filter-contrast experiment (blurring only
    luma versus blurring only chroma); they depend on sigma, not on the QP
    schedule, so a sweep repeats the same pair on every row.
    """

    luma_qp: int
    chroma_qp: int
    y_mse: float
    cb_mse: float
    cr_mse: float
    y_psnr: float
    cb_psnr: float
    cr_psnr: float
    rgb_psnr: float
    y_hf: float
    cb_hf: float
    cr_hf: float
    blur_luma_rgb_psnr: float
    blur_chroma_rgb_psnr: float


REPORT_COLUMNS = (
    "luma_qp", "chroma_qp",
    "y_psnr", "cb_psnr", "cr_psnr", "rgb_psnr",
    "y_hf", "cb_hf", "cr_hf",
)


def _rgb_code_stack(img: PlanarImage, y, cb, cr, weights: Bt2020Weights) -> np.ndarray:
    """RGB reconstruction in continuous code units (clipped, never rounded).

    Keeping the comparison domain continuous isolates the damage done by
    quantisation or filtering from integer re-coding noise.
    """
    scale = float(max_code(img.depth))
    dx, dy = img.subsampling.chroma_divisors
    cb = np.repeat(np.repeat(np.asarray(cb, dtype=np.float64), dy, axis=0), dx, axis=1)
    cr = np.repeat(np.repeat(np.asarray(cr, dtype=np.float64), dy, axis=0), dx, axis=1)
    yn = np.asarray(y, dtype=np.float64) / scale
    cbn = cb / scale - 0.5
    crn = cr / scale - 0.5
    r, g, b = ycbcr_arrays_to_rgb(yn, cbn, crn, weights)
    return np.stack((r, g, b), axis=-1) * scale


def sensitivity_experiment(img: PlanarImage, qp_sweep: Sequence[QuantSpec],
                           sigma: float, weights: Bt2020Weights = BT2020) -> list[MetricsReport]:
    """Quantise luma and chroma per schedule and measure the damage.

    For every schedule in the sweep the three planes are quantised (chroma at
    its effective QP for the image's subsampling), RGB is rebuilt in the
    continuous code domain against the unquantised image as reference, and
    the report carries per-plane MSE and PSNR, combined RGB PSNR, and the
    residual high-frequency energy of each quantised plane at the given
    sigma. The blur-contrast fields compare filtering only the luma plane
    against filtering only the chroma planes.
    """
    qp_sweep = list(qp_sweep)
    if not qp_sweep:
        raise DomainError("QP sweep must contain at least one schedule")
    spec = GaussianSpec(sigma)
    depth = img.depth
    reference = _rgb_code_stack(img, img.y, img.cb, img.cr, weights)

    blur_luma = _rgb_code_stack(img, gaussian_blur(img.y, spec), img.cb, img.cr, weights)
    blur_chroma = _rgb_code_stack(
        img, img.y, gaussian_blur(img.cb, spec), gaussian_blur(img.cr, spec), weights
    )
    blur_luma_psnr = psnr_from_mse(mse(reference, blur_luma), depth)
    blur_chroma_psnr = psnr_from_mse(mse(reference, blur_chroma), depth)

    reports = []
    for schedule in qp_sweep:
        chroma_qp = effective_chroma_qp(schedule, img.subsampling)
        qy = quantize_plane(img.y, schedule.luma_qp, depth)
        qcb = quantize_plane(img.cb, chroma_qp, depth)
        qcr = quantize_plane(img.cr, chroma_qp, depth)
        y_mse = mse(img.y, qy)
        cb_mse = mse(img.cb, qcb)
        cr_mse = mse(img.cr, qcr)
        rebuilt = _rgb_code_stack(img, qy, qcb, qcr, weights)
        reports.append(MetricsReport(
            luma_qp=schedule.luma_qp,
            chroma_qp=chroma_qp,
            y_mse=y_mse, cb_mse=cb_mse, cr_mse=cr_mse,
            y_psnr=psnr_from_mse(y_mse, depth),
            cb_psnr=psnr_from_mse(cb_mse, depth),
            cr_psnr=psnr_from_mse(cr_mse, depth),
            rgb_psnr=psnr_from_mse(mse(reference, rebuilt), depth),
            y_hf=high_freq_energy(qy, spec, depth),
            cb_hf=high_freq_energy(qcb, spec, depth),
            cr_hf=high_freq_energy(qcr, spec, depth),
            blur_luma_rgb_psnr=blur_luma_psnr,
            blur_chroma_rgb_psnr=blur_chroma_psnr,
        ))
    return reports


def _format_cell(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if math.isinf(value):
        return "inf"
    return format(float(value), ".6g")


def reports_to_csv(reports: Sequence[MetricsReport]) -> str:
    """Render sweep reports as CSV: fixed column set, six significant digits,
    infinities spelled "inf"."""
    lines = [",".join(REPORT_COLUMNS)]
    for report in reports:
        lines.append(",".join(_format_cell(getattr(report, name)) for name in REPORT_COLUMNS))
    return "\n".join(lines) + "\n"

"""Command-line interface.

Subcommands cover the physics queries, image conversion, plane operations,
quantisation, and the sensitivity experiment. Single-value results are
printed as one JSON object on stdout; sweeps are written to CSV files.
Diagnostics go to stderr. Exit codes: 0 success, 1 domain or data error,
2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .color import convert_image, reconstruct_image, rescale_depth
from .errors import VlhvsError
from .formats import read_ppm, read_spectral_csv, read_ycf, write_ppm, write_ycf
from .numeric import round_half_away
from .planes import (
    GaussianSpec,
    Subsampling,
    downsample_chroma,
    gaussian_blur,
    high_freq_energy,
)
from .quant import (
    QuantSpec,
    effective_chroma_qp,
    mse,
    psnr_from_mse,
    qp_to_step,
    quantize_plane,
    reports_to_csv,
    sensitivity_experiment,
)
from .spectral import (
    TableKind,
    classify_band,
    dominant_cone,
    frequency_thz,
    illuminance,
    luminous_efficiency,
    luminous_flux,
    luminous_intensity,
    photon_energy,
    photon_flux,
    standard_photopic_table,
)

VLAMBDA_ENV = "VLHVS_VLAMBDA"


def _emit(payload: dict) -> None:
    def clean(v):
        if isinstance(v, float) and math.isinf(v):
            return "inf"
        return v

    print(json.dumps({k: clean(v) for k, v in payload.items()}))


def _vlambda_table():
    """Photopic weighting table, honouring the CSV override environment variable."""
    override = os.environ.get(VLAMBDA_ENV)
    if override:
        return read_spectral_csv(Path(override).read_bytes(), TableKind.LUMINOSITY)
    return standard_photopic_table()


def _cmd_physics_energy(args) -> int:
    energy = photon_energy(args.nm)
    _emit({
        "nm": args.nm,
        "joules": energy.joules,
        "ev": energy.electron_volts,
        "thz": frequency_thz(args.nm),
        "band": classify_band(args.nm).value,
    })
    return 0


def _cmd_physics_cone(args) -> int:
    cone = dominant_cone(args.nm)
    _emit({
        "nm": args.nm,
        "cone": cone.value,
        "peak_nm": cone.peak_nm,
        "population_fraction": cone.population_fraction,
    })
    return 0


def _cmd_physics_flux(args) -> int:
    _emit({"photons_per_m2_s": photon_flux(args.photons, args.area, args.seconds)})
    return 0


def _cmd_physics_efficiency(args) -> int:
    _emit({"nm": args.nm, "efficiency": luminous_efficiency(args.nm, _vlambda_table())})
    return 0


def _cmd_physics_intensity(args) -> int:
    _emit({"candela": luminous_intensity(args.nm, args.watts_per_sr, _vlambda_table())})
    return 0


def _cmd_physics_luminous_flux(args) -> int:
    spd = read_spectral_csv(Path(args.spd).read_bytes(), TableKind.SPECTRAL_FLUX)
    _emit({"lumens": luminous_flux(spd, _vlambda_table())})
    return 0


def _cmd_physics_illuminance(args) -> int:
    _emit({"lux": illuminance(args.lumens, args.metres)})
    return 0


def _cmd_color_convert(args) -> int:
    img = read_ppm(Path(args.infile).read_bytes())
    if args.depth is not None:
        img = rescale_depth(img, args.depth)
    Path(args.outfile).write_bytes(write_ycf(convert_image(img)))
    return 0


def _cmd_color_reconstruct(args) -> int:
    img = read_ycf(Path(args.infile).read_bytes())
    rgb = reconstruct_image(img)
    if rgb.depth not in (8, 16):
        # Pixmaps only carry 8- or 16-bit samples; widen rather than lose codes.
        rgb = rescale_depth(rgb, 16)
    Path(args.outfile).write_bytes(write_ppm(rgb))
    return 0


def _round_plane(values, dtype) -> np.ndarray:
    return round_half_away(values).astype(dtype)


def _cmd_plane_subsample(args) -> int:
    img = read_ycf(Path(args.infile).read_bytes())
    out = downsample_chroma(img, Subsampling(args.mode))
    Path(args.outfile).write_bytes(write_ycf(out))
    return 0


def _cmd_plane_blur(args) -> int:
    img = read_ycf(Path(args.infile).read_bytes())
    spec = GaussianSpec(args.sigma)
    blurred = gaussian_blur(getattr(img, args.plane), spec)
    replaced = {args.plane: _round_plane(blurred, img.y.dtype)}
    Path(args.outfile).write_bytes(write_ycf(dataclasses.replace(img, **replaced)))
    return 0


def _cmd_plane_hf(args) -> int:
    img = read_ycf(Path(args.infile).read_bytes())
    spec = GaussianSpec(args.sigma)
    _emit({
        "sigma": args.sigma,
        "y_hf": high_freq_energy(img.y, spec, img.depth),
        "cb_hf": high_freq_energy(img.cb, spec, img.depth),
        "cr_hf": high_freq_energy(img.cr, spec, img.depth),
    })
    return 0


def _cmd_quant_step(args) -> int:
    _emit({"qp": args.qp, "depth": args.depth, "step": qp_to_step(args.qp, args.depth)})
    return 0


def _cmd_quant_run(args) -> int:
    img = read_ycf(Path(args.infile).read_bytes())
    spec = QuantSpec(args.luma_qp, args.chroma_offset)
    chroma_qp = effective_chroma_qp(spec, img.subsampling)
    dtype = img.y.dtype
    out = dataclasses.replace(
        img,
        y=_round_plane(quantize_plane(img.y, spec.luma_qp, img.depth), dtype),
        cb=_round_plane(quantize_plane(img.cb, chroma_qp, img.depth), dtype),
        cr=_round_plane(quantize_plane(img.cr, chroma_qp, img.depth), dtype),
    )
    Path(args.outfile).write_bytes(write_ycf(out))
    print(f"luma qp {spec.luma_qp}, chroma qp {chroma_qp}", file=sys.stderr)
    return 0


def _cmd_metrics_psnr(args) -> int:
    a = read_ycf(Path(args.a).read_bytes())
    b = read_ycf(Path(args.b).read_bytes())
    if a.depth != b.depth:
        raise VlhvsError(f"bit depths differ: {a.depth} vs {b.depth}")
    if a.subsampling is not b.subsampling:
        raise VlhvsError(
            f"subsampling modes differ: {a.subsampling.value} vs {b.subsampling.value}"
        )
    payload = {}
    for name in ("y", "cb", "cr"):
        err = mse(getattr(a, name), getattr(b, name))
        payload[f"{name}_mse"] = err
        payload[f"{name}_psnr"] = psnr_from_mse(err, a.depth)
    _emit(payload)
    return 0


def _cmd_experiment_sensitivity(args) -> int:
    img = read_ppm(Path(args.infile).read_bytes())
    planar = convert_image(img)
    mode = Subsampling(args.mode)
    if mode is not Subsampling.S444:
        planar = downsample_chroma(planar, mode)
    sweep = [QuantSpec(qp, args.chroma_offset) for qp in args.qps]
    reports = sensitivity_experiment(planar, sweep, args.sigma)
    Path(args.report).write_text(reports_to_csv(reports), encoding="ascii", newline="")
    first = reports[0]
    print(
        f"wrote {len(reports)} rows to {args.report}; blur-luma rgb psnr "
        f"{first.blur_luma_rgb_psnr:.2f} dB, blur-chroma rgb psnr "
        f"{first.blur_chroma_rgb_psnr:.2f} dB",
        file=sys.stderr,
    )
    return 0


def _qp_list(text: str) -> list[int]:
    try:
        qps = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid QP list {text!r}") from None
    if not qps:
        raise argparse.ArgumentTypeError("QP list is empty")
    return qps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vlhvs",
        description="Visible-light physics and luma/chroma imaging toolbox.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    physics = sub.add_parser("physics", help="photon and photometry queries")
    physics_sub = physics.add_subparsers(dest="subcommand", required=True)

    p = physics_sub.add_parser("energy", help="photon energy, frequency and band at a wavelength")
    p.add_argument("--nm", type=float, required=True, help="wavelength in nanometres")
    p.set_defaults(handler=_cmd_physics_energy)

    p = physics_sub.add_parser("cone", help="dominant cone class at a wavelength")
    p.add_argument("--nm", type=float, required=True, help="wavelength in nanometres")
    p.set_defaults(handler=_cmd_physics_cone)

    p = physics_sub.add_parser("flux", help="photon flux: photons per area per time")
    p.add_argument("--photons", type=float, required=True, help="photon count")
    p.add_argument("--area", type=float, required=True, help="area in square metres")
    p.add_argument("--seconds", type=float, default=1.0, help="duration in seconds (default 1)")
    p.set_defaults(handler=_cmd_physics_flux)

    p = physics_sub.add_parser("efficiency", help="photopic efficiency at a wavelength")
    p.add_argument("--nm", type=float, required=True, help="wavelength in nanometres")
    p.set_defaults(handler=_cmd_physics_efficiency)

    p = physics_sub.add_parser("intensity", help="luminous intensity of a monochromatic source")
    p.add_argument("--nm", type=float, required=True, help="wavelength in nanometres")
    p.add_argument("--watts-per-sr", type=float, required=True, help="radiant intensity in W/sr")
    p.set_defaults(handler=_cmd_physics_intensity)

    p = physics_sub.add_parser("luminous-flux", help="luminous flux of a sampled spectrum")
    p.add_argument("--spd", required=True, help="CSV of spectral radiant flux samples")
    p.set_defaults(handler=_cmd_physics_luminous_flux)

    p = physics_sub.add_parser("illuminance", help="lux at a distance from a point source")
    p.add_argument("--lumens", type=float, required=True, help="source luminous flux in lumens")
    p.add_argument("--metres", type=float, required=True, help="distance in metres")
    p.set_defaults(handler=_cmd_physics_illuminance)

    color = sub.add_parser("color", help="RGB/planar conversions")
    color_sub = color.add_subparsers(dest="subcommand", required=True)

    p = color_sub.add_parser("convert", help="PPM to 4:4:4 planar container")
    p.add_argument("--in", dest="infile", required=True, help="input PPM")
    p.add_argument("--out", dest="outfile", required=True, help="output planar container")
    p.add_argument("--depth", type=int, default=None,
                   help="re-encode at this bit depth first (8..16)")
    p.set_defaults(handler=_cmd_color_convert)

    p = color_sub.add_parser("reconstruct", help="planar container back to PPM")
    p.add_argument("--in", dest="infile", required=True, help="input planar container")
    p.add_argument("--out", dest="outfile", required=True, help="output PPM")
    p.set_defaults(handler=_cmd_color_reconstruct)

    plane = sub.add_parser("plane", help="plane-level operations")
    plane_sub = plane.add_subparsers(dest="subcommand", required=True)

    p = plane_sub.add_parser("subsample", help="downsample chroma of a 4:4:4 container")
    p.add_argument("--in", dest="infile", required=True, help="input planar container")
    p.add_argument("--mode", choices=["422", "420"], required=True, help="target chroma mode")
    p.add_argument("--out", dest="outfile", required=True, help="output planar container")
    p.set_defaults(handler=_cmd_plane_subsample)

    p = plane_sub.add_parser("blur", help="Gaussian-blur one plane")
    p.add_argument("--in", dest="infile", required=True, help="input planar container")
    p.add_argument("--plane", choices=["y", "cb", "cr"], required=True,
                   help="which plane to filter")
    p.add_argument("--sigma", type=float, required=True, help="Gaussian standard deviation")
    p.add_argument("--out", dest="outfile", required=True, help="output planar container")
    p.set_defaults(handler=_cmd_plane_blur)

    p = plane_sub.add_parser("hf", help="high-frequency energy of each plane")
    p.add_argument("--in", dest="infile", required=True, help="input planar container")
    p.add_argument("--sigma", type=float, required=True, help="Gaussian standard deviation")
    p.set_defaults(handler=_cmd_plane_hf)

    quant = sub.add_parser("quant", help="quantisation")
    quant_sub = quant.add_subparsers(dest="subcommand", required=True)

    p = quant_sub.add_parser("step", help="step size for a QP at a depth")
    p.add_argument("--qp", type=int, required=True, help="quantisation parameter")
    p.add_argument("--depth", type=int, default=8, help="bit depth (default 8)")
    p.set_defaults(handler=_cmd_quant_step)

    p = quant_sub.add_parser("run", help="quantise the planes of a container")
    p.add_argument("--in", dest="infile", required=True, help="input planar container")
    p.add_argument("--luma-qp", type=int, required=True, help="luma QP (0..51)")
    p.add_argument("--chroma-offset", type=int, default=0,
                   help="additive chroma QP offset (default 0)")
    p.add_argument("--out", dest="outfile", required=True, help="output planar container")
    p.set_defaults(handler=_cmd_quant_run)

    metrics = sub.add_parser("metrics", help="distortion metrics")
    metrics_sub = metrics.add_subparsers(dest="subcommand", required=True)

    p = metrics_sub.add_parser("psnr", help="per-plane MSE and PSNR of two containers")
    p.add_argument("--a", required=True, help="reference planar container")
    p.add_argument("--b", required=True, help="test planar container")
    p.set_defaults(handler=_cmd_metrics_psnr)

    experiment = sub.add_parser("experiment", help="sensitivity experiments")
    experiment_sub = experiment.add_subparsers(dest="subcommand", required=True)

    p = experiment_sub.add_parser("sensitivity", help="luma-versus-chroma QP sweep")
    p.add_argument("--in", dest="infile", required=True, help="input PPM")
    p.add_argument("--qps", type=_qp_list, required=True,
                   help="comma-separated luma QP sweep, e.g. 10,22,34,46,51")
    p.add_argument("--chroma-offset", type=int, default=0,
                   help="additive chroma QP offset (default 0)")
    p.add_argument("--sigma", type=float, default=1.0,
                   help="Gaussian sigma for blur contrast and detail metrics (default 1.0)")
    p.add_argument("--mode", choices=["444", "422", "420"], default="420",
                   help="chroma mode for the pipeline (default 420)")
    p.add_argument("--report", required=True, help="output CSV path")
    p.set_defaults(handler=_cmd_experiment_sensitivity)

    return parser


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse already printed its message; fold --help into success.
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args) or 0
    except VlhvsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

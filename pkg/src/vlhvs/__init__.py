"""Visible-light physics and luma/chroma digital-imaging toolbox.

The package pairs a photometric calculator (photon energetics, photopic
weighting, illuminance, band and cone classification) with a small imaging
pipeline (BT.2020 luma/chroma conversion at parametric bit depth, chroma
subsampling, Gaussian filtering, HEVC-style quantisation) and an experiment
runner that measures how unevenly luma and chroma tolerate both.
"""

from .color import (
    BT2020,
    Bt2020Weights,
    RgbTriplet,
    YCbCrTriplet,
    convert_image,
    decode_plane,
    decode_value,
    encode_plane,
    encode_value,
    reconstruct_image,
    rescale_depth,
    rgb_to_ycbcr,
    ycbcr_to_rgb,
)
from .corpus import corpus_names, load_corpus_image
from .errors import (
    ConfigurationError,
    DomainError,
    ParseError,
    StructuralError,
    VlhvsError,
)
from .formats import (
    read_ppm,
    read_spectral_csv,
    read_ycf,
    write_ppm,
    write_spectral_csv,
    write_ycf,
)
from .planes import (
    GaussianSpec,
    PlanarImage,
    RgbImage,
    Subsampling,
    downsample_chroma,
    gaussian_blur,
    high_freq_energy,
    upsample_chroma,
)
from .quant import (
    CHROMA_QP_CAP,
    LUMA_QP_CAP,
    MetricsReport,
    QuantSpec,
    effective_chroma_qp,
    mse,
    psnr,
    psnr_from_mse,
    qp_to_step,
    quantize_plane,
    reports_to_csv,
    sensitivity_experiment,
)
from .spectral import (
    CONE_COUNT,
    LUMINOUS_EFFICACY,
    ROD_COUNT,
    ConeClass,
    PhotonEnergy,
    PhysicalConstants,
    SpectralBand,
    SpectralTable,
    TableKind,
    classify_band,
    dominant_cone,
    frequency_thz,
    illuminance,
    luminance_of_ray,
    luminous_efficiency,
    luminous_flux,
    luminous_intensity,
    photon_emission_rate,
    photon_energy,
    photon_flux,
    standard_photopic_table,
)

__version__ = "0.1.0"

__all__ = [
    "BT2020",
    "Bt2020Weights",
    "CHROMA_QP_CAP",
    "CONE_COUNT",
    "ConeClass",
    "ConfigurationError",
    "DomainError",
    "GaussianSpec",
    "LUMA_QP_CAP",
    "LUMINOUS_EFFICACY",
    "MetricsReport",
    "ParseError",
    "PhotonEnergy",
    "PhysicalConstants",
    "PlanarImage",
    "QuantSpec",
    "RgbImage",
    "RgbTriplet",
    "ROD_COUNT",
    "SpectralBand",
    "SpectralTable",
    "StructuralError",
    "Subsampling",
    "TableKind",
    "VlhvsError",
    "YCbCrTriplet",
    "classify_band",
    "convert_image",
    "corpus_names",
    "decode_plane",
    "decode_value",
    "dominant_cone",
    "downsample_chroma",
    "effective_chroma_qp",
    "encode_plane",
    "encode_value",
    "frequency_thz",
    "gaussian_blur",
    "high_freq_energy",
    "illuminance",
    "load_corpus_image",
    "luminance_of_ray",
    "luminous_efficiency",
    "luminous_flux",
    "luminous_intensity",
    "mse",
    "photon_emission_rate",
    "photon_energy",
    "photon_flux",
    "psnr",
    "psnr_from_mse",
    "qp_to_step",
    "quantize_plane",
    "read_ppm",
    "read_spectral_csv",
    "read_ycf",
    "reconstruct_image",
    "reports_to_csv",
    "rescale_depth",
    "rgb_to_ycbcr",
    "sensitivity_experiment",
    "standard_photopic_table",
    "upsample_chroma",
    "write_ppm",
    "write_spectral_csv",
    "write_ycf",
    "ycbcr_to_rgb",
]

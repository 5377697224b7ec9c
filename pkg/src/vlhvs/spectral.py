"""Visible-light physics: photon energetics, photometric quantities, and
perceptual classification of wavelengths.

Wavelengths are accepted in nanometres and converted to metres internally
where SI formulas need them. Photometric weighting uses the embedded
photopic efficiency table unless a caller supplies its own.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError
from .photopic import PHOTOPIC_SAMPLES

PLANCK_H = 6.62607015e-34      # J s, defined value
SPEED_OF_LIGHT = 2.99792458e8  # m/s, defined value
LUMINOUS_EFFICACY = 683.0      # lm/W at the photopic peak
EV_PER_JOULE = 6.242e18        # fixed conversion, 1 J = 6.242e18 eV

_NM_TO_M = 1e-9

# Retinal photoreceptor population counts for one human eye.
ROD_COUNT = 120_000_000
CONE_COUNT = 6_400_000

VISIBLE_MIN_NM = 380.0
VISIBLE_MAX_NM = 750.0


@dataclass(frozen=True)
class PhysicalConstants:
    """The constant bundle the photometric formulas depend on."""

    planck_h: float = PLANCK_H
    speed_of_light: float = SPEED_OF_LIGHT
    luminous_efficacy: float = LUMINOUS_EFFICACY
    ev_per_joule: float = EV_PER_JOULE

    def __post_init__(self):
        for name in ("planck_h", "speed_of_light", "luminous_efficacy", "ev_per_joule"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise DomainError(f"{name} must be positive and finite, got {value!r}")


def _check_wavelength(nm: float) -> float:
    nm = float(nm)
    if not math.isfinite(nm) or nm <= 0.0:
        raise DomainError(f"wavelength must be positive and finite nanometres, got {nm!r}")
    return nm


@dataclass(frozen=True)
class PhotonEnergy:
    """Energy carried by a single photon, stored in joules."""

    joules: float

    def __post_init__(self):
        if not math.isfinite(self.joules) or self.joules <= 0.0:
            raise DomainError(f"photon energy must be positive and finite, got {self.joules!r}")

    @property
    def electron_volts(self) -> float:
        return self.joules * EV_PER_JOULE

    @classmethod
    def from_electron_volts(cls, ev: float) -> "PhotonEnergy":
        if not math.isfinite(ev) or ev <= 0.0:
            raise DomainError(f"photon energy must be positive and finite, got {ev!r}")
        return cls(ev / EV_PER_JOULE)


def photon_energy(nm: float) -> PhotonEnergy:
    """Energy of one photon at the given wavelength: h*c over the wavelength in metres."""
    nm = _check_wavelength(nm)
    return PhotonEnergy(PLANCK_H * SPEED_OF_LIGHT / (nm * _NM_TO_M))


def frequency_thz(nm: float) -> float:
    """Frequency c/lambda of light at the given wavelength, in terahertz."""
    nm = _check_wavelength(nm)
    return SPEED_OF_LIGHT / (nm * _NM_TO_M) / 1e12


class SpectralBand(enum.Enum):
    """Named visible-spectrum bands plus a catch-all for invisible wavelengths."""

    VIOLET = "Violet"
    BLUE = "Blue"
    GREEN = "Green"
    YELLOW = "Yellow"
    ORANGE = "Orange"
    RED = "Red"
    OUTSIDE_VISIBLE = "OutsideVisible"


# Half-open [low, high) wavelength intervals; Red additionally owns its
# 750 nm upper edge so the visible range is closed at the long end.
BAND_EDGES_NM: tuple[tuple[float, float, SpectralBand], ...] = (
    (380.0, 450.0, SpectralBand.VIOLET),
    (450.0, 495.0, SpectralBand.BLUE),
    (495.0, 570.0, SpectralBand.GREEN),
    (570.0, 590.0, SpectralBand.YELLOW),
    (590.0, 620.0, SpectralBand.ORANGE),
    (620.0, 750.0, SpectralBand.RED),
)


def classify_band(nm: float) -> SpectralBand:
    """Assign a wavelength to its visible band, or OUTSIDE_VISIBLE."""
    nm = _check_wavelength(nm)
    if nm == VISIBLE_MAX_NM:
        return SpectralBand.RED
    for low, high, band in BAND_EDGES_NM:
        if low <= nm < high:
            return band
    return SpectralBand.OUTSIDE_VISIBLE


def photon_emission_rate(radiant_power_w: float, energy: "PhotonEnergy | float") -> float:
    """Photons emitted per second by a source of the given radiant power.

    ``energy`` may be a PhotonEnergy or a plain value in joules.
    """
    joules = energy.joules if isinstance(energy, PhotonEnergy) else float(energy)
    if not math.isfinite(joules) or joules <= 0.0:
        raise DomainError(f"photon energy must be positive and finite, got {joules!r}")
    if not math.isfinite(radiant_power_w) or radiant_power_w < 0.0:
        raise DomainError(f"radiant power must be nonnegative and finite, got {radiant_power_w!r}")
    return radiant_power_w / joules


def photon_flux(photons: float, area_m2: float, seconds: float = 1.0) -> float:
    """Photon flux: photons per square metre per second."""
    if not math.isfinite(photons) or photons < 0.0:
        raise DomainError(f"photon count must be nonnegative and finite, got {photons!r}")
    if not math.isfinite(area_m2) or area_m2 <= 0.0:
        raise DomainError(f"area must be positive and finite, got {area_m2!r}")
    if not math.isfinite(seconds) or seconds <= 0.0:
        raise DomainError(f"duration must be positive and finite, got {seconds!r}")
    return photons / (area_m2 * seconds)


class TableKind(enum.Enum):
    """What a spectral table's values mean."""

    LUMINOSITY = "luminosity"        # dimensionless efficiency in [0, 1]
    SPECTRAL_FLUX = "spectral_flux"  # spectral radiant flux in W/nm


@dataclass(frozen=True, eq=False)
class SpectralTable:
    """A sampled function of wavelength on a strictly increasing grid."""

    wavelengths_nm: np.ndarray
    values: np.ndarray
    kind: TableKind

    def __post_init__(self):
        w = np.asarray(self.wavelengths_nm, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "wavelengths_nm", w)
        object.__setattr__(self, "values", v)
        if w.ndim != 1 or v.ndim != 1 or w.shape != v.shape:
            raise ConfigurationError("spectral table needs matching 1-D wavelength and value arrays")
        if w.size == 0:
            raise ConfigurationError("spectral table is empty")
        if not (np.all(np.isfinite(w)) and np.all(np.isfinite(v))):
            raise ConfigurationError("spectral table contains non-finite entries")
        if np.any(w <= 0.0):
            raise ConfigurationError("spectral table wavelengths must be positive")
        if w.size > 1 and not np.all(np.diff(w) > 0.0):
            raise ConfigurationError("spectral table wavelengths must be strictly increasing")
        if np.any(v < 0.0):
            raise ConfigurationError("spectral table values must be nonnegative")
        if self.kind is TableKind.LUMINOSITY and np.any(v > 1.0):
            raise ConfigurationError("luminous efficiency values cannot exceed 1")

    def __len__(self) -> int:
        return int(self.wavelengths_nm.size)

    @classmethod
    def from_pairs(cls, pairs, kind: TableKind) -> "SpectralTable":
        pairs = tuple(pairs)
        if not pairs:
            raise ConfigurationError("spectral table is empty")
        w, v = zip(*pairs)
        return cls(np.asarray(w, dtype=np.float64), np.asarray(v, dtype=np.float64), kind)

    def value_at(self, nm: float) -> float:
        """Linear interpolation between bracketing samples; zero outside the grid."""
        nm = _check_wavelength(nm)
        return float(np.interp(nm, self.wavelengths_nm, self.values, left=0.0, right=0.0))


@functools.lru_cache(maxsize=1)
def standard_photopic_table() -> SpectralTable:
    """The embedded photopic efficiency table (380 to 780 nm, 5 nm steps)."""
    return SpectralTable.from_pairs(PHOTOPIC_SAMPLES, TableKind.LUMINOSITY)


def luminous_efficiency(nm: float, table: SpectralTable | None = None) -> float:
    """Photopic efficiency at a wavelength, interpolated from the table."""
    table = standard_photopic_table() if table is None else table
    if table.kind is not TableKind.LUMINOSITY:
        raise DomainError("luminous efficiency needs a luminosity table")
    return table.value_at(nm)


def luminous_intensity(nm: float, radiant_intensity_w_sr: float,
                       table: SpectralTable | None = None) -> float:
    """Luminous intensity in candela of a monochromatic radiant intensity."""
    if not math.isfinite(radiant_intensity_w_sr) or radiant_intensity_w_sr < 0.0:
        raise DomainError(
            f"radiant intensity must be nonnegative and finite, got {radiant_intensity_w_sr!r}"
        )
    return LUMINOUS_EFFICACY * luminous_efficiency(nm, table) * radiant_intensity_w_sr


def luminous_flux(spd: SpectralTable, table: SpectralTable | None = None) -> float:
    """Lumens carried by a spectral radiant flux distribution.

    The efficiency-weighted spectrum is integrated with the trapezoid rule
    over the distribution's own wavelength grid. A single-sample distribution
    is treated as a monochromatic line: efficacy * efficiency * power, with
    no integration step.
    """
    if spd.kind is not TableKind.SPECTRAL_FLUX:
        raise DomainError("luminous flux needs a spectral flux distribution")
    table = standard_photopic_table() if table is None else table
    if table.kind is not TableKind.LUMINOSITY:
        raise DomainError("luminous flux needs a luminosity weighting table")
    weights = np.interp(spd.wavelengths_nm, table.wavelengths_nm, table.values,
                        left=0.0, right=0.0)
    integrand = weights * spd.values
    if len(spd) == 1:
        return LUMINOUS_EFFICACY * float(integrand[0])
    dx = np.diff(spd.wavelengths_nm)
    integral = float(np.sum(0.5 * (integrand[1:] + integrand[:-1]) * dx))
    return LUMINOUS_EFFICACY * integral


def luminance_of_ray(refractive_index: float, luminous_flux_lm: float,
                     etendue_m2_sr: float) -> float:
    """Luminance of a narrow beam: n^2 * flux / etendue, in cd/m^2."""
    if not math.isfinite(refractive_index) or refractive_index < 1.0:
        raise DomainError(f"refractive index must be >= 1, got {refractive_index!r}")
    if not math.isfinite(luminous_flux_lm) or luminous_flux_lm < 0.0:
        raise DomainError(f"luminous flux must be nonnegative and finite, got {luminous_flux_lm!r}")
    if not math.isfinite(etendue_m2_sr) or etendue_m2_sr <= 0.0:
        raise DomainError(f"etendue must be positive and finite, got {etendue_m2_sr!r}")
    return refractive_index * refractive_index * luminous_flux_lm / etendue_m2_sr


def illuminance(lumens: float, metres: float) -> float:
    """Illuminance in lux at a distance from an isotropic point source.

    The source strength spreads over the full 4*pi*r^2 sphere, so doubling
    the distance quarters the result.
    """
    if not math.isfinite(lumens) or lumens < 0.0:
        raise DomainError(f"luminous flux must be nonnegative and finite, got {lumens!r}")
    if not math.isfinite(metres) or metres <= 0.0:
        raise DomainError(f"distance must be positive and finite, got {metres!r}")
    return lumens / (4.0 * math.pi * metres * metres)


class ConeClass(enum.Enum):
    """Retinal cone populations named by the band of their peak response."""

    L = "L"
    M = "M"
    S = "S"

    @property
    def peak_nm(self) -> float:
        return _CONE_PEAK_NM[self]

    @property
    def population_fraction(self) -> float:
        return _CONE_POPULATION[self]


_CONE_PEAK_NM = {ConeClass.L: 650.0, ConeClass.M: 510.0, ConeClass.S: 475.0}
_CONE_POPULATION = {ConeClass.L: 0.64, ConeClass.M: 0.32, ConeClass.S: 0.04}


def dominant_cone(nm: float) -> ConeClass:
    """Cone class whose peak lies nearest the wavelength.

    Only defined inside the visible range. Midpoint ties go to the
    longer-wavelength peak.
    """
    nm = _check_wavelength(nm)
    if classify_band(nm) is SpectralBand.OUTSIDE_VISIBLE:
        raise DomainError(f"{nm} nm is outside the visible range")
    return min(ConeClass, key=lambda cone: (abs(nm - cone.peak_nm), -cone.peak_nm))

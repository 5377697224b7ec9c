"""Physics layer: photon energetics, photometry, and classification."""

import math

import numpy as np
import pytest

from vlhvs.errors import ConfigurationError, DomainError
from vlhvs.spectral import (
    CONE_COUNT,
    EV_PER_JOULE,
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

# Frozen oracle values: h*c/lambda evaluated once by hand with the
# full-precision constants, then fixed as literals so the tests cannot
# drift together with the implementation.
ENERGY_700_J = 2.8377797959270407e-19
ENERGY_700_EV = 1.7713421486176588
ENERGY_555_J = 3.579181724592664e-19
ENERGY_555_EV = 2.2341252324907406
ENERGY_380_EV = 3.262998694822003
RATE_1W_700 = 3.5238815972798966e18
THZ_380 = 788.9275210526315
THZ_750 = 399.72327733333333


def test_photon_energy_frozen_values():
    e700 = photon_energy(700.0)
    assert e700.joules == pytest.approx(ENERGY_700_J, rel=1e-12)
    assert e700.electron_volts == pytest.approx(ENERGY_700_EV, rel=1e-12)
    e555 = photon_energy(555.0)
    assert e555.joules == pytest.approx(ENERGY_555_J, rel=1e-12)
    assert e555.electron_volts == pytest.approx(ENERGY_555_EV, rel=1e-12)
    assert photon_energy(380.0).electron_volts == pytest.approx(ENERGY_380_EV, rel=1e-12)


def test_joules_ev_round_trip():
    for nm in (380.0, 495.5, 555.0, 700.0, 750.0):
        e = photon_energy(nm)
        back = PhotonEnergy.from_electron_volts(e.electron_volts)
        assert back.joules == pytest.approx(e.joules, rel=1e-12)
        assert e.electron_volts == pytest.approx(e.joules * EV_PER_JOULE, rel=1e-12)


def test_photon_energy_strictly_decreasing(rng):
    nms = np.sort(rng.uniform(100.0, 1200.0, size=200))
    joules = [photon_energy(float(nm)).joules for nm in nms]
    assert all(a > b for a, b in zip(joules, joules[1:]))


@pytest.mark.parametrize("bad", [0.0, -5.0, math.inf, math.nan])
def test_photon_energy_domain(bad):
    with pytest.raises(DomainError):
        photon_energy(bad)


def test_photon_energy_type_validation():
    with pytest.raises(DomainError):
        PhotonEnergy(0.0)
    with pytest.raises(DomainError):
        PhotonEnergy(-1e-19)
    with pytest.raises(DomainError):
        PhotonEnergy.from_electron_volts(-1.0)


def test_frequency():
    assert frequency_thz(299792.458) == pytest.approx(1.0, rel=1e-12)
    assert frequency_thz(380.0) == pytest.approx(THZ_380, rel=1e-12)
    assert frequency_thz(750.0) == pytest.approx(THZ_750, rel=1e-12)
    with pytest.raises(DomainError):
        frequency_thz(-1.0)


@pytest.mark.parametrize("nm,band", [
    (379.999, SpectralBand.OUTSIDE_VISIBLE),
    (380.0, SpectralBand.VIOLET),
    (449.999, SpectralBand.VIOLET),
    (450.0, SpectralBand.BLUE),
    (494.999, SpectralBand.BLUE),
    (495.0, SpectralBand.GREEN),
    (510.0, SpectralBand.GREEN),
    (569.999, SpectralBand.GREEN),
    (570.0, SpectralBand.YELLOW),
    (589.999, SpectralBand.YELLOW),
    (590.0, SpectralBand.ORANGE),
    (619.999, SpectralBand.ORANGE),
    (620.0, SpectralBand.RED),
    (749.999, SpectralBand.RED),
    (750.0, SpectralBand.RED),       # the long edge is closed
    (750.001, SpectralBand.OUTSIDE_VISIBLE),
    (200.0, SpectralBand.OUTSIDE_VISIBLE),
    (900.0, SpectralBand.OUTSIDE_VISIBLE),
])
def test_classify_band_edges(nm, band):
    assert classify_band(nm) is band


def test_classify_band_total(rng):
    for nm in rng.uniform(0.1, 2000.0, size=500):
        assert classify_band(float(nm)) in SpectralBand


def test_photon_emission_rate():
    e = photon_energy(700.0)
    assert photon_emission_rate(e.joules, e) == pytest.approx(1.0, rel=1e-12)
    assert photon_emission_rate(0.0, e) == 0.0
    assert photon_emission_rate(1.0, e) == pytest.approx(RATE_1W_700, rel=1e-12)
    with pytest.raises(DomainError):
        photon_emission_rate(1.0, 0.0)
    with pytest.raises(DomainError):
        photon_emission_rate(-1.0, e)


def test_photon_flux():
    assert photon_flux(1e18, 2.0, 1.0) == pytest.approx(5e17, rel=1e-12)
    assert photon_flux(0.0, 1.0, 1.0) == 0.0
    # chains with the emission-rate example
    assert photon_flux(RATE_1W_700, 1.0, 1.0) == pytest.approx(RATE_1W_700, rel=1e-12)
    for args in ((1.0, 0.0, 1.0), (1.0, -2.0, 1.0), (1.0, 1.0, 0.0), (-1.0, 1.0, 1.0)):
        with pytest.raises(DomainError):
            photon_flux(*args)


def test_standard_table_lookup():
    assert luminous_efficiency(555.0) == 1.0
    assert luminous_efficiency(200.0) == 0.0
    assert luminous_efficiency(800.0) == 0.0
    # 507 nm interpolates the published 505/510 rows: frozen expected value
    assert luminous_efficiency(507.0) == pytest.approx(0.44558, abs=1e-12)
    assert luminous_efficiency(552.5) == pytest.approx(0.997475, abs=1e-12)
    table = standard_photopic_table()
    assert len(table) == 81
    assert float(table.wavelengths_nm[0]) == 380.0
    assert float(table.wavelengths_nm[-1]) == 780.0


def test_lookup_stays_in_unit_interval(rng):
    for nm in rng.uniform(100.0, 1000.0, size=300):
        v = luminous_efficiency(float(nm))
        assert 0.0 <= v <= 1.0


def test_custom_table_interpolation():
    table = SpectralTable.from_pairs([(500.0, 0.2), (510.0, 0.4)], TableKind.LUMINOSITY)
    assert table.value_at(505.0) == pytest.approx(0.3, rel=1e-12)
    assert table.value_at(499.0) == 0.0
    assert table.value_at(511.0) == 0.0
    assert luminous_efficiency(505.0, table) == pytest.approx(0.3, rel=1e-12)


def test_spectral_table_validation():
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([]), np.array([]), TableKind.LUMINOSITY)
    with pytest.raises(ConfigurationError):
        SpectralTable.from_pairs([], TableKind.LUMINOSITY)
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([500.0, 490.0]), np.array([0.1, 0.2]), TableKind.LUMINOSITY)
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([500.0, 510.0]), np.array([0.1, -0.2]), TableKind.SPECTRAL_FLUX)
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([500.0, 510.0]), np.array([0.5, 1.2]), TableKind.LUMINOSITY)
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([500.0, 510.0]), np.array([0.5]), TableKind.LUMINOSITY)
    with pytest.raises(ConfigurationError):
        SpectralTable(np.array([500.0, np.nan]), np.array([0.1, 0.2]), TableKind.LUMINOSITY)
    # flux tables may exceed 1, only luminosity is capped
    SpectralTable(np.array([500.0, 510.0]), np.array([0.5, 1.2]), TableKind.SPECTRAL_FLUX)


def test_luminous_intensity():
    assert luminous_intensity(555.0, 1.0) == 683.0
    assert luminous_intensity(555.0, 0.5) == pytest.approx(341.5, rel=1e-12)
    assert luminous_intensity(900.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        luminous_intensity(555.0, -1.0)


def test_luminous_intensity_linear(rng):
    for _ in range(50):
        nm = float(rng.uniform(380.0, 780.0))
        ie = float(rng.uniform(0.0, 10.0))
        doubled = luminous_intensity(nm, 2.0 * ie)
        single = luminous_intensity(nm, ie)
        if single > 0:
            assert doubled == pytest.approx(2.0 * single, rel=1e-12)


def test_luminous_flux_monochromatic():
    spd = SpectralTable.from_pairs([(555.0, 1.0)], TableKind.SPECTRAL_FLUX)
    assert luminous_flux(spd) == 683.0
    spd2 = SpectralTable.from_pairs([(700.0, 2.0)], TableKind.SPECTRAL_FLUX)
    expected = LUMINOUS_EFFICACY * luminous_efficiency(700.0) * 2.0
    assert luminous_flux(spd2) == pytest.approx(expected, rel=1e-12)


def test_luminous_flux_two_sample_hand_value():
    # flat 0.1 W/nm over the 550..560 nm span; trapezoid worked out by hand
    # from the published table rows V(550)=0.99495, V(560)=0.995
    spd = SpectralTable.from_pairs([(550.0, 0.1), (560.0, 0.1)], TableKind.SPECTRAL_FLUX)
    assert luminous_flux(spd) == pytest.approx(679.567925, rel=1e-12)


def test_luminous_flux_zero_and_linearity(rng):
    wl = np.arange(400.0, 701.0, 10.0)
    zero = SpectralTable(wl, np.zeros_like(wl), TableKind.SPECTRAL_FLUX)
    assert luminous_flux(zero) == 0.0
    vals = rng.uniform(0.0, 2.0, size=wl.size)
    one = SpectralTable(wl, vals, TableKind.SPECTRAL_FLUX)
    two = SpectralTable(wl, 2.0 * vals, TableKind.SPECTRAL_FLUX)
    assert luminous_flux(two) == pytest.approx(2.0 * luminous_flux(one), rel=1e-12)


def test_flux_kind_checks():
    lum = standard_photopic_table()
    with pytest.raises(DomainError):
        luminous_flux(lum)  # luminosity table is not a power spectrum
    spd = SpectralTable.from_pairs([(555.0, 1.0)], TableKind.SPECTRAL_FLUX)
    with pytest.raises(DomainError):
        luminous_flux(spd, table=spd)
    with pytest.raises(DomainError):
        luminous_efficiency(555.0, spd)


def test_luminance_of_ray():
    assert luminance_of_ray(1.0, 1.0, 1.0) == 1.0
    assert luminance_of_ray(1.5, 1.0, 1.0) == pytest.approx(2.25, rel=1e-12)
    assert luminance_of_ray(1.0, 1.0, 2.0) == pytest.approx(0.5, rel=1e-12)
    with pytest.raises(DomainError):
        luminance_of_ray(1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        luminance_of_ray(0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        luminance_of_ray(1.0, -2.0, 1.0)


def test_illuminance_values():
    four_pi = 4.0 * math.pi
    assert illuminance(four_pi, 1.0) == pytest.approx(1.0, rel=1e-12)
    assert illuminance(four_pi, 2.0) == pytest.approx(0.25, rel=1e-12)
    assert illuminance(0.0, 3.0) == 0.0
    with pytest.raises(DomainError):
        illuminance(1.0, 0.0)
    with pytest.raises(DomainError):
        illuminance(-1.0, 1.0)


def test_illuminance_quarter_law(rng):
    for _ in range(200):
        s = float(rng.uniform(0.001, 1e6))
        r = float(rng.uniform(0.001, 1e3))
        assert illuminance(s, 2.0 * r) == pytest.approx(illuminance(s, r) / 4.0, rel=1e-12)


@pytest.mark.parametrize("nm,cone", [
    (650.0, ConeClass.L),
    (475.0, ConeClass.S),
    (510.0, ConeClass.M),
    (560.0, ConeClass.M),    # 50 nm from M, 90 nm from L
    (580.0, ConeClass.L),    # exact L/M midpoint resolves long
    (492.5, ConeClass.M),    # exact M/S midpoint resolves long
    (380.0, ConeClass.S),
    (749.0, ConeClass.L),
])
def test_dominant_cone(nm, cone):
    assert dominant_cone(nm) is cone


def test_dominant_cone_outside_visible():
    for nm in (100.0, 379.0, 751.0, 900.0):
        with pytest.raises(DomainError):
            dominant_cone(nm)


def test_cone_metadata():
    assert ConeClass.L.peak_nm == 650.0
    assert ConeClass.M.peak_nm == 510.0
    assert ConeClass.S.peak_nm == 475.0
    assert ConeClass.L.population_fraction == 0.64
    assert ConeClass.M.population_fraction == 0.32
    assert ConeClass.S.population_fraction == 0.04
    total = sum(c.population_fraction for c in ConeClass)
    assert total == pytest.approx(1.0, abs=1e-12)


def test_retina_counts():
    assert ROD_COUNT == 120_000_000
    assert CONE_COUNT == 6_400_000


def test_physical_constants():
    c = PhysicalConstants()
    assert c.planck_h == 6.62607015e-34
    assert c.speed_of_light == 2.99792458e8
    assert c.luminous_efficacy == 683.0
    with pytest.raises(DomainError):
        PhysicalConstants(planck_h=-1.0)
    with pytest.raises(DomainError):
        PhysicalConstants(luminous_efficacy=0.0)

"""Shared fixtures plus a per-criterion summary for the acceptance suite."""

from __future__ import annotations

import numpy as np
import pytest

from vlhvs.corpus import NATURAL_NAMES, load_corpus_image
from vlhvs.planes import RgbImage

SEED = 20260814


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def natural_images():
    return {name: load_corpus_image(name) for name in NATURAL_NAMES}


def random_rgb_image(rng, width=16, height=12, depth=8) -> RgbImage:
    mc = (1 << depth) - 1
    dtype = np.uint8 if depth == 8 else np.uint16
    r, g, b = (rng.integers(0, mc + 1, size=(height, width)).astype(dtype) for _ in range(3))
    return RgbImage(width=width, height=height, depth=depth, r=r, g=g, b=b)


CRITERIA = {
    1: "photon energy and band-edge reproduction",
    2: "inverse-square illuminance",
    3: "luminous flux normalization and integrator accuracy",
    4: "colour-cube extremes and value ranges",
    5: "round trips: float, integer, file formats",
    6: "quantiser step law and chroma QP cap",
    7: "PSNR closed form and infinity sentinel",
    8: "corpus detail dominance and blur asymmetry",
    9: "separable blur against direct oracle",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results: dict[int, str] = {}
    for outcome, flag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            tail = nodeid.split("test_criterion_", 1)[1]
            number = int(tail.split("_", 1)[0])
            if results.get(number) != "FAIL":
                results[number] = flag
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(f"criterion {number}: {results[number]} - {CRITERIA[number]}")

"""Bundled test images.

Three small natural photographs and two synthetic vector-style charts, all
stored as 8-bit binary PPM with even dimensions so every subsampling mode
applies. The synthetic pair carries the saturated flat fills and text-like
edges where chroma detail actually matters; the photographs carry ordinary
luma-dominated detail. scripts/build_corpus.py regenerates the files.
"""

from __future__ import annotations

from importlib import resources

from .formats import read_ppm
from .planes import RgbImage

NATURAL_NAMES = ("astronaut", "cat", "coffee")
SYNTHETIC_NAMES = ("blocks", "glyphs")


def corpus_names() -> tuple[str, ...]:
    """All bundled image names, natural first."""
    return NATURAL_NAMES + SYNTHETIC_NAMES


def corpus_bytes(name: str) -> bytes:
    """Raw PPM bytes of a bundled image."""
    if name not in corpus_names():
        raise KeyError(f"no corpus image named {name!r}")
    return resources.files(__package__).joinpath("corpus", f"{name}.ppm").read_bytes()


def load_corpus_image(name: str) -> RgbImage:
    """Decode a bundled image."""
    return read_ppm(corpus_bytes(name))

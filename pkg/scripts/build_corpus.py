#!/usr/bin/env python3
"""Regenerate the bundled corpus under src/vlhvs/corpus/.

Natural sources are the permissively licensed scikit-image sample
photographs (astronaut, chelsea, coffee), cropped or block-averaged down to
small even dimensions. The two synthetic charts are drawn procedurally:
flat saturated fills with hard edges, and rows of bitmap-font text in
saturated ink, the content classes where chroma detail genuinely matters.

scikit-image is a development-only dependency of this script; the package
itself never imports it.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from vlhvs.formats import write_ppm
from vlhvs.planes import RgbImage

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "vlhvs" / "corpus"


def halve(rgb: np.ndarray) -> np.ndarray:
    """2x2 block mean with round-half-up, even input dimensions required."""
    a = rgb.astype(np.uint32)
    acc = a[0::2, 0::2] + a[0::2, 1::2] + a[1::2, 0::2] + a[1::2, 1::2]
    return ((acc + 2) // 4).astype(np.uint8)


def to_image(rgb: np.ndarray) -> RgbImage:
    h, w, _ = rgb.shape
    return RgbImage(width=w, height=h, depth=8,
                    r=rgb[..., 0].copy(), g=rgb[..., 1].copy(), b=rgb[..., 2].copy())


def natural_images() -> dict[str, np.ndarray]:
    from skimage import data

    return {
        "astronaut": halve(data.astronaut()),          # 512x512 -> 256x256
        "cat": data.chelsea()[:300, :448],             # 300x451 -> 300x448
        "coffee": data.coffee()[:, 44:556],            # 400x600 -> 400x512
    }


SATURATED = [
    (230, 30, 30), (30, 200, 30), (40, 40, 230), (230, 230, 40),
    (230, 40, 230), (40, 220, 220), (240, 140, 30), (140, 40, 220),
    (30, 140, 90), (200, 60, 120), (90, 200, 50), (40, 90, 200),
]

STRIPE_PAIRS = [
    ((230, 30, 30), (40, 220, 220)),
    ((30, 200, 30), (230, 40, 230)),
    ((40, 40, 230), (230, 230, 40)),
]


def blocks_chart(size: int = 256) -> np.ndarray:
    """Flat saturated rectangles over white, plus complementary stripe runs."""
    rgb = np.full((size, size, 3), 255, dtype=np.uint8)
    gutter = 8
    rows, cols = 3, 4
    grid_h = size * 2 // 3
    cell_h = (grid_h - gutter) // rows - gutter
    cell_w = (size - gutter) // cols - gutter
    k = 0
    for i in range(rows):
        y0 = gutter + i * (cell_h + gutter)
        for j in range(cols):
            x0 = gutter + j * (cell_w + gutter)
            rgb[y0:y0 + cell_h, x0:x0 + cell_w] = SATURATED[k % len(SATURATED)]
            k += 1
    stripe_top = grid_h + gutter
    stripe_w = 4
    third = size // len(STRIPE_PAIRS)
    for t, (a, b) in enumerate(STRIPE_PAIRS):
        for x in range(t * third, min((t + 1) * third, size), stripe_w):
            color = a if (x // stripe_w) % 2 == 0 else b
            rgb[stripe_top:size - gutter, x:x + stripe_w] = color
    return rgb


# 5x7 bitmap font, enough letters for the chart strings.
FONT = {
    "A": ("01110", "10001", "10001", "11111", "10001", "10001", "10001"),
    "B": ("11110", "10001", "10001", "11110", "10001", "10001", "11110"),
    "C": ("01110", "10001", "10000", "10000", "10000", "10001", "01110"),
    "D": ("11110", "10001", "10001", "10001", "10001", "10001", "11110"),
    "E": ("11111", "10000", "10000", "11110", "10000", "10000", "11111"),
    "G": ("01110", "10001", "10000", "10111", "10001", "10001", "01110"),
    "H": ("10001", "10001", "10001", "11111", "10001", "10001", "10001"),
    "K": ("10001", "10010", "10100", "11000", "10100", "10010", "10001"),
    "L": ("10000", "10000", "10000", "10000", "10000", "10000", "11111"),
    "M": ("10001", "11011", "10101", "10101", "10001", "10001", "10001"),
    "N": ("10001", "11001", "10101", "10011", "10001", "10001", "10001"),
    "O": ("01110", "10001", "10001", "10001", "10001", "10001", "01110"),
    "R": ("11110", "10001", "10001", "11110", "10100", "10010", "10001"),
    "S": ("01111", "10000", "10000", "01110", "00001", "00001", "11110"),
    "T": ("11111", "00100", "00100", "00100", "00100", "00100", "00100"),
    "U": ("10001", "10001", "10001", "10001", "10001", "10001", "01110"),
    "V": ("10001", "10001", "10001", "10001", "10001", "01010", "00100"),
    "X": ("10001", "01010", "00100", "00100", "00100", "01010", "10001"),
    "Y": ("10001", "10001", "01010", "00100", "00100", "00100", "00100"),
    " ": ("00000", "00000", "00000", "00000", "00000", "00000", "00000"),
}

GLYPH_LINES = [
    "CHROMA VS LUMA",
    "BLOCK AND EDGE",
    "RGB TO YCBCR  ",
    "SATURATED TEXT",
    "MAGENTA CYAN  ",
    "GREEN VS RED  ",
]

INKS = [
    (200, 0, 0), (0, 0, 200), (0, 140, 0),
    (180, 0, 180), (0, 140, 140), (220, 120, 0),
]


def glyphs_chart(size: int = 256) -> np.ndarray:
    """Rows of saturated bitmap text over white and yellow backgrounds."""
    rgb = np.full((size, size, 3), 255, dtype=np.uint8)
    rgb[size // 2:] = (255, 230, 40)
    scale = 3
    cell_w, cell_h = 6 * scale, 8 * scale
    margin = 4
    row = 0
    y0 = margin
    while y0 + 7 * scale <= size - margin:
        text = GLYPH_LINES[row % len(GLYPH_LINES)]
        ink = INKS[row % len(INKS)]
        x0 = margin
        for ch in text:
            bitmap = FONT[ch]
            for gy, bits in enumerate(bitmap):
                for gx, bit in enumerate(bits):
                    if bit == "1":
                        yy = y0 + gy * scale
                        xx = x0 + gx * scale
                        rgb[yy:yy + scale, xx:xx + scale] = ink
            x0 += cell_w
            if x0 + 5 * scale > size - margin:
                break
        y0 += cell_h
        row += 1
    return rgb


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    charts = {"blocks": blocks_chart(), "glyphs": glyphs_chart()}
    for name, rgb in {**natural_images(), **charts}.items():
        path = OUT_DIR / f"{name}.ppm"
        path.write_bytes(write_ppm(to_image(np.ascontiguousarray(rgb))))
        h, w, _ = rgb.shape
        print(f"wrote {path} ({w}x{h})")


if __name__ == "__main__":
    main()

"""On-disk interchange: binary PPM pixmaps, the planar YCF container, and
spectral sample CSVs.

Readers take bytes and writers return bytes, so round trips stay byte
auditable and the I/O layer owns nothing but encoding. PPM multi-byte
samples are big-endian per the pixmap convention; YCF payloads are
little-endian by its own definition, and the asymmetry is deliberate.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .errors import DomainError, ParseError, StructuralError
from .numeric import MAX_DEPTH, MIN_DEPTH, max_code
from .planes import PlanarImage, RgbImage, Subsampling, chroma_plane_shape
from .spectral import SpectralTable, TableKind

_WHITESPACE = b" \t\n\r\x0b\x0c"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int, int]:
    """Scan the next pixmap header token; returns (token, start, end).

    Skips whitespace and # comments (comment runs to end of line).
    """
    n = len(data)
    while pos < n:
        c = data[pos:pos + 1]
        if c == b"#":
            eol = data.find(b"\n", pos)
            if eol < 0:
                raise ParseError("unterminated comment in header", pos)
            pos = eol + 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            start = pos
            while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
                pos += 1
            return data[start:pos], start, pos
    raise ParseError("unexpected end of header", n)


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, start, end = _next_token(data, pos)
    if not token.isdigit():
        raise ParseError(f"invalid {what} {token!r}", start)
    return int(token), end


def read_ppm(data: bytes) -> RgbImage:
    """Decode a binary (P6) portable pixmap.

    Header comments are accepted on input and never written back. Maxval
    must be 255 or 65535; two-byte samples are big-endian.
    """
    magic, start, pos = _next_token(data, 0)
    if magic != b"P6":
        raise ParseError(f"not a binary pixmap: magic {magic!r}", start)
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval_at = pos
    maxval, pos = _header_int(data, pos, "maxval")
    if width <= 0 or height <= 0:
        raise ParseError(f"dimensions must be positive, got {width}x{height}", start)
    if maxval not in (255, 65535):
        raise ParseError(f"unsupported maxval {maxval} (expected 255 or 65535)", maxval_at)
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
        raise ParseError("missing single whitespace byte after maxval", pos)
    payload = data[pos + 1:]
    depth = 8 if maxval == 255 else 16
    sample_bytes = 1 if depth == 8 else 2
    expected = width * height * 3 * sample_bytes
    if len(payload) != expected:
        raise ParseError(
            f"payload holds {len(payload)} bytes, expected {expected}", pos + 1
        )
    dt = np.dtype(np.uint8) if depth == 8 else np.dtype(">u2")
    pixels = np.frombuffer(payload, dtype=dt).reshape(height, width, 3)
    r, g, b = (pixels[..., i].astype(dt.newbyteorder("=")) for i in range(3))
    return RgbImage(width=width, height=height, depth=depth, r=r, g=g, b=b)


def write_ppm(img: RgbImage) -> bytes:
    """Encode as binary PPM. Only 8- and 16-bit images map onto pixmap maxvals."""
    if img.depth not in (8, 16):
        raise DomainError(f"pixmaps carry 8- or 16-bit samples only, got depth {img.depth}")
    header = f"P6\n{img.width} {img.height}\n{img.max_code}\n".encode("ascii")
    stacked = np.stack((img.r, img.g, img.b), axis=-1)
    if img.depth == 16:
        payload = stacked.astype(">u2").tobytes()
    else:
        payload = stacked.tobytes()
    return header + payload


YCF_MAGIC = "YCF1"


def read_ycf(data: bytes) -> PlanarImage:
    """Decode the planar container: one ASCII header line, then the Y, Cb,
    and Cr planes row-major, 16-bit samples little-endian."""
    eol = data.find(b"\n")
    if eol < 0:
        raise ParseError("missing header line terminator", 0)
    try:
        header = data[:eol].decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError("header is not ASCII", 0) from exc
    fields = header.split(" ")
    if len(fields) != 5 or fields[0] != YCF_MAGIC:
        raise ParseError(f"malformed header {header!r}", 0)
    try:
        width, height, depth = int(fields[1]), int(fields[2]), int(fields[3])
    except ValueError as exc:
        raise ParseError(f"non-integer dimension in header {header!r}", 0) from exc
    try:
        mode = Subsampling(fields[4])
    except ValueError as exc:
        raise ParseError(f"unknown subsampling token {fields[4]!r}", 0) from exc
    if width <= 0 or height <= 0:
        raise ParseError(f"dimensions must be positive, got {width}x{height}", 0)
    if not MIN_DEPTH <= depth <= MAX_DEPTH:
        raise ParseError(f"depth must lie in [{MIN_DEPTH}, {MAX_DEPTH}], got {depth}", 0)
    dx, dy = mode.chroma_divisors
    if width % dx or height % dy:
        raise StructuralError(
            f"{mode.value} chroma requires dimensions divisible by {dx}x{dy}, "
            f"got {width}x{height}"
        )
    sample_bytes = 1 if depth == 8 else 2
    ch, cw = chroma_plane_shape(width, height, mode)
    luma_samples = width * height
    chroma_samples = cw * ch
    expected = (luma_samples + 2 * chroma_samples) * sample_bytes
    payload = data[eol + 1:]
    if len(payload) != expected:
        raise StructuralError(
            f"payload holds {len(payload)} bytes but header {header!r} implies {expected}"
        )
    dt = np.dtype(np.uint8) if depth == 8 else np.dtype("<u2")
    flat = np.frombuffer(payload, dtype=dt).astype(dt.newbyteorder("="))
    y = flat[:luma_samples].reshape(height, width)
    cb = flat[luma_samples:luma_samples + chroma_samples].reshape(ch, cw)
    cr = flat[luma_samples + chroma_samples:].reshape(ch, cw)
    if depth < 16 and flat.size and int(flat.max()) > max_code(depth):
        raise StructuralError(f"payload holds codes above the {depth}-bit maximum")
    return PlanarImage(width=width, height=height, depth=depth, subsampling=mode,
                       y=y, cb=cb, cr=cr)


def write_ycf(img: PlanarImage) -> bytes:
    """Encode the planar container; the exact inverse of read_ycf."""
    header = f"{YCF_MAGIC} {img.width} {img.height} {img.depth} {img.subsampling.value}\n"
    planes = (img.y, img.cb, img.cr)
    if img.depth == 8:
        payload = b"".join(p.tobytes() for p in planes)
    else:
        payload = b"".join(p.astype("<u2").tobytes() for p in planes)
    return header.encode("ascii") + payload


SPECTRAL_CSV_HEADER = ("wavelength_nm", "value")


def read_spectral_csv(data: "bytes | str", kind: TableKind) -> SpectralTable:
    """Parse wavelength/value rows into a spectral table of the given kind.

    The first row must be the literal header ``wavelength_nm,value``. Grid
    validity (ordering, emptiness, value ranges) is the table's own business
    and surfaces as ConfigurationError rather than ParseError.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != SPECTRAL_CSV_HEADER:
        raise ParseError("spectral CSV must start with header 'wavelength_nm,value'", 0)
    wavelengths = []
    values = []
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ParseError(f"line {line_no}: expected 2 fields, got {len(row)}")
        try:
            wavelengths.append(float(row[0]))
            values.append(float(row[1]))
        except ValueError as exc:
            raise ParseError(f"line {line_no}: invalid number in {row!r}") from exc
    return SpectralTable(np.asarray(wavelengths, dtype=np.float64),
                         np.asarray(values, dtype=np.float64), kind)


def write_spectral_csv(table: SpectralTable) -> str:
    """Render a spectral table in the same CSV dialect read_spectral_csv accepts."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SPECTRAL_CSV_HEADER)
    for nm, value in zip(table.wavelengths_nm, table.values):
        writer.writerow([format(float(nm), "g"), format(float(value), "g")])
    return out.getvalue()

"""File formats for the command-line tools: column CSV, mono WAV, binary PGM.

All writers are deterministic: fixed 17-significant-digit decimal floats,
'.' radix, '\\n' line endings, no timestamps.
"""
from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .spectral import Image, Signal


def format_float(value: float) -> str:
    """Round-trippable decimal rendering of a double."""
    return f"{value:.17g}"


def write_columns_csv(path, header: dict, names: list[str], columns: list[np.ndarray]) -> None:
    """Write named columns with a '#'-comment metadata header."""
    columns = [np.asarray(c, dtype=float) for c in columns]
    if len(names) != len(columns) or not columns:
        raise ValueError("need one name per column")
    length = columns[0].size
    if any(c.size != length for c in columns):
        raise ValueError("columns must share one length")
    with open(path, "w", newline="\n") as fh:
        for key, value in header.items():
            fh.write(f"# {key} = {value}\n")
        fh.write(",".join(names) + "\n")
        for i in range(length):
            fh.write(",".join(format_float(c[i]) for c in columns) + "\n")


def read_columns_csv(path):
    """Read a column CSV; returns (header dict, names, list of arrays)."""
    header = {}
    names = None
    rows = []
    with open(path, "r", newline="") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    header[key.strip()] = value.strip()
                continue
            parts = [p.strip() for p in line.split(",")]
            if names is None:
                try:
                    rows.append([float(p) for p in parts])
                except ValueError:
                    names = parts
                    continue
                names = [f"col{i}" for i in range(len(parts))]
                continue
            rows.append([float(p) for p in parts])
    if not rows:
        raise ValueError(f"no data rows in {path}")
    data = np.asarray(rows, dtype=float)
    if names is None or len(names) != data.shape[1]:
        names = [f"col{i}" for i in range(data.shape[1])]
    return header, names, [data[:, i] for i in range(data.shape[1])]


def read_signal_csv(path) -> Signal:
    """Load a two-column (t, value) CSV as a Signal.

    The sample rate is inferred from the time column; single-column files
    are accepted with an implied unit rate.
    """
    _, _, cols = read_columns_csv(path)
    if len(cols) == 1:
        return Signal(cols[0])
    t, x = cols[0], cols[1]
    if t.size < 2:
        return Signal(x)
    steps = np.diff(t)
    if steps[0] <= 0 or not np.allclose(steps, steps[0], rtol=1e-6, atol=0.0):
        raise ValueError(f"time column of {path} is not uniformly increasing")
    return Signal(x, 1.0 / steps[0])


# ---------------------------------------------------------------------------
# WAV: minimal RIFF reader/writer for mono 16-bit PCM and 32-bit float
# ---------------------------------------------------------------------------

def read_wav(path) -> Signal:
    """Read a mono WAV file (16-bit PCM or 32-bit float) into [-1, 1]."""
    raw = Path(path).read_bytes()
    if len(raw) < 12 or raw[:4] != b"RIFF" or raw[8:12] != b"WAVE":
        raise ValueError(f"{path} is not a RIFF/WAVE file")
    pos = 12
    fmt = None
    data = None
    while pos + 8 <= len(raw):
        chunk_id = raw[pos:pos + 4]
        size = struct.unpack_from("<I", raw, pos + 4)[0]
        body = raw[pos + 8:pos + 8 + size]
        if chunk_id == b"fmt ":
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif chunk_id == b"data":
            data = body
        pos += 8 + size + (size & 1)
    if fmt is None or data is None:
        raise ValueError(f"{path} is missing fmt/data chunks")
    audio_format, channels, rate, _, _, bits = fmt
    if channels != 1:
        raise ValueError(f"{path}: only mono WAV is supported (got {channels} channels)")
    if audio_format == 1 and bits == 16:
        samples = np.frombuffer(data, dtype="<i2").astype(float) / 32768.0
    elif audio_format == 3 and bits == 32:
        samples = np.frombuffer(data, dtype="<f4").astype(float)
    else:
        raise ValueError(f"{path}: unsupported WAV format (format={audio_format}, bits={bits})")
    return Signal(samples, float(rate))


def write_wav(path, signal: Signal, encoding: str = "float32") -> None:
    """Write a mono WAV file as 16-bit PCM or 32-bit float."""
    x = signal.samples
    rate = int(round(signal.sample_rate))
    if encoding == "pcm16":
        clipped = np.clip(np.rint(x * 32768.0), -32768, 32767).astype("<i2")
        payload = clipped.tobytes()
        audio_format, bits = 1, 16
    elif encoding == "float32":
        payload = x.astype("<f4").tobytes()
        audio_format, bits = 3, 32
    else:
        raise ValueError(f"unknown WAV encoding {encoding!r}")
    block = bits // 8
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF", 36 + len(payload), b"WAVE",
        b"fmt ", 16, audio_format, 1, rate, rate * block, block, bits,
        b"data", len(payload))
    Path(path).write_bytes(header + payload)


# ---------------------------------------------------------------------------
# PGM (binary P5) and CSV grids
# ---------------------------------------------------------------------------

def read_pgm(path) -> Image:
    """Read an 8- or 16-bit binary (P5) portable graymap."""
    raw = Path(path).read_bytes()
    if raw[:2] != b"P5":
        raise ValueError(f"{path} is not a binary PGM (P5) file")
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(raw) and raw[pos:pos + 1].isspace():
            pos += 1
        if raw[pos:pos + 1] == b"#":
            while pos < len(raw) and raw[pos:pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(raw) and not raw[pos:pos + 1].isspace():
            pos += 1
        fields.append(int(raw[start:pos]))
    pos += 1  # single whitespace after maxval
    width, height, maxval = fields
    if not 0 < maxval < 65536:
        raise ValueError(f"{path}: bad maxval {maxval}")
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    count = width * height
    pixels = np.frombuffer(raw, dtype=dtype, count=count, offset=pos)
    if pixels.size != count:
        raise ValueError(f"{path}: truncated pixel data")
    return Image(pixels.reshape(height, width).astype(float))


def write_pgm(path, pixels: np.ndarray, maxval: int = 255) -> None:
    """Write integer-valued pixels in [0, maxval] as a binary PGM."""
    pixels = np.asarray(pixels)
    if not 0 < maxval < 65536:
        raise ValueError(f"bad maxval {maxval}")
    if pixels.min() < 0 or pixels.max() > maxval:
        raise ValueError("pixel values outside [0, maxval]; rescale first")
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    height, width = pixels.shape
    header = f"P5\n{width} {height}\n{maxval}\n".encode("ascii")
    Path(path).write_bytes(header + np.rint(pixels).astype(dtype).tobytes())


def pgm_preview(pixels: np.ndarray, maxval: int = 255) -> np.ndarray:
    """Rescale arbitrary real pixels onto [0, maxval] for a PGM preview."""
    pixels = np.asarray(pixels, dtype=float)
    lo = pixels.min()
    hi = pixels.max()
    if hi == lo:
        return np.zeros_like(pixels)
    return np.rint((pixels - lo) / (hi - lo) * maxval)


def write_grid_csv(path, header: dict, pixels: np.ndarray) -> None:
    """Write a 2-D grid as full-precision CSV rows with a comment header."""
    pixels = np.asarray(pixels, dtype=float)
    with open(path, "w", newline="\n") as fh:
        for key, value in header.items():
            fh.write(f"# {key} = {value}\n")
        for row in pixels:
            fh.write(",".join(format_float(v) for v in row) + "\n")


def read_grid_csv(path) -> Image:
    """Read a CSV grid (comment lines ignored) as an Image."""
    rows = []
    with open(path, "r", newline="") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([float(p) for p in line.split(",")])
    if not rows:
        raise ValueError(f"no data rows in {path}")
    return Image(np.asarray(rows, dtype=float))


def read_image(path) -> Image:
    """Dispatch PGM vs CSV grid by file suffix."""
    suffix = Path(path).suffix.lower()
    if suffix == ".pgm":
        return read_pgm(path)
    return read_grid_csv(path)


def read_any_signal(path) -> Signal:
    """Dispatch WAV vs column CSV by file suffix."""
    suffix = Path(path).suffix.lower()
    if suffix == ".wav":
        return read_wav(path)
    return read_signal_csv(path)

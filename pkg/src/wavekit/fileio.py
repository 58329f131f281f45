"""Bit-exact WAV / PGM / CSV / JSON ingestion and emission.

Deliberately narrow: PCM-16 WAV (mono or stereo, downmixed by mean) and
binary 8-bit P5 PGM only; anything else is a typed rejection.  CSV
coefficient dumps print 17 significant digits so re-parsing is lossless.
"""

from __future__ import annotations

import io
import json
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (IoFailure, MalformedPgm, MalformedWav, UnsupportedEncoding,
                     UnsupportedMaxval)
from .transform1d import Decomposition1D
from .transform2d import Decomposition2D


@dataclass
class AudioBuffer:
    samples: np.ndarray      # float in [-1, 1)
    sample_rate: int
    source_bit_depth: int = 16


@dataclass
class GrayImage:
    pixels: np.ndarray       # uint8
    rows: int
    cols: int


# --- WAV -------------------------------------------------------------------

def read_wav(data: bytes) -> AudioBuffer:
    """Parse a RIFF/WAVE PCM-16 file; stereo is downmixed by channel mean."""
    try:
        if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
            raise MalformedWav("not a RIFF/WAVE file")
        pos = 12
        fmt = None
        pcm = None
        while pos + 8 <= len(data):
            cid = data[pos:pos + 4]
            size = struct.unpack("<I", data[pos + 4:pos + 8])[0]
            body = data[pos + 8:pos + 8 + size]
            if cid == b"fmt ":
                if len(body) < 16:
                    raise MalformedWav("short fmt chunk")
                fmt = struct.unpack("<HHIIHH", body[:16])
            elif cid == b"data":
                if len(body) < size:
                    raise MalformedWav("truncated data chunk")
                pcm = body
            pos += 8 + size + (size % 2)
        if fmt is None or pcm is None:
            raise MalformedWav("missing fmt or data chunk")
        audio_format, channels, sample_rate, _, _, bits = fmt
        if audio_format != 1:
            raise UnsupportedEncoding(f"non-PCM format tag {audio_format}")
        if bits != 16:
            raise UnsupportedEncoding(f"only 16-bit PCM supported, got {bits}")
        if channels not in (1, 2):
            raise UnsupportedEncoding(f"{channels} channels not supported")
        if len(pcm) % (2 * channels):
            raise MalformedWav("data chunk not a whole number of frames")
        raw = np.frombuffer(pcm, dtype="<i2").astype(float) / 32768.0
        if channels == 2:
            raw = raw.reshape(-1, 2).mean(axis=1)
        if raw.size == 0:
            raise MalformedWav("empty data chunk")
        return AudioBuffer(samples=raw, sample_rate=sample_rate)
    except struct.error as exc:
        raise MalformedWav(str(exc)) from exc


def write_wav(buf: AudioBuffer, bit_depth: int = 16) -> bytes:
    if bit_depth != 16:
        raise UnsupportedEncoding("only 16-bit output supported")
    samples = np.clip(np.asarray(buf.samples, dtype=float), -1.0, 32767 / 32768)
    pcm = np.floor(samples * 32768.0 + 0.5).astype("<i2").tobytes()
    hdr = struct.pack("<4sI4s4sIHHIIHH4sI",
                      b"RIFF", 36 + len(pcm), b"WAVE",
                      b"fmt ", 16, 1, 1, buf.sample_rate,
                      buf.sample_rate * 2, 2, 16,
                      b"data", len(pcm))
    return hdr + pcm


# --- PGM -------------------------------------------------------------------

def _pgm_tokens(data: bytes, count: int):
    """Read `count` header tokens, skipping whitespace and # comments."""
    tokens = []
    pos = 0
    while len(tokens) < count:
        if pos >= len(data):
            raise MalformedPgm("truncated header")
        c = data[pos:pos + 1]
        if c == b"#":
            nl = data.find(b"\n", pos)
            if nl < 0:
                raise MalformedPgm("unterminated comment")
            pos = nl + 1
        elif c.isspace():
            pos += 1
        else:
            end = pos
            while end < len(data) and not data[end:end + 1].isspace():
                end += 1
            tokens.append(data[pos:end])
            pos = end
    return tokens, pos + 1  # single whitespace after maxval


def read_pgm(data: bytes) -> GrayImage:
    if data[:2] != b"P5":
        raise MalformedPgm("not a binary P5 PGM")
    try:
        (_, w, h, maxval), body_start = _pgm_tokens(data, 4)
        cols, rows, maxval = int(w), int(h), int(maxval)
    except (ValueError, MalformedPgm) as exc:
        if isinstance(exc, MalformedPgm):
            raise
        raise MalformedPgm("bad header field") from exc
    if maxval != 255:
        raise UnsupportedMaxval(f"maxval {maxval} not supported")
    if rows < 1 or cols < 1:
        raise MalformedPgm("non-positive dimensions")
    body = data[body_start:body_start + rows * cols]
    if len(body) != rows * cols:
        raise MalformedPgm("truncated pixel data")
    pixels = np.frombuffer(body, dtype=np.uint8).reshape(rows, cols)
    return GrayImage(pixels=pixels.copy(), rows=rows, cols=cols)


def write_pgm(img: GrayImage | np.ndarray) -> bytes:
    pixels = img.pixels if isinstance(img, GrayImage) else np.asarray(img)
    if pixels.ndim != 2 or pixels.dtype != np.uint8:
        raise MalformedPgm("need a 2D uint8 array")
    rows, cols = pixels.shape
    header = f"P5\n{cols} {rows}\n255\n".encode("ascii")
    return header + pixels.tobytes()


# --- JSON reports and CSV coefficient dumps --------------------------------

def write_report(report, path) -> None:
    """Serialize a Quality/CompressionReport (or plain dict) to JSON."""
    payload = report.to_dict() if hasattr(report, "to_dict") else report
    try:
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True)
                              + "\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def _fmt(value: float) -> str:
    return format(value, ".17g")


def coeff_csv_text(decomposition) -> str:
    """CSV dump: 1D rows are (level, band, index, value); 2D rows add a col."""
    out = io.StringIO()
    if isinstance(decomposition, Decomposition1D):
        out.write("level,band,index,value\n")
        for level, det in enumerate(decomposition.details, start=1):
            for i, v in enumerate(det):
                out.write(f"{level},detail,{i},{_fmt(v)}\n")
        for i, v in enumerate(decomposition.approx):
            out.write(f"{decomposition.levels},approx,{i},{_fmt(v)}\n")
    elif isinstance(decomposition, Decomposition2D):
        out.write("level,band,row,col,value\n")
        for level, bands in enumerate(decomposition.detail_levels, start=1):
            for name in ("lh", "hl", "hh"):
                mat = bands[name]
                for (r, c), v in np.ndenumerate(mat):
                    out.write(f"{level},{name},{r},{c},{_fmt(v)}\n")
        for (r, c), v in np.ndenumerate(decomposition.ll_final):
            out.write(f"{decomposition.levels},ll,{r},{c},{_fmt(v)}\n")
    else:
        raise TypeError("expected a 1D or 2D decomposition")
    return out.getvalue()


def write_coeff_csv(decomposition, path) -> None:
    try:
        Path(path).write_text(coeff_csv_text(decomposition))
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def read_coeff_csv_1d(text: str):
    """Re-parse a 1D coefficient CSV into {(level, band): array}."""
    rows = {}
    lines = text.strip().splitlines()
    for line in lines[1:]:
        level, band, index, value = line.split(",")
        rows.setdefault((int(level), band), []).append(
            (int(index), float(value)))
    return {key: np.array([v for _, v in sorted(vals)])
            for key, vals in rows.items()}

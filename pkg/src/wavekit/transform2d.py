"""Separable 2D wavelet analysis/synthesis and the nested-quadrant mosaic.

Band naming: lh = lowpass along rows then highpass along columns, hl the
converse, hh highpass both ways.  Toolboxes disagree on which of these is
"horizontal detail"; the row/column definition here is the contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (DimensionMismatch, ImageTooSmall, MalformedDecomposition,
                     TooManyLevels)
from .filters import FilterBank, WaveletId, get_filterbank
from .transform1d import (ExtensionMode, analyze_level, pad_to_multiple,
                          synthesize_level)


@dataclass
class SubbandSet:
    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray


@dataclass
class Decomposition2D:
    wavelet: WaveletId
    levels: int
    ll_final: np.ndarray
    detail_levels: list[dict]  # finest first, each {"lh", "hl", "hh"}
    original_dims: tuple[int, int]
    extension: ExtensionMode = ExtensionMode.PERIODIC
    padded_dims: tuple[int, int] = field(default=(0, 0))

    def __post_init__(self):
        if self.padded_dims == (0, 0):
            self.padded_dims = self.original_dims


def _analyze_axis(mat, fb, ext, axis):
    """Split one axis into (low, high) halves with the 1D level transform."""
    mat = np.moveaxis(mat, axis, -1)
    lo = []
    hi = []
    for row in mat:
        a, d = analyze_level(row, fb, ext)
        lo.append(a)
        hi.append(d)
    lo = np.moveaxis(np.array(lo), -1, axis)
    hi = np.moveaxis(np.array(hi), -1, axis)
    return lo, hi


def _synthesize_axis(lo, hi, fb, ext, out_len, axis):
    lo = np.moveaxis(lo, axis, -1)
    hi = np.moveaxis(hi, axis, -1)
    rows = [synthesize_level(a, d, fb, ext, out_len) for a, d in zip(lo, hi)]
    return np.moveaxis(np.array(rows), -1, axis)


def analyze_level2d(image, fb: FilterBank,
                    ext: ExtensionMode = ExtensionMode.PERIODIC) -> SubbandSet:
    """One separable 2D stage: rows first, then columns of each half."""
    img = np.asarray(image, dtype=float)
    if img.ndim != 2 or min(img.shape) < 2:
        raise ImageTooSmall("need a 2D image with both dims >= 2")
    low, high = _analyze_axis(img, fb, ext, axis=1)   # along rows
    ll, lh = _analyze_axis(low, fb, ext, axis=0)      # along columns
    hl, hh = _analyze_axis(high, fb, ext, axis=0)
    return SubbandSet(ll=ll, lh=lh, hl=hl, hh=hh)


def synthesize_level2d(s: SubbandSet, fb: FilterBank,
                       ext: ExtensionMode = ExtensionMode.PERIODIC,
                       out_dims: tuple[int, int] | None = None):
    """Exact inverse of analyze_level2d under periodic extension."""
    shapes = {s.ll.shape, s.lh.shape, s.hl.shape, s.hh.shape}
    if len(shapes) != 1:
        raise DimensionMismatch("subbands must share dimensions")
    rows, cols = s.ll.shape
    if out_dims is None:
        out_dims = (2 * rows, 2 * cols)
    low = _synthesize_axis(s.ll, s.lh, fb, ext, out_dims[0], axis=0)
    high = _synthesize_axis(s.hl, s.hh, fb, ext, out_dims[0], axis=0)
    return _synthesize_axis(low, high, fb, ext, out_dims[1], axis=1)


def _pad_image(img, multiple):
    padded_rows = np.array([pad_to_multiple(col, multiple)[0]
                            for col in img.T]).T
    padded = np.array([pad_to_multiple(row, multiple)[0]
                       for row in padded_rows])
    return padded


def decompose2d(image, wavelet, levels: int,
                ext: ExtensionMode = ExtensionMode.PERIODIC) -> Decomposition2D:
    """Cascade analyze_level2d, recursing on the ll band only."""
    if levels < 1:
        raise TooManyLevels("levels must be >= 1")
    fb = get_filterbank(wavelet)
    img = np.asarray(image, dtype=float)
    if img.ndim != 2 or min(img.shape) < 2:
        raise ImageTooSmall("need a 2D image with both dims >= 2")
    original_dims = img.shape
    if 2 ** levels > min(original_dims):
        raise TooManyLevels(
            f"{levels} levels need both dims >= {2 ** levels}, "
            f"got {original_dims}")
    img = _pad_image(img, 2 ** levels)
    padded_dims = img.shape
    detail_levels = []
    ll = img
    for _ in range(levels):
        bands = analyze_level2d(ll, fb, ext)
        detail_levels.append({"lh": bands.lh, "hl": bands.hl, "hh": bands.hh})
        ll = bands.ll
    return Decomposition2D(wavelet=fb.id, levels=levels, ll_final=ll,
                           detail_levels=detail_levels,
                           original_dims=tuple(original_dims),
                           extension=ext, padded_dims=tuple(padded_dims))


def reconstruct2d(d: Decomposition2D):
    """Invert decompose2d; output has d.original_dims."""
    if d.levels < 1 or len(d.detail_levels) != d.levels:
        raise MalformedDecomposition("detail levels inconsistent with levels")
    fb = get_filterbank(d.wavelet)
    ll = np.asarray(d.ll_final, dtype=float)
    for j in range(d.levels - 1, -1, -1):
        bands = d.detail_levels[j]
        out_dims = (d.padded_dims[0] >> j, d.padded_dims[1] >> j)
        if bands["lh"].shape != ll.shape:
            raise MalformedDecomposition("subband dims mismatch")
        ll = synthesize_level2d(
            SubbandSet(ll=ll, lh=bands["lh"], hl=bands["hl"], hh=bands["hh"]),
            fb, d.extension, out_dims)
    return ll[: d.original_dims[0], : d.original_dims[1]]


def _to_uint8(band, zero_range_value=128):
    lo, hi = float(band.min()), float(band.max())
    if hi - lo < 1e-300:
        return np.full(band.shape, zero_range_value, dtype=np.uint8)
    scaled = (band - lo) * (255.0 / (hi - lo))
    return np.clip(np.rint(scaled), 0, 255).astype(np.uint8)


def render_mosaic(d: Decomposition2D, normalization: str = "per-band"):
    """Nested-quadrant 8-bit rendering: ll_final top-left, details framing it.

    normalization "per-band" maps each band's range to 0..255 (constant
    bands go to mid-gray 128); "global" uses one affine map for all bands.
    """
    if normalization not in ("per-band", "global"):
        raise ValueError("normalization must be 'per-band' or 'global'")
    rows, cols = d.padded_dims
    out = np.zeros((rows, cols), dtype=np.uint8)
    if normalization == "global":
        allvals = [d.ll_final] + [bands[k] for bands in d.detail_levels
                                  for k in ("lh", "hl", "hh")]
        lo = min(float(b.min()) for b in allvals)
        hi = max(float(b.max()) for b in allvals)

        def norm(band):
            if hi - lo < 1e-300:
                return np.full(band.shape, 128, dtype=np.uint8)
            return np.clip(np.rint((band - lo) * 255.0 / (hi - lo)),
                           0, 255).astype(np.uint8)
    else:
        norm = _to_uint8
    r, c = d.ll_final.shape
    out[:r, :c] = norm(d.ll_final)
    for j in range(d.levels - 1, -1, -1):
        bands = d.detail_levels[j]
        br, bc = bands["lh"].shape
        out[:br, bc:2 * bc] = norm(bands["hl"])
        out[br:2 * br, :bc] = norm(bands["lh"])
        out[br:2 * br, bc:2 * bc] = norm(bands["hh"])
    return out

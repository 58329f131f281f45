"""Single-level and cascaded 1D wavelet analysis/synthesis.

Conventions (fixed so outputs are comparable across implementations):

* analysis is correlation anchored at even samples, so Haar approximation
  is the pairwise (x[2i] + x[2i+1])/sqrt(2);
* downsampling keeps even indices, upsampling inserts zeros at odd ones;
* synthesis is the adjoint correlation with the reversed reconstruction
  filters, using the per-bank anchor offsets frozen in the filter tables;
* periodic extension gives exact perfect reconstruction, symmetric
  (half-sample) extension is exact away from the borders only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import (LengthMismatch, MalformedDecomposition, OddLengthPeriodic,
                     SignalTooShort, TooManyLevels)
from .filters import FilterBank, WaveletId, get_filterbank


class ExtensionMode(enum.Enum):
    PERIODIC = "periodic"
    SYMMETRIC = "symmetric"


@dataclass
class Decomposition1D:
    """Stage-L pyramid: final approximation plus details, finest first."""

    wavelet: WaveletId
    levels: int
    approx: np.ndarray
    details: list[np.ndarray]  # details[0] is the finest level
    original_length: int
    extension: ExtensionMode = ExtensionMode.PERIODIC
    padded_length: int = field(default=0)

    def __post_init__(self):
        if self.padded_length == 0:
            self.padded_length = self.original_length


def _periodic_analyze(x, taps, offset):
    n = len(x)
    out = np.zeros(n // 2)
    for k, v in enumerate(taps):
        out += v * np.roll(x, offset - k)[::2]
    return out


def _periodic_scatter(coeffs, taps, offset, n):
    """Adjoint of _periodic_analyze with the reversed filter."""
    y = np.zeros(n)
    y[::2] = coeffs
    out = np.zeros(n)
    for k, v in enumerate(taps):
        out += v * np.roll(y, k - offset)
    return out


def _pad_amount(fb: FilterBank) -> int:
    L = max(len(fb.dec_lo), len(fb.dec_hi), len(fb.rec_lo), len(fb.rec_hi))
    pad = L + max(abs(o) for o in fb.offsets) + 2
    return pad + (pad % 2)


def _symmetric_analyze(x, taps, offset, pad):
    n = len(x)
    xe = np.pad(x, pad, mode="symmetric")
    out_len = (n + 1) // 2
    out = np.zeros(out_len)
    base = pad - offset
    for k, v in enumerate(taps):
        out += v * xe[base + k: base + k + 2 * out_len: 2]
    return out


def _symmetric_scatter(coeffs, taps, offset, n, pad):
    ne = n + 2 * pad
    y = np.zeros(ne)
    y[pad - offset: pad - offset + 2 * len(coeffs): 2] = coeffs
    out = np.zeros(ne)
    for k, v in enumerate(taps):
        shifted = np.zeros(ne)
        if k:
            shifted[k:] = y[:-k]
        else:
            shifted = y.copy()
        out += v * shifted
    # fold the symmetric pad back onto the core (adjoint of the extension)
    core = out[pad: pad + n].copy()
    core[:pad] += out[:pad][::-1]
    core[n - pad:] += out[pad + n:][::-1]
    return core


def analyze_level(signal, fb: FilterBank, ext: ExtensionMode = ExtensionMode.PERIODIC):
    """One analysis stage: returns (approximation, detail)."""
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise SignalTooShort("need a 1D signal of length >= 2")
    n = len(x)
    o_hi = fb.offsets[0]
    if ext is ExtensionMode.PERIODIC:
        if n % 2:
            raise OddLengthPeriodic("periodic extension needs even length")
        return (_periodic_analyze(x, fb.dec_lo, 0),
                _periodic_analyze(x, fb.dec_hi, o_hi))
    pad = _pad_amount(fb)
    if n < pad:
        raise SignalTooShort(
            f"symmetric extension needs length >= {pad} for this filter")
    return (_symmetric_analyze(x, fb.dec_lo, 0, pad),
            _symmetric_analyze(x, fb.dec_hi, o_hi, pad))


def synthesize_level(approx, detail, fb: FilterBank,
                     ext: ExtensionMode = ExtensionMode.PERIODIC,
                     out_length: int | None = None):
    """Inverse of analyze_level (exact under periodic extension)."""
    a = np.asarray(approx, dtype=float)
    d = np.asarray(detail, dtype=float)
    if a.shape != d.shape:
        raise LengthMismatch("approx and detail must have equal length")
    n = out_length if out_length is not None else 2 * len(a)
    _, s_lo, s_hi = fb.offsets
    u_lo = fb.rec_lo[::-1]
    u_hi = fb.rec_hi[::-1]
    if ext is ExtensionMode.PERIODIC:
        if n != 2 * len(a):
            raise LengthMismatch("periodic out_length must be twice the subband")
        return (_periodic_scatter(a, u_lo, s_lo, n)
                + _periodic_scatter(d, u_hi, s_hi, n))
    if len(a) != (n + 1) // 2:
        raise LengthMismatch("subband length inconsistent with out_length")
    pad = _pad_amount(fb)
    return (_symmetric_scatter(a, u_lo, s_lo, n, pad)
            + _symmetric_scatter(d, u_hi, s_hi, n, pad))


def pad_to_multiple(x, multiple: int):
    """Right-pad by periodic wrap to the next multiple; returns (padded, n0)."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    target = -(-n // multiple) * multiple
    if target == n:
        return x, n
    reps = np.arange(target) % n
    return x[reps], n


def decompose(signal, wavelet, levels: int,
              ext: ExtensionMode = ExtensionMode.PERIODIC) -> Decomposition1D:
    """Cascade analyze_level on the running approximation `levels` times."""
    if levels < 1:
        raise TooManyLevels("levels must be >= 1")
    fb = get_filterbank(wavelet)
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise SignalTooShort("need a 1D signal of length >= 2")
    original_length = len(x)
    if 2 ** levels > original_length:
        raise TooManyLevels(
            f"{levels} levels need length >= {2 ** levels}, "
            f"got {original_length}")
    x, _ = pad_to_multiple(x, 2 ** levels)
    padded_length = len(x)
    details = []
    approx = x
    for _ in range(levels):
        approx, det = analyze_level(approx, fb, ext)
        details.append(det)
    return Decomposition1D(wavelet=fb.id, levels=levels, approx=approx,
                           details=details, original_length=original_length,
                           extension=ext, padded_length=padded_length)


def reconstruct(d: Decomposition1D):
    """Invert decompose; output has length d.original_length."""
    if d.levels < 1 or len(d.details) != d.levels:
        raise MalformedDecomposition("details list inconsistent with levels")
    fb = get_filterbank(d.wavelet)
    x = np.asarray(d.approx, dtype=float)
    lengths = [d.padded_length >> j for j in range(1, d.levels + 1)]
    for det, out_len in zip(reversed(d.details), reversed(lengths)):
        det = np.asarray(det, dtype=float)
        if det.shape != x.shape:
            raise MalformedDecomposition("subband length mismatch")
        target = out_len if d.extension is ExtensionMode.SYMMETRIC else 2 * len(x)
        x = synthesize_level(x, det, fb, d.extension, target)
    return x[: d.original_length]


def coefficient_energy(d: Decomposition1D) -> float:
    total = float(np.sum(np.square(d.approx)))
    for det in d.details:
        total += float(np.sum(np.square(det)))
    return total

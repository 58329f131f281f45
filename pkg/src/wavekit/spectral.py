"""DCT and FFT baselines with a stage-style octave split of the coefficients.

The DCT pair is the orthonormal DCT-II / DCT-III so Parseval holds and
energy-based metrics are comparable with the wavelet and FFT rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from .errors import SignalTooShort


@dataclass
class SpectralDecomposition:
    kind: str  # "dct" | "fft"
    coefficients: np.ndarray
    length: int

    @property
    def band_boundaries(self) -> list[int]:
        n = self.length
        return [n // 16, n // 8, n // 4, n // 2]


def dct_forward(signal):
    x = np.asarray(signal, dtype=float)
    return scipy.fft.dct(x, type=2, norm="ortho")


def dct_inverse(coefficients):
    c = np.asarray(coefficients, dtype=float)
    return scipy.fft.idct(c, type=2, norm="ortho")


def fft_forward(signal):
    x = np.asarray(signal, dtype=float)
    return np.fft.fft(x)


def fft_inverse(coefficients):
    return np.fft.ifft(np.asarray(coefficients, dtype=complex))


def decompose_spectral(signal, kind: str) -> SpectralDecomposition:
    x = np.asarray(signal, dtype=float)
    if kind == "dct":
        coeffs = dct_forward(x)
    elif kind == "fft":
        coeffs = fft_forward(x)
    else:
        raise ValueError(f"unknown spectral kind {kind!r}")
    return SpectralDecomposition(kind=kind, coefficients=coeffs, length=len(x))


def spectral_stage_split(d: SpectralDecomposition):
    """Partition coefficients into an approximation band plus 4 detail bands.

    The lowest 1/16 of the spectrum plays the role of the level-4
    approximation; the detail bands are the octaves above it.  Bands are
    full-length arrays that are zero outside their slice, so summing all
    bands restores the coefficient vector exactly.
    """
    n = d.length
    if n < 16:
        raise SignalTooShort("stage split needs length >= 16")
    bounds = [0] + d.band_boundaries + [n]
    bands = []
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        band = np.zeros_like(d.coefficients)
        band[lo:hi] = d.coefficients[lo:hi]
        if d.kind == "fft" and lo > 0:
            # mirror the conjugate-symmetric half so each band inverts real
            band[n - hi + 1:] = 0
            band[n - hi + 1: n - lo + 1] = d.coefficients[n - hi + 1: n - lo + 1]
        bands.append(band)
    if d.kind == "fft":
        # the approximation band keeps everything the detail bands left out
        claimed = np.sum(bands[1:], axis=0)
        bands[0] = d.coefficients - claimed
    return {"approx_band": bands[0], "detail_bands": bands[1:]}


def reassemble(split, kind: str):
    total = split["approx_band"].astype(complex if kind == "fft" else float).copy()
    for band in split["detail_bands"]:
        total += band
    if kind == "dct":
        return dct_inverse(total.real)
    return fft_inverse(total).real

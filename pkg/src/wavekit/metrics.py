"""Reference/processed signal quality metrics: SNR, MSE, entropy, PSNR.

Zero-error pairs report SNR/PSNR through an explicit infinite flag instead of
a large sentinel number, since lossless round trips are routine here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyData, ShapeMismatch, ZeroReference

DEFAULT_BINS = 256


@dataclass
class QualityReport:
    snr_db: float          # math.inf when mse == 0
    mse: float
    entropy_bits: float
    psnr_db: float         # math.inf when mse == 0
    histogram_mean: float
    bins: int
    max_value: float

    @property
    def infinite_snr(self) -> bool:
        return math.isinf(self.snr_db)

    def to_dict(self) -> dict:
        out = {
            "mse": self.mse,
            "entropy_bits": self.entropy_bits,
            "histogram_mean": self.histogram_mean,
            "bins": self.bins,
            "max_value": self.max_value,
            "infinite_snr": self.infinite_snr,
        }
        if not self.infinite_snr:
            out["snr_db"] = self.snr_db
            out["psnr_db"] = self.psnr_db
        return out


def _paired(reference, processed):
    ref = np.asarray(reference, dtype=float)
    proc = np.asarray(processed, dtype=float)
    if ref.shape != proc.shape:
        raise ShapeMismatch(f"shapes differ: {ref.shape} vs {proc.shape}")
    if ref.size == 0:
        raise ShapeMismatch("empty inputs")
    return ref, proc


def mse(reference, processed) -> float:
    ref, proc = _paired(reference, processed)
    diff = ref - proc
    return float(np.mean(diff * diff))


def snr_db(reference, processed) -> float:
    ref, proc = _paired(reference, processed)
    signal_power = float(np.sum(ref * ref))
    if signal_power == 0.0:
        raise ZeroReference("reference has zero energy")
    noise_power = float(np.sum((ref - proc) ** 2))
    if noise_power == 0.0:
        return math.inf
    return 10.0 * math.log10(signal_power / noise_power)


def psnr_db(reference, processed, max_value: float = 255.0) -> float:
    if max_value <= 0:
        raise ValueError("max_value must be positive")
    err = mse(reference, processed)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(max_value * max_value / err)


def _histogram(data, bins, value_range):
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise EmptyData("no samples")
    if bins < 2:
        raise ValueError("bins must be >= 2")
    lo, hi = value_range
    if not hi > lo:
        raise ValueError("range must satisfy hi > lo")
    counts, _ = np.histogram(np.clip(x, lo, hi), bins=bins, range=(lo, hi))
    return counts


def entropy_bits(data, bins: int = DEFAULT_BINS,
                 value_range: tuple[float, float] | None = None) -> float:
    """Shannon entropy of the equal-width histogram, in bits."""
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise EmptyData("no samples")
    if value_range is None:
        lo, hi = float(x.min()), float(x.max())
        if hi <= lo:
            return 0.0
        value_range = (lo, hi)
    counts = _histogram(x, bins, value_range)
    p = counts[counts > 0] / counts.sum()
    return float(-np.sum(p * np.log2(p)))


def histogram_mean(data, bins: int = DEFAULT_BINS,
                   value_range: tuple[float, float] | None = None) -> float:
    """Arithmetic mean of the histogram bin counts (= N / bins)."""
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise EmptyData("no samples")
    if value_range is None:
        lo, hi = float(x.min()), float(x.max())
        value_range = (lo, hi if hi > lo else lo + 1.0)
    counts = _histogram(x, bins, value_range)
    return float(counts.mean())


def quality_report(reference, processed, bins: int = DEFAULT_BINS,
                   value_range: tuple[float, float] | None = None,
                   max_value: float | None = None) -> QualityReport:
    """Bundle the four metrics plus histogram mean of the processed data.

    The histogram range defaults to the reference's observed range; the PSNR
    peak defaults to 255 for 8-bit style data or the reference peak
    magnitude otherwise.
    """
    ref, proc = _paired(reference, processed)
    if value_range is None:
        lo, hi = float(ref.min()), float(ref.max())
        value_range = (lo, hi if hi > lo else lo + 1.0)
    if max_value is None:
        peak = float(np.max(np.abs(ref)))
        max_value = 255.0 if peak > 1.5 else max(peak, 1e-300)
    err = mse(ref, proc)
    return QualityReport(
        snr_db=snr_db(ref, proc),
        mse=err,
        entropy_bits=entropy_bits(proc, bins, value_range),
        psnr_db=psnr_db(ref, proc, max_value),
        histogram_mean=histogram_mean(proc, bins, value_range),
        bins=bins,
        max_value=max_value,
    )

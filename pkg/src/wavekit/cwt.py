"""Dyadic octave-band analysis with Morlet, Cauchy, and Shannon wavelets.

These wavelets have no finite filter pair, so the stage structure is realized
in the frequency domain: band j multiplies the spectrum by the mother
response at scale 2^j, and synthesis is the frame-normalized adjoint.  The
Shannon bands are an exact partition of the spectrum, so its round trip is
exact; Morlet and Cauchy are redundant frames and reconstruct only where the
summed response has mass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFrame, SignalTooShort

FRAME_FLOOR = 1e-6  # relative floor on the frame sum before division


@dataclass(frozen=True)
class ContinuousWaveletId:
    """Morlet(center_frequency), Cauchy(order), or Shannon."""

    kind: str  # "morlet" | "cauchy" | "shannon"
    center_frequency: float = 5.0  # morlet only, radians/sample
    order: int = 1                 # cauchy only

    def __post_init__(self):
        if self.kind not in ("morlet", "cauchy", "shannon"):
            raise ValueError(f"unknown continuous wavelet {self.kind!r}")
        if self.kind == "morlet" and self.center_frequency < 5.0:
            raise ValueError("morlet center frequency must be >= 5")
        if self.kind == "cauchy" and self.order < 1:
            raise ValueError("cauchy order must be >= 1")

    @property
    def name(self) -> str:
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "ContinuousWaveletId":
        return cls(kind=text.strip().lower())


@dataclass
class DyadicCwtDecomposition:
    wavelet: ContinuousWaveletId
    levels: int
    bands: list[np.ndarray]          # full-length, undecimated, real
    residual_lowpass: np.ndarray
    length: int


def _mother_response(w: ContinuousWaveletId, omega):
    """Frequency response of the mother wavelet on omega >= 0."""
    if w.kind == "morlet":
        return np.exp(-0.5 * (omega - w.center_frequency) ** 2)
    if w.kind == "cauchy":
        resp = np.zeros_like(omega)
        pos = omega > 0
        # peak-normalized omega^p exp(-omega), peak at omega = p
        p = w.order
        resp[pos] = (omega[pos] / p) ** p * np.exp(p - omega[pos])
        return resp
    # shannon: indicator of the octave [pi/2, pi) at scale 1
    return ((omega >= np.pi / 2) & (omega < np.pi)).astype(float)


def band_responses(w: ContinuousWaveletId, levels: int, n: int):
    """Responses of each octave band (and residual lowpass) on the FFT grid.

    Band j (j = 0 finest) sees the mother response at 2^j times the
    frequency; for Morlet the Gaussian is centered at w0/2^j.  Responses are
    defined on nonnegative frequencies and mirrored onto the negative ones so
    band outputs are real.
    """
    omega = np.abs(np.fft.fftfreq(n) * 2 * np.pi)
    scaled = [_mother_response(w, omega * 2 ** j) for j in range(levels)]
    if w.kind == "shannon":
        covered = np.zeros(n)
        for r in scaled:
            covered += r
        residual = (covered == 0).astype(float)
    else:
        frame = np.zeros(n)
        for r in scaled:
            frame += r ** 2
        # residual claims whatever the octave bands leave uncovered
        residual = np.sqrt(np.maximum(0.0, np.max(frame) - frame))
        residual /= max(np.sqrt(np.max(frame)), 1e-300)
        residual *= (omega <= np.pi / 2 ** levels)
    return scaled, residual


def dyadic_cwt_analyze(signal, w: ContinuousWaveletId,
                       levels: int) -> DyadicCwtDecomposition:
    """Undecimated octave-band analysis; signal treated as one period."""
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or len(x) < 2 ** levels:
        raise SignalTooShort(f"need length >= {2 ** levels}")
    n = len(x)
    X = np.fft.fft(x)
    responses, residual = band_responses(w, levels, n)
    bands = [np.fft.ifft(X * r).real for r in responses]
    low = np.fft.ifft(X * residual).real
    return DyadicCwtDecomposition(wavelet=w, levels=levels, bands=bands,
                                  residual_lowpass=low, length=n)


def dyadic_cwt_synthesize(d: DyadicCwtDecomposition):
    """Frame-normalized adjoint reconstruction."""
    n = d.length
    responses, residual = band_responses(d.wavelet, d.levels, n)
    frame = residual ** 2
    for r in responses:
        frame += r ** 2
    peak = float(np.max(frame))
    if peak == 0.0:
        raise DegenerateFrame("frame sum is identically zero")
    acc = np.fft.fft(d.residual_lowpass) * residual
    for band, r in zip(d.bands, responses):
        acc += np.fft.fft(band) * r
    acc /= np.maximum(frame, FRAME_FLOOR * peak)
    return np.fft.ifft(acc).real


def band_energies(d: DyadicCwtDecomposition):
    return np.array([float(np.sum(np.square(b))) for b in d.bands])

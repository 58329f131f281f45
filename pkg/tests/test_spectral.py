import math

import numpy as np
import pytest

from wavekit import errors, spectral

LENGTHS = [1, 2, 15, 64, 768, 1024]


def dct2_via_fft_oracle(x):
    """Orthonormal DCT-II from the FFT of the even-symmetric extension."""
    n = len(x)
    y = np.concatenate([x, x[::-1]])
    Y = np.fft.fft(y)
    k = np.arange(n)
    c = 0.5 * (np.exp(-1j * np.pi * k / (2 * n)) * Y[:n]).real
    scale = np.full(n, math.sqrt(2.0 / n))
    scale[0] = math.sqrt(1.0 / n)
    return c * scale


@pytest.mark.parametrize("n", LENGTHS)
def test_dct_round_trip_and_parseval(n):
    rng = np.random.default_rng(n)
    x = rng.normal(size=n)
    c = spectral.dct_forward(x)
    assert np.max(np.abs(spectral.dct_inverse(c) - x)) < 1e-10
    assert np.sum(c * c) == pytest.approx(np.sum(x * x), abs=1e-10)


@pytest.mark.parametrize("n", LENGTHS)
def test_fft_round_trip(n):
    rng = np.random.default_rng(n + 1)
    x = rng.normal(size=n)
    back = spectral.fft_inverse(spectral.fft_forward(x))
    assert np.max(np.abs(back.real - x)) < 1e-10
    assert np.max(np.abs(back.imag)) < 1e-10


def test_dct_constant_vector():
    n = 16
    c = spectral.dct_forward(np.full(n, 3.0))
    assert c[0] == pytest.approx(3.0 * math.sqrt(n))
    assert np.max(np.abs(c[1:])) < 1e-12


def test_fft_delta_and_tone():
    spec = spectral.fft_forward(np.eye(8)[0])
    assert np.allclose(spec, np.ones(8))
    tone = np.cos(2 * np.pi * 3 * np.arange(16) / 16)
    spec = spectral.fft_forward(tone)
    nonzero = np.nonzero(np.abs(spec) > 1e-9)[0]
    assert set(nonzero) == {3, 13}


@pytest.mark.parametrize("n", [3, 8, 16])
def test_dct_cross_oracle_against_symmetric_fft(n):
    rng = np.random.default_rng(n + 7)
    x = rng.normal(size=n)
    assert np.max(np.abs(spectral.dct_forward(x) - dct2_via_fft_oracle(x))) \
        < 1e-10


@pytest.mark.parametrize("kind", ["dct", "fft"])
def test_stage_split_reassemble_identity(kind):
    rng = np.random.default_rng(42)
    x = rng.normal(size=256)
    d = spectral.decompose_spectral(x, kind)
    split = spectral.spectral_stage_split(d)
    assert len(split["detail_bands"]) == 4
    back = spectral.reassemble(split, kind)
    assert np.max(np.abs(back - x)) < 1e-10


def test_stage_split_lowpass_keeps_dc():
    x = np.full(64, 5.0)
    for kind in ("dct", "fft"):
        d = spectral.decompose_spectral(x, kind)
        split = spectral.spectral_stage_split(d)
        only_dc = {"approx_band": split["approx_band"],
                   "detail_bands": [np.zeros_like(b)
                                    for b in split["detail_bands"]]}
        assert np.max(np.abs(spectral.reassemble(only_dc, kind) - x)) < 1e-10


def test_stage_split_band_membership():
    n = 96
    k = n // 3  # lands in the octave below Nyquist, [n/4, n/2)
    x = np.cos(2 * np.pi * k * np.arange(n) / n)
    d = spectral.decompose_spectral(x, "fft")
    split = spectral.spectral_stage_split(d)
    energies = [np.sum(np.abs(b) ** 2) for b in split["detail_bands"]]
    assert np.argmax(energies) == 2
    # the split still reassembles the tone exactly
    assert np.max(np.abs(spectral.reassemble(split, "fft") - x)) < 1e-10


def test_stage_split_too_short():
    d = spectral.decompose_spectral(np.ones(8), "dct")
    with pytest.raises(errors.SignalTooShort):
        spectral.spectral_stage_split(d)


def test_band_boundaries():
    d = spectral.decompose_spectral(np.ones(64), "dct")
    assert d.band_boundaries == [4, 8, 16, 32]

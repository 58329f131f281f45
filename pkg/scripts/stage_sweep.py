#!/usr/bin/env python3
"""Reconstruction-error sweep over analysis depth.

For a test signal (a WAV file, or a built-in synthetic voiced-speech-like
signal when no input is given), decompose at stages 1..N, zero the detail
bands, reconstruct from the approximation alone, and report MSE/SNR per
stage.  This quantifies how much signal survives progressively coarser
approximations, and how the answer depends on the wavelet.

Usage:
    python3 scripts/stage_sweep.py [--input file.wav] [--stages 6]
        [--wavelets haar,db4,sym8,coif2,bior4.4] [--out sweep.csv]
"""

import argparse
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wavekit import fileio, metrics  # noqa: E402
from wavekit.transform1d import decompose, reconstruct  # noqa: E402


def synthetic_voice(n=8192, rate=8000):
    """Harmonic-rich pulse train through a slow formant envelope."""
    rng = np.random.default_rng(7)
    t = np.arange(n) / rate
    f0 = 120 * (1 + 0.05 * np.sin(2 * np.pi * 2.3 * t))
    phase = 2 * np.pi * np.cumsum(f0) / rate
    x = sum(np.sin(k * phase) / k for k in range(1, 12))
    x *= 0.5 + 0.5 * np.sin(2 * np.pi * 3.1 * t) ** 2
    x += 0.01 * rng.normal(size=n)
    return 0.3 * x / np.max(np.abs(x))


def approx_only_error(x, wavelet, stages):
    d = decompose(x, wavelet, stages)
    for det in d.details:
        det[:] = 0.0
    back = reconstruct(d)
    return metrics.mse(x, back), metrics.snr_db(x, back)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", default=None, help="16-bit PCM WAV file")
    ap.add_argument("--stages", type=int, default=6)
    ap.add_argument("--wavelets", default="haar,db4,sym8,coif2,bior4.4")
    ap.add_argument("--out", default=None, help="CSV output path")
    args = ap.parse_args()

    if args.input:
        x = fileio.read_wav(Path(args.input).read_bytes()).samples
    else:
        x = synthetic_voice()

    names = [w.strip() for w in args.wavelets.split(",") if w.strip()]
    rows = ["wavelet,stages,mse,snr_db"]
    print(f"{'wavelet':<10} {'stages':>6} {'mse':>12} {'snr_db':>8}")
    for name in names:
        for stages in range(1, args.stages + 1):
            mse, snr = approx_only_error(x, name, stages)
            rows.append(f"{name},{stages},{mse:.10e},{snr:.4f}")
            print(f"{name:<10} {stages:>6} {mse:>12.4e} {snr:>8.2f}")
    if args.out:
        Path(args.out).write_text("\n".join(rows) + "\n")
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

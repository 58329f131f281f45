#!/usr/bin/env python3
"""Generate the bundled 256x256 fingerprint-style test image.

Synthetic, public-domain-equivalent texture: a ridge pattern from a smooth
phase field (loop plus swirl) with mild deterministic perturbations, so the
wavelet detail bands carry realistic mid-amplitude structure.  Deterministic
(fixed seed); the compression golden numbers in the test suite are computed
from this exact image.
"""

import sys
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "src" / "wavekit" / "data" / "fingerprint.pgm"
SIZE = 256


def ridge_image(n=SIZE):
    rng = np.random.default_rng(20120915)
    y, x = np.mgrid[0:n, 0:n].astype(float)
    cx, cy = 0.52 * n, 0.58 * n
    dx, dy = (x - cx) / n, (y - cy) / n
    r = np.hypot(dx, 1.25 * dy)
    theta = np.arctan2(dy, dx)
    # concentric loops with an angular swirl and slow frequency drift
    phase = 2 * np.pi * (16.0 * r + 2.2 * np.sin(2 * theta) + 1.2 * r * r * 8)
    # low-frequency waviness so ridges are not perfectly circular
    gy, gx = np.mgrid[0:n, 0:n] * (2 * np.pi / n)
    phase += 1.8 * np.sin(3 * gx + 1.0) * np.cos(2 * gy + 0.5)
    ridges = np.sin(phase)
    # pressure/contact envelope and faint pores
    envelope = np.exp(-2.4 * np.clip(r - 0.06, 0, None) ** 2)
    noise = rng.normal(scale=0.08, size=(n, n))
    img = 128 + 95 * ridges * envelope + 14 * noise + 10 * (envelope - 0.5)
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def main():
    img = ridge_image()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode()
    OUT.write_bytes(header + img.tobytes())
    print(f"wrote {OUT} ({img.shape[0]}x{img.shape[1]})")


if __name__ == "__main__":
    sys.exit(main())

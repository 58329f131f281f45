"""Wavelet filter banks: construction, naming, and algebraic checks.

The coefficient tables live in ``_tables.py`` and are produced once by
``scripts/generate_filter_tables.py`` (spectral factorization in 60-digit
arithmetic for the orthogonal families, exact spline / 9-7 constructions for
the biorthogonal ones).  This module only wraps them in typed, immutable
objects and provides the filter-algebra utilities used by the tests.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from ._tables import FILTER_BANKS
from .errors import NotOrthogonalFamily, UnsupportedWavelet

SUPPORTED_ORDERS = {
    "haar": (None,),
    "db": tuple(range(1, 11)),
    "sym": tuple(range(2, 26)),
    "coif": tuple(range(1, 6)),
    "bior": ((1, 1), (2, 2), (2, 4), (4, 4), (5, 5)),
}

_NAME_RE = re.compile(r"^(haar|db|sym|coif|bior)(\d+(?:\.\d+)?)?$")


@dataclass(frozen=True)
class WaveletId:
    """A discrete wavelet family plus order, e.g. db4 or bior4.4."""

    family: str
    order: int | tuple[int, int] | None = None

    def __post_init__(self):
        orders = SUPPORTED_ORDERS.get(self.family)
        if orders is None:
            raise UnsupportedWavelet(f"unknown family {self.family!r}")
        if self.family == "haar":
            if self.order is not None:
                raise UnsupportedWavelet("haar takes no order")
        elif self.order not in orders:
            raise UnsupportedWavelet(
                f"{self.family} order {self.order!r} not supported")

    @property
    def name(self) -> str:
        if self.family == "haar":
            return "haar"
        if self.family == "bior":
            return f"bior{self.order[0]}.{self.order[1]}"
        return f"{self.family}{self.order}"

    @classmethod
    def parse(cls, text: str) -> "WaveletId":
        m = _NAME_RE.match(text.strip().lower())
        if not m:
            raise UnsupportedWavelet(f"cannot parse wavelet name {text!r}")
        family, order = m.group(1), m.group(2)
        if family == "haar":
            if order is not None:
                raise UnsupportedWavelet("haar takes no order")
            return cls("haar")
        if order is None:
            raise UnsupportedWavelet(f"{family} needs an order")
        if family == "bior":
            if "." not in order:
                raise UnsupportedWavelet("bior orders are pairs like 4.4")
            n, m_ = order.split(".")
            return cls("bior", (int(n), int(m_)))
        if "." in order:
            raise UnsupportedWavelet(f"{family} takes an integer order")
        return cls(family, int(order))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FilterBank:
    """Analysis/synthesis filter quadruple for one wavelet.

    ``offsets`` holds the (highpass analysis, lowpass synthesis, highpass
    synthesis) anchor shifts relative to the lowpass analysis anchor; all
    zero for orthogonal banks, frozen from the table generator for the
    biorthogonal ones.
    """

    id: WaveletId
    dec_lo: tuple[float, ...]
    dec_hi: tuple[float, ...]
    rec_lo: tuple[float, ...]
    rec_hi: tuple[float, ...]
    orthogonal: bool
    offsets: tuple[int, int, int] = (0, 0, 0)


def get_filterbank(wavelet: WaveletId | str) -> FilterBank:
    """Look up the filter bank for a wavelet. Deterministic and pure."""
    wid = WaveletId.parse(wavelet) if isinstance(wavelet, str) else wavelet
    entry = FILTER_BANKS[wid.name]
    return FilterBank(
        id=wid,
        dec_lo=tuple(entry["dec_lo"]),
        dec_hi=tuple(entry["dec_hi"]),
        rec_lo=tuple(entry["rec_lo"]),
        rec_hi=tuple(entry["rec_hi"]),
        orthogonal=entry["orthogonal"],
        offsets=tuple(entry["offsets"]),
    )


def qmf(lowpass) -> np.ndarray:
    """Quadrature mirror: g[k] = (-1)^k h[L-1-k]."""
    h = np.asarray(lowpass, dtype=float)
    L = len(h)
    signs = (-1.0) ** np.arange(L)
    return signs * h[::-1]


def count_vanishing_moments(dec_hi, tolerance: float) -> int:
    """Largest m with all moments of order < m below tolerance.

    Moments are taken on indices centered at the filter midpoint (L-1)/2 and
    summed exactly (fsum), so the count is limited only by tap precision.
    """
    g = [float(v) for v in dec_hi]
    L = len(g)
    c = (L - 1) / 2
    m = 0
    while m < L:
        moment = math.fsum((k - c) ** m * g[k] for k in range(L))
        if abs(moment) > tolerance:
            break
        m += 1
    return m


def check_orthonormality(fb: FilterBank, tolerance: float | None = None) -> float:
    """Max violation of unit norm and double-shift orthogonality of dec_lo.

    Returns the violation; if ``tolerance`` is given, also asserts it.
    """
    if not fb.orthogonal:
        raise NotOrthogonalFamily(f"{fb.id} is not an orthogonal family")
    h = np.asarray(fb.dec_lo)
    viol = abs(float(h @ h) - 1.0)
    for m in range(1, len(h) // 2):
        viol = max(viol, abs(float(h[:-2 * m] @ h[2 * m:])))
    if tolerance is not None and viol > tolerance:
        raise AssertionError(f"{fb.id}: orthonormality violation {viol}")
    return viol


def supported_wavelets() -> list[str]:
    """Canonical names of every supported discrete wavelet."""
    return list(FILTER_BANKS)

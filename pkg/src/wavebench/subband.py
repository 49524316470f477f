"""Subband-filtered OFDM without CP: groups of subcarriers pass through
short per-subband FIR filters, symbols sit back-to-back, and the receiver
works on a double-length transform."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.signal import windows

from .gridding import ResourceGrid
from .numerics import dft, fde_equalize, idft, linear_convolve
from .windowed import Numerology


@dataclass(frozen=True)
class Subband:
    first: int
    count: int
    taps: np.ndarray

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"subband width {self.count} must be positive")
        taps = np.asarray(self.taps, dtype=complex)
        if taps.ndim != 1 or taps.size < 1:
            raise ValueError("subband filter needs at least one tap")
        object.__setattr__(self, "taps", taps)

    def indices(self, n: int) -> np.ndarray:
        return (self.first + np.arange(self.count)) % n

    @property
    def centre(self) -> float:
        return self.first + (self.count - 1) / 2.0


@dataclass(frozen=True)
class SubbandLayout:
    n: int
    subbands: tuple[Subband, ...]

    def __post_init__(self):
        object.__setattr__(self, "subbands", tuple(self.subbands))
        if not self.subbands:
            raise ValueError("layout needs at least one subband")
        seen: set[int] = set()
        for sb in self.subbands:
            idx = set(int(i) for i in sb.indices(self.n))
            if seen & idx:
                raise ValueError(
                    f"layout-overlap: subband at {sb.first} reuses subcarriers"
                )
            seen |= idx

    @property
    def max_filter_len(self) -> int:
        return max(sb.taps.size for sb in self.subbands)

    def symbol_len(self) -> int:
        return self.n + self.max_filter_len - 1

    def active_set(self) -> np.ndarray:
        out = np.concatenate([sb.indices(self.n) for sb in self.subbands])
        return np.sort(out)


def design_subband_filter(
    n: int, first: int, count: int, length: int = 16, attenuation_db: float = 40.0
) -> np.ndarray:
    """Chebyshev-windowed band filter centred on the subband, normalized
    to unit complex gain at the band centre."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        win = windows.chebwin(length, at=attenuation_db)
    centre = first + (count - 1) / 2.0
    t = np.arange(length)
    g = win * np.exp(2j * np.pi * (centre / n) * (t - (length - 1) / 2.0))
    gain = np.sum(g * np.exp(-2j * np.pi * centre * t / n))
    return g / gain


def uniform_layout(
    n: int,
    first: int,
    band_count: int,
    band_width: int,
    length: int = 16,
    attenuation_db: float = 40.0,
) -> SubbandLayout:
    """Adjacent equal-width subbands starting at subcarrier ``first``."""
    bands = []
    for b in range(band_count):
        start = (first + b * band_width) % n
        taps = design_subband_filter(n, start, band_width, length, attenuation_db)
        bands.append(Subband(start, band_width, taps))
    return SubbandLayout(n, tuple(bands))


def _check_ufmc_setup(grid: ResourceGrid, num: Numerology, layout: SubbandLayout):
    if grid.data.shape != (num.m, num.n):
        raise ValueError(
            f"grid-numerology-mismatch: grid {grid.data.shape} vs "
            f"numerology ({num.m}, {num.n})"
        )
    if layout.n != num.n:
        raise ValueError(
            f"grid-numerology-mismatch: layout over {layout.n} subcarriers "
            f"vs numerology {num.n}"
        )
    if num.l_cp or num.l_ext:
        raise ValueError(
            "cp-not-supported: subband-filtered symbols are sent "
            "back-to-back without a prefix"
        )


def mod_ufmc(grid: ResourceGrid, num: Numerology, layout: SubbandLayout) -> np.ndarray:
    """Per subband: inverse transform of that subband's subcarriers, then
    linear convolution with its filter; subband outputs sum and symbols
    concatenate with no overlap."""
    _check_ufmc_setup(grid, num, layout)
    sym_len = layout.symbol_len()
    out = np.zeros(num.m * sym_len, dtype=complex)
    for i in range(num.m):
        seg = out[i * sym_len : (i + 1) * sym_len]
        for sb in layout.subbands:
            idx = sb.indices(num.n)
            masked = np.zeros(num.n, dtype=complex)
            masked[idx] = grid.data[i, idx]
            y = linear_convolve(idft(masked), sb.taps)
            seg[: y.size] += y
    return out


def _filter_gains(layout: SubbandLayout, n: int) -> np.ndarray:
    gains = np.ones(n, dtype=complex)
    for sb in layout.subbands:
        idx = sb.indices(n)
        t = np.arange(sb.taps.size)
        for k in idx:
            gains[k] = np.sum(sb.taps * np.exp(-2j * np.pi * k * t / n))
    return gains


def demod_ufmc(
    rx: np.ndarray,
    num: Numerology,
    layout: SubbandLayout,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> ResourceGrid:
    """Zero-pad each symbol segment to twice the transform size, take the
    double-length transform, read the even bins, undo the known filter
    gain per subcarrier."""
    if layout.max_filter_len - 1 >= num.n:
        raise ValueError(
            f"filter-too-long-for-2N-receiver: length {layout.max_filter_len} "
            f"tail reaches past {num.n} samples"
        )
    rx = np.asarray(rx, dtype=complex)
    sym_len = layout.symbol_len()
    if rx.size != num.m * sym_len:
        raise ValueError(
            f"truncated-burst: {rx.size} samples, expected {num.m * sym_len}"
        )
    padded = np.zeros((num.m, 2 * num.n), dtype=complex)
    padded[:, :sym_len] = rx.reshape(num.m, sym_len)
    even_bins = dft(padded)[:, ::2]
    gains = _filter_gains(layout, num.n)
    if h is not None:
        gains = gains * np.asarray(h, dtype=complex)
    est = fde_equalize(even_bins, gains, mode=eq_mode, snr_linear=snr_linear)
    return ResourceGrid(est, layout.active_set())

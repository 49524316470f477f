"""Filtered OFDM: per-band CP-OFDM synthesis shaped by a windowed-sinc
band-pass filter, with a matched-filter receiver that absorbs the filter
pair's self-interference into the equalizer.

Bands may carry different numerologies at a common sample rate; their
occupied frequency intervals must stay disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gridding import ResourceGrid
from .numerics import dft, fde_equalize, linear_convolve
from .windowed import Numerology, mod_cp_ofdm


@dataclass(frozen=True)
class FofdmBand:
    num: Numerology
    transition: float = 0.5
    filter_len: int | None = None
    taps: np.ndarray | None = None

    def __post_init__(self):
        if self.transition < 0:
            raise ValueError(f"transition width {self.transition} must be >= 0")
        if self.filter_len is not None and self.filter_len < 1:
            raise ValueError(f"filter length {self.filter_len} must be positive")
        if self.taps is not None:
            taps = np.asarray(self.taps, dtype=complex)
            if taps.ndim != 1 or taps.size < 1:
                raise ValueError("band filter needs at least one tap")
            object.__setattr__(self, "taps", taps)


def _signed_active(num: Numerology) -> np.ndarray:
    half = num.n // 2
    return np.sort((num.active_set + half) % num.n - half)


def band_centre_norm(band: FofdmBand) -> float:
    """Centre of the occupied interval in cycles per sample."""
    a = _signed_active(band.num)
    return (a[0] + a[-1] + 1) / 2.0 / band.num.n


def band_interval(band: FofdmBand) -> tuple[float, float]:
    """Occupied normalized-frequency interval including the transition."""
    a = _signed_active(band.num)
    lo = (a[0] - band.transition) / band.num.n
    hi = (a[-1] + 1 + band.transition) / band.num.n
    return lo, hi


def design_band_filter(band: FofdmBand) -> np.ndarray:
    """Hann-windowed sinc low-pass, shifted to the band centre; cutoff
    half a transition beyond the outermost active subcarrier."""
    if band.taps is not None:
        return band.taps
    n = band.num.n
    a = _signed_active(band.num)
    half_width = (a[-1] - a[0] + 1) / 2.0
    length = band.filter_len if band.filter_len is not None else n // 2 + 1
    tt = np.arange(length) - (length - 1) / 2.0
    fc = (half_width + band.transition) / n
    g = np.hanning(length) * 2.0 * fc * np.sinc(2.0 * fc * tt)
    return g * np.exp(2j * np.pi * band_centre_norm(band) * tt)


def band_burst_len(band: FofdmBand) -> int:
    g_len = (
        band.taps.size
        if band.taps is not None
        else (band.filter_len if band.filter_len is not None else band.num.n // 2 + 1)
    )
    return band.num.m * band.num.symbol_len + g_len - 1


def _check_layout(grids, layout) -> None:
    if len(grids) != len(layout):
        raise ValueError(
            f"layout-mismatch: {len(grids)} grids vs {len(layout)} bands"
        )
    intervals = [band_interval(b) for b in layout]
    order = sorted(range(len(intervals)), key=lambda i: intervals[i][0])
    for a, b in zip(order, order[1:]):
        if intervals[a][1] > intervals[b][0]:
            raise ValueError(
                f"layout-mismatch: bands {a} and {b} overlap in frequency"
            )


def mod_f_ofdm(grids, layout) -> np.ndarray:
    """Each band runs plain CP-OFDM on its own numerology, then its
    band-pass filter; the filtered bursts sum at the common rate."""
    _check_layout(grids, layout)
    pieces = []
    for grid, band in zip(grids, layout):
        sig = mod_cp_ofdm(grid, band.num)
        pieces.append(linear_convolve(sig, design_band_filter(band)))
    out = np.zeros(max(p.size for p in pieces), dtype=complex)
    for p in pieces:
        out[: p.size] += p
    return out


def _composite_response(band: FofdmBand, g: np.ndarray) -> np.ndarray:
    n = band.num.n
    tt = np.arange(g.size) - (g.size - 1) / 2.0
    half = n // 2
    freqs = ((np.arange(n) + half) % n - half) / n
    response = np.array([np.sum(g * np.exp(-2j * np.pi * f * tt)) for f in freqs])
    return np.abs(response) ** 2


def demod_f_ofdm(
    rx,
    layout,
    h=None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
):
    """Matched filter per band, then CP-OFDM demodulation with the window
    taken half a CP early so the filter pair's tails fall inside the
    guard on both sides; the known composite response joins the FDE.

    ``h`` may be one frequency response (single band) or one per band,
    each sampled on that band's transform size.
    """
    rx = np.asarray(rx, dtype=complex)
    results = []
    per_band_h = _normalize_h(h, len(layout))
    for band, h_b in zip(layout, per_band_h):
        g = design_band_filter(band)
        if rx.size < band.num.m * band.num.symbol_len:
            raise ValueError(
                f"truncated-burst: {rx.size} samples cannot hold "
                f"{band.num.m} symbols of {band.num.symbol_len}"
            )
        matched = linear_convolve(rx, np.conj(g[::-1]))
        delay = g.size - 1
        n, l_cp, step = band.num.n, band.num.l_cp, band.num.symbol_len
        shift = l_cp // 2
        rows = np.empty((band.num.m, n), dtype=complex)
        derotate = np.exp(2j * np.pi * np.arange(n) * shift / n)
        for i in range(band.num.m):
            start = delay + i * step + l_cp - shift
            rows[i] = dft(matched[start : start + n]) * derotate
        eq = _composite_response(band, g)
        if h_b is not None:
            eq = eq * np.asarray(h_b, dtype=complex)
        # the filter's stopband deliberately crushes inactive bins, so only
        # the band's own subcarriers are equalized; the rest stay raw
        active = band.num.active_set
        data = rows.copy()
        data[:, active] = fde_equalize(
            rows[:, active], eq[active], mode=eq_mode, snr_linear=snr_linear
        )
        results.append(ResourceGrid(data, active.copy()))
    return results


def _normalize_h(h, band_count: int):
    if h is None:
        return [None] * band_count
    if isinstance(h, (list, tuple)):
        if len(h) != band_count:
            raise ValueError(
                f"layout-mismatch: {len(h)} channel responses vs "
                f"{band_count} bands"
            )
        return list(h)
    return [h] * band_count

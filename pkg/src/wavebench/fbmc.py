"""Offset-QAM filter-bank multicarrier: polyphase-free reference synthesis
with a frequency-sampling prototype, half-symbol stride, and per-position
phase rotation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gridding import OqamGrid, ResourceGrid, oqam_destagger
from .numerics import dft, idft
from .windowed import Numerology

# quarter-turn phase ladder applied at (half-slot + subcarrier) parity
_PHASES = np.array([1.0, 1.0j, -1.0, -1.0j])

# frequency-sampling coefficients per overlap factor
_FREQ_COEFFS = {
    2: (1.0, np.sqrt(0.5)),
    3: (1.0, 0.911438, 0.411438),
    4: (1.0, 0.971960, np.sqrt(0.5), 0.235147),
}


@dataclass(frozen=True)
class PrototypeFilter:
    taps: np.ndarray
    overlap_factor: int
    family: str

    def __post_init__(self):
        taps = np.asarray(self.taps, dtype=float)
        if taps.ndim != 1 or taps.size == 0:
            raise ValueError("prototype taps must be a non-empty 1-D sequence")
        if np.abs(taps - taps[::-1]).max() > 1e-9:
            raise ValueError("prototype taps must be symmetric")
        if abs(np.sum(taps**2) - 1.0) > 1e-9:
            raise ValueError("prototype taps must have unit energy")
        object.__setattr__(self, "taps", taps)


def design_phydyas(n: int, k: int) -> PrototypeFilter:
    """Frequency-sampling prototype of length K*N with half-sample
    symmetry."""
    if k not in _FREQ_COEFFS:
        raise ValueError(f"unsupported-overlap: K={k} not in {{2,3,4}}")
    if n < 2:
        raise ValueError(f"transform size {n} too small")
    coeffs = _FREQ_COEFFS[k]
    length = k * n
    m = np.arange(length) + 0.5
    taps = np.full(length, coeffs[0])
    for order in range(1, k):
        taps = taps + 2.0 * (-1) ** order * coeffs[order] * np.cos(
            2.0 * np.pi * order * m / length
        )
    taps /= np.sqrt(np.sum(taps**2))
    return PrototypeFilter(taps, k, "phydyas")


def design_rect_prototype(n: int) -> PrototypeFilter:
    """Length-N flat prototype; collapses the filter bank toward plain
    OFDM behaviour (test aid)."""
    return PrototypeFilter(np.full(n, 1.0 / np.sqrt(n)), 1, "rect")


def _check_fbmc_setup(num: Numerology, proto: PrototypeFilter, rows: int) -> None:
    if num.n % 2:
        raise ValueError(f"proto-grid-mismatch: odd transform size {num.n}")
    if num.l_cp or num.l_ext:
        raise ValueError(
            "proto-grid-mismatch: filter-bank symbols carry no prefix or "
            "window extension"
        )
    if proto.taps.size != proto.overlap_factor * num.n:
        raise ValueError(
            f"proto-grid-mismatch: prototype length {proto.taps.size} is "
            f"not overlap {proto.overlap_factor} times n {num.n}"
        )
    if rows != 2 * num.m:
        raise ValueError(
            f"proto-grid-mismatch: {rows} half-symbol rows vs 2*M = {2 * num.m}"
        )


def fbmc_burst_len(num: Numerology, proto: PrototypeFilter) -> int:
    return (2 * num.m - 1) * (num.n // 2) + proto.taps.size


def _slot_phase(half_slot: int, num: Numerology, proto: PrototypeFilter) -> np.ndarray:
    n = num.n
    centre = (proto.taps.size - 1) / 2.0
    sub = np.arange(n)
    return _PHASES[(half_slot + sub) % 4] * np.exp(-2j * np.pi * sub * centre / n)


def mod_fbmc_oqam(og: OqamGrid, num: Numerology, proto: PrototypeFilter) -> np.ndarray:
    """Sum of prototype-shaped subcarrier pulses at half-symbol stride.

    Each real value rides one subcarrier with a quarter-turn phase set by
    its (time, frequency) position; neighbours in either direction land in
    quadrature, which is what makes the real-axis projection at the
    receiver clean.
    """
    _check_fbmc_setup(num, proto, og.real_values.shape[0])
    half = num.n // 2
    length = proto.taps.size
    out = np.zeros(fbmc_burst_len(num, proto), dtype=complex)
    k = proto.overlap_factor
    for s in range(2 * num.m):
        phased = og.real_values[s] * _slot_phase(s, num, proto)
        pulse = np.tile(idft(phased), k) * proto.taps
        out[s * half : s * half + length] += pulse
    return out


def matched_filter_half_slots(
    rx: np.ndarray, num: Numerology, proto: PrototypeFilter
) -> np.ndarray:
    """Per half-slot matched-filter outputs before the real-axis
    projection; the imaginary part is the intrinsic interference the
    offset signalling tolerates."""
    rx = np.asarray(rx, dtype=complex)
    expected = fbmc_burst_len(num, proto)
    if rx.size != expected:
        raise ValueError(
            f"truncated-burst: {rx.size} samples, expected {expected}"
        )
    half = num.n // 2
    k = proto.overlap_factor
    raw = np.empty((2 * num.m, num.n), dtype=complex)
    for s in range(2 * num.m):
        seg = rx[s * half : s * half + proto.taps.size] * proto.taps
        folded = seg.reshape(k, num.n).sum(axis=0)
        raw[s] = dft(folded) * np.conj(_slot_phase(s, num, proto)) * num.n
    return raw


def demod_fbmc_oqam(
    rx: np.ndarray, num: Numerology, proto: PrototypeFilter
) -> ResourceGrid:
    """Matched filter per subcarrier, real-axis projection, destagger back
    to a QAM grid."""
    raw = matched_filter_half_slots(rx, num, proto)
    og = OqamGrid(np.real(raw), num.active_set)
    return oqam_destagger(og)

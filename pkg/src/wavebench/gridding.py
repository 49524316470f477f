"""Bit sources, QAM mapping, resource grids, and OQAM staggering."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _gray_axis_levels(bits_per_axis: int) -> np.ndarray:
    """Per-axis amplitude for each axis bit value.

    The amplitude ladder is descending (+3, +1, -1, -3 for two bits per
    axis, unscaled) and bit value v sits at Gray position v ^ (v >> 1),
    so neighboring amplitudes differ in exactly one bit and the first
    bit selects the sign.
    """
    n_levels = 1 << bits_per_axis
    ladder = np.arange(n_levels - 1, -n_levels, -2, dtype=float)
    amp_by_bits = np.empty(n_levels)
    for position in range(n_levels):
        amp_by_bits[position ^ (position >> 1)] = ladder[position]
    return amp_by_bits


@dataclass(frozen=True)
class Constellation:
    """Gray-coded square QAM with unit average energy.

    Supported orders are 4, 16, and 64. ``points[i]`` is the complex
    point for bit value ``i`` (most significant bit first, in-phase bits
    before quadrature bits).
    """

    order: int
    points: np.ndarray = field(repr=False)

    @property
    def bits_per_symbol(self) -> int:
        return int(np.log2(self.order))


_SUPPORTED_ORDERS = (4, 16, 64)


def make_constellation(order: int) -> Constellation:
    if order not in _SUPPORTED_ORDERS:
        raise ValueError(f"unsupported constellation order {order}")
    bits_per_axis = int(np.log2(order)) // 2
    amp_by_bits = _gray_axis_levels(bits_per_axis)
    n_axis = 1 << bits_per_axis
    scale = 1.0 / np.sqrt(np.mean(amp_by_bits**2) * 2.0)
    points = np.empty(order, dtype=complex)
    for i_bits in range(n_axis):
        for q_bits in range(n_axis):
            value = (i_bits << bits_per_axis) | q_bits
            points[value] = scale * (amp_by_bits[i_bits] + 1j * amp_by_bits[q_bits])
    return Constellation(order=order, points=points)


def map_bits(bits: np.ndarray, constellation: Constellation) -> np.ndarray:
    """Map a bit sequence to constellation symbols, group by group."""
    bits = np.asarray(bits, dtype=np.int64)
    k = constellation.bits_per_symbol
    if bits.size % k != 0:
        raise ValueError(
            f"ragged-bits: {bits.size} bits not divisible by {k} bits/symbol"
        )
    groups = bits.reshape(-1, k)
    values = np.zeros(groups.shape[0], dtype=np.int64)
    for b in range(k):
        values = (values << 1) | groups[:, b]
    return constellation.points[values]


def demap_symbols(symbols: np.ndarray, constellation: Constellation) -> np.ndarray:
    """Hard-decision demapping back to bits.

    Distance ties resolve toward the numerically smaller bit tuple
    because argmin keeps the first minimum and points are indexed by
    bit value.
    """
    symbols = np.asarray(symbols, dtype=complex).ravel()
    if symbols.size == 0:
        raise ValueError("empty-signal: no symbols to demap")
    k = constellation.bits_per_symbol
    bits = np.empty(symbols.size * k, dtype=np.int64)
    chunk = 65536
    for start in range(0, symbols.size, chunk):
        part = symbols[start : start + chunk]
        d2 = np.abs(part[:, None] - constellation.points[None, :]) ** 2
        values = np.argmin(d2, axis=1)
        for b in range(k):
            bits[start * k + b : (start + part.size) * k : k] = (
                values >> (k - 1 - b)
            ) & 1
    return bits


@dataclass
class ResourceGrid:
    """M symbols by N subcarriers of complex data; inactive entries stay 0."""

    data: np.ndarray
    active_set: np.ndarray

    def __post_init__(self) -> None:
        self.data = np.asarray(self.data, dtype=complex)
        self.active_set = np.asarray(self.active_set, dtype=np.int64)
        if self.data.ndim != 2:
            raise ValueError("grid-numerology-mismatch: grid must be 2-D (M x N)")
        n = self.data.shape[1]
        if self.active_set.size and (
            self.active_set.min() < 0 or self.active_set.max() >= n
        ):
            raise ValueError(
                f"grid-numerology-mismatch: active subcarrier outside [0, {n})"
            )

    @property
    def n_symbols(self) -> int:
        return self.data.shape[0]

    @property
    def n_subcarriers(self) -> int:
        return self.data.shape[1]


def make_grid(symbols: np.ndarray, m: int, n: int, active_set: np.ndarray) -> ResourceGrid:
    """Fill an M x N grid column set from a flat symbol sequence."""
    active_set = np.asarray(active_set, dtype=np.int64)
    symbols = np.asarray(symbols, dtype=complex)
    if symbols.size != m * active_set.size:
        raise ValueError(
            f"grid-numerology-mismatch: {symbols.size} symbols for "
            f"{m} x {active_set.size} active cells"
        )
    data = np.zeros((m, n), dtype=complex)
    data[:, active_set] = symbols.reshape(m, active_set.size)
    return ResourceGrid(data=data, active_set=active_set)


@dataclass
class OqamGrid:
    """2M x N real array: row 2m holds the in-phase part of QAM symbol m,
    row 2m+1 the quadrature part. The quarter-turn phase progression is
    applied by the filter-bank modulator, not stored here."""

    real_values: np.ndarray
    active_set: np.ndarray

    def __post_init__(self) -> None:
        self.real_values = np.asarray(self.real_values, dtype=float)
        self.active_set = np.asarray(self.active_set, dtype=np.int64)
        if self.real_values.ndim != 2 or self.real_values.shape[0] % 2 != 0:
            raise ValueError("grid-numerology-mismatch: OQAM grid must be 2M x N")


def oqam_stagger(grid: ResourceGrid) -> OqamGrid:
    """Split each QAM symbol into two real half-symbol slots."""
    m, n = grid.data.shape
    out = np.zeros((2 * m, n))
    out[0::2, :] = grid.data.real
    out[1::2, :] = grid.data.imag
    return OqamGrid(real_values=out, active_set=grid.active_set.copy())


def oqam_destagger(og: OqamGrid) -> ResourceGrid:
    """Exact inverse of :func:`oqam_stagger`."""
    data = og.real_values[0::2, :] + 1j * og.real_values[1::2, :]
    return ResourceGrid(data=data, active_set=og.active_set.copy())

"""Deterministic impairment injection.

The composition order is fixed: multipath, then CFO, then timing offset,
then noise. Noise seeds derive from (scenario seed, trial index, stage
tag) through SHA-256 so trial-level parallelism cannot change results.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ChannelSpec:
    """Static channel description.

    ``taps`` is the unit-energy multipath profile, ``cfo_norm`` the
    carrier offset as a fraction of subcarrier spacing, ``timing_offset``
    an integer sample shift, ``snr_db`` the per-sample SNR (None means
    noiseless).
    """

    taps: np.ndarray = field(default=None)  # type: ignore[assignment]
    cfo_norm: float = 0.0
    timing_offset: int = 0
    snr_db: float | None = None

    def __post_init__(self) -> None:
        taps = np.ones(1, dtype=complex) if self.taps is None else np.asarray(self.taps, dtype=complex)
        if taps.size == 0:
            raise ValueError("empty-signal: channel needs at least one tap")
        energy = np.sum(np.abs(taps) ** 2)
        if abs(energy - 1.0) > 1e-9:
            raise ValueError(
                f"taps-not-unit-energy: sum |taps|^2 = {energy:.12g}, expected 1"
            )
        if not abs(self.cfo_norm) < 0.5:
            raise ValueError(f"cfo out of range: |{self.cfo_norm}| >= 0.5")
        object.__setattr__(self, "taps", taps)


def apply_multipath(x: np.ndarray, spec: ChannelSpec) -> np.ndarray:
    """Linear convolution with the tap profile."""
    x = np.asarray(x, dtype=complex)
    return np.convolve(x, spec.taps)


def apply_cfo(x: np.ndarray, cfo_norm: float, n: int) -> np.ndarray:
    """Multiply by the rotating phasor e^{j 2 pi cfo k / N}."""
    x = np.asarray(x, dtype=complex)
    if cfo_norm == 0.0:
        return x.copy()
    return x * np.exp(2j * np.pi * cfo_norm * np.arange(x.size) / n)


def apply_timing_offset(x: np.ndarray, offset: int) -> np.ndarray:
    """Positive offsets delay (prepend zeros), negative ones advance."""
    x = np.asarray(x, dtype=complex)
    if abs(offset) >= x.size:
        raise ValueError(
            f"offset-exceeds-signal: |{offset}| >= signal length {x.size}"
        )
    if offset == 0:
        return x.copy()
    if offset > 0:
        return np.concatenate([np.zeros(offset, dtype=complex), x])
    return x[-offset:].copy()


def derive_seed(scenario_seed: int, trial: int, stage_tag: str) -> int:
    """Counter-style 64-bit seed from (seed, trial, tag) via SHA-256."""
    digest = hashlib.sha256(f"{scenario_seed}:{trial}:{stage_tag}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def add_awgn(x: np.ndarray, snr_db: float | None, rng_seed: int) -> np.ndarray:
    """Circularly-symmetric Gaussian noise at the requested per-sample SNR."""
    x = np.asarray(x, dtype=complex)
    if snr_db is None or np.isinf(snr_db):
        return x.copy()
    power = np.mean(np.abs(x) ** 2)
    if power <= 0.0:
        raise ValueError("zero-signal-snr-undefined: input has no energy")
    var = power / (10.0 ** (snr_db / 10.0))
    rng = np.random.default_rng(rng_seed)
    noise = rng.standard_normal(x.size) + 1j * rng.standard_normal(x.size)
    return x + np.sqrt(var / 2.0) * noise


def apply_channel(
    x: np.ndarray,
    spec: ChannelSpec,
    n: int,
    scenario_seed: int = 0,
    trial: int = 0,
    stage_tag: str = "awgn",
) -> np.ndarray:
    """Full impairment chain in the contract order."""
    y = apply_multipath(x, spec)
    y = apply_cfo(y, spec.cfo_norm, n)
    y = apply_timing_offset(y, spec.timing_offset)
    return add_awgn(y, spec.snr_db, derive_seed(scenario_seed, trial, stage_tag))


def freq_response(spec: ChannelSpec, n: int) -> np.ndarray:
    """Per-bin response of the tap profile on an n-point grid, including the
    timing-offset phase ramp (a delay of d samples is e^{-j 2 pi n d / N}
    per bin once the CP absorbs it)."""
    taps = spec.taps
    padded = np.zeros(n, dtype=complex)
    padded[: taps.size] = taps
    h = np.fft.fft(padded)
    if spec.timing_offset:
        h = h * np.exp(-2j * np.pi * np.arange(n) * spec.timing_offset / n)
    return h

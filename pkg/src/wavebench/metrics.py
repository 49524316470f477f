"""Measurement side: PAPR CCDF, Welch PSD, OOBE ratio, BER, EVM, and
spectral-efficiency accounting."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .windowed import Numerology

DB_FLOOR = -120.0


def papr_db(segment: np.ndarray) -> float:
    """Peak-to-average power ratio of one segment, in dB."""
    segment = np.asarray(segment, dtype=complex)
    if segment.size == 0:
        raise ValueError("no-segments: empty segment")
    p = np.abs(segment) ** 2
    return float(10.0 * np.log10(p.max() / p.mean()))


def default_ccdf_thresholds() -> np.ndarray:
    return np.arange(0.0, 12.0 + 1e-9, 0.25)


def papr_ccdf(
    segments: list[np.ndarray] | np.ndarray,
    thresholds_db: np.ndarray | None = None,
) -> list[tuple[float, float]]:
    """CCDF of per-segment PAPR: fraction of segments exceeding each
    threshold."""
    if thresholds_db is None:
        thresholds_db = default_ccdf_thresholds()
    if len(segments) == 0:
        raise ValueError("no-segments: need at least one segment")
    values = np.array([papr_db(s) for s in segments])
    return [
        (float(t), float(np.mean(values > t))) for t in np.asarray(thresholds_db)
    ]


def ccdf_inverse(points: list[tuple[float, float]], probability: float) -> float:
    """Threshold (dB) where the CCDF crosses the given probability,
    interpolated linearly in log-probability."""
    thresholds = np.array([p[0] for p in points])
    probs = np.array([p[1] for p in points])
    above = probs > probability
    if not above.any():
        return float(thresholds[0])
    if above.all():
        return float(thresholds[-1])
    i = int(np.nonzero(above)[0][-1])  # last threshold still above target
    p0, p1 = probs[i], probs[i + 1]
    t0, t1 = thresholds[i], thresholds[i + 1]
    if p1 <= 0:
        return float(t1)
    frac = (np.log(p0) - np.log(probability)) / (np.log(p0) - np.log(p1))
    return float(t0 + frac * (t1 - t0))


def _window(tag: str, length: int) -> np.ndarray:
    if tag == "hann":
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(length) / length)
    if tag == "rect":
        return np.ones(length)
    raise ValueError(f"unknown window tag {tag!r}")


def psd_welch(
    x: np.ndarray,
    segment_len: int = 1024,
    overlap_frac: float = 0.5,
    window: str = "hann",
) -> tuple[np.ndarray, np.ndarray]:
    """Averaged windowed periodogram.

    Returns (normalized frequencies in [-0.5, 0.5), linear power bins).
    Normalized so that the integral over frequency equals the mean
    sample power.
    """
    x = np.asarray(x, dtype=complex)
    if not 0.0 <= overlap_frac <= 0.9:
        raise ValueError(f"overlap fraction {overlap_frac} outside [0, 0.9]")
    if x.size < segment_len:
        raise ValueError(
            f"signal-too-short: {x.size} samples < segment length {segment_len}"
        )
    w = _window(window, segment_len)
    hop = max(1, int(round(segment_len * (1.0 - overlap_frac))))
    n_seg = (x.size - segment_len) // hop + 1
    acc = np.zeros(segment_len)
    for i in range(n_seg):
        seg = x[i * hop : i * hop + segment_len] * w
        acc += np.abs(np.fft.fft(seg)) ** 2
    psd = acc / (n_seg * np.sum(w**2))
    freqs = (np.arange(segment_len) - segment_len // 2) / segment_len
    return freqs, np.fft.fftshift(psd)


def oobe_ratio(
    freqs: np.ndarray,
    psd: np.ndarray,
    in_band: tuple[float, float],
    guard: float | None = None,
) -> float:
    """Mean out-of-band to mean in-band PSD ratio in dB (more negative is
    better). The out-of-band region starts ``guard`` beyond each band
    edge; by default the guard is 10% of the band width."""
    lo, hi = in_band
    if not (-0.5 <= lo < hi < 0.5):
        raise ValueError(f"in-band interval ({lo}, {hi}) not inside [-0.5, 0.5)")
    if guard is None:
        guard = 0.1 * (hi - lo)
    inside = (freqs >= lo) & (freqs <= hi)
    outside = (freqs < lo - guard) | (freqs > hi + guard)
    if not outside.any():
        raise ValueError("no-oob-bins: guard leaves no out-of-band bins")
    ratio = np.mean(psd[outside]) / np.mean(psd[inside])
    if ratio <= 0 or 10.0 * np.log10(ratio) < DB_FLOOR:
        return DB_FLOOR
    return float(10.0 * np.log10(ratio))


def ber_count(tx_bits: np.ndarray, rx_bits: np.ndarray) -> tuple[int, int]:
    tx_bits = np.asarray(tx_bits)
    rx_bits = np.asarray(rx_bits)
    if tx_bits.size != rx_bits.size:
        raise ValueError(
            f"length-mismatch: {tx_bits.size} tx bits vs {rx_bits.size} rx bits"
        )
    return int(np.count_nonzero(tx_bits != rx_bits)), int(tx_bits.size)


def evm_db(estimate: np.ndarray, reference: np.ndarray) -> float:
    """Error-vector power over reference power, in dB, floored at -120."""
    estimate = np.asarray(estimate, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    if estimate.shape != reference.shape:
        raise ValueError(
            f"length-mismatch: estimate {estimate.shape} vs reference {reference.shape}"
        )
    sig = np.sum(np.abs(reference) ** 2)
    if sig == 0:
        raise ValueError("zero-signal-snr-undefined: reference has no energy")
    err = np.sum(np.abs(estimate - reference) ** 2)
    if err == 0:
        return DB_FLOOR
    return float(max(10.0 * np.log10(err / sig), DB_FLOOR))


def spectral_efficiency(
    num: Numerology,
    constellation,
    guard_subcarriers: int = 0,
    window_overhead: int = 0,
) -> float:
    """Information bits per complex sample.

    total samples = M (N + L_cp + L_ext) + window_overhead, so CP, window
    extensions, and any one-time filter tail all dilute the figure;
    internal guards are excluded from the numerator via
    ``guard_subcarriers``. ``constellation`` may be a Constellation or a
    plain order.
    """
    order = getattr(constellation, "order", constellation)
    n_data = num.active_set.size - guard_subcarriers
    if n_data <= 0:
        raise ValueError(
            f"no-data-subcarriers: guards {guard_subcarriers} >= active "
            f"{num.active_set.size}"
        )
    bits = n_data * np.log2(order) * num.m
    total = num.m * (num.n + num.l_cp + num.l_ext) + window_overhead
    return float(bits / total)


def ebn0_to_snr_db(
    ebn0_db: float, bits_per_symbol: int, n_active: int, n: int
) -> float:
    """Per-sample SNR that realizes the requested Eb/N0 for an OFDM-style
    burst (CP-invariant: the CP adds signal energy and samples at the
    same density)."""
    return float(ebn0_db + 10.0 * np.log10(bits_per_symbol * n_active / n))


@dataclass
class MetricReport:
    """Everything one scenario run produces for one waveform."""

    scenario_id: str
    waveform: str
    papr_ccdf: list[tuple[float, float]] = field(default_factory=list)
    psd: list[tuple[float, float]] = field(default_factory=list)
    oobe_ratio_db: float | None = None
    ber: dict[float, tuple[int, int]] = field(default_factory=dict)
    evm_db: float | None = None
    spectral_efficiency: float | None = None

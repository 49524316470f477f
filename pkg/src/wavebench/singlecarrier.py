"""DFT-spread single-carrier waveforms: CP, zero-tail, and unique-word
variants sharing one spread-then-modulate chain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gridding import ResourceGrid
from .numerics import dft, idft
from .windowed import Numerology, demod_cp_ofdm, mod_cp_ofdm


def zadoff_chu(length: int, root: int = 1) -> np.ndarray:
    """Constant-amplitude Zadoff-Chu sequence (unit modulus per sample)."""
    if length < 1:
        raise ValueError(f"zadoff-chu length {length} must be positive")
    k = np.arange(length)
    if length % 2:
        phase = -np.pi * root * k * (k + 1) / length
    else:
        phase = -np.pi * root * k * k / length
    return np.exp(1j * phase)


def default_uw(guard_len: int) -> np.ndarray:
    return zadoff_chu(guard_len, root=1)


def split_guard(guard_total: int) -> tuple[int, int]:
    """Default head/tail split: the head gets roughly a quarter of the
    tail."""
    head = guard_total // 5
    return head, guard_total - head


@dataclass(frozen=True)
class DftSpreadConfig:
    m_data: int
    n: int
    l_cp: int = 0
    head_len: int = 0
    tail_len: int = 0
    uw: np.ndarray | None = None

    def __post_init__(self):
        if self.m_data < 1:
            raise ValueError(f"spread size {self.m_data} must be positive")
        if self.m_data > self.n:
            raise ValueError(
                f"spread-exceeds-transform: M_data {self.m_data} > N {self.n}"
            )
        if not 0 <= self.l_cp < self.n:
            raise ValueError(f"cp length {self.l_cp} outside [0, {self.n})")
        if self.head_len < 0 or self.tail_len < 0:
            raise ValueError("guard lengths must be non-negative")
        if self.head_len > self.tail_len:
            raise ValueError(
                f"head-exceeds-tail: head {self.head_len} > tail {self.tail_len}"
            )
        guard = self.head_len + self.tail_len
        if guard >= self.m_data:
            raise ValueError(
                f"guard-swallows-data: head+tail {guard} >= M_data {self.m_data}"
            )
        if guard > 0 and self.l_cp != 0:
            raise ValueError(
                f"guard-variant-forbids-cp: internal guard with L_cp {self.l_cp}"
            )
        if self.uw is not None:
            uw = np.asarray(self.uw, dtype=complex)
            if uw.size != guard:
                raise ValueError(
                    f"length-mismatch: uw {uw.size} vs guard total {guard}"
                )
            object.__setattr__(self, "uw", uw)

    @property
    def data_len(self) -> int:
        return self.m_data - self.head_len - self.tail_len

    @property
    def symbol_len(self) -> int:
        return self.n + self.l_cp


def _payload_rows(symbols: np.ndarray, payload: int) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=complex)
    if symbols.ndim == 2:
        if symbols.shape[1] != payload:
            raise ValueError(
                f"length-mismatch: rows of {symbols.shape[1]} symbols, "
                f"expected {payload}"
            )
        return symbols
    if symbols.ndim != 1 or symbols.size == 0 or symbols.size % payload:
        raise ValueError(
            f"length-mismatch: {symbols.size} symbols not a multiple of "
            f"payload {payload}"
        )
    return symbols.reshape(-1, payload)


def _numerology(cfg: DftSpreadConfig, m: int) -> Numerology:
    return Numerology(
        n=cfg.n, l_cp=cfg.l_cp, m=m, active_set=np.arange(cfg.m_data)
    )


def _spread_and_modulate(pre_rows: np.ndarray, cfg: DftSpreadConfig) -> np.ndarray:
    m = pre_rows.shape[0]
    data = np.zeros((m, cfg.n), dtype=complex)
    data[:, : cfg.m_data] = dft(pre_rows)
    grid = ResourceGrid(data, np.arange(cfg.m_data))
    return mod_cp_ofdm(grid, _numerology(cfg, m))


def mod_cp_dft_s(symbols: np.ndarray, cfg: DftSpreadConfig) -> np.ndarray:
    """Spread M_data symbols with a forward transform, place them on the
    first M_data bins of the N-point inverse transform, prepend the CP.

    With M_data == N the transform pair cancels and the chain is a pure
    pass-through plus CP.
    """
    return _spread_and_modulate(_payload_rows(symbols, cfg.m_data), cfg)


def _guarded_rows(symbols: np.ndarray, cfg: DftSpreadConfig, word: np.ndarray) -> np.ndarray:
    rows = _payload_rows(symbols, cfg.data_len)
    m = rows.shape[0]
    pre = np.zeros((m, cfg.m_data), dtype=complex)
    pre[:, : cfg.head_len] = word[: cfg.head_len]
    pre[:, cfg.head_len : cfg.head_len + cfg.data_len] = rows
    if cfg.tail_len:
        pre[:, -cfg.tail_len :] = word[cfg.head_len :]
    return pre


def mod_zt_dft_s(symbols: np.ndarray, cfg: DftSpreadConfig) -> np.ndarray:
    """Zero-tail variant: zeros occupy the head and tail of the
    pre-transform vector, so the output tail carries only residual data
    energy and there is no CP."""
    word = np.zeros(cfg.head_len + cfg.tail_len, dtype=complex)
    return _spread_and_modulate(_guarded_rows(symbols, cfg, word), cfg)


def mod_uw_dft_s(symbols: np.ndarray, cfg: DftSpreadConfig) -> np.ndarray:
    """Unique-word variant: a fixed sequence rides in the guard positions
    instead of zeros, data-independent in the pre-transform domain."""
    if cfg.uw is None:
        raise ValueError(
            "uw-not-configured: unique-word variant needs cfg.uw "
            "(default_uw() builds the standard word)"
        )
    return _spread_and_modulate(_guarded_rows(symbols, cfg, cfg.uw), cfg)


def _equalized_bins(
    rx: np.ndarray,
    cfg: DftSpreadConfig,
    h: np.ndarray | None,
    eq_mode: str,
    snr_linear: float | None,
) -> np.ndarray:
    rx = np.asarray(rx, dtype=complex)
    seg = cfg.symbol_len
    if rx.size == 0 or rx.size % seg:
        raise ValueError(
            f"truncated-burst: {rx.size} samples not a multiple of {seg}"
        )
    grid = demod_cp_ofdm(
        rx, _numerology(cfg, rx.size // seg), h=h, eq_mode=eq_mode,
        snr_linear=snr_linear,
    )
    return grid.data[:, : cfg.m_data]


def demod_cp_dft_s(
    rx: np.ndarray,
    cfg: DftSpreadConfig,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> np.ndarray:
    """Strip CP, N-transform, equalize, gather the M_data bins, despread."""
    return idft(_equalized_bins(rx, cfg, h, eq_mode, snr_linear)).reshape(-1)


def recover_pretransform(
    rx: np.ndarray,
    cfg: DftSpreadConfig,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> np.ndarray:
    """Pre-transform vectors (guard positions included, unique word left
    in place), one row per received segment."""
    return idft(_equalized_bins(rx, cfg, h, eq_mode, snr_linear))


def demod_zt_uw(
    rx: np.ndarray,
    cfg: DftSpreadConfig,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> np.ndarray:
    """Shared zero-tail / unique-word receiver.

    The known word's frequency-domain contribution is subtracted after
    equalization (it rode through the same channel as the data), then the
    guard positions are stripped.
    """
    bins = _equalized_bins(rx, cfg, h, eq_mode, snr_linear)
    if cfg.uw is not None:
        pre = np.zeros(cfg.m_data, dtype=complex)
        pre[: cfg.head_len] = cfg.uw[: cfg.head_len]
        if cfg.tail_len:
            pre[-cfg.tail_len :] = cfg.uw[cfg.head_len :]
        bins = bins - dft(pre)
    symbols = idft(bins)[:, cfg.head_len : cfg.head_len + cfg.data_len]
    return symbols.reshape(-1)


def zt_tail_power_db(signal: np.ndarray, cfg: DftSpreadConfig) -> float:
    """Mean power of each segment's last Q*tail_len output samples
    relative to the mean signal power, in dB."""
    signal = np.asarray(signal, dtype=complex)
    if cfg.tail_len == 0:
        raise ValueError("guard-swallows-data: no tail configured")
    if signal.size == 0 or signal.size % cfg.n:
        raise ValueError(
            f"truncated-burst: {signal.size} samples not a multiple of {cfg.n}"
        )
    q = cfg.n / cfg.m_data
    span = int(round(q * cfg.tail_len))
    segs = signal.reshape(-1, cfg.n)
    tail_power = np.mean(np.abs(segs[:, -span:]) ** 2)
    mean_power = np.mean(np.abs(signal) ** 2)
    return float(10.0 * np.log10(tail_power / mean_power))

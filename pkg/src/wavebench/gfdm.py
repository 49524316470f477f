"""Block-based multicarrier with circular pulse shaping: M subsymbols
share each subcarrier of one MN-sample block, a single CP protects the
whole block, and the receiver inverts the modulation matrix directly."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gridding import ResourceGrid
from .numerics import dft, fde_equalize, idft

MAX_BLOCK = 4096


def _rrc_time(mn: int, n: int, rolloff: float) -> np.ndarray:
    t = (np.arange(mn) - mn // 2) / n
    h = np.empty(mn)
    for i, ti in enumerate(t):
        if abs(ti) < 1e-12:
            h[i] = 1.0 + rolloff * (4.0 / np.pi - 1.0)
        elif abs(abs(ti) - 1.0 / (4.0 * rolloff)) < 1e-12:
            h[i] = (rolloff / np.sqrt(2.0)) * (
                (1.0 + 2.0 / np.pi) * np.sin(np.pi / (4.0 * rolloff))
                + (1.0 - 2.0 / np.pi) * np.cos(np.pi / (4.0 * rolloff))
            )
        else:
            num = np.sin(np.pi * ti * (1 - rolloff)) + 4 * rolloff * ti * np.cos(
                np.pi * ti * (1 + rolloff)
            )
            den = np.pi * ti * (1 - (4 * rolloff * ti) ** 2)
            h[i] = num / den
    return np.roll(h, -(mn // 2))


def gfdm_prototype(family: str, n: int, m: int, rolloff: float = 0.25) -> np.ndarray:
    """Unit-energy prototype of length M*N.

    rect is flat over one subsymbol; dirichlet is flat over the first M
    frequency bins (the circular interpolation pulse); rrc is a
    root-raised-cosine with period N samples, circularly centred at 0.
    """
    mn = m * n
    if family == "rect":
        g = np.zeros(mn, dtype=complex)
        g[:n] = 1.0
    elif family == "dirichlet":
        indicator = np.zeros(mn, dtype=complex)
        indicator[:m] = 1.0
        g = idft(indicator)
    elif family == "rrc":
        g = _rrc_time(mn, n, rolloff).astype(complex)
    else:
        raise ValueError(f"unknown prototype family {family!r}")
    return g / np.linalg.norm(g)


@dataclass(frozen=True)
class GfdmConfig:
    n: int
    m: int
    g: np.ndarray
    l_cp: int = 0

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("block dimensions must be positive")
        g = np.asarray(self.g, dtype=complex)
        if g.shape != (self.m * self.n,):
            raise ValueError(
                f"grid-config-mismatch: prototype length {g.size} vs block "
                f"{self.m * self.n}"
            )
        if abs(np.sum(np.abs(g) ** 2) - 1.0) > 1e-9:
            raise ValueError("grid-config-mismatch: prototype must have unit energy")
        if not 0 <= self.l_cp < self.m * self.n:
            raise ValueError(
                f"cp length {self.l_cp} outside [0, {self.m * self.n})"
            )
        object.__setattr__(self, "g", g)

    @property
    def block_len(self) -> int:
        return self.m * self.n

    @property
    def symbol_len(self) -> int:
        return self.block_len + self.l_cp


def _check_block_grid(grid: ResourceGrid, cfg: GfdmConfig) -> None:
    if grid.data.shape != (cfg.m, cfg.n):
        raise ValueError(
            f"grid-config-mismatch: grid {grid.data.shape} vs block "
            f"({cfg.m}, {cfg.n})"
        )


def _append_cp(block: np.ndarray, l_cp: int) -> np.ndarray:
    if l_cp == 0:
        return block
    return np.hstack([block[-l_cp:], block])


def mod_gfdm(grid: ResourceGrid, cfg: GfdmConfig) -> np.ndarray:
    """Direct synthesis: every data entry rides a circularly shifted,
    subcarrier-modulated copy of the prototype; the sum over one block
    gets a single CP."""
    _check_block_grid(grid, cfg)
    mn = cfg.block_len
    block = np.zeros(mn, dtype=complex)
    scale = np.sqrt(cfg.n)
    for m_idx in range(cfg.m):
        envelope = np.tile(idft(grid.data[m_idx]), cfg.m)
        block += np.roll(cfg.g, m_idx * cfg.n) * envelope * scale
    return _append_cp(block, cfg.l_cp)


def mod_gfdm_transform(grid: ResourceGrid, cfg: GfdmConfig) -> np.ndarray:
    """Second construction route, entirely in the frequency domain:
    per-subcarrier M-point transforms ride shifted copies of the
    prototype's MN-point spectrum, then one MN-point inverse transform.

    Algebraically identical to mod_gfdm for any prototype; kept as an
    independent cross-check path.
    """
    _check_block_grid(grid, cfg)
    mn = cfg.block_len
    big_g = dft(cfg.g)
    spectrum = np.zeros(mn, dtype=complex)
    for n_idx in range(cfg.n):
        spread = dft(grid.data[:, n_idx])
        spectrum += np.roll(big_g, n_idx * cfg.m) * np.tile(spread, cfg.n)
    block = idft(spectrum) / np.sqrt(cfg.n)
    return _append_cp(block, cfg.l_cp)


_zf_cache: dict[tuple[int, int, bytes], np.ndarray] = {}


def _modulation_matrix(cfg: GfdmConfig) -> np.ndarray:
    mn = cfg.block_len
    k = np.arange(mn)
    phases = np.exp(2j * np.pi * np.outer(k, np.arange(cfg.n)) / cfg.n)
    a = np.empty((mn, mn), dtype=complex)
    for m_idx in range(cfg.m):
        shifted = np.roll(cfg.g, m_idx * cfg.n) / np.sqrt(cfg.n)
        a[:, m_idx * cfg.n : (m_idx + 1) * cfg.n] = shifted[:, None] * phases
    return a


def _zf_inverse(cfg: GfdmConfig) -> np.ndarray:
    key = (cfg.n, cfg.m, cfg.g.tobytes())
    cached = _zf_cache.get(key)
    if cached is not None:
        return cached
    a = _modulation_matrix(cfg)
    try:
        a_inv = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise ValueError(
            "nonorthogonal-prototype-singular: modulation matrix is singular"
        ) from exc
    cond = np.linalg.norm(a, 1) * np.linalg.norm(a_inv, 1)
    if cond > 1e12:
        raise ValueError(
            f"nonorthogonal-prototype-singular: condition estimate {cond:.3g}"
        )
    _zf_cache[key] = a_inv
    return a_inv


def demod_gfdm_zf(
    rx: np.ndarray,
    cfg: GfdmConfig,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> ResourceGrid:
    """Strip the block CP, equalize over the MN-point spectrum, then undo
    the modulation matrix exactly."""
    if cfg.block_len > MAX_BLOCK:
        raise ValueError(
            f"grid-config-mismatch: block {cfg.block_len} exceeds the "
            f"explicit-matrix bound {MAX_BLOCK}"
        )
    rx = np.asarray(rx, dtype=complex)
    if rx.size != cfg.symbol_len:
        raise ValueError(
            f"truncated-burst: {rx.size} samples, expected {cfg.symbol_len}"
        )
    body = rx[cfg.l_cp :]
    if h is not None:
        spectrum = fde_equalize(dft(body), h, mode=eq_mode, snr_linear=snr_linear)
        body = idft(spectrum)
    d = _zf_inverse(cfg) @ body
    return ResourceGrid(d.reshape(cfg.m, cfg.n), np.arange(cfg.n))

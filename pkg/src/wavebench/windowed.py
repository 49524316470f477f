"""CP-OFDM plus its windowed relatives.

Three modulators share the same lattice: plain CP-OFDM, W-OFDM with
cyclic edge extensions and overlap-added raised-cosine ramps, and the
edge-subcarrier variant that borrows window length from the CP so the
symbol duration never grows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gridding import ResourceGrid
from .numerics import dft, fde_equalize, idft, raised_cosine_ramp


@dataclass(frozen=True)
class Numerology:
    """Deterministic lattice parameters shared by the OFDM family."""

    n: int
    l_cp: int = 0
    l_ext: int = 0
    m: int = 1
    active_set: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"transform size must be at least 2, got {self.n}")
        if not 0 <= self.l_cp < self.n:
            raise ValueError(f"CP length {self.l_cp} outside [0, {self.n})")
        if self.l_ext < 0 or self.l_ext > self.l_cp:
            raise ValueError(
                f"window-exceeds-cp: extension {self.l_ext} > CP {self.l_cp}"
            )
        if self.m < 1:
            raise ValueError(f"symbol count must be positive, got {self.m}")
        active = (
            np.arange(self.n) if self.active_set is None else np.asarray(self.active_set)
        )
        active = active.astype(np.int64)
        if active.size and (active.min() < 0 or active.max() >= self.n):
            raise ValueError(
                f"grid-numerology-mismatch: active subcarrier outside [0, {self.n})"
            )
        object.__setattr__(self, "active_set", active)

    @property
    def symbol_len(self) -> int:
        return self.n + self.l_cp


@dataclass(frozen=True)
class EdgeWindowPlan:
    """Which subcarriers get the long window and how long both windows are."""

    edge_set: np.ndarray
    l_ext_edge: int
    l_ext_inner: int


def _check_grid(grid: ResourceGrid, num: Numerology) -> None:
    if grid.data.shape != (num.m, num.n):
        raise ValueError(
            f"grid-numerology-mismatch: grid {grid.data.shape} vs "
            f"numerology ({num.m}, {num.n})"
        )


def mod_cp_ofdm(grid: ResourceGrid, num: Numerology) -> np.ndarray:
    """Inverse transform each row and prepend its cyclic prefix."""
    _check_grid(grid, num)
    bodies = idft(grid.data)
    if num.l_cp:
        bodies = np.concatenate([bodies[:, num.n - num.l_cp :], bodies], axis=1)
    return bodies.reshape(-1)


def demod_cp_ofdm(
    rx: np.ndarray,
    num: Numerology,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> ResourceGrid:
    """Strip CP, forward transform, optionally equalize per bin."""
    rx = np.asarray(rx, dtype=complex)
    step = num.symbol_len
    if rx.size < num.m * step:
        raise ValueError(
            f"truncated-burst: got {rx.size} samples, need {num.m * step}"
        )
    segments = rx[: num.m * step].reshape(num.m, step)
    bins = dft(segments[:, num.l_cp :])
    if h is not None:
        bins = fde_equalize(bins, np.asarray(h, dtype=complex), eq_mode, snr_linear)
    return ResourceGrid(data=bins, active_set=num.active_set.copy())


def _extended_symbol(body: np.ndarray, l_cp: int, l_ext: int) -> np.ndarray:
    """Cyclic extension covering [-l_cp-l_ext, n+l_ext) of the periodic body."""
    n = body.size
    idx = np.arange(-l_cp - l_ext, n + l_ext)
    return np.take(body, idx, mode="wrap")


def mod_w_ofdm(grid: ResourceGrid, num: Numerology) -> np.ndarray:
    """W-OFDM: cyclic extension on both symbol edges, raised-cosine ramps,
    adjacent symbols overlap-added over exactly ``l_ext`` samples.

    Samples outside the ramp regions match the CP-OFDM output, and the
    CP plus body region is untouched, so the plain CP demodulator
    recovers the grid exactly in loopback.
    """
    _check_grid(grid, num)
    if num.l_ext > num.l_cp:
        raise ValueError(
            f"window-exceeds-cp: extension {num.l_ext} > CP {num.l_cp}"
        )
    if num.l_ext == 0:
        return mod_cp_ofdm(grid, num)
    l_ext = num.l_ext
    ramp_up = raised_cosine_ramp(l_ext)
    stride = num.n + num.l_cp + l_ext
    out = np.zeros(num.m * stride + l_ext, dtype=complex)
    bodies = idft(grid.data)
    for m in range(num.m):
        seg = _extended_symbol(bodies[m], num.l_cp, l_ext)
        seg[:l_ext] *= ramp_up
        seg[-l_ext:] *= ramp_up[::-1]
        out[m * stride : m * stride + seg.size] += seg
    return out


def demod_w_ofdm(
    rx: np.ndarray,
    num: Numerology,
    rx_window: bool = False,
    h: np.ndarray | None = None,
    eq_mode: str = "zf",
    snr_linear: float | None = None,
) -> ResourceGrid:
    """W-OFDM receiver; optionally folds part of the guard onto the body.

    The fold blends each of the last W body samples with its cyclic twin
    taken from the CP, with complementary raised-cosine weights. For a
    clean cyclic input the blend is exact, while asynchronous
    interference sees a tapered analysis window instead of a rectangular
    one, which lowers inter-user leakage.
    """
    rx = np.asarray(rx, dtype=complex)
    if num.l_ext == 0:
        return demod_cp_ofdm(rx, num, h, eq_mode, snr_linear)
    stride = num.n + num.l_cp + num.l_ext
    if rx.size < num.m * stride + num.l_ext:
        raise ValueError(
            f"truncated-burst: got {rx.size} samples, need {num.m * stride + num.l_ext}"
        )
    fold = min(num.l_ext, num.l_cp)
    ramp = raised_cosine_ramp(fold)
    rows = np.empty((num.m, num.n), dtype=complex)
    for m in range(num.m):
        body_start = m * stride + num.l_ext + num.l_cp
        body = rx[body_start : body_start + num.n].copy()
        if rx_window and fold:
            pre = rx[body_start - fold : body_start]
            tail = body[num.n - fold :]
            body[num.n - fold :] = tail * ramp[::-1] + pre * ramp
        rows[m] = body
    bins = dft(rows)
    if h is not None:
        bins = fde_equalize(bins, np.asarray(h, dtype=complex), eq_mode, snr_linear)
    return ResourceGrid(data=bins, active_set=num.active_set.copy())


def _windowed_branch(
    grid_data: np.ndarray, num: Numerology, window_len: int
) -> np.ndarray:
    """One edge-window branch: CP-OFDM duration with a ramp eating into the
    CP head and a ramped cyclic suffix overlapping the next symbol."""
    step = num.symbol_len
    total = num.m * step
    out = np.zeros(total, dtype=complex)
    bodies = idft(grid_data)
    ramp_up = raised_cosine_ramp(window_len)
    for m in range(num.m):
        seg = np.empty(step, dtype=complex)
        if num.l_cp:
            seg[: num.l_cp] = bodies[m, num.n - num.l_cp :]
        seg[num.l_cp :] = bodies[m]
        if window_len:
            seg[:window_len] *= ramp_up
        out[m * step : (m + 1) * step] += seg
        if window_len:
            suffix = bodies[m, :window_len] * ramp_up[::-1]
            start = (m + 1) * step
            keep = min(window_len, total - start)
            if keep > 0:
                out[start : start + keep] += suffix[:keep]
    return out


def mod_edge_windowed_ofdm(
    grid: ResourceGrid, num: Numerology, plan: EdgeWindowPlan
) -> np.ndarray:
    """Two-branch synthesis: edge subcarriers get the long window, the rest
    the short one, both borrowing from the CP so the burst length equals
    the plain CP-OFDM burst."""
    _check_grid(grid, num)
    edge = np.asarray(plan.edge_set, dtype=np.int64)
    if edge.size and not np.all(np.isin(edge, num.active_set)):
        raise ValueError("bad-edge-plan: edge set not within active subcarriers")
    if not 0 <= plan.l_ext_inner <= plan.l_ext_edge <= num.l_cp:
        raise ValueError(
            "bad-edge-plan: need 0 <= inner <= edge window <= CP, got "
            f"inner {plan.l_ext_inner}, edge {plan.l_ext_edge}, CP {num.l_cp}"
        )
    edge_data = np.zeros_like(grid.data)
    if edge.size:
        edge_data[:, edge] = grid.data[:, edge]
    inner_data = grid.data - edge_data
    out = _windowed_branch(inner_data, num, plan.l_ext_inner)
    if edge.size:
        out += _windowed_branch(edge_data, num, plan.l_ext_edge)
    return out

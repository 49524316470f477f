"""Discrete transforms, convolutions, window ramps, and per-bin equalization.

Conventions used throughout the package:

* forward transform is unnormalized, the inverse carries the 1/N factor,
  so ``idft(dft(x)) == x`` and Parseval reads ``sum|x|^2 == sum|X|^2 / N``;
* the fast transform path requires a power-of-two length, every other
  length silently falls back to the quadratic reference summation;
* the reference summation can be forced globally (see
  :func:`force_naive_transforms`) so any fast-path regression is
  detectable at runtime.
"""

from __future__ import annotations

import contextlib

import numpy as np

_FORCE_NAIVE = False
_NAIVE_CACHE: dict[tuple[int, bool], np.ndarray] = {}


def force_naive_transforms(enabled: bool) -> None:
    """Route every dft/idft call through the quadratic reference path."""
    global _FORCE_NAIVE
    _FORCE_NAIVE = bool(enabled)


def naive_transforms_forced() -> bool:
    return _FORCE_NAIVE


@contextlib.contextmanager
def naive_transforms():
    """Context manager flavor of :func:`force_naive_transforms`."""
    previous = _FORCE_NAIVE
    force_naive_transforms(True)
    try:
        yield
    finally:
        force_naive_transforms(previous)


def _naive_matrix(n: int, inverse: bool) -> np.ndarray:
    key = (n, inverse)
    mat = _NAIVE_CACHE.get(key)
    if mat is None:
        sign = 2j if inverse else -2j
        k = np.arange(n)
        mat = np.exp(sign * np.pi * np.outer(k, k) / n)
        if inverse:
            mat = mat / n
        _NAIVE_CACHE[key] = mat
    return mat


def naive_dft(x: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Quadratic-time reference transform along the last axis."""
    x = np.asarray(x, dtype=complex)
    if x.shape[-1] == 0:
        raise ValueError("empty-signal: transform input has zero length")
    return x @ _naive_matrix(x.shape[-1], inverse).T


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def dft(x: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Forward (unnormalized) or inverse (1/N) transform along the last axis.

    Power-of-two lengths use the fast path unless the naive oracle is
    forced; any other length always uses the reference summation.
    """
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    if n == 0:
        raise ValueError("empty-signal: transform input has zero length")
    if _FORCE_NAIVE or not _is_pow2(n):
        return naive_dft(x, inverse)
    return np.fft.ifft(x, axis=-1) if inverse else np.fft.fft(x, axis=-1)


def idft(x: np.ndarray) -> np.ndarray:
    return dft(x, inverse=True)


def circular_convolve(x: np.ndarray, h: np.ndarray, period: int) -> np.ndarray:
    """Cyclic convolution over ``period`` samples, zero-padding both inputs.

    Computed by direct shift-and-accumulate so it is an independent
    witness for the transform-domain product route.
    """
    x = np.asarray(x, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if x.size == 0 or h.size == 0:
        raise ValueError("empty-signal: convolution operand has zero length")
    if period < max(x.size, h.size):
        raise ValueError(
            f"period-too-short: period {period} < operand length "
            f"{max(x.size, h.size)}"
        )
    xp = np.zeros(period, dtype=complex)
    xp[: x.size] = x
    hp = np.zeros(period, dtype=complex)
    hp[: h.size] = h
    y = np.zeros(period, dtype=complex)
    for i in np.flatnonzero(xp):
        y += xp[i] * np.roll(hp, i)
    return y


def linear_convolve(x: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Plain FIR convolution, output length ``len(x) + len(h) - 1``."""
    x = np.asarray(x, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if x.size == 0 or h.size == 0:
        raise ValueError("empty-signal: convolution operand has zero length")
    return np.convolve(x, h)


def raised_cosine_ramp(length: int) -> np.ndarray:
    """Monotone raised-cosine ramp-up of the given length.

    ``ramp[i] + ramp[length-1-i] == 1`` exactly, so the reversed ramp is
    the matching ramp-down.
    """
    if length < 0:
        raise ValueError("empty-signal: ramp length must be non-negative")
    if length == 0:
        return np.zeros(0)
    i = np.arange(length)
    return 0.5 * (1.0 - np.cos(np.pi * (i + 0.5) / length))


SINGULAR_BIN_THRESHOLD = 1e-12


def fde_equalize(
    y: np.ndarray,
    h: np.ndarray,
    mode: str = "zf",
    snr_linear: float | None = None,
) -> np.ndarray:
    """Single-tap frequency-domain equalization.

    ``zf`` divides per bin and refuses bins whose channel magnitude is
    below ``SINGULAR_BIN_THRESHOLD``; ``mmse`` applies the standard
    regularized solution and needs a positive ``snr_linear``.
    """
    y = np.asarray(y, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if y.shape[-1] != h.shape[-1]:
        raise ValueError(
            f"length-mismatch: {y.shape[-1]} bins vs {h.shape[-1]} channel taps"
        )
    if mode == "zf":
        bad = np.flatnonzero(np.abs(h) < SINGULAR_BIN_THRESHOLD)
        if bad.size:
            raise ValueError(f"singular-bin: |H| < 1e-12 at bin {int(bad[0])}")
        return y / h
    if mode == "mmse":
        if snr_linear is None or snr_linear <= 0:
            raise ValueError("mmse equalization requires snr_linear > 0")
        return y * np.conj(h) / (np.abs(h) ** 2 + 1.0 / snr_linear)
    raise ValueError(f"unknown equalizer mode {mode!r}")

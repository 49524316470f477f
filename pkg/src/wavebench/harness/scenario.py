"""Scenario files: JSON schema, validation, round-trip serialization.

A scenario pins one waveform, one lattice, one channel, and the metric
set to produce. Every rejection names the offending field so a config
typo is a one-line fix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

WAVEFORMS = (
    "cp-ofdm",
    "w-ofdm",
    "edge-ofdm",
    "fbmc",
    "gfdm",
    "ufmc",
    "f-ofdm",
    "cp-dft-s",
    "zt-dft-s",
    "uw-dft-s",
)

METRIC_NAMES = ("ber", "papr", "psd", "summary")

_TOP_KEYS = {
    "id",
    "waveform",
    "numerology",
    "filter",
    "modulation",
    "channel",
    "trials",
    "seed",
    "metrics",
}
_NUM_KEYS = {"n", "l_cp", "l_ext", "m", "active_subcarriers"}
_MOD_KEYS = {"order"}
_CHAN_KEYS = {"taps_re", "taps_im", "cfo_norm", "timing_offset", "snr_db"}

# which keys each waveform's "filter" object may carry
_FILTER_KEYS: dict[str, set[str]] = {
    "cp-ofdm": set(),
    "w-ofdm": set(),
    "edge-ofdm": {"edge_width", "l_ext_edge", "l_ext_inner"},
    "fbmc": {"overlap"},
    "gfdm": {"family", "rolloff"},
    "ufmc": {"band_count", "band_width", "first", "length", "attenuation_db"},
    "f-ofdm": {"transition", "filter_len"},
    "cp-dft-s": {"m_data"},
    "zt-dft-s": {"m_data", "head_len", "tail_len"},
    "uw-dft-s": {"m_data", "head_len", "tail_len", "uw_root"},
}

# waveforms whose occupied subcarriers come from the filter layout, not
# from numerology.active_subcarriers
_LAYOUT_DEFINED = {"ufmc", "cp-dft-s", "zt-dft-s", "uw-dft-s"}


class ScenarioError(ValueError):
    """Configuration rejected; the message names the offending field."""


@dataclass(frozen=True)
class Scenario:
    """One fully validated simulation request."""

    scenario_id: str
    waveform: str
    n: int
    l_cp: int = 0
    l_ext: int = 0
    m: int = 1
    active: tuple[int, ...] | None = None
    order: int = 4
    filter_params: tuple[tuple[str, Any], ...] = ()
    taps_re: tuple[float, ...] = (1.0,)
    taps_im: tuple[float, ...] = (0.0,)
    cfo_norm: float = 0.0
    timing_offset: int = 0
    snr_db: tuple[float, ...] = ()
    trials: int = 1
    seed: int = 0
    metrics: tuple[str, ...] = METRIC_NAMES

    def filter_param(self, key: str, default: Any = None) -> Any:
        for k, v in self.filter_params:
            if k == key:
                return v
        return default

    def taps(self) -> np.ndarray:
        return np.asarray(self.taps_re) + 1j * np.asarray(self.taps_im)


def _reject_unknown(obj: dict, allowed: set[str], where: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise ScenarioError(f"{where}.{extra[0]}: unknown key")


def _as_int(obj: dict, key: str, where: str, default: int | None = None) -> int:
    if key not in obj:
        if default is None:
            raise ScenarioError(f"{where}.{key}: required")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ScenarioError(f"{where}.{key}: expected an integer, got {v!r}")
    return v


def _as_float(obj: dict, key: str, where: str, default: float) -> float:
    v = obj.get(key, default)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ScenarioError(f"{where}.{key}: expected a number, got {v!r}")
    return float(v)


def _as_float_list(obj: dict, key: str, where: str, default: tuple) -> tuple:
    v = obj.get(key, list(default))
    if not isinstance(v, list) or any(
        isinstance(x, bool) or not isinstance(x, (int, float)) for x in v
    ):
        raise ScenarioError(f"{where}.{key}: expected a list of numbers")
    return tuple(float(x) for x in v)


def _parse_active(obj: dict, n: int) -> tuple[int, ...] | None:
    if "active_subcarriers" not in obj:
        return None
    v = obj["active_subcarriers"]
    if isinstance(v, bool):
        raise ScenarioError("numerology.active_subcarriers: expected int or list")
    if isinstance(v, int):
        if not 1 <= v <= n:
            raise ScenarioError(
                f"numerology.active_subcarriers: count {v} outside [1, {n}]"
            )
        # a count means a DC-centred contiguous allocation
        return tuple(int(x) for x in np.sort((np.arange(v) - v // 2) % n))
    if isinstance(v, list):
        if not v or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
            raise ScenarioError(
                "numerology.active_subcarriers: expected a non-empty int list"
            )
        if len(set(v)) != len(v):
            raise ScenarioError("numerology.active_subcarriers: duplicate entries")
        if min(v) < 0 or max(v) >= n:
            raise ScenarioError(
                f"numerology.active_subcarriers: index outside [0, {n})"
            )
        return tuple(sorted(v))
    raise ScenarioError("numerology.active_subcarriers: expected int or list")


def parse_scenario(obj: Any) -> Scenario:
    """Validate a decoded JSON object into a Scenario."""
    if not isinstance(obj, dict):
        raise ScenarioError("scenario: expected a JSON object at top level")
    _reject_unknown(obj, _TOP_KEYS, "scenario")

    sid = obj.get("id")
    if not isinstance(sid, str) or not sid:
        raise ScenarioError("scenario.id: required non-empty string")
    waveform = obj.get("waveform")
    if not isinstance(waveform, str):
        raise ScenarioError("scenario.waveform: required string")
    if waveform not in WAVEFORMS:
        raise ScenarioError(f"unknown-waveform: {waveform!r}")

    num = obj.get("numerology")
    if not isinstance(num, dict):
        raise ScenarioError("scenario.numerology: required object")
    _reject_unknown(num, _NUM_KEYS, "numerology")
    n = _as_int(num, "n", "numerology")
    l_cp = _as_int(num, "l_cp", "numerology", 0)
    l_ext = _as_int(num, "l_ext", "numerology", 0)
    m = _as_int(num, "m", "numerology", 1)
    active = _parse_active(num, n)
    if active is not None and waveform in _LAYOUT_DEFINED:
        raise ScenarioError(
            "numerology.active_subcarriers: "
            f"defined by the filter layout for {waveform}"
        )

    filt = obj.get("filter", {})
    if not isinstance(filt, dict):
        raise ScenarioError("scenario.filter: expected object")
    _reject_unknown(filt, _FILTER_KEYS[waveform], "filter")

    mod = obj.get("modulation", {})
    if not isinstance(mod, dict):
        raise ScenarioError("scenario.modulation: expected object")
    _reject_unknown(mod, _MOD_KEYS, "modulation")
    order = _as_int(mod, "order", "modulation", 4)
    if order not in (4, 16, 64):
        raise ScenarioError(f"modulation.order: {order} not one of 4, 16, 64")

    chan = obj.get("channel", {})
    if not isinstance(chan, dict):
        raise ScenarioError("scenario.channel: expected object")
    _reject_unknown(chan, _CHAN_KEYS, "channel")
    taps_re = _as_float_list(chan, "taps_re", "channel", (1.0,))
    taps_im = _as_float_list(chan, "taps_im", "channel", (0.0,) * len(taps_re))
    if len(taps_re) != len(taps_im):
        raise ScenarioError(
            f"channel.taps_im: length {len(taps_im)} != taps_re {len(taps_re)}"
        )
    cfo_norm = _as_float(chan, "cfo_norm", "channel", 0.0)
    timing_offset = _as_int(chan, "timing_offset", "channel", 0)
    snr_db = _as_float_list(chan, "snr_db", "channel", ())

    trials = _as_int(obj, "trials", "scenario", 1)
    if trials < 1:
        raise ScenarioError(f"scenario.trials: {trials} must be >= 1")
    seed = _as_int(obj, "seed", "scenario", 0)
    if not 0 <= seed < 2**64:
        raise ScenarioError("scenario.seed: outside unsigned 64-bit range")

    if "metrics" in obj:
        mv = obj["metrics"]
        if not isinstance(mv, list) or not mv or not all(
            isinstance(x, str) for x in mv
        ):
            raise ScenarioError("scenario.metrics: expected a non-empty string list")
        bad = [x for x in mv if x not in METRIC_NAMES]
        if bad:
            raise ScenarioError(
                f"scenario.metrics: {bad[0]!r} not one of {list(METRIC_NAMES)}"
            )
        metrics = tuple(dict.fromkeys(mv))
    else:
        metrics = (
            METRIC_NAMES if snr_db else tuple(x for x in METRIC_NAMES if x != "ber")
        )
    if "ber" in metrics and not snr_db:
        raise ScenarioError(
            "channel.snr_db: must be non-empty when the ber metric is selected"
        )

    sc = Scenario(
        scenario_id=sid,
        waveform=waveform,
        n=n,
        l_cp=l_cp,
        l_ext=l_ext,
        m=m,
        active=active,
        order=order,
        filter_params=tuple(sorted(filt.items())),
        taps_re=taps_re,
        taps_im=taps_im,
        cfo_norm=cfo_norm,
        timing_offset=timing_offset,
        snr_db=snr_db,
        trials=trials,
        seed=seed,
        metrics=metrics,
    )

    # construct the actual lattice and waveform objects now so numerology
    # and filter invariants surface at load time, naming their constraint
    from wavebench.harness import runner

    try:
        runner.build_rig(sc)
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    return sc


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except FileNotFoundError:
        raise ScenarioError(f"scenario file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file {path}: invalid JSON ({exc})")
    return parse_scenario(obj)


def serialize_scenario(sc: Scenario) -> dict:
    """Inverse of parse_scenario: parse(serialize(sc)) == sc."""
    out: dict[str, Any] = {
        "id": sc.scenario_id,
        "waveform": sc.waveform,
        "numerology": {"n": sc.n, "l_cp": sc.l_cp, "l_ext": sc.l_ext, "m": sc.m},
        "modulation": {"order": sc.order},
        "channel": {
            "taps_re": list(sc.taps_re),
            "taps_im": list(sc.taps_im),
            "cfo_norm": sc.cfo_norm,
            "timing_offset": sc.timing_offset,
            "snr_db": list(sc.snr_db),
        },
        "trials": sc.trials,
        "seed": sc.seed,
        "metrics": list(sc.metrics),
    }
    if sc.active is not None:
        out["numerology"]["active_subcarriers"] = list(sc.active)
    if sc.filter_params:
        out["filter"] = dict(sc.filter_params)
    return out

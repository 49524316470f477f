"""Monte-Carlo execution of one scenario: seeded bits in, MetricReport out.

Trials are independent given the seed (per-trial sub-seeds are derived by
hashing), and every aggregate is an order-insensitive sum, so any trial
execution order produces the same report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from wavebench.channel import ChannelSpec, apply_channel, derive_seed, freq_response
from wavebench.fbmc import design_phydyas, fbmc_burst_len, mod_fbmc_oqam, demod_fbmc_oqam
from wavebench.fofdm import FofdmBand, band_burst_len, demod_f_ofdm, mod_f_ofdm
from wavebench.gfdm import GfdmConfig, demod_gfdm_zf, gfdm_prototype, mod_gfdm
from wavebench.gridding import (
    demap_symbols,
    make_constellation,
    make_grid,
    map_bits,
    oqam_stagger,
)
from wavebench.metrics import (
    DB_FLOOR,
    MetricReport,
    ber_count,
    oobe_ratio,
    papr_ccdf,
    psd_welch,
)
from wavebench.singlecarrier import (
    DftSpreadConfig,
    demod_cp_dft_s,
    demod_zt_uw,
    mod_cp_dft_s,
    mod_uw_dft_s,
    mod_zt_dft_s,
    zadoff_chu,
)
from wavebench.subband import demod_ufmc, mod_ufmc, uniform_layout
from wavebench.windowed import (
    EdgeWindowPlan,
    Numerology,
    demod_cp_ofdm,
    demod_w_ofdm,
    mod_cp_ofdm,
    mod_edge_windowed_ofdm,
    mod_w_ofdm,
)
from wavebench.harness.scenario import Scenario


class ScenarioFieldError(ValueError):
    """Missing waveform-specific field, caught by scenario loading."""


@dataclass
class Rig:
    """Everything the trial loop needs, with waveform detail closed over."""

    payload_symbols: int
    samples_per_trial: int
    papr_segment_len: int
    chan_n: int
    in_band: tuple[float, float]
    make_signal: Callable[[np.ndarray], np.ndarray]
    recover: Callable[[np.ndarray, np.ndarray | None], np.ndarray]
    response_len: int


def _signed_interval(active: np.ndarray, n: int) -> tuple[float, float]:
    signed = ((np.asarray(active) + n // 2) % n) - n // 2
    return signed.min() / n, (signed.max() + 1) / n


def _all_or(active: tuple[int, ...] | None, n: int) -> np.ndarray:
    if active is None:
        return np.arange(n, dtype=np.int64)
    return np.asarray(active, dtype=np.int64)


def build_rig(sc: Scenario) -> Rig:
    """Construct the modulator/demodulator pair a scenario asks for.

    Raises the underlying module's ValueError when the configuration
    breaks an invariant, so load-time validation can surface it.
    """
    wf = sc.waveform
    if wf in ("cp-ofdm", "w-ofdm", "edge-ofdm"):
        return _rig_ofdm(sc)
    if wf == "fbmc":
        return _rig_fbmc(sc)
    if wf == "gfdm":
        return _rig_gfdm(sc)
    if wf == "ufmc":
        return _rig_ufmc(sc)
    if wf == "f-ofdm":
        return _rig_fofdm(sc)
    return _rig_dft_s(sc)


def _rig_ofdm(sc: Scenario) -> Rig:
    active = _all_or(sc.active, sc.n)
    num = Numerology(n=sc.n, l_cp=sc.l_cp, l_ext=sc.l_ext, m=sc.m, active_set=active)
    if sc.waveform == "w-ofdm":
        stride = sc.n + sc.l_cp + sc.l_ext
        samples = sc.m * stride + sc.l_ext
        modulate = lambda grid: mod_w_ofdm(grid, num)
        demodulate = lambda rx, h: demod_w_ofdm(rx, num, h=h)
    elif sc.waveform == "edge-ofdm":
        width = sc.filter_param("edge_width", max(1, active.size // 8))
        signed = ((active + sc.n // 2) % sc.n) - sc.n // 2
        order = np.argsort(signed)
        edge = np.concatenate([active[order][:width], active[order][-width:]])
        plan = EdgeWindowPlan(
            edge_set=np.unique(edge),
            l_ext_edge=sc.filter_param("l_ext_edge", min(8, sc.l_cp)),
            l_ext_inner=sc.filter_param("l_ext_inner", 0),
        )
        stride = num.symbol_len
        samples = sc.m * stride
        modulate = lambda grid: mod_edge_windowed_ofdm(grid, num, plan)
        demodulate = lambda rx, h: demod_cp_ofdm(rx, num, h=h)
    else:
        stride = num.symbol_len
        samples = sc.m * stride
        modulate = lambda grid: mod_cp_ofdm(grid, num)
        demodulate = lambda rx, h: demod_cp_ofdm(rx, num, h=h)

    def make_signal(syms: np.ndarray) -> np.ndarray:
        return modulate(make_grid(syms, sc.m, sc.n, active))

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        return demodulate(rx, h).data[:, active].reshape(-1)

    return Rig(
        payload_symbols=sc.m * active.size,
        samples_per_trial=samples,
        papr_segment_len=stride,
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=sc.n,
    )


def _rig_fbmc(sc: Scenario) -> Rig:
    active = _all_or(sc.active, sc.n)
    num = Numerology(n=sc.n, l_cp=sc.l_cp, l_ext=sc.l_ext, m=sc.m, active_set=active)
    proto = design_phydyas(sc.n, sc.filter_param("overlap", 4))
    samples = fbmc_burst_len(num, proto)

    def make_signal(syms: np.ndarray) -> np.ndarray:
        grid = make_grid(syms, sc.m, sc.n, active)
        return mod_fbmc_oqam(oqam_stagger(grid), num, proto)

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        # per-subcarrier matched filtering has no FDE stage; channels are
        # applied as-is and any distortion lands in the metrics
        return demod_fbmc_oqam(rx, num, proto).data[:, active].reshape(-1)

    return Rig(
        payload_symbols=sc.m * active.size,
        samples_per_trial=samples,
        papr_segment_len=sc.n,
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=0,
    )


def _rig_gfdm(sc: Scenario) -> Rig:
    active = _all_or(sc.active, sc.n)
    family = sc.filter_param("family", "rect")
    g = gfdm_prototype(family, sc.n, sc.m, sc.filter_param("rolloff", 0.25))
    cfg = GfdmConfig(n=sc.n, m=sc.m, g=g, l_cp=sc.l_cp)

    def make_signal(syms: np.ndarray) -> np.ndarray:
        return mod_gfdm(make_grid(syms, sc.m, sc.n, active), cfg)

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        return demod_gfdm_zf(rx, cfg, h=h).data[:, active].reshape(-1)

    return Rig(
        payload_symbols=sc.m * active.size,
        samples_per_trial=cfg.symbol_len,
        papr_segment_len=cfg.symbol_len,
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=sc.m * sc.n,
    )


def _rig_ufmc(sc: Scenario) -> Rig:
    band_count = sc.filter_param("band_count")
    band_width = sc.filter_param("band_width")
    if band_count is None or band_width is None:
        raise ScenarioFieldError("filter.band_count: required for ufmc")
    total = band_count * band_width
    first = sc.filter_param("first", (sc.n - total // 2) % sc.n)
    layout = uniform_layout(
        sc.n,
        first=first,
        band_count=band_count,
        band_width=band_width,
        length=sc.filter_param("length", 16),
        attenuation_db=sc.filter_param("attenuation_db", 40.0),
    )
    active = layout.active_set()
    num = Numerology(n=sc.n, l_cp=sc.l_cp, l_ext=sc.l_ext, m=sc.m, active_set=active)
    samples = sc.m * layout.symbol_len()

    def make_signal(syms: np.ndarray) -> np.ndarray:
        return mod_ufmc(make_grid(syms, sc.m, sc.n, active), num, layout)

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        return demod_ufmc(rx, num, layout, h=h).data[:, active].reshape(-1)

    return Rig(
        payload_symbols=sc.m * active.size,
        samples_per_trial=samples,
        papr_segment_len=layout.symbol_len(),
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=sc.n,
    )


def _rig_fofdm(sc: Scenario) -> Rig:
    active = _all_or(sc.active, sc.n)
    num = Numerology(n=sc.n, l_cp=sc.l_cp, l_ext=sc.l_ext, m=sc.m, active_set=active)
    band = FofdmBand(
        num=num,
        transition=sc.filter_param("transition", 0.5),
        filter_len=sc.filter_param("filter_len"),
    )
    samples = band_burst_len(band)

    def make_signal(syms: np.ndarray) -> np.ndarray:
        return mod_f_ofdm([make_grid(syms, sc.m, sc.n, active)], [band])

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        (est,) = demod_f_ofdm(rx, [band], h=h)
        return est.data[:, active].reshape(-1)

    return Rig(
        payload_symbols=sc.m * active.size,
        samples_per_trial=samples,
        papr_segment_len=num.symbol_len,
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=sc.n,
    )


def _rig_dft_s(sc: Scenario) -> Rig:
    m_data = sc.filter_param("m_data")
    if m_data is None:
        raise ScenarioFieldError(f"filter.m_data: required for {sc.waveform}")
    head = sc.filter_param("head_len", 0)
    tail = sc.filter_param("tail_len", 0)
    if sc.waveform == "cp-dft-s":
        cfg = DftSpreadConfig(m_data=m_data, n=sc.n, l_cp=sc.l_cp)
        modulate, demodulate = mod_cp_dft_s, demod_cp_dft_s
    elif sc.waveform == "zt-dft-s":
        cfg = DftSpreadConfig(
            m_data=m_data, n=sc.n, l_cp=sc.l_cp, head_len=head, tail_len=tail
        )
        modulate, demodulate = mod_zt_dft_s, demod_zt_uw
    else:
        uw = zadoff_chu(head + tail, sc.filter_param("uw_root", 1))
        cfg = DftSpreadConfig(
            m_data=m_data,
            n=sc.n,
            l_cp=sc.l_cp,
            head_len=head,
            tail_len=tail,
            uw=uw,
        )
        modulate, demodulate = mod_uw_dft_s, demod_zt_uw

    active = np.arange(m_data, dtype=np.int64)

    def make_signal(syms: np.ndarray) -> np.ndarray:
        return modulate(syms, cfg)

    def recover(rx: np.ndarray, h: np.ndarray | None) -> np.ndarray:
        return demodulate(rx, cfg, h=h)

    return Rig(
        payload_symbols=sc.m * cfg.data_len,
        samples_per_trial=sc.m * cfg.symbol_len,
        papr_segment_len=cfg.symbol_len,
        chan_n=sc.n,
        in_band=_signed_interval(active, sc.n),
        make_signal=make_signal,
        recover=recover,
        response_len=sc.n,
    )


def _poolsize(bits_needed: int, pool_bits: int | None) -> int:
    return max(bits_needed, pool_bits or 0)


def run_scenario(sc: Scenario, pool_bits: int | None = None) -> MetricReport:
    """Execute every trial and aggregate one MetricReport.

    ``pool_bits`` widens the per-trial payload draw so comparison runs
    can hand every waveform the same leading bits; each trial consumes
    only its own prefix.
    """
    rig = build_rig(sc)
    const = make_constellation(sc.order)
    bits_per_trial = rig.payload_symbols * const.bits_per_symbol
    draw = _poolsize(bits_per_trial, pool_bits)
    want = set(sc.metrics)

    base = ChannelSpec(
        taps=sc.taps(),
        cfo_norm=sc.cfo_norm,
        timing_offset=sc.timing_offset,
        snr_db=None,
    )
    flat_channel = (
        sc.taps().size == 1
        and abs(sc.taps()[0] - 1.0) < 1e-12
        and sc.timing_offset == 0
    )
    h = None
    if not flat_channel and rig.response_len:
        h = freq_response(base, rig.response_len)

    err_power = 0.0
    ref_power = 0.0
    segments: list[np.ndarray] = []
    psd_sum: np.ndarray | None = None
    psd_freqs: np.ndarray | None = None
    ber_acc: dict[float, list[int]] = {snr: [0, 0] for snr in sc.snr_db}

    for trial in range(sc.trials):
        rng = np.random.default_rng(derive_seed(sc.seed, trial, "payload"))
        bits = rng.integers(0, 2, size=draw)[:bits_per_trial]
        syms = map_bits(bits, const)
        try:
            tx = rig.make_signal(syms)
        except ValueError as exc:
            raise ValueError(f"{exc} (trial {trial})") from exc

        if "summary" in want:
            rx0 = apply_channel(tx, base, rig.chan_n, sc.seed, trial, "noiseless")
            try:
                est0 = rig.recover(rx0[: rig.samples_per_trial], h)
            except ValueError as exc:
                raise ValueError(f"{exc} (trial {trial})") from exc
            err_power += float(np.sum(np.abs(est0 - syms) ** 2))
            ref_power += float(np.sum(np.abs(syms) ** 2))

        if "papr" in want:
            usable = (tx.size // rig.papr_segment_len) * rig.papr_segment_len
            segments.extend(tx[:usable].reshape(-1, rig.papr_segment_len))

        if "psd" in want or "summary" in want:
            seg = min(1024, tx.size)
            freqs, psd = psd_welch(tx, segment_len=seg)
            psd_sum = psd if psd_sum is None else psd_sum + psd
            psd_freqs = freqs

        if "ber" in want:
            for snr in sc.snr_db:
                spec = ChannelSpec(
                    taps=sc.taps(),
                    cfo_norm=sc.cfo_norm,
                    timing_offset=sc.timing_offset,
                    snr_db=snr,
                )
                rx = apply_channel(
                    tx, spec, rig.chan_n, sc.seed, trial, f"awgn[{snr:g}]"
                )
                try:
                    est = rig.recover(rx[: rig.samples_per_trial], h)
                except ValueError as exc:
                    raise ValueError(f"{exc} (snr {snr:g}, trial {trial})") from exc
                errs, total = ber_count(bits, demap_symbols(est, const))
                ber_acc[snr][0] += errs
                ber_acc[snr][1] += total

    report = MetricReport(scenario_id=sc.scenario_id, waveform=sc.waveform)
    if "papr" in want and segments:
        report.papr_ccdf = papr_ccdf(segments)
    if psd_sum is not None and psd_freqs is not None:
        psd_avg = psd_sum / sc.trials
        if "psd" in want:
            level = 10.0 * np.log10(np.maximum(psd_avg, 10.0 ** (DB_FLOOR / 10.0)))
            report.psd = list(zip(psd_freqs.tolist(), level.tolist()))
        if "summary" in want:
            report.oobe_ratio_db = oobe_ratio(psd_freqs, psd_avg, rig.in_band)
    if "ber" in want:
        report.ber = {snr: (acc[0], acc[1]) for snr, acc in ber_acc.items()}
    if "summary" in want:
        if ref_power == 0.0:
            report.evm_db = DB_FLOOR
        elif err_power == 0.0:
            report.evm_db = DB_FLOOR
        else:
            report.evm_db = max(10.0 * np.log10(err_power / ref_power), DB_FLOOR)
        report.spectral_efficiency = bits_per_trial / rig.samples_per_trial
    return report


def run_comparison(scenarios: list[Scenario]) -> list[MetricReport]:
    """Run several scenarios with a shared per-trial bit pool.

    Every scenario draws its payload from the same leading bits of the
    pool (sized to the largest demand), so metric differences between
    waveforms cannot come from different data.
    """
    rigs = [build_rig(sc) for sc in scenarios]
    pool = 0
    for sc, rig in zip(scenarios, rigs):
        const = make_constellation(sc.order)
        pool = max(pool, rig.payload_symbols * const.bits_per_symbol)
    return [run_scenario(sc, pool_bits=pool) for sc in scenarios]

"""Report serialization: the four CSV tables plus a JSON mirror.

Numbers pass through one formatter (9 significant digits) before either
emission, so the CSV and JSON files carry identical values and repeated
runs produce byte-identical output.
"""

from __future__ import annotations

import json
import os

from wavebench.metrics import MetricReport


def _fmt(value: float) -> str:
    return f"{float(value):.9g}"


def _num(value: float) -> float:
    return float(_fmt(value))


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _ber_rows(reports: list[MetricReport], trials: dict[str, int]) -> list[str]:
    rows = []
    for rep in reports:
        for snr in sorted(rep.ber):
            errs, total = rep.ber[snr]
            rows.append(
                ",".join(
                    [
                        rep.scenario_id,
                        rep.waveform,
                        _fmt(snr),
                        str(trials[rep.scenario_id]),
                        str(errs),
                        str(total),
                        _fmt(errs / total if total else 0.0),
                    ]
                )
            )
    return rows


def emit_reports(
    reports: list[MetricReport],
    out_dir: str,
    trials: dict[str, int],
    formats: tuple[str, ...] = ("csv", "json"),
) -> list[str]:
    """Write every table that has data; returns the paths written."""
    if not reports:
        raise ValueError("no reports to emit")
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    if "csv" in formats:
        ber_rows = _ber_rows(reports, trials)
        if ber_rows:
            path = os.path.join(out_dir, "ber.csv")
            header = "scenario_id,waveform,snr_db,trials,bit_errors,bits_total,ber"
            _write_lines(path, [header] + ber_rows)
            written.append(path)

        ccdf_rows = [
            f"{rep.scenario_id},{rep.waveform},{_fmt(t)},{_fmt(c)}"
            for rep in reports
            for t, c in rep.papr_ccdf
        ]
        if ccdf_rows:
            path = os.path.join(out_dir, "ccdf.csv")
            _write_lines(
                path, ["scenario_id,waveform,threshold_db,ccdf"] + ccdf_rows
            )
            written.append(path)

        psd_rows = [
            f"{rep.scenario_id},{rep.waveform},{_fmt(f)},{_fmt(p)}"
            for rep in reports
            for f, p in rep.psd
        ]
        if psd_rows:
            path = os.path.join(out_dir, "psd.csv")
            _write_lines(path, ["scenario_id,waveform,freq_norm,power_db"] + psd_rows)
            written.append(path)

        summary_rows = [
            ",".join(
                [
                    rep.scenario_id,
                    rep.waveform,
                    _fmt(rep.oobe_ratio_db),
                    _fmt(rep.evm_db),
                    _fmt(rep.spectral_efficiency),
                ]
            )
            for rep in reports
            if rep.evm_db is not None
        ]
        if summary_rows:
            path = os.path.join(out_dir, "summary.csv")
            _write_lines(
                path,
                ["scenario_id,waveform,oobe_ratio_db,evm_db,spectral_efficiency"]
                + summary_rows,
            )
            written.append(path)

    if "json" in formats:
        payload = []
        for rep in reports:
            entry: dict = {
                "scenario_id": rep.scenario_id,
                "waveform": rep.waveform,
            }
            if rep.ber:
                entry["ber"] = [
                    {
                        "snr_db": _num(snr),
                        "trials": trials[rep.scenario_id],
                        "bit_errors": rep.ber[snr][0],
                        "bits_total": rep.ber[snr][1],
                        "ber": _num(
                            rep.ber[snr][0] / rep.ber[snr][1]
                            if rep.ber[snr][1]
                            else 0.0
                        ),
                    }
                    for snr in sorted(rep.ber)
                ]
            if rep.papr_ccdf:
                entry["papr_ccdf"] = [
                    {"threshold_db": _num(t), "ccdf": _num(c)}
                    for t, c in rep.papr_ccdf
                ]
            if rep.psd:
                entry["psd"] = [
                    {"freq_norm": _num(f), "power_db": _num(p)} for f, p in rep.psd
                ]
            if rep.evm_db is not None:
                entry["oobe_ratio_db"] = _num(rep.oobe_ratio_db)
                entry["evm_db"] = _num(rep.evm_db)
                entry["spectral_efficiency"] = _num(rep.spectral_efficiency)
            payload.append(entry)
        path = os.path.join(out_dir, "report.json")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump({"reports": payload}, fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)

    return written

#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
CSV writers for experiment results. Numbers are written with a fixed format so
that identical runs produce identical files.
"""

import csv
from typing import Any, List, Sequence

from torch import Tensor


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _write_rows(path: str, header: List[str], rows: Sequence[Sequence[Any]]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)


def write_sweep_table(path: str, records: Sequence[Any]) -> None:
    r"""Write sweep records as `tau,p0_sim,...,p0_ref,...,abs_err_max`.

    Args:
        path: Output file.
        records: ExperimentRecords in sweep order.
    """
    n = records[0].recovered.numel() if records else 8
    header = (
        ["tau"]
        + [f"p{i}_sim" for i in range(n)]
        + [f"p{i}_ref" for i in range(n)]
        + ["abs_err_max"]
    )
    rows = [
        [_fmt(r.tau)]
        + [_fmt(p) for p in r.recovered.tolist()]
        + [_fmt(p) for p in r.reference.tolist()]
        + [_fmt(float(r.abs_error.max()))]
        for r in records
    ]
    _write_rows(path, header, rows)


def write_peak_table(
    path: str, frequencies_hz: Tensor, integrals: Tensor, ratios: Tensor
) -> None:
    rows = [
        [k, _fmt(f), _fmt(i), _fmt(r)]
        for k, (f, i, r) in enumerate(
            zip(frequencies_hz.tolist(), integrals.tolist(), ratios.tolist())
        )
    ]
    _write_rows(path, ["transition", "frequency_hz", "integral", "ratio"], rows)


def write_level_populations(path: str, m: Tensor, populations: Tensor) -> None:
    rows = [
        [k, _fmt(m_k), _fmt(p)]
        for k, (m_k, p) in enumerate(zip(m.tolist(), populations.tolist()))
    ]
    _write_rows(path, ["level", "m", "population"], rows)


def write_selectivity_table(
    path: str, omega1_hz: Sequence[float], deviations: Tensor
) -> None:
    rows = [[_fmt(nu), _fmt(dev)] for nu, dev in zip(omega1_hz, deviations.tolist())]
    _write_rows(path, ["omega1_hz", "rms_deviation"], rows)

"""Figure generation from persisted run artifacts (never recomputes physics).

Three figure families: space-time support/inner-product overlays for a 1D
forward run against its adjoint store, x-t (or per-frame 2D) level-placement
maps, and the accuracy/cost curves from a sweep's metrics CSV.
"""

from __future__ import annotations

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .io import (  # noqa: E402
    Frame,
    InputError,
    read_frames,
    read_levels,
    read_metrics,
    read_snapshots,
    sample_frame_on_grid,
    sample_snapshot,
)

LEVEL_COLORS = {1: "white", 2: "grey", 3: "green", 4: "red", 5: "blue",
                6: "purple", 7: "orange"}
SERIES_STYLE = {"difference": ("tab:blue", "o"),
                "error": ("tab:red", "s"),
                "adjoint-mag": ("tab:green", "^"),
                "adjoint-err": ("black", "d")}
FIGSIZE = (10.0, 4.5)
DPI = 120


def _save(fig, out_path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(out_path)), exist_ok=True)
    fig.savefig(out_path, dpi=DPI)
    plt.close(fig)


def render_spacetime(run_fwd: str, run_adj: str, out_path: str,
                     thresholds: tuple[float, float, float] = (1e-2, 1e-2, 1e-2),
                     grid_points: int = 700) -> dict:
    """Left: regions where the 1-norms of the state (blue) and the adjoint
    (red) exceed their thresholds; right: where |qhat . q| exceeds its
    threshold, with time remaining mapped onto forward time."""
    if any(t <= 0 for t in thresholds):
        raise InputError("thresholds must be positive")
    frames = read_frames(run_fwd)
    if frames[0].ndim != 1:
        raise InputError("space-time overlays need a 1D forward run")
    snaps = read_snapshots(run_adj)
    if len(snaps[0].counts) != 1:
        raise InputError("space-time overlays need a 1D adjoint store")
    xlo, xhi = frames[0].domain_lo[0], frames[0].domain_hi[0]
    t_f = frames[-1].time
    x = np.linspace(xlo, xhi, grid_points)
    times = np.array([fr.time for fr in frames])

    fwd_mask = np.zeros((times.size, x.size), dtype=bool)
    adj_mask = np.zeros_like(fwd_mask)
    ip_mask = np.zeros_like(fwd_mask)
    for k, fr in enumerate(frames):
        q = sample_frame_on_grid(fr, x)
        t_rem = t_f - fr.time
        snap = min(snaps, key=lambda s: abs(s.t_remaining - t_rem))
        qhat = sample_snapshot(snap, x)
        fwd_mask[k] = np.abs(q).sum(axis=0) >= thresholds[0]
        adj_mask[k] = np.abs(qhat).sum(axis=0) >= thresholds[1]
        ip_mask[k] = np.abs((qhat * q).sum(axis=0)) >= thresholds[2]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=FIGSIZE, sharey=True)
    extent = (xlo, xhi, times[0], times[-1])
    for mask, color, ax in ((fwd_mask, (0.2, 0.3, 0.9, 0.75), ax1),
                            (adj_mask, (0.9, 0.15, 0.15, 0.6), ax1),
                            (ip_mask, (0.1, 0.6, 0.2, 0.9), ax2)):
        rgba = np.zeros(mask.shape + (4,))
        rgba[mask] = color
        ax.imshow(rgba, origin="lower", extent=extent, aspect="auto",
                  interpolation="nearest")
    ax1.set_title("state (blue) and adjoint (red) support")
    ax2.set_title("|inner product| above tolerance")
    for ax in (ax1, ax2):
        ax.set_xlabel("x")
    ax1.set_ylabel("t")
    _save(fig, out_path)
    return {"outputs": [out_path],
            "overlap_cells": int(ip_mask.sum()),
            "times": times.tolist()}


def render_levels(run_dir: str, out_path: str) -> dict:
    """1D: x-t bars of patch extents colored by level (level 1 omitted).
    2D: one patch-rectangle map per output time."""
    frames = read_levels(run_dir)
    if frames[0].ndim == 1:
        return _render_levels_1d(frames, out_path)
    return _render_levels_2d(frames, out_path)


def _render_levels_1d(frames: list[Frame], out_path: str) -> dict:
    times = [fr.time for fr in frames]
    edges = np.concatenate([[times[0]], times]) if len(times) > 1 else None
    fig, ax = plt.subplots(figsize=(6.0, 4.8))
    max_level = max(fr.max_level() for fr in frames)
    drawn = 0
    for k, fr in enumerate(frames):
        t_lo = times[k - 1] if k > 0 else times[0]
        t_hi = times[k]
        if t_hi <= t_lo:
            t_hi = t_lo + (times[-1] - times[0] or 1.0) / max(len(times), 1)
        for p in sorted(fr.patches, key=lambda p: p.level):
            if p.level == 1:
                continue  # level 1 spans the whole domain
            lo, hi = p.extent(fr.domain_lo, 0)
            ax.fill_between([lo, hi], t_lo, t_hi,
                            color=LEVEL_COLORS.get(p.level, "black"),
                            linewidth=0)
            drawn += 1
    ax.set_xlim(frames[0].domain_lo[0], frames[0].domain_hi[0])
    ax.set_ylim(times[0], times[-1] if times[-1] > times[0] else times[0] + 1)
    ax.set_xlabel("x")
    ax.set_ylabel("t")
    handles = [plt.Rectangle((0, 0), 1, 1, color=LEVEL_COLORS.get(L, "black"))
               for L in range(2, max_level + 1)]
    if handles:
        ax.legend(handles, [f"level {L}" for L in range(2, max_level + 1)],
                  loc="upper right", fontsize=8)
    _save(fig, out_path)
    return {"outputs": [out_path], "patches_drawn": drawn}


def _render_levels_2d(frames: list[Frame], out_path: str) -> dict:
    stem, ext = os.path.splitext(out_path)
    ext = ext or ".png"
    outputs = []
    for k, fr in enumerate(frames):
        fig, ax = plt.subplots(figsize=(5.4, 4.6))
        ax.set_facecolor(LEVEL_COLORS[1])
        for p in sorted(fr.patches, key=lambda p: p.level):
            if p.level == 1:
                continue
            x0, x1 = p.extent(fr.domain_lo, 0)
            y0, y1 = p.extent(fr.domain_lo, 1)
            ax.add_patch(plt.Rectangle(
                (x0, y0), x1 - x0, y1 - y0,
                facecolor=LEVEL_COLORS.get(p.level, "black"),
                edgecolor="k", linewidth=0.3))
        ax.set_xlim(fr.domain_lo[0], fr.domain_hi[0])
        ax.set_ylim(fr.domain_lo[1], fr.domain_hi[1])
        ax.set_title(f"t = {fr.time:g}")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        path = f"{stem}_{k:04d}{ext}"
        _save(fig, path)
        outputs.append(path)
    return {"outputs": outputs, "frames": len(frames)}


METRIC_KINDS = {
    "tol-vs-err": ("tol", "abs_err", "flagging tolerance", "|J - J_ref|"),
    "time-vs-err": ("abs_err", "t_total", "|J - J_ref|", "CPU seconds"),
    "cells-vs-err": ("abs_err", "cell_updates", "|J - J_ref|",
                     "cell updates"),
}


def render_metrics(csv_path: str, kind: str, out_path: str) -> dict:
    """Log-log accuracy/cost curves, one series per flagging method."""
    if kind not in METRIC_KINDS:
        raise InputError(f"unknown figure kind {kind!r}; "
                         f"choose from {sorted(METRIC_KINDS)}")
    rows = read_metrics(csv_path)
    xkey, ykey, xlabel, ylabel = METRIC_KINDS[kind]
    series: dict[str, list[tuple[float, float]]] = {}
    for row in rows:
        xv = row.get(xkey)
        yv = (row["t_advance"] + row["t_regrid"] + row["t_inner"]
              + row["t_io"]) if ykey == "t_total" else row.get(ykey)
        if xv is None or yv is None or not np.isfinite([xv, yv]).all() \
                or xv <= 0 or yv <= 0:
            continue
        series.setdefault(row["method"], []).append((float(xv), float(yv)))

    fig, ax = plt.subplots(figsize=(5.6, 4.6))
    for method in sorted(series):
        pts = sorted(series[method])
        color, marker = SERIES_STYLE.get(method, ("tab:gray", "x"))
        ax.loglog([p[0] for p in pts], [p[1] for p in pts], marker=marker,
                  color=color, label=method)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if series:
        ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    _save(fig, out_path)
    return {"outputs": [out_path], "series": sorted(series),
            "points": {m: len(v) for m, v in series.items()}}

"""Readers for the solver's on-disk run artifacts.

This package never imports the solver; everything is reconstructed from the
documented text formats: frame files (`domain` header plus per-patch blocks),
`.levels` sidecars, adjoint snapshot stores, and the fixed-column metrics CSV.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import numpy as np

METRICS_COLUMNS = ("method", "tol", "J", "J_ref", "abs_err", "cell_updates",
                   "t_advance", "t_regrid", "t_inner", "t_io", "peak_patches")


class InputError(ValueError):
    """A run artifact is missing or malformed."""


@dataclass(frozen=True)
class PatchData:
    level: int
    index_lo: tuple[int, ...]
    index_hi: tuple[int, ...]
    spacing: tuple[float, ...]
    time: float
    values: np.ndarray | None  # (meqn, nx) / (meqn, ny, nx); None in .levels

    @property
    def ndim(self) -> int:
        return len(self.index_lo)

    def extent(self, domain_lo: tuple[float, ...], dim: int
               ) -> tuple[float, float]:
        return (domain_lo[dim] + self.index_lo[dim] * self.spacing[dim],
                domain_lo[dim] + (self.index_hi[dim] + 1) * self.spacing[dim])

    def centers(self, domain_lo: tuple[float, ...], dim: int) -> np.ndarray:
        idx = np.arange(self.index_lo[dim], self.index_hi[dim] + 1)
        return domain_lo[dim] + (idx + 0.5) * self.spacing[dim]


@dataclass(frozen=True)
class Frame:
    time: float
    domain_lo: tuple[float, ...]
    domain_hi: tuple[float, ...]
    patches: tuple[PatchData, ...]

    @property
    def ndim(self) -> int:
        return len(self.domain_lo)

    def max_level(self) -> int:
        return max((p.level for p in self.patches), default=1)


def _parse_patch_header(parts: list[str]):
    # patch <level> <ilo> <ihi> [<jlo> <jhi>] <dx> [<dy>] <t>
    level = int(parts[1])
    rest = parts[2:]
    if len(rest) == 4:  # 1D
        (ilo, ihi), spacing, t = (int(rest[0]), int(rest[1])), \
            (float(rest[2]),), float(rest[3])
        lo, hi = (ilo,), (ihi,)
    elif len(rest) == 7:  # 2D
        lo = (int(rest[0]), int(rest[2]))
        hi = (int(rest[1]), int(rest[3]))
        spacing = (float(rest[4]), float(rest[5]))
        t = float(rest[6])
    else:
        raise InputError(f"malformed patch header: {' '.join(parts)}")
    return level, lo, hi, spacing, t


def _read_frame_file(path: str, with_values: bool) -> Frame:
    with open(path) as f:
        head = f.readline().split()
        if not head or head[0] != "domain":
            raise InputError(f"{path}: missing domain header")
        vals = [float(v) for v in head[1:]]
        if len(vals) == 2:
            dom_lo, dom_hi = (vals[0],), (vals[1],)
        elif len(vals) == 4:
            dom_lo, dom_hi = (vals[0], vals[2]), (vals[1], vals[3])
        else:
            raise InputError(f"{path}: malformed domain header")
        patches = []
        time = 0.0
        for line in f:
            parts = line.split()
            if not parts:
                continue
            if parts[0] != "patch":
                raise InputError(f"{path}: unexpected line {line!r}")
            level, lo, hi, spacing, time = _parse_patch_header(parts)
            shape = tuple(b - a + 1 for a, b in zip(lo, hi))
            values = None
            if with_values:
                ncell = int(np.prod(shape))
                rows = [f.readline().split() for _ in range(ncell)]
                data = np.array(rows, dtype=float)
                meqn = data.shape[1]
                if len(shape) == 1:
                    values = data.T.copy()
                else:
                    values = data.T.reshape(meqn, shape[1], shape[0])
            patches.append(PatchData(level, lo, hi, spacing, time, values))
    return Frame(time, dom_lo, dom_hi, tuple(patches))


def read_frames(run_dir: str, with_values: bool = True) -> list[Frame]:
    """All frames of a run, ordered by time."""
    fdir = os.path.join(run_dir, "frames")
    if not os.path.isdir(fdir):
        raise InputError(f"no frames directory under {run_dir}")
    names = sorted(n for n in os.listdir(fdir)
                   if n.startswith("frame_") and n.endswith(
                       ".txt" if with_values else ".levels"))
    if not names:
        raise InputError(f"no frame files under {fdir}")
    frames = [_read_frame_file(os.path.join(fdir, n), with_values)
              for n in names]
    frames.sort(key=lambda fr: fr.time)
    return frames


def read_levels(run_dir: str) -> list[Frame]:
    return read_frames(run_dir, with_values=False)


@dataclass(frozen=True)
class Snapshot:
    t_remaining: float
    origin: tuple[float, ...]
    spacing: tuple[float, ...]
    counts: tuple[int, ...]
    values: np.ndarray


def read_snapshots(adjoint_dir: str) -> list[Snapshot]:
    index = os.path.join(adjoint_dir, "snapshots.index")
    if not os.path.exists(index):
        raise InputError(f"no snapshot index at {index}")
    out = []
    with open(index) as f:
        names = [line.split()[1] for line in f if line.strip()]
    for name in names:
        path = os.path.join(adjoint_dir, name)
        with open(path) as f:
            t_rem = float(f.readline().split()[1])
            g = f.readline().split()[1:]
            meqn = int(f.readline().split()[1])
            if len(g) == 3:
                origin, spacing = (float(g[0]),), (float(g[1]),)
                counts = (int(g[2]),)
            else:
                origin = (float(g[0]), float(g[3]))
                spacing = (float(g[1]), float(g[4]))
                counts = (int(g[2]), int(g[5]))
            data = np.loadtxt(f, ndmin=2)
        if len(counts) == 1:
            values = data.T.copy()
        else:
            values = data.T.reshape(meqn, counts[1], counts[0])
        out.append(Snapshot(t_rem, origin, spacing, counts, values))
    out.sort(key=lambda s: s.t_remaining)
    return out


def read_metrics(csv_path: str) -> list[dict]:
    """Rows of the sweep table; numeric fields become floats."""
    if not os.path.exists(csv_path):
        raise InputError(f"no metrics CSV at {csv_path}")
    with open(csv_path) as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None:
            raise InputError(f"{csv_path}: empty file")
        missing = [c for c in METRICS_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise InputError(
                f"{csv_path}: missing columns {', '.join(missing)}")
        rows = []
        for raw in reader:
            row = dict(raw)
            for key in METRICS_COLUMNS[1:]:
                try:
                    row[key] = float(raw[key])
                except (TypeError, ValueError):
                    row[key] = float("nan")
            rows.append(row)
    return rows


def sample_frame_on_grid(frame: Frame, x: np.ndarray) -> np.ndarray:
    """Finest-available state of a 1D frame sampled at points x
    (piecewise-constant within cells)."""
    if frame.ndim != 1:
        raise InputError("1D frame expected")
    meqn = frame.patches[0].values.shape[0]
    out = np.zeros((meqn, x.size))
    filled_level = np.zeros(x.size, dtype=int)
    for p in sorted(frame.patches, key=lambda p: p.level):
        lo, hi = p.extent(frame.domain_lo, 0)
        inside = (x >= lo) & (x < hi)
        if not inside.any():
            continue
        idx = np.clip(((x[inside] - lo) / p.spacing[0]).astype(int), 0,
                      p.index_hi[0] - p.index_lo[0])
        out[:, inside] = p.values[:, idx]
        filled_level[inside] = p.level
    return out


def sample_snapshot(snap: Snapshot, x: np.ndarray) -> np.ndarray:
    """Linear interpolation of a 1D snapshot at points x (clamped)."""
    n = snap.counts[0]
    f = np.clip((x - snap.origin[0]) / snap.spacing[0] - 0.5, 0.0, n - 1.0)
    i0 = np.minimum(f.astype(int), n - 2) if n > 1 else np.zeros_like(f, int)
    w = f - i0
    return (1.0 - w) * snap.values[:, i0] + w * snap.values[:, i0 + 1]

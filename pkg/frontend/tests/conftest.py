"""Synthetic run-artifact fixtures written in the documented text formats."""

import os

import numpy as np
import pytest


def write_frame_pair(fdir, k, t, domain, patches):
    """patches: list of (level, lo, hi, spacing, values(meqn, ...))."""
    os.makedirs(fdir, exist_ok=True)
    dom_line = "domain " + " ".join(
        repr(float(v)) for pair in zip(*domain) for v in pair)
    frame_path = os.path.join(fdir, f"frame_{k:04d}.txt")
    levels_path = os.path.join(fdir, f"frame_{k:04d}.levels")
    with open(frame_path, "w") as ff, open(levels_path, "w") as lf:
        ff.write(dom_line + "\n")
        lf.write(dom_line + "\n")
        for level, lo, hi, spacing, values in patches:
            cols = [str(level), str(lo[0]), str(hi[0])]
            if len(lo) == 2:
                cols += [str(lo[1]), str(hi[1])]
            cols += [repr(float(d)) for d in spacing]
            cols.append(repr(float(t)))
            line = "patch " + " ".join(cols)
            ff.write(line + "\n")
            lf.write(line + "\n")
            flat = values.reshape(values.shape[0], -1)
            for idx in range(flat.shape[1]):
                ff.write(" ".join(repr(float(v))
                                  for v in flat[:, idx]) + "\n")


def write_snapshots(adir, snaps):
    """snaps: list of (t_remaining, origin, spacing, counts, values)."""
    os.makedirs(adir, exist_ok=True)
    lines = []
    for k, (t_rem, origin, spacing, counts, values) in enumerate(snaps):
        name = f"snap_{k:04d}.txt"
        with open(os.path.join(adir, name), "w") as f:
            f.write(f"t_remaining {t_rem!r}\n")
            grid = [origin[0], spacing[0], counts[0]]
            if len(counts) == 2:
                grid += [origin[1], spacing[1], counts[1]]
            f.write("grid " + " ".join(
                repr(g) if isinstance(g, float) else str(g)
                for g in grid) + "\n")
            f.write(f"meqn {values.shape[0]}\n")
            flat = values.reshape(values.shape[0], -1)
            for idx in range(flat.shape[1]):
                f.write(" ".join(repr(float(v))
                                 for v in flat[:, idx]) + "\n")
        lines.append(f"{t_rem!r} {name}")
    with open(os.path.join(adir, "snapshots.index"), "w") as f:
        f.write("\n".join(lines) + "\n")


@pytest.fixture
def run_1d(tmp_path):
    """Small 1D forward run + adjoint store with overlapping supports."""
    run = tmp_path / "fwd"
    adj = tmp_path / "adjoint"
    n = 40
    dx = 1.0 / n
    xs = (np.arange(n) + 0.5) * dx
    for k, t in enumerate((0.0, 0.5, 1.0)):
        q = np.zeros((2, n))
        q[0] = np.exp(-80.0 * (xs - (0.2 + 0.5 * t)) ** 2)
        patches = [(1, (0,), (n - 1,), (dx,), q)]
        if 0.2 < t < 0.8:
            fine = np.zeros((2, 20))
            fine[0] = 0.5
            patches.append((2, (20,), (39,), (dx / 2,), fine))
        write_frame_pair(str(run / "frames"), k, t, ((0.0,), (1.0,)), patches)
    snaps = []
    for t_rem in (0.0, 0.5, 1.0):
        v = np.zeros((2, n))
        v[0] = np.exp(-80.0 * (xs - (0.7 - 0.5 * t_rem)) ** 2)
        snaps.append((t_rem, (0.0,), (dx,), (n,), v))
    write_snapshots(str(adj), snaps)
    return str(run), str(adj)


@pytest.fixture
def run_2d(tmp_path):
    run = tmp_path / "fwd2d"
    n = 10
    d = (1.0 / n, 2.0 / n)
    for k, t in enumerate((0.0, 1.0)):
        q = np.zeros((3, n, n))
        patches = [(1, (0, 0), (n - 1, n - 1), d, q)]
        if k == 1:
            patches.append((2, (4, 4), (11, 13), (d[0] / 2, d[1] / 2),
                            np.ones((3, 10, 8))))
        write_frame_pair(str(run / "frames"), k, t,
                         ((0.0, 0.0), (1.0, 2.0)), patches)
    return str(run)


@pytest.fixture
def metrics_csv(tmp_path):
    path = tmp_path / "metrics.csv"
    header = ("method,tol,J,J_ref,abs_err,cell_updates,"
              "t_advance,t_regrid,t_inner,t_io,peak_patches")
    rows = [
        "difference,0.03,0.101,0.1,0.001,2000000,2.0,0.5,0.0,0.1,8",
        "difference,0.003,0.1001,0.1,0.0001,8000000,8.0,1.5,0.0,0.1,12",
        "adjoint-mag,0.03,0.1005,0.1,0.0005,900000,1.0,0.4,0.2,0.1,5",
        "adjoint-err,0.001,0.10005,0.1,5e-05,1500000,1.8,0.9,0.3,0.1,6",
    ]
    path.write_text(header + "\n" + "\n".join(rows) + "\n")
    return str(path)

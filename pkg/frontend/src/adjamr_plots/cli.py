"""Figure CLI.

    plots spacetime   --run <forward-dir> --run2 <adjoint-dir> --out f.png
                      [--thresholds a,b,c]
    plots levels      --run <run-dir> --out f.png
    plots tol-vs-err  --run <dir-with-metrics.csv | csv path> --out f.png
    plots time-vs-err ...
    plots cells-vs-err ...
"""

from __future__ import annotations

import argparse
import os
import sys

from .figures import METRIC_KINDS, render_levels, render_metrics, render_spacetime
from .io import InputError

KINDS = ("spacetime", "levels") + tuple(METRIC_KINDS)


def _metrics_path(run: str) -> str:
    return run if run.endswith(".csv") else os.path.join(run, "metrics.csv")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plots", description="Regenerate figures from run artifacts")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--run", required=True,
                        help="run directory (or metrics CSV path)")
    parser.add_argument("--run2", default=None,
                        help="adjoint store directory (spacetime only)")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--thresholds", default="1e-2,1e-2,1e-2",
                        help="state,adjoint,inner-product thresholds")
    args = parser.parse_args(argv)

    try:
        if args.kind == "spacetime":
            if args.run2 is None:
                raise InputError("spacetime needs --run2 <adjoint-dir>")
            thresholds = tuple(float(v) for v in args.thresholds.split(","))
            if len(thresholds) != 3:
                raise InputError("--thresholds needs three values")
            info = render_spacetime(args.run, args.run2, args.out, thresholds)
        elif args.kind == "levels":
            info = render_levels(args.run, args.out)
        else:
            info = render_metrics(_metrics_path(args.run), args.kind,
                                  args.out)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    for path in info["outputs"]:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())

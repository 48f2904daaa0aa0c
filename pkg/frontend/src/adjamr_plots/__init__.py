"""Figure regeneration for solver run artifacts; reads files, never physics."""

from .figures import render_levels, render_metrics, render_spacetime
from .io import InputError, read_frames, read_levels, read_metrics, read_snapshots

__version__ = "0.1.0"

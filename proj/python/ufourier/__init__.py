"""Universal Fourier series toolkit: Fejer blocks, spectral schedules, universal
series builders, divergence diagnostics and exact Cantor-set geometry."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import build_series as _build_series


def build(spec):
    """Build a series from a dict (or JSON string) in the CLI spec format."""
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return _build_series(spec)


__all__ = [name for name in dir() if not name.startswith("_")]

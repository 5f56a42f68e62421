"""Reading and writing sampled maps as numpy ``.npz`` archives of phases in turns."""

import logging
from pathlib import Path

import numpy as np

from zd_rigidity.analytic.vankampen import SampledTorusMap

logger = logging.getLogger(__name__)

PHASES_KEY = "phases"


def save_sampled_map(path: str | Path, f: SampledTorusMap) -> Path:
    """Write the wrapped phases of f to path and return the resolved path."""
    target = Path(path)
    np.savez_compressed(target, **{PHASES_KEY: f.phases()})
    # numpy appends the suffix when it is missing
    written = target if target.suffix == ".npz" else target.with_name(target.name + ".npz")
    logger.debug("Saved %s samples to %s", f.shape, written)
    return written


def load_sampled_map(path: str | Path) -> SampledTorusMap:
    """Load a map saved by save_sampled_map.

    Raises:
        FileNotFoundError: If the archive does not exist
        KeyError: If the archive holds no phases array
    """
    with np.load(Path(path)) as archive:
        if PHASES_KEY not in archive.files:
            raise KeyError(f"{path} holds no '{PHASES_KEY}' array")
        phases = archive[PHASES_KEY]
    return SampledTorusMap.from_phases(phases)


__all__ = ["load_sampled_map", "save_sampled_map"]

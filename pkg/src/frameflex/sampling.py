"""Uniform temporal segment sampling of clip frames."""
from __future__ import annotations

import numpy as np


def uniform_sample(total_frames: int, target: int, rng: np.random.Generator | None = None) -> np.ndarray:
    """Pick `target` frame indices out of `total_frames` by segment sampling.

    The clip is divided into `target` equal segments. Without an rng the
    center index of each segment is taken (deterministic eval variant);
    with an rng one index per segment is drawn uniformly (training
    variant). Indices are always nondecreasing. `target > total_frames`
    is allowed and yields repeated indices.
    """
    if total_frames < 1 or target < 1:
        raise ValueError(f"need total_frames >= 1 and target >= 1, got {total_frames}, {target}")
    if rng is None:
        idx = ((np.arange(target) + 0.5) * total_frames / target).astype(np.int64)
    else:
        bounds = (np.arange(target + 1) * total_frames / target).astype(np.int64)
        starts, ends = bounds[:-1], bounds[1:]
        spans = np.maximum(ends - starts, 1)
        idx = starts + rng.integers(0, spans)
    return np.minimum(idx, total_frames - 1)

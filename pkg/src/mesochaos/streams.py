"""Counter-based random streams shared by every Monte Carlo driver.

One master seed per run; the stream for trial ``i`` is keyed by
``(seed, i)`` through the Philox counter-based generator, so a batch of
trials gives bit-identical draws whether the trials run serially, in a
different order, or across workers.
"""

import numpy as np

__all__ = ["trial_rng", "master_rng"]


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent generator for trial ``index`` of run ``seed``."""
    if index < 0:
        raise ValueError("trial index must be non-negative")
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(index)],
                   dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def master_rng(seed: int) -> np.random.Generator:
    """Generator for run-level (not per-trial) randomness."""
    return trial_rng(seed, 0)

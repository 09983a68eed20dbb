"""Small numpy helpers shared across modules."""

import numpy as np


def multi_arange(starts, stops):
    """Concatenation of arange(s, e) for every (s, e) pair; empty ranges allowed."""
    starts = np.asarray(starts, dtype=np.int64)
    stops = np.asarray(stops, dtype=np.int64)
    counts = stops - starts
    nonzero = counts > 0
    if not nonzero.all():
        starts, stops, counts = starts[nonzero], stops[nonzero], counts[nonzero]
    if starts.size == 0:
        return np.empty(0, dtype=np.int64)
    out = np.ones(int(counts.sum()), dtype=np.int64)
    out[0] = starts[0]
    cum = np.cumsum(counts[:-1])
    out[cum] = starts[1:] - stops[:-1] + 1
    return np.cumsum(out)

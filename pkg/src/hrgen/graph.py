"""Compact undirected simple graph.

Adjacency is stored CSR-style: `indices[indptr[v]:indptr[v+1]]` is the sorted
neighbor list of v. Construction rejects self-loops and parallel edges, so
every instance is simple and structurally symmetric by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Graph:
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def n(self):
        return self.indptr.size - 1

    @property
    def m(self):
        return self.indices.size // 2

    def degrees(self):
        return np.diff(self.indptr)

    def neighbors(self, v):
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u, v):
        nbr = self.neighbors(u)
        i = np.searchsorted(nbr, v)
        return i < nbr.size and nbr[i] == v

    def edge_array(self):
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        fwd = self.indices > rows
        return np.column_stack((rows[fwd], self.indices[fwd]))

    @classmethod
    def from_edge_arrays(cls, n, u, v):
        """Build from parallel endpoint arrays, one entry per undirected edge
        (either orientation). Raises ValueError on self-loops, duplicate
        edges, or endpoints outside [0, n)."""
        n = int(n)
        if n < 0:
            raise ValueError("n must be nonnegative")
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape or u.ndim != 1:
            raise ValueError("endpoint arrays must be 1-d and of equal length")
        if u.size:
            if min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n:
                raise ValueError("vertex id outside [0, n)")
            if (u == v).any():
                raise ValueError("self-loops are not allowed")
        src = np.concatenate((u, v))
        dst = np.concatenate((v, u))
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        if src.size:
            dup = (src[1:] == src[:-1]) & (dst[1:] == dst[:-1])
            if dup.any():
                raise ValueError("duplicate edge")
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(indptr=indptr, indices=dst)

    @classmethod
    def from_edges(cls, n, edges):
        """Build from an iterable of (u, v) pairs; convenience for tests."""
        pairs = list(edges)
        if not pairs:
            return cls.from_edge_arrays(n, [], [])
        arr = np.asarray(pairs, dtype=np.int64)
        return cls.from_edge_arrays(n, arr[:, 0], arr[:, 1])

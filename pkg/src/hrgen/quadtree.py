"""Polar quadtree over the unit disk.

Cells are annulus sectors [min_phi, max_phi) x [min_r, max_r) in polar
coordinates of the Poincare disk. An angular split halves the angle range;
a radial split is placed so that both shells carry equal probability mass
under the sinh radial density with growth parameter alpha (the split radius
is computed in native hyperbolic coordinates and mapped back to the disk).
With points drawn from that density every child of a cell is equally likely,
which keeps the tree balanced and query cost subquadratic.

Range queries take a Euclidean circle and return the stored points strictly
inside it. Internally the tree is flattened into packed arrays (cell bounds,
first-child links, and per-subtree point slices in depth-first order) so that
many queries can be processed level-synchronously with vectorized pruning:
cells entirely inside a query circle contribute their whole point slice
without inspection, cells entirely outside are dropped, and only boundary
cells descend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfBoundsError
from .geometry import (
    TWO_PI,
    EuclideanCircle,
    PoincarePoint,
    to_native_radius,
    to_poincare_radius,
)
from .nputil import multi_arange

DEFAULT_LEAF_CAPACITY = 128

# Hard stop for the split cascade; with equal-mass splits a tree this deep
# would need ~4^64 points, so only degenerate inputs (many identical points)
# ever reach it.
MAX_DEPTH = 64

# Squared cell distance bounds are rounded outward by this much so float
# rounding can only misclassify borderline cells toward "intersects", where
# the exact per-point test runs anyway. Coordinates live in [-1, 1]; the
# slack sits several orders above accumulated rounding error yet is invisible
# to queries.
_BOUNDS_SLACK_SQ = 5e-12

# Angular candidate windows are widened by this much (radians) so that the
# window can never round away a true hit; arccos amplifies input rounding to
# ~1e-8 near +-1, so this pad dominates it comfortably.
_WINDOW_PAD = 1e-6

# Leaf scans materialize one candidate row per (query, point) pair; pairs are
# consumed in blocks of at most this many candidates to bound peak memory.
_SCAN_BLOCK = 2_000_000


def splitting_radius(min_r_native, max_r_native, alpha):
    """Radius cutting the shell [min_r, max_r] (native coordinates) into two
    shells of equal probability mass under the sinh radial density.

    Solves cosh(a*r) = (cosh(a*min) + cosh(a*max)) / 2 for r.
    """
    if not 0.0 <= min_r_native < max_r_native:
        raise ValueError("need 0 <= min_r < max_r")
    if not alpha > 0.0:
        raise ValueError("alpha must be positive")
    mean = (math.cosh(alpha * max_r_native) + math.cosh(alpha * min_r_native)) / 2.0
    return math.acosh(mean) / alpha


@dataclass(frozen=True)
class CellBounds:
    """Annulus sector [min_phi, max_phi) x [min_r, max_r), Poincare radii."""

    min_phi: float
    max_phi: float
    min_r: float
    max_r: float

    def contains(self, point: PoincarePoint) -> bool:
        return (self.min_phi <= point.phi < self.max_phi) and (
            self.min_r <= point.r < self.max_r
        )


def _min_dist_sq(min_phi, max_phi, min_r, max_r, c_phi, c_r):
    """Conservative squared Euclidean distance from point (c_phi, c_r) to the
    annulus sector, lowered by a slack so rounding errs toward "intersects";
    vectorized over broadcastable arrays.

    Works on cosines of angular offsets throughout: cos(a - b) equals the
    cosine of the wrapped angular distance, so no reduction mod 2*pi is
    needed, and staying in squared distances avoids sqrt entirely.
    """
    cos1 = np.cos(c_phi - min_phi)
    cos2 = np.cos(c_phi - max_phi)
    inside = (min_phi <= c_phi) & (c_phi < max_phi)

    # Nearest point: radially aligned when the query angle lies in the sector,
    # else on the closer radial edge segment (law of cosines, clamped).
    cos_near = np.maximum(cos1, cos2)
    t = np.clip(c_r * cos_near, min_r, max_r)
    edge_sq = c_r * c_r + t * t - 2.0 * c_r * t * cos_near
    radial = np.maximum(np.maximum(min_r - c_r, c_r - max_r), 0.0)
    dmin_sq = np.where(inside, radial * radial, edge_sq)
    return dmin_sq - _BOUNDS_SLACK_SQ


def _max_dist_sq(min_phi, max_phi, min_r, max_r, c_phi, c_r):
    """Conservative squared Euclidean distance to the farthest point of the
    annulus sector, raised by a slack; vectorized like `_min_dist_sq`.

    The farthest point sits on a bounding arc at the largest angular offset,
    which is pi whenever the antipode of the query angle falls in the sector.
    The inner arc can be the far one when the offset is small.
    """
    cos1 = np.cos(c_phi - min_phi)
    cos2 = np.cos(c_phi - max_phi)
    anti = np.where(c_phi >= math.pi, c_phi - math.pi, c_phi + math.pi)
    anti_inside = (min_phi <= anti) & (anti <= max_phi)
    cos_far = np.where(anti_inside, -1.0, np.minimum(cos1, cos2))
    far_outer = c_r * c_r + max_r * max_r - 2.0 * c_r * max_r * cos_far
    far_inner = c_r * c_r + min_r * min_r - 2.0 * c_r * min_r * cos_far
    dmax_sq = np.maximum(far_outer, far_inner)
    return dmax_sq + _BOUNDS_SLACK_SQ


def _distance_bounds_sq(min_phi, max_phi, min_r, max_r, c_phi, c_r):
    """(dmin^2, dmax^2) bounds from a point to an annulus sector."""
    args = (min_phi, max_phi, min_r, max_r, c_phi, c_r)
    return _min_dist_sq(*args), _max_dist_sq(*args)


def cell_circle_relation(bounds: CellBounds, circle: EuclideanCircle) -> str:
    """Classify a cell against a circle: "disjoint", "contained" (cell fully
    inside the open disk), or "intersects". Borderline cases resolve to
    "intersects", never falsely to the other two."""
    dmin_sq, dmax_sq = _distance_bounds_sq(
        bounds.min_phi,
        bounds.max_phi,
        bounds.min_r,
        bounds.max_r,
        circle.center.phi,
        circle.center.r,
    )
    rad_sq = circle.radius * circle.radius
    if dmin_sq >= rad_sq:
        return "disjoint"
    if dmax_sq < rad_sq:
        return "contained"
    return "intersects"


def _ragged_searchsorted(arr, starts, stops, values, right=False):
    """Per-slice searchsorted: position of `values[i]` within the sorted
    slice arr[starts[i]:stops[i]], vectorized over slices."""
    lo = starts.astype(np.int64, copy=True)
    hi = stops.astype(np.int64, copy=True)
    if arr.size == 0 or starts.size == 0:
        return lo
    span = int(np.max(stops - starts))
    top = arr.size - 1
    for _ in range(span.bit_length()):
        mid = (lo + hi) >> 1
        probe = arr[np.minimum(mid, top)]
        descend = probe <= values if right else probe < values
        active = lo < hi
        lo = np.where(active & descend, mid + 1, lo)
        hi = np.where(active & ~descend, mid, hi)
    return lo


class _Node:
    """Tree node. Leaves hold points as a (phi, r, id) triple of parallel
    lists (mutable) or arrays (from bulk build); after packing, leaves
    reference a slice of the tree-level arrays instead."""

    __slots__ = (
        "min_phi",
        "max_phi",
        "min_r",
        "max_r",
        "depth",
        "size",
        "children",
        "mid_phi",
        "mid_r",
        "pts",
        "start",
        "stop",
    )

    def __init__(self, min_phi, max_phi, min_r, max_r, depth):
        self.min_phi = min_phi
        self.max_phi = max_phi
        self.min_r = min_r
        self.max_r = max_r
        self.depth = depth
        self.size = 0
        self.children = None
        self.mid_phi = None
        self.mid_r = None
        self.pts = ([], [], [])
        self.start = 0
        self.stop = 0

    @property
    def is_leaf(self):
        return self.children is None

    @property
    def bounds(self):
        return CellBounds(self.min_phi, self.max_phi, self.min_r, self.max_r)

    def child_index(self, phi, r):
        return (1 if phi >= self.mid_phi else 0) + (2 if r >= self.mid_r else 0)


class _PackedTree:
    """Array-of-struct-of-arrays view of the tree used by the query kernel.

    Nodes are numbered in breadth-first order with the four children of an
    inner node consecutive (child0 holds the first child's index, -1 for
    leaves). Points are laid out in depth-first order so every subtree owns
    the contiguous slice [start, stop)."""

    __slots__ = (
        "min_phi",
        "max_phi",
        "min_r",
        "max_r",
        "child0",
        "start",
        "stop",
        "l_rmin",
        "l_rmax",
        "p_phi",
        "p_r",
        "p_id",
        "p_x",
        "p_y",
    )


class PolarQuadtree:
    """Point index over polar cells of the Poincare disk.

    Points may arrive one at a time (`insert`) or all at once (`build`); both
    produce the identical tree structure because a cell is split exactly when
    its region holds more than `capacity` points.
    """

    def __init__(self, alpha, max_r, capacity=DEFAULT_LEAF_CAPACITY):
        if not alpha > 0.0:
            raise ValueError("alpha must be positive")
        if not 0.0 < max_r < 1.0:
            raise ValueError("max_r must be in (0, 1)")
        capacity = int(capacity)
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.alpha = float(alpha)
        self.max_r = float(max_r)
        self.capacity = capacity
        self.root = _Node(0.0, TWO_PI, 0.0, self.max_r, 0)
        self.size = 0
        self._packed = None
        self._fresh = False

    def __len__(self):
        return self.size

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, phi, r, ids=None, *, alpha, max_r, capacity=DEFAULT_LEAF_CAPACITY):
        """Bulk-build the tree for coordinate arrays (phi, r). `ids` defaults
        to 0..n-1. Equivalent to inserting the points one by one, only faster."""
        tree = cls(alpha, max_r, capacity=capacity)
        phi = np.ascontiguousarray(phi, dtype=np.float64)
        r = np.ascontiguousarray(r, dtype=np.float64)
        if phi.shape != r.shape or phi.ndim != 1:
            raise ValueError("phi and r must be 1-d arrays of equal length")
        if ids is None:
            ids = np.arange(phi.size, dtype=np.int64)
        else:
            ids = np.ascontiguousarray(ids, dtype=np.int64)
            if ids.shape != phi.shape:
                raise ValueError("ids must match the coordinate arrays")
        if phi.size and (
            phi.min() < 0.0
            or phi.max() >= TWO_PI
            or r.min() < 0.0
            or r.max() >= tree.max_r
        ):
            raise OutOfBoundsError("point outside the tree region")
        tree._bulk(phi, r, ids)
        return tree

    def _bulk(self, phi, r, ids):
        capacity = self.capacity

        def grow(node, p, rr, ii):
            node.size = ii.size
            if ii.size <= capacity or node.depth >= MAX_DEPTH:
                node.pts = (p, rr, ii)
                return
            self._make_children(node)
            left = p < node.mid_phi
            low = rr < node.mid_r
            for child, mask in zip(
                node.children,
                (left & low, ~left & low, left & ~low, ~left & ~low),
            ):
                grow(child, p[mask], rr[mask], ii[mask])

        grow(self.root, phi, r, ids)
        self.size = int(ids.size)
        self._fresh = False

    def _make_children(self, node):
        node.mid_phi = 0.5 * (node.min_phi + node.max_phi)
        node.mid_r = to_poincare_radius(
            splitting_radius(
                to_native_radius(node.min_r),
                to_native_radius(node.max_r),
                self.alpha,
            )
        )
        d = node.depth + 1
        node.children = [
            _Node(node.min_phi, node.mid_phi, node.min_r, node.mid_r, d),
            _Node(node.mid_phi, node.max_phi, node.min_r, node.mid_r, d),
            _Node(node.min_phi, node.mid_phi, node.mid_r, node.max_r, d),
            _Node(node.mid_phi, node.max_phi, node.mid_r, node.max_r, d),
        ]
        node.pts = None

    def insert(self, point: PoincarePoint, vertex_id: int):
        """Add one point. Raises OutOfBoundsError outside [0,2pi) x [0,max_r)."""
        phi, r = float(point.phi), float(point.r)
        if not (0.0 <= phi < TWO_PI and 0.0 <= r < self.max_r):
            raise OutOfBoundsError(
                f"point (phi={phi}, r={r}) outside tree region [0,2pi)x[0,{self.max_r})"
            )
        node = self.root
        while not node.is_leaf:
            node.size += 1
            node = node.children[node.child_index(phi, r)]
        self._ensure_loose(node)
        node.pts[0].append(phi)
        node.pts[1].append(r)
        node.pts[2].append(int(vertex_id))
        node.size += 1
        self.size += 1
        self._fresh = False
        while node.size > self.capacity and node.depth < MAX_DEPTH:
            node = self._split_leaf(node)
            if node is None:
                break

    def _ensure_loose(self, leaf):
        """Turn a packed or array-backed leaf back into appendable lists."""
        if leaf.pts is None:
            packed = self._packed
            sl = slice(leaf.start, leaf.stop)
            leaf.pts = (
                packed.p_phi[sl].tolist(),
                packed.p_r[sl].tolist(),
                packed.p_id[sl].tolist(),
            )
        elif not isinstance(leaf.pts[0], list):
            leaf.pts = tuple(a.tolist() for a in leaf.pts)

    def _split_leaf(self, node):
        """Split an over-full leaf; returns the single child that can still be
        over capacity (all points landed there), else None."""
        self._ensure_loose(node)
        phis, rs, iis = node.pts
        self._make_children(node)
        kids = node.children
        for phi, r, i in zip(phis, rs, iis):
            child = kids[node.child_index(phi, r)]
            self._ensure_loose(child)
            child.pts[0].append(phi)
            child.pts[1].append(r)
            child.pts[2].append(i)
            child.size += 1
        for child in kids:
            if child.size > self.capacity:
                return child
        return None

    # -- packing -----------------------------------------------------------

    def pack(self):
        """Flatten the tree into the array layout used by queries. Cheap when
        nothing changed since the last call."""
        if self._fresh and self._packed is not None:
            return self._packed
        old = self._packed
        parts_phi, parts_r, parts_id = [], [], []
        order = []
        cursor = 0

        def dfs(node):
            nonlocal cursor
            order.append(node)
            if node.is_leaf:
                if node.pts is None:
                    sl = slice(node.start, node.stop)
                    triple = (old.p_phi[sl], old.p_r[sl], old.p_id[sl])
                else:
                    triple = (
                        np.asarray(node.pts[0], dtype=np.float64),
                        np.asarray(node.pts[1], dtype=np.float64),
                        np.asarray(node.pts[2], dtype=np.int64),
                    )
                node.start = cursor
                cursor += triple[2].size
                node.stop = cursor
                parts_phi.append(triple[0])
                parts_r.append(triple[1])
                parts_id.append(triple[2])
                node.pts = None
            else:
                node.start = cursor
                for child in node.children:
                    dfs(child)
                node.stop = cursor

        dfs(self.root)

        # Breadth-first node numbering keeps the four children adjacent.
        nodes = [self.root]
        child0 = []
        i = 0
        while i < len(nodes):
            node = nodes[i]
            if node.is_leaf:
                child0.append(-1)
            else:
                child0.append(len(nodes))
                nodes.extend(node.children)
            i += 1

        packed = _PackedTree()
        packed.min_phi = np.array([nd.min_phi for nd in nodes], dtype=np.float64)
        packed.max_phi = np.array([nd.max_phi for nd in nodes], dtype=np.float64)
        packed.min_r = np.array([nd.min_r for nd in nodes], dtype=np.float64)
        packed.max_r = np.array([nd.max_r for nd in nodes], dtype=np.float64)
        packed.child0 = np.array(child0, dtype=np.int64)
        packed.start = np.array([nd.start for nd in nodes], dtype=np.int64)
        packed.stop = np.array([nd.stop for nd in nodes], dtype=np.int64)
        packed.p_phi = (
            np.concatenate(parts_phi) if parts_phi else np.empty(0, np.float64)
        )
        packed.p_r = np.concatenate(parts_r) if parts_r else np.empty(0, np.float64)
        packed.p_id = np.concatenate(parts_id) if parts_id else np.empty(0, np.int64)

        # Points are sorted by angle within each leaf slice (ties by id, so
        # the layout is deterministic). Queries then narrow a leaf scan to an
        # angular window with binary search instead of testing every point.
        if packed.p_phi.size:
            sizes = np.array([p.size for p in parts_id], dtype=np.int64)
            segment = np.repeat(np.arange(sizes.size, dtype=np.int64), sizes)
            perm = np.lexsort((packed.p_id, packed.p_phi, segment))
            packed.p_phi = packed.p_phi[perm]
            packed.p_r = packed.p_r[perm]
            packed.p_id = packed.p_id[perm]
        packed.p_x = packed.p_r * np.cos(packed.p_phi)
        packed.p_y = packed.p_r * np.sin(packed.p_phi)

        # Actual point radius range per leaf. Much tighter than the cell band
        # for cells whose inner radius is far below their sparsest point, and
        # that tightness is what makes the angular query windows narrow.
        n_nodes = packed.child0.size
        packed.l_rmin = np.full(n_nodes, 2.0)
        packed.l_rmax = np.zeros(n_nodes)
        leaf_ids = np.flatnonzero(packed.child0 < 0)
        occupied = leaf_ids[packed.stop[leaf_ids] > packed.start[leaf_ids]]
        if occupied.size:
            # reduceat folds each start to the next one, so starts must be
            # ascending (breadth-first leaf ids are not); occupied leaf slices
            # tile the point array, which makes the folds exactly the slices.
            occupied = occupied[np.argsort(packed.start[occupied])]
            starts = packed.start[occupied]
            packed.l_rmin[occupied] = np.minimum.reduceat(packed.p_r, starts)
            packed.l_rmax[occupied] = np.maximum.reduceat(packed.p_r, starts)
        self._packed = packed
        self._fresh = True
        return packed

    # -- queries -----------------------------------------------------------

    def query_many(self, center_phi, center_r, radii, *, return_cell_counts=False):
        """Stored point ids strictly inside each query circle.

        Circles are given in polar form (center angle, center Poincare radius,
        Euclidean radius). Returns (query_index, point_id) pair arrays; with
        `return_cell_counts` also the number of cells each query touched.
        All circles advance through the tree together, one level per pass,
        with pruning decisions made on whole arrays.
        """
        packed = self.pack()
        c_phi = np.atleast_1d(np.asarray(center_phi, dtype=np.float64))
        c_r = np.atleast_1d(np.asarray(center_r, dtype=np.float64))
        radii = np.broadcast_to(
            np.asarray(radii, dtype=np.float64), c_phi.shape
        ).copy()
        if c_phi.shape != c_r.shape or c_phi.ndim != 1:
            raise ValueError("query arrays must be 1-d and of equal length")
        c_x = c_r * np.cos(c_phi)
        c_y = c_r * np.sin(c_phi)
        rad_sq = radii * radii

        n_q = c_phi.size
        q = np.arange(n_q, dtype=np.int64)
        node = np.zeros(n_q, dtype=np.int64)
        out_q, out_p = [], []
        cell_counts = np.zeros(n_q, dtype=np.int64) if return_cell_counts else None

        while q.size:
            dmin_sq = _min_dist_sq(
                packed.min_phi[node],
                packed.max_phi[node],
                packed.min_r[node],
                packed.max_r[node],
                c_phi[q],
                c_r[q],
            )
            alive = dmin_sq < rad_sq[q]
            q, node = q[alive], node[alive]
            rsq = rad_sq[q]

            # The far bound only matters for pairs that survived pruning.
            dmax_sq = _max_dist_sq(
                packed.min_phi[node],
                packed.max_phi[node],
                packed.min_r[node],
                packed.max_r[node],
                c_phi[q],
                c_r[q],
            )
            contained = dmax_sq < rsq
            if contained.any():
                cn, cq = node[contained], q[contained]
                s, e = packed.start[cn], packed.stop[cn]
                out_p.append(multi_arange(s, e))
                out_q.append(np.repeat(cq, e - s))
                if return_cell_counts:
                    np.add.at(cell_counts, cq, 1)
                q, node = q[~contained], node[~contained]

            child = packed.child0[node]
            at_leaf = child < 0
            if at_leaf.any():
                ln, lq = node[at_leaf], q[at_leaf]
                s, e = packed.start[ln], packed.stop[ln]

                # A stored point at origin distance p and angular offset d from
                # the circle center lies inside iff
                #   cos d > (p^2 + c^2 - rad^2) / (2 p c).
                # Minimizing the right side over the leaf's point radius range
                # [r1,r2] (endpoints plus the stationary point sqrt(c^2-rad^2))
                # bounds the offset of any candidate, and the window it defines
                # is cut out of the angle-sorted slice with binary search.
                r1 = packed.l_rmin[ln]
                r2 = packed.l_rmax[ln]
                c = c_r[lq]
                diff = c * c - rad_sq[lq]
                g1 = np.full(lq.shape, np.inf)
                np.divide(r1 * r1 + diff, 2.0 * r1 * c, out=g1, where=r1 * c > 0.0)
                g1[(r1 * c <= 0.0) & (diff < 0.0)] = -np.inf
                g2 = np.full(lq.shape, np.inf)
                np.divide(r2 * r2 + diff, 2.0 * r2 * c, out=g2, where=r2 * c > 0.0)
                g2[(r2 * c <= 0.0) & (diff < 0.0)] = -np.inf
                cos_lim = np.minimum(g1, g2)
                interior = (diff > 0.0) & (r1 * r1 <= diff) & (diff <= r2 * r2)
                if interior.any():
                    idx = np.flatnonzero(interior)
                    cos_lim[idx] = np.minimum(
                        cos_lim[idx], np.sqrt(diff[idx]) / c[idx]
                    )
                delta = np.arccos(np.clip(cos_lim, -1.0, 1.0)) + _WINDOW_PAD
                lo_val = c_phi[lq] - delta
                hi_val = c_phi[lq] + delta
                # A window crossing 0/2pi would split in two; scan the whole
                # slice instead (rare: only queries hugging the cut).
                whole = (cos_lim <= -1.0) | (lo_val < 0.0) | (hi_val >= TWO_PI)
                lo_val = np.where(whole, -1.0, lo_val)
                hi_val = np.where(whole, TWO_PI + 1.0, hi_val)
                ws = _ragged_searchsorted(packed.p_phi, s, e, lo_val)
                we = _ragged_searchsorted(packed.p_phi, s, e, hi_val, right=True)

                cum = np.cumsum(we - ws)
                if cum.size and cum[-1]:
                    cuts = np.searchsorted(
                        cum,
                        np.arange(_SCAN_BLOCK, int(cum[-1]), _SCAN_BLOCK),
                        side="left",
                    )
                    for ls, le, lqb in zip(
                        np.split(ws, cuts), np.split(we, cuts), np.split(lq, cuts)
                    ):
                        pidx = multi_arange(ls, le)
                        prep = np.repeat(lqb, le - ls)
                        dx = packed.p_x[pidx] - c_x[prep]
                        dy = packed.p_y[pidx] - c_y[prep]
                        hit = dx * dx + dy * dy < rad_sq[prep]
                        out_p.append(pidx[hit])
                        out_q.append(prep[hit])
                if return_cell_counts:
                    np.add.at(cell_counts, lq, 1)

            q, child = q[~at_leaf], child[~at_leaf]
            node = (child[:, None] + np.arange(4, dtype=np.int64)).ravel()
            q = np.repeat(q, 4)

        if out_q:
            qidx = np.concatenate(out_q)
            ids = packed.p_id[np.concatenate(out_p)]
        else:
            qidx = np.empty(0, dtype=np.int64)
            ids = np.empty(0, dtype=np.int64)
        if return_cell_counts:
            return qidx, ids, cell_counts
        return qidx, ids

    def query_circle(self, circle: EuclideanCircle):
        """Ids of stored points strictly inside the circle, ascending."""
        _, ids = self.query_many(
            [circle.center.phi], [circle.center.r], [circle.radius]
        )
        return np.sort(ids)

    # -- introspection ------------------------------------------------------

    def height(self):
        """Length of the longest root-to-leaf path (root alone has height 0)."""
        best = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                best = max(best, node.depth)
            else:
                stack.extend(node.children)
        return best

    def nodes_at_depth(self, depth):
        """All nodes at exactly `depth` (fewer than 4**depth if the tree is
        shallower there)."""
        found = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.depth == depth:
                found.append(node)
            elif node.depth < depth and not node.is_leaf:
                stack.extend(node.children)
        return found

    def leaves(self):
        found = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                found.append(node)
            else:
                stack.extend(node.children)
        return found

    def leaf_point_ids(self, leaf):
        """Vertex ids stored in a leaf node (packed leaves report them in
        angle order)."""
        if leaf.pts is not None:
            return np.asarray(leaf.pts[2], dtype=np.int64)
        return self.pack().p_id[leaf.start : leaf.stop].copy()

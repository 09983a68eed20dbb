"""Brute-force reference implementations used as test oracles.

Everything here follows the textbook definition directly, in plain Python,
so that agreement with the vectorized library code is meaningful.
"""

import math
from collections import deque

import numpy as np

from hrgen import Graph


def adjacency_sets(graph: Graph):
    return [set(graph.neighbors(v).tolist()) for v in range(graph.n)]


def triangles_brute(graph: Graph) -> int:
    adj = adjacency_sets(graph)
    count = 0
    for u in range(graph.n):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w > v:
                    count += 1
    return count


def transitivity_brute(graph: Graph) -> float:
    triples = sum(d * (d - 1) // 2 for d in graph.degrees().tolist())
    if triples == 0:
        return 0.0
    return 3.0 * triangles_brute(graph) / triples


def local_clustering_brute(graph: Graph):
    adj = adjacency_sets(graph)
    out = []
    for v in range(graph.n):
        nbrs = sorted(adj[v])
        k = len(nbrs)
        if k < 2:
            out.append(0.0)
            continue
        links = sum(
            1 for i in range(k) for j in range(i + 1, k) if nbrs[j] in adj[nbrs[i]]
        )
        out.append(links / (k * (k - 1) / 2))
    return out


def assortativity_brute(graph: Graph):
    deg = graph.degrees()
    xs, ys = [], []
    for u, v in graph.edge_array().tolist():
        xs += [deg[u], deg[v]]
        ys += [deg[v], deg[u]]
    if not xs:
        return None
    x = np.array(xs, dtype=np.float64)
    y = np.array(ys, dtype=np.float64)
    x -= x.mean()
    y -= y.mean()
    sx = math.sqrt(float(x @ x))
    sy = math.sqrt(float(y @ y))
    if sx == 0.0 or sy == 0.0:
        return None
    return float(x @ y) / (sx * sy)


def components_brute(graph: Graph):
    """List of vertex sets, one per connected component."""
    seen = [False] * graph.n
    comps = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = set()
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.add(v)
            for w in graph.neighbors(v).tolist():
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(comp)
    return comps


def cores_brute(graph: Graph):
    """Core numbers by literal repeated peeling."""
    adj = adjacency_sets(graph)
    alive = set(range(graph.n))
    core = [0] * graph.n
    k = 0
    while alive:
        k = max(k, min(len(adj[v] & alive) for v in alive))
        changed = True
        while changed:
            changed = False
            for v in sorted(alive):
                if len(adj[v] & alive) <= k:
                    core[v] = k
                    alive.discard(v)
                    changed = True
        k += 1
    return core


def bfs_brute(graph: Graph, source):
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v).tolist():
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter_brute(graph: Graph):
    """Exact diameter of the largest component (0 for empty graphs)."""
    if graph.n == 0:
        return 0
    comp = max(components_brute(graph), key=len)
    best = 0
    for v in comp:
        best = max(best, max(d for d in bfs_brute(graph, v) if d >= 0))
    return best


def mle_brute(degrees, k_min):
    tail = [d for d in degrees if d >= k_min]
    if len(tail) < 10 or min(tail) == max(tail):
        return None
    return 1.0 + len(tail) / sum(math.log(d / (k_min - 0.5)) for d in tail)


def gnp_graph(n, p, rng) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)

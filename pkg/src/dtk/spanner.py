"""Greedy construction of dilation-bounded networks, plus the star.

The greedy spanner scans all point pairs in increasing length order and
inserts an edge only when the current graph violates the bound for that
pair.  Shortest-path queries during construction are fresh Dijkstra
runs with early exit at the bound, so there is no distance cache to
invalidate.  O(n^2 log n) pairs times small Dijkstras: fine at desk
scale, and it yields the bounded-dilation guarantee the pipeline needs.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import UsageError
from .geom import FLOAT, Instance
from .network import Network, cost, make_network, minimum_spanning_tree, normalize_edge


@dataclass(frozen=True)
class SpannerReport:
    """Constructed network plus measured size/degree/cost statistics.

    cost_ratio is cost(network) / cost(MST); the classical constants
    are never asserted, only measured.
    """

    network: Network
    edge_count: int
    max_degree: int
    cost_ratio: float


def _report(network: Network) -> SpannerReport:
    inst = network.instance
    degree = [0] * inst.n
    for i, j in network.edges:
        degree[i] += 1
        degree[j] += 1
    mst_cost = cost(minimum_spanning_tree(inst)) if inst.n > 1 else 0.0
    net_cost = cost(network)
    ratio = net_cost / mst_cost if mst_cost > 0 else 1.0
    return SpannerReport(
        network=network,
        edge_count=len(network.edges),
        max_degree=max(degree) if degree else 0,
        cost_ratio=ratio,
    )


def _reachable_within(adj, source: int, target: int, bound: float) -> bool:
    """True iff d(source, target) <= bound in the current graph."""
    dist = {source: 0.0}
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u == target:
            return True
        if d > dist.get(u, math.inf):
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd <= bound and nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return False


def greedy_spanner(instance: Instance, delta: float | None = None) -> SpannerReport:
    """Build a network with all-pairs dilation at most delta.

    Requires delta > 1; callers wanting delta = 1 use the star or the
    complete graph directly.
    """
    if instance.mode != FLOAT:
        raise UsageError("greedy_spanner supports float mode only")
    delta = instance.delta if delta is None else float(delta)
    if delta <= 1:
        raise UsageError(f"greedy_spanner requires delta > 1, got {delta}")
    n = instance.n
    pts = instance.points
    if n == 1:
        return _report(make_network(instance, ()))
    pairs = sorted(
        (math.dist((pts[i].x, pts[i].y), (pts[j].x, pts[j].y)), i, j)
        for i in range(n)
        for j in range(i + 1, n)
    )
    adj = [[] for _ in range(n)]
    edges = []
    for w, i, j in pairs:
        if not _reachable_within(adj, i, j, delta * w):
            edges.append((i, j))
            adj[i].append((j, w))
            adj[j].append((i, w))
    return _report(make_network(instance, edges))


def star(instance: Instance) -> Network:
    """All edges (r, v): the minimum-delay network, delay exactly 1."""
    root = instance.root
    return make_network(
        instance, (normalize_edge(root, v) for v in range(instance.n) if v != root)
    )

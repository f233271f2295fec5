"""Geometric networks, shortest-path trees, MST, and cost/delay/dilation.

Edge weights are always the Euclidean length of the segment, derived
from the instance coordinates and never stored.  Shortest-path work
(Dijkstra, all-pairs dilation) runs in float mode; cost, delay, and
MST also work in exact mode, where lengths become enclosing intervals.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import DisconnectedError, UsageError
from .geom import EXACT, FLOAT, Instance, squared_distance
from .intervals import DEFAULT_PRECISION, Interval, envelope_max, interval_sum


def normalize_edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise UsageError(f"self-loop at vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Network:
    """Undirected geometric graph: an instance plus a set of index pairs."""

    instance: Instance
    edges: frozenset

    def __post_init__(self):
        n = self.instance.n
        edges = frozenset(normalize_edge(i, j) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise UsageError(f"edge ({i},{j}) out of range")
        object.__setattr__(self, "edges", edges)

    def edge_length(self, i: int, j: int) -> float:
        p = self.instance.points
        return math.dist((p[i].x, p[i].y), (p[j].x, p[j].y))


def make_network(instance: Instance, edges) -> Network:
    return Network(instance, frozenset(normalize_edge(i, j) for i, j in edges))


def complete_network(instance: Instance) -> Network:
    n = instance.n
    return Network(instance, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def adjacency(network: Network) -> list:
    """Adjacency lists with float edge lengths (float-mode instances)."""
    if network.instance.mode != FLOAT:
        raise UsageError("adjacency lists require a float-mode instance")
    adj = [[] for _ in range(network.instance.n)]
    for i, j in network.edges:
        w = network.edge_length(i, j)
        adj[i].append((j, w))
        adj[j].append((i, w))
    return adj


@dataclass(frozen=True)
class Tree:
    """Spanning tree as a parent map rooted at the instance root.

    parent[v] is defined for every v != root; root_distance holds the
    derived root-to-v path length (float mode only; exact mode uses
    root_distance_intervals).
    """

    instance: Instance
    parent: dict
    root_distance: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        inst = self.instance
        n, root = inst.n, inst.root
        parent = dict(self.parent)
        if set(parent) != set(range(n)) - {root}:
            raise UsageError("parent map must cover exactly the non-root vertices")
        order = _toposort_from_root(parent, n, root)
        object.__setattr__(self, "parent", MappingProxyType(parent))
        object.__setattr__(self, "_order", order)
        if inst.mode == FLOAT:
            dist = [0.0] * n
            pts = inst.points
            for v in order:
                u = parent[v]
                dist[v] = dist[u] + math.dist((pts[v].x, pts[v].y), (pts[u].x, pts[u].y))
            object.__setattr__(self, "root_distance",
                               MappingProxyType({v: dist[v] for v in range(n)}))

    @property
    def order(self):
        """Vertices in root-to-leaf order (root excluded)."""
        return self._order

    def edges(self) -> frozenset:
        return frozenset(normalize_edge(v, u) for v, u in self.parent.items())

    def to_network(self) -> Network:
        return Network(self.instance, self.edges())

    def root_distance_intervals(self, precision_bits: int = DEFAULT_PRECISION) -> dict:
        inst = self.instance
        if inst.mode != EXACT:
            raise UsageError("root_distance_intervals requires an exact-mode instance")
        dist = {inst.root: Interval.point(0)}
        pts = inst.points
        for v in self.order:
            u = self.parent[v]
            step = Interval.sqrt(squared_distance(pts[v], pts[u]), precision_bits)
            dist[v] = dist[u] + step
        return dist


def _toposort_from_root(parent: dict, n: int, root: int) -> tuple:
    """Order vertices so each appears after its parent; rejects cycles."""
    children = [[] for _ in range(n)]
    for v, u in parent.items():
        if not (0 <= u < n):
            raise UsageError(f"parent of {v} out of range: {u}")
        if u == v:
            raise UsageError(f"vertex {v} is its own parent")
        children[u].append(v)
    order = []
    stack = [root]
    seen = 1
    while stack:
        u = stack.pop()
        for v in sorted(children[u], reverse=True):
            order.append(v)
            seen += 1
            stack.append(v)
    if seen != n:
        bad = next(v for v in range(n) if v != root and v not in set(order))
        raise UsageError(f"parent map is cyclic or disconnected at vertex {bad}")
    return tuple(order)


def make_tree(instance: Instance, parent: dict) -> Tree:
    return Tree(instance, parent)


def cost(obj, precision_bits: int | None = None):
    """Total edge length of a Network or Tree.

    Float mode returns a float; exact mode returns an enclosing
    Interval at the requested precision.
    """
    network = obj.to_network() if isinstance(obj, Tree) else obj
    inst = network.instance
    pts = inst.points
    edges = sorted(network.edges)
    if inst.mode == FLOAT:
        return math.fsum(network.edge_length(i, j) for i, j in edges)
    bits = DEFAULT_PRECISION if precision_bits is None else precision_bits
    return interval_sum(
        Interval.sqrt(squared_distance(pts[i], pts[j]), bits) for i, j in edges
    )


def dijkstra(adj, source: int):
    """Distances and smallest-index predecessors from source.

    Returns (dist, pred) lists; unreachable vertices keep dist=inf.
    Ties between equal-length shortest paths are broken by the smallest
    predecessor index, deterministically.
    """
    n = len(adj)
    dist = [math.inf] * n
    dist[source] = 0.0
    done = [False] * n
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    pred = [None] * n
    for v in range(n):
        if v == source or dist[v] == math.inf:
            continue
        best = None
        for u, w in adj[v]:
            if dist[u] + w == dist[v] and (best is None or u < best):
                best = u
        pred[v] = best
    return dist, pred


def shortest_path_tree(network: Network, root: int | None = None) -> Tree:
    """Dijkstra tree preserving all root distances (float mode).

    Raises DisconnectedError naming an unreachable vertex.
    """
    inst = network.instance
    if inst.mode != FLOAT:
        raise UsageError("shortest_path_tree supports float mode only")
    root = inst.root if root is None else root
    dist, pred = dijkstra(adjacency(network), root)
    for v in range(inst.n):
        if dist[v] == math.inf:
            raise DisconnectedError(v)
    parent = {v: pred[v] for v in range(inst.n) if v != root}
    return Tree(inst, parent)


def delay(tree: Tree, precision_bits: int | None = None):
    """Max over v != r of d_T(r,v) / |rv|; 1 by convention when n = 1."""
    inst = tree.instance
    root = inst.root
    pts = inst.points
    if inst.mode == FLOAT:
        if inst.n == 1:
            return 1.0
        rp = pts[root]
        return max(
            tree.root_distance[v] / math.dist((rp.x, rp.y), (pts[v].x, pts[v].y))
            for v in range(inst.n)
            if v != root
        )
    bits = DEFAULT_PRECISION if precision_bits is None else precision_bits
    if inst.n == 1:
        return Interval.point(1)
    dists = tree.root_distance_intervals(bits)
    ratios = []
    for v in range(inst.n):
        if v == root:
            continue
        rv = Interval.sqrt(squared_distance(pts[root], pts[v]), bits)
        ratios.append(dists[v] / rv)
    return envelope_max(ratios)


def dilation_all_pairs(network: Network) -> float:
    """Max dilation over all point pairs; +inf when disconnected."""
    inst = network.instance
    if inst.mode != FLOAT:
        raise UsageError("dilation_all_pairs supports float mode only")
    n = inst.n
    if n <= 1:
        return 1.0
    adj = adjacency(network)
    pts = inst.points
    worst = 1.0
    for u in range(n):
        dist, _ = dijkstra(adj, u)
        for v in range(u + 1, n):
            if dist[v] == math.inf:
                return math.inf
            ratio = dist[v] / math.dist((pts[u].x, pts[u].y), (pts[v].x, pts[v].y))
            if ratio > worst:
                worst = ratio
    return worst


def minimum_spanning_tree(instance: Instance) -> Tree:
    """Prim over the complete graph, rooted at the instance root.

    Exact mode compares squared lengths (order-preserving, no rounding);
    ties broken by lexicographic edge index in both modes.
    """
    n = instance.n
    root = instance.root
    pts = instance.points
    if instance.mode == FLOAT:
        def sq(i, j):
            dx = pts[i].x - pts[j].x
            dy = pts[i].y - pts[j].y
            return dx * dx + dy * dy
    else:
        def sq(i, j):
            return squared_distance(pts[i], pts[j])
    in_tree = [False] * n
    in_tree[root] = True
    parent = {}
    # best[v] = (squared length, lexicographic edge key) of cheapest cut edge
    best = {}
    for v in range(n):
        if v != root:
            best[v] = (sq(root, v), normalize_edge(root, v), root)
    for _ in range(n - 1):
        v_pick = min(best, key=lambda v: (best[v][0], best[v][1]))
        w, _, u = best.pop(v_pick)
        parent[v_pick] = u
        in_tree[v_pick] = True
        for v in best:
            cand = (sq(v_pick, v), normalize_edge(v_pick, v), v_pick)
            if (cand[0], cand[1]) < (best[v][0], best[v][1]):
                best[v] = cand
    return Tree(instance, parent)

import math
import random

import pytest

from dtk.geom import float_instance


def random_coords(seed, n, span=100.0):
    rng = random.Random(seed)
    coords = []
    seen = set()
    while len(coords) < n:
        pt = (rng.uniform(0.0, span), rng.uniform(0.0, span))
        if pt not in seen:
            seen.add(pt)
            coords.append(pt)
    return coords


def random_instance(seed, n, delta=2.0):
    return float_instance(random_coords(seed, n), root=0, delta=delta)


def walk_root_distance(tree, v):
    """Independent root-distance oracle: chase parents, sum root-to-leaf."""
    inst = tree.instance
    hops = []
    while v != inst.root:
        u = tree.parent[v]
        hops.append((u, v))
        v = u
    total = 0.0
    for u, w in reversed(hops):
        p, q = inst.points[u], inst.points[w]
        total += math.dist((p.x, p.y), (q.x, q.y))
    return total


def reference_dijkstra(network, source):
    """Test-side shortest-path oracle: no heap, O(n^2) scans."""
    inst = network.instance
    n = inst.n
    pts = inst.points
    adj = [[] for _ in range(n)]
    for i, j in network.edges:
        w = math.dist((pts[i].x, pts[i].y), (pts[j].x, pts[j].y))
        adj[i].append((j, w))
        adj[j].append((i, w))
    dist = [math.inf] * n
    dist[source] = 0.0
    done = [False] * n
    for _ in range(n):
        u = min((v for v in range(n) if not done[v]), key=lambda v: dist[v],
                default=None)
        if u is None or dist[u] == math.inf:
            break
        done[u] = True
        for v, w in adj[u]:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
    return dist


@pytest.fixture
def square_with_center():
    return float_instance([(1.0, 1.0), (0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)],
                          root=0, delta=2.0)

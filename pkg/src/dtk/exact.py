"""Exact solvers for the delay-bounded minimum spanning tree problem.

Two independent routes: an exhaustive recursive enumeration of all
spanning trees of the complete graph (the oracle, guarded to tiny n),
and a branch-and-bound that grows trees outward from the source so that
every connected vertex has its final root distance fixed, which makes
the delay prune exact rather than heuristic.

Exact-mode instances are searched with integer fixed-point bounds on
every length (directed rounding at a configurable precision), so all
accept/prune decisions are certified; an indeterminate comparison
raises PrecisionError instead of guessing.
"""

from __future__ import annotations

import heapq
import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import GuardExceededError, PrecisionError, UsageError
from .geom import FLOAT, Instance, float_instance, squared_distance
from .intervals import DEFAULT_PRECISION, Interval
from .network import Tree

ENUMERATION_GUARD = 10
SEARCH_GUARD = 14
MAX_N_ENV = "DTK_MAX_N"

_USE_INSTANCE = object()


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact solve.

    status is "feasible" or "infeasible"; when feasible the tree is a
    witness (optimal when proof_of_optimality is set).  cost is a float
    in float mode and an enclosing Interval in exact mode.
    """

    status: str
    tree: Tree | None
    cost: object
    nodes_explored: int
    proof_of_optimality: bool

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def _resolve_guard(max_n, default):
    if max_n is not None:
        return int(max_n)
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"bad {MAX_N_ENV} value: {env!r}") from exc
    return default


def enumerate_spanning_trees(instance: Instance, visitor=None, max_n: int = ENUMERATION_GUARD) -> int:
    """Visit every spanning tree of the complete graph on S exactly once.

    Recursive include/exclude growth from the root: at each step the
    shortest alive frontier edge either joins the tree or is banned,
    which partitions the trees below into disjoint families.  The
    visitor, if given, receives (parent_tuple, cost, delay) per tree;
    the root's entry in parent_tuple is -1.  Returns the number of
    trees visited, n**(n-2) for the complete graph.
    """
    if instance.mode != FLOAT:
        raise UsageError("enumerate_spanning_trees supports float mode only")
    n = instance.n
    if n > max_n:
        raise GuardExceededError(
            f"n={n} exceeds enumeration guard {max_n} (Cayley growth is n^(n-2))"
        )
    root = instance.root
    if n == 1:
        if visitor is not None:
            visitor((-1,), 0.0, 1.0)
        return 1
    pts = instance.points
    coords = [(p.x, p.y) for p in pts]
    entries = sorted(
        (math.dist(coords[i], coords[j]), i, j)
        for i in range(n) for j in range(i + 1, n)
    )
    ew = [e[0] for e in entries]
    ei = [e[1] for e in entries]
    ej = [e[2] for e in entries]
    n_edges = len(entries)
    rdist = [math.dist(coords[root], coords[v]) if v != root else 1.0
             for v in range(n)]
    parent = [-1] * n
    d = [0.0] * n
    count = 0
    target = n - 1

    def rec(conn, banned, nchosen, total, maxratio):
        nonlocal count
        if nchosen == target:
            count += 1
            if visitor is not None:
                visitor(tuple(parent), total, maxratio)
            return
        eid = 0
        while eid < n_edges:
            if not banned >> eid & 1 and ((conn >> ei[eid]) ^ (conn >> ej[eid])) & 1:
                break
            eid += 1
        else:
            return
        i, j = ei[eid], ej[eid]
        u, v = (i, j) if conn >> i & 1 else (j, i)
        w = ew[eid]
        dv = d[u] + w
        parent[v] = u
        d[v] = dv
        ratio = dv / rdist[v]
        rec(conn | (1 << v), banned, nchosen + 1, total + w,
            ratio if ratio > maxratio else maxratio)
        rec(conn, banned | (1 << eid), nchosen, total, maxratio)

    rec(1 << root, 0, 0, 0.0, 0.0)
    return count


def solve_exact(
    instance: Instance,
    *,
    delta=None,
    cost_bound=_USE_INSTANCE,
    max_n: int | None = None,
    threads: int = 1,
    precision_bits: int = DEFAULT_PRECISION,
    debug_checks: bool = False,
) -> ExactResult:
    """Minimize cost over spanning trees with delay <= delta.

    With a cost bound the decision problem is answered instead: status
    is feasible iff some tree meets both bounds, and the search may stop
    at the first witness.  cost_bound defaults to the instance's own
    bound; pass None explicitly to force optimization.  The n guard is a
    configuration value (max_n argument, DTK_MAX_N environment variable,
    default 14).  threads > 1 splits the top-level branches across
    workers with a canonical-encoding tie-break, so cost and tree stay
    deterministic (node counts may vary).
    """
    guard = _resolve_guard(max_n, SEARCH_GUARD)
    n = instance.n
    if n > guard:
        raise GuardExceededError(f"n={n} exceeds exact-solver guard {guard}")
    if cost_bound is _USE_INSTANCE:
        cost_bound = instance.cost_bound
    if delta is None:
        delta = instance.delta
    if n == 1:
        zero = 0.0 if instance.mode == FLOAT else Interval.point(0)
        return ExactResult("feasible", Tree(instance, {}), zero, 0, True)
    if instance.mode == FLOAT:
        engine = _FloatEngine(instance, float(delta),
                              None if cost_bound is None else float(cost_bound),
                              debug_checks)
        return engine.solve(max(1, int(threads)))
    # exact mode stays sequential: the certified-interval bookkeeping is
    # not worth cross-thread coordination under the GIL
    engine = _ExactEngine(instance, Fraction(delta),
                          None if cost_bound is None else Fraction(cost_bound),
                          precision_bits, debug_checks)
    return engine.solve(1)


def _star_parent(instance: Instance) -> dict:
    root = instance.root
    return {v: root for v in range(instance.n) if v != root}


def _enc(parent: dict) -> tuple:
    return tuple(sorted(parent.items()))


def _approx_guess(instance: Instance, delta_float: float):
    """Parent map from the approximation pipeline, or None if unusable."""
    from .approx import approximate

    try:
        if instance.mode == FLOAT:
            proj = instance
        else:
            coords = [(float(p.x), float(p.y)) for p in instance.points]
            proj = float_instance(coords, root=instance.root,
                                  delta=max(delta_float, 1.0))
        if delta_float <= 1:
            return _star_parent(instance)
        return dict(approximate(proj, delta_float).tree.parent)
    except (UsageError, ValueError, OverflowError):
        return None


class _Candidate:
    __slots__ = ("parent", "enc", "cost_lo", "cost_hi")

    def __init__(self, parent, cost_lo, cost_hi):
        self.parent = dict(parent)
        self.enc = _enc(parent)
        self.cost_lo = cost_lo  # float, or int at the fixed-point scale
        self.cost_hi = cost_hi


class _SearchBase:
    """Shared search skeleton; numeric kernels live in the subclasses.

    Node state: (conn bitmask, banned edge bitmask, chosen count, parent
    pairs, per-vertex distance bounds, cost so far, ambiguity flag).
    Growth is from the root, so each vertex's root distance is final at
    attach time: the delay prune is exact.  reach_prune is an additional
    admissible prune via multi-source shortest paths to the unconnected
    remainder.
    """

    def __init__(self, instance, decision, debug_checks):
        self.instance = instance
        self.n = instance.n
        self.root = instance.root
        self.decision = decision
        self.debug = debug_checks
        self.nodes = 0
        self.ambiguous_lo = None  # best cost_lo among indeterminate leaves

    def root_node(self):
        n = self.n
        zero = self.zero_d()
        return ((1 << self.root), 0, 0, (), tuple([zero] * n), tuple([zero] * n),
                self.zero_cost(), self.zero_cost(), False)

    def split_nodes(self, parts):
        """Partition the search below the root into independent nodes.

        Every spanning tree uses at least one root edge; class t includes
        the t-th shortest root edge and bans the shorter ones.
        """
        nodes = []
        banned = 0
        base = self.root_node()
        for eid in self.sorted_eids_at_root():
            child = self.attach(base[0], banned, 0, (), base[4], base[5],
                                base[6], base[7], False, eid)
            if child is not None:
                nodes.append(child)
            banned |= 1 << eid
        return [nodes[k::parts] for k in range(parts)]

    def run(self, start_nodes, incumbent):
        """DFS over start_nodes; returns (best candidate, witness, nodes)."""
        stack = list(reversed(start_nodes))
        nodes = 0
        witness = None
        target = self.n - 1
        while stack:
            node = stack.pop()
            nodes += 1
            (conn, banned, nchosen, parent, dlo, dhi, clo, chi, amb) = node
            if self.cost_prune(clo, conn, banned, incumbent):
                continue
            if self.reach_prune(conn, banned, dlo):
                continue
            eid = self.pick_edge(conn, banned)
            if eid is None:
                continue
            stack.append((conn, banned | (1 << eid), nchosen, parent,
                          dlo, dhi, clo, chi, amb))
            child = self.attach(conn, banned, nchosen, parent, dlo, dhi,
                                clo, chi, amb, eid)
            if child is None:
                continue
            if child[2] == target:
                outcome = self.leaf(child, incumbent)
                if outcome == "stop":
                    witness = self.witness
                    break
                if outcome is not None:
                    incumbent = outcome
                continue
            stack.append(child)
        return incumbent, witness, nodes

    def pick_edge(self, conn, banned):
        ei, ej = self.ei, self.ej
        for eid in range(self.n_edges):
            if not banned >> eid & 1 and ((conn >> ei[eid]) ^ (conn >> ej[eid])) & 1:
                return eid
        return None

    def sorted_eids_at_root(self):
        root = self.root
        return [eid for eid in range(self.n_edges)
                if root in (self.ei[eid], self.ej[eid])]

    def solve(self, threads):
        incumbent = self.initial_incumbent()
        if threads <= 1 or self.decision:
            incumbent, witness, nodes = self.run([self.root_node()], incumbent)
            self.nodes += nodes
        else:
            witness = None
            results = []
            lock = threading.Lock()

            def worker(part):
                inc, _, nodes = self.run(part, incumbent)
                with lock:
                    results.append(inc)
                    self.nodes += nodes

            parts = [p for p in self.split_nodes(threads) if p]
            workers = [threading.Thread(target=worker, args=(p,)) for p in parts]
            for t in workers:
                t.start()
            for t in workers:
                t.join()
            incumbent = None
            for inc in results:
                incumbent = self.merge(incumbent, inc)
        return self.finish(incumbent, witness)

    def merge(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        return self.better(a, b)


class _FloatEngine(_SearchBase):
    def __init__(self, instance, delta, bound, debug_checks):
        super().__init__(instance, bound is not None, debug_checks)
        self.delta = delta
        self.bound = bound
        n = self.n
        pts = instance.points
        coords = [(p.x, p.y) for p in pts]
        entries = sorted(
            (math.dist(coords[i], coords[j]), i, j)
            for i in range(n) for j in range(i + 1, n)
        )
        self.n_edges = len(entries)
        self.ew = [e[0] for e in entries]
        self.ei = [e[1] for e in entries]
        self.ej = [e[2] for e in entries]
        self.eid_of = {(e[1], e[2]): k for k, e in enumerate(entries)}
        wmat = [[0.0] * n for _ in range(n)]
        for w, i, j in entries:
            wmat[i][j] = wmat[j][i] = w
        self.wmat = wmat
        self.rv = [wmat[self.root][v] if v != self.root else 0.0 for v in range(n)]
        self.drv = [delta * self.rv[v] for v in range(n)]
        self.witness = None

    def zero_d(self):
        return 0.0

    def zero_cost(self):
        return 0.0

    def _eid(self, u, v):
        return self.eid_of[(u, v) if u < v else (v, u)]

    def initial_incumbent(self):
        if self.decision:
            return None
        for cand in (_approx_guess(self.instance, self.delta),
                     _star_parent(self.instance) if self.delta >= 1 else None):
            if cand is None:
                continue
            walked = self.walk(cand)
            if walked is not None:
                return _Candidate(cand, walked, walked)
        return None

    def walk(self, parent):
        """Cost of a feasible parent map under the search arithmetic."""
        try:
            tree = Tree(self.instance, parent)
        except UsageError:
            return None
        d = [0.0] * self.n
        total = 0.0
        for v in tree.order:
            u = parent[v]
            w = self.wmat[u][v]
            d[v] = d[u] + w
            total += w
            if d[v] > self.drv[v]:
                return None
        return total

    def attach(self, conn, banned, nchosen, parent, dlo, dhi, clo, chi, amb, eid):
        i, j = self.ei[eid], self.ej[eid]
        u, v = (i, j) if conn >> i & 1 else (j, i)
        w = self.ew[eid]
        dv = dlo[u] + w
        if self.debug:
            assert dv >= dlo[u], "root distance decreased on extension"
        if dv > self.drv[v]:
            return None
        d = list(dlo)
        d[v] = dv
        d = tuple(d)
        return (conn | (1 << v), banned, nchosen + 1, parent + ((v, u),),
                d, d, clo + w, chi + w, amb)

    def cost_prune(self, clo, conn, banned, incumbent):
        lb = clo + self.mst_lb(conn, banned)
        if self.decision:
            return lb > self.bound
        return incumbent is not None and lb >= incumbent.cost_lo

    def mst_lb(self, conn, banned):
        n = self.n
        wmat = self.wmat
        outside = [v for v in range(n) if not conn >> v & 1]
        if not outside:
            return 0.0
        best = {}
        for v in outside:
            b = math.inf
            for u in range(n):
                if conn >> u & 1 and not banned >> self._eid(u, v) & 1:
                    if wmat[u][v] < b:
                        b = wmat[u][v]
            best[v] = b
        total = 0.0
        while best:
            v = min(best, key=best.get)
            b = best.pop(v)
            if b == math.inf:
                return math.inf
            total += b
            for u in best:
                if not banned >> self._eid(u, v) & 1 and wmat[v][u] < best[u]:
                    best[u] = wmat[v][u]
        return total

    def reach_prune(self, conn, banned, dlo):
        n = self.n
        wmat = self.wmat
        lb = {}
        heap = []
        for v in range(n):
            if conn >> v & 1:
                continue
            b = math.inf
            for u in range(n):
                if conn >> u & 1 and not banned >> self._eid(u, v) & 1:
                    cand = dlo[u] + wmat[u][v]
                    if cand < b:
                        b = cand
            lb[v] = b
            heapq.heappush(heap, (b, v))
        while heap:
            b, v = heapq.heappop(heap)
            if b > lb[v]:
                continue
            for u in lb:
                if u != v and not banned >> self._eid(u, v) & 1:
                    cand = b + wmat[v][u]
                    if cand < lb[u]:
                        lb[u] = cand
                        heapq.heappush(heap, (cand, u))
        return any(b > self.drv[v] for v, b in lb.items())

    def leaf(self, child, incumbent):
        parent = dict(child[3])
        total = child[6]
        if self.decision:
            if total <= self.bound:
                self.witness = _Candidate(parent, total, total)
                return "stop"
            return None
        cand = _Candidate(parent, total, total)
        if incumbent is None or (cand.cost_lo, cand.enc) < (incumbent.cost_lo, incumbent.enc):
            return cand
        return None

    def better(self, a, b):
        return a if (a.cost_lo, a.enc) <= (b.cost_lo, b.enc) else b

    def finish(self, incumbent, witness):
        if self.decision:
            if witness is None:
                return ExactResult("infeasible", None, None, self.nodes, False)
            return ExactResult("feasible", Tree(self.instance, witness.parent),
                               witness.cost_lo, self.nodes, False)
        if incumbent is None:
            return ExactResult("infeasible", None, None, self.nodes, False)
        return ExactResult("feasible", Tree(self.instance, incumbent.parent),
                           incumbent.cost_lo, self.nodes, True)


class _ExactEngine(_SearchBase):
    """Certified search over integer fixed-point length bounds.

    Lengths are bracketed at scale 2**bits; accept/prune comparisons
    multiply through by rational denominators, so no decision ever
    depends on rounding.  A vertex attached directly to the root has
    distance exactly |rv| and is handled symbolically (feasible iff
    delta >= 1), which avoids spurious indeterminacy at delta = 1.
    """

    def __init__(self, instance, delta, bound, bits, debug_checks):
        super().__init__(instance, bound is not None, debug_checks)
        self.delta = delta
        self.bound = bound
        self.bits = bits
        self.scale = 1 << bits
        n = self.n
        pts = instance.points
        sq_entries = sorted(
            (squared_distance(pts[i], pts[j]), i, j)
            for i in range(n) for j in range(i + 1, n)
        )
        self.n_edges = len(sq_entries)
        self.ei = [e[1] for e in sq_entries]
        self.ej = [e[2] for e in sq_entries]
        self.sq = {(e[1], e[2]): e[0] for e in sq_entries}
        self.eid_of = {(e[1], e[2]): k for k, e in enumerate(sq_entries)}
        self.wlo = [0] * self.n_edges
        self.whi = [0] * self.n_edges
        for eid, (s, i, j) in enumerate(sq_entries):
            self.wlo[eid], self.whi[eid] = _sqrt_bounds_int(s, self.scale)
        wlo_mat = [[0] * n for _ in range(n)]
        whi_mat = [[0] * n for _ in range(n)]
        for eid in range(self.n_edges):
            i, j = self.ei[eid], self.ej[eid]
            wlo_mat[i][j] = wlo_mat[j][i] = self.wlo[eid]
            whi_mat[i][j] = whi_mat[j][i] = self.whi[eid]
        self.wlo_mat = wlo_mat
        self.whi_mat = whi_mat
        self.rvlo = [wlo_mat[self.root][v] if v != self.root else 0 for v in range(n)]
        self.rvhi = [whi_mat[self.root][v] if v != self.root else 0 for v in range(n)]
        self.dn, self.dd = delta.numerator, delta.denominator
        self.delta_ge_1 = delta >= 1
        if bound is not None:
            self.kn_scaled = bound.numerator * self.scale
            self.kden = bound.denominator
        self.witness = None

    def zero_d(self):
        return 0

    def zero_cost(self):
        return 0

    def _eid(self, u, v):
        return self.eid_of[(u, v) if u < v else (v, u)]

    def delay_bad(self, v, dlo):
        return dlo * self.dd > self.rvhi[v] * self.dn

    def delay_ok(self, v, dhi):
        return dhi * self.dd <= self.rvlo[v] * self.dn

    def initial_incumbent(self):
        if self.decision:
            return None
        try:
            delta_float = float(self.delta)
        except OverflowError:
            delta_float = math.inf
        for cand in (_approx_guess(self.instance, delta_float),
                     _star_parent(self.instance) if self.delta_ge_1 else None):
            if cand is None:
                continue
            walked = self.walk(cand)
            if walked is not None:
                return _Candidate(cand, *walked)
        return None

    def walk(self, parent):
        try:
            tree = Tree(self.instance, parent)
        except UsageError:
            return None
        dhi = [0] * self.n
        clo = chi = 0
        for v in tree.order:
            u = parent[v]
            eid = self._eid(u, v)
            dhi[v] = dhi[u] + self.whi[eid]
            clo += self.wlo[eid]
            chi += self.whi[eid]
            if u == self.root:
                if not self.delta_ge_1:
                    return None
            elif not self.delay_ok(v, dhi[v]):
                return None
        return clo, chi

    def attach(self, conn, banned, nchosen, parent, dlo, dhi, clo, chi, amb, eid):
        i, j = self.ei[eid], self.ej[eid]
        u, v = (i, j) if conn >> i & 1 else (j, i)
        new_dlo = dlo[u] + self.wlo[eid]
        new_dhi = dhi[u] + self.whi[eid]
        if self.debug:
            assert new_dlo >= dlo[u], "root distance decreased on extension"
        if u == self.root:
            if not self.delta_ge_1:
                return None
        elif self.delay_bad(v, new_dlo):
            return None
        elif not self.delay_ok(v, new_dhi):
            amb = True
        lo_l = list(dlo)
        hi_l = list(dhi)
        lo_l[v] = new_dlo
        hi_l[v] = new_dhi
        return (conn | (1 << v), banned, nchosen + 1, parent + ((v, u),),
                tuple(lo_l), tuple(hi_l),
                clo + self.wlo[eid], chi + self.whi[eid], amb)

    def cost_prune(self, clo, conn, banned, incumbent):
        lb_rest = self.mst_lb(conn, banned)
        if lb_rest is None:
            return True
        lb = clo + lb_rest
        if self.decision:
            return lb * self.kden > self.kn_scaled
        return incumbent is not None and lb >= incumbent.cost_hi

    def mst_lb(self, conn, banned):
        n = self.n
        wmat = self.wlo_mat
        outside = [v for v in range(n) if not conn >> v & 1]
        if not outside:
            return 0
        best = {}
        for v in outside:
            b = None
            for u in range(n):
                if conn >> u & 1 and not banned >> self._eid(u, v) & 1:
                    if b is None or wmat[u][v] < b:
                        b = wmat[u][v]
            best[v] = b
        total = 0
        while best:
            v = min(best, key=lambda x: (best[x] is None, best[x] or 0, x))
            b = best.pop(v)
            if b is None:
                return None
            total += b
            for u in best:
                if not banned >> self._eid(u, v) & 1:
                    w = wmat[v][u]
                    if best[u] is None or w < best[u]:
                        best[u] = w
        return total

    def reach_prune(self, conn, banned, dlo):
        n = self.n
        wmat = self.wlo_mat
        lb = {}
        heap = []
        for v in range(n):
            if conn >> v & 1:
                continue
            b = None
            for u in range(n):
                if conn >> u & 1 and not banned >> self._eid(u, v) & 1:
                    cand = dlo[u] + wmat[u][v]
                    if b is None or cand < b:
                        b = cand
            lb[v] = b
            if b is not None:
                heapq.heappush(heap, (b, v))
        while heap:
            b, v = heapq.heappop(heap)
            if lb[v] is None or b > lb[v]:
                continue
            for u in lb:
                if u != v and not banned >> self._eid(u, v) & 1:
                    cand = b + wmat[v][u]
                    if lb[u] is None or cand < lb[u]:
                        lb[u] = cand
                        heapq.heappush(heap, (cand, u))
        for v, b in lb.items():
            if b is None or self.delay_bad(v, b):
                return True
        return False

    def _note_ambiguous(self, clo):
        if self.ambiguous_lo is None or clo < self.ambiguous_lo:
            self.ambiguous_lo = clo

    def leaf(self, child, incumbent):
        parent = dict(child[3])
        clo, chi, amb = child[6], child[7], child[8]
        if self.decision:
            if amb:
                if clo * self.kden <= self.kn_scaled:
                    self._note_ambiguous(clo)
                return None
            if chi * self.kden <= self.kn_scaled:
                self.witness = _Candidate(parent, clo, chi)
                return "stop"
            if clo * self.kden <= self.kn_scaled:
                self._note_ambiguous(clo)
            return None
        if amb:
            self._note_ambiguous(clo)
            return None
        cand = _Candidate(parent, clo, chi)
        if incumbent is None or chi < incumbent.cost_lo:
            return cand
        if clo > incumbent.cost_hi:
            return None
        # overlapping intervals: fine when the costs are exactly equal
        if self._cost_equal(parent, incumbent.parent):
            return cand if cand.enc < incumbent.enc else None
        raise PrecisionError(
            "two candidate trees are closer than the working precision "
            f"(2^-{self.bits}); raise precision_bits"
        )

    def _cost_equal(self, parent_a, parent_b):
        def lengths(parent):
            out = [self.sq[(u, v) if u < v else (v, u)]
                   for v, u in parent.items()]
            out.sort()
            return out

        return lengths(parent_a) == lengths(parent_b)

    def better(self, a, b):
        if a.cost_hi < b.cost_lo:
            return a
        if b.cost_hi < a.cost_lo:
            return b
        if self._cost_equal(a.parent, b.parent):
            return a if a.enc <= b.enc else b
        raise PrecisionError(
            "two candidate trees are closer than the working precision "
            f"(2^-{self.bits}); raise precision_bits"
        )

    def _interval(self, clo, chi):
        return Interval(Fraction(clo, self.scale), Fraction(chi, self.scale))

    def finish(self, incumbent, witness):
        if self.decision:
            if witness is not None:
                return ExactResult("feasible", Tree(self.instance, witness.parent),
                                   self._interval(witness.cost_lo, witness.cost_hi),
                                   self.nodes, False)
            if self.ambiguous_lo is not None:
                raise PrecisionError(
                    "the decision is indeterminate at the working precision "
                    f"(2^-{self.bits}); raise precision_bits"
                )
            return ExactResult("infeasible", None, None, self.nodes, False)
        if self.ambiguous_lo is not None and (
            incumbent is None or self.ambiguous_lo < incumbent.cost_hi
        ):
            raise PrecisionError(
                "a tree stayed indeterminate against the delay bound at the "
                f"working precision (2^-{self.bits}); raise precision_bits"
            )
        if incumbent is None:
            return ExactResult("infeasible", None, None, self.nodes, False)
        return ExactResult("feasible", Tree(self.instance, incumbent.parent),
                           self._interval(incumbent.cost_lo, incumbent.cost_hi),
                           self.nodes, True)


def _sqrt_bounds_int(sq: Fraction, scale: int):
    """floor/ceil of sqrt(sq)*scale as integers; equal when sq is square."""
    if isinstance(sq, Fraction):
        num, den = sq.numerator, sq.denominator
    else:
        num, den = int(sq), 1
    t = num * scale * scale
    lo = isqrt(t // den)
    if lo * lo * den == t:
        return lo, lo
    return lo, lo + 1

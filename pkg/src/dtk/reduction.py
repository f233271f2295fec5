"""Knapsack-to-tree gadget construction, fully audited.

Given knapsack items (p_i, w_i), builds a 3n+4 point instance whose
delay/cost decision answers the knapsack question.  Per item, three
triangle side lengths encode profit and weight (alpha = p+w,
beta = 2p+w, gamma = 3p+w); items are stacked on the negative y-axis
below the source, with apex points c_i just right of the axis and three
anchor points d_0, d_1, d_2 fixing the critical dilation pair (r, d_2).

The apex positions solve a quadratic, so they are irrational; they are
approximated to k fractional bits and the whole construction is then
scaled by 2**k to integer coordinates.  Everything decision-relevant is
re-verified in exact rational arithmetic, and audit_lemmas certifies
the structural inequalities with directed rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import UsageError
from .exact import ExactResult, solve_exact
from .geom import Instance, Point, squared_distance
from .intervals import Interval
from .knapsack import KnapsackInstance
from .network import Tree, cost
from .network import delay as tree_delay

GADGET_CHOICES = ("ab", "ac", "bc")  # which of the three item edges is missing


@dataclass(frozen=True)
class GadgetQuantities:
    """Per-item triangle sides and the global spacing constants.

    alpha_i = p_i + w_i, beta_i = 2 p_i + w_i, gamma_i = 3 p_i + w_i,
    m = max gamma_i, L = sum(gamma_i + m).  prefix[i] is the distance
    from a_1 down to a_{i+1}: sum of (gamma_j + m) over j < i+1, with
    prefix[0] = 0 and prefix[n] = L.
    """

    alpha: tuple
    beta: tuple
    gamma: tuple
    m: int
    L: int
    prefix: tuple

    @property
    def n(self) -> int:
        return len(self.alpha)

    @staticmethod
    def from_items(items) -> "GadgetQuantities":
        items = tuple((int(p), int(w)) for p, w in items)
        if not items:
            raise UsageError("need at least one item")
        alpha = tuple(p + w for p, w in items)
        beta = tuple(2 * p + w for p, w in items)
        gamma = tuple(3 * p + w for p, w in items)
        for i, (p, w) in enumerate(items):
            if p <= 0 or w <= 0:
                raise UsageError(f"item {i} must have positive profit and weight")
            a, b, g = alpha[i], beta[i], gamma[i]
            assert 0 < a < b < g < a + b
            assert g + w == a + b and g - b == p and a + b - g == w
        m = max(gamma)
        prefix = [0]
        for g in gamma:
            prefix.append(prefix[-1] + g + m)
        L = prefix[-1]
        return GadgetQuantities(alpha, beta, gamma, m, L, tuple(prefix))


@dataclass(frozen=True)
class RoleMap:
    """Indices of the construction's named points within the instance."""

    r: int
    a: tuple
    b: tuple
    c: tuple
    d: tuple  # (d0, d1, d2)


@dataclass(frozen=True)
class ReductionArtifact:
    instance: Instance          # exact mode, all-integer coordinates
    quantities: GadgetQuantities
    epsilon: Fraction           # 1 / (600 n L)
    k: int                      # scaling exponent, 2**k > 600 n L
    delta_bound: Fraction       # 1.4 + W/(10 L) + 1/(20 L)
    cost_bound: Fraction        # scaled units, see build_reduction
    roles: RoleMap

    @property
    def scale(self) -> int:
        return 1 << self.k


def apex_exact_coords(alpha: int, beta: int, gamma: int):
    """Exact apex position relative to the upper anchor.

    Returns (y_rel, x_sq): the apex sits at (x, -y_rel) relative to a,
    with y_rel = (gamma^2 + beta^2 - alpha^2) / (2 gamma) rational and
    x = sqrt(x_sq) generally irrational, x_sq = beta^2 - y_rel^2.
    """
    if not (0 < alpha <= beta <= gamma < alpha + beta):
        raise UsageError(f"sides ({alpha}, {beta}, {gamma}) do not form a usable triangle")
    y_rel = Fraction(gamma * gamma + beta * beta - alpha * alpha, 2 * gamma)
    x_sq = beta * beta - y_rel * y_rel
    # law-of-cosines identities; both chords come out exactly right
    assert y_rel * y_rel + x_sq == beta * beta
    assert (gamma - y_rel) ** 2 + x_sq == alpha * alpha
    assert 0 < y_rel < gamma and x_sq > 0
    return y_rel, x_sq


def _round_nearest(value: Fraction, bits: int) -> Fraction:
    """Round to the nearest multiple of 2**-bits (half away from floor)."""
    scaled = value * (1 << bits)
    t = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return Fraction(t, 1 << bits)


def place_c(a: Point, b: Point, alpha: int, beta: int, gamma: int,
            precision_bits: int) -> Point:
    """Apex approximation with |a c| ~ beta, |c b| ~ alpha, to k bits.

    a and b must be exact points on a common vertical line with
    |ab| = gamma.  Both coordinates of the result are dyadic with at
    most precision_bits fractional bits, and |c - c_tilde| < 2**-bits:
    each coordinate is rounded to nearest (the x square root with one
    guard bit), so the per-coordinate error is at most 2**-(bits+1).
    """
    if a.mode != "exact" or b.mode != "exact":
        raise UsageError("place_c requires exact-mode anchor points")
    if a.x != b.x or a.y - b.y != gamma:
        raise UsageError("anchors must be vertically aligned with |ab| = gamma")
    k = precision_bits
    y_rel, x_sq = apex_exact_coords(alpha, beta, gamma)
    # floor of x * 2**(k+1), then round to the nearest k-bit value
    num, den = x_sq.numerator, x_sq.denominator
    s = isqrt((num << (2 * k + 2)) // den)
    x_tilde = Fraction((s + 1) >> 1, 1 << k)
    y_tilde = _round_nearest(y_rel, k)
    assert x_tilde > 0
    # certify |c - c_tilde| < 2**-k: per-coordinate errors are at most
    # half an ulp, so the squared error is at most 2 * 4**-(k+1) < 4**-k
    half_ulp = Fraction(1, 1 << (k + 1))
    assert abs(y_rel - y_tilde) <= half_ulp
    # |x - x_tilde| <= half_ulp, checked on squares (x >= 0 throughout)
    lo = x_tilde - half_ulp
    hi = x_tilde + half_ulp
    assert (lo <= 0 or lo * lo <= x_sq) and x_sq <= hi * hi
    return Point(a.x + x_tilde, a.y - y_tilde)


def build_reduction(kinstance: KnapsackInstance) -> ReductionArtifact:
    """Construct the 3n+4 point instance for a knapsack question.

    Point order is r, then (a_i, b_i, c_i) per item, then d_0, d_1, d_2.
    All invariants are re-verified in exact arithmetic before returning.
    """
    geo = _build_geometry(kinstance.items)
    q = geo.quantities
    scale = 1 << geo.k
    delta = (Fraction(7, 5)
             + Fraction(kinstance.weight_bound, 10 * q.L)
             + Fraction(1, 20 * q.L))
    cost_bound = (geo.base_cost_hi
                  - kinstance.profit_bound * scale
                  + (scale >> 1))
    # P beyond any achievable profit can push K below zero; every tree
    # has positive cost, so clamping to 0 preserves the decision
    instance = Instance(geo.points, 0, delta, max(cost_bound, Fraction(0)))
    return ReductionArtifact(
        instance=instance,
        quantities=q,
        epsilon=geo.epsilon,
        k=geo.k,
        delta_bound=delta,
        cost_bound=Fraction(cost_bound),
        roles=geo.roles,
    )


@dataclass(frozen=True)
class _Geometry:
    quantities: GadgetQuantities
    points: tuple
    roles: RoleMap
    epsilon: Fraction
    k: int
    base_cost_hi: Fraction  # directed-rounding upper bound, scaled units


@lru_cache(maxsize=4096)
def _build_geometry(items: tuple) -> _Geometry:
    q = GadgetQuantities.from_items(items)
    n, L, m = q.n, q.L, q.m
    epsilon = Fraction(1, 600 * n * L)
    bound = 600 * n * L
    k = (bound - 1).bit_length() + 1  # smallest power of two above, plus a guard bit
    assert (1 << k) > bound
    scale = 1 << k

    a_pts = []
    b_pts = []
    c_pts = []
    for i in range(n):
        a = Point(Fraction(0), Fraction(-4 * L - q.prefix[i]))
        b = Point(a.x, a.y - q.gamma[i])
        c = place_c(a, b, q.alpha[i], q.beta[i], q.gamma[i], k)
        a_pts.append(a)
        b_pts.append(b)
        c_pts.append(c)
    d_pts = [Point(Fraction(0), Fraction(-5 * L)),
             Point(Fraction(0), Fraction(-8 * L)),
             Point(Fraction(-6 * L), Fraction(-8 * L))]
    r = Point(Fraction(0), Fraction(0))

    unscaled = [r]
    index = {"r": 0, "a": [], "b": [], "c": [], "d": []}
    for i in range(n):
        index["a"].append(len(unscaled)); unscaled.append(a_pts[i])
        index["b"].append(len(unscaled)); unscaled.append(b_pts[i])
        index["c"].append(len(unscaled)); unscaled.append(c_pts[i])
    for d in d_pts:
        index["d"].append(len(unscaled)); unscaled.append(d)
    roles = RoleMap(0, tuple(index["a"]), tuple(index["b"]),
                    tuple(index["c"]), tuple(index["d"]))

    points = tuple(Point(p.x * scale, p.y * scale) for p in unscaled)
    assert len(points) == 3 * n + 4
    _verify_geometry(points, roles, q, epsilon, k)

    base_parent = _base_parent(roles, n)
    probe = Instance(points, 0, Fraction(2))  # bounds filled in later
    base_cost = cost(Tree(probe, base_parent), precision_bits=k + 32)
    return _Geometry(q, points, roles, epsilon, k, base_cost.hi)


def _verify_geometry(points, roles, q, epsilon, k):
    """Exact re-verification of every construction invariant."""
    n, L, m = q.n, q.L, q.m
    scale = 1 << k
    sc2 = scale * scale
    for p in points:
        assert p.x.denominator == 1 and p.y.denominator == 1, "non-integer coordinate"
        limit = 4 * ((L - 1).bit_length() + k)
        assert p.x.numerator.bit_length() <= limit
        assert p.y.numerator.bit_length() <= limit
    r = points[roles.r]
    assert (r.x, r.y) == (0, 0)
    for i in range(n):
        a, b, c = points[roles.a[i]], points[roles.b[i]], points[roles.c[i]]
        assert (a.x, a.y) == (0, (-4 * L - q.prefix[i]) * scale)
        assert (b.x, b.y) == (a.x, a.y - q.gamma[i] * scale)
        assert squared_distance(a, b) == q.gamma[i] ** 2 * sc2
        if i + 1 < n:
            nxt = points[roles.a[i + 1]]
            assert squared_distance(b, nxt) == m * m * sc2
        assert c.x > 0, "apex must sit strictly right of the y-axis"
        # |a c| within epsilon of beta, |c b| within epsilon of alpha
        for anchor, side in ((a, q.beta[i]), (b, q.alpha[i])):
            d_sq = squared_distance(anchor, c)
            assert (side - epsilon) ** 2 * sc2 < d_sq < (side + epsilon) ** 2 * sc2
    d0, d1, d2 = (points[j] for j in roles.d)
    assert (d0.x, d0.y) == (0, -5 * L * scale)
    assert (d1.x, d1.y) == (0, -8 * L * scale)
    assert (d2.x, d2.y) == (-6 * L * scale, -8 * L * scale)
    assert squared_distance(r, d2) == (10 * L) ** 2 * sc2


def _base_parent(roles: RoleMap, n: int) -> dict:
    parent = {roles.a[0]: roles.r}
    for i in range(n):
        parent[roles.b[i]] = roles.a[i]
        parent[roles.c[i]] = roles.b[i]
        if i + 1 < n:
            parent[roles.a[i + 1]] = roles.b[i]
    d0, d1, d2 = roles.d
    parent[d0] = roles.b[n - 1]
    parent[d1] = d0
    parent[d2] = d1
    return parent


def base_tree(artifact: ReductionArtifact) -> Tree:
    """All regular edges except the a_i c_i ones; delay exactly 7/5."""
    return Tree(artifact.instance, _base_parent(artifact.roles, artifact.quantities.n))


def regular_tree(artifact: ReductionArtifact, missing) -> Tree:
    """The regular tree that omits the given per-item gadget edge.

    missing[i] is one of "ab", "ac", "bc": which of the three edges
    a_i b_i, a_i c_i, b_i c_i the tree leaves out.
    """
    roles = artifact.roles
    n = artifact.quantities.n
    missing = tuple(missing)
    if len(missing) != n or any(ch not in GADGET_CHOICES for ch in missing):
        raise UsageError(f"missing must be one of {GADGET_CHOICES} per item")
    parent = {roles.a[0]: roles.r}
    for i in range(n):
        a, b, c = roles.a[i], roles.b[i], roles.c[i]
        if missing[i] == "ac":
            parent[b] = a
            parent[c] = b
        elif missing[i] == "ab":
            parent[c] = a
            parent[b] = c
        else:  # "bc" missing: the apex hangs off a
            parent[b] = a
            parent[c] = a
        if i + 1 < n:
            parent[roles.a[i + 1]] = roles.b[i]
    d0, d1, d2 = roles.d
    parent[d0] = roles.b[n - 1]
    parent[d1] = d0
    parent[d2] = d1
    return Tree(artifact.instance, parent)


def selection_tree(artifact: ReductionArtifact, selected) -> Tree:
    """Regular tree encoding an item subset (0-based indices).

    Selected items route the spine through their apex (a_i c_i b_i),
    paying alpha+beta instead of gamma on the way down but saving
    gamma - beta = p_i of total length.
    """
    n = artifact.quantities.n
    selected = set(selected)
    if not selected <= set(range(n)):
        raise UsageError("selection must be a subset of the item indices")
    return regular_tree(artifact,
                        tuple("ab" if i in selected else "ac" for i in range(n)))


@dataclass(frozen=True)
class RegularTreeStats:
    """Closed-form evaluation of a regular tree with exact apexes.

    With the apexes in their exact positions every gadget edge has
    integer length (|a_i c_i| = beta_i, |c_i b_i| = alpha_i), so cost
    and the root-to-d2 distance are integers in unscaled units.
    """

    dist_rd2: int
    cost: int
    delay: Fraction


def regular_tree_stats_exact(q: GadgetQuantities, missing) -> RegularTreeStats:
    n, L, m = q.n, q.L, q.m
    missing = tuple(missing)
    dist = 4 * L
    total = 4 * L + 3 * L + 6 * L + n * m  # r-a1, d0-d1, d1-d2, all b->anchor links
    for i in range(n):
        pair = {"ab": q.alpha[i] + q.beta[i],
                "ac": q.alpha[i] + q.gamma[i],
                "bc": q.beta[i] + q.gamma[i]}[missing[i]]
        total += pair
        dist += q.alpha[i] + q.beta[i] if missing[i] == "ab" else q.gamma[i]
        dist += m  # b_i to the next anchor (a_{i+1} or d_0)
    dist += 3 * L + 6 * L  # d0-d1, d1-d2
    return RegularTreeStats(dist, total, Fraction(dist, 10 * L))


def selection_stats_exact(q: GadgetQuantities, selected) -> RegularTreeStats:
    selected = set(selected)
    return regular_tree_stats_exact(
        q, tuple("ab" if i in selected else "ac" for i in range(q.n)))


def base_cost_exact(q: GadgetQuantities) -> int:
    """ell(T_0) with exact apexes: 14 L + sum(alpha), unscaled units."""
    return regular_tree_stats_exact(q, ("ac",) * q.n).cost


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditReport:
    passed: bool
    checks: tuple

    def failures(self):
        return [c for c in self.checks if not c.passed]


def _all_or_sampled_patterns(n, samples, seed):
    if 3 ** n <= samples:
        def gen():
            pattern = [0] * n
            while True:
                yield tuple(GADGET_CHOICES[x] for x in pattern)
                i = 0
                while i < n and pattern[i] == 2:
                    pattern[i] = 0
                    i += 1
                if i == n:
                    return
                pattern[i] += 1
        return list(gen()), True
    rng = random.Random(seed)
    return [tuple(rng.choice(GADGET_CHOICES) for _ in range(n))
            for _ in range(samples)], False


def audit_lemmas(artifact: ReductionArtifact, *, samples: int = 200,
                 seed: int = 0, precision_bits: int | None = None) -> AuditReport:
    """Machine-check the structural inequalities of the construction.

    (i) regular trees attain their delay at d_2 and every other vertex
    dilation stays below 1.25 (with the per-vertex bound for a_i, b_i,
    c_i and the sharper ones for d_0, d_1); (ii) the base tree costs
    less than 14.5 L and has delay exactly 7/5; (iii) rerouting d_2 away
    from d_1 always exceeds the base cost; (iv) the approximated apexes
    move any regular tree's cost by less than 12 n eps and its delay by
    less than 20 n eps.  All checks use directed rounding; a failure
    names the check and the offending tree.
    """
    q = artifact.quantities
    n, L = q.n, q.L
    scale = artifact.scale
    bits = precision_bits if precision_bits is not None else artifact.k + 48
    roles = artifact.roles
    inst = artifact.instance
    pts = inst.points
    checks = []

    patterns, exhaustive = _all_or_sampled_patterns(n, samples, seed)
    quarter = Fraction(5, 4)

    def vertex_bound(v):
        for i in range(n):
            if v in (roles.a[i], roles.b[i], roles.c[i]):
                return Fraction(5 * L + q.prefix[i], 4 * L + q.prefix[i])
        if v == roles.d[0]:
            return Fraction(6, 5)
        if v == roles.d[1]:
            return quarter
        return None

    bad = []
    for pattern in patterns:
        tree = regular_tree(artifact, pattern)
        dists = tree.root_distance_intervals(bits)
        d2 = roles.d[2]
        rd2 = Interval.sqrt(squared_distance(pts[roles.r], pts[d2]), bits)
        d2_ratio = dists[d2] / rd2
        for v in range(inst.n):
            if v in (roles.r, d2):
                continue
            rv = Interval.sqrt(squared_distance(pts[roles.r], pts[v]), bits)
            ratio = dists[v] / rv
            bound = vertex_bound(v)
            if not ratio.certainly_le(quarter):
                bad.append((pattern, v, "dilation not certified <= 1.25"))
            elif bound is not None and not ratio.certainly_lt(bound):
                bad.append((pattern, v, f"dilation not certified < {bound}"))
            elif not ratio.certainly_lt(d2_ratio):
                bad.append((pattern, v, "d_2 does not dominate"))
    checks.append(AuditCheck(
        "regular-delay-dominance",
        not bad,
        f"{len(patterns)} trees ({'all' if exhaustive else 'sampled'}); "
        + (f"violations: {bad[:3]}" if bad else "max ratio checks certified")))

    t0 = base_tree(artifact)
    base_delay = tree_delay(t0, precision_bits=bits)
    base_cost = cost(t0, precision_bits=bits)
    seven_fifths = Fraction(7, 5)
    ok_delay = base_delay.is_point and base_delay.lo == seven_fifths
    ok_cost = base_cost.certainly_lt(Fraction(29, 2) * L * scale)
    checks.append(AuditCheck(
        "base-tree-bounds",
        ok_delay and ok_cost,
        f"delay={base_delay.lo}..{base_delay.hi} (want exactly 7/5), "
        f"cost < 14.5*L*2^k {'certified' if ok_cost else 'FAILED'}"))

    reroute_a = Interval.point(8 * L * scale) + Interval.sqrt(
        Fraction(45 * L * L * scale * scale), bits)   # |r d1| + |d0 d2|
    reroute_b = Interval.point(16 * L * scale)        # |r d2| + |d2 d1|
    ok_reroute = (base_cost.certainly_lt(reroute_a)
                  and base_cost.certainly_lt(reroute_b))
    checks.append(AuditCheck(
        "exclude-d2-reroute-cost",
        ok_reroute,
        f"8L+3*sqrt(5)L ~= {float(reroute_a.lo / (L * scale)):.4f}L and 16L "
        "both certified above the base cost"))

    env_cost = Fraction(12 * n) * artifact.epsilon * scale
    env_delay = Fraction(20 * n) * artifact.epsilon
    bad_env = []
    for pattern in patterns:
        tree = regular_tree(artifact, pattern)
        stats = regular_tree_stats_exact(q, pattern)
        c_tilde = cost(tree, precision_bits=bits)
        drift_cost = (c_tilde - Fraction(stats.cost * scale)).magnitude()
        delay_tilde = tree_delay(tree, precision_bits=bits)
        drift_delay = (delay_tilde - stats.delay).magnitude()
        if not drift_cost.certainly_lt(env_cost):
            bad_env.append((pattern, "cost drift not certified < 12 n eps"))
        if not drift_delay.certainly_lt(env_delay):
            bad_env.append((pattern, "delay drift not certified < 20 n eps"))
    checks.append(AuditCheck(
        "apex-perturbation-envelope",
        not bad_env,
        f"{len(patterns)} trees within 12n*eps cost / 20n*eps delay envelopes"
        + ("" if not bad_env else f"; violations: {bad_env[:3]}")))

    return AuditReport(all(c.passed for c in checks), tuple(checks))


def answer_via_reduction(kinstance: KnapsackInstance, solver=None) -> bool:
    """Decide the knapsack question through the geometric reduction.

    Builds the instance, then asks the solver (default: the exact
    branch-and-bound) whether a tree within (delta, K) exists.  The
    solver must decide the tree problem exactly.
    """
    artifact = build_reduction(kinstance)
    if solver is None:
        solver = solve_exact
    result = solver(artifact.instance)
    if isinstance(result, ExactResult):
        return result.feasible
    return bool(result)

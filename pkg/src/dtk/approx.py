"""Approximation pipeline: dilation-bounded spanner, then the shortest-path tree.

The tree inherits the spanner's per-pair guarantee from the source: for
every v, d_T(r,v) = d_G(r,v) <= delta |rv|, so the delay bound is
structural, not empirical.  Cost is reported against the MST; no
constant is asserted because none is known numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .geom import FLOAT, Instance
from .network import Tree, cost, minimum_spanning_tree, shortest_path_tree
from .network import delay as tree_delay
from .spanner import SpannerReport, greedy_spanner, star, _report


@dataclass(frozen=True)
class ApproxResult:
    tree: Tree
    spanner_report: SpannerReport
    delay: float
    cost: float
    mst_cost: float
    cost_ratio: float
    star_fallback: bool = False


def approximate(
    instance: Instance,
    delta: float | None = None,
    spanner_report: SpannerReport | None = None,
) -> ApproxResult:
    """Spanner + shortest-path tree; the star when delta <= 1.

    A precomputed spanner_report for the same instance and delta may be
    supplied to avoid rebuilding the spanner.
    """
    if instance.mode != FLOAT:
        raise UsageError("approximate supports float mode only")
    delta = instance.delta if delta is None else float(delta)
    star_fallback = delta <= 1
    if spanner_report is not None and star_fallback:
        raise UsageError("cannot reuse a spanner report when delta <= 1")
    if star_fallback:
        report = _report(star(instance))
    elif spanner_report is not None:
        report = spanner_report
    else:
        report = greedy_spanner(instance, delta)
    if instance.n == 1:
        tree = Tree(instance, {})
    else:
        tree = shortest_path_tree(report.network)
    tree_cost = cost(tree)
    mst_cost = cost(minimum_spanning_tree(instance)) if instance.n > 1 else 0.0
    ratio = tree_cost / mst_cost if mst_cost > 0 else 1.0
    return ApproxResult(
        tree=tree,
        spanner_report=report,
        delay=tree_delay(tree),
        cost=tree_cost,
        mst_cost=mst_cost,
        cost_ratio=ratio,
        star_fallback=star_fallback,
    )

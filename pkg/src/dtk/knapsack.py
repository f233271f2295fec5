"""Knapsack decision instances and two independent solvers.

The dynamic program is the workhorse; the subset brute force exists
only to anchor it (and the gadget construction built on top of it)
against a second, dumber opinion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceededError, UsageError

BRUTE_FORCE_GUARD = 20


@dataclass(frozen=True)
class KnapsackInstance:
    """Items (profit, weight) with profit bound P and weight bound W.

    All quantities are strictly positive integers.
    """

    items: tuple
    profit_bound: int
    weight_bound: int

    def __post_init__(self):
        items = tuple((int(p), int(w)) for p, w in self.items)
        object.__setattr__(self, "items", items)
        for idx, (p, w) in enumerate(items):
            if p <= 0 or w <= 0:
                raise UsageError(f"item {idx} must have positive profit and weight")
        if int(self.profit_bound) <= 0:
            raise UsageError("profit bound P must be positive")
        if int(self.weight_bound) <= 0:
            raise UsageError("weight bound W must be positive")
        object.__setattr__(self, "profit_bound", int(self.profit_bound))
        object.__setattr__(self, "weight_bound", int(self.weight_bound))

    @property
    def n(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class KnapsackAnswer:
    positive: bool
    witness: tuple | None  # 0-based item indices, present iff positive

    def __bool__(self) -> bool:
        return self.positive


def solve_dp(instance: KnapsackInstance) -> KnapsackAnswer:
    """Decision by profit-maximizing DP over the weight dimension.

    Positive iff some subset has total weight <= W and total profit >= P;
    a witness subset is reconstructed from the table when positive.
    """
    W = instance.weight_bound
    items = instance.items
    best = [0] * (W + 1)
    take = []  # take[i][w] = True if item i is used in the best solution at w
    for p, w in items:
        row = bytearray(W + 1)
        for cap in range(W, w - 1, -1):
            cand = best[cap - w] + p
            if cand > best[cap]:
                best[cap] = cand
                row[cap] = 1
        take.append(row)
    if best[W] < instance.profit_bound:
        return KnapsackAnswer(False, None)
    witness = []
    cap = W
    for i in range(len(items) - 1, -1, -1):
        if take[i][cap]:
            witness.append(i)
            cap -= items[i][1]
    return KnapsackAnswer(True, tuple(reversed(witness)))


def solve_bruteforce(instance: KnapsackInstance, max_n: int = BRUTE_FORCE_GUARD) -> KnapsackAnswer:
    """Exhaustive subset scan; guard keeps 2^n at desk scale."""
    n = instance.n
    if n > max_n:
        raise GuardExceededError(f"n={n} exceeds brute-force guard {max_n}")
    items = instance.items
    for mask in range(1 << n):
        profit = weight = 0
        for i in range(n):
            if mask >> i & 1:
                profit += items[i][0]
                weight += items[i][1]
        if weight <= instance.weight_bound and profit >= instance.profit_bound:
            return KnapsackAnswer(True, tuple(i for i in range(n) if mask >> i & 1))
    return KnapsackAnswer(False, None)

"""Dilation-bounded broadcast trees.

Library + CLI for the single-source dilation-bounded minimum spanning
tree problem: a spanner-based approximation pipeline, exact solvers for
small instances, and a fully audited knapsack gadget construction with
exact rational geometry.
"""

from .approx import ApproxResult, approximate
from .errors import (DisconnectedError, GuardExceededError, ModeMismatchError,
                     PrecisionError, UsageError)
from .exact import ExactResult, enumerate_spanning_trees, solve_exact
from .geom import EXACT, FLOAT, Instance, Point, distance, exact_instance, \
    float_instance, squared_distance
from .intervals import Interval, sqrt_bounds
from .knapsack import KnapsackAnswer, KnapsackInstance, solve_bruteforce, solve_dp
from .network import (Network, Tree, complete_network, cost, delay,
                      dilation_all_pairs, make_network, make_tree,
                      minimum_spanning_tree, shortest_path_tree)
from .reduction import (AuditReport, GadgetQuantities, ReductionArtifact,
                        answer_via_reduction, audit_lemmas, base_tree,
                        build_reduction, place_c, regular_tree,
                        selection_tree)
from .spanner import SpannerReport, greedy_spanner, star

__version__ = "0.1.0"

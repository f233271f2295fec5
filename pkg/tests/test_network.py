import math
from fractions import Fraction

import pytest

from conftest import random_instance, reference_dijkstra, walk_root_distance
from dtk.errors import DisconnectedError, UsageError
from dtk.exact import enumerate_spanning_trees
from dtk.geom import exact_instance, float_instance
from dtk.network import (Network, Tree, complete_network, cost, delay,
                         dilation_all_pairs, make_network, make_tree,
                         minimum_spanning_tree, shortest_path_tree)
from dtk.spanner import greedy_spanner, star


def test_cost_empty_edge_set_is_zero():
    inst = float_instance([(0.0, 0.0), (1.0, 1.0)])
    assert cost(make_network(inst, ())) == 0.0


def test_cost_star_hand_value():
    inst = float_instance([(0.0, 0.0), (3.0, 4.0), (0.0, 5.0)])
    assert cost(star(inst)) == 10.0


def test_cost_exact_mode_interval():
    inst = exact_instance([(0, 0), (3, 4), (0, 5)])
    total = cost(star(inst))
    assert total.is_point and total.lo == 10


def test_spt_on_tree_is_identity():
    inst = random_instance(3, 8)
    mst = minimum_spanning_tree(inst)
    again = shortest_path_tree(mst.to_network())
    assert again.parent == mst.parent


def test_spt_tie_breaks_to_smallest_predecessor():
    # collinear triple: the far point is reachable directly (2.0) or via
    # the middle point (1+1); the tie goes to predecessor 0
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])
    tree = shortest_path_tree(complete_network(inst))
    assert tree.parent == {1: 0, 2: 0}


def test_spt_preserves_network_distances_on_spanner():
    inst = random_instance(11, 50, delta=1.5)
    net = greedy_spanner(inst).network
    tree = shortest_path_tree(net)
    dist = reference_dijkstra(net, inst.root)
    rp = inst.points[inst.root]
    for v in range(inst.n):
        if v == inst.root:
            continue
        assert tree.root_distance[v] == pytest.approx(dist[v], rel=1e-12)
        rv = math.dist((rp.x, rp.y), (inst.points[v].x, inst.points[v].y))
        assert tree.root_distance[v] <= 1.5 * rv * (1 + 1e-9)


def test_spt_disconnected_names_vertex():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (5.0, 5.0)])
    net = make_network(inst, [(0, 1)])
    with pytest.raises(DisconnectedError, match="vertex 2"):
        shortest_path_tree(net)


def test_delay_star_is_one():
    inst = random_instance(5, 9)
    assert delay(shortest_path_tree(star(inst))) == 1.0


def test_delay_single_point_convention():
    inst = float_instance([(0.0, 0.0)])
    assert delay(Tree(inst, {})) == 1.0


def test_delay_matches_path_walk_oracle():
    import random as _random

    inst = random_instance(17, 10)
    rng = _random.Random(17)
    # a random tree: attach each vertex to an arbitrary earlier one
    order = [inst.root] + [v for v in range(inst.n) if v != inst.root]
    parent = {v: rng.choice(order[:k]) for k, v in enumerate(order) if k > 0}
    tree = make_tree(inst, parent)
    rp = inst.points[inst.root]
    expected = max(
        walk_root_distance(tree, v)
        / math.dist((rp.x, rp.y), (inst.points[v].x, inst.points[v].y))
        for v in range(inst.n) if v != inst.root
    )
    assert delay(tree) == pytest.approx(expected, rel=1e-12)


def test_delay_exact_mode_anchor_chain_is_exact():
    # chain down the y-axis, then a horizontal hop: every edge and the
    # direct distance to the far corner are integers (6-8-10 triangle)
    inst = exact_instance([(0, 0), (0, -4), (0, -8), (-6, -8)], delta=Fraction(2))
    tree = make_tree(inst, {1: 0, 2: 1, 3: 2})
    iv = delay(tree, precision_bits=64)
    assert iv.is_point and iv.lo == Fraction(7, 5)


def test_dilation_complete_graph_is_one():
    inst = random_instance(23, 8)
    assert dilation_all_pairs(complete_network(inst)) == 1.0


def test_dilation_collinear_path_is_one():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])
    net = make_network(inst, [(0, 1), (1, 2)])
    assert dilation_all_pairs(net) == 1.0


def test_dilation_spanner_within_bound():
    inst = random_instance(29, 40, delta=2.0)
    net = greedy_spanner(inst).network
    assert dilation_all_pairs(net) <= 2.0 * (1 + 1e-9)


def test_dilation_disconnected_returns_inf():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (5.0, 5.0)])
    net = make_network(inst, [(0, 1)])
    assert dilation_all_pairs(net) == math.inf


def test_mst_three_collinear_points():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)])
    assert minimum_spanning_tree(inst).edges() == frozenset({(0, 1), (1, 2)})


def test_mst_square_with_center_is_center_star(square_with_center):
    mst = minimum_spanning_tree(square_with_center)
    assert mst.edges() == frozenset({(0, 1), (0, 2), (0, 3), (0, 4)})


def test_mst_matches_enumeration_minimum():
    inst = random_instance(31, 8)
    best = [math.inf]

    def vis(parent, total, dly):
        best[0] = min(best[0], total)

    enumerate_spanning_trees(inst, vis)
    assert cost(minimum_spanning_tree(inst)) == pytest.approx(best[0], rel=1e-12)


def test_mst_exact_mode_grid():
    inst = exact_instance([(0, 0), (0, 1), (1, 0), (1, 1)])
    mst = minimum_spanning_tree(inst)
    total = cost(mst)
    assert total.is_point and total.lo == 3


def test_any_tree_costs_at_least_mst():
    inst = random_instance(37, 9)
    mst_cost = cost(minimum_spanning_tree(inst))
    star_tree = shortest_path_tree(star(inst))
    assert cost(star_tree) >= mst_cost - 1e-9


def test_mst_cut_property_spot_check():
    inst = random_instance(41, 9)
    mst = minimum_spanning_tree(inst)
    pts = inst.points
    base = cost(mst)
    for drop in sorted(mst.edges())[:3]:
        # removing an edge splits the tree; reconnecting across the cut
        # can never beat the original
        keep = [e for e in mst.edges() if e != drop]
        comp = {inst.root}
        changed = True
        while changed:
            changed = False
            for i, j in keep:
                if (i in comp) != (j in comp):
                    comp.add(i if j in comp else j)
                    changed = True
        for i in range(inst.n):
            for j in range(i + 1, inst.n):
                if (i in comp) != (j in comp) and (i, j) != drop:
                    rewired = keep + [(i, j)]
                    assert cost(make_network(inst, rewired)) >= base - 1e-9


def test_dilation_at_least_spt_delay():
    inst = random_instance(43, 20, delta=1.7)
    net = greedy_spanner(inst).network
    assert dilation_all_pairs(net) >= delay(shortest_path_tree(net)) - 1e-12


def test_spt_delay_equals_max_distance_ratio():
    inst = random_instance(47, 25, delta=1.8)
    net = greedy_spanner(inst).network
    tree = shortest_path_tree(net)
    dist = reference_dijkstra(net, inst.root)
    rp = inst.points[inst.root]
    expected = max(
        dist[v] / math.dist((rp.x, rp.y), (inst.points[v].x, inst.points[v].y))
        for v in range(inst.n) if v != inst.root
    )
    assert delay(tree) == pytest.approx(expected, rel=1e-12)


def test_tree_validation_rejects_cycles_and_gaps():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])
    with pytest.raises(UsageError):
        make_tree(inst, {1: 2, 2: 1})
    with pytest.raises(UsageError):
        make_tree(inst, {1: 0})
    with pytest.raises(UsageError):
        make_tree(inst, {0: 1, 1: 0, 2: 0})


def test_network_rejects_self_loops_and_bad_indices():
    inst = float_instance([(0.0, 0.0), (1.0, 0.0)])
    with pytest.raises(UsageError):
        make_network(inst, [(0, 0)])
    with pytest.raises(UsageError):
        Network(inst, frozenset({(0, 7)}))


def test_edge_and_parent_file_round_trips_and_errors():
    from dtk.serialize import (load_network_edges, load_tree_parent,
                               save_network_edges, save_tree_parent)

    edges = frozenset({(0, 2), (1, 2)})
    assert load_network_edges(save_network_edges(edges), 3) == edges
    parent = {1: 0, 2: 1}
    assert load_tree_parent(save_tree_parent(parent), 3, 0) == parent
    with pytest.raises(UsageError, match="self-loop"):
        load_network_edges(b'{"edges":[[1,1]]}', 3)
    with pytest.raises(UsageError, match="duplicate edge"):
        load_network_edges(b'{"edges":[[0,1],[1,0]]}', 3)
    with pytest.raises(UsageError, match="out of range"):
        load_network_edges(b'{"edges":[[0,9]]}', 3)
    with pytest.raises(UsageError, match="root must not"):
        load_tree_parent(b'{"parent":{"0":1,"1":0,"2":0}}', 3, 0)

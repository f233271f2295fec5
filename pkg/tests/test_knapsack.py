import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtk.errors import GuardExceededError, UsageError
from dtk.knapsack import KnapsackInstance, solve_bruteforce, solve_dp
from dtk.serialize import load_knapsack, save_knapsack


def test_single_item_positive():
    ans = solve_dp(KnapsackInstance(((1, 1),), 1, 1))
    assert ans.positive and ans.witness == (0,)


def test_single_item_negative():
    ans = solve_dp(KnapsackInstance(((1, 1),), 2, 1))
    assert not ans.positive and ans.witness is None


def test_second_item_selected():
    k = KnapsackInstance(((1, 1), (2, 3)), 2, 3)
    dp = solve_dp(k)
    brute = solve_bruteforce(k)
    assert dp.positive and brute.positive
    assert dp.witness == (1,)


def test_witness_always_satisfies_bounds():
    k = KnapsackInstance(((3, 4), (2, 2), (5, 7), (1, 1)), 6, 9)
    ans = solve_dp(k)
    assert ans.positive
    profit = sum(k.items[i][0] for i in ans.witness)
    weight = sum(k.items[i][1] for i in ans.witness)
    assert profit >= k.profit_bound and weight <= k.weight_bound


items_strategy = st.lists(
    st.tuples(st.integers(min_value=1, max_value=30),
              st.integers(min_value=1, max_value=30)),
    min_size=1, max_size=10,
)


@given(items=items_strategy,
       P=st.integers(min_value=1, max_value=120),
       W=st.integers(min_value=1, max_value=120))
@settings(max_examples=250, deadline=None)
def test_dp_equals_bruteforce(items, P, W):
    k = KnapsackInstance(tuple(items), P, W)
    dp = solve_dp(k)
    brute = solve_bruteforce(k)
    assert dp.positive == brute.positive
    if dp.positive:
        profit = sum(k.items[i][0] for i in dp.witness)
        weight = sum(k.items[i][1] for i in dp.witness)
        assert profit >= P and weight <= W


def test_validation_rejects_nonpositive_values():
    with pytest.raises(UsageError):
        KnapsackInstance(((0, 1),), 1, 1)
    with pytest.raises(UsageError):
        KnapsackInstance(((1, -2),), 1, 1)
    with pytest.raises(UsageError):
        KnapsackInstance(((1, 1),), 0, 1)
    with pytest.raises(UsageError):
        KnapsackInstance(((1, 1),), 1, 0)


def test_bruteforce_guard():
    items = tuple((1, 1) for _ in range(25))
    with pytest.raises(GuardExceededError):
        solve_bruteforce(KnapsackInstance(items, 1, 1))


def test_json_round_trip():
    k = KnapsackInstance(((3, 4), (2, 2)), 5, 6)
    again = load_knapsack(save_knapsack(k))
    assert again == k


def test_load_rejects_malformed():
    with pytest.raises(UsageError, match="malformed"):
        load_knapsack(b'{"items":[[1]],"P":1,"W":1}')
    with pytest.raises(UsageError, match="malformed"):
        load_knapsack(b'{"items":[[1,1]],"P":"x","W":1}')

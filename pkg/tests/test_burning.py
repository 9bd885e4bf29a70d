import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from burnkit import generators as gen
from burnkit.bounds import ceil_sqrt
from burnkit.burning import (
    BurnSchedule,
    exact_burning_number,
    exact_modified_burning_number,
    is_valid,
    simulate,
)
from burnkit.errors import BudgetExceeded, DomainError, InputError
from burnkit.graph import Graph
from burnkit.verify import all_sequences_fail
from oracles import naive_burn_rounds, naive_burning_number, to_nx


def test_figure1_trace(fig1):
    trace = simulate(fig1, BurnSchedule((2, 5, 8)))
    assert trace.complete and trace.rounds_used == 3
    # round labels exactly as drawn: v3 first, v6 second, v9 last
    assert trace.burn_round == (2, 2, 1, 2, 3, 2, 3, 3, 3)
    assert trace.burned_in(1) == [2]


def test_figure1_exact(fig1):
    b, witness = exact_burning_number(fig1)
    assert b == 3 and is_valid(fig1, witness)
    assert all_sequences_fail(fig1, 2)


def test_partial_trace():
    trace = simulate(gen.path(4), BurnSchedule((1,)))
    assert trace.unburned == [0, 2, 3] and not trace.complete


def test_repeated_source_is_allowed():
    trace = simulate(gen.path(3), BurnSchedule((1, 1)))
    assert trace.complete


def test_initial_set_round_one():
    trace = simulate(gen.path(5), BurnSchedule((4,), frozenset({0})))
    assert trace.burn_round == (1, None, None, None, 1)


def test_schedule_validation():
    with pytest.raises(InputError):
        BurnSchedule(())
    with pytest.raises(InputError):
        simulate(gen.path(3), BurnSchedule((5,)))
    with pytest.raises(InputError):
        BurnSchedule.from_json({"sources": [1, 2], "rounds": 3})
    s = BurnSchedule((2, 5, 8), frozenset({1}))
    assert BurnSchedule.from_json(s.to_json()) == s


def test_small_exact_values():
    assert exact_burning_number(gen.path(1))[0] == 1
    assert exact_burning_number(gen.path(2))[0] == 2
    assert exact_burning_number(gen.cycle(10))[0] == ceil_sqrt(10)
    # lexicographically smallest witness
    assert exact_burning_number(gen.path(4))[1].sources == (1, 3)


def test_modified_burning():
    b, w = exact_modified_burning_number(gen.path(5), {0})
    assert b == 2 and w.initial_set == frozenset({0})
    with pytest.raises(InputError):
        exact_modified_burning_number(gen.path(5), set())


def test_budget_and_domain_errors(monkeypatch):
    with pytest.raises(BudgetExceeded) as info:
        exact_burning_number(gen.path(25), budget=3)
    assert info.value.partial == 4
    with pytest.raises(DomainError):
        exact_burning_number(Graph.from_edges(4, [(0, 1), (2, 3)]))
    monkeypatch.setenv("BURNKIT_EXACT_CAP", "5")
    with pytest.raises(InputError):
        exact_burning_number(gen.path(6))
    monkeypatch.setenv("BURNKIT_EXACT_CAP", "x")
    with pytest.raises(InputError):
        exact_burning_number(gen.path(3))


def _small_graphs():
    n = st.integers(1, 7)
    return n.flatmap(lambda n: st.tuples(st.just(n), st.integers(max(0, n - 1), n * (n - 1) // 2), st.integers(0, 10**6)))


@given(_small_graphs())
def test_exact_matches_exhaustive_oracle(params):
    n, m, seed = params
    g = gen.random_connected_graph(n, m, seed)
    b, witness = exact_burning_number(g)
    assert b == naive_burning_number(to_nx(g))
    assert is_valid(g, witness)


@given(_small_graphs(), st.data())
def test_simulate_matches_reference(params, data):
    n, m, seed = params
    g = gen.random_connected_graph(n, m, seed)
    seq = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=5))
    init = data.draw(st.sets(st.integers(0, n - 1), max_size=2))
    trace = simulate(g, BurnSchedule(tuple(seq), frozenset(init)))
    ref = naive_burn_rounds(to_nx(g), seq, init)
    assert {v: r for v, r in enumerate(trace.burn_round) if r is not None} == ref


@given(_small_graphs())
def test_modified_never_worse(params):
    n, m, seed = params
    g = gen.random_connected_graph(n, m, seed)
    b, _ = exact_burning_number(g)
    for u in range(n):
        bu, w = exact_modified_burning_number(g, {u})
        assert bu <= b and is_valid(g, w)


@given(st.integers(2, 9), st.integers(0, 10**6))
def test_burning_number_at_most_spanning_tree(n, seed):
    g = gen.random_connected_graph(n, min(n * (n - 1) // 2, n + 2), seed)
    t = nx.minimum_spanning_tree(to_nx(g))
    tree = Graph.from_edges(n, list(t.edges()))
    assert exact_burning_number(g)[0] <= exact_burning_number(tree)[0]


def test_witness_minimal_on_small_trees():
    for seed in range(20):
        t = gen.random_tree(7, seed)
        b, _ = exact_burning_number(t)
        assert not any(is_valid(t, BurnSchedule(s)) for s in itertools.product(range(7), repeat=b - 1))

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burnkit import generators as gen
from burnkit.bounds import bound_power, ceil_sqrt
from burnkit.burning import exact_burning_number, is_valid
from burnkit.errors import DomainError, InputError
from burnkit.graph import diameter, distance_matrix, graph_power, is_k_branching
from burnkit.powers import burn_graph_power, extract_branching_spanning_tree


def test_path5_square_is_star():
    s, log = extract_branching_spanning_tree(gen.path(5), 2)
    assert s.degree(2) == 4 and log.center == 2 and not log.levels


def test_extract_domain():
    with pytest.raises(DomainError):
        extract_branching_spanning_tree(gen.path(4), 3)
    with pytest.raises(InputError):
        extract_branching_spanning_tree(gen.path(4), 0)


@given(st.integers(4, 60), st.integers(0, 10**6), st.sampled_from([2, 3, 4]))
def test_peeling_properties(n, seed, k):
    t = gen.random_tree(n, seed)
    if k > diameter(t) - 1:
        return
    s, log = extract_branching_spanning_tree(t, k)
    dist = distance_matrix(t)
    assert s.n == n and s.m == n - 1
    assert is_k_branching(s, k + 1)
    assert all(dist[u][v] <= k for u, v in s.edges())
    assert all(len(level.removed) >= k for level in log.levels)


def test_power_complete_case():
    cert = burn_graph_power(gen.path(4), 3)
    assert cert.extra["case"] == "complete" and cert.claimed_rounds == 2


def test_power_domain():
    with pytest.raises(InputError):
        burn_graph_power(gen.path(4), 4)
    with pytest.raises(InputError):
        burn_graph_power(gen.path(4), 1)


@given(st.integers(3, 20), st.integers(0, 10**6))
def test_square_within_sqrt_n(n, seed):
    rng = random.Random(seed)
    m = rng.randint(n - 1, max(n - 1, min(2 * n, n * (n - 1) // 2 - 1)))
    g = gen.random_connected_graph(n, m, seed)
    cert = burn_graph_power(g, 2)
    sq = graph_power(g, 2)
    assert is_valid(sq, cert.schedule) and cert.claimed_rounds <= ceil_sqrt(n)
    assert exact_burning_number(sq)[0] <= cert.claimed_rounds


@given(st.integers(5, 80), st.integers(0, 10**6), st.integers(2, 6))
def test_higher_powers_within_bound(n, seed, k):
    t = gen.random_tree(n, seed)
    if k > diameter(t):
        return
    cert = burn_graph_power(t, k)
    assert is_valid(graph_power(t, k), cert.schedule)
    assert cert.claimed_rounds <= bound_power(n, k)

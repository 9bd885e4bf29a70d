from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burnkit import generators as gen
from burnkit.decomp import (
    SplitCertificate,
    check_split_certificate,
    find_split_vertex,
    max_internals_for_order,
    min_leaf_count,
    min_order_for_internals,
    strip_leaves,
)
from burnkit.errors import DomainError, InputError
from burnkit.graph import component_on_edge_removal, internal_count, leaf_count


def test_path5_split():
    cert = find_split_vertex(gen.path(5), 2)
    # mirror image of the split at vertex 2 with v_m = 3
    assert cert.x == 2 and cert.large == 1
    assert cert.side_sizes == (2, 3)
    assert cert.to_json() == {"x": 2, "ordered_neighbors": [3, 1], "side_sizes": [2, 3], "p": "2"}


def test_split_rejects_bad_thresholds():
    with pytest.raises(InputError):
        find_split_vertex(gen.path(2), 1)
    with pytest.raises(InputError):
        find_split_vertex(gen.path(5), 4)
    with pytest.raises(InputError):
        find_split_vertex(gen.path(5), Fraction(1, 2))
    with pytest.raises(InputError):
        find_split_vertex(gen.path(5), "abc")


def test_tampered_certificate_is_caught():
    t = gen.path(5)
    cert = find_split_vertex(t, 2)
    bad = SplitCertificate(cert.x, cert.ordered_neighbors, (1, 4), cert.p)
    with pytest.raises(AssertionError):
        check_split_certificate(t, bad)


@given(st.integers(3, 60), st.integers(0, 10**6), st.fractions(0, 1))
def test_split_certificate_properties(n, seed, frac):
    t = gen.random_tree(n, seed)
    p = 1 + frac * (n - 2 - Fraction(1, 100))
    cert = find_split_vertex(t, p)
    big = component_on_edge_removal(t, cert.x, cert.large)
    assert len(big) > p
    for v in cert.ordered_neighbors[:-1]:
        assert len(component_on_edge_removal(t, v, cert.x)) <= p


def test_counting_helpers():
    assert min_order_for_internals(3, 4) == 11
    assert max_internals_for_order(11, 4) == 3
    assert min_leaf_count(9, 3) == 5
    with pytest.raises(InputError):
        min_leaf_count(9, 2)


def test_strip_leaves(fig1):
    core, relabel = strip_leaves(fig1)
    assert sorted(relabel) == [2, 3, 5, 7]
    assert core.n == 4 and core.m == 3
    with pytest.raises(DomainError):
        strip_leaves(gen.path(2))


@given(st.sampled_from([3, 4, 5, 6]), st.integers(0, 200), st.integers(0, 10**6))
def test_counting_on_branching_trees(k, extra, seed):
    n = k + 1 + extra
    t = gen.random_branching_tree(n, k, seed)
    assert n >= min_order_for_internals(internal_count(t), k)
    assert internal_count(t) <= max_internals_for_order(n, k)
    assert leaf_count(t) >= min_leaf_count(n, k)


def test_star_split():
    cert = find_split_vertex(gen.star(6), 2)
    assert cert.x == 0 and cert.side_sizes[-1] == 5 and all(s == 1 for s in cert.side_sizes[:-1])


def test_figure1_split(fig1):
    check_split_certificate(fig1, find_split_vertex(fig1, 3))


@pytest.mark.parametrize("internals,k,order", [(1, 3, 4), (0, 5, 2), (3, 4, 11)])
def test_min_order_examples(internals, k, order):
    assert min_order_for_internals(internals, k) == order


@pytest.mark.parametrize("n,k,leaves", [(4, 3, 2), (10, 3, 5), (20, 4, 14)])
def test_min_leaf_examples(n, k, leaves):
    assert min_leaf_count(n, k) == leaves


def test_strip_star_keeps_centre():
    core, relabel = strip_leaves(gen.star(6))
    assert core.n == 1 and relabel == {0: 0}

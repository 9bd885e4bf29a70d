import pytest

from burnkit import generators as gen
from burnkit.errors import DomainError, InputError
from burnkit.graph import Tree, diameter, is_connected, is_k_branching


def test_basic_families():
    assert gen.path(5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert gen.star(4).degree(0) == 3
    assert gen.complete_graph(5).m == 10
    assert gen.cycle(5).m == 5
    s = gen.spider(3, 2)
    assert s.n == 7 and s.degree(0) == 3 and diameter(s) == 4


@pytest.mark.parametrize("seed", range(10))
def test_random_tree_is_tree_and_reproducible(seed):
    t = gen.random_tree(20, seed)
    assert isinstance(t, Tree) and t.m == 19
    assert gen.random_tree(20, seed) == t


def test_prufer_known_sequence():
    t = gen.prufer_to_tree([3, 3, 3, 4], 6)
    assert t.edges() == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]


@pytest.mark.parametrize("k", [3, 4, 5, 6])
@pytest.mark.parametrize("seed", range(5))
def test_branching_generators(k, seed):
    for n in (k + 1, 2 * k, 37):
        assert is_k_branching(gen.random_branching_tree(n, k, seed), k)
        assert is_k_branching(gen.caterpillar_branching(n, k, seed), k)


def test_branching_generator_rejects_infeasible_order():
    with pytest.raises(DomainError, match="4"):
        gen.random_branching_tree(3, 3)


def test_random_connected_graph():
    g = gen.random_connected_graph(10, 15, 1)
    assert g.m == 15 and is_connected(g)
    with pytest.raises(InputError):
        gen.random_connected_graph(5, 3)
    with pytest.raises(InputError):
        gen.random_connected_graph(4, 7)

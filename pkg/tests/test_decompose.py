"""Cycle extraction, hanging trees, threads, canonical labelling."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ubx.decompose import (
    active_cycle_indices,
    canonical_labelling,
    decompose_unicyclic,
)
from ubx.errors import NoActiveVertexError, NotUnicyclicError
from ubx.generators import GenSpec, gen_random_unicyclic
from ubx.graph import Graph


def cycle_graph(g: int, extra=()) -> Graph:
    return Graph(g + len(extra), [(i, (i + 1) % g) for i in range(g)] + list(extra))


def test_tree_rejected():
    with pytest.raises(NotUnicyclicError):
        decompose_unicyclic(Graph(3, [(0, 1), (1, 2)]))


def test_base_labelling_starts_at_smallest_cycle_id():
    # pendant ids below the cycle ids must not leak into the labelling
    g = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 0)])
    d = decompose_unicyclic(g)
    assert d.cycle[0] == 1
    assert d.cycle == (1, 2, 3, 4)


def test_fig2b_decomposition(fx):
    d = decompose_unicyclic(fx["fig2b"].graph)
    assert d.cycle == (0, 1, 2, 3, 4, 5)
    assert (d.L, d.b) == (0, 0)
    assert d.threads[1] == ((6, 7),)
    assert d.threads[6] == ((7,),)  # interior vertices carry their own walks
    assert d.ell[1] == 1


def test_fig2c_decomposition(fx):
    d = decompose_unicyclic(fx["fig2c"].graph)
    assert (d.L, d.b) == (2, 1)
    assert sorted(d.branch_active) == [2]
    assert sorted(d.branching) == [6]
    assert d.threads[6] == ((7,), (8,), (9,))
    assert d.threads[2] == ()  # the walk from the cycle hits hub 6 and stops
    assert d.ell[6] == 3


def test_fig3_decomposition(fx):
    d = decompose_unicyclic(fx["fig3-G"].graph)
    assert (d.L, d.b) == (1, 1)
    assert sorted(d.branching) == [3, 9]  # cycle vertex of degree 4, off-cycle hub
    assert sorted(d.branch_active) == [3]
    assert d.components[3] == (3, 7, 8, 9, 10, 11)
    assert d.threads[3] == ((7, 8),)
    assert not d.is_reduced()


def test_is_reduced_on_star_form(fx):
    d = decompose_unicyclic(fx["fig2a"].graph)
    assert d.is_reduced()


def test_comp_of_partitions_vertices(fx):
    d = decompose_unicyclic(fx["fig3-G"].graph)
    for i, comp in enumerate(d.components):
        for v in comp:
            assert d.comp_of[v] == i
    assert sum(len(c) for c in d.components) == fx["fig3-G"].graph.n


def test_active_indices_and_empty_active():
    d = decompose_unicyclic(cycle_graph(6, [(0, 6), (3, 7)]))
    assert active_cycle_indices(d, (6, 7)) == {0, 3}
    with pytest.raises(NoActiveVertexError):
        canonical_labelling(d, ())


class TestCanonicalLabelling:
    def test_two_pendants_on_c8(self):
        d = decompose_unicyclic(cycle_graph(8, [(0, 8), (2, 9)]))
        lab = canonical_labelling(d, (8, 9))
        assert lab.k == 2
        assert lab.a == 2
        assert lab.active == (0, 2)
        assert lab.order[0] in (0, 2)

    def test_reflection_is_used_when_it_shrinks_k(self):
        # active at distance 2 one way, 4 the other; k must come out 2
        d = decompose_unicyclic(cycle_graph(6, [(1, 6), (5, 7)]))
        lab = canonical_labelling(d, (6, 7))
        assert lab.k == 2

    @settings(max_examples=120, deadline=None)
    @given(data=st.data())
    def test_active_pair_gives_k_at_most_half(self, data):
        g = data.draw(st.integers(min_value=3, max_value=14))
        i = data.draw(st.integers(min_value=0, max_value=g - 1))
        j = data.draw(st.integers(min_value=0, max_value=g - 1))
        if i == j:
            j = (j + 1) % g
        graph = cycle_graph(g, [(i, g), (j, g + 1)])
        d = decompose_unicyclic(graph)
        lab = canonical_labelling(d, (g, g + 1))
        # with exactly two active vertices, the canonical frame can always
        # put them within half a cycle of each other
        assert 1 <= lab.k <= g // 2
        assert lab.order[lab.k] in (i, j)
        assert set(lab.order) == set(range(g))

    def test_three_active_can_exceed_half(self):
        # no rotation or reflection brings {0,2,4} on C6 under k=3
        d = decompose_unicyclic(cycle_graph(6, [(0, 6), (2, 7), (4, 8)]))
        lab = canonical_labelling(d, (6, 7, 8))
        assert lab.a == 3
        assert lab.k == 4

    def test_order_is_a_cycle_walk(self):
        d = decompose_unicyclic(cycle_graph(9, [(4, 9), (7, 10)]))
        lab = canonical_labelling(d, (9, 10))
        dist = d.graph.distances()
        for p in range(9):
            assert dist[lab.order[p]][lab.order[(p + 1) % 9]] == 1


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6))
def test_structure_invariant_under_relabelling(seed):
    graph = gen_random_unicyclic(GenSpec(g=random.Random(seed).randint(3, 8), seed=seed))
    d = decompose_unicyclic(graph)

    rng = random.Random(seed + 1)
    perm = list(range(graph.n))
    rng.shuffle(perm)
    relabelled = Graph(graph.n, [(perm[u], perm[v]) for u, v in graph.edges])
    dp = decompose_unicyclic(relabelled)

    assert dp.g == d.g
    assert dp.L == d.L
    assert dp.b == d.b
    assert sorted(map(len, dp.components)) == sorted(map(len, d.components))
    lengths = sorted(len(t) for v in d.cycle for t in d.threads[v])
    lengths_p = sorted(len(t) for v in dp.cycle for t in dp.threads[v])
    assert lengths == lengths_p

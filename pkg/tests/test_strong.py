"""Strong resolving graph construction, reduction, parity rules."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ubx.decompose import decompose_unicyclic
from ubx.errors import NotReducedError, WrongParityError
from ubx.generators import gen_random_reduced, gen_gtq
from ubx.graph import Graph
from ubx.mis import max_independent_set
from ubx.strong import (
    build_srg_definition,
    build_srg_unicyclic,
    is_maximally_distant,
    maximal_sequences,
    reduce_to_star_form,
    strong_basis_forced_even,
    strong_basis_forced_odd,
    strong_basis_forced_oracle,
    strong_metric_dimension,
    strong_report,
)


def cyc(g: int, extra=()) -> Graph:
    return Graph(g + len(extra), [(i, (i + 1) % g) for i in range(g)] + list(extra))


def test_maximally_distant_is_about_neighbors():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert is_maximally_distant(p4, 0, 3)
    assert not is_maximally_distant(p4, 1, 3)  # neighbor 0 is farther


def test_definition_srg_of_even_cycle_is_perfect_matching():
    srg = build_srg_definition(cyc(6))
    assert srg.edges == ((0, 3), (1, 4), (2, 5))
    assert srg.isolated() == ()


def test_definition_srg_of_odd_cycle():
    srg = build_srg_definition(cyc(5))
    # every vertex pairs with the two vertices at distance 2
    assert len(srg.edges) == 5
    assert srg.boundary() == (0, 1, 2, 3, 4)


class TestReduction:
    def test_fig3_mapping(self, fx):
        reduced, mapping = reduce_to_star_form(fx["fig3-G"].graph)
        assert reduced.n == 11
        assert mapping == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 8, 8: 10, 9: 11, 10: 14}
        assert decompose_unicyclic(reduced).is_reduced()

    def test_already_reduced_is_identity_shape(self, fx):
        g = fx["fig2a"].graph
        reduced, mapping = reduce_to_star_form(g)
        assert reduced.n == g.n
        assert sorted(mapping.values()) == list(range(g.n))

    def test_recipe_requires_star_form(self, fx):
        with pytest.raises(NotReducedError):
            build_srg_unicyclic(decompose_unicyclic(fx["fig3-G"].graph))


class TestRecipe:
    def test_fig3_reduced_srg_frozen(self, fx):
        reduced, _ = reduce_to_star_form(fx["fig3-G"].graph)
        srg = build_srg_unicyclic(decompose_unicyclic(reduced))
        assert srg.edges == (
            (0, 7), (0, 8), (0, 9), (2, 5),
            (6, 7), (6, 8), (6, 9), (6, 10),
            (7, 8), (7, 9), (7, 10),
            (8, 9), (8, 10), (9, 10),
        )
        assert srg.isolated() == (1, 3, 4)  # decorated cycle vertices are cut vertices
        assert srg.edges == build_srg_definition(reduced).edges

    def test_recipe_matches_definition_even_and_odd(self):
        for seed in range(30):
            for g in (6, 7):
                graph = gen_random_reduced(g, seed=seed)
                dec = decompose_unicyclic(graph)
                assert build_srg_unicyclic(dec).edges == build_srg_definition(graph).edges, seed


class TestStrongDimension:
    def test_fig3_report(self, fx):
        rep = strong_report(fx["fig3-G"].graph)
        assert (rep.alpha, rep.dim_s) == (10, 5)
        assert rep.forced_strong == (8, 10, 11)
        assert rep.boundary == (0, 2, 5, 6, 8, 10, 11, 14)

    def test_fig3_prime_report(self, fx):
        rep = strong_report(fx["fig3-Gp"].graph)
        assert (rep.alpha, rep.dim_s) == (6, 5)
        assert rep.forced_strong == (7, 8, 9)

    def test_fig2a_strong(self, fx):
        rep = strong_report(fx["fig2a"].graph)
        assert (rep.alpha, rep.dim_s) == (7, 4)
        assert rep.forced_strong == (8,)

    def test_characterization_method_agrees_on_fixtures(self, fx):
        for name in ("fig2a", "fig3-G", "fig3-Gp"):
            a = strong_report(fx[name].graph, method="oracle")
            b = strong_report(fx[name].graph, method="characterization")
            assert a.forced_strong == b.forced_strong, name
            assert a.dim_s == b.dim_s


class TestMaximalSequences:
    def test_single_decorated_is_degenerate(self):
        an = maximal_sequences(decompose_unicyclic(cyc(5, [(0, 5)])))
        assert an.degenerate
        assert an.sequences == ((2, 4, 1, 3),)
        assert an.untouched == (0,)

    def test_two_runs_with_opposite_parities(self):
        an = maximal_sequences(decompose_unicyclic(cyc(7, [(0, 7), (2, 8)])))
        assert not an.degenerate
        assert an.sequences == ((3, 6), (4, 1, 5))
        assert an.untouched == ()

    def test_all_decorated_untouched_when_no_odd_run(self):
        an = maximal_sequences(decompose_unicyclic(cyc(9, [(0, 9), (4, 10), (5, 11)])))
        assert an.sequences == ((1, 6, 2, 7, 3, 8),)
        assert an.untouched == (0, 4, 5)

    def test_even_girth_rejected(self):
        with pytest.raises(WrongParityError):
            maximal_sequences(decompose_unicyclic(cyc(6, [(0, 6)])))


class TestParityRules:
    def test_wrong_parity_raises(self):
        with pytest.raises(WrongParityError):
            strong_basis_forced_even(cyc(5, [(0, 5)]))
        with pytest.raises(WrongParityError):
            strong_basis_forced_odd(cyc(6, [(0, 6)]))

    def test_even_examples(self):
        five = cyc(6, [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)])
        assert strong_basis_forced_even(five) == (8,)
        assert strong_basis_forced_even(cyc(6, [(0, 6), (1, 7)])) == ()
        assert strong_basis_forced_even(cyc(6, [(0, 6), (3, 7)])) == ()

    def test_odd_examples(self):
        assert strong_basis_forced_odd(cyc(5, [(0, 5)])) == ()
        assert strong_basis_forced_odd(cyc(7, [(0, 7), (2, 8)])) == ()
        q = gen_gtq(2, 2)
        assert strong_basis_forced_odd(q) == (9, 10, 11, 12)

    def test_nonreduced_input_is_reduced_internally(self, fx):
        # fig3-G has threads and hubs; the rule must agree with the oracle anyway
        g = fx["fig3-G"].graph
        assert strong_basis_forced_even(g) == strong_basis_forced_oracle(g)

    def test_sweep_against_oracle(self):
        for seed in range(60):
            for g in (6, 7, 8, 9):
                graph = gen_random_reduced(g, seed=seed)
                fast = (
                    strong_basis_forced_even(graph)
                    if g % 2 == 0
                    else strong_basis_forced_odd(graph)
                )
                assert fast == strong_basis_forced_oracle(graph), (g, seed)


class TestStructuralProperties:
    @settings(max_examples=80, deadline=None)
    @given(
        g=st.sampled_from([6, 8, 10]),
        seed=st.integers(min_value=0, max_value=10**6),
    )
    def test_bare_antipodal_pairs_are_never_forced(self, g, seed):
        graph = gen_random_reduced(g, seed=seed)
        forced = set(strong_basis_forced_oracle(graph))
        dec = decompose_unicyclic(graph)
        half = g // 2
        for i in range(half):
            x, y = dec.cycle[i], dec.cycle[i + half]
            if graph.degree(x) == 2 and graph.degree(y) == 2:
                assert x not in forced and y not in forced

    @settings(max_examples=80, deadline=None)
    @given(
        g=st.sampled_from([6, 8, 10]),
        seed=st.integers(min_value=0, max_value=10**6),
    )
    def test_even_alpha_lower_bound(self, g, seed):
        # with a doubly-decorated antipodal pair present, the independence
        # number of the distance graph is at least
        # |decorated| + g/2 - (number of doubly-decorated pairs) + 1
        graph = gen_random_reduced(g, seed=seed)
        dec = decompose_unicyclic(graph)
        half = g // 2
        pairs = [(dec.cycle[i], dec.cycle[i + half]) for i in range(half)]
        doubly = [
            (x, y) for x, y in pairs if graph.degree(x) > 2 and graph.degree(y) > 2
        ]
        if not doubly:
            return
        decorated = sum(1 for v in dec.cycle if graph.degree(v) > 2)
        srg = build_srg_definition(graph)
        alpha = max_independent_set(srg.n, srg.edges).alpha
        assert alpha >= decorated + half - len(doubly) + 1

    def test_strong_dimension_equals_cover_number_of_srg(self, fx):
        g = fx["fig3-Gp"].graph
        srg = build_srg_definition(g)
        alpha = max_independent_set(srg.n, srg.edges).alpha
        assert strong_metric_dimension(g) == g.n - alpha

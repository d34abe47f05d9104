"""Sigma / pi moves, reduction chains, leg rebalancing."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from steiner_ecc import (
    AlreadyBalanced,
    InvalidSite,
    NotGeneralizedStar,
    PiSite,
    SigmaSite,
    aecc3,
    balance_generalized_star,
    balanced_star,
    degree_sequence,
    degree_sequence_bound,
    diametric_path,
    find_pi_sites,
    find_sigma_sites,
    is_caterpillar,
    is_generalized_star,
    is_isomorphic,
    pi_transform,
    rebalance_step,
    reduce_to_caterpillar,
    reduce_to_generalized_star,
    segment_sequence,
    sigma_transform,
)

from conftest import h_tree, path_tree, spider, star_tree, trees


class TestSigmaSites:
    def test_paths_have_no_sites(self):
        assert find_sigma_sites(path_tree(7)) == []

    def test_pure_caterpillar_has_no_sites(self):
        # every off-path edge of a caterpillar is pendant
        assert find_sigma_sites(h_tree()) == []
        assert find_sigma_sites(star_tree(6)) == []

    def test_spider_has_one_site_at_the_center(self):
        t = spider(2, 2, 2)
        sites = find_sigma_sites(t)
        assert len(sites) == 1
        (site,) = sites
        assert site.attach_vertex == 0  # the center sits mid-path
        assert site.attach_index == 2
        assert t.degree(site.subtree_root) == 2

    def test_attach_index_never_passes_midpoint(self):
        t = spider(4, 3, 2)
        for site in find_sigma_sites(t):
            d = len(site.path) - 1
            assert 1 <= site.attach_index <= d // 2


class TestSigmaTransform:
    def test_spider_becomes_lopsided(self):
        t = spider(2, 2, 2)
        out = sigma_transform(t, find_sigma_sites(t)[0])
        assert is_isomorphic(out.after, spider(3, 2, 1))
        assert out.aecc3_before == Fraction(37, 7)
        assert out.aecc3_after == Fraction(38, 7)

    def test_degree_sequence_preserved(self):
        t = spider(2, 2, 2)
        out = sigma_transform(t, find_sigma_sites(t)[0])
        assert degree_sequence(out.after) == degree_sequence(t) == (3, 2, 2, 2, 1, 1, 1)

    def test_fabricated_site_on_caterpillar_rejected(self):
        t = h_tree()
        p = diametric_path(t)
        off = next(v for v in range(t.order) if v not in p)
        k = next(i for i, v in enumerate(p) if off in t.adjacency[v])
        with pytest.raises(InvalidSite):
            sigma_transform(t, SigmaSite(p, k, off))  # pendant edge: nothing behind it

    def test_non_diametric_path_rejected(self):
        t = spider(2, 2, 2)
        with pytest.raises(InvalidSite):
            sigma_transform(t, SigmaSite((2, 1, 0, 3), 1, 5))

    def test_site_from_another_tree_rejected(self):
        site = find_sigma_sites(spider(2, 2, 2))[0]
        with pytest.raises(InvalidSite):
            sigma_transform(spider(3, 3, 2), site)


class TestReduceToCaterpillar:
    def test_caterpillar_is_fixed_point(self):
        assert reduce_to_caterpillar(h_tree()) == []
        assert reduce_to_caterpillar(path_tree(6)) == []

    def test_spider_reduces_in_one_step(self):
        chain = reduce_to_caterpillar(spider(2, 2, 2))
        assert len(chain) == 1
        assert is_caterpillar(chain[-1].after)

    @given(trees(min_n=5, max_n=20))
    @settings(max_examples=60, deadline=None)
    def test_chain_ends_at_caterpillar_with_the_class_maximum(self, t):
        chain = reduce_to_caterpillar(t)
        final = chain[-1].after if chain else t
        assert is_caterpillar(final)
        assert degree_sequence(final) == degree_sequence(t)
        assert aecc3(final) == degree_sequence_bound(degree_sequence(t))
        for out in chain:
            assert out.aecc3_after > out.aecc3_before


class TestPiTransform:
    def test_h_tree_collapses_to_star(self):
        t = h_tree()
        site = PiSite((0, 1, 2))  # the segment joining the branch vertices
        out = pi_transform(t, site)
        assert is_isomorphic(out.after, spider(2, 1, 1, 1, 1))
        assert out.aecc3_before == Fraction(32, 7)
        assert out.aecc3_after == Fraction(26, 7)

    def test_leaf_donor_moves_nothing(self):
        t = path_tree(5)
        out = pi_transform(t, PiSite((0, 1, 2)))
        assert out.after is t
        assert out.delta == 0

    def test_wrong_orientation_rejected(self):
        # spider(3, 1) is the path 3-2-1-0-4; behind vertex 1 lies a depth-2
        # component while behind vertex 4 lies nothing, so 1 cannot donate to 4.
        t = spider(3, 1)
        with pytest.raises(InvalidSite):
            pi_transform(t, PiSite((1, 0, 4)))

    def test_interior_must_have_degree_two(self):
        t = spider(1, 1, 1)
        with pytest.raises(InvalidSite):
            pi_transform(t, PiSite((1, 0, 2)))

    def test_interior_subpath_of_a_path_loses_a_branch(self):
        # both end components non-trivial: the move genuinely reshapes the tree
        t = path_tree(5)
        out = pi_transform(t, PiSite((1, 2, 3)))
        assert is_isomorphic(out.after, spider(2, 1, 1))
        assert out.aecc3_after <= out.aecc3_before

    @given(trees(min_n=3, max_n=16))
    @settings(max_examples=60, deadline=None)
    def test_every_site_is_non_increasing(self, t):
        for site in find_pi_sites(t):
            out = pi_transform(t, site)
            assert out.aecc3_after <= out.aecc3_before
            assert out.after.order == t.order


class TestReduceToGeneralizedStar:
    def test_h_tree_one_step(self):
        chain = reduce_to_generalized_star(h_tree())
        assert len(chain) == 1
        assert is_isomorphic(chain[-1].after, spider(2, 1, 1, 1, 1))
        assert segment_sequence(chain[-1].after) == (2, 1, 1, 1, 1)

    def test_generalized_star_is_fixed_point(self):
        assert reduce_to_generalized_star(spider(3, 2, 1)) == []
        assert reduce_to_generalized_star(path_tree(5)) == []

    @given(trees(min_n=5, max_n=20))
    @settings(max_examples=60, deadline=None)
    def test_chain_preserves_segments_and_never_increases(self, t):
        seq = segment_sequence(t)
        chain = reduce_to_generalized_star(t)
        final = chain[-1].after if chain else t
        assert is_generalized_star(final)
        for out in chain:
            assert segment_sequence(out.after) == seq
            assert out.aecc3_after <= out.aecc3_before
        if chain and not is_generalized_star(t):
            assert chain[-1].aecc3_after < chain[-1].aecc3_before

    @given(trees(min_n=5, max_n=20))
    @settings(max_examples=40, deadline=None)
    def test_non_star_input_strictly_drops_overall(self, t):
        if is_generalized_star(t):
            return
        chain = reduce_to_generalized_star(t)
        assert aecc3(chain[-1].after) < aecc3(t)


class TestRebalance:
    def test_case_with_tied_short_legs_keeps_the_average(self):
        out = rebalance_step(spider(4, 1, 1))
        assert is_isomorphic(out.after, spider(3, 2, 1))
        assert (out.aecc3_before, out.aecc3_after) == (Fraction(38, 7), Fraction(38, 7))

    def test_strictly_decreasing_case(self):
        out = rebalance_step(spider(3, 2, 1))
        assert is_isomorphic(out.after, spider(2, 2, 2))
        assert (out.aecc3_before, out.aecc3_after) == (Fraction(38, 7), Fraction(37, 7))

    def test_balanced_star_rejected(self):
        with pytest.raises(AlreadyBalanced):
            rebalance_step(spider(2, 2, 2))
        with pytest.raises(AlreadyBalanced):
            rebalance_step(path_tree(6))

    def test_two_branch_vertices_rejected(self):
        with pytest.raises(NotGeneralizedStar):
            rebalance_step(h_tree())
        with pytest.raises(NotGeneralizedStar):
            balance_generalized_star(h_tree())

    def test_full_chain_from_long_leg(self):
        chain = balance_generalized_star(spider(4, 1, 1))
        assert [str(o.aecc3_after) for o in chain] == ["38/7", "37/7"]
        assert is_isomorphic(chain[-1].after, spider(2, 2, 2))

    def test_balanced_input_yields_empty_chain(self):
        assert balance_generalized_star(balanced_star(9, 4)) == []
        assert balance_generalized_star(path_tree(7)) == []

    def test_eight_vertex_chain(self):
        chain = balance_generalized_star(spider(4, 2, 1))
        assert is_isomorphic(chain[-1].after, spider(3, 2, 2))
        assert is_isomorphic(chain[-1].after, balanced_star(8, 3))

    def test_segment_count_preserved(self):
        for out in balance_generalized_star(spider(6, 1, 1, 1)):
            assert len(segment_sequence(out.after)) == 4

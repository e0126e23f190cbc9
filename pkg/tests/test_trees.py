from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_PARAMS, PARAM_PAIRS, params_strategy, random_trees
from isofactor.enumeration import all_trees
from isofactor.fractional import verify_factor
from isofactor.graphs import (
    CapacityError,
    FamilyParams,
    Graph,
    build_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from isofactor.trees import (
    canonical_assignment,
    construct_blown_tree,
    corollary_report,
    enumerate_members,
    is_member,
    is_member_by_definition,
    pinned_assignment,
)
from oracles import brute_tree_member

THREE_HALVES = FamilyParams(3, 2)
HALF = Fraction(1, 2)

SPIDER = build_graph(
    10,
    [(0, 4), (1, 4), (0, 5), (2, 5), (0, 6), (3, 6), (1, 7), (2, 8), (3, 9)],
)


def split_counts(tree, edge, side_a):
    """Recount one side of a deleted edge straight from scratch."""
    u, v = edge
    inner = u if u in side_a else v
    seen = {inner}
    frontier = [inner]
    while frontier:
        x = frontier.pop()
        for w in tree.neighbors(x):
            if (x, w) in ((u, v), (v, u)) or w in seen:
                continue
            seen.add(w)
            frontier.append(w)
    a_count = len(seen & side_a)
    return a_count, len(seen) - a_count


class TestIsMember:
    def test_single_edge_everywhere(self):
        for params in ALL_PARAMS:
            assert is_member(path_graph(2), params).member

    def test_single_vertex_never(self):
        certificate = is_member(build_graph(1, []), THREE_HALVES)
        assert not certificate.member
        assert certificate.global_violation

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            is_member(cycle_graph(3), THREE_HALVES)

    def test_path_five_certificate(self):
        certificate = is_member(path_graph(5), THREE_HALVES)
        assert certificate.member
        assert certificate.side_a == frozenset({0, 2, 4})
        assert certificate.side_b == frozenset({1, 3})
        assert certificate.margins == {
            (0, 1): Fraction(1),
            (1, 2): HALF,
            (2, 3): HALF,
            (3, 4): Fraction(1),
        }

    def test_path_four_fails_on_middle_edge(self):
        certificate = is_member(path_graph(4), THREE_HALVES)
        assert not certificate.member
        assert not certificate.global_violation
        assert certificate.violating_edge == (1, 2)

    def test_path_three_inside_wider_ratio(self):
        assert is_member(path_graph(3), FamilyParams(5, 2)).member
        assert not is_member(path_graph(3), FamilyParams(3, 2)).member

    def test_path_seven_at_four_thirds(self):
        assert is_member(path_graph(7), FamilyParams(4, 3)).member

    def test_stars_at_integer_ratio(self):
        for leaves in range(1, 6):
            for n in (2, 3, 4):
                expected = leaves <= n
                got = is_member(star_graph(leaves), FamilyParams(n, 1)).member
                assert got == expected, (leaves, n)

    def test_spider_member(self):
        certificate = is_member(SPIDER, THREE_HALVES)
        assert certificate.member
        assert certificate.side_b == frozenset({0, 1, 2, 3})

    @settings(max_examples=100, deadline=None)
    @given(random_trees(max_vertices=7, min_vertices=2), params_strategy)
    def test_matches_brute_oracle(self, tree, params):
        expected = brute_tree_member(tree, params.n, params.m)
        assert is_member(tree, params).member == expected

    @settings(max_examples=80, deadline=None)
    @given(random_trees(max_vertices=8, min_vertices=1), params_strategy)
    def test_matches_definition_route(self, tree, params):
        assert (
            is_member(tree, params).member
            == is_member_by_definition(tree, params)
        )

    @settings(max_examples=80, deadline=None)
    @given(random_trees(max_vertices=9, min_vertices=2), params_strategy)
    def test_member_margins_recount(self, tree, params):
        certificate = is_member(tree, params)
        if not certificate.member:
            return
        ratio = params.ratio
        assert len(certificate.side_a) <= ratio * len(certificate.side_b)
        for edge, margin in certificate.margins.items():
            a_count, b_count = split_counts(tree, edge, certificate.side_a)
            assert margin == a_count - ratio * b_count
            assert margin > 0

    def test_definition_route_cap(self):
        with pytest.raises(CapacityError):
            is_member_by_definition(path_graph(5), THREE_HALVES, max_vertices=4)


class TestCanonicalAssignment:
    def test_path_five(self):
        assignment = canonical_assignment(path_graph(5))
        assert assignment.value(0, 1) == 1
        assert assignment.value(1, 2) == HALF
        assert assignment.value(2, 3) == HALF
        assert assignment.value(3, 4) == 1

    def test_degree_identities_on_members(self, trees_by_size):
        for size in range(2, 8):
            for tree in trees_by_size[size]:
                certificate = is_member(tree, THREE_HALVES)
                if not certificate.member:
                    continue
                assignment = canonical_assignment(tree)
                ratio = Fraction(len(certificate.side_a), len(certificate.side_b))
                for v in certificate.side_a:
                    assert assignment.degree_sum(v) == 1
                for v in certificate.side_b:
                    assert assignment.degree_sum(v) == ratio

    def test_rejects_surplus_free_tree(self):
        with pytest.raises(ValueError):
            canonical_assignment(path_graph(4))
        with pytest.raises(ValueError):
            canonical_assignment(build_graph(1, []))


class TestPinnedAssignment:
    def test_path_seven_values(self):
        params = FamilyParams(4, 3)
        assignment = pinned_assignment(path_graph(7), params, pin=1)
        expected = {
            (0, 1): Fraction(1),
            (1, 2): Fraction(1, 3),
            (2, 3): Fraction(2, 3),
            (3, 4): Fraction(2, 3),
            (4, 5): Fraction(1, 3),
            (5, 6): Fraction(1),
        }
        assert dict(assignment.values) == expected

    def test_spider_pinned_at_center(self):
        assignment = pinned_assignment(SPIDER, THREE_HALVES, pin=0)
        for leaf_edge in [(1, 7), (2, 8), (3, 9)]:
            assert assignment.value(*leaf_edge) == 1
        for inner in [(0, 4), (1, 4), (0, 5), (2, 5), (0, 6), (3, 6)]:
            assert assignment.value(*inner) == HALF
        assert assignment.degree_sum(0) == Fraction(3, 2)

    def test_degree_targets(self, trees_by_size):
        for size in range(2, 8):
            for tree in trees_by_size[size]:
                for n, m in PARAM_PAIRS:
                    params = FamilyParams(n, m)
                    certificate = is_member(tree, params)
                    if not certificate.member:
                        continue
                    ratio = params.ratio
                    for pin in sorted(certificate.side_b):
                        assignment = pinned_assignment(tree, params, pin)
                        root_target = (
                            ratio
                            + len(certificate.side_a)
                            - ratio * len(certificate.side_b)
                        )
                        for v in certificate.side_a:
                            assert assignment.degree_sum(v) == 1
                        for v in certificate.side_b - {pin}:
                            assert assignment.degree_sum(v) == ratio
                        assert assignment.degree_sum(pin) == root_target
                        grid = {Fraction(k, m) for k in range(m + 1)}
                        assert set(assignment.values.values()) <= grid

    def test_rejects_nonmember(self):
        with pytest.raises(ValueError):
            pinned_assignment(path_graph(4), THREE_HALVES, pin=1)

    def test_rejects_pin_outside_small_side(self):
        with pytest.raises(ValueError):
            pinned_assignment(path_graph(5), THREE_HALVES, pin=0)


class TestCorollaryReport:
    def test_path_five(self):
        report = corollary_report(path_graph(5), THREE_HALVES)
        assert report.all_pass
        assert report.failures == ()

    def test_spider(self):
        report = corollary_report(SPIDER, THREE_HALVES)
        assert report.all_pass

    def test_rejects_nonmember(self):
        with pytest.raises(ValueError):
            corollary_report(path_graph(4), THREE_HALVES)

    def test_holds_on_all_small_members(self, trees_by_size):
        for size in range(2, 9):
            for tree in trees_by_size[size]:
                for params in ALL_PARAMS:
                    if is_member(tree, params).member:
                        report = corollary_report(tree, params)
                        assert report.all_pass, (tree, params, report.failures)

    def test_size_pattern_gate_is_active_for_three_halves(self, trees_by_size):
        # (n - 1) divisible by m: every non-star member size is a
        # multiple of n + m = 5
        sizes = set()
        for size in range(2, 11):
            for tree in trees_by_size[size]:
                certificate = is_member(tree, THREE_HALVES)
                degrees = sorted(tree.degree(v) for v in tree.vertices())
                star = degrees[-1] == size - 1
                if certificate.member and not star:
                    sizes.add(size)
        assert sizes == {5, 10}


class TestConstructBlownTree:
    def test_edge_blows_to_path_five(self):
        blown = construct_blown_tree(path_graph(2), 1)
        assert blown.vertex_count == 5
        assert blown.sorted_edges() == [(0, 2), (0, 3), (1, 2), (1, 4)]

    def test_three_star_blows_to_spider(self):
        blown = construct_blown_tree(star_graph(3), 1)
        assert blown == SPIDER

    def test_path_four_at_k_two(self):
        blown = construct_blown_tree(path_graph(4), 2)
        assert blown.vertex_count == 7
        assert blown.sorted_edges() == [
            (0, 1),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 6),
        ]

    def test_k_one_rejects_degree_two(self):
        with pytest.raises(ValueError, match="vertex 1"):
            construct_blown_tree(path_graph(3), 1)

    def test_k_two_rejects_even_core_degree(self):
        with pytest.raises(ValueError, match="core degree"):
            construct_blown_tree(path_graph(3), 2)

    def test_k_two_rejects_leafless_core(self):
        with pytest.raises(ValueError):
            construct_blown_tree(path_graph(2), 2)

    def test_rejects_non_tree_and_bad_k(self):
        with pytest.raises(ValueError):
            construct_blown_tree(cycle_graph(3), 1)
        with pytest.raises(ValueError):
            construct_blown_tree(path_graph(2), 0)

    def test_overloaded_core_vertex_rejected(self):
        # double broom: both core vertices carry three leaves, 2*3 + 1 > 5
        broom = build_graph(
            8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]
        )
        with pytest.raises(ValueError, match="leaf neighbors"):
            construct_blown_tree(broom, 2)
        assert construct_blown_tree(broom, 3).is_tree()

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_blowups_of_small_bases_are_members(self, k, trees_by_size):
        params = FamilyParams(2 * k + 1, 2)
        produced = 0
        for size in range(2, 7):
            for base in trees_by_size[size]:
                try:
                    blown = construct_blown_tree(base, k)
                except ValueError:
                    continue
                produced += 1
                assert is_member(blown, params).member, (base, k)
        assert produced > 0


class TestEnumerateMembers:
    def test_three_halves_up_to_five(self):
        members = enumerate_members(THREE_HALVES, 5)
        keyed = {(t.vertex_count, tuple(t.sorted_edges())) for t in members}
        assert keyed == {
            (2, ((0, 1),)),
            (5, ((0, 1), (0, 3), (1, 2), (3, 4))),
        }

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_integer_ratio_lists_stars(self, n):
        members = enumerate_members(FamilyParams(n, 1), n + 2)
        shapes = set()
        for tree in members:
            degrees = sorted(tree.degree(v) for v in tree.vertices())
            assert degrees[-1] == tree.vertex_count - 1
            assert all(d == 1 for d in degrees[:-1])
            shapes.add(tree.vertex_count)
        assert shapes == {leaves + 1 for leaves in range(1, n + 1)}

    def test_respects_cap(self):
        with pytest.raises(CapacityError):
            enumerate_members(THREE_HALVES, 13)

    def test_env_cap_override(self, monkeypatch):
        monkeypatch.setenv("ISOFACTOR_ENUM_CAP", "4")
        with pytest.raises(CapacityError):
            enumerate_members(THREE_HALVES, 5)
        assert enumerate_members(THREE_HALVES, 5, cap=6)


class TestBoundaryExamples:
    def test_path_four_has_factors_but_is_not_minimal(self):
        """Factor existence alone does not place a tree in the family:
        the four-path carries the 1, 0, 1 factor, yet dropping its middle
        edge leaves two single edges that still carry factors."""
        from isofactor.fractional import iter_discrete_factors

        factors = list(iter_discrete_factors(path_graph(4), THREE_HALVES))
        target = {(0, 1): Fraction(1), (1, 2): Fraction(0), (2, 3): Fraction(1)}
        assert target in factors
        assert not is_member(path_graph(4), THREE_HALVES).member
        assert not is_member_by_definition(path_graph(4), THREE_HALVES)


class TestMemberFactorInterplay:
    @settings(max_examples=60, deadline=None)
    @given(random_trees(max_vertices=8, min_vertices=2), params_strategy)
    def test_members_admit_factors_after_any_single_deletion(self, tree, params):
        """The family definition in action: pinned assignments exist and
        verify for the tree itself, and each single-edge deletion still
        clears the existence check."""
        certificate = is_member(tree, params)
        if not certificate.member:
            return
        pin = min(certificate.side_b)
        assignment = pinned_assignment(tree, params, pin)
        assert verify_factor(assignment, params, require_denominator_m=True) == []
        assert is_member_by_definition(tree, params)

"""Partition criterion checks and the lattice search for maximal parts."""

import random
from itertools import combinations

import pytest

from hyparc.arrangement import load
from hyparc.dimension_search import (
    achievable_dimensions,
    blocks_of,
    brute_force_max_parts,
    check_partition,
    max_valid_parts,
    partitions_rgs,
)
from hyparc.exact_linalg import span, zero_space

from .corpus import moment_curve_arrangement, random_arrangement

FOUR_LINES = load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
# canonical order: 0:(0,0,1)  1:(0,1,0)  2:(1,0,0)  3:(1,1,1)


class TestPartitionEnumeration:
    def test_bell_counts(self):
        assert sum(1 for _ in partitions_rgs(5)) == 52
        assert sum(1 for _ in partitions_rgs(6)) == 203

    def test_exact_block_counts(self):
        # Stirling numbers of the second kind for r=5.
        assert sum(1 for _ in partitions_rgs(5, blocks=2)) == 15
        assert sum(1 for _ in partitions_rgs(5, blocks=3)) == 25

    def test_lexicographic_order(self):
        seen = list(partitions_rgs(4))
        assert seen == sorted(seen)
        assert seen[0] == (0, 0, 0, 0)
        assert seen[-1] == (0, 1, 2, 3)

    def test_blocks_are_canonical(self):
        assert blocks_of((0, 1, 0, 2)) == ((0, 2), (1,), (3,))


class TestCheckPartition:
    def test_valid_bipartition(self):
        # {x0, x1} vs {x2, x0+x1+x2}: both overlaps are span{x0+x1}.
        chk = check_partition(FOUR_LINES, ((0, 3), (1, 2)))
        assert chk.valid
        assert chk.w_space == span([(1, 1, 0)])
        assert chk.violating_form is None

    def test_invalid_tripartition(self):
        # Separating two independent forms as singletons puts both in W.
        chk = check_partition(FOUR_LINES, ((0, 3), (1,), (2,)))
        assert not chk.valid
        assert chk.w_space == span([(1, 0, 0), (0, 1, 0)])
        assert chk.violating_form == 1  # first form in canonical order inside W

    def test_independent_singletons(self):
        a = load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        chk = check_partition(a, ((0,), (1,), (2,)))
        assert chk.valid
        assert chk.w_space == zero_space(3)

    @pytest.mark.parametrize(
        "blocks",
        [((0, 1, 2, 3),), ((0, 1), (1, 2, 3)), ((0, 1), (2,)), ((0, 1), (), (2, 3))],
    )
    def test_malformed_partitions(self, blocks):
        with pytest.raises(ValueError):
            check_partition(FOUR_LINES, blocks)

    def test_block_order_irrelevant(self):
        rng = random.Random(23)
        for _ in range(20):
            a = random_arrangement(rng, rng.randint(2, 3), rng.randint(3, 6))
            for rgs in partitions_rgs(a.r, blocks=min(3, a.r)):
                blocks = blocks_of(rgs)
                chk = check_partition(a, blocks)
                flipped = check_partition(a, tuple(reversed(blocks)))
                assert chk.valid == flipped.valid
                assert chk.w_space == flipped.w_space
                break

    def test_scaling_invariance(self):
        scaled = load(2, [[3, 0, 0], [0, "-1/2", 0], [0, 0, 5], [-2, -2, -2]])
        assert scaled.forms == FOUR_LINES.forms
        chk = check_partition(scaled, ((0, 3), (1, 2)))
        assert chk.valid and chk.w_space == span([(1, 1, 0)])


class TestMaxValidParts:
    def test_independent_triple_all_singletons(self):
        a = load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert max_valid_parts(a) == (3, ((0,), (1,), (2,)))

    def test_four_lines_two_parts(self):
        parts, witness = max_valid_parts(FOUR_LINES)
        assert parts == 2
        assert check_partition(FOUR_LINES, witness).valid

    def test_five_general_position_lines(self):
        assert max_valid_parts(moment_curve_arrangement(2, 5)) == (None, None)

    def test_single_form(self):
        assert max_valid_parts(load(2, [[1, 0, 0]])) == (None, None)


class TestBruteForce:
    def test_matches_pruned_search_on_examples(self):
        for a in [
            FOUR_LINES,
            load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            moment_curve_arrangement(2, 5),
            moment_curve_arrangement(3, 5),
        ]:
            assert brute_force_max_parts(a) == max_valid_parts(a)

    def test_dependent_triple_has_no_valid_partition(self):
        a = load(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])
        assert brute_force_max_parts(a) == (None, None)

    def test_single_form(self):
        assert brute_force_max_parts(load(3, [[1, 1, 1, 1]])) == (None, None)

    def test_limit_refused(self):
        a = moment_curve_arrangement(2, 10)
        with pytest.raises(ValueError, match="refused"):
            brute_force_max_parts(a)

    def test_oracle_equivalence_random(self):
        rng = random.Random(101)
        for _ in range(40):
            a = random_arrangement(rng, rng.randint(1, 4), rng.randint(2, 6))
            assert brute_force_max_parts(a) == max_valid_parts(a)


class TestCoarsening:
    def test_merging_blocks_preserves_validity(self):
        rng = random.Random(55)
        checked = 0
        while checked < 25:
            a = random_arrangement(rng, rng.randint(2, 4), rng.randint(3, 6))
            for rgs in partitions_rgs(a.r):
                blocks = blocks_of(rgs)
                if len(blocks) < 3 or not check_partition(a, blocks).valid:
                    continue
                for i, j in combinations(range(len(blocks)), 2):
                    merged = tuple(sorted(blocks[i] + blocks[j]))
                    coarser = tuple(
                        sorted(
                            [merged] + [b for k, b in enumerate(blocks) if k not in (i, j)],
                            key=min,
                        )
                    )
                    assert check_partition(a, coarser).valid
                checked += 1
                break


class TestAchievableDimensions:
    def test_single_form_in_p2(self):
        rep = achievable_dimensions(load(2, [[1, 0, 0]]))
        assert (rep.m, rep.d_max, rep.parts_max) == (1, 2, None)
        assert rep.achievable == (0, 1, 2)

    def test_four_general_position_lines(self):
        rep = achievable_dimensions(moment_curve_arrangement(2, 4))
        assert rep.d_max == 1  # floor(s / (r - s)) with s = 2, r = 4

    def test_coordinate_forms_in_p3(self):
        rep = achievable_dimensions(load(3, [list(row) for row in
                                             ([1, 0, 0, 0], [0, 1, 0, 0],
                                              [0, 0, 1, 0], [0, 0, 0, 1])]))
        assert (rep.m, rep.parts_max, rep.d_max) == (-1, 4, 3)

    def test_range_consistency_random(self):
        rng = random.Random(77)
        for _ in range(30):
            a = random_arrangement(rng, rng.randint(1, 4), rng.randint(1, 6))
            rep = achievable_dimensions(a)
            assert rep.m + 1 <= rep.d_max <= min(a.n, rep.m + a.r)
            assert rep.achievable == tuple(range(rep.d_max + 1))

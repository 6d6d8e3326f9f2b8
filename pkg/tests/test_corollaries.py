"""Finiteness verdicts and general-position bounds as cross-checks."""

import random
from dataclasses import replace

import pytest

from hyparc.arrangement import load
from hyparc.corollaries import (
    cross_check,
    finiteness_verdict,
    general_position_bound,
    verdict,
)
from hyparc.dimension_search import achievable_dimensions

from .corpus import moment_curve_arrangement, random_arrangement


class TestFinitenessVerdict:
    def test_five_general_position_lines(self):
        assert finiteness_verdict(moment_curve_arrangement(2, 5))

    def test_coordinate_triple_not_finite(self):
        assert not finiteness_verdict(load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))

    def test_four_lines_not_finite(self):
        a = load(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
        assert not finiteness_verdict(a)

    def test_nonempty_intersection_never_finite(self):
        assert not finiteness_verdict(load(2, [[1, 0, 0], [0, 1, 0]]))

    def test_scan_limit(self):
        with pytest.raises(ValueError, match="refused"):
            finiteness_verdict(moment_curve_arrangement(2, 23))

    def test_agrees_with_search(self):
        rng = random.Random(17)
        for _ in range(30):
            a = random_arrangement(rng, rng.randint(1, 4), rng.randint(2, 6))
            rep = achievable_dimensions(a)
            assert finiteness_verdict(a) == (rep.d_max <= 0)


class TestGeneralPositionBound:
    def test_four_lines(self):
        assert general_position_bound(moment_curve_arrangement(2, 4)) == 1

    def test_four_planes_in_p3(self):
        assert general_position_bound(moment_curve_arrangement(3, 4)) == 3

    def test_six_lines(self):
        assert general_position_bound(moment_curve_arrangement(2, 6)) == 0

    def test_absent_when_r_le_s(self):
        assert general_position_bound(load(2, [[1, 0, 0], [0, 1, 0]])) is None


class TestCrossCheck:
    def test_general_position_corpus_is_clean(self):
        for n in (2, 3):
            for r in range(n + 1, n + 4):
                a = moment_curve_arrangement(n, r)
                assert cross_check(a, achievable_dimensions(a)) == []

    def test_fabricated_wrong_report(self):
        a = moment_curve_arrangement(2, 4)
        rep = achievable_dimensions(a)
        wrong = replace(rep, d_max=2)
        assert cross_check(a, wrong)

    def test_r_le_s_only_finiteness_applies(self):
        a = load(3, [[1, 0, 0, 0], [0, 1, 0, 0]])  # r = s = 2
        assert cross_check(a, achievable_dimensions(a)) == []


class TestVerdict:
    def test_fields(self):
        v = verdict(moment_curve_arrangement(2, 5))
        assert v == type(v)(finiteness=True, gp_bound=0, gp_bound_achieved=True)

    def test_no_bound_fields_when_r_le_s(self):
        v = verdict(load(2, [[1, 0, 0], [0, 1, 0]]))
        assert v.gp_bound is None and v.gp_bound_achieved is None

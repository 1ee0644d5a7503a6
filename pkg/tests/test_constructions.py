#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Тесты для модуля constructions
==============================

Каждая конструкция проверяется независимо: сбалансированность классов
через sgcore или правильность раскраски отрицательного подграфа.
"""

import pytest

from constructions import (CoverSpec, cover_B_i, critical_cover, cover_B_i_plus, equator_cover,
                           expected_plus_count, build_cover, PLUS_TARGETS)
from exceptions import CoverageError, InputError
from families import SignedSubset, family_vertices
from topo import gen_borsuk_disc


class TestBiCover:
    """Тесты покрытия ĤKS(n,k) классами B_i."""

    @pytest.mark.parametrize("n, k", [(1, 1), (3, 1), (4, 2), (5, 2), (5, 3), (6, 4)])
    def test_default_indices(self, n, k):
        certificate = cover_B_i(n, k)
        assert certificate.verify()
        assert certificate.num_colours == n - k + 1

    def test_custom_indices(self):
        """Подходит любой набор из n-k+1 индексов."""
        assert cover_B_i(4, 2, [2, 3, 4]).verify()
        assert cover_B_i(4, 2, [1, 3, 4]).verify()

    @pytest.mark.parametrize("indices", [[1, 2], [1, 1, 2], [1, 2, 5]])
    def test_bad_indices(self, indices):
        with pytest.raises(InputError):
            cover_B_i(4, 2, indices)

    def test_to_dict(self):
        data = cover_B_i(3, 2).to_dict()
        assert data["kind"] == "bi_cover"
        assert data["colours"] == 2
        assert data["colour"]["{1,2}"] == 1
        assert data["classes"]["1"]["witness"]["{1,-2}"] == 1


class TestCriticalCover:
    """Тесты раскраски ĤSS(n,k) без одной вершины."""

    @pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (5, 2), (5, 3)])
    def test_every_vertex(self, n, k):
        for a in family_vertices("hss", n, k):
            certificate = critical_cover(n, k, a)
            assert certificate.verify()
            assert certificate.num_colours <= n - k
            assert certificate.graph.order == len(family_vertices("hss", n, k)) - 1

    def test_not_a_vertex(self):
        with pytest.raises(InputError):
            critical_cover(4, 2, SignedSubset.parse("{1,2}", 4))
        with pytest.raises(InputError):
            critical_cover(4, 2, SignedSubset.parse("{-1,2}", 4))

    def test_single_vertex_family(self):
        """При n = k вершина одна, и граф без нее пуст."""
        certificate = critical_cover(2, 2, SignedSubset.parse("{1,-2}", 2))
        assert certificate.graph.order == 0
        assert certificate.verify()


class TestBiPlusCover:
    """Тесты правильных раскрасок отрицательных подграфов классами B_i^+."""

    @pytest.mark.parametrize("target", PLUS_TARGETS)
    def test_targets(self, target):
        for n, k in [(3, 1), (4, 2), (5, 2), (5, 3), (4, 4)]:
            if target == "ss" and k == 1:
                continue
            count = expected_plus_count(n, k, target)
            certificate = cover_B_i_plus(n, k, count, target)
            assert certificate.verify()
            assert certificate.num_colours <= count

    def test_counts(self):
        assert expected_plus_count(5, 2, "hks") == 4
        assert expected_plus_count(5, 2, "ss") == 5
        assert expected_plus_count(5, 2, "ks") == 8

    def test_wrong_count(self):
        with pytest.raises(InputError):
            cover_B_i_plus(4, 2, 2, "hks")

    def test_unknown_target(self):
        with pytest.raises(InputError):
            expected_plus_count(4, 2, "kneser")

    def test_ss_single_element_sets(self):
        """SS(n,1) совпадает с KS(n,1): вершину {-1} классы B_i^+ не покрывают."""
        with pytest.raises(InputError):
            expected_plus_count(3, 1, "ss")


class TestEquatorCover:
    """Тесты (d+1)-раскраски дискретизации сферы."""

    @pytest.mark.parametrize("d, resolution", [(1, 64), (2, 300), (3, 300)])
    def test_cover(self, d, resolution):
        disc = gen_borsuk_disc(d, 0.1, resolution, seed=3)
        certificate = equator_cover(disc)
        assert certificate.verify()
        assert certificate.num_colours <= d + 1

    def test_tau_below_eps(self):
        disc = gen_borsuk_disc(1, 0.1, 16)
        with pytest.raises(InputError):
            equator_cover(disc, tau=0.05)

    def test_uncovered_point(self):
        """Слишком большой порог оставляет точки окружности без класса."""
        disc = gen_borsuk_disc(1, 0.1, 16)
        with pytest.raises(CoverageError) as error:
            equator_cover(disc, tau=0.9)
        assert error.value.point is not None


class TestBuildCover:
    """Тесты построения по описанию."""

    def test_kinds(self):
        assert build_cover(CoverSpec("bi_cover", 4, 2)).verify()
        assert build_cover(CoverSpec("critical_cover", 4, 2, vertex=SignedSubset.parse("{1,-2}", 4))).verify()
        assert build_cover(CoverSpec("bi_plus_cover", 4, 2, target="ss")).verify()
        assert build_cover(CoverSpec("equator_cover", d=1, eps=0.1, resolution=32)).verify()

    def test_missing_vertex(self):
        with pytest.raises(InputError):
            build_cover(CoverSpec("critical_cover", 4, 2))

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            build_cover(CoverSpec("spiral", 4, 2))

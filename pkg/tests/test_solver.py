#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Тесты для модуля solver
=======================

Проверяются точное вычисление chi_b и chi, сертификаты, поведение при
исчерпании бюджета, сверка с независимыми оракулами и вершинная критичность.
"""

import itertools
from types import SimpleNamespace

import networkx as nx
import numpy as np
import pytest

import solver
from exceptions import InputError
from families import FamilyDescriptor, gen_family, all_negative, plus_minus, random_signed_graph
from sgcore import (SignedGraph, BalancedColouring, negate, add_switched_copy, verify_zero_free_colouring, switch,
                    delete_vertex)
from solver import (chi_b_exact, chi_zero_free, chi_exact, is_proper_colouring, chi_b_bruteforce,
                    chi_b_via_switchings, is_vertex_critical, digon_clique, greedy_balanced_colouring)


class TestChiBExact:
    """Тесты для chi_b_exact."""

    def test_empty_graph(self):
        result = chi_b_exact(SignedGraph(0))
        assert result.value == 0 and result.exact

    def test_balanced_graph(self, positive_triangle):
        result = chi_b_exact(positive_triangle)
        assert result.value == 1
        assert result.lower_bound_witness["reason"] == "nonempty"

    def test_unbalanced_triangle(self, unbalanced_triangle):
        """Отрицательный цикл дает нижнюю границу 2, сертификат проверяется."""
        result = chi_b_exact(unbalanced_triangle)
        assert result.value == result.lower == result.upper == 2
        assert result.exact and not result.timed_out
        assert result.certificate.check(unbalanced_triangle)
        assert result.lower_bound_witness["reason"] == "negative_cycle"

    def test_digon(self, digon):
        assert chi_b_exact(digon).value == 2

    @pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3),
                                      pytest.param(5, 2, marks=pytest.mark.slow),
                                      pytest.param(5, 3, marks=pytest.mark.slow)])
    def test_hat_signed_kneser(self, n, k):
        """chi_b(ĤKS(n,k)) = n - k + 1."""
        g = gen_family(FamilyDescriptor("hks", n, k))
        result = chi_b_exact(g)
        assert result.value == n - k + 1
        assert result.certificate.num_colours == n - k + 1
        assert result.certificate.check(g)

    @pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (5, 2), (5, 3)])
    def test_hat_signed_schrijver(self, n, k):
        g = gen_family(FamilyDescriptor("hss", n, k))
        assert chi_b_exact(g).value == n - k + 1

    @pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
    def test_full_and_hat_signed_kneser_agree(self, n, k):
        """chi_b(KS(n,k)) = chi_b(ĤKS(n,k)) = n - k + 1."""
        full = chi_b_exact(gen_family(FamilyDescriptor("ks", n, k)))
        hat = chi_b_exact(gen_family(FamilyDescriptor("hks", n, k)))
        assert full.value == hat.value == n - k + 1

    def test_all_negative_complete(self):
        """chi_b(K_m, -) = ceil(m / 2)."""
        for m in range(1, 7):
            assert chi_b_exact(all_negative(nx.complete_graph(m))).value == (m + 1) // 2

    def test_switched_copy_keeps_value(self, hks42):
        assert chi_b_exact(add_switched_copy(hks42, 0)).value == 3

    def test_zero_budget(self, unbalanced_triangle):
        with pytest.raises(InputError):
            chi_b_exact(unbalanced_triangle, budget=0)

    def test_timeout_reports_bounds(self, unbalanced_triangle, monkeypatch):
        """При исчерпании бюджета возвращаются явные границы и лучший сертификат."""
        clock = itertools.count(0.0, 100.0)
        monkeypatch.setattr(solver, "time", SimpleNamespace(monotonic=lambda: next(clock)))
        upper = BalancedColouring((1, 2, 3), (1, 1, 1))
        result = solver._search_exact(unbalanced_triangle, 1, {}, upper, budget=1.0, check_interval=1)
        assert result.timed_out and not result.exact
        assert result.value is None
        assert result.lower == 1 and result.upper == 3
        assert result.certificate == upper

    @pytest.mark.parametrize("hint", [1, 2, 3, 5])
    def test_upper_hint_keeps_value(self, hks42, hint):
        """Подсказка выше, ниже или равная значению не меняет ответ."""
        result = chi_b_exact(hks42, upper_hint=hint)
        assert result.value == 3 and result.exact
        assert result.certificate.check(hks42)

    def test_bad_upper_hint(self, unbalanced_triangle):
        with pytest.raises(InputError):
            chi_b_exact(unbalanced_triangle, upper_hint=0)

    @pytest.mark.parametrize("hint, lower, upper", [(None, 2, 3), (2, 1, 2)])
    def test_upper_hint_narrows_timeout_bounds(self, unbalanced_triangle, monkeypatch, hint, lower, upper):
        """Каждый поиск проверяет часы один раз; срок истекает на втором поиске."""
        clock = iter([0.0, 0.0, 100.0, 100.0])
        monkeypatch.setattr(solver, "time", SimpleNamespace(monotonic=lambda: next(clock)))
        greedy = BalancedColouring((1, 2, 3), (1, 1, 1))
        result = solver._search_exact(unbalanced_triangle, 1, {}, greedy, budget=1.0, check_interval=10 ** 9,
                                      upper_hint=hint)
        assert result.timed_out
        assert (result.lower, result.upper) == (lower, upper)
        assert result.certificate.num_colours == upper

    def test_to_dict(self, unbalanced_triangle):
        data = chi_b_exact(unbalanced_triangle).to_dict()
        assert data["value"] == 2
        assert len(data["certificate"]["colour"]) == 3


class TestHelpers:
    """Тесты нижней и верхней оценок."""

    def test_digon_clique(self):
        assert digon_clique(plus_minus(nx.complete_graph(4))) == [0, 1, 2, 3]

    def test_digon_clique_greedy(self):
        clique = digon_clique(plus_minus(nx.complete_graph(5)), exact_limit=2)
        assert len(clique) == 5

    def test_no_digons(self, unbalanced_triangle):
        assert digon_clique(unbalanced_triangle) == []

    def test_greedy_is_valid(self, hks42):
        colouring = greedy_balanced_colouring(hks42)
        assert colouring.check(hks42)
        assert 0 not in colouring.colour


class TestZeroFree:
    """Тесты хроматического числа без нуля."""

    def test_positive_triangle(self, positive_triangle):
        result = chi_zero_free(positive_triangle)
        assert result.value == 2
        ok, _ = verify_zero_free_colouring(positive_triangle, result.certificate)
        assert ok


class TestChiExact:
    """Тесты классического хроматического числа."""

    @pytest.mark.parametrize("graph, expected", [
        (nx.empty_graph(3), 1),
        (nx.path_graph(4), 2),
        (nx.cycle_graph(5), 3),
        (nx.complete_graph(4), 4),
        (nx.petersen_graph(), 3),
    ])
    def test_values(self, graph, expected):
        result = chi_exact(graph)
        assert result.value == expected
        assert is_proper_colouring(graph, result.certificate)

    def test_empty(self):
        assert chi_exact(nx.Graph()).value == 0

    def test_self_loop(self):
        h = nx.Graph([(0, 0), (0, 1)])
        with pytest.raises(InputError):
            chi_exact(h)

    def test_is_proper_colouring_sequence(self):
        h = nx.path_graph(3)
        assert is_proper_colouring(h, [1, 2, 1])
        assert not is_proper_colouring(h, [1, 1, 2])
        assert not is_proper_colouring(h, [1, 2])


class TestOracles:
    """Сверка точного поиска с независимыми оракулами."""

    def test_bruteforce_agrees(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            g = random_signed_graph(int(rng.integers(1, 8)), rng)
            assert chi_b_exact(g).value == chi_b_bruteforce(g)

    def test_switchings_agree(self):
        rng = np.random.default_rng(12)
        for _ in range(15):
            g = random_signed_graph(int(rng.integers(1, 7)), rng)
            assert chi_b_exact(g).value == chi_b_via_switchings(g)

    def test_switchings_triangle(self, unbalanced_triangle):
        assert chi_b_via_switchings(unbalanced_triangle) == 2

    def test_negation_relation(self):
        """chi_b(G, s) совпадает с chi без нуля графа (G, -s)."""
        rng = np.random.default_rng(13)
        for _ in range(10):
            g = random_signed_graph(6, rng)
            assert chi_zero_free(negate(g)).value == chi_b_exact(g).value

    def test_order_limits(self):
        big = SignedGraph(13)
        with pytest.raises(InputError):
            chi_b_bruteforce(big)
        with pytest.raises(InputError):
            chi_b_via_switchings(SignedGraph(17))


class TestInvariants:
    """Инвариантность chi_b относительно переключений и монотонность при удалении вершин."""

    def test_switching_invariance(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            g = random_signed_graph(int(rng.integers(2, 10)), rng)
            x = [v for v in range(g.order) if rng.random() < 0.5]
            assert chi_b_exact(switch(g, x)).value == chi_b_exact(g).value

    def test_deletion_never_increases(self):
        rng = np.random.default_rng(19)
        for _ in range(15):
            g = random_signed_graph(int(rng.integers(2, 9)), rng)
            value = chi_b_exact(g).value
            for v in range(g.order):
                assert chi_b_exact(delete_vertex(g, v)).value <= value


class TestCriticality:
    """Тесты вершинной критичности."""

    def test_hss_is_critical(self, hss32):
        verdict = is_vertex_critical(hss32, 2)
        assert verdict.critical
        assert verdict.deletion_values == (1, 1, 1)

    def test_hss42_is_critical(self):
        g = gen_family(FamilyDescriptor("hss", 4, 2))
        assert is_vertex_critical(g, 3)

    def test_wrong_target(self, hss32):
        with pytest.raises(InputError):
            is_vertex_critical(hss32, 3)

    def test_not_critical(self, positive_triangle):
        """Сбалансированный треугольник: удаление вершины не уменьшает chi_b."""
        verdict = is_vertex_critical(positive_triangle, 1)
        assert not verdict.critical
        assert verdict.non_critical_vertices == (0, 1, 2)

    def test_hks42_is_not_critical(self, hks42):
        """ĤKS(4,2) строго содержит критический ĤSS(4,2): некоторые удаления сохраняют значение 3."""
        verdict = is_vertex_critical(hks42, 3)
        assert not verdict.critical
        assert 3 in verdict.deletion_values
        assert all(value in (2, 3) for value in verdict.deletion_values)

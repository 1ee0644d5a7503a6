#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Тесты для модуля sgcore
=======================

Проверяются переключения, критерий сбалансированности, проверка раскрасок,
переходы к раскраскам без нуля и формат Signed-DIMACS.
"""

from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from exceptions import FormatError, InputError
from families import random_signed_graph
from sgcore import (SignedGraph, POSITIVE, NEGATIVE, switch, is_balanced, is_balanced_set, cycle_sign,
                    negative_subgraph, switching_equivalent, verify_balanced_colouring, induced_subgraph,
                    delete_vertex, negate, add_switched_copy, balanced_to_zero_free, verify_zero_free_colouring,
                    zero_free_to_balanced, format_sdimacs, parse_sdimacs, write_sdimacs, read_sdimacs)


class TestSignedGraph:
    """Тесты для построения знакового графа."""

    def test_positive_loop_dropped(self):
        """Положительная петля не хранится."""
        g = SignedGraph.from_edges(2, [(0, 0, POSITIVE), (0, 1, NEGATIVE)])
        assert g.edge_count == 1
        assert g.edges() == [(0, 1, NEGATIVE)]

    def test_negative_loop_rejected(self):
        """Отрицательная петля запрещена."""
        with pytest.raises(InputError):
            SignedGraph.from_edges(1, [(0, 0, NEGATIVE)])

    def test_vertex_out_of_range(self):
        with pytest.raises(InputError):
            SignedGraph.from_edges(2, [(0, 2, POSITIVE)])

    def test_bad_sign(self):
        with pytest.raises(InputError):
            SignedGraph.from_edges(2, [(0, 1, 0)])

    def test_digon(self, digon):
        """Пара с двумя знаками является дигоном."""
        assert digon.is_digon(0, 1)
        assert digon.digons() == [(0, 1)]
        assert digon.edges() == [(0, 1, POSITIVE), (0, 1, NEGATIVE)]

    def test_adjacency_and_masks(self, unbalanced_triangle):
        assert unbalanced_triangle.adjacency[0] == ((1, NEGATIVE), (2, POSITIVE))
        positive, negative = unbalanced_triangle.masks
        assert positive[2] == 0b011
        assert negative[0] == 0b010


class TestBalance:
    """Тесты критерия сбалансированности."""

    def test_balanced_witness(self, positive_triangle):
        """Свидетель делает все ребра положительными."""
        verdict = is_balanced(positive_triangle)
        assert verdict.balanced
        w = verdict.witness
        assert all(w[u] * w[v] * s == POSITIVE for u, v, s in positive_triangle.edges())

    def test_negative_cycle(self, unbalanced_triangle):
        """Для несбалансированного графа возвращается замкнутый отрицательный цикл."""
        verdict = is_balanced(unbalanced_triangle)
        assert not verdict
        assert cycle_sign(unbalanced_triangle, verdict.cycle) == NEGATIVE

    def test_digon_is_negative_2_cycle(self, digon):
        verdict = is_balanced(digon)
        assert not verdict.balanced
        assert len(verdict.cycle) == 2
        assert cycle_sign(digon, verdict.cycle) == NEGATIVE

    def test_balanced_set(self, unbalanced_triangle):
        """Любые две вершины треугольника образуют сбалансированное множество."""
        assert is_balanced_set(unbalanced_triangle, [0, 1]).balanced
        assert not is_balanced_set(unbalanced_triangle, [0, 1, 2]).balanced

    def test_bad_vertex_id(self, unbalanced_triangle):
        with pytest.raises(InputError):
            is_balanced_set(unbalanced_triangle, [0, 7])

    def test_cycle_sign_missing_edge(self, unbalanced_triangle):
        with pytest.raises(InputError):
            cycle_sign(unbalanced_triangle, [(0, 1, POSITIVE), (1, 0, POSITIVE)])


class TestSwitching:
    """Тесты переключений."""

    def test_switch_cut(self, unbalanced_triangle):
        """Переключение меняет знаки ребер разреза."""
        switched = switch(unbalanced_triangle, [0])
        assert switched.edges() == [(0, 1, POSITIVE), (0, 2, NEGATIVE), (1, 2, POSITIVE)]

    def test_switch_preserves_balance(self, unbalanced_triangle):
        assert not is_balanced(switch(unbalanced_triangle, [1, 2])).balanced

    def test_switch_keeps_digons(self, digon):
        assert switch(digon, [0]) == digon

    def test_equivalent(self, unbalanced_triangle):
        switched = switch(unbalanced_triangle, [0])
        verdict = switching_equivalent(unbalanced_triangle, switched)
        assert verdict.equivalent
        assert switch(unbalanced_triangle, verdict.side) == switched

    def test_not_equivalent(self, unbalanced_triangle, positive_triangle):
        assert not switching_equivalent(unbalanced_triangle, positive_triangle)

    def test_different_underlying_graphs(self, unbalanced_triangle):
        path = SignedGraph.from_edges(3, [(0, 1, POSITIVE)])
        with pytest.raises(InputError):
            switching_equivalent(unbalanced_triangle, path)


def _cycle_walk(g, nodes):
    """Замкнутый обход по циклу из вершин nodes (в графе без дигонов)."""
    walk = []
    for u, v in zip(nodes, nodes[1:] + nodes[:1]):
        walk.append((u, v, POSITIVE if g.has_edge(u, v, POSITIVE) else NEGATIVE))
    return walk


def _balanced_by_switching(g):
    """Перебор всех переключений: сбалансирован, если какое-то делает все ребра положительными."""
    for size in range(g.order + 1):
        for x in combinations(range(g.order), size):
            if not switch(g, x).negative:
                return True
    return False


class TestSwitchingInvariants:
    """Инварианты переключений на случайных графах."""

    def test_path_middle_vertex(self):
        """Переключение средней вершины пути меняет знаки обоих ребер."""
        path = SignedGraph.from_edges(3, [(0, 1, POSITIVE), (1, 2, POSITIVE)])
        assert switch(path, [1]).edges() == [(0, 1, NEGATIVE), (1, 2, NEGATIVE)]
        verdict = switching_equivalent(path, negate(path))
        assert verdict.equivalent
        assert verdict.side in (frozenset({1}), frozenset({0, 2}))

    def test_triangle_all_switchings(self, unbalanced_triangle):
        """Все 8 переключений треугольника сохраняют нечетность числа отрицательных ребер."""
        for size in range(4):
            for x in combinations(range(3), size):
                assert len(switch(unbalanced_triangle, x).negative) % 2 == 1

    def test_cycle_sign_parity(self):
        rng = np.random.default_rng(11)
        for order in range(3, 9):
            g = random_signed_graph(order, rng, edge_probability=0.6, digon_probability=0.0)
            underlying = nx.Graph(sorted(g.positive | g.negative))
            cycles = nx.cycle_basis(underlying)
            for _ in range(5):
                x = [v for v in range(order) if rng.random() < 0.5]
                switched = switch(g, x)
                for nodes in cycles:
                    assert cycle_sign(switched, _cycle_walk(switched, nodes)) == \
                        cycle_sign(g, _cycle_walk(g, nodes))

    def test_balance_invariant_under_every_switching(self):
        g = SignedGraph.from_edges(6, [(0, 1, NEGATIVE), (1, 2, POSITIVE), (2, 0, NEGATIVE), (2, 3, NEGATIVE),
                                       (3, 4, POSITIVE), (4, 5, NEGATIVE), (5, 3, POSITIVE)])
        expected = is_balanced(g).balanced
        for size in range(g.order + 1):
            for x in combinations(range(g.order), size):
                assert is_balanced(switch(g, x)).balanced == expected

    @pytest.mark.parametrize("digon_probability", [0.0, 0.1])
    def test_balance_agrees_with_exhaustive_search(self, digon_probability):
        rng = np.random.default_rng(23)
        for order in range(1, 11):
            for edge_probability in (0.2, 0.4):
                g = random_signed_graph(order, rng, edge_probability, digon_probability)
                assert is_balanced(g).balanced == _balanced_by_switching(g)

    def test_equivalence_relation(self):
        """Эквивалентность переключением рефлексивна, симметрична и транзитивна."""
        rng = np.random.default_rng(31)
        g = random_signed_graph(7, rng, edge_probability=0.6)
        h = switch(g, [0, 3, 5])
        f = switch(h, [1, 3])
        assert switching_equivalent(g, g).equivalent
        assert switching_equivalent(g, h).equivalent and switching_equivalent(h, g).equivalent
        assert switching_equivalent(h, f).equivalent and switching_equivalent(g, f).equivalent
        assert switch(g, switching_equivalent(g, f).side) == f

    def test_inequivalence_is_symmetric(self, unbalanced_triangle, positive_triangle):
        assert not switching_equivalent(unbalanced_triangle, positive_triangle)
        assert not switching_equivalent(positive_triangle, unbalanced_triangle)


class TestColouring:
    """Тесты проверки сбалансированных раскрасок."""

    def test_rejects_unbalanced_class(self, unbalanced_triangle):
        verdict = verify_balanced_colouring(unbalanced_triangle, [1, 1, 1])
        assert not verdict.accepted
        assert verdict.offending_class == 1
        assert cycle_sign(unbalanced_triangle, verdict.cycle) == NEGATIVE

    def test_accepts_with_certificate(self, unbalanced_triangle):
        verdict = verify_balanced_colouring(unbalanced_triangle, [1, 1, 2])
        assert verdict
        assert verdict.certificate.num_colours == 2
        assert verdict.certificate.check(unbalanced_triangle)

    def test_digon_needs_two_colours(self, digon):
        assert not verify_balanced_colouring(digon, [1, 1])
        assert verify_balanced_colouring(digon, [1, 2])

    def test_incomplete_colouring(self, unbalanced_triangle):
        with pytest.raises(InputError):
            verify_balanced_colouring(unbalanced_triangle, [1, 2])
        with pytest.raises(InputError):
            verify_balanced_colouring(unbalanced_triangle, [1, 0, 2])


class TestTransformations:
    """Тесты подграфов, отрицания и переходов к раскраскам без нуля."""

    def test_negative_subgraph(self, unbalanced_triangle):
        h = negative_subgraph(unbalanced_triangle)
        assert sorted(h.nodes()) == [0, 1, 2]
        assert list(h.edges()) == [(0, 1)]
        assert sorted(negative_subgraph(unbalanced_triangle, keep_isolated=False).nodes()) == [0, 1]

    def test_induced_subgraph(self, unbalanced_triangle):
        sub, mapping = induced_subgraph(unbalanced_triangle, [1, 2])
        assert mapping == [1, 2]
        assert sub.edges() == [(0, 1, POSITIVE)]

    def test_delete_vertex(self, unbalanced_triangle):
        assert is_balanced(delete_vertex(unbalanced_triangle, 2)).balanced

    def test_negate(self, unbalanced_triangle, digon):
        assert negate(unbalanced_triangle).edges() == [(0, 1, POSITIVE), (0, 2, NEGATIVE), (1, 2, NEGATIVE)]
        assert negate(digon) == digon

    def test_add_switched_copy(self, unbalanced_triangle):
        """Копия соединена с соседями ребрами противоположного знака и с оригиналом - отрицательным."""
        g = add_switched_copy(unbalanced_triangle, 0)
        assert g.order == 4
        assert g.has_edge(1, 3, POSITIVE)
        assert g.has_edge(2, 3, NEGATIVE)
        assert g.has_edge(0, 3, NEGATIVE)

    def test_zero_free_roundtrip(self, unbalanced_triangle):
        certificate = verify_balanced_colouring(unbalanced_triangle, [1, 1, 2]).certificate
        signed = balanced_to_zero_free(certificate)
        ok, edge = verify_zero_free_colouring(negate(unbalanced_triangle), signed)
        assert ok and edge is None
        back = zero_free_to_balanced(unbalanced_triangle, signed)
        assert back.check(unbalanced_triangle)

    def test_zero_free_violation(self, positive_triangle):
        ok, edge = verify_zero_free_colouring(positive_triangle, [1, 1, 2])
        assert not ok
        assert edge == (0, 1, POSITIVE)

    def test_zero_colour_rejected(self, positive_triangle):
        with pytest.raises(InputError):
            verify_zero_free_colouring(positive_triangle, [0, 1, 2])


class TestSignedDimacs:
    """Тесты формата Signed-DIMACS."""

    SAMPLE = "c пример\np sgraph 3 4\ne 1 2 +\ne 1 2 -\ne 2 3 -\ne 3 3 +\nl 1 {1,-2}\n"

    def test_parse(self):
        g = parse_sdimacs(self.SAMPLE)
        assert g.order == 3
        assert g.edges() == [(0, 1, POSITIVE), (0, 1, NEGATIVE), (1, 2, NEGATIVE)]
        assert g.label(0) == "{1,-2}"
        assert g.label(2) == "3"

    def test_format_parse(self, hss32):
        text = format_sdimacs(hss32, ["family hss"])
        assert text.startswith("c family hss\np sgraph 3 3\n")
        g = parse_sdimacs(text)
        assert g == hss32
        assert g.labels == hss32.labels

    @pytest.mark.parametrize("text, line", [
        ("e 1 2 +\n", 1),
        ("p sgraph 2 1\np sgraph 2 1\ne 1 2 +\n", 2),
        ("p sgraph 2 1\ne 1 1 -\n", 2),
        ("p sgraph 2 1\ne 1 3 +\n", 2),
        ("p sgraph 2 1\nx 1 2\n", 2),
        ("p sgraph 2 1\ne 1 2 *\n", 2),
    ])
    def test_format_errors(self, text, line):
        """Ошибка разбора сообщает номер строки."""
        with pytest.raises(FormatError) as error:
            parse_sdimacs(text)
        assert error.value.line_number == line

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_sdimacs("p sgraph 2 2\ne 1 2 +\n")

    def test_missing_header(self):
        with pytest.raises(FormatError):
            parse_sdimacs("c только комментарий\n")

    def test_file_io(self, tmp_path, hks42):
        path = tmp_path / "hks42.sdim"
        write_sdimacs(hks42, path, ["family hks", "n 4 k 2"])
        assert read_sdimacs(path) == hks42

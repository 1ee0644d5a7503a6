#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Общие фикстуры pytest для тестирования модулей проекта.
Содержит многократно используемые графы и семейства.
"""

import pytest
import networkx as nx

from families import FamilyDescriptor, gen_family
from sgcore import SignedGraph, POSITIVE, NEGATIVE


@pytest.fixture
def unbalanced_triangle():
    """Треугольник с одним отрицательным ребром (несбалансирован, chi_b = 2)."""
    return SignedGraph.from_edges(3, [(0, 1, NEGATIVE), (0, 2, POSITIVE), (1, 2, POSITIVE)])


@pytest.fixture
def positive_triangle():
    """Треугольник из положительных ребер (сбалансирован)."""
    return SignedGraph.from_edges(3, [(0, 1, POSITIVE), (0, 2, POSITIVE), (1, 2, POSITIVE)])


@pytest.fixture
def digon():
    """Две вершины, соединенные положительным и отрицательным ребром."""
    return SignedGraph.from_edges(2, [(0, 1, POSITIVE), (0, 1, NEGATIVE)])


@pytest.fixture
def hks42():
    """ĤKS(4,2): 12 вершин, chi_b = 3."""
    return gen_family(FamilyDescriptor("hks", 4, 2))


@pytest.fixture
def hss32():
    """ĤSS(3,2): вершины {2,-3}, {1,-2}, {1,-3} (в порядке генерации)."""
    return gen_family(FamilyDescriptor("hss", 3, 2))


@pytest.fixture
def petersen():
    """Граф Петерсена (chi = 3)."""
    return nx.petersen_graph()

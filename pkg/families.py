#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль families
===============

Генераторы семейств графов: знаковые графы Кнезера KS(n,k) и Шрийвера SS(n,k),
их "шляпные" варианты (вершины с положительной первой ненулевой координатой),
классические графы Кнезера K(m,k) и Шрийвера S(m,k), обертки (G,-) и (G,+-),
а также вложение S(2n,k) в отрицательную часть KS(n,k).

Все генераторы детерминированы: вершины упорядочены лексикографически по
вектору из {-1, 0, +1} с порядком -1 < 0 < +1.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from exceptions import InputError
from sgcore import SignedGraph, POSITIVE, NEGATIVE


logger = logging.getLogger(__name__)

SIGNED_FAMILIES = ("ks", "hks", "ss", "hss")
CLASSICAL_FAMILIES = ("kneser", "schrijver")
WRAPPER_FAMILIES = ("all_negative", "plus_minus")
FAMILIES = SIGNED_FAMILIES + CLASSICAL_FAMILIES + WRAPPER_FAMILIES + ("borsuk_disc",)


@dataclass(frozen=True, order=True)
class SignedSubset:
    """
    Знаковое k-подмножество [n] в виде вектора длины n над {-1, 0, +1}.

    Как множество A из +-[n]: координата i равна +1, если i в A, и -1, если -i в A.
    Условие A и -A не пересекаются выполняется автоматически.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise InputError(f"Координаты знакового подмножества должны быть из {{-1, 0, 1}}: {self.entries}")

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "SignedSubset":
        """
        Создает подмножество по элементам из +-[n].

        Raises:
            InputError: Элемент вне +-[n] или одновременно i и -i.
        """
        entries = [0] * n
        for x in elements:
            if x == 0 or abs(x) > n:
                raise InputError(f"Элемент {x} не принадлежит +-[{n}]")
            if entries[abs(x) - 1] != 0:
                raise InputError(f"Индекс {abs(x)} встречается дважды")
            entries[abs(x) - 1] = 1 if x > 0 else -1
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str, n: int) -> "SignedSubset":
        """Разбирает запись вида "{1,-3}"."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise InputError(f"Ожидается запись вида {{1,-3}}: {text}")
        body = body[1:-1].strip()
        try:
            elements = [int(part) for part in body.split(",")] if body else []
        except ValueError:
            raise InputError(f"Некорректная запись подмножества: {text}")
        return cls.from_elements(elements, n)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return sum(1 for e in self.entries if e)

    def elements(self) -> Tuple[int, ...]:
        """Элементы множества по возрастанию абсолютной величины."""
        return tuple((i + 1) * e for i, e in enumerate(self.entries) if e)

    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, e in enumerate(self.entries) if e)

    def sign_of(self, i: int) -> int:
        """Знак индекса i в множестве (0, если ни i, ни -i не входят)."""
        return self.entries[i - 1]

    def is_hat(self) -> bool:
        """Первая ненулевая координата положительна."""
        for e in self.entries:
            if e:
                return e > 0
        return False

    def __neg__(self) -> "SignedSubset":
        return SignedSubset(tuple(-e for e in self.entries))

    @property
    def label(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements()) + "}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class FamilyDescriptor:
    """
    Описание семейства графов и его параметров.

    Attributes:
        family: Одно из FAMILIES.
        n, k: Параметры семейств множеств (для kneser/schrijver n - размер основы m).
        d, eps, resolution, seed: Параметры дискретизации Борсука.
    """
    family: str
    n: int = 0
    k: int = 0
    d: int = 1
    eps: float = 0.05
    resolution: int = 64
    seed: int = 0

    def validate(self) -> "FamilyDescriptor":
        """
        Проверяет параметры.

        Raises:
            InputError: Неизвестное семейство или недопустимые параметры.
        """
        if self.family not in FAMILIES:
            raise InputError(f"Неизвестное семейство: {self.family}")
        if self.family == "borsuk_disc":
            if self.d < 1:
                raise InputError(f"Размерность сферы должна быть >= 1: {self.d}")
            if not (0 < self.eps < 2):
                raise InputError(f"eps должно лежать в (0, 2): {self.eps}")
            if self.resolution < 2:
                raise InputError(f"Разрешение должно быть >= 2: {self.resolution}")
        elif self.family in SIGNED_FAMILIES + CLASSICAL_FAMILIES:
            if not (1 <= self.k <= self.n):
                raise InputError(f"Требуется 1 <= k <= n, получено n={self.n}, k={self.k}")
        return self


def _check_nk(n: int, k: int) -> None:
    if not (1 <= k <= n):
        raise InputError(f"Требуется 1 <= k <= n, получено n={n}, k={k}")


def gen_signed_subsets(n: int, k: int) -> List[SignedSubset]:
    """
    Все знаковые k-подмножества [n] в лексикографическом порядке векторов.

    Returns:
        List[SignedSubset]: Ровно 2^k * C(n,k) элементов без повторов.

    Raises:
        InputError: k = 0 или k > n.
    """
    _check_nk(n, k)
    return [SignedSubset(entries) for entries in product((-1, 0, 1), repeat=n)
            if sum(1 for e in entries if e) == k]


def adjacency(a: SignedSubset, b: SignedSubset) -> Tuple[bool, bool]:
    """
    Смежность в KS(n,k).

    Положительное ребро, если покоординатное произведение везде >= 0
    (A и -B не пересекаются); отрицательное, если везде <= 0 (A и B не
    пересекаются). При непересекающихся носителях выполняются оба условия.

    Returns:
        Tuple[bool, bool]: (есть положительное ребро, есть отрицательное ребро).

    Raises:
        InputError: Разные n.
    """
    if a.n != b.n:
        raise InputError(f"Подмножества разных основ: n={a.n} и n={b.n}")
    positive = all(x * y >= 0 for x, y in zip(a.entries, b.entries))
    negative = all(x * y <= 0 for x, y in zip(a.entries, b.entries))
    return positive, negative


def is_alternating(a: SignedSubset) -> bool:
    """Ненулевые координаты чередуются по знаку при чтении по возрастанию индекса."""
    signs = [e for e in a.entries if e]
    return all(x != y for x, y in zip(signs, signs[1:]))


def family_vertices(family: str, n: int, k: int) -> List[SignedSubset]:
    """Вершины семейства ks/hks/ss/hss в порядке генерации."""
    if family not in SIGNED_FAMILIES:
        raise InputError(f"Семейство {family} не является семейством знаковых подмножеств")
    vertices = gen_signed_subsets(n, k)
    if family in ("ss", "hss"):
        vertices = [a for a in vertices if is_alternating(a)]
    if family in ("hks", "hss"):
        vertices = [a for a in vertices if a.is_hat()]
    return vertices


def subset_graph(vertices: Sequence[SignedSubset]) -> SignedGraph:
    """Знаковый граф, индуцированный в KS(n,k) на заданных вершинах."""
    edges = []
    for i, j in combinations(range(len(vertices)), 2):
        positive, negative = adjacency(vertices[i], vertices[j])
        if positive:
            edges.append((i, j, POSITIVE))
        if negative:
            edges.append((i, j, NEGATIVE))
    return SignedGraph.from_edges(len(vertices), edges, [a.label for a in vertices])


def expected_order(family: str, n: int, k: int) -> int:
    """Число вершин семейства по замкнутой формуле."""
    closed_forms = {
        "ks": 2 ** k * comb(n, k),
        "hks": 2 ** (k - 1) * comb(n, k),
        "ss": 2 * comb(n, k),
        "hss": comb(n, k),
    }
    if family not in closed_forms:
        raise InputError(f"Для семейства {family} нет замкнутой формулы")
    return closed_forms[family]


def _subset_label(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def is_stable(s: Iterable[int], m: int) -> bool:
    """
    Стабильность подмножества [m] в циклическом порядке:
    i в s влечет i+1 не в s, и m в s влечет 1 не в s.
    """
    s = set(s)
    for i in s:
        following = i % m + 1
        if following != i and following in s:
            return False
    return True


def gen_kneser(m: int, k: int) -> nx.Graph:
    """Классический граф Кнезера K(m,k); вершины 0.., атрибут label - подмножество."""
    _check_nk(m, k)
    return _disjointness_graph(list(combinations(range(1, m + 1), k)))


def gen_schrijver(m: int, k: int) -> nx.Graph:
    """Классический граф Шрийвера S(m,k): K(m,k) на стабильных подмножествах."""
    _check_nk(m, k)
    return _disjointness_graph([s for s in combinations(range(1, m + 1), k) if is_stable(s, m)])


def _disjointness_graph(subsets: List[Tuple[int, ...]]) -> nx.Graph:
    h = nx.Graph()
    for i, s in enumerate(subsets):
        h.add_node(i, label=_subset_label(s), subset=frozenset(s))
    for i, j in combinations(range(len(subsets)), 2):
        if not set(subsets[i]) & set(subsets[j]):
            h.add_edge(i, j)
    return h


def from_unsigned(h: nx.Graph, signs: Sequence[int]) -> SignedGraph:
    """
    Знаковый граф из неориентированного: каждое ребро получает все знаки из signs.

    Вершины перенумеровываются по порядку h.nodes(); подпись берется из
    атрибута label или из имени вершины.
    """
    nodes = list(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = [(index[u], index[v], s) for u, v in h.edges() for s in signs]
    labels = [str(h.nodes[v].get("label", v)) for v in nodes]
    return SignedGraph.from_edges(len(nodes), edges, labels)


def all_negative(h: nx.Graph) -> SignedGraph:
    """(G, -): все ребра отрицательны."""
    return from_unsigned(h, (NEGATIVE,))


def plus_minus(h: nx.Graph) -> SignedGraph:
    """(G, +-): каждое ребро заменено дигоном."""
    return from_unsigned(h, (POSITIVE, NEGATIVE))


def gen_unsigned(desc: FamilyDescriptor) -> nx.Graph:
    """Классический граф для дескриптора kneser/schrijver."""
    desc.validate()
    if desc.family == "kneser":
        return gen_kneser(desc.n, desc.k)
    if desc.family == "schrijver":
        return gen_schrijver(desc.n, desc.k)
    raise InputError(f"Семейство {desc.family} не является классическим")


def gen_family(desc: FamilyDescriptor, base: Optional[nx.Graph] = None) -> SignedGraph:
    """
    Генерирует знаковый граф семейства с подписями вершин.

    Args:
        desc: Дескриптор семейства.
        base: Неориентированный граф для оберток all_negative / plus_minus.

    Returns:
        SignedGraph: Граф семейства. Классические графы выдаются как (G, -).

    Raises:
        InputError: Недопустимые параметры или отсутствует base для обертки.
    """
    desc.validate()
    if desc.family in SIGNED_FAMILIES:
        graph = subset_graph(family_vertices(desc.family, desc.n, desc.k))
    elif desc.family in CLASSICAL_FAMILIES:
        graph = all_negative(gen_unsigned(desc))
    elif desc.family in WRAPPER_FAMILIES:
        if base is None:
            raise InputError(f"Для семейства {desc.family} нужен исходный граф")
        graph = all_negative(base) if desc.family == "all_negative" else plus_minus(base)
    else:
        from topo import gen_borsuk_disc
        graph = gen_borsuk_disc(desc.d, desc.eps, desc.resolution, desc.seed).graph
    logger.debug(f"Семейство {desc.family}: {graph.order} вершин, {graph.edge_count} ребер")
    return graph


def stable_to_signed(s: Iterable[int], n: int) -> SignedSubset:
    """
    Переводит стабильное подмножество [2n] в знаковое подмножество [n].

    Позиции циклического порядка (1, -1, 2, -2, ..., n, -n): позиция 2i-1
    переходит в i, позиция 2i - в -i.

    Raises:
        InputError: Подмножество не стабильно или выходит за [2n].
    """
    s = sorted(set(s))
    if any(p < 1 or p > 2 * n for p in s):
        raise InputError(f"Подмножество {s} выходит за пределы [{2 * n}]")
    if not is_stable(s, 2 * n):
        raise InputError(f"Подмножество {s} не стабильно в циклическом порядке [{2 * n}]")
    return SignedSubset.from_elements([(p + 1) // 2 if p % 2 else -(p // 2) for p in s], n)


@dataclass(frozen=True)
class EmbeddingVerdict:
    """Результат проверки вложения (S(2n,k), -) в KS(n,k)."""
    ok: bool
    mapping: Dict[FrozenSet[int], SignedSubset] = field(default_factory=dict)
    violations: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def embed_schrijver_negative(n: int, k: int) -> EmbeddingVerdict:
    """
    Проверяет, что (S(2n,k), -) является подграфом KS(n,k).

    Каждая вершина S(2n,k) отображается через stable_to_signed; проверяется
    инъективность и то, что каждое ребро переходит в отрицательное ребро.

    Raises:
        InputError: Не выполнено 2n >= 2k.
    """
    _check_nk(n, k)
    schrijver = gen_schrijver(2 * n, k)
    mapping: Dict[FrozenSet[int], SignedSubset] = {}
    violations: List[str] = []
    for v, data in schrijver.nodes(data=True):
        mapping[data["subset"]] = stable_to_signed(data["subset"], n)
    if len(set(mapping.values())) != len(mapping):
        violations.append("отображение не инъективно")
    for u, v in schrijver.edges():
        a = mapping[schrijver.nodes[u]["subset"]]
        b = mapping[schrijver.nodes[v]["subset"]]
        if not adjacency(a, b)[1]:
            violations.append(f"ребро {a}~{b} не отрицательно")
    if violations:
        logger.error(f"Вложение S({2 * n},{k}) нарушено: {violations[0]}")
    return EmbeddingVerdict(not violations, mapping, tuple(violations))


def random_signed_graph(order: int, rng: np.random.Generator, edge_probability: float = 0.5,
                        digon_probability: float = 0.2) -> SignedGraph:
    """
    Случайный знаковый граф: каждая пара вершин с вероятностью edge_probability
    соединена дигоном (доля digon_probability) или ребром случайного знака.
    """
    edges = []
    for u, v in combinations(range(order), 2):
        if rng.random() >= edge_probability:
            continue
        if rng.random() < digon_probability:
            edges.extend(((u, v, POSITIVE), (u, v, NEGATIVE)))
        else:
            edges.append((u, v, POSITIVE if rng.random() < 0.5 else NEGATIVE))
    return SignedGraph.from_edges(order, edges)

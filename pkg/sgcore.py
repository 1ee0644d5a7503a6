#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль sgcore
=============

Модель знаковых графов: переключения, проверка сбалансированности,
отрицательный подграф, проверка сбалансированных раскрасок и ввод-вывод
в формате Signed-DIMACS.

Вершины - плотные целые числа 0..order-1, подписи вершин (например "{1,-3}")
являются только метаданными. Положительные петли никогда не хранятся: они
подразумеваются у каждой вершины и не влияют на раскраску. Пара вершин может
нести одно положительное и одно отрицательное ребро одновременно (дигон).
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
import os
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from exceptions import InputError, FormatError


logger = logging.getLogger(__name__)

POSITIVE: int = 1
NEGATIVE: int = -1

Sign = int
Edge = Tuple[int, int, Sign]
Switching = Dict[int, Sign]


def _check_sign(s: int) -> int:
    if s not in (POSITIVE, NEGATIVE):
        raise InputError(f"Знак ребра должен быть +1 или -1, получено: {s}")
    return s


@dataclass(frozen=True)
class SignedGraph:
    """
    Неизменяемый знаковый граф.

    Attributes:
        order (int): Количество вершин (идентификаторы 0..order-1).
        positive (FrozenSet[Tuple[int, int]]): Положительные ребра, пары (u, v) с u < v.
        negative (FrozenSet[Tuple[int, int]]): Отрицательные ребра, пары (u, v) с u < v.
        labels (Optional[Tuple[str, ...]]): Подписи вершин или None.
    """
    order: int
    positive: FrozenSet[Tuple[int, int]] = frozenset()
    negative: FrozenSet[Tuple[int, int]] = frozenset()
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise InputError(f"Порядок графа не может быть отрицательным: {self.order}")
        for u, v in self.positive | self.negative:
            if not (0 <= u < v < self.order):
                raise InputError(f"Некорректное ребро ({u}, {v}) для графа порядка {self.order}")
        if self.labels is not None and len(self.labels) != self.order:
            raise InputError("Количество подписей не совпадает с порядком графа")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge],
                   labels: Optional[Sequence[str]] = None) -> "SignedGraph":
        """
        Создает граф из списка ребер (u, v, s).

        Одинаковые параллельные ребра схлопываются, положительные петли
        отбрасываются, отрицательные петли запрещены.

        Args:
            order: Количество вершин.
            edges: Ребра (u, v, s), s из {+1, -1}.
            labels: Необязательные подписи вершин.

        Returns:
            SignedGraph: Новый граф.

        Raises:
            InputError: Отрицательная петля, неверный знак или вершина вне диапазона.
        """
        positive, negative = set(), set()
        for u, v, s in edges:
            _check_sign(s)
            if not (0 <= u < order and 0 <= v < order):
                raise InputError(f"Вершина ребра ({u}, {v}) вне диапазона 0..{order - 1}")
            if u == v:
                if s == NEGATIVE:
                    raise InputError(f"Отрицательная петля в вершине {u}")
                continue
            pair = (u, v) if u < v else (v, u)
            (positive if s == POSITIVE else negative).add(pair)
        return cls(order, frozenset(positive), frozenset(negative),
                   tuple(labels) if labels is not None else None)

    def edges(self) -> List[Edge]:
        """Все ребра в каноническом порядке: по паре, положительное перед отрицательным."""
        result = [(u, v, POSITIVE) for u, v in self.positive]
        result += [(u, v, NEGATIVE) for u, v in self.negative]
        result.sort(key=lambda e: (e[0], e[1], -e[2]))
        return result

    @property
    def edge_count(self) -> int:
        return len(self.positive) + len(self.negative)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, Sign], ...], ...]:
        """Списки смежности: для каждой вершины кортеж пар (сосед, знак), по возрастанию соседа."""
        adj: List[List[Tuple[int, Sign]]] = [[] for _ in range(self.order)]
        for u, v, s in self.edges():
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(sorted(a, key=lambda t: (t[0], -t[1]))) for a in adj)

    @cached_property
    def masks(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Битовые маски соседей: (положительные, отрицательные) для каждой вершины."""
        pos = [0] * self.order
        neg = [0] * self.order
        for u, v in self.positive:
            pos[u] |= 1 << v
            pos[v] |= 1 << u
        for u, v in self.negative:
            neg[u] |= 1 << v
            neg[v] |= 1 << u
        return tuple(pos), tuple(neg)

    def has_edge(self, u: int, v: int, s: Sign) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in (self.positive if s == POSITIVE else self.negative)

    def is_digon(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self.positive and pair in self.negative

    def digons(self) -> List[Tuple[int, int]]:
        return sorted(self.positive & self.negative)

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def check_vertices(self, x: Iterable[int]) -> FrozenSet[int]:
        """Проверяет, что все идентификаторы допустимы, и возвращает множество."""
        result = frozenset(x)
        for v in result:
            if not isinstance(v, int) or not (0 <= v < self.order):
                raise InputError(f"Некорректный идентификатор вершины: {v}")
        return result


@dataclass(frozen=True)
class BalanceVerdict:
    """
    Результат проверки сбалансированности.

    Attributes:
        balanced (bool): Сбалансирован ли (под)граф.
        witness (Optional[Switching]): Знак каждой вершины, после переключения
            по которому все ребра положительны (только если balanced).
        cycle (Optional[Tuple[Edge, ...]]): Отрицательный цикл в порядке обхода
            (только если не balanced).
    """
    balanced: bool
    witness: Optional[Switching] = None
    cycle: Optional[Tuple[Edge, ...]] = None

    def __bool__(self) -> bool:
        return self.balanced


@dataclass(frozen=True)
class BalancedColouring:
    """
    Сбалансированная раскраска с сертификатом.

    Attributes:
        colour (Tuple[int, ...]): Цвет каждой вершины, цвета нумеруются с 1.
        witness (Tuple[int, ...]): Знак переключения каждой вершины; внутри
            каждого класса все ребра становятся положительными.
    """
    colour: Tuple[int, ...]
    witness: Tuple[int, ...]

    @property
    def num_colours(self) -> int:
        return len(set(self.colour))

    def classes(self) -> Dict[int, List[int]]:
        result: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colour):
            result.setdefault(c, []).append(v)
        return dict(sorted(result.items()))

    def check(self, g: SignedGraph) -> bool:
        """Прямая проверка свидетелей: w(u)*w(v)*s = +1 на каждом ребре внутри класса."""
        if len(self.colour) != g.order or len(self.witness) != g.order:
            return False
        for u, v, s in g.edges():
            if self.colour[u] == self.colour[v] and self.witness[u] * self.witness[v] * s != POSITIVE:
                return False
        return True


@dataclass(frozen=True)
class ColouringVerdict:
    """Результат проверки раскраски: сертификат или отвергнутый класс с циклом."""
    accepted: bool
    certificate: Optional[BalancedColouring] = None
    offending_class: Optional[int] = None
    cycle: Optional[Tuple[Edge, ...]] = None

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Результат проверки эквивалентности по переключению; side - сторона разреза."""
    equivalent: bool
    side: Optional[FrozenSet[int]] = None

    def __bool__(self) -> bool:
        return self.equivalent


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """
    Переключает множество вершин x: меняет знак каждого ребра разреза (x, V - x).

    Args:
        g: Знаковый граф.
        x: Множество вершин.

    Returns:
        SignedGraph: Переключенный граф (подписи сохраняются).
    """
    x = g.check_vertices(x)
    edges = []
    for u, v, s in g.edges():
        if (u in x) != (v in x):
            s = -s
        edges.append((u, v, s))
    return SignedGraph.from_edges(g.order, edges, g.labels)


def _tree_path(parent: List[int], parent_sign: List[int], depth: List[int],
               u: int, v: int) -> Tuple[Edge, ...]:
    # Путь u -> v по остовному дереву через наименьшего общего предка
    up: List[Edge] = []
    down: List[Edge] = []
    while depth[u] > depth[v]:
        up.append((u, parent[u], parent_sign[u]))
        u = parent[u]
    while depth[v] > depth[u]:
        down.append((parent[v], v, parent_sign[v]))
        v = parent[v]
    while u != v:
        up.append((u, parent[u], parent_sign[u]))
        u = parent[u]
        down.append((parent[v], v, parent_sign[v]))
        v = parent[v]
    return tuple(up) + tuple(reversed(down))


def _balance_search(g: SignedGraph, vertices: FrozenSet[int]) -> BalanceVerdict:
    """
    Проверка сбалансированности индуцированного подграфа g[vertices].

    Потенциалы назначаются обходом в ширину по остовному лесу, затем
    проверяется каждое ребро. Для первого нарушающего ребра возвращается
    фундаментальный цикл.
    """
    potential = [0] * g.order
    parent = [-1] * g.order
    parent_sign = [0] * g.order
    depth = [0] * g.order
    adjacency = g.adjacency

    for root in sorted(vertices):
        if potential[root]:
            continue
        potential[root] = POSITIVE
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, s in adjacency[u]:
                if w in vertices and not potential[w]:
                    potential[w] = potential[u] * s
                    parent[w] = u
                    parent_sign[w] = s
                    depth[w] = depth[u] + 1
                    queue.append(w)

    for u, v, s in g.edges():
        if u in vertices and v in vertices and potential[u] * potential[v] * s != POSITIVE:
            cycle = _tree_path(parent, parent_sign, depth, u, v) + ((v, u, s),)
            return BalanceVerdict(False, cycle=cycle)

    return BalanceVerdict(True, witness={v: potential[v] for v in sorted(vertices)})


def is_balanced(g: SignedGraph) -> BalanceVerdict:
    """
    Проверяет, сбалансирован ли граф (критерий Харари).

    Returns:
        BalanceVerdict: Свидетель-переключение либо отрицательный цикл.
            Любой дигон дает отрицательный цикл длины 2.
    """
    return _balance_search(g, frozenset(range(g.order)))


def is_balanced_set(g: SignedGraph, x: Iterable[int]) -> BalanceVerdict:
    """Проверяет сбалансированность множества вершин x (индуцированного подграфа)."""
    return _balance_search(g, g.check_vertices(x))


def cycle_sign(g: SignedGraph, cycle: Sequence[Edge]) -> Sign:
    """
    Произведение знаков вдоль замкнутого обхода.

    Raises:
        InputError: Ребро отсутствует в графе или обход не замкнут.
    """
    product = POSITIVE
    for i, (u, v, s) in enumerate(cycle):
        if not g.has_edge(u, v, s):
            raise InputError(f"Ребро ({u}, {v}, {s:+d}) отсутствует в графе")
        if cycle[(i + 1) % len(cycle)][0] != v:
            raise InputError("Последовательность ребер не является замкнутым обходом")
        product *= s
    return product


def negative_subgraph(g: SignedGraph, keep_isolated: bool = True) -> nx.Graph:
    """
    Подграф, образованный отрицательными ребрами.

    Args:
        g: Знаковый граф.
        keep_isolated: Сохранять ли вершины без отрицательных ребер (по умолчанию да).

    Returns:
        nx.Graph: Неориентированный граф; у вершин есть атрибут label.
    """
    h = nx.Graph()
    touched = {v for pair in g.negative for v in pair}
    for v in range(g.order):
        if keep_isolated or v in touched:
            h.add_node(v, label=g.label(v))
    h.add_edges_from(sorted(g.negative))
    return h


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> EquivalenceVerdict:
    """
    Проверяет, получается ли g2 из g1 переключением.

    Сигнатуры эквивалентны тогда и только тогда, когда множество ребер с
    разными знаками является разрезом. Пары-дигоны переходят в себя при любом
    переключении и ограничений не дают.

    Raises:
        InputError: Несовпадающие неориентированные основы графов.
    """
    if g1.order != g2.order:
        raise InputError("Графы имеют разный порядок")
    pairs1 = g1.positive | g1.negative
    pairs2 = g2.positive | g2.negative
    if pairs1 != pairs2:
        raise InputError("Графы имеют разные неориентированные основы")
    constraints = []
    for pair in sorted(pairs1):
        d1, d2 = g1.is_digon(*pair), g2.is_digon(*pair)
        if d1 != d2:
            raise InputError(f"Кратность ребра {pair} различается")
        if d1:
            continue
        s1 = POSITIVE if pair in g1.positive else NEGATIVE
        s2 = POSITIVE if pair in g2.positive else NEGATIVE
        constraints.append((pair[0], pair[1], s1 * s2))

    verdict = is_balanced(SignedGraph.from_edges(g1.order, constraints))
    if not verdict.balanced:
        return EquivalenceVerdict(False)
    return EquivalenceVerdict(True, frozenset(v for v, s in verdict.witness.items() if s == NEGATIVE))


def verify_balanced_colouring(g: SignedGraph, colouring: Sequence[Optional[int]]) -> ColouringVerdict:
    """
    Проверяет, что каждый цветовой класс сбалансирован.

    Args:
        g: Знаковый граф.
        colouring: Цвет каждой вершины (целые числа >= 1).

    Returns:
        ColouringVerdict: При успехе содержит BalancedColouring со свидетелями,
            иначе - первый (по номеру цвета) несбалансированный класс и цикл в нем.

    Raises:
        InputError: Раскраска задана не для всех вершин.
    """
    if len(colouring) != g.order:
        raise InputError(f"Раскраска задана для {len(colouring)} вершин из {g.order}")
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colouring):
        if c is None or not isinstance(c, int) or c < 1:
            raise InputError(f"Вершина {v} не раскрашена или имеет некорректный цвет: {c}")
        classes.setdefault(c, []).append(v)

    witness = [POSITIVE] * g.order
    for c in sorted(classes):
        verdict = is_balanced_set(g, classes[c])
        if not verdict.balanced:
            return ColouringVerdict(False, offending_class=c, cycle=verdict.cycle)
        for v, s in verdict.witness.items():
            witness[v] = s
    return ColouringVerdict(True, BalancedColouring(tuple(colouring), tuple(witness)))


def induced_subgraph(g: SignedGraph, x: Iterable[int]) -> Tuple[SignedGraph, List[int]]:
    """
    Индуцированный подграф с перенумерацией вершин.

    Returns:
        Tuple[SignedGraph, List[int]]: Подграф и список исходных идентификаторов
            (новая вершина i соответствует исходной mapping[i]).
    """
    mapping = sorted(g.check_vertices(x))
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v], s) for u, v, s in g.edges() if u in index and v in index]
    labels = [g.labels[v] for v in mapping] if g.labels is not None else None
    return SignedGraph.from_edges(len(mapping), edges, labels), mapping


def delete_vertex(g: SignedGraph, v: int) -> SignedGraph:
    g.check_vertices([v])
    return induced_subgraph(g, [u for u in range(g.order) if u != v])[0]


def negate(g: SignedGraph) -> SignedGraph:
    """Умножает знак каждого ребра на -1 (дигоны остаются дигонами)."""
    return SignedGraph(g.order, g.negative, g.positive, g.labels)


def add_switched_copy(g: SignedGraph, v: int) -> SignedGraph:
    """
    Добавляет вершину-копию v с переключенными знаками.

    Новая вершина получает номер g.order, соединена с каждым соседом u вершины v
    ребром знака -s(uv), а с самой v - отрицательным ребром (образ положительной
    петли при переключении). Сбалансированное хроматическое число не меняется.
    """
    g.check_vertices([v])
    copy = g.order
    edges = g.edges()
    for u, s in g.adjacency[v]:
        edges.append((u, copy, -s))
    edges.append((v, copy, NEGATIVE))
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [f"-{g.labels[v]}"]
    return SignedGraph.from_edges(g.order + 1, edges, labels)


# Раскраски без нуля: chi_b(G, s) = chi*(G, -s)
def balanced_to_zero_free(colouring: BalancedColouring) -> Tuple[int, ...]:
    """
    Переводит сбалансированную раскраску графа g в раскраску без нуля графа negate(g).

    Вершина цвета i со свидетелем w получает цвет w*i.
    """
    return tuple(w * c for c, w in zip(colouring.colour, colouring.witness))


def verify_zero_free_colouring(g: SignedGraph, colouring: Sequence[int]) -> Tuple[bool, Optional[Edge]]:
    """
    Проверяет условие c(x) != s(xy)*c(y) на каждом ребре.

    Returns:
        Tuple[bool, Optional[Edge]]: Вердикт и первое нарушающее ребро.
    """
    if len(colouring) != g.order:
        raise InputError(f"Раскраска задана для {len(colouring)} вершин из {g.order}")
    for v, c in enumerate(colouring):
        if not isinstance(c, int) or c == 0:
            raise InputError(f"Вершина {v} имеет некорректный цвет без нуля: {c}")
    for u, v, s in g.edges():
        if colouring[u] == s * colouring[v]:
            return False, (u, v, s)
    return True, None


def zero_free_to_balanced(g: SignedGraph, colouring: Sequence[int]) -> BalancedColouring:
    """
    Переводит раскраску без нуля графа negate(g) в сбалансированную раскраску g.

    Класс i состоит из вершин цветов i и -i, свидетель - знак цвета.

    Raises:
        InputError: colouring не является раскраской без нуля для negate(g).
    """
    ok, edge = verify_zero_free_colouring(negate(g), colouring)
    if not ok:
        raise InputError(f"Раскраска не является раскраской без нуля, ребро {edge}")
    return BalancedColouring(tuple(abs(c) for c in colouring),
                             tuple(POSITIVE if c > 0 else NEGATIVE for c in colouring))


# Ввод-вывод Signed-DIMACS
def format_sdimacs(g: SignedGraph, comments: Sequence[str] = ()) -> str:
    """
    Сериализует граф в текст Signed-DIMACS.

    Порядок строк: комментарии, заголовок, ребра (канонический порядок),
    подписи вершин. Вершины в файле нумеруются с 1.
    """
    lines = [f"c {text}" for text in comments]
    lines.append(f"p sgraph {g.order} {g.edge_count}")
    for u, v, s in g.edges():
        lines.append(f"e {u + 1} {v + 1} {'+' if s == POSITIVE else '-'}")
    if g.labels is not None:
        for v, text in enumerate(g.labels):
            lines.append(f"l {v + 1} {text}")
    return "\n".join(lines) + "\n"


def parse_sdimacs(text: str) -> SignedGraph:
    """
    Разбирает текст Signed-DIMACS.

    Raises:
        FormatError: Повторный или отсутствующий заголовок, неизвестная строка,
            отрицательная петля, вершина вне диапазона, несовпадение числа ребер.
    """
    order: Optional[int] = None
    declared_edges = 0
    edges: List[Edge] = []
    labels: Dict[int, str] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if order is not None:
                raise FormatError("повторный заголовок", number)
            if len(parts) != 4 or parts[1] != "sgraph":
                raise FormatError(f"некорректный заголовок: {line}", number)
            try:
                order, declared_edges = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"некорректный заголовок: {line}", number)
            if order < 0 or declared_edges < 0:
                raise FormatError(f"некорректный заголовок: {line}", number)
            continue
        if order is None:
            raise FormatError("строка данных до заголовка", number)
        if kind == "e":
            if len(parts) != 4 or parts[3] not in ("+", "-"):
                raise FormatError(f"некорректная строка ребра: {line}", number)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise FormatError(f"некорректная строка ребра: {line}", number)
            if not (0 <= u < order and 0 <= v < order):
                raise FormatError(f"вершина вне диапазона 1..{order}", number)
            s = POSITIVE if parts[3] == "+" else NEGATIVE
            if u == v:
                if s == NEGATIVE:
                    raise FormatError(f"отрицательная петля в вершине {u + 1}", number)
                logger.debug(f"Строка {number}: положительная петля пропущена")
            edges.append((u, v, s))
        elif kind == "l":
            label_parts = line.split(maxsplit=2)
            if len(label_parts) != 3:
                raise FormatError(f"некорректная строка подписи: {line}", number)
            try:
                v = int(label_parts[1]) - 1
            except ValueError:
                raise FormatError(f"некорректная строка подписи: {line}", number)
            if not (0 <= v < order):
                raise FormatError(f"вершина вне диапазона 1..{order}", number)
            labels[v] = label_parts[2]
        else:
            raise FormatError(f"неизвестный тип строки: {kind}", number)

    if order is None:
        raise FormatError("отсутствует заголовок 'p sgraph'")
    if len(edges) != declared_edges:
        raise FormatError(f"заголовок объявляет {declared_edges} ребер, найдено {len(edges)}")
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(v, str(v + 1)) for v in range(order))
    return SignedGraph.from_edges(order, edges, label_tuple)


def write_sdimacs(g: SignedGraph, path: Union[str, os.PathLike], comments: Sequence[str] = ()) -> None:
    """Записывает граф в файл Signed-DIMACS."""
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        file.write(format_sdimacs(g, comments))
    logger.info(f"Граф порядка {g.order} с {g.edge_count} ребрами записан в {path}")


def read_sdimacs(path: Union[str, os.PathLike]) -> SignedGraph:
    """Читает граф из файла Signed-DIMACS."""
    with open(path, 'r', encoding='utf-8') as file:
        return parse_sdimacs(file.read())

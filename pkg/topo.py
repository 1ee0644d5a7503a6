#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль topo
===========

Топологическая часть: вложение +-[n] на сферу S^(n-k) по нечетной момент-кривой,
открытые полусферы и поиск чередующихся множеств в них, дискретизации знакового
графа Борсука BS(d, eps), гомоморфизм BS -> SS(n,k) и дискретная проверка
антиподальной связности для симметричных покрытий сферы.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import sqrt
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from numpy.polynomial import polynomial as P
from networkx.utils import UnionFind
from scipy.spatial import cKDTree

import settings
from exceptions import BoundaryAmbiguityError, InputError
from families import SignedSubset, adjacency, family_vertices
from sgcore import SignedGraph, POSITIVE, NEGATIVE, negative_subgraph


logger = logging.getLogger(__name__)

STRATEGIES = ("first", "margin")


def _moment_vector(i: int, d: int) -> List[int]:
    """Целочисленный вектор (-1)^i (i, i^3, ..., i^(2d+1))."""
    sign = -1 if i % 2 else 1
    return [sign * i ** (2 * j + 1) for j in range(d + 1)]


@dataclass(frozen=True)
class SphereEmbedding:
    """
    Вложение +-[n] в S^d, d = n - k.

    Attributes:
        n, k, d: Параметры.
        positive (np.ndarray): Строка i-1 - единичный вектор точки i.
            Точка -i хранится как точное отрицание строки.
    """
    n: int
    k: int
    d: int
    positive: np.ndarray = field(repr=False, compare=False)

    def point(self, i: int) -> np.ndarray:
        if i == 0 or abs(i) > self.n:
            raise InputError(f"Элемент {i} не принадлежит +-[{self.n}]")
        row = self.positive[abs(i) - 1]
        return row if i > 0 else -row

    def elements(self) -> List[int]:
        return list(range(1, self.n + 1)) + [-i for i in range(1, self.n + 1)]


def moment_embedding(n: int, k: int, max_coordinate: int = settings.MAX_EXACT_COORDINATE) -> SphereEmbedding:
    """
    Строит вложение w_i = v_i / |v_i|, v_i = (-1)^i (i, i^3, ..., i^(2d+1)).

    Координаты считаются целыми числами Python до нормировки.

    Raises:
        InputError: k вне [1, n] или n^(2d+1) не представимо точно.
    """
    if not (1 <= k <= n):
        raise InputError(f"Требуется 1 <= k <= n, получено n={n}, k={k}")
    d = n - k
    if n ** (2 * d + 1) >= max_coordinate:
        raise InputError(f"Координата {n}^{2 * d + 1} превышает границу точного представления")
    rows = []
    for i in range(1, n + 1):
        v = _moment_vector(i, d)
        norm = sqrt(sum(x * x for x in v))
        rows.append([x / norm for x in v])
    positive = np.array(rows, dtype=float)
    positive.setflags(write=False)
    return SphereEmbedding(n, k, d, positive)


def general_position_violations(emb: SphereEmbedding) -> List[Tuple[int, ...]]:
    """
    (d+1)-подмножества [n], чьи векторы момент-кривой линейно зависимы.

    Ранг считается точно в рациональных числах по ненормированным векторам.
    """
    violations = []
    for subset in combinations(range(1, emb.n + 1), emb.d + 1):
        matrix = [[Fraction(x) for x in _moment_vector(i, emb.d)] for i in subset]
        if _rank(matrix) < len(subset):
            violations.append(subset)
    return violations


def _rank(matrix: List[List[Fraction]]) -> int:
    """Ранг по методу Гаусса."""
    rows = [list(r) for r in matrix]
    rank = 0
    columns = len(rows[0]) if rows else 0
    for col in range(columns):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class HemisphereMembers:
    """Элементы +-[n] в открытой полусфере и элементы на ее границе (в пределах допуска)."""
    members: FrozenSet[int]
    ambiguous: FrozenSet[int] = frozenset()


def _unit(a: Sequence[float], dimension: int) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape != (dimension,):
        raise InputError(f"Направление должно иметь размерность {dimension}, получено {a.shape}")
    norm = np.linalg.norm(a)
    if norm <= settings.NORM_TOLERANCE:
        raise InputError("Нулевое направление полусферы")
    return a / norm


def hemisphere_members(emb: SphereEmbedding, a: Sequence[float],
                       tolerance: float = settings.HEMISPHERE_TOLERANCE) -> HemisphereMembers:
    """
    Множество {i : w_i . a > 0}.

    Элементы с |w_i . a| <= tolerance не включаются и помечаются как
    неоднозначные (вместе со своими антиподами).
    """
    products = emb.positive @ _unit(a, emb.d + 1)
    members, ambiguous = set(), set()
    for i, t in enumerate(products, start=1):
        if abs(t) <= tolerance:
            ambiguous.update((i, -i))
        else:
            members.add(i if t > 0 else -i)
    return HemisphereMembers(frozenset(members), frozenset(ambiguous))


def find_alternating_in_hemisphere(emb: SphereEmbedding, a: Sequence[float], strategy: str = "first",
                                   tolerance: float = settings.HEMISPHERE_TOLERANCE) -> Optional[SignedSubset]:
    """
    Ищет чередующееся k-множество, все элементы которого лежат в полусфере H_a.

    Args:
        emb: Вложение момент-кривой.
        a: Направление (нормируется).
        strategy: "first" - лексикографически первое подходящее множество;
            "margin" - множество с наибольшим min_{x in A} w_x . a
            (при равенстве - лексикографически первое).

    Returns:
        Optional[SignedSubset]: Найденное множество или None.

    Raises:
        BoundaryAmbiguityError: Какая-то точка лежит на границе полусферы.
        InputError: Неизвестная стратегия.
    """
    if strategy not in STRATEGIES:
        raise InputError(f"Неизвестная стратегия выбора: {strategy}")
    direction = _unit(a, emb.d + 1)
    hemisphere = hemisphere_members(emb, direction, tolerance)
    if hemisphere.ambiguous:
        raise BoundaryAmbiguityError(f"Точки {sorted(hemisphere.ambiguous)} на границе полусферы",
                                     sorted(hemisphere.ambiguous))
    candidates = _alternating_sets(emb.n, emb.k)
    if strategy == "first":
        return next((c for c in candidates if set(c.elements()) <= hemisphere.members), None)
    products = emb.positive @ direction
    best, best_margin = None, 0.0
    for c in candidates:
        margin = min(np.sign(x) * products[abs(x) - 1] for x in c.elements())
        if margin > 0 and (best is None or margin > best_margin):
            best, best_margin = c, margin
    return best


@lru_cache(maxsize=None)
def _alternating_sets(n: int, k: int) -> Tuple[SignedSubset, ...]:
    return tuple(family_vertices("ss", n, k))


@dataclass(frozen=True)
class SignPattern:
    """Множество X = {i in +-[n] : (-1)^i p(i) > 0} и его свойства."""
    members: FrozenSet[int]
    size_ok: bool
    alternating: bool
    roots: FrozenSet[int] = frozenset()


def odd_polynomial_with_roots(roots: Iterable[int], scale: float = 1.0) -> Tuple[float, ...]:
    """
    Коэффициенты при x, x^3, ... многочлена scale * x * prod(x^2 - r^2).

    Raises:
        InputError: Нулевой масштаб, нулевой или повторный корень.
    """
    roots = [abs(int(r)) for r in roots]
    if scale == 0 or 0 in roots or len(set(roots)) != len(roots):
        raise InputError(f"Корни должны быть различными и ненулевыми, масштаб ненулевым: {roots}, {scale}")
    coeffs = P.polyfromroots([float(r * r) for r in roots]) if roots else np.ones(1)
    return tuple(float(scale * c) for c in coeffs)


def alternating_sign_pattern(coeffs: Sequence[float], n: int, k: Optional[int] = None,
                             tolerance: float = settings.HEMISPHERE_TOLERANCE,
                             skip_roots: bool = False) -> SignPattern:
    """
    Правило знаков нечетного многочлена p(x) = a_1 x + a_2 x^3 + ... .

    Args:
        coeffs: Коэффициенты a_1..a_(d+1) при x, x^3, ..., x^(2d+1).
        n: Размер основы.
        k: Ожидаемый размер X (по умолчанию n - d).
        skip_roots: Целые корни p не входят в X и перечисляются в roots;
            иначе корень считается неоднозначностью.

    Raises:
        BoundaryAmbiguityError: p(i) = 0 (в пределах допуска) для некоторого i
            и skip_roots не задан.
    """
    d = len(coeffs) - 1
    if k is None:
        k = n - d
    members, roots = set(), set()
    for i in list(range(1, n + 1)) + [-i for i in range(1, n + 1)]:
        value = sum(c * i ** (2 * j + 1) for j, c in enumerate(coeffs))
        if abs(value) <= tolerance:
            if not skip_roots:
                raise BoundaryAmbiguityError(f"Многочлен обращается в ноль в точке {i}", [i])
            roots.add(i)
        elif (-1) ** abs(i) * value > 0:
            members.add(i)
    ordered = sorted(members, key=abs)
    alternating = all((x > 0) != (y > 0) for x, y in zip(ordered, ordered[1:]))
    return SignPattern(frozenset(members), len(members) == k, alternating, frozenset(roots))


@dataclass(frozen=True)
class BorsukDiscretization:
    """
    Конечная антиподально замкнутая часть S^d и индуцированный граф BS(d, eps).

    Attributes:
        d, eps: Размерность сферы и радиус смежности.
        points (np.ndarray): 2m точек; антипод точки i имеет номер (i + m) mod 2m
            и хранится как точное отрицание.
        graph (SignedGraph): Положительное ребро при dist(x, y) <= eps,
            отрицательное при dist(x, -y) <= eps.
    """
    d: int
    eps: float
    points: np.ndarray = field(repr=False, compare=False)
    graph: SignedGraph = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.points)


def antipodal_partner(disc: BorsukDiscretization, i: int) -> int:
    """Номер точки -x_i."""
    half = disc.size // 2
    return (i + half) % disc.size


def gen_borsuk_disc(d: int, eps: float, resolution: int, seed: int = settings.DEFAULT_SEED) -> BorsukDiscretization:
    """
    Строит дискретизацию знакового графа Борсука.

    При d = 1 берется 2*resolution равноотстоящих точек окружности, при d >= 2 -
    resolution случайных точек (нормированный гауссов вектор) и их отрицания.

    Raises:
        InputError: d < 1, eps вне (0, 2) или resolution < 2.
    """
    if d < 1:
        raise InputError(f"Размерность сферы должна быть >= 1: {d}")
    if not (0 < eps < 2):
        raise InputError(f"eps должно лежать в (0, 2): {eps}")
    if resolution < 2:
        raise InputError(f"Разрешение должно быть >= 2: {resolution}")

    if d == 1:
        angles = np.pi * np.arange(resolution) / resolution
        half = np.column_stack((np.cos(angles), np.sin(angles)))
    else:
        rng = np.random.default_rng(seed)
        half = rng.standard_normal((resolution, d + 1))
        half /= np.linalg.norm(half, axis=1, keepdims=True)
    points = np.vstack((half, -half))
    points.setflags(write=False)

    size = len(points)
    pairs = cKDTree(points).query_pairs(r=eps, output_type="ndarray")
    edges = []
    for i, j in pairs.tolist():
        edges.append((i, j, POSITIVE))
        edges.append((i, (j + resolution) % size, NEGATIVE))
        edges.append((j, (i + resolution) % size, NEGATIVE))
    edges.extend((i, i + resolution, NEGATIVE) for i in range(resolution))
    labels = [",".join(f"{c:.12g}" for c in p) for p in points]
    graph = SignedGraph.from_edges(size, edges, labels)
    logger.debug(f"BS({d}, {eps}): {size} точек, {len(graph.positive)} положительных, "
                 f"{len(graph.negative)} отрицательных ребер")
    return BorsukDiscretization(d, eps, points, graph)


def borsuk_graph(disc: BorsukDiscretization) -> nx.Graph:
    """Классический граф Борсука на дискретизации: x ~ y, если dist(x, -y) <= eps."""
    return negative_subgraph(disc.graph)


@dataclass(frozen=True)
class HomVerdict:
    """
    Результат проверки отображения BS(d, eps) -> SS(n,k).

    Attributes:
        ok: Нарушений нет.
        mapping: Образ каждой точки (None, если множество не найдено).
        violations: Описания нарушенных ребер и неотображенных точек.
        eps: Радиус дискретизации.
    """
    ok: bool
    mapping: Tuple[Optional[SignedSubset], ...]
    violations: Tuple[Dict[str, Any], ...]
    eps: float

    def __bool__(self) -> bool:
        return self.ok


def find_alternating_with_retry(emb: SphereEmbedding, x: np.ndarray, strategy: str, rng: np.random.Generator,
                                retries: int = settings.HEMISPHERE_MAX_RETRIES,
                                scale: float = settings.PERTURBATION_SCALE) -> Optional[SignedSubset]:
    """
    find_alternating_in_hemisphere с повторами: при неоднозначной границе
    направление x возмущается гауссовым шумом масштаба scale.

    Raises:
        BoundaryAmbiguityError: Граница не разрешена за retries повторов.
    """
    direction = x
    for attempt in range(retries + 1):
        try:
            return find_alternating_in_hemisphere(emb, direction, strategy)
        except BoundaryAmbiguityError as e:
            logger.warning(f"Попытка {attempt + 1}: {e}; направление возмущается")
            direction = x + scale * rng.standard_normal(len(x))
    raise BoundaryAmbiguityError(f"Граница полусферы не разрешена за {retries} повторов")


def borsuk_to_schrijver_hom(disc: BorsukDiscretization, emb: SphereEmbedding, strategy: str = "margin",
                            seed: int = settings.DEFAULT_SEED,
                            retries: int = settings.HEMISPHERE_MAX_RETRIES,
                            scale: float = settings.PERTURBATION_SCALE) -> HomVerdict:
    """
    Строит f(x) = чередующееся множество в полусфере H_x и проверяет ребра.

    Положительное ребро должно переходить в положительное ребро SS(n,k) или
    в одну вершину, отрицательное - в отрицательное ребро (в том числе пару A, -A).

    Raises:
        InputError: Размерность вложения не совпадает с размерностью дискретизации.
    """
    if emb.d != disc.d:
        raise InputError(f"Вложение в S^{emb.d} не подходит для дискретизации S^{disc.d}")
    rng = np.random.default_rng(seed)
    mapping: List[Optional[SignedSubset]] = []
    violations: List[Dict[str, Any]] = []
    for i, x in enumerate(disc.points):
        try:
            image = find_alternating_with_retry(emb, x, strategy, rng, retries, scale)
        except BoundaryAmbiguityError as e:
            image = None
            violations.append({"point": i, "reason": str(e)})
        else:
            if image is None:
                violations.append({"point": i, "reason": "чередующееся множество не найдено"})
        mapping.append(image)

    for u, v, s in disc.graph.edges():
        a, b = mapping[u], mapping[v]
        if a is None or b is None:
            continue
        positive, negative = adjacency(a, b)
        good = (a == b or positive) if s == POSITIVE else negative
        if not good:
            violations.append({"edge": [u, v], "sign": s, "images": [a.label, b.label]})
    if violations:
        logger.warning(f"Гомоморфизм при eps={disc.eps}: {len(violations)} нарушений")
    return HomVerdict(not violations, tuple(mapping), tuple(violations), disc.eps)


@dataclass(frozen=True)
class AntipodalWitness:
    """Класс, содержащий x и -x в одной компоненте, и путь между ними по положительным ребрам."""
    class_index: int
    pair: Tuple[int, int]
    path: Tuple[int, ...]


def antipodal_connectivity(disc: BorsukDiscretization,
                           classes: Sequence[Iterable[int]]) -> Optional[AntipodalWitness]:
    """
    Ищет класс, в котором некоторая пара антиподов связана положительными ребрами.

    Компоненты считаются объединением множеств по положительным ребрам
    внутри класса, путь-свидетель - кратчайший путь.

    Returns:
        Optional[AntipodalWitness]: Первый такой класс или None.

    Raises:
        InputError: Класс не замкнут относительно антиподальности.
    """
    class_sets = [disc.graph.check_vertices(c) for c in classes]
    for index, members in enumerate(class_sets):
        if any(antipodal_partner(disc, x) not in members for x in members):
            raise InputError(f"Класс {index} не симметричен")

    for index, members in enumerate(class_sets):
        components = UnionFind(members)
        inside = [(u, v) for u, v in disc.graph.positive if u in members and v in members]
        for u, v in inside:
            components.union(u, v)
        for x in sorted(members):
            partner = antipodal_partner(disc, x)
            if components[x] == components[partner]:
                sub = nx.Graph(inside)
                path = nx.shortest_path(sub, x, partner)
                logger.info(f"Класс {index}: антиподы {x} и {partner} связаны путем длины {len(path) - 1}")
                return AntipodalWitness(index, (x, partner), tuple(path))
    return None


def symmetric_cap_cover(disc: BorsukDiscretization, classes: int, caps: int,
                        seed: int = settings.DEFAULT_SEED) -> List[List[int]]:
    """
    Симметричное разбиение точек дискретизации по случайным шапкам.

    Центр шапки j относится к классу j mod classes; точка x попадает в класс
    центра с наибольшим |x . c_j|, антипод - в тот же класс.

    Raises:
        InputError: classes < 1 или caps < classes.
    """
    if classes < 1 or caps < classes:
        raise InputError(f"Нужно classes >= 1 и caps >= classes, получено {classes}, {caps}")
    rng = np.random.default_rng(seed)
    centres = rng.standard_normal((caps, disc.d + 1))
    centres /= np.linalg.norm(centres, axis=1, keepdims=True)
    half = disc.size // 2
    nearest = np.argmax(np.abs(disc.points[:half] @ centres.T), axis=1)
    result: List[List[int]] = [[] for _ in range(classes)]
    for i, j in enumerate(nearest.tolist()):
        result[j % classes].extend((i, i + half))
    return [sorted(c) for c in result]

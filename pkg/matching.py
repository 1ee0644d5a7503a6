#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль matching
===============

Паросочетания в двудольном графе B с долями [n] и -[n] (ребра {i, -j}, i < j),
перевороты ребер, соответствующие переключениям вершин ĤSS(n,2), проверка
того, что после любого переворота в B есть паросочетание размера n-1,
и поиск подграфов Шрийвера в переключениях ĤSS(n,k) для малых n, k.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms import bipartite
from networkx.algorithms.isomorphism import GraphMatcher

import settings
from exceptions import InputError, PropertyViolationError, SolverTimeoutError
from families import SignedSubset, family_vertices, gen_schrijver, subset_graph
from sgcore import NEGATIVE, POSITIVE, switch, negative_subgraph


logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class FlipInstance:
    """
    Набор переворачиваемых ребер графа B.

    Attributes:
        n: Размер долей.
        flipped: Пары (i, j), i < j, обозначающие ребро {i, -j}.
    """
    n: int
    flipped: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        for i, j in self.flipped:
            if not (1 <= i < j <= self.n):
                raise InputError(f"Пара ({i}, {j}) не является ребром B при n={self.n}")

    def to_list(self) -> List[List[int]]:
        return [list(p) for p in sorted(self.flipped)]


@dataclass(frozen=True)
class MatchingResult:
    """Паросочетание: пары (вершина верхней доли, вершина нижней доли)."""
    size: int
    pairs: Tuple[Tuple[Any, Any], ...]


@dataclass(frozen=True)
class KonigVerdict:
    """Размеры паросочетания и покрытия и корректность обоих сертификатов."""
    matching_size: int
    cover_size: int
    matching_valid: bool
    cover_valid: bool

    def __bool__(self) -> bool:
        return self.matching_valid and self.cover_valid and self.matching_size == self.cover_size


def b_edges(n: int) -> List[Pair]:
    """Ребра B в виде пар (i, j), i < j, по порядку."""
    return list(combinations(range(1, n + 1), 2))


def gen_B(n: int) -> nx.Graph:
    """
    Двудольный граф B: доли [n] (bipartite=0) и -[n] (bipartite=1), ребра {i, -j} при i < j.

    Raises:
        InputError: n < 2.
    """
    if n < 2:
        raise InputError(f"Граф B определен при n >= 2, получено {n}")
    return _bipartite(n, [(i, -j) for i, j in b_edges(n)])


def _bipartite(n: int, edges: Iterable[Pair]) -> nx.Graph:
    bip = nx.Graph()
    bip.add_nodes_from(range(1, n + 1), bipartite=0)
    bip.add_nodes_from(range(-1, -n - 1, -1), bipartite=1)
    bip.add_edges_from(edges)
    return bip


def flip_edges(inst: FlipInstance) -> nx.Graph:
    """Граф B', в котором каждое ребро {i, -j} из набора заменено на {j, -i}."""
    edges = [(j, -i) if (i, j) in inst.flipped else (i, -j) for i, j in b_edges(inst.n)]
    return _bipartite(inst.n, edges)


def _top_nodes(bip: nx.Graph) -> Set[Any]:
    top = {v for v, data in bip.nodes(data=True) if data.get("bipartite") == 0}
    if top or bip.number_of_nodes() == 0:
        return top
    try:
        return set(bipartite.sets(bip)[0])
    except (nx.AmbiguousSolution, nx.NetworkXError) as e:
        raise InputError(f"Не удалось определить доли графа: {e}")


def max_matching(bip: nx.Graph) -> MatchingResult:
    """Наибольшее паросочетание алгоритмом Хопкрофта - Карпа."""
    top = _top_nodes(bip)
    mate = bipartite.hopcroft_karp_matching(bip, top_nodes=top)
    pairs = tuple(sorted(((u, mate[u]) for u in top if u in mate), key=lambda p: (str(p[0]), str(p[1]))))
    return MatchingResult(len(pairs), pairs)


def min_vertex_cover(bip: nx.Graph, matching: Optional[MatchingResult] = None) -> Set[Any]:
    """
    Наименьшее вершинное покрытие по теореме Кёнига из наибольшего паросочетания.

    Raises:
        PropertyViolationError: Полученное множество не покрывает какое-то ребро.
    """
    top = _top_nodes(bip)
    matching = matching or max_matching(bip)
    mate: Dict[Any, Any] = {}
    for u, v in matching.pairs:
        mate[u], mate[v] = v, u
    cover = set(bipartite.to_vertex_cover(bip, mate, top_nodes=top))
    if not is_vertex_cover(bip, cover):
        raise PropertyViolationError("Построенное множество не является вершинным покрытием", details=sorted(cover, key=str))
    return cover


def is_matching(bip: nx.Graph, pairs: Iterable[Tuple[Any, Any]]) -> bool:
    """Ребра попарно не пересекаются и присутствуют в графе."""
    seen: Set[Any] = set()
    for u, v in pairs:
        if not bip.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_vertex_cover(bip: nx.Graph, cover: Set[Any]) -> bool:
    return all(u in cover or v in cover for u, v in bip.edges())


def verify_konig(bip: nx.Graph) -> KonigVerdict:
    """Проверяет двойственность Кёнига прямой проверкой обоих сертификатов."""
    matching = max_matching(bip)
    cover = min_vertex_cover(bip, matching)
    return KonigVerdict(matching.size, len(cover), is_matching(bip, matching.pairs), is_vertex_cover(bip, cover))


def degree_sums(bip: nx.Graph, n: int) -> List[int]:
    """d(i) + d(-i) для i = 1..n."""
    return [bip.degree(i) + bip.degree(-i) for i in range(1, n + 1)]


def hss2_vertex(i: int, j: int, n: int) -> SignedSubset:
    """Вершина {i, -j} графа ĤSS(n,2), соответствующая ребру {i, -j} графа B."""
    return SignedSubset.from_elements([i, -j], n)


def flip_set_to_switching(n: int, inst: FlipInstance) -> List[int]:
    """Номера вершин ĤSS(n,2), которые нужно переключить для данного набора переворотов."""
    index = {a: v for v, a in enumerate(family_vertices("hss", n, 2))}
    return sorted(index[hss2_vertex(i, j, n)] for i, j in inst.flipped)


def _matched_vertex(u: int, w: int) -> Pair:
    """Пара (i, j) вершины ĤSS(n,2) для ребра паросочетания между u > 0 и w < 0."""
    p, q = u, -w
    return (p, q) if p < q else (q, p)


@dataclass
class MatchingReport:
    """
    Итог проверки: для каждого набора переворотов в B' есть паросочетание размера не меньше n-1.

    Attributes:
        sizes: Сколько раз встретился каждый размер наибольшего паросочетания (n-1 или n).
    """
    n: int
    mode: str
    instances: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    sizes: Dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "mode": self.mode, "instances": self.instances,
                "failures": self.failures, "sizes": {str(s): c for s, c in sorted(self.sizes.items())},
                "elapsed": self.elapsed, "ok": self.ok}


def _flip_sets(n: int, mode: str, samples: int, seed: int, max_edges: int) -> Iterator[FlipInstance]:
    edges = b_edges(n)
    if mode == "exhaustive":
        if len(edges) > max_edges:
            raise InputError(f"Полный перебор допустим при C(n,2) <= {max_edges}, получено {len(edges)}")
        for mask in range(1 << len(edges)):
            yield FlipInstance(n, frozenset(e for b, e in enumerate(edges) if mask >> b & 1))
    elif mode == "random":
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            bits = rng.integers(0, 2, size=len(edges))
            yield FlipInstance(n, frozenset(e for b, e in zip(bits.tolist(), edges) if b))
    else:
        raise InputError(f"Неизвестный режим: {mode}")


def verify_thm_k2(n: int, mode: str = "exhaustive", samples: int = settings.DEFAULT_SAMPLES,
                  seed: int = settings.DEFAULT_SEED,
                  max_edges: int = settings.K2_MAX_EXHAUSTIVE_EDGES) -> MatchingReport:
    """
    Проверяет, что после любого переворота в B' есть паросочетание размера не меньше n-1.

    Наибольшее паросочетание может иметь размер n. Для каждого набора
    дополнительно проверяется, что вершины ĤSS(n,2), соответствующие ребрам
    паросочетания, попарно соединены отрицательными ребрами в переключенном
    графе.

    Raises:
        InputError: n < 2, неизвестный режим или слишком большой полный перебор.
    """
    if n < 2:
        raise InputError(f"Требуется n >= 2, получено {n}")
    start = time.monotonic()
    vertices = family_vertices("hss", n, 2)
    host = subset_graph(vertices)
    index = {a: v for v, a in enumerate(vertices)}
    report = MatchingReport(n, mode)
    for inst in _flip_sets(n, mode, samples, seed, max_edges):
        report.instances += 1
        matching = max_matching(flip_edges(inst))
        if matching.size < n - 1:
            report.failures.append({"flipped": inst.to_list(), "matching": matching.size})
            logger.error(f"n={n}: паросочетание размера {matching.size} для {inst.to_list()}")
            continue
        report.sizes[matching.size] = report.sizes.get(matching.size, 0) + 1
        switched = {index[hss2_vertex(i, j, n)] for i, j in inst.flipped}
        matched = [index[hss2_vertex(*_matched_vertex(u, w), n)] for u, w in matching.pairs]
        for u, v in combinations(matched, 2):
            flip = (u in switched) != (v in switched)
            negative = host.has_edge(u, v, POSITIVE if flip else NEGATIVE)
            if not negative:
                report.failures.append({"flipped": inst.to_list(), "pair": [host.label(u), host.label(v)]})
                logger.error(f"n={n}: вершины {host.label(u)}, {host.label(v)} не смежны отрицательно")
                break
    report.elapsed = time.monotonic() - start
    logger.info(f"n={n}, {mode}: {report.instances} наборов, нарушений {len(report.failures)}")
    return report


@dataclass
class ConjectureReport:
    """
    Наблюдения о подграфах Шрийвера в переключениях ĤSS(n,k).

    Отсутствие подграфа записывается как наблюдение, а не как ошибка.
    Если бюджет исчерпан, последняя запись имеет found=None, а оставшиеся
    переключения не рассматриваются.
    """
    n: int
    k: int
    target: str
    records: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    timed_out: bool = False

    @property
    def found(self) -> int:
        return sum(1 for r in self.records if r["found"] is True)

    @property
    def missing(self) -> int:
        return sum(1 for r in self.records if r["found"] is False)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "target": self.target, "switchings": len(self.records),
                "found": self.found, "missing": self.missing, "timed_out": self.timed_out,
                "elapsed": self.elapsed, "records": self.records}


def conjecture_target(n: int, k: int) -> Tuple[str, nx.Graph]:
    """S(n-1, k/2) для четного k и S(n, (k+1)/2) для нечетного."""
    m, t = (n - 1, k // 2) if k % 2 == 0 else (n, (k + 1) // 2)
    return f"S({m},{t})", gen_schrijver(m, t)


class _BudgetedMatcher(GraphMatcher):
    """GraphMatcher, проверяющий срок при каждой check_interval-й попытке сопоставления."""

    def __init__(self, host: nx.Graph, pattern: nx.Graph, deadline: Optional[float],
                 check_interval: int = settings.BUDGET_CHECK_INTERVAL):
        super().__init__(host, pattern)
        self.deadline = deadline
        self.check_interval = check_interval
        self.nodes = 0

    def syntactic_feasibility(self, G1_node, G2_node):
        self.nodes += 1
        if (self.deadline is not None and self.nodes % self.check_interval == 0
                and time.monotonic() > self.deadline):
            raise SolverTimeoutError("Бюджет поиска подграфа исчерпан", self.nodes)
        return super().syntactic_feasibility(G1_node, G2_node)


def contains_subgraph(host: nx.Graph, pattern: nx.Graph, deadline: Optional[float] = None) -> bool:
    """
    Есть ли в host подграф (не обязательно индуцированный), изоморфный pattern.

    Перед поиском VF2 проверяется мажорирование упорядоченных степеней.

    Args:
        deadline: Момент time.monotonic(), после которого поиск прерывается.

    Raises:
        SolverTimeoutError: Срок истек до завершения поиска.
    """
    if pattern.number_of_nodes() > host.number_of_nodes() or pattern.number_of_edges() > host.number_of_edges():
        return False
    host_degrees = sorted((d for _, d in host.degree()), reverse=True)
    pattern_degrees = sorted((d for _, d in pattern.degree()), reverse=True)
    if any(h < p for h, p in zip(host_degrees, pattern_degrees)):
        return False
    return _BudgetedMatcher(host, pattern, deadline).subgraph_is_monomorphic()


def check_conjecture_small(n: int, k: int, mode: str = "exhaustive", samples: int = settings.DEFAULT_SAMPLES,
                           seed: int = settings.DEFAULT_SEED,
                           max_target: int = settings.CONJECTURE_MAX_TARGET,
                           max_host: int = settings.CONJECTURE_MAX_HOST,
                           max_bits: int = settings.CONJECTURE_MAX_EXHAUSTIVE_BITS,
                           budget: Optional[float] = None) -> ConjectureReport:
    """
    Ищет подграф Шрийвера в отрицательном подграфе переключений ĤSS(n,k).

    Переключения рассматриваются с точностью до дополнения: последняя вершина
    не переключается. Бюджет (секунды) общий на все переключения; при его
    исчерпании отчет помечается timed_out.

    Raises:
        InputError: Слишком большой целевой граф, носитель или полный перебор.
    """
    if not (1 <= k <= n):
        raise InputError(f"Требуется 1 <= k <= n, получено n={n}, k={k}")
    if k % 2 == 0 and n < 2:
        raise InputError(f"Для четного k нужно n >= 2, получено {n}")
    name, pattern = conjecture_target(n, k)
    if pattern.number_of_nodes() > max_target:
        raise InputError(f"Целевой граф {name} имеет {pattern.number_of_nodes()} > {max_target} вершин")
    host = subset_graph(family_vertices("hss", n, k))
    if host.order > max_host:
        raise InputError(f"ĤSS({n},{k}) имеет {host.order} > {max_host} вершин")
    bits = max(host.order - 1, 0)

    if mode == "exhaustive":
        if bits > max_bits:
            raise InputError(f"Полный перебор 2^{bits} переключений превышает 2^{max_bits}")
        masks: Iterable[int] = range(1 << bits)
    elif mode == "random":
        rng = np.random.default_rng(seed)
        masks = [int(sum(b << i for i, b in enumerate(rng.integers(0, 2, size=bits).tolist())))
                 for _ in range(samples)]
    else:
        raise InputError(f"Неизвестный режим: {mode}")

    report = ConjectureReport(n, k, name)
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    for mask in masks:
        x = [v for v in range(bits) if mask >> v & 1]
        switching = [host.label(v) for v in x]
        try:
            if deadline is not None and time.monotonic() > deadline:
                raise SolverTimeoutError("Бюджет исчерпан между переключениями")
            found = contains_subgraph(negative_subgraph(switch(host, x)), pattern, deadline)
        except SolverTimeoutError as e:
            report.records.append({"switching": switching, "found": None, "nodes": e.nodes})
            report.timed_out = True
            logger.warning(f"ĤSS({n},{k}): бюджет {budget} с исчерпан после {len(report.records) - 1} переключений")
            break
        report.records.append({"switching": switching, "found": found})
        if not found:
            logger.warning(f"ĤSS({n},{k}): {name} не найден при переключении {x}")
    report.elapsed = time.monotonic() - start
    logger.info(f"ĤSS({n},{k}): {name} найден в {report.found} из {len(report.records)} переключений")
    return report

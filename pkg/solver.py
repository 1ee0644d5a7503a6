#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль solver
=============

Точное вычисление сбалансированного хроматического числа chi_b, классического
хроматического числа chi, независимые переборные оракулы и проверка
вершинной критичности.

Точный поиск работает с метками (цвет, знак): ребро (u, v, s) внутри одного
цвета требует sign(u) * sign(v) * s = +1, концы дигона получают разные цвета.
Поиск - ветви и границы с выбором вершины по насыщенности (минимум оставшихся
меток, при равенстве - наименьший номер), нарушением симметрии (цвета вводятся
по порядку, первая вершина нового цвета получает знак +) и нижней оценкой
по клике дигонов. По исчерпании бюджета возвращаются явные границы.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

import settings
from exceptions import InputError, PropertyViolationError, SolverTimeoutError
from families import plus_minus
from sgcore import (SignedGraph, BalancedColouring, POSITIVE, NEGATIVE, is_balanced, is_balanced_set,
                    switch, negative_subgraph, negate, delete_vertex, balanced_to_zero_free)


logger = logging.getLogger(__name__)

Certificate = Union[BalancedColouring, Dict[Hashable, int], Tuple[int, ...]]


@dataclass
class ChiResult:
    """
    Результат точного вычисления хроматического параметра.

    Attributes:
        value (Optional[int]): Точное значение; None, если бюджет исчерпан.
        lower (int): Доказанная нижняя граница.
        upper (int): Верхняя граница, подтвержденная сертификатом.
        certificate: BalancedColouring (chi_b), словарь вершина -> цвет (chi)
            или знаковая раскраска (chi_zero_free) для верхней границы.
        exact (bool): value доказано.
        timed_out (bool): Бюджет исчерпан.
        nodes (int): Число узлов поиска.
        elapsed (float): Время работы в секундах.
        lower_bound_witness (Dict[str, Any]): Обоснование нижней границы.
    """
    value: Optional[int]
    lower: int
    upper: int
    certificate: Optional[Certificate]
    exact: bool
    timed_out: bool = False
    nodes: int = 0
    elapsed: float = 0.0
    lower_bound_witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Структурированное представление для отчетов."""
        if isinstance(self.certificate, BalancedColouring):
            certificate: Any = {"colour": list(self.certificate.colour),
                                "witness": list(self.certificate.witness)}
        elif isinstance(self.certificate, dict):
            certificate = {str(v): c for v, c in self.certificate.items()}
        elif self.certificate is not None:
            certificate = list(self.certificate)
        else:
            certificate = None
        return {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "timed_out": self.timed_out,
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "lower_bound_witness": self.lower_bound_witness,
            "certificate": certificate,
        }


@dataclass(frozen=True)
class CriticalityVerdict:
    """Результат проверки вершинной критичности и значения после удаления каждой вершины."""
    critical: bool
    target: int
    deletion_values: Tuple[int, ...]
    non_critical_vertices: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.critical


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _label_bit(c: int, s: int) -> int:
    return 1 << (2 * c + (0 if s == POSITIVE else 1))


class _LabelSearch:
    """
    Поиск p-раскраски с метками (цвет, знак) для фиксированного p.

    Домен вершины - битовая маска из 2p меток; присваивание метки (c, s)
    вершине v удаляет у положительного соседа метку (c, -s), у отрицательного -
    метку (c, s), у соседа по дигону - обе.
    """

    def __init__(self, g: SignedGraph, p: int, deadline: float,
                 check_interval: int = settings.BUDGET_CHECK_INTERVAL):
        self.g = g
        self.p = p
        self.deadline = deadline
        self.check_interval = check_interval
        self.nodes = 0
        # Знак вершины, все ребра которой - дигоны, ни на что не влияет
        self.sign_free = [all(g.is_digon(v, u) for u, _ in g.adjacency[v]) for v in range(g.order)]
        self.labels: List[Optional[Tuple[int, int]]] = [None] * g.order

    def _tick(self) -> None:
        if self.nodes % self.check_interval == 0 and time.monotonic() > self.deadline:
            raise SolverTimeoutError(f"Бюджет исчерпан при p={self.p}", self.nodes)
        self.nodes += 1

    def run(self) -> Optional[List[Tuple[int, int]]]:
        """Возвращает метки всех вершин или None, если p-раскраски нет."""
        full = (1 << (2 * self.p)) - 1
        if self._extend([full] * self.g.order, 0, self.g.order):
            return list(self.labels)
        return None

    def _choose(self, domains: List[int], used: int) -> Tuple[int, int]:
        used_mask = (1 << (2 * used)) - 1
        best, best_count = -1, None
        for v in range(self.g.order):
            if self.labels[v] is not None:
                continue
            count = _popcount(domains[v] & used_mask) + (1 if used < self.p else 0)
            if best_count is None or count < best_count:
                best, best_count = v, count
                if count == 0:
                    break
        return best, best_count

    def _candidates(self, v: int, domain: int, used: int):
        for c in range(used):
            for s in (POSITIVE, NEGATIVE):
                if s == NEGATIVE and self.sign_free[v]:
                    continue
                if domain & _label_bit(c, s):
                    yield c, s
        if used < self.p:
            yield used, POSITIVE

    def _extend(self, domains: List[int], used: int, remaining: int) -> bool:
        self._tick()
        if remaining == 0:
            return True
        v, count = self._choose(domains, used)
        if count == 0:
            return False
        for c, s in self._candidates(v, domains[v], used):
            reduced = list(domains)
            wiped = False
            for u, e in self.g.adjacency[v]:
                if self.labels[u] is not None:
                    continue
                reduced[u] &= ~_label_bit(c, -s * e)
                if reduced[u] == 0:
                    wiped = True
                    break
            if wiped:
                continue
            self.labels[v] = (c, s)
            if self._extend(reduced, max(used, c + 1), remaining - 1):
                return True
            self.labels[v] = None
        return False


def digon_clique(g: SignedGraph, exact_limit: int = settings.EXACT_CLIQUE_MAX_VERTICES) -> List[int]:
    """
    Клика в графе дигонов: ее вершины попарно требуют разных цветов.

    Если граф дигонов содержит не больше exact_limit вершин, клика максимальна
    (nx.max_weight_clique), иначе строится жадно от каждой вершины.

    Returns:
        List[int]: Вершины клики по возрастанию (пусто, если дигонов нет).
    """
    digon_graph = nx.Graph()
    digon_graph.add_edges_from(g.digons())
    if digon_graph.number_of_nodes() == 0:
        return []
    if digon_graph.number_of_nodes() <= exact_limit:
        clique, _ = nx.max_weight_clique(digon_graph, weight=None)
        return sorted(clique)
    best: List[int] = []
    for start in sorted(digon_graph.nodes(), key=lambda v: (-digon_graph.degree(v), v)):
        clique = [start]
        candidates = set(digon_graph.neighbors(start))
        while candidates:
            v = min(candidates, key=lambda u: (-digon_graph.degree(u), u))
            clique.append(v)
            candidates &= set(digon_graph.neighbors(v))
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def greedy_balanced_colouring(g: SignedGraph) -> BalancedColouring:
    """
    Жадная сбалансированная раскраска: порядок по насыщенности, первая подходящая метка.

    На каждом шаге выбирается вершина с наибольшим числом полностью
    заблокированных цветов (при равенстве - большей степени и меньшего номера)
    и получает первую допустимую метку (цвет, знак), знак + предпочтителен.
    """
    blocked: List[Dict[int, set]] = [dict() for _ in range(g.order)]
    colour = [0] * g.order
    witness = [POSITIVE] * g.order
    degree = [len(a) for a in g.adjacency]
    used = 0
    for _ in range(g.order):
        v = min((u for u in range(g.order) if colour[u] == 0),
                key=lambda u: (-sum(1 for signs in blocked[u].values() if len(signs) == 2), -degree[u], u))
        chosen = None
        for c in range(1, used + 1):
            free = [s for s in (POSITIVE, NEGATIVE) if s not in blocked[v].get(c, set())]
            if free:
                chosen = (c, free[0])
                break
        if chosen is None:
            used += 1
            chosen = (used, POSITIVE)
        colour[v], witness[v] = chosen
        for u, e in g.adjacency[v]:
            if colour[u] == 0:
                blocked[u].setdefault(chosen[0], set()).add(-chosen[1] * e)
    return BalancedColouring(tuple(colour), tuple(witness))


def _attempt(g: SignedGraph, p: int, deadline: float, check_interval: int,
             searches: List[_LabelSearch]) -> Optional[BalancedColouring]:
    search = _LabelSearch(g, p, deadline, check_interval)
    searches.append(search)
    labels = search.run()
    logger.debug(f"p={p}: {'найдено' if labels else 'нет'} раскраски, узлов {search.nodes}")
    if labels is None:
        return None
    return BalancedColouring(tuple(c + 1 for c, _ in labels), tuple(s for _, s in labels))


def _search_exact(g: SignedGraph, lower: int, lower_witness: Dict[str, Any], upper_certificate: BalancedColouring,
                  budget: float, check_interval: int, upper_hint: Optional[int] = None) -> ChiResult:
    """
    Перебирает p от нижней границы вверх до верхней; первое успешное p оптимально.

    Если lower <= upper_hint < upper, сначала проверяется p = upper_hint:
    успех дает верхнюю границу с сертификатом, неудача поднимает нижнюю
    границу до upper_hint + 1.
    """
    if budget <= 0:
        raise InputError(f"Бюджет должен быть положительным: {budget}")
    start = time.monotonic()
    deadline = start + budget
    upper = upper_certificate.num_colours
    best = upper_certificate
    searches: List[_LabelSearch] = []
    p = lower
    try:
        if upper_hint is not None and lower <= upper_hint < upper:
            found = _attempt(g, upper_hint, deadline, check_interval, searches)
            if found is None:
                p = upper_hint + 1
            else:
                best, upper = found, upper_hint
        while p < upper:
            found = _attempt(g, p, deadline, check_interval, searches)
            if found is not None:
                best, upper = found, p
                break
            p += 1
    except SolverTimeoutError:
        elapsed = time.monotonic() - start
        logger.warning(f"Бюджет {budget} сек исчерпан: {p} <= значение <= {upper}")
        return ChiResult(None, p, upper, best, False, True, sum(s.nodes for s in searches), elapsed, lower_witness)
    if not best.check(g):
        raise PropertyViolationError("Найденная раскраска не прошла проверку", details=best)
    nodes = sum(s.nodes for s in searches)
    elapsed = time.monotonic() - start
    logger.debug(f"Значение {upper}, узлов {nodes}, {elapsed:.3f} сек")
    return ChiResult(upper, upper, upper, best, True, False, nodes, elapsed, lower_witness)


def chi_b_exact(g: SignedGraph, upper_hint: Optional[int] = None, budget: float = settings.DEFAULT_BUDGET,
                check_interval: int = settings.BUDGET_CHECK_INTERVAL,
                exact_clique_limit: int = settings.EXACT_CLIQUE_MAX_VERTICES) -> ChiResult:
    """
    Точное сбалансированное хроматическое число.

    Args:
        g: Знаковый граф.
        upper_hint: Предполагаемое значение (например, n-k+1 для ĤKS(n,k)).
            Проверяется первым; на ответ не влияет, но при исчерпании
            бюджета может сузить границы.
        budget: Бюджет времени в секундах.

    Returns:
        ChiResult: Значение с проверенным сертификатом либо, при исчерпании
            бюджета, timed_out=True и явные границы.

    Raises:
        InputError: budget <= 0 или upper_hint < 1.
    """
    if upper_hint is not None and upper_hint < 1:
        raise InputError(f"Подсказка верхней границы должна быть положительной: {upper_hint}")
    if g.order == 0:
        return ChiResult(0, 0, 0, BalancedColouring((), ()), True)
    clique = digon_clique(g, exact_clique_limit)
    balance = is_balanced(g)
    lower, witness = 1, {"reason": "nonempty"}
    if not balance.balanced:
        lower, witness = 2, {"reason": "negative_cycle", "cycle": [list(e) for e in balance.cycle]}
    if len(clique) > lower:
        lower, witness = len(clique), {"reason": "digon_clique", "vertices": clique}
    return _search_exact(g, lower, witness, greedy_balanced_colouring(g), budget, check_interval, upper_hint)


def chi_zero_free(g: SignedGraph, budget: float = settings.DEFAULT_BUDGET) -> ChiResult:
    """
    Хроматическое число без нуля: chi*(G, s) = chi_b(G, -s).

    Сертификат - знаковая раскраска цветами +-1..+-p, для которой
    c(x) != s(xy) * c(y) на каждом ребре g.
    """
    result = chi_b_exact(negate(g), budget=budget)
    if result.certificate is not None:
        result.certificate = balanced_to_zero_free(result.certificate)
    return result


def is_proper_colouring(h: nx.Graph, colouring: Union[Mapping[Hashable, int], Sequence[int]]) -> bool:
    """
    Проверяет, что раскраска неориентированного графа правильная.

    Args:
        h: Граф networkx.
        colouring: Словарь вершина -> цвет или последовательность цветов
            в порядке h.nodes().
    """
    if not isinstance(colouring, Mapping):
        nodes = list(h.nodes())
        if len(colouring) != len(nodes):
            return False
        colouring = dict(zip(nodes, colouring))
    if any(v not in colouring for v in h.nodes()):
        return False
    return all(colouring[u] != colouring[v] for u, v in h.edges())


def chi_exact(h: nx.Graph, budget: float = settings.DEFAULT_BUDGET,
              check_interval: int = settings.BUDGET_CHECK_INTERVAL,
              exact_clique_limit: int = settings.EXACT_CLIQUE_MAX_VERTICES) -> ChiResult:
    """
    Точное хроматическое число неориентированного графа.

    Используется тот же поиск, что и для chi_b, на графе (h, +-):
    chi_b(G, +-) = chi(G). Нижняя граница - клика, верхняя - DSATUR networkx.

    Returns:
        ChiResult: Сертификат - словарь вершина -> цвет (с 1).

    Raises:
        InputError: Граф содержит петли или budget <= 0.
    """
    if nx.number_of_selfloops(h) > 0:
        raise InputError("Граф с петлями не имеет правильной раскраски")
    nodes = list(h.nodes())
    if not nodes:
        return ChiResult(0, 0, 0, {}, True)
    if len(nodes) <= exact_clique_limit:
        clique, _ = nx.max_weight_clique(h, weight=None)
    else:
        clique = max(nx.find_cliques(h), key=len)
    greedy = nx.greedy_color(h, strategy="saturation_largest_first")
    index = {v: i for i, v in enumerate(nodes)}
    greedy_certificate = BalancedColouring(tuple(greedy[v] + 1 for v in nodes), tuple([POSITIVE] * len(nodes)))
    witness = {"reason": "clique", "vertices": sorted(index[v] for v in clique)}
    result = _search_exact(plus_minus(h), max(1, len(clique)), witness, greedy_certificate, budget, check_interval)
    result.certificate = {v: c for v, c in zip(nodes, result.certificate.colour)}
    return result


def chi_b_bruteforce(g: SignedGraph, max_order: int = settings.BRUTEFORCE_MAX_ORDER) -> int:
    """
    Независимый оракул: перебор разбиений на сбалансированные классы.

    Разбиения строятся как строки ограниченного роста; класс, переставший быть
    сбалансированным, отсекается сразу (сбалансированность наследственна).

    Raises:
        InputError: Порядок больше max_order.
    """
    if g.order > max_order:
        raise InputError(f"Перебор разбиений допустим для порядка <= {max_order}, получено {g.order}")
    if g.order == 0:
        return 0
    best = g.order
    classes: List[List[int]] = []

    def extend(v: int) -> None:
        nonlocal best
        if len(classes) >= best:
            return
        if v == g.order:
            best = len(classes)
            return
        for members in classes:
            members.append(v)
            if is_balanced_set(g, members).balanced:
                extend(v + 1)
            members.pop()
        classes.append([v])
        extend(v + 1)
        classes.pop()

    extend(0)
    return best


def chi_b_via_switchings(g: SignedGraph, max_order: int = settings.SWITCHINGS_MAX_ORDER,
                         budget: float = settings.DEFAULT_BUDGET) -> int:
    """
    Независимый оракул: минимум chi отрицательного подграфа по всем переключениям.

    Перебирается 2^(order-1) переключений (последняя вершина не переключается,
    переключение дополнения дает тот же граф).

    Raises:
        InputError: Порядок больше max_order.
        SolverTimeoutError: chi отрицательного подграфа не вычислено за бюджет.
    """
    if g.order > max_order:
        raise InputError(f"Перебор переключений допустим для порядка <= {max_order}, получено {g.order}")
    if g.order == 0:
        return 0
    floor = max(1 if is_balanced(g) else 2, len(digon_clique(g)))
    best = None
    for mask in range(1 << (g.order - 1)):
        switched = switch(g, [v for v in range(g.order - 1) if mask >> v & 1])
        result = chi_exact(negative_subgraph(switched), budget=budget)
        if result.timed_out:
            raise SolverTimeoutError(f"chi отрицательного подграфа не найдено для переключения {mask}",
                                     result.nodes)
        if best is None or result.value < best:
            best = result.value
            if best <= floor:
                break
    return best


def is_vertex_critical(g: SignedGraph, target: int, budget: float = settings.DEFAULT_BUDGET) -> CriticalityVerdict:
    """
    Проверяет, что удаление любой вершины уменьшает chi_b ровно до target - 1.

    Raises:
        InputError: chi_b(g) != target.
        SolverTimeoutError: Какое-либо из вычислений не уложилось в бюджет.
    """
    full = chi_b_exact(g, budget=budget)
    if full.timed_out:
        raise SolverTimeoutError("chi_b исходного графа не найдено", full.nodes)
    if full.value != target:
        raise InputError(f"chi_b графа равно {full.value}, а не {target}")
    values = []
    for v in range(g.order):
        result = chi_b_exact(delete_vertex(g, v), budget=budget)
        if result.timed_out:
            raise SolverTimeoutError(f"chi_b после удаления вершины {v} не найдено", result.nodes)
        values.append(result.value)
    offenders = tuple(v for v, value in enumerate(values) if value != target - 1)
    logger.info(f"Критичность: {'да' if not offenders else 'нет'}, значения после удаления {values}")
    return CriticalityVerdict(not offenders, target, tuple(values), offenders)

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль constructions
====================

Явные раскраски и покрытия в виде проверяемых сертификатов:

- cover_B_i: сбалансированная (n-k+1)-раскраска ĤKS(n,k) классами B_i;
- critical_cover: (n-k)-раскраска ĤSS(n,k) без одной вершины;
- cover_B_i_plus: правильные раскраски отрицательных подграфов классами B_i^+;
- equator_cover: сбалансированная (d+1)-раскраска дискретизации BS(d, eps).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import settings
from exceptions import CoverageError, InputError
from families import SignedSubset, family_vertices, is_alternating, subset_graph
from sgcore import SignedGraph, BalancedColouring, POSITIVE, NEGATIVE, negative_subgraph, verify_balanced_colouring
from solver import is_proper_colouring
from topo import BorsukDiscretization, gen_borsuk_disc


logger = logging.getLogger(__name__)

COVER_KINDS = ("bi_cover", "critical_cover", "bi_plus_cover", "equator_cover")
PLUS_TARGETS = ("hks", "hss", "ss", "ks")


@dataclass(frozen=True)
class CoverSpec:
    """
    Параметры конструкции.

    Attributes:
        kind: Одно из COVER_KINDS.
        n, k: Параметры семейства.
        indices: Набор индексов I для bi_cover (по умолчанию 1..n-k+1).
        vertex: Удаляемая вершина для critical_cover.
        count, target: Число классов и целевой граф для bi_plus_cover.
        d, eps, tau, resolution, seed: Параметры equator_cover.
    """
    kind: str
    n: int = 0
    k: int = 0
    indices: Optional[Tuple[int, ...]] = None
    vertex: Optional[SignedSubset] = None
    count: Optional[int] = None
    target: str = "hks"
    d: int = 1
    eps: float = 0.05
    tau: Optional[float] = None
    resolution: int = 64
    seed: int = settings.DEFAULT_SEED


@dataclass(frozen=True)
class CoverCertificate:
    """
    Раскраска-сертификат вместе с графом, на котором ее нужно проверить.

    Для сбалансированных конструкций witness содержит знак каждой вершины;
    для bi_plus_cover witness равен None, и проверяется правильность раскраски
    отрицательного подграфа.
    """
    kind: str
    graph: SignedGraph
    colour: Tuple[int, ...]
    witness: Optional[Tuple[int, ...]] = None

    @property
    def num_colours(self) -> int:
        return len(set(self.colour))

    @property
    def colouring(self) -> Optional[BalancedColouring]:
        if self.witness is None:
            return None
        return BalancedColouring(self.colour, self.witness)

    def verify(self) -> bool:
        """Независимая повторная проверка через sgcore или is_proper_colouring."""
        if self.witness is None:
            return is_proper_colouring(negative_subgraph(self.graph), self.colour)
        verdict = verify_balanced_colouring(self.graph, self.colour)
        return verdict.accepted and self.colouring.check(self.graph)

    def to_dict(self) -> Dict[str, Any]:
        classes: Dict[int, Dict[str, Any]] = {}
        for v, c in enumerate(self.colour):
            entry = classes.setdefault(c, {"vertices": []})
            entry["vertices"].append(self.graph.label(v))
            if self.witness is not None:
                entry.setdefault("witness", {})[self.graph.label(v)] = self.witness[v]
        return {
            "kind": self.kind,
            "order": self.graph.order,
            "colours": self.num_colours,
            "colour": {self.graph.label(v): c for v, c in enumerate(self.colour)},
            "classes": {str(c): classes[c] for c in sorted(classes)},
        }


def _first_hit(a: SignedSubset, indices: Sequence[int]) -> Optional[int]:
    """Позиция (с 1) первого индекса i, для которого i или -i лежит в a."""
    for position, i in enumerate(indices, start=1):
        if a.sign_of(i):
            return position
    return None


def cover_B_i(n: int, k: int, indices: Optional[Sequence[int]] = None) -> CoverCertificate:
    """
    Сбалансированная раскраска ĤKS(n,k) классами B_i, i из I.

    Вершина A получает номер первого i из I (по возрастанию), для которого A
    пересекает {i, -i}; свидетель - знак i в A. Носитель размера k пропускает
    не более n-k индексов, поэтому n-k+1 индексов покрывают все вершины.

    Raises:
        InputError: |I| != n-k+1, повторы или индексы вне [n].
    """
    if not (1 <= k <= n):
        raise InputError(f"Требуется 1 <= k <= n, получено n={n}, k={k}")
    indices = sorted(indices) if indices is not None else list(range(1, n - k + 2))
    if len(indices) != n - k + 1 or len(set(indices)) != len(indices) or any(not 1 <= i <= n for i in indices):
        raise InputError(f"Нужно {n - k + 1} различных индексов из [{n}], получено {indices}")
    vertices = family_vertices("hks", n, k)
    colour, witness = [], []
    for a in vertices:
        position = _first_hit(a, indices)
        colour.append(position)
        witness.append(a.sign_of(indices[position - 1]))
    logger.debug(f"B_i-покрытие ĤKS({n},{k}) индексами {indices}")
    return CoverCertificate("bi_cover", subset_graph(vertices), tuple(colour), tuple(witness))


def critical_cover(n: int, k: int, a: SignedSubset) -> CoverCertificate:
    """
    (n-k)-раскраска ĤSS(n,k) - a классами B_i, i вне носителя a.

    Единственные чередующиеся k-множества внутри a и -a - это сами a и -a,
    поэтому каждая другая вершина задевает индекс вне носителя.

    Raises:
        InputError: a не является вершиной ĤSS(n,k).
        CoverageError: Какая-то вершина не покрыта.
    """
    if a.n != n or a.k != k:
        raise InputError(f"Вершина {a} не является знаковым {k}-подмножеством [{n}]")
    if not is_alternating(a) or not a.is_hat():
        raise InputError(f"Вершина {a} не принадлежит ĤSS({n},{k})")
    rest = [b for b in family_vertices("hss", n, k) if b != a]
    indices = sorted(set(range(1, n + 1)) - a.support())
    colour, witness = [], []
    for v, b in enumerate(rest):
        position = _first_hit(b, indices)
        if position is None:
            raise CoverageError(f"Вершина {b} не покрыта классами B_i, i из {indices}", v)
        colour.append(position)
        witness.append(b.sign_of(indices[position - 1]))
    return CoverCertificate("critical_cover", subset_graph(rest), tuple(colour), tuple(witness))


def expected_plus_count(n: int, k: int, target: str) -> int:
    """
    Число классов B_i^+ для целевого графа.

    Raises:
        InputError: Неизвестный целевой граф или target="ss" при k = 1
            (SS(n,1) = KS(n,1), и множество {-1} не содержит положительных индексов).
    """
    if target == "ss" and k == 1:
        raise InputError("Классы B_i^+ не покрывают SS(n,1): вершина {-1} не содержит положительных индексов")
    counts = {"hks": n - k + 1, "hss": n - k + 1, "ss": n - k + 2, "ks": 2 * n - 2 * k + 2}
    if target not in counts:
        raise InputError(f"Неизвестный целевой граф {target}, ожидается одно из {PLUS_TARGETS}")
    return counts[target]


def cover_B_i_plus(n: int, k: int, count: int, target: str = "hks") -> CoverCertificate:
    """
    Правильная раскраска отрицательного подграфа классами B_i^+ = {A : i in A}.

    Цвет вершины - первое i <= count с i в A. Для target="ks" count = 2n-2k+2:
    сначала классы B_i^+, i <= n-k+1, затем классы {A : -i in A}.
    Все множества одного класса пересекаются, поэтому класс независим
    в отрицательном подграфе.

    Raises:
        InputError: count не соответствует целевому графу.
        CoverageError: Какая-то вершина не покрыта.
    """
    if not (1 <= k <= n):
        raise InputError(f"Требуется 1 <= k <= n, получено n={n}, k={k}")
    expected = expected_plus_count(n, k, target)
    if count != expected:
        raise InputError(f"Для {target}({n},{k}) нужно {expected} классов, получено {count}")
    vertices = family_vertices(target, n, k)
    half = n - k + 1
    colour: List[int] = []
    for v, a in enumerate(vertices):
        limit = half if target == "ks" else count
        c = next((i for i in range(1, limit + 1) if a.sign_of(i) == POSITIVE), None)
        if c is None and target == "ks":
            c = next((half + i for i in range(1, half + 1) if a.sign_of(i) == NEGATIVE), None)
        if c is None:
            raise CoverageError(f"Вершина {a} не покрыта классами B_i^+", v)
        colour.append(c)
    return CoverCertificate("bi_plus_cover", subset_graph(vertices), tuple(colour))


def equator_cover(disc: BorsukDiscretization, tau: Optional[float] = None) -> CoverCertificate:
    """
    Сбалансированная (d+1)-раскраска дискретизации BS(d, eps).

    Точка x получает цвет первой координаты i с |x_i| > tau, свидетель - знак x_i.
    При tau >= eps положительное ребро не соединяет точки с разными знаками x_i.

    Raises:
        InputError: tau < eps.
        CoverageError: У точки все |x_i| <= tau.
    """
    tau = disc.eps if tau is None else tau
    if tau < disc.eps:
        raise InputError(f"Порог tau={tau} меньше eps={disc.eps}")
    colour, witness = [], []
    for v, x in enumerate(disc.points):
        i = next((i for i, c in enumerate(x) if abs(c) > tau), None)
        if i is None:
            raise CoverageError(f"Точка {v} не покрыта: все координаты по модулю не больше {tau}", v)
        colour.append(i + 1)
        witness.append(POSITIVE if x[i] > 0 else NEGATIVE)
    return CoverCertificate("equator_cover", disc.graph, tuple(colour), tuple(witness))


def build_cover(spec: CoverSpec) -> CoverCertificate:
    """Строит сертификат по описанию конструкции."""
    if spec.kind == "bi_cover":
        return cover_B_i(spec.n, spec.k, spec.indices)
    if spec.kind == "critical_cover":
        if spec.vertex is None:
            raise InputError("Для critical_cover нужна удаляемая вершина")
        return critical_cover(spec.n, spec.k, spec.vertex)
    if spec.kind == "bi_plus_cover":
        count = spec.count if spec.count is not None else expected_plus_count(spec.n, spec.k, spec.target)
        return cover_B_i_plus(spec.n, spec.k, count, spec.target)
    if spec.kind == "equator_cover":
        disc = gen_borsuk_disc(spec.d, spec.eps, spec.resolution, spec.seed)
        return equator_cover(disc, spec.tau)
    raise InputError(f"Неизвестная конструкция: {spec.kind}")

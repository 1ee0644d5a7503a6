#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль campaigns
================

Кампании проверки утверждений: каждая кампания разворачивается в список
независимых экземпляров (Task), экземпляры выполняются последовательно или
в пуле процессов, результаты собираются в отчет VerificationReport в порядке
номеров экземпляров.

Ошибка в одном экземпляре записывается в отчет, и выполнение продолжается
со следующего экземпляра.
"""

import json
import logging
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from math import ceil
from typing import Any, Callable, Dict, Iterator, List, Optional, Union

import networkx as nx
import numpy as np

import settings
from constructions import (cover_B_i, critical_cover, cover_B_i_plus, equator_cover,
                           expected_plus_count, PLUS_TARGETS)
from exceptions import BaseAppError, BoundaryAmbiguityError, SolverTimeoutError, UsageError
from families import (FamilyDescriptor, family_vertices, gen_family, all_negative, plus_minus,
                      expected_order, embed_schrijver_negative, random_signed_graph, SignedSubset,
                      SIGNED_FAMILIES)
from matching import verify_thm_k2, check_conjecture_small, conjecture_target
from sgcore import negative_subgraph
from solver import chi_b_exact, chi_exact, chi_b_bruteforce, chi_b_via_switchings, is_vertex_critical
from topo import (moment_embedding, general_position_violations, find_alternating_with_retry, gen_borsuk_disc,
                  borsuk_graph, borsuk_to_schrijver_hom, symmetric_cap_cover, antipodal_connectivity,
                  alternating_sign_pattern, odd_polynomial_with_roots)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Task:
    """Один экземпляр кампании; передается в рабочий процесс."""
    campaign: str
    index: int
    params: Dict[str, Any]
    seed: int
    budget: float


@dataclass
class Record:
    """
    Запись отчета об одном экземпляре.

    status: "passed", "failed", "timeout", "error" или "observation"
    (наблюдение без проверяемого утверждения).
    """
    index: int
    family: str
    n: Optional[int]
    k: Optional[int]
    statistic: str
    expected: Any
    observed: Any
    ok: bool
    status: str
    elapsed_ms: float = 0.0
    seed: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class VerificationReport:
    """Отчет кампании: параметры, записи по номеру экземпляра и сводка."""
    campaign: str
    params: Dict[str, Any]
    records: List[Record] = field(default_factory=list)
    observational: bool = False
    total_ms: float = 0.0

    def summary(self) -> Dict[str, Any]:
        counts = {status: 0 for status in ("passed", "failed", "timeout", "error", "observation")}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        counts["total_ms"] = self.total_ms
        return counts

    @property
    def exit_code(self) -> int:
        """0 - все утверждения выполнены, 1 - нарушение или ошибка, 4 - только таймауты."""
        if self.observational:
            return settings.EXIT_OK
        summary = self.summary()
        if summary["failed"] or summary["error"]:
            return settings.EXIT_ASSERTION
        if summary["timeout"]:
            return settings.EXIT_TIMEOUT
        return settings.EXIT_OK

    def strip_timings(self) -> None:
        """Обнуляет времена, чтобы отчет был побайтно воспроизводим."""
        self.total_ms = 0.0
        for r in self.records:
            r.elapsed_ms = 0.0
            for key in ("elapsed", "nodes"):
                r.details.pop(key, None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "campaign": self.campaign,
            "params": self.params,
            "observational": self.observational,
            "records": [asdict(r) for r in self.records],
            "summary": self.summary(),
        }

    def write(self, path: Union[str, os.PathLike]) -> None:
        """Сохраняет отчет в JSON."""
        write_json(self.to_dict(), path)


def write_json(data: Dict[str, Any], path: Union[str, os.PathLike]) -> None:
    """Пишет JSON с отсортированными ключами и отступом 2, создавая папку при необходимости."""
    directory = os.path.dirname(os.fspath(path))
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as file:
        json.dump(data, file, ensure_ascii=False, indent=2, sort_keys=True)
        file.write("\n")


def derive_seed(seed: int, campaign: str, index: int) -> int:
    """Зерно экземпляра, выведенное из общего зерна, имени кампании и номера."""
    state = np.random.SeedSequence([seed, zlib.crc32(campaign.encode("utf-8")), index]).generate_state(1)
    return int(state[0])


def _compare(task: Task, family: str, n: Optional[int], k: Optional[int], statistic: str,
             expected: Any, observed: Any, **details: Any) -> Record:
    ok = expected == observed
    return Record(task.index, family, n, k, statistic, expected, observed, ok,
                  "passed" if ok else "failed", seed=task.seed, details=details)


def _chi_record(task: Task, family: str, n: Optional[int], k: Optional[int], statistic: str,
                expected: int, result) -> Record:
    details = {"lower": result.lower, "upper": result.upper, "nodes": result.nodes, "elapsed": result.elapsed}
    if result.timed_out:
        return Record(task.index, family, n, k, statistic, expected, None, False, "timeout",
                      seed=task.seed, details=details)
    return _compare(task, family, n, k, statistic, expected, result.value, **details)


# Разворачивание кампаний в экземпляры
def _pairs(max_n: int, min_n: int = 1) -> Iterator[tuple]:
    for n in range(min_n, max_n + 1):
        for k in range(1, n + 1):
            yield n, k


def _plan_signed_k(max_n, samples):
    return [{"n": n, "k": k} for n, k in _pairs(max_n or 5)]


def _plan_signed_s(max_n, samples):
    return [{"n": n, "k": k} for n, k in _pairs(max_n or 6)]


def _plan_neg(max_n, samples):
    return [{"family": f, "n": n, "k": k} for n, k in _pairs(max_n or 5) for f in ("hks", "hss")]


def _plan_neg_full(max_n, samples):
    return [{"family": f, "n": n, "k": k} for n, k in _pairs(max_n or 5) for f in ("ks", "ss")]


def _plan_prop14(max_n, samples):
    plan = []
    for m in range(1, min(max_n or 5, 5) + 1):
        pairs = list(combinations(range(m), 2))
        for mask in range(1 << len(pairs)):
            plan.append({"order": m, "edges": [list(p) for b, p in enumerate(pairs) if mask >> b & 1]})
    plan.extend({"order": None} for _ in range(500 if samples is None else samples))
    return plan


def _plan_random(max_n, samples):
    return [{"max_order": max_n or 10} for _ in range(200 if samples is None else samples)]


def _plan_oracles(max_n, samples):
    return [{"max_order": min(max_n or 9, settings.BRUTEFORCE_MAX_ORDER)}
            for _ in range(200 if samples is None else samples)]


def _plan_k2(max_n, samples):
    sizes = range(2, max_n + 1) if max_n else [2, 3, 4, 5, 8, 10, 12]
    plan = []
    for n in sizes:
        if n <= 5:
            plan.append({"n": n, "mode": "exhaustive"})
        else:
            plan.append({"n": n, "mode": "random", "samples": 10 ** 4 if samples is None else samples})
    return plan


def _plan_conjecture(max_n, samples):
    plan = []
    for n, k in _pairs(max_n or 5):
        if k % 2 == 0 and n < 2:
            continue
        _, pattern = conjecture_target(n, k)
        order = len(family_vertices("hss", n, k))
        if pattern.number_of_nodes() > settings.CONJECTURE_MAX_TARGET or order > settings.CONJECTURE_MAX_HOST:
            continue
        mode = "exhaustive" if order - 1 <= settings.CONJECTURE_MAX_EXHAUSTIVE_BITS else "random"
        plan.append({"n": n, "k": k, "mode": mode, "samples": settings.DEFAULT_SAMPLES if samples is None else samples})
    return plan


def _plan_gale(max_n, samples):
    return [{"n": n, "k": k, "samples": 10 ** 4 if samples is None else samples}
            for n, k in _pairs(max_n or 8) if n - k <= 3]


def _plan_hom(max_n, samples):
    return [{"d": 1, "n": 3, "k": 2, "resolution": 128, "eps": 0.02},
            {"d": 2, "n": 4, "k": 2, "resolution": 1000, "eps": 0.02}]


def _plan_counts(max_n, samples):
    return [{"family": f, "n": n, "k": k} for n, k in _pairs(max_n or 8) for f in SIGNED_FAMILIES]


def _plan_borsuk_d1(max_n, samples):
    return [{"part": "signed_d1"}, {"part": "classical_d1"}, {"part": "equator_d2"}]


def _plan_antipodal(max_n, samples):
    return [{"d": 2, "resolution": 2000, "eps": 0.15, "classes": 2, "caps": 8}
            for _ in range(100 if samples is None else samples)]


def _plan_criticality(max_n, samples):
    plan = [{"family": "hss", "n": n, "k": k} for n, k in _pairs(max_n or 5)]
    plan.extend({"family": "hks", "n": n, "k": k} for n, k in _pairs(min(max_n or 4, 4), 2) if k < n)
    return plan


def _plan_covers(max_n, samples):
    plan = [{"kind": "bi_cover", "n": n, "k": k} for n, k in _pairs(max_n or 7)]
    for n, k in _pairs(min(max_n or 6, 6)):
        plan.extend({"kind": "critical_cover", "n": n, "k": k, "vertex": a.label}
                    for a in family_vertices("hss", n, k))
    plan.extend({"kind": "bi_plus_cover", "n": n, "k": k, "target": t}
                for n, k in _pairs(min(max_n or 5, 5)) for t in PLUS_TARGETS if not (t == "ss" and k == 1))
    plan.extend({"kind": "equator_cover", "d": d, "eps": 0.05, "resolution": 128 if d == 1 else 1000}
                for d in (1, 2))
    return plan


def _plan_embedding(max_n, samples):
    return [{"n": n, "k": k} for n, k in _pairs(max_n or 5)]


# Выполнение одного экземпляра
def _run_signed_k(task: Task) -> Record:
    n, k = task.params["n"], task.params["k"]
    g = gen_family(FamilyDescriptor("hks", n, k))
    result = chi_b_exact(g, upper_hint=n - k + 1, budget=task.budget)
    return _chi_record(task, "hks", n, k, "chi_b", n - k + 1, result)


def _run_signed_s(task: Task) -> Record:
    n, k = task.params["n"], task.params["k"]
    g = gen_family(FamilyDescriptor("hss", n, k))
    result = chi_b_exact(g, upper_hint=n - k + 1, budget=task.budget)
    record = _chi_record(task, "hss", n, k, "chi_b+critical", n - k + 1, result)
    if record.ok:
        verdict = is_vertex_critical(g, n - k + 1, budget=task.budget)
        record.details["deletion_values"] = list(verdict.deletion_values)
        if not verdict.critical:
            record.ok, record.status = False, "failed"
    return record


def negative_chi_expected(family: str, n: int, k: int) -> int:
    """
    Ожидаемое chi отрицательного подграфа семейства.

    SS(n,1) совпадает с KS(n,1), его отрицательный подграф - полный граф K_2n.
    """
    if family == "ss" and k == 1:
        return 2 * n
    return {"hks": n - k + 1, "hss": n - k + 1, "ks": 2 * n - 2 * k + 2, "ss": n - k + 2}[family]


def _run_neg(task: Task) -> Record:
    family, n, k = task.params["family"], task.params["n"], task.params["k"]
    expected = negative_chi_expected(family, n, k)
    h = negative_subgraph(gen_family(FamilyDescriptor(family, n, k)))
    return _chi_record(task, family, n, k, "chi_negative", expected, chi_exact(h, budget=task.budget))


def _prop14_graph(task: Task) -> nx.Graph:
    if task.params["order"] is not None:
        h = nx.Graph()
        h.add_nodes_from(range(task.params["order"]))
        h.add_edges_from(tuple(e) for e in task.params["edges"])
        return h
    rng = np.random.default_rng(task.seed)
    while True:
        h = nx.gnp_random_graph(int(rng.integers(6, 8)), 0.5, seed=int(rng.integers(2 ** 31)))
        if nx.is_connected(h):
            return h


def _run_prop14(task: Task) -> Record:
    h = _prop14_graph(task)
    if not nx.is_connected(h):
        return Record(task.index, "graph", h.number_of_nodes(), None, "connected", None, None, True,
                      "observation", seed=task.seed, details={"skipped": "несвязный граф"})
    chi = chi_exact(h, budget=task.budget)
    if chi.timed_out:
        return _chi_record(task, "graph", h.number_of_nodes(), None, "chi", None, chi)
    negative = chi_b_exact(all_negative(h), budget=task.budget)
    mixed = chi_b_exact(plus_minus(h), budget=task.budget)
    observed = [negative.value, mixed.value]
    return _compare(task, "graph", h.number_of_nodes(), None, "chi_b(-), chi_b(+-)",
                    [ceil(chi.value / 2), chi.value], observed, edges=sorted(list(e) for e in h.edges()))


def _random_graph(task: Task):
    rng = np.random.default_rng(task.seed)
    order = int(rng.integers(1, task.params["max_order"] + 1))
    return random_signed_graph(order, rng)


def _run_prop24(task: Task) -> Record:
    g = _random_graph(task)
    exact = chi_b_exact(g, budget=task.budget)
    if exact.timed_out:
        return _chi_record(task, "random", g.order, None, "chi_b", None, exact)
    return _compare(task, "random", g.order, None, "chi_b_via_switchings",
                    exact.value, chi_b_via_switchings(g, budget=task.budget))


def _run_oracles(task: Task) -> Record:
    g = _random_graph(task)
    exact = chi_b_exact(g, budget=task.budget)
    if exact.timed_out:
        return _chi_record(task, "random", g.order, None, "chi_b", None, exact)
    return _compare(task, "random", g.order, None, "chi_b_bruteforce", exact.value, chi_b_bruteforce(g))


def _run_k2(task: Task) -> Record:
    n = task.params["n"]
    report = verify_thm_k2(n, task.params["mode"], task.params.get("samples", 0), task.seed)
    observed = min(report.sizes) if report.sizes else None
    return Record(task.index, "B", n, 2, "min_matching>=", n - 1, observed, report.ok,
                  "passed" if report.ok else "failed", seed=task.seed,
                  details={"instances": report.instances, "sizes": report.to_dict()["sizes"],
                           "failures": report.failures[:10]})


def _run_conjecture(task: Task) -> Record:
    n, k = task.params["n"], task.params["k"]
    report = check_conjecture_small(n, k, task.params["mode"], task.params["samples"], task.seed,
                                    budget=task.budget)
    observed = {"found": report.found, "missing": report.missing}
    if report.timed_out:
        return Record(task.index, "hss", n, k, report.target, None, observed, False, "timeout",
                      seed=task.seed, details={"switchings": len(report.records) - 1})
    return Record(task.index, "hss", n, k, report.target, None, observed,
                  True, "observation", seed=task.seed, details={"switchings": len(report.records)})


def _sign_pattern_failures(n: int, k: int) -> int:
    """Число наборов корней, для которых X не является чередующимся k-множеством."""
    failures = 0
    for roots in combinations(range(1, n + 1), n - k):
        for scale in (1.0, -1.0):
            pattern = alternating_sign_pattern(odd_polynomial_with_roots(roots, scale), n, k, skip_roots=True)
            if not (pattern.size_ok and pattern.alternating):
                failures += 1
                logger.error(f"Корни {roots}, масштаб {scale}: X = {sorted(pattern.members)}")
    return failures


def _run_gale(task: Task) -> Record:
    n, k, samples = task.params["n"], task.params["k"], task.params["samples"]
    emb = moment_embedding(n, k)
    rng = np.random.default_rng(task.seed)
    absent = 0
    for _ in range(samples):
        a = rng.standard_normal(emb.d + 1)
        try:
            if find_alternating_with_retry(emb, a, "first", rng) is None:
                absent += 1
        except BoundaryAmbiguityError:
            absent += 1
    violations = general_position_violations(emb)
    return _compare(task, "moment", n, k, "absent+degenerate+sign_pattern", [0, 0, 0],
                    [absent, len(violations), _sign_pattern_failures(n, k)], samples=samples)


def _run_hom(task: Task) -> Record:
    p = task.params
    disc = _cached_disc(p["d"], p["eps"], p["resolution"], task.seed)
    verdict = borsuk_to_schrijver_hom(disc, moment_embedding(p["n"], p["k"]), seed=task.seed)
    return _compare(task, "borsuk_disc", p["n"], p["k"], "hom_violations", 0, len(verdict.violations),
                    d=p["d"], eps=p["eps"], points=disc.size, first=list(verdict.violations[:5]))


def _run_borsuk(task: Task) -> Record:
    part = task.params["part"]
    if part == "signed_d1":
        resolution = 64
        eps = 2 * np.sin(np.pi / (2 * resolution)) + 0.01
        disc = gen_borsuk_disc(1, float(eps), resolution, task.seed)
        return _chi_record(task, "borsuk_disc", None, None, "chi_b", 2, chi_b_exact(disc.graph, budget=task.budget))
    if part == "classical_d1":
        disc = gen_borsuk_disc(1, 0.1, 64, task.seed)
        return _chi_record(task, "borsuk_graph", None, None, "chi", 3, chi_exact(borsuk_graph(disc), budget=task.budget))
    disc = gen_borsuk_disc(2, 0.3, 100, task.seed)
    certificate = equator_cover(disc)
    upper_ok = certificate.verify() and certificate.num_colours <= 3
    result = chi_b_exact(disc.graph, budget=task.budget)
    details = {"lower": result.lower, "upper": result.upper, "value": result.value, "timed_out": result.timed_out}
    return Record(task.index, "borsuk_disc", None, None, "equator_upper_bound", 3, certificate.num_colours,
                  upper_ok, "passed" if upper_ok else "failed", seed=task.seed, details=details)


@lru_cache(maxsize=4)
def _cached_disc(d: int, eps: float, resolution: int, seed: int):
    return gen_borsuk_disc(d, eps, resolution, seed)


def _run_antipodal(task: Task) -> Record:
    p = task.params
    disc = _cached_disc(p["d"], p["eps"], p["resolution"], settings.DEFAULT_SEED)
    classes = symmetric_cap_cover(disc, p["classes"], p["caps"], task.seed)
    witness = antipodal_connectivity(disc, classes)
    observed = witness is not None
    details = {"class": witness.class_index, "path_length": len(witness.path) - 1} if witness else {}
    return _compare(task, "borsuk_disc", None, None, "antipodal_pair", True, observed, **details)


def expected_critical(family: str, n: int, k: int) -> bool:
    """
    Ожидаемая вершинная критичность ĤSS(n,k) и ĤKS(n,k).

    ĤSS(n,k) критичен всегда. ĤKS(n,k) содержит ĤSS(n,k) с тем же chi_b,
    поэтому критичен, только если совпадает с ним (равны порядки).
    """
    if family == "hss":
        return True
    return expected_order("hks", n, k) == expected_order("hss", n, k)


def _run_criticality(task: Task) -> Record:
    family, n, k = task.params["family"], task.params["n"], task.params["k"]
    g = gen_family(FamilyDescriptor(family, n, k))
    target = chi_b_exact(g, budget=task.budget)
    if target.timed_out:
        return _chi_record(task, family, n, k, "chi_b", None, target)
    verdict = is_vertex_critical(g, target.value, budget=task.budget)
    details = {"target": target.value, "deletion_values": list(verdict.deletion_values)}
    return _compare(task, family, n, k, "critical", expected_critical(family, n, k), verdict.critical, **details)


def _run_covers(task: Task) -> Record:
    p = task.params
    kind = p["kind"]
    if kind == "bi_cover":
        certificate, expected = cover_B_i(p["n"], p["k"]), p["n"] - p["k"] + 1
    elif kind == "critical_cover":
        vertex = SignedSubset.parse(p["vertex"], p["n"])
        certificate, expected = critical_cover(p["n"], p["k"], vertex), p["n"] - p["k"]
    elif kind == "bi_plus_cover":
        expected = expected_plus_count(p["n"], p["k"], p["target"])
        certificate = cover_B_i_plus(p["n"], p["k"], expected, p["target"])
    else:
        certificate = equator_cover(_cached_disc(p["d"], p["eps"], p["resolution"], task.seed))
        expected = p["d"] + 1
    ok = certificate.verify() and certificate.num_colours <= expected
    return Record(task.index, kind, p.get("n"), p.get("k"), "verified_colours", expected, certificate.num_colours,
                  ok, "passed" if ok else "failed", seed=task.seed,
                  details={key: p[key] for key in ("vertex", "target", "d") if key in p})


def _run_embedding(task: Task) -> Record:
    n, k = task.params["n"], task.params["k"]
    verdict = embed_schrijver_negative(n, k)
    return _compare(task, "schrijver", 2 * n, k, "embedding_violations", 0, len(verdict.violations))


def _run_counts(task: Task) -> Record:
    family, n, k = task.params["family"], task.params["n"], task.params["k"]
    return _compare(task, family, n, k, "order", expected_order(family, n, k), len(family_vertices(family, n, k)))


@dataclass(frozen=True)
class Campaign:
    """Описание кампании: построение плана и выполнение экземпляра."""
    plan: Callable[[Optional[int], Optional[int]], List[Dict[str, Any]]]
    run: Callable[[Task], Record]
    observational: bool = False


CAMPAIGNS: Dict[str, Campaign] = {
    "signedK": Campaign(_plan_signed_k, _run_signed_k),
    "signedS": Campaign(_plan_signed_s, _run_signed_s),
    "neg-hat": Campaign(_plan_neg, _run_neg),
    "neg-full": Campaign(_plan_neg_full, _run_neg),
    "prop14": Campaign(_plan_prop14, _run_prop14),
    "prop24": Campaign(_plan_random, _run_prop24),
    "oracles": Campaign(_plan_oracles, _run_oracles),
    "k2-matching": Campaign(_plan_k2, _run_k2),
    "conjecture": Campaign(_plan_conjecture, _run_conjecture, observational=True),
    "gale": Campaign(_plan_gale, _run_gale),
    "hom": Campaign(_plan_hom, _run_hom),
    "counts": Campaign(_plan_counts, _run_counts),
    "borsuk-d1": Campaign(_plan_borsuk_d1, _run_borsuk),
    "antipodal": Campaign(_plan_antipodal, _run_antipodal),
    "criticality": Campaign(_plan_criticality, _run_criticality),
    "covers": Campaign(_plan_covers, _run_covers),
    "embedding": Campaign(_plan_embedding, _run_embedding),
}


def run_task(task: Task) -> Record:
    """
    Выполняет один экземпляр; любая ошибка записывается в отчет как status="error".

    Функция верхнего уровня, чтобы ее можно было передать в пул процессов.
    """
    start = time.monotonic()
    try:
        record = CAMPAIGNS[task.campaign].run(task)
    except SolverTimeoutError as e:
        record = Record(task.index, task.campaign, task.params.get("n"), task.params.get("k"), "timeout",
                        None, None, False, "timeout", seed=task.seed, details={"error": str(e), "nodes": e.nodes})
    except (BaseAppError, ArithmeticError, ValueError, KeyError) as e:
        logger.error(f"{task.campaign} #{task.index}: {e}")
        record = Record(task.index, task.campaign, task.params.get("n"), task.params.get("k"), "error",
                        None, None, False, "error", seed=task.seed, details={"error": str(e)})
    record.elapsed_ms = round((time.monotonic() - start) * 1000, 3)
    if record.status == "failed":
        logger.error(f"{task.campaign} #{task.index}: ожидалось {record.expected}, получено {record.observed}")
    elif record.status == "timeout":
        logger.warning(f"{task.campaign} #{task.index}: бюджет исчерпан")
    else:
        logger.debug(f"{task.campaign} #{task.index}: {record.status}")
    return record


class CampaignRunner:
    """
    Запускает кампанию и собирает отчет.

    Attributes:
        theorem (str): Имя кампании из CAMPAIGNS.
        max_n, samples: Масштаб (None - значения кампании по умолчанию).
        seed (int): Общее зерно; зерна экземпляров выводятся из него.
        budget (float): Бюджет точного поиска на экземпляр.
        workers (int): Число процессов (1 - последовательно).
    """

    def __init__(self, theorem: str, max_n: Optional[int] = None, samples: Optional[int] = None,
                 seed: int = settings.DEFAULT_SEED, budget: float = settings.DEFAULT_BUDGET, workers: int = 1):
        if theorem not in CAMPAIGNS:
            raise UsageError(f"Неизвестная кампания: {theorem}")
        if workers < 1:
            raise UsageError(f"Число процессов должно быть >= 1: {workers}")
        self.theorem = theorem
        self.max_n = max_n
        self.samples = samples
        self.seed = seed
        self.budget = budget
        self.workers = workers

    def tasks(self) -> List[Task]:
        plan = CAMPAIGNS[self.theorem].plan(self.max_n, self.samples)
        return [Task(self.theorem, i, params, derive_seed(self.seed, self.theorem, i), self.budget)
                for i, params in enumerate(plan)]

    def run(self) -> VerificationReport:
        tasks = self.tasks()
        params = {"max_n": self.max_n, "samples": self.samples, "seed": self.seed, "budget": self.budget}
        report = VerificationReport(self.theorem, params, observational=CAMPAIGNS[self.theorem].observational)
        logger.info(f"Кампания {self.theorem}: {len(tasks)} экземпляров, процессов {self.workers}")
        start = time.monotonic()
        if self.workers == 1:
            records = [run_task(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                records = list(pool.map(run_task, tasks))
        report.records = sorted(records, key=lambda r: r.index)
        report.total_ms = round((time.monotonic() - start) * 1000, 3)
        summary = report.summary()
        logger.info(f"Кампания {self.theorem} завершена: пройдено {summary['passed']}, нарушений {summary['failed']}, "
                    f"таймаутов {summary['timeout']}, ошибок {summary['error']}, наблюдений {summary['observation']}")
        return report

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль main
===========

Командная строка: генерация графов семейств в формате Signed-DIMACS,
точное вычисление chi_b и chi, построение сертификатов-конструкций и запуск
кампаний проверки утверждений с отчетами в JSON.

Коды завершения: 0 - успех, 1 - нарушено утверждение, 2 - ошибка аргументов,
3 - ошибка ввода-вывода, 4 - бюджет исчерпан (известны только границы).
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

import networkx as nx

import settings
from campaigns import CAMPAIGNS, CampaignRunner, write_json
from constructions import CoverSpec, build_cover
from exceptions import BaseAppError, UsageError, handle_exception
from families import FamilyDescriptor, SignedSubset, gen_family
from sgcore import SignedGraph, read_sdimacs, write_sdimacs
from solver import chi_b_exact, chi_exact


logger = logging.getLogger(__name__)

GEN_FAMILIES = ("ks", "hks", "ss", "hss", "kneser", "schrijver", "borsuk")
CONSTRUCTIONS = {"bi-cover": "bi_cover", "critical": "critical_cover",
                 "bi-plus": "bi_plus_cover", "equator": "equator_cover"}


def cmd_gen(args: argparse.Namespace) -> int:
    """
    Генерирует граф семейства и сохраняет его в Signed-DIMACS.

    Возвращает:
        int: Код завершения.
    """
    family = "borsuk_disc" if args.family == "borsuk" else args.family
    desc = FamilyDescriptor(family, args.n or 0, args.k or 0, args.d, args.eps, args.res, args.seed)
    g = gen_family(desc)
    comments = [f"family {args.family}"]
    if family == "borsuk_disc":
        comments.append(f"d {args.d} eps {args.eps} res {args.res} seed {args.seed}")
    else:
        comments.append(f"n {args.n} k {args.k}")
    path = args.output
    if not os.path.splitext(path)[1]:
        path += settings.DIMACS_EXTENSION
    write_sdimacs(g, path, comments)
    print(f"{path}: {g.order} вершин, {g.edge_count} ребер")
    return settings.EXIT_OK


def _report_chi(result, certificate_path: Optional[str], no_timings: bool) -> int:
    data = result.to_dict()
    if no_timings:
        data["elapsed"] = 0.0
    if result.timed_out:
        print(f"бюджет исчерпан: {result.lower} <= значение <= {result.upper}")
    else:
        print(result.value)
    if certificate_path:
        write_json(data, certificate_path)
    return settings.EXIT_TIMEOUT if result.timed_out else settings.EXIT_OK


def cmd_chib(args: argparse.Namespace) -> int:
    """Точное сбалансированное хроматическое число графа из файла."""
    g = read_sdimacs(args.file)
    return _report_chi(chi_b_exact(g, budget=args.budget), args.certificate, args.no_timings)


def underlying_graph(g: SignedGraph) -> nx.Graph:
    """Неориентированная основа знакового графа (все пары со смежностью любого знака)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(sorted(g.positive | g.negative))
    return h


def cmd_chi(args: argparse.Namespace) -> int:
    """Точное хроматическое число неориентированной основы графа из файла."""
    g = read_sdimacs(args.file)
    return _report_chi(chi_exact(underlying_graph(g), budget=args.budget), args.certificate, args.no_timings)


def _parse_indices(text: Optional[str]) -> Optional[tuple]:
    if not text:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"Некорректный список индексов: {text}")


def cmd_construct(args: argparse.Namespace) -> int:
    """
    Строит сертификат конструкции, повторно проверяет его и сохраняет.

    Возвращает:
        int: 0, если сертификат прошел проверку, иначе 1.
    """
    kind = CONSTRUCTIONS[args.what]
    if kind != "equator_cover" and (args.n is None or args.k is None):
        raise UsageError(f"Для конструкции {args.what} нужны --n и --k")
    vertex = None
    if kind == "critical_cover":
        if not args.vertex:
            raise UsageError("Для конструкции critical нужна --vertex")
        vertex = SignedSubset.parse(args.vertex, args.n)
    spec = CoverSpec(kind, args.n or 0, args.k or 0, _parse_indices(args.indices), vertex, args.count,
                     args.target, args.d, args.eps, args.tau, args.res, args.seed)
    certificate = build_cover(spec)
    verified = certificate.verify()
    data = certificate.to_dict()
    data["verified"] = verified
    if args.output:
        write_json(data, args.output)
    print(f"{args.what}: {certificate.num_colours} классов, проверка {'пройдена' if verified else 'не пройдена'}")
    return settings.EXIT_OK if verified else settings.EXIT_ASSERTION


def cmd_verify(args: argparse.Namespace) -> int:
    """Запускает кампанию проверки и сохраняет отчет."""
    runner = CampaignRunner(args.theorem, args.max_n, args.samples, args.seed, args.budget, args.workers)
    logger.info(f"Кампания {args.theorem}: seed={args.seed}, workers={args.workers}")
    report = runner.run()
    if args.no_timings:
        report.strip_timings()
    path = args.report or os.path.join(settings.REPORTS_DIR, f"{args.theorem}.json")
    report.write(path)
    summary = report.summary()
    print(f"{args.theorem}: пройдено {summary['passed']}, нарушений {summary['failed']}, "
          f"таймаутов {summary['timeout']}, ошибок {summary['error']}, наблюдений {summary['observation']}; "
          f"отчет {path}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Сбалансированные раскраски знаковых графов Кнезера и Шрийвера")
    parser.add_argument("-v", "--verbose", action="store_true", help="Подробный лог (DEBUG)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Сгенерировать граф семейства")
    gen.add_argument("--family", choices=GEN_FAMILIES, required=True)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--d", type=int, default=1)
    gen.add_argument("--eps", type=float, default=0.05)
    gen.add_argument("--res", type=int, default=64)
    gen.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(handler=cmd_gen)

    for name, handler, help_text in (("chib", cmd_chib, "Точное chi_b"), ("chi", cmd_chi, "Точное chi")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--budget", type=float, default=settings.DEFAULT_BUDGET)
        p.add_argument("--certificate")
        p.add_argument("--no-timings", action="store_true")
        p.set_defaults(handler=handler)

    verify = sub.add_parser("verify", help="Запустить кампанию проверки")
    verify.add_argument("--theorem", choices=sorted(CAMPAIGNS), required=True)
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    verify.add_argument("--budget", type=float, default=settings.DEFAULT_BUDGET)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--report")
    verify.add_argument("--no-timings", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    construct = sub.add_parser("construct", help="Построить и проверить сертификат конструкции")
    construct.add_argument("--what", choices=sorted(CONSTRUCTIONS), required=True)
    construct.add_argument("--n", type=int)
    construct.add_argument("--k", type=int)
    construct.add_argument("--indices", help="Набор I через запятую, например 1,2,3")
    construct.add_argument("--vertex", help='Удаляемая вершина, например "{1,-2}"')
    construct.add_argument("--count", type=int)
    construct.add_argument("--target", choices=("hks", "hss", "ss", "ks"), default="hks")
    construct.add_argument("--d", type=int, default=1)
    construct.add_argument("--eps", type=float, default=0.05)
    construct.add_argument("--tau", type=float)
    construct.add_argument("--res", type=int, default=64)
    construct.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    construct.add_argument("-o", "--output")
    construct.set_defaults(handler=cmd_construct)
    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Точка входа командной строки.

    Параметры:
        argv (Optional[List[str]]): Аргументы (по умолчанию sys.argv[1:]).

    Возвращает:
        int: Код завершения.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.LOG_LEVEL, format=settings.LOG_FORMAT)
    logging.getLogger("solver").setLevel(logging.DEBUG if args.verbose else settings.SOLVER_LOG_LEVEL)
    try:
        return args.handler(args)
    except (BaseAppError, OSError) as e:
        return handle_exception(e)


if __name__ == "__main__":
    sys.exit(cli_main())

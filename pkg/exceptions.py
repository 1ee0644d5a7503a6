#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модуль для обработки исключений
===============================

Модуль предоставляет классы исключений для различных компонентов системы.
Используется для унифицированной обработки ошибок во всем приложении.
"""

import logging
from typing import Any, Optional, Sequence

import settings


logger = logging.getLogger(__name__)


class BaseAppError(Exception):
    """Базовый класс для всех исключений приложения."""
    pass


# Ошибки входных данных
class InputError(BaseAppError):
    """Ошибка: нарушено предусловие операции (некорректный аргумент)."""
    pass


class FormatError(InputError):
    """Ошибка разбора файла Signed-DIMACS."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"строка {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class UsageError(BaseAppError):
    """Ошибка: некорректные аргументы командной строки."""
    pass


# Ошибки проверяемых свойств
class PropertyViolationError(BaseAppError):
    """Ошибка: проверяемое математическое свойство не выполнено."""

    def __init__(self, message: str, details: Any = None):
        super().__init__(message)
        self.details = details


class CoverageError(PropertyViolationError):
    """Ошибка: покрытие не содержит некоторую точку."""

    def __init__(self, message: str, point: int):
        super().__init__(message, details={"point": point})
        self.point = point


# Сигналы повторной попытки и бюджета
class BoundaryAmbiguityError(BaseAppError):
    """Сигнал: точка вложения лежит на границе полусферы, нужно возмутить направление."""

    def __init__(self, message: str, ambiguous: Sequence[int] = ()):
        super().__init__(message)
        self.ambiguous = tuple(ambiguous)


class SolverTimeoutError(BaseAppError):
    """Бюджет времени поиска исчерпан."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


def exit_code_for(e: BaseException) -> int:
    """
    Возвращает код завершения командной строки для исключения.

    Параметры:
        e (BaseException): Исключение.

    Возвращает:
        int: Один из кодов settings.EXIT_*.
    """
    if isinstance(e, UsageError):
        return settings.EXIT_USAGE
    if isinstance(e, (OSError, FormatError)):
        return settings.EXIT_IO
    if isinstance(e, SolverTimeoutError):
        return settings.EXIT_TIMEOUT
    if isinstance(e, InputError):
        return settings.EXIT_USAGE
    return settings.EXIT_ASSERTION


def handle_exception(e: BaseException) -> int:
    """
    Обрабатывает исключение: пишет сообщение в лог и возвращает код завершения.

    Параметры:
        e (BaseException): Исключение для обработки.

    Возвращает:
        int: Код завершения.
    """
    logger.error(f"Произошла ошибка: {str(e)}")
    return exit_code_for(e)

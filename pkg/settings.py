import logging

# Уровень логирования всего приложения
LOG_LEVEL: int = logging.INFO
"""Уровень логирования корневого логгера (по умолчанию: INFO).
Возможные значения:
- logging.DEBUG - подробная отладочная информация (статистика поиска)
- logging.INFO - сообщения о кампаниях и вердиктах
- logging.WARNING - только предупреждения (таймауты, повторы) и ошибки
Ключ -v командной строки переключает уровень на DEBUG."""

# Уровень логирования для модуля solver
SOLVER_LOG_LEVEL: int = logging.WARNING
"""Уровень логирования для модуля solver (по умолчанию: WARNING).
Поиск порождает много сообщений, поэтому по умолчанию они скрыты.
Для вывода статистики узлов установите logging.DEBUG."""

# Формат строк лога
LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
"""Формат сообщений лога (тот же, что используется во всех модулях)."""

# Параметры точного поиска
DEFAULT_BUDGET: float = 60.0
"""Бюджет времени точного поиска в секундах (по умолчанию: 60 сек).
По истечении бюджета возвращается результат с явными границами, а не догадка."""

BUDGET_CHECK_INTERVAL: int = 512
"""Через сколько узлов поиска проверяется время (по умолчанию: 512)."""

BRUTEFORCE_MAX_ORDER: int = 12
"""Максимальный порядок графа для перебора всех разбиений (по умолчанию: 12)."""

SWITCHINGS_MAX_ORDER: int = 16
"""Максимальный порядок графа для перебора всех переключений (по умолчанию: 16).
Перебирается 2^(order-1) переключений."""

EXACT_CLIQUE_MAX_VERTICES: int = 64
"""Если граф дигонов содержит не больше вершин, нижняя оценка ищется
точным поиском клики; иначе используется жадная клика (по умолчанию: 64)."""

# Геометрические допуски
NORM_TOLERANCE: float = 1e-12
"""Векторы с нормой не больше этого значения считаются нулевыми (по умолчанию: 1e-12)."""

HEMISPHERE_TOLERANCE: float = 1e-9
"""Точки с |w·a| не больше этого значения считаются лежащими на границе
полусферы и помечаются как неоднозначные (по умолчанию: 1e-9)."""

HEMISPHERE_MAX_RETRIES: int = 8
"""Сколько раз направление возмущается при неоднозначной границе (по умолчанию: 8)."""

PERTURBATION_SCALE: float = 1e-7
"""Масштаб случайного возмущения направления при повторе (по умолчанию: 1e-7)."""

MAX_EXACT_COORDINATE: int = 2 ** 53
"""Граница точного представления координат момент-кривой в float64."""

# Ограничения кампаний
CONJECTURE_MAX_TARGET: int = 15
"""Максимальное число вершин искомого графа Шрийвера в проверке гипотезы."""

CONJECTURE_MAX_HOST: int = 40
"""Максимальное число вершин графа-носителя в проверке гипотезы."""

CONJECTURE_MAX_EXHAUSTIVE_BITS: int = 20
"""Полный перебор переключений допускается для не более чем 2^20 вариантов."""

K2_MAX_EXHAUSTIVE_EDGES: int = 20
"""Полный перебор наборов переворотов допускается при C(n,2) не больше 20."""

# Случайность и отчеты
DEFAULT_SEED: int = 20240601
"""Зерно генератора случайных чисел по умолчанию."""

DEFAULT_SAMPLES: int = 200
"""Количество случайных экземпляров в кампании по умолчанию."""

REPORTS_DIR: str = "reports"
"""Папка для отчетов кампаний (создается при первой записи)."""

DIMACS_EXTENSION: str = ".sdim"
"""Расширение файлов в формате Signed-DIMACS; добавляется к имени без расширения."""

# Коды завершения командной строки
EXIT_OK: int = 0
"""Успешное завершение."""

EXIT_ASSERTION: int = 1
"""Нарушено проверяемое утверждение."""

EXIT_USAGE: int = 2
"""Некорректные аргументы командной строки."""

EXIT_IO: int = 3
"""Ошибка чтения или записи файла."""

EXIT_TIMEOUT: int = 4
"""Бюджет исчерпан, результат содержит только границы."""

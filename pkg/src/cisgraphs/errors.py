"""Иерархия исключений cisgraphs."""


class CisGraphsError(Exception):
    """Базовое исключение библиотеки."""


class GraphFormatError(CisGraphsError, ValueError):
    """Текст не удалось разобрать как граф."""


class Graph6Error(GraphFormatError):
    """Некорректная строка graph6 (заголовок, длина, символы)."""


class GraphSizeError(CisGraphsError, ValueError):
    """Число вершин вне поддерживаемого диапазона."""


class NotACliqueError(CisGraphsError, ValueError):
    """Передано множество, которое не является кликой."""


class FamilyCapExceeded(CisGraphsError):
    """Семейство максимальных клик (независимых множеств) слишком велико."""

    def __init__(self, cap: int):
        super().__init__(f"семейство превысило лимит {cap} элементов")
        self.cap = cap


class UnsupportedSizeError(CisGraphsError):
    """Граф слишком велик для точной процедуры (LP, поиск нечётных дыр)."""


class UndecidedError(CisGraphsError):
    """Поиск исчерпал лимит шагов, не получив ответа ни "да", ни "нет"."""


class InternalVerificationError(CisGraphsError):
    """Результат противоречит проверяемой теореме или не прошёл перепроверку."""

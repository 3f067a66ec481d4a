"""Точный симплекс-метод на рациональных числах (две фазы, правило Бленда)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InternalVerificationError

logger = logging.getLogger(__name__)

Number = Fraction | int

INFEASIBLE = "infeasible"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[Tuple[Fraction, ...]] = None

    @property
    def feasible(self) -> bool:
        return self.status == OPTIMAL


class SimplexTableau:
    """
    Таблица для задачи min c·x при A x = b, x >= 0.

    Последний столбец каждой строки - правая часть; строка cost хранит
    приведённые стоимости и (в последней ячейке) минус значение цели.
    """

    def __init__(self, rows: List[List[Fraction]], basis: List[int], ncols: int):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols
        self.cost: List[Fraction] = [Fraction(0)] * (ncols + 1)
        self.pivots = 0

    def set_objective(self, c: Sequence[Fraction]) -> None:
        cost = list(c) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            factor = cost[b]
            if factor:
                row = self.rows[i]
                cost = [x - factor * y for x, y in zip(cost, row)]
        self.cost = cost

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        piv = row[j]
        row = [x / piv for x in row]
        self.rows[i] = row
        for k, other in enumerate(self.rows):
            if k != i and other[j]:
                f = other[j]
                self.rows[k] = [x - f * y for x, y in zip(other, row)]
        if self.cost[j]:
            f = self.cost[j]
            self.cost = [x - f * y for x, y in zip(self.cost, row)]
        self.basis[i] = j
        self.pivots += 1

    def run(self, allowed: int) -> str:
        """Правило Бленда по столбцам 0..allowed-1; возвращает "optimal" или "unbounded"."""
        while True:
            entering = next((j for j in range(allowed) if self.cost[j] < 0), None)
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (row[-1] / row[entering], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)

    def solution(self, size: int) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * size
        for i, b in enumerate(self.basis):
            if b < size:
                x[b] = self.rows[i][-1]
        return tuple(x)


def solve_lp(
    equalities: Sequence[Sequence[Number]],
    rhs: Sequence[Number],
    objective: Sequence[Number],
    maximize: bool = False,
) -> LPResult:
    """
    Точное решение задачи оптимизации c·x при A x = b, x >= 0.

    Args:
        equalities: строки матрицы A
        rhs: вектор b
        objective: вектор c
        maximize: искать максимум вместо минимума

    Returns:
        LPResult со статусом "infeasible" или "optimal", точным значением и точкой

    Raises:
        InternalVerificationError: задача неограничена или точка не проходит проверку
    """
    n = len(objective)
    m = len(equalities)
    rows: List[List[Fraction]] = []
    for index, (coeffs, b) in enumerate(zip(equalities, rhs)):
        row = [Fraction(c) for c in coeffs]
        value = Fraction(b)
        if value < 0:
            row = [-c for c in row]
            value = -value
        artificial = [Fraction(int(k == index)) for k in range(m)]
        rows.append(row + artificial + [value])
    basis = list(range(n, n + m))
    tableau = SimplexTableau(rows, basis, n + m)

    # фаза 1: минимизируем сумму искусственных переменных
    tableau.set_objective([Fraction(0)] * n + [Fraction(1)] * m)
    tableau.run(n + m)
    if -tableau.cost[-1] > 0:
        logger.debug("LP: несовместна (%d поворотов)", tableau.pivots)
        return LPResult(INFEASIBLE)

    # выводим искусственные из базиса; строки без ненулевых реальных столбцов избыточны
    keep = []
    for i in range(len(tableau.rows)):
        if tableau.basis[i] >= n:
            j = next((j for j in range(n) if tableau.rows[i][j] != 0), None)
            if j is None:
                continue
            tableau.pivot(i, j)
        keep.append(i)
    tableau.rows = [tableau.rows[i][:n] + [tableau.rows[i][-1]] for i in keep]
    tableau.basis = [tableau.basis[i] for i in keep]
    tableau.ncols = n

    sign = -1 if maximize else 1
    tableau.set_objective([Fraction(sign * Fraction(c)) for c in objective])
    if tableau.run(n) != OPTIMAL:
        raise InternalVerificationError("LP неограничена, хотя многогранник должен быть ограничен")
    point = tableau.solution(n)
    for coeffs, b in zip(equalities, rhs):
        if sum(Fraction(c) * x for c, x in zip(coeffs, point)) != b:
            raise InternalVerificationError("точка LP не удовлетворяет ограничениям")
    value = sum(Fraction(c) * x for c, x in zip(objective, point))
    logger.debug("LP: оптимум %s за %d поворотов", value, tableau.pivots)
    return LPResult(OPTIMAL, Fraction(value), point)

"""
Равностабильные и сильно равностабильные графы.

Весовые функции φ >= 0 с φ(S) = 1 для всех максимальных независимых S
образуют ограниченный многогранник P. Граф равностабилен, если P непуст и ни
одно другое непустое множество T не имеет на всём P значения φ(T) = 1
(выпуклое множество, не лежащее ни в одной из конечного числа гиперплоскостей,
не покрывается их объединением). Сильная равностабильность запрещает
постоянное значение φ(T) <= 1.

Постоянство φ(T) на P проверяется через аффинную оболочку: координаты,
тождественно равные нулю на P, находятся по одной LP на вершину, направления
оболочки - ядро системы [A; e_Z], и φ(T) постоянна тогда и только тогда,
когда характеристический вектор T ортогонален ядру. Литеральный перебор
min/max по всем T доступен как method="lp".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .core import Graph, bits_of, format_set, mask_of
from .enumeration import maximal_cliques, maximal_stable_sets
from .errors import InternalVerificationError, UnsupportedSizeError
from .lp import LPResult, solve_lp

logger = logging.getLogger(__name__)

AFFINE = "affine"
LP = "lp"


@dataclass(frozen=True)
class WeightPolytope:
    """{φ >= 0 : φ(S) = 1 для каждого максимального независимого S}."""

    graph: Graph
    stable_sets: Tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, limits: Optional[Limits] = None) -> "WeightPolytope":
        return cls(g, maximal_stable_sets(g, limits).sets)

    @property
    def rows(self) -> List[List[int]]:
        return [[(s >> v) & 1 for v in range(self.graph.n)] for s in self.stable_sets]


def lp_optimize(
    polytope: WeightPolytope,
    objective: Sequence[Fraction | int],
    maximize: bool = True,
    extra: Sequence[Tuple[Sequence[int], Fraction | int]] = (),
) -> LPResult:
    """Оптимизирует линейную функцию на многограннике весов (и дополнительных равенствах)."""
    rows = polytope.rows + [list(r) for r, _ in extra]
    rhs = [1] * len(polytope.stable_sets) + [b for _, b in extra]
    return solve_lp(rows, rhs, objective, maximize=maximize)


# --- Точная линейная алгебра ---

def _null_space(rows: Sequence[Sequence[int]], n: int) -> List[List[Fraction]]:
    """Базис ядра матрицы над Q (приведение к ступенчатому виду)."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                f = matrix[i][col]
                matrix[i] = [x - f * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * n
        vector[f] = Fraction(1)
        for i, col in enumerate(pivots):
            vector[col] = -matrix[i][f]
        basis.append(vector)
    return basis


def _integer_scaled(vector: Sequence[Fraction]) -> Tuple[List[int], int]:
    """(целые числители, общий знаменатель)."""
    denominator = lcm(*(x.denominator for x in vector)) if vector else 1
    return [int(x * denominator) for x in vector], denominator


def _subset_sums(weights: Sequence[int]) -> np.ndarray:
    """Суммы весов по всем 2^n подмножествам (индекс - маска)."""
    n = len(weights)
    bound = sum(abs(w) for w in weights)
    dtype = np.int64 if bound < 2 ** 62 else object
    sums = np.zeros(1 << n, dtype=dtype)
    for v, w in enumerate(weights):
        sums[1 << v: 1 << (v + 1)] = sums[: 1 << v] + w
    return sums


def _popcounts(n: int) -> np.ndarray:
    return _subset_sums([1] * n).astype(np.int64)


def _canonical_first(candidates: np.ndarray, n: int) -> Optional[int]:
    """Первое множество в порядке (мощность, маска)."""
    masks = np.nonzero(candidates)[0]
    if masks.size == 0:
        return None
    keys = _popcounts(n)[masks] * (1 << n) + masks
    return int(masks[int(np.argmin(keys))])


# --- Аффинная оболочка многогранника ---

@dataclass(frozen=True)
class AffineHull:
    feasible: bool
    zeros: int = 0
    point: Tuple[Fraction, ...] = ()
    interior: Tuple[Fraction, ...] = ()
    directions: Tuple[Tuple[int, ...], ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.directions)


@lru_cache(maxsize=256)
def affine_hull(g: Graph) -> AffineHull:
    """Нулевые координаты, внутренняя точка и направления аффинной оболочки P."""
    polytope = WeightPolytope.of(g)
    n = g.n
    zeros = 0
    points = []
    for v in range(n):
        result = lp_optimize(polytope, [int(i == v) for i in range(n)], maximize=True)
        if not result.feasible:
            logger.debug("многогранник весов пуст")
            return AffineHull(False)
        if result.value == 0:
            zeros |= 1 << v
        else:
            points.append(result.point)
    # среднее точек с положительной v-й координатой лежит в относительной внутренности
    if points:
        interior = tuple(sum(p[v] for p in points) / len(points) for v in range(n))
    else:
        interior = tuple(Fraction(0) for _ in range(n))
    rows = polytope.rows + [[int(i == v) for i in range(n)] for v in bits_of(zeros)]
    directions = tuple(tuple(_integer_scaled(d)[0]) for d in _null_space(rows, n))
    logger.debug("n=%d: %d нулевых координат, размерность %d", n, zeros.bit_count(), len(directions))
    return AffineHull(True, zeros, interior, interior, directions)


def _constant_masks(hull: AffineHull, n: int) -> np.ndarray:
    """Булев массив по маскам: φ(T) постоянна на P."""
    constant = np.ones(1 << n, dtype=bool)
    for d in hull.directions:
        constant &= (_subset_sums(d) == 0).astype(bool)
    return constant


def _scaled_values(point: Sequence[Fraction]) -> Tuple[np.ndarray, int]:
    numerators, denominator = _integer_scaled(point)
    return _subset_sums(numerators), denominator


def _stable_mask_array(g: Graph, stable_sets: Sequence[int]) -> np.ndarray:
    marks = np.zeros(1 << g.n, dtype=bool)
    marks[list(stable_sets)] = True
    return marks


def forced_value(g: Graph, subset: int, limits: Optional[Limits] = None) -> Optional[Fraction]:
    """Значение φ(T), если оно одно и то же на всём P; иначе None (и для пустого P)."""
    _check_size(g, limits)
    hull = affine_hull(g)
    if not hull.feasible:
        return None
    for d in hull.directions:
        if sum(d[v] for v in bits_of(subset)) != 0:
            return None
    return sum((hull.point[v] for v in bits_of(subset)), Fraction(0))


# --- Сертификаты ---

@dataclass(frozen=True)
class EquistableCertificate:
    """
    Вердикт с сертификатом.

    reason: "witness" (weights - весовая функция), "infeasible" (P пуст) или
    "forced" (subset имеет постоянное значение value на P).
    """

    holds: bool
    strong: bool
    reason: str
    weights: Optional[Tuple[Fraction, ...]] = None
    subset: Optional[int] = None
    value: Optional[Fraction] = None
    method: str = AFFINE

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": "strongly-equistable" if self.strong else "equistable",
            "holds": self.holds,
            "reason": self.reason,
            "method": self.method,
        }
        if self.weights is not None:
            data["weights"] = [_fraction_text(w) for w in self.weights]
        if self.subset is not None:
            data["subset"] = format_set(self.subset)
            data["value"] = _fraction_text(self.value)
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "EquistableCertificate":
        weights = data.get("weights")
        subset = data.get("subset")
        return cls(
            holds=bool(data["holds"]),
            strong=data["kind"] == "strongly-equistable",
            reason=data["reason"],
            weights=tuple(Fraction(w) for w in weights) if weights is not None else None,
            subset=mask_of(subset) if subset is not None else None,
            value=Fraction(data["value"]) if "value" in data else None,
            method=data.get("method", AFFINE),
        )


def _fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _check_size(g: Graph, limits: Optional[Limits]) -> None:
    limits = limits or DEFAULT_LIMITS
    if g.n > limits.lp_max_n:
        raise UnsupportedSizeError(f"равностабильность решается только для n <= {limits.lp_max_n}")


def _violations(g: Graph, strong: bool) -> Tuple[np.ndarray, np.ndarray, int]:
    """Маски с постоянным значением φ(T) = 1 (или <= 1) и массив значений."""
    hull = affine_hull(g)
    n = g.n
    constant = _constant_masks(hull, n)
    values, denominator = _scaled_values(hull.point)
    stable = _stable_mask_array(g, maximal_stable_sets(g).sets)
    candidates = constant & ~stable
    candidates[0] = False
    if strong:
        candidates &= (values <= denominator).astype(bool)
    else:
        candidates &= (values == denominator).astype(bool)
    return candidates, values, denominator


def _witness(g: Graph, limits: Limits) -> Tuple[Fraction, ...]:
    """
    Весовая функция: внутренняя точка плюс малый сдвиг вдоль оболочки, при
    котором ни одно непостоянное φ(T) не равно 1. Перепроверяется полностью.
    """
    hull = affine_hull(g)
    n = g.n
    interior = hull.interior
    if not hull.directions:
        return interior if verify_weights(g, interior) else _fail_witness(g)
    # общее направление: коэффициенты - степени основания больше любой |d(T)|
    base = 2 * max(sum(abs(x) for x in d) for d in hull.directions) + 1
    direction = [sum(d[v] * base ** k for k, d in enumerate(hull.directions)) for v in range(n)]
    room = [interior[v] / -direction[v] for v in range(n) if direction[v] < 0]
    step = min(room) / 2 if room else Fraction(1)
    for attempt in range(1, limits.witness_retries + 1):
        eps = step / attempt
        weights = tuple(interior[v] + eps * direction[v] for v in range(n))
        if verify_weights(g, weights):
            logger.debug("весовая функция найдена с попытки %d", attempt)
            return weights
    return _fail_witness(g)


def _fail_witness(g: Graph) -> Tuple[Fraction, ...]:
    raise InternalVerificationError(f"не удалось построить весовую функцию для графа на {g.n} вершинах")


def verify_weights(g: Graph, weights: Sequence[Fraction]) -> bool:
    """φ >= 0 и φ(T) = 1 ровно для максимальных независимых множеств T."""
    if len(weights) != g.n or any(w < 0 for w in weights):
        return False
    values, denominator = _scaled_values(weights)
    hits = (values == denominator).astype(bool)
    hits[0] = False
    return bool(np.array_equal(hits, _stable_mask_array(g, maximal_stable_sets(g).sets)))


def _decide(g: Graph, strong: bool, method: str, limits: Optional[Limits]) -> EquistableCertificate:
    limits = limits or DEFAULT_LIMITS
    _check_size(g, limits)
    hull = affine_hull(g)
    if not hull.feasible:
        return EquistableCertificate(False, strong, "infeasible", method=method)
    if method == LP:
        subset, value = _lp_forced_subset(g, strong)
    elif method == AFFINE:
        candidates, values, denominator = _violations(g, strong)
        subset = _canonical_first(candidates, g.n)
        value = Fraction(int(values[subset]), denominator) if subset is not None else None
    else:
        raise ValueError(f"неизвестный метод: {method}")
    if subset is not None:
        return EquistableCertificate(False, strong, "forced", subset=subset, value=value, method=method)
    return EquistableCertificate(True, strong, "witness", weights=_witness(g, limits), method=method)


def is_equistable(g: Graph, method: str = AFFINE, limits: Optional[Limits] = None) -> EquistableCertificate:
    """
    Равностабильность: P непуст и ни одно T вне семейства максимальных
    независимых множеств не имеет φ(T) = 1 на всём P.

    Raises:
        UnsupportedSizeError: n больше limits.lp_max_n
    """
    return _decide(g, False, method, limits)


def is_strongly_equistable(
    g: Graph, method: str = AFFINE, limits: Optional[Limits] = None
) -> EquistableCertificate:
    """Сильная равностабильность: ни одно T не имеет постоянного φ(T) <= 1 на P."""
    return _decide(g, True, method, limits)


def _lp_forced_subset(g: Graph, strong: bool) -> Tuple[Optional[int], Optional[Fraction]]:
    """Литеральный перебор: min и max φ(T) по LP для каждого T в каноническом порядке."""
    polytope = WeightPolytope.of(g)
    stable = set(polytope.stable_sets)
    order = sorted(range(1, 1 << g.n), key=lambda m: (m.bit_count(), m))
    for subset in order:
        if subset in stable:
            continue
        objective = [(subset >> v) & 1 for v in range(g.n)]
        low = lp_optimize(polytope, objective, maximize=False).value
        if strong and low > 1 or not strong and low != 1:
            continue
        high = lp_optimize(polytope, objective, maximize=True).value
        if low == high:
            return subset, low
    return None, None


def verify_certificate(g: Graph, cert: EquistableCertificate) -> bool:
    """Независимая перепроверка сертификата на графе g."""
    if cert.reason == "witness":
        return cert.holds and cert.weights is not None and verify_weights(g, cert.weights)
    if cert.reason == "infeasible":
        polytope = WeightPolytope.of(g)
        return not cert.holds and not lp_optimize(polytope, [0] * g.n).feasible
    if cert.reason == "forced":
        if cert.holds or cert.subset is None or not cert.subset:
            return False
        if cert.subset in maximal_stable_sets(g).sets:
            return False
        value = forced_value(g, cert.subset)
        if value is None or value != cert.value:
            return False
        return value <= 1 if cert.strong else value == 1
    return False


def verify_forced_subset(
    g: Graph,
    combination: Sequence[Tuple[Sequence[int] | int, int]],
    kind: str = "stable",
) -> int:
    """
    Проверяет комбинацию Σ ±x(M) максимальных независимых множеств (или клик
    при kind="clique") и возвращает множество T с x(T) = Σ ±x(M). Значение
    φ(T) на весах, равных 1 на всех членах, равно сумме знаков.

    Raises:
        ValueError: член не максимален или комбинация не 0/1
    """
    family = maximal_cliques(g).sets if kind == "clique" else maximal_stable_sets(g).sets
    vector = [0] * g.n
    for member, sign in combination:
        mask = member if isinstance(member, int) else mask_of(member)
        if mask not in family:
            raise ValueError(f"{format_set(mask)} не является максимальным множеством вида {kind}")
        if sign not in (1, -1):
            raise ValueError("коэффициенты комбинации должны быть ±1")
        for v in bits_of(mask):
            vector[v] += sign
    if any(x not in (0, 1) for x in vector):
        raise ValueError(f"комбинация не 0/1: {vector}")
    return mask_of(v for v, x in enumerate(vector) if x)

"""Поиск пересекающихся семейств клик и независимых множеств (слабо CIS, нормальные графы)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .config import DEFAULT_LIMITS, Limits
from .core import Graph, format_set, mask_of
from .enumeration import maximal_cliques, maximal_stable_sets
from .errors import InternalVerificationError, UndecidedError
from .recognizers import Certificate, Verdict

logger = logging.getLogger(__name__)

WEAKLY_CIS = "weakly-cis"
NORMAL = "normal"
MODES = (WEAKLY_CIS, NORMAL)


@dataclass(frozen=True)
class CrossIntersectingInstance:
    """
    Кандидаты - все максимальные клики и независимые множества. Переменная i
    (с 1) отвечает clique[i-1], затем идут независимые множества.
    """

    graph: Graph
    cliques: Tuple[int, ...]
    stables: Tuple[int, ...]
    mode: str

    @classmethod
    def build(cls, g: Graph, mode: str, limits: Optional[Limits] = None) -> "CrossIntersectingInstance":
        if mode not in MODES:
            raise ValueError(f"неизвестный режим покрытия: {mode}")
        return cls(g, maximal_cliques(g, limits).sets, maximal_stable_sets(g, limits).sets, mode)

    def clauses(self) -> List[List[int]]:
        k = len(self.cliques)
        result: List[List[int]] = []
        for i, c in enumerate(self.cliques, 1):
            for j, s in enumerate(self.stables, k + 1):
                if not c & s:
                    result.append([-i, -j])
        if self.mode == WEAKLY_CIS:
            targets = [(1 << u) | (1 << v) for u, v in self.graph.edges()]
            stable_targets = [(1 << u) | (1 << v) for u, v in self.graph.non_edges()]
        else:
            targets = stable_targets = [1 << v for v in range(self.graph.n)]
        for t in targets:
            result.append([i for i, c in enumerate(self.cliques, 1) if c & t == t])
        for t in stable_targets:
            result.append([j for j, s in enumerate(self.stables, k + 1) if s & t == t])
        return result


@dataclass(frozen=True)
class CoverCertificate:
    cliques: Tuple[int, ...]
    stables: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "cliques": [format_set(c) for c in self.cliques],
            "stables": [format_set(s) for s in self.stables],
        }

    @classmethod
    def from_lists(cls, cliques: Sequence[Sequence[int]], stables: Sequence[Sequence[int]],
                   shift: int = 0) -> "CoverCertificate":
        return cls(
            tuple(mask_of(v - shift for v in c) for c in cliques),
            tuple(mask_of(v - shift for v in s) for s in stables),
        )


@dataclass(frozen=True)
class SearchResult:
    found: bool
    certificate: Optional[CoverCertificate]
    backtracks: int


class _Solver:
    """DPLL: распространение единичных дизъюнктов, ветвление по самому короткому дизъюнкту."""

    def __init__(self, clauses: List[List[int]], variables: int, cap: int):
        self.clauses = clauses
        self.values: List[Optional[bool]] = [None] * (variables + 1)
        self.cap = cap
        self.backtracks = 0

    def _literal(self, lit: int) -> Optional[bool]:
        value = self.values[abs(lit)]
        if value is None:
            return None
        return value if lit > 0 else not value

    def _propagate(self, trail: List[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for clause in self.clauses:
                free = None
                open_count = 0
                satisfied = False
                for lit in clause:
                    state = self._literal(lit)
                    if state is True:
                        satisfied = True
                        break
                    if state is None:
                        open_count += 1
                        free = lit
                if satisfied:
                    continue
                if open_count == 0:
                    return False
                if open_count == 1:
                    self.values[abs(free)] = free > 0
                    trail.append(abs(free))
                    changed = True
        return True

    def _branch_literal(self) -> Optional[int]:
        best = None
        for clause in self.clauses:
            open_lits = []
            for lit in clause:
                state = self._literal(lit)
                if state is True:
                    open_lits = None
                    break
                if state is None:
                    open_lits.append(lit)
            if open_lits and (best is None or len(open_lits) < len(best)):
                best = open_lits
        return best[0] if best else None

    def solve(self) -> bool:
        trail: List[int] = []
        if not self._propagate(trail):
            self._undo(trail)
            return False
        lit = self._branch_literal()
        if lit is None:
            return True
        for choice in (lit, -lit):
            self.values[abs(choice)] = choice > 0
            if self.solve():
                return True
            self.values[abs(choice)] = None
            self.backtracks += 1
            if self.backtracks > self.cap:
                raise UndecidedError(f"поиск превысил {self.cap} возвратов")
        self._undo(trail)
        return False

    def _undo(self, trail: List[int]) -> None:
        for var in trail:
            self.values[var] = None


def exists_cross_intersecting(
    instance: CrossIntersectingInstance, limits: Optional[Limits] = None
) -> SearchResult:
    """
    Ищет попарно пересекающиеся семейства клик и независимых множеств с
    нужными покрытиями.

    Raises:
        UndecidedError: исчерпан limits.search_backtrack_cap
    """
    limits = limits or DEFAULT_LIMITS
    k = len(instance.cliques)
    total = k + len(instance.stables)
    clauses = instance.clauses()
    negative = {-lit for clause in clauses for lit in clause if lit < 0}
    solver = _Solver(clauses, total, limits.search_backtrack_cap)
    # множество, не участвующее ни в одном запрете, можно взять сразу
    for var in range(1, total + 1):
        if var not in negative:
            solver.values[var] = True
    found = solver.solve()
    logger.debug("%s: %d переменных, %d дизъюнктов, %d возвратов, ответ %s",
                 instance.mode, total, len(clauses), solver.backtracks, found)
    if not found:
        return SearchResult(False, None, solver.backtracks)
    cliques = tuple(c for i, c in enumerate(instance.cliques, 1) if solver.values[i])
    stables = tuple(s for j, s in enumerate(instance.stables, k + 1) if solver.values[j])
    certificate = CoverCertificate(cliques, stables)
    if not verify_cover(instance.graph, certificate, instance.mode):
        raise InternalVerificationError("найденная модель не проходит проверку покрытия")
    return SearchResult(True, certificate, solver.backtracks)


def _pairs_covered(family: Sequence[int], pairs: Sequence[Tuple[int, int]]) -> bool:
    return all(any(m >> u & 1 and m >> v & 1 for m in family) for u, v in pairs)


def verify_cover(g: Graph, certificate: CoverCertificate, mode: str) -> bool:
    """Прямая проверка: клики и независимые множества g, попарные пересечения, покрытия."""
    if not all(c and g.is_clique(c) for c in certificate.cliques):
        return False
    if not all(s and g.is_stable(s) for s in certificate.stables):
        return False
    if any(not c & s for c in certificate.cliques for s in certificate.stables):
        return False
    if mode == WEAKLY_CIS:
        return (_pairs_covered(certificate.cliques, g.edges())
                and _pairs_covered(certificate.stables, g.non_edges()))
    union_c = union_s = 0
    for c in certificate.cliques:
        union_c |= c
    for s in certificate.stables:
        union_s |= s
    return union_c == g.full and union_s == g.full


def _decide(g: Graph, mode: str, limits: Optional[Limits]) -> Verdict:
    result = exists_cross_intersecting(CrossIntersectingInstance.build(g, mode, limits), limits)
    if not result.found:
        return Verdict(False)
    return Verdict(True, Certificate("cross-intersecting", {"mode": mode, **result.certificate.to_json()}))


def is_weakly_cis(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """Рёбра покрыты кликами, не-рёбра - независимыми множествами, все пары пересекаются."""
    return _decide(g, WEAKLY_CIS, limits)


def is_normal(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """Вершины покрыты и кликами, и независимыми множествами, все пары пересекаются."""
    return _decide(g, NORMAL, limits)


def certificate_from_json(data: Dict[str, Any]) -> CoverCertificate:
    return CoverCertificate.from_lists(data["cliques"], data["stables"])

"""Распознаватели классов графов, не требующие LP и поиска семейств."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from .config import DEFAULT_LIMITS, Limits
from .core import Graph, bits_of, complement, format_set, mask_of, to_networkx
from .enumeration import (
    disjoint_pairs,
    maximal_cliques,
    maximal_cliques_big,
    maximal_stable_sets,
    simplicial_cliques,
    strong_cliques,
)
from .errors import InternalVerificationError, UnsupportedSizeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    """Свидетельство вердикта: вид и JSON-совместимые данные (списки вершин 0..n-1)."""

    kind: str
    payload: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind, **self.payload}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    certificate: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.holds


def _pair_certificate(kind: str, clique: int, stable: int) -> Certificate:
    return Certificate(kind, {"clique": format_set(clique), "stable": format_set(stable)})


# --- CIS и производные ---

def is_cis(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """Каждая максимальная клика пересекает каждое максимальное независимое множество."""
    pairs = disjoint_pairs(g, limits)
    if pairs:
        return Verdict(False, _pair_certificate("disjoint-pair", *pairs[0]))
    return Verdict(True)


def split_partitions(g: Graph, limits: Optional[Limits] = None) -> List[Tuple[int, int]]:
    """
    Все разбиения V = C ∪ S на клику и независимое множество.

    C либо максимальная клика K, либо K без одной вершины (S пересекает K
    не более чем по одной вершине), так что достаточно перебрать семейство клик.
    """
    found = set()
    for k in maximal_cliques(g, limits):
        for clique in [k] + [k & ~(1 << v) for v in bits_of(k)]:
            stable = g.full & ~clique
            if g.is_stable(stable):
                found.add(clique)
    return [(c, g.full & ~c) for c in sorted(found)]


def is_split(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    partitions = split_partitions(g, limits)
    if not partitions:
        return Verdict(False)
    return Verdict(True, _pair_certificate("split-partition", *partitions[0]))


def is_almost_cis(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """
    Ровно одна непересекающаяся пара (максимальная клика, максимальное независимое
    множество). Сверяется с описанием через единственное расщепление.
    """
    pairs = disjoint_pairs(g, limits)
    by_pairs = len(pairs) == 1
    by_partition = len(split_partitions(g, limits)) == 1
    if by_pairs != by_partition:
        raise InternalVerificationError(
            f"почти CIS: {len(pairs)} пар, но единственность расщепления = {by_partition}"
        )
    if by_pairs:
        return Verdict(True, _pair_certificate("disjoint-pair", *pairs[0]))
    return Verdict(False, Certificate("disjoint-pair-count", {"count": len(pairs)}))


def is_quasi_cis(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    pairs = disjoint_pairs(g, limits)
    if len(pairs) <= 1:
        return Verdict(True)
    return Verdict(False, Certificate("disjoint-pairs", {
        "pairs": [[format_set(c), format_set(s)] for c, s in pairs[:2]],
    }))


# --- Запрещённые подграфы на 4 вершинах ---

def _four_vertex_pattern(g: Graph, quad: Tuple[int, ...]) -> Optional[str]:
    mask = mask_of(quad)
    degrees = sorted((g.adj[v] & mask).bit_count() for v in quad)
    if degrees == [1, 1, 1, 1]:
        return "2K2"
    if degrees == [2, 2, 2, 2]:
        return "C4"
    if degrees == [1, 1, 2, 2]:
        return "P4"
    return None


def _find_pattern(g: Graph, patterns: Tuple[str, ...]) -> Optional[Certificate]:
    for quad in itertools.combinations(range(g.n), 4):
        found = _four_vertex_pattern(g, quad)
        if found in patterns:
            if found == "P4":
                quad = _p4_order(g, quad)
            return Certificate("induced-subgraph", {"pattern": found, "vertices": list(quad)})
    return None


def _p4_order(g: Graph, quad: Tuple[int, ...]) -> Tuple[int, ...]:
    mask = mask_of(quad)
    ends = [v for v in quad if (g.adj[v] & mask).bit_count() == 1]
    a = ends[0]
    path = [a]
    while len(path) < 4:
        step = g.adj[path[-1]] & mask & ~mask_of(path)
        path.append(next(bits_of(step)))
    return tuple(path)


def is_threshold(g: Graph) -> Verdict:
    """Нет индуцированных 2K2, C4, P4."""
    found = _find_pattern(g, ("2K2", "C4", "P4"))
    return Verdict(found is None, found)


def is_cograph(g: Graph) -> Verdict:
    """Нет индуцированного P4."""
    found = _find_pattern(g, ("P4",))
    return Verdict(found is None, found)


# --- Покрытия рёбер кликами ---

def _uncovered_edge(g: Graph, family) -> Optional[Tuple[int, int]]:
    for u, v in g.edges():
        if not any(m >> u & 1 and m >> v & 1 for m in family):
            return u, v
    return None


def is_edge_simplicial(g: Graph) -> Verdict:
    """Каждое ребро лежит в симплициальной клике N[v]. Граф без рёбер - вырожденно да."""
    family = simplicial_cliques(g).sets
    edge = _uncovered_edge(g, family)
    if edge is not None:
        return Verdict(False, Certificate("uncovered-edge", {"edge": list(edge)}))
    return Verdict(True, Certificate("edge-cover", {"sets": [format_set(m) for m in family]}))


def is_semi_weakly_cis(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """
    Рёбра покрываются сильными кликами.

    Достаточно максимальных клик: клика, содержащая сильную клику, сама
    сильная, поэтому каждую сильную клику покрытия можно расширить до
    максимальной.
    """
    family = strong_cliques(g, limits).sets
    edge = _uncovered_edge(g, family)
    if edge is not None:
        return Verdict(False, Certificate("uncovered-edge", {"edge": list(edge)}))
    return Verdict(True, Certificate("edge-cover", {"sets": [format_set(m) for m in family]}))


# --- Треугольное условие ---

def triangle_failure(g: Graph, stable: int) -> Optional[Tuple[int, int]]:
    """Ребро вне stable без общего соседа в stable (None, если таких нет)."""
    outside = g.full & ~stable
    for u in bits_of(outside):
        for v in bits_of(g.adj[u] & outside):
            if v > u and not g.adj[u] & g.adj[v] & stable:
                return u, v
    return None


def is_triangle(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """Для каждого максимального независимого S и ребра uv вне S есть s ∈ S, смежная с u и v."""
    for stable in maximal_stable_sets(g, limits):
        edge = triangle_failure(g, stable)
        if edge is not None:
            return Verdict(False, Certificate("triangle-failure", {
                "stable": format_set(stable), "edge": list(edge),
            }))
    return Verdict(True)


def is_weakly_triangle(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """
    Независимые множества с треугольным свойством покрывают все не-рёбра.

    Свойство проверяется для каждого множества отдельно, поэтому семейство
    всех таких множеств - единственный максимальный кандидат.
    """
    admissible = [s for s in maximal_stable_sets(g, limits) if triangle_failure(g, s) is None]
    for u, v in g.non_edges():
        if not any(s >> u & 1 and s >> v & 1 for s in admissible):
            return Verdict(False, Certificate("uncovered-nonedge", {"nonedge": [u, v]}))
    return Verdict(True, Certificate("nonedge-cover", {"sets": [format_set(s) for s in admissible]}))


def has_bad_p4(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """
    Есть индуцированный P4 a-b-c-d и максимальное независимое S ⊇ {a, d},
    в котором нет общего соседа b и c. holds = True означает "плохой P4 найден".
    """
    for stable in maximal_stable_sets(g, limits):
        outside = g.full & ~stable
        for b, c in g.edges():
            if not (outside >> b & 1 and outside >> c & 1):
                continue
            if g.adj[b] & g.adj[c] & stable:
                continue
            only_b = stable & g.adj[b] & ~g.adj[c]
            only_c = stable & g.adj[c] & ~g.adj[b]
            if only_b and only_c:
                a, d = next(bits_of(only_b)), next(bits_of(only_c))
                return Verdict(True, Certificate("bad-p4", {
                    "path": [a, b, c, d], "stable": format_set(stable),
                }))
    return Verdict(False)


# --- Совершенность ---

def _odd_hole(graph: nx.Graph) -> Optional[List[int]]:
    for cycle in nx.chordless_cycles(graph):
        if len(cycle) >= 5 and len(cycle) % 2 == 1:
            return list(cycle)
    return None


def is_perfect(g: Graph, limits: Optional[Limits] = None) -> Verdict:
    """
    Ни g, ни дополнение не содержат индуцированного нечётного цикла длины >= 5.

    Raises:
        UnsupportedSizeError: n больше limits.perfect_max_n
    """
    limits = limits or DEFAULT_LIMITS
    if g.n > limits.perfect_max_n:
        raise UnsupportedSizeError(f"проверка совершенности ограничена n <= {limits.perfect_max_n}")
    for in_complement, graph in ((False, g), (True, complement(g))):
        hole = _odd_hole(to_networkx(graph))
        if hole is not None:
            return Verdict(False, Certificate("odd-hole", {
                "cycle": hole, "in_complement": in_complement,
            }))
    return Verdict(True)


def check_split_characterization(g: Graph, limits: Optional[Limits] = None) -> bool:
    """split ⟺ почти CIS или ∩-рёберно симплициальный; расхождение - ошибка."""
    split = is_split(g, limits).holds
    cap_es = is_edge_simplicial(g).holds and is_edge_simplicial(complement(g)).holds
    other = is_almost_cis(g, limits).holds or cap_es
    if split != other:
        raise InternalVerificationError(
            f"split = {split}, но почти CIS или ∩-рёберно симплициальный = {other}"
        )
    return split


# --- Большие графы (networkx), для L и LLbar ---

def is_edge_simplicial_big(graph: nx.Graph) -> bool:
    simplicial = []
    for v in graph.nodes():
        closed = set(graph[v]) | {v}
        if all(graph.has_edge(a, b) for a, b in itertools.combinations(graph[v], 2)):
            simplicial.append(closed)
    return all(any(u in c and v in c for c in simplicial) for u, v in graph.edges())


def is_co_triangle_big(graph: nx.Graph) -> bool:
    """
    Треугольное условие для дополнения: для каждой максимальной клики C и
    не-ребра uv вне C есть вершина C, не смежная ни с u, ни с v.
    """
    cliques = maximal_cliques_big(graph)
    nodes = list(graph.nodes())
    for clique in cliques:
        members = sorted(clique)
        full = (1 << len(members)) - 1
        # маска соседей каждой внешней вершины внутри клики
        inside = {
            v: sum(1 << i for i, w in enumerate(members) if graph.has_edge(v, w))
            for v in nodes if v not in clique
        }
        for u, v in itertools.combinations(inside, 2):
            if graph.has_edge(u, v):
                continue
            if inside[u] | inside[v] == full:
                logger.debug("клика %s, не-ребро %s-%s: условие нарушено", members, u, v)
                return False
    return True


def is_triangle_big(graph: nx.Graph) -> bool:
    """Треугольное условие через дополнение; практично, пока у дополнения мало клик."""
    return is_co_triangle_big(nx.complement(graph))

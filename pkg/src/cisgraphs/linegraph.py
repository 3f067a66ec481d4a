"""Рёберные графы: построение, восстановление корня, паросочетания и CIS-критерий по корню."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .config import DEFAULT_LIMITS, Limits
from .core import (
    MAX_VERTICES,
    Graph,
    bits_of,
    disjoint_union,
    induced_subgraph,
    mask_of,
)
from .errors import GraphSizeError, InternalVerificationError
from .recognizers import is_cis

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


# --- Построение ---

def line_graph_with_edges(h: Graph) -> Tuple[Graph, List[Edge]]:
    """
    Рёберный граф L(h) вместе с разметкой вершин.

    Returns:
        (L, edges): вершина i графа L соответствует ребру edges[i] графа h,
        рёбра упорядочены лексикографически (u < v)
    """
    edges = h.edges()
    if not edges:
        raise GraphSizeError("у графа нет рёбер, рёберный граф пуст")
    if len(edges) > MAX_VERTICES:
        raise GraphSizeError(f"{len(edges)} рёбер, рёберный граф больше {MAX_VERTICES} вершин")
    incident = [0] * h.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph(len(edges), rows), edges


def line_graph(h: Graph) -> Graph:
    return line_graph_with_edges(h)[0]


def tilde(h: Graph) -> Graph:
    """h плюс личный висячий сосед n + i у каждой вершины i."""
    if 2 * h.n > MAX_VERTICES:
        raise GraphSizeError(f"tilde на {2 * h.n} вершинах не помещается в 64 бита")
    edges = h.edges() + [(i, h.n + i) for i in range(h.n)]
    return Graph.from_edges(2 * h.n, edges)


# --- Восстановление корня ---

@dataclass(frozen=True)
class RootResult:
    """
    Результат восстановления корня.

    root - граф H с L(H), изоморфным входу (None, если вход не рёберный граф);
    edge_of[v] - ребро H, отвечающее вершине v входа. Для компонент K3 корень
    неоднозначен: ambiguous = True, alternatives содержит оба варианта.
    """

    is_line_graph: bool
    root: Optional[Graph] = None
    edge_of: Tuple[Edge, ...] = ()
    ambiguous: bool = False
    alternatives: Tuple[Graph, ...] = ()


def _components(g: Graph) -> List[int]:
    seen = 0
    parts = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        parts.append(comp)
    return parts


def _bfs_order(g: Graph) -> List[int]:
    order = [0]
    seen = 1
    for v in order:
        for w in bits_of(g.adj[v] & ~seen):
            seen |= 1 << w
            order.append(w)
    return order


def _split_options(g: Graph, rest: int) -> List[Tuple[int, int]]:
    """
    Разбиения множества rest на две клики (A, B), B может быть пустым.

    Несмежные вершины обязаны попасть в разные части, поэтому каждая
    нетривиальная компонента дополнения G[rest] раскрашивается в два цвета.
    Вершина, смежная со всеми в rest, может стоять в части X только если
    другая часть содержит не больше одной вершины (иначе её второе ребро
    в другую часть покрывается дважды).
    """
    universal = 0
    comps: List[Tuple[int, int]] = []
    for v in bits_of(rest):
        if not rest & ~g.adj[v] & ~(1 << v):
            universal |= 1 << v
    left = rest & ~universal
    while left:
        start = left & -left
        side = [start, 0]
        frontier, colour = start, 0
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= rest & ~g.adj[v] & ~(1 << v)
            if reach & side[colour]:
                # нечётный цикл в дополнении: две несмежные вершины в одной части
                return []
            frontier = reach & ~side[colour ^ 1]
            side[colour ^ 1] |= reach
            colour ^= 1
        comps.append((side[0], side[1]))
        left &= ~(side[0] | side[1])

    bases = []
    for flips in itertools.product((False, True), repeat=max(len(comps) - 1, 0)):
        a = b = 0
        for index, (x, y) in enumerate(comps):
            if index and flips[index - 1]:
                x, y = y, x
            a |= x
            b |= y
        bases.append((a, b))

    options = set()
    for a0, b0 in bases:
        if not universal:
            options.add((a0, b0))
            continue
        if b0.bit_count() <= 1:
            options.add((a0 | universal, b0))
        if a0.bit_count() <= 1:
            options.add((a0, b0 | universal))
        for w in bits_of(universal):
            if not b0:
                options.add((a0 | (universal & ~(1 << w)), 1 << w))
            if not a0:
                options.add((1 << w, b0 | (universal & ~(1 << w))))
    normalized = set()
    for a, b in options:
        if not a:
            a, b = b, a
        if a and b and b < a:
            a, b = b, a
        if a:
            normalized.add((a, b))
    return sorted(normalized)


def _krausz_partition(g: Graph) -> Optional[List[int]]:
    """Разбиение рёбер связного графа на клики, каждая вершина не более чем в двух."""
    order = _bfs_order(g)
    covered = [0] * g.n
    count = [0] * g.n
    cliques: List[int] = []

    def place(clique: int) -> bool:
        for w in bits_of(clique):
            if count[w] >= 2 or covered[w] & clique:
                return False
        for w in bits_of(clique):
            covered[w] |= clique & ~(1 << w)
            count[w] += 1
        cliques.append(clique)
        return True

    def unplace(clique: int) -> None:
        cliques.pop()
        for w in bits_of(clique):
            covered[w] &= ~(clique & ~(1 << w))
            count[w] -= 1

    def solve(position: int) -> bool:
        if position == len(order):
            return True
        u = order[position]
        rest = g.adj[u] & ~covered[u]
        if not rest:
            return solve(position + 1)
        if count[u] == 2:
            return False
        if count[u] == 1:
            clique = rest | (1 << u)
            if not g.is_clique(clique) or not place(clique):
                return False
            if solve(position + 1):
                return True
            unplace(clique)
            return False
        for a, b in _split_options(g, rest):
            parts = [a | (1 << u)] + ([b | (1 << u)] if b else [])
            placed = []
            for part in parts:
                if not place(part):
                    break
                placed.append(part)
            if len(placed) == len(parts) and solve(position + 1):
                return True
            for part in reversed(placed):
                unplace(part)
        return False

    if not solve(0):
        return None
    return list(cliques)


def _root_from_partition(g: Graph, cliques: Sequence[int]) -> Tuple[List[Edge], int]:
    """Вершины корня: клики разбиения, затем по новой вершине на каждый недостающий конец."""
    ends: List[List[int]] = [[] for _ in range(g.n)]
    for index, clique in enumerate(cliques):
        for v in bits_of(clique):
            ends[v].append(index)
    size = len(cliques)
    edge_of = []
    for v in range(g.n):
        while len(ends[v]) < 2:
            ends[v].append(size)
            size += 1
        a, b = sorted(ends[v])
        edge_of.append((a, b))
    return edge_of, size


def _root_of_component(g: Graph) -> Optional[Tuple[List[Edge], int]]:
    cliques = _krausz_partition(g)
    if cliques is None:
        return None
    edge_of, size = _root_from_partition(g, cliques)
    for u, v in itertools.combinations(range(g.n), 2):
        shares = bool(set(edge_of[u]) & set(edge_of[v]))
        if shares != g.has_edge(u, v):
            raise InternalVerificationError(f"разбиение Краузе не воспроизводит смежность {u}-{v}")
    return edge_of, size


def _is_triangle_graph(g: Graph) -> bool:
    return g.n == 3 and g.edge_count() == 3


def root_graph(g: Graph) -> RootResult:
    """
    Восстанавливает корень H с L(H) ≅ g перебором разбиений Краузе.

    Несвязный вход обрабатывается покомпонентно, корни объединяются. Для K3
    найденный корень K3, а K1,3 указывается как альтернатива.
    """
    parts = _components(g)
    edge_of: List[Optional[Edge]] = [None] * g.n
    root_edges: List[Edge] = []
    offset = 0
    triangles = []
    for comp in parts:
        sub = induced_subgraph(g, comp)
        found = _root_of_component(sub)
        if found is None:
            logger.debug("компонента %s не является рёберным графом", list(bits_of(comp)))
            return RootResult(is_line_graph=False)
        local_edges, size = found
        if _is_triangle_graph(sub):
            triangles.append(offset)
        for v, (a, b) in zip(bits_of(comp), local_edges):
            edge_of[v] = (offset + a, offset + b)
            root_edges.append((offset + a, offset + b))
        offset += size
    if offset > MAX_VERTICES:
        raise GraphSizeError(f"корень содержит {offset} вершин, больше {MAX_VERTICES}")
    root = Graph.from_edges(offset, root_edges)
    if not triangles:
        return RootResult(True, root, tuple(edge_of))
    return RootResult(
        True,
        root,
        tuple(edge_of),
        ambiguous=True,
        alternatives=(root, _claw_variant(parts, g)),
    )


def _claw_variant(parts: Sequence[int], g: Graph) -> Graph:
    """Тот же корень, но каждая компонента K3 заменена на K1,3."""
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    result: Optional[Graph] = None
    for comp in parts:
        sub = induced_subgraph(g, comp)
        if _is_triangle_graph(sub):
            piece = claw
        else:
            piece = root_graph(sub).root
        result = piece if result is None else disjoint_union(result, piece)
    return result


# --- Паросочетания ---

@dataclass(frozen=True)
class MatchingResult:
    edges: Tuple[Edge, ...]
    weight: int
    backend: str


def _edge_weights(h: Graph, weights: Optional[Mapping[Edge, int]]) -> Dict[Edge, int]:
    result = {}
    for u, v in h.edges():
        if weights is None:
            result[(u, v)] = 1
        else:
            result[(u, v)] = weights.get((u, v), weights.get((v, u), 1))
    return result


def _blossom(h: Graph, weights: Dict[Edge, int]) -> MatchingResult:
    graph = nx.Graph()
    graph.add_nodes_from(range(h.n))
    for (u, v), w in weights.items():
        graph.add_edge(u, v, weight=w)
    matching = nx.max_weight_matching(graph, maxcardinality=False, weight="weight")
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in matching))
    return MatchingResult(edges, sum(weights[e] for e in edges), "blossom")


def _exhaustive(h: Graph, weights: Dict[Edge, int]) -> MatchingResult:
    """Ветви и границы: наименьшая свободная вершина либо не покрыта, либо берёт соседа."""
    best_weight = -1
    best: List[Edge] = []
    chosen: List[Edge] = []
    # грубая оценка сверху: самое тяжёлое ребро у каждой вершины, пополам
    heaviest = [0] * h.n
    for (u, v), w in weights.items():
        heaviest[u] = max(heaviest[u], w)
        heaviest[v] = max(heaviest[v], w)

    def bound(free: int) -> float:
        return sum(heaviest[v] for v in bits_of(free)) / 2

    def search(free: int, weight: int) -> None:
        nonlocal best_weight, best
        if weight > best_weight:
            best_weight = weight
            best = list(chosen)
        if not free or weight + bound(free) <= best_weight:
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for w in bits_of(h.adj[v] & rest):
            chosen.append((v, w))
            search(rest & ~(1 << w), weight + weights[(v, w)])
            chosen.pop()
        search(rest, weight)

    search(h.full, 0)
    return MatchingResult(tuple(sorted(best)), best_weight, "exhaustive")


def max_weight_matching(
    h: Graph,
    weights: Optional[Mapping[Edge, int]] = None,
    backend: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> MatchingResult:
    """
    Паросочетание максимального веса.

    Args:
        h: граф
        weights: веса рёбер (u, v); по умолчанию все 1
        backend: "blossom" (networkx) или "exhaustive" (перебор, до
            limits.exhaustive_matching_max_edges рёбер, иначе blossom)

    Returns:
        MatchingResult с рёбрами, весом и фактически использованным backend
    """
    limits = limits or DEFAULT_LIMITS
    backend = backend or limits.matching_backend
    table = _edge_weights(h, weights)
    if backend == "exhaustive":
        if len(table) <= limits.exhaustive_matching_max_edges:
            return _exhaustive(h, table)
        logger.info("%d рёбер больше лимита перебора, используется blossom", len(table))
    elif backend != "blossom":
        raise ValueError(f"неизвестный backend паросочетаний: {backend}")
    return _blossom(h, table)


# --- CIS-критерий по корню ---

def find_bull_subgraph(h: Graph) -> Optional[Tuple[int, int, int, int, int]]:
    """
    Бык как подграф (не обязательно индуцированный).

    Returns:
        (x, y, z, d, e): треугольник xyz, висячее ребро xd и ye, d != e
        вне треугольника; None, если быка нет
    """
    for a, b, c in itertools.combinations(range(h.n), 3):
        if not (h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c)):
            continue
        triangle = mask_of((a, b, c))
        for x, y in itertools.permutations((a, b, c), 2):
            outer_x = h.adj[x] & ~triangle
            outer_y = h.adj[y] & ~triangle
            if not outer_x or not outer_y:
                continue
            for d in bits_of(outer_x):
                rest = outer_y & ~(1 << d)
                if rest:
                    e = next(bits_of(rest))
                    z = next(bits_of(triangle & ~(1 << x) & ~(1 << y)))
                    return x, y, z, d, e
    return None


def neighborhood_graph(h: Graph, x: int) -> Tuple[Graph, Dict[Edge, int], List[int]]:
    """
    H(x): подграф, порождённый рёбрами, инцидентными соседу x, но не самому x.

    Returns:
        (граф на перенумерованных вершинах, веса рёбер, исходные номера вершин);
        вес 2 у рёбер с обоими концами в N(x), иначе 1
    """
    nx_mask = h.adj[x]
    edges = [
        (u, v) for u, v in h.edges()
        if x not in (u, v) and (nx_mask >> u & 1 or nx_mask >> v & 1)
    ]
    vertices = sorted({w for e in edges for w in e})
    index = {v: i for i, v in enumerate(vertices)}
    if not vertices:
        return Graph.empty(1), {}, [x]
    sub = Graph.from_edges(len(vertices), [(index[u], index[v]) for u, v in edges])
    weights = {}
    for u, v in edges:
        both = nx_mask >> u & 1 and nx_mask >> v & 1
        weights[(min(index[u], index[v]), max(index[u], index[v]))] = 2 if both else 1
    return sub, weights, vertices


@dataclass(frozen=True)
class CisLineVerdict:
    """
    Вердикт для L(h). При отказе указан бык либо вершина x и паросочетание
    в H(x), покрывающее N(x) (в исходной нумерации h).
    """

    cis: bool
    bull: Optional[Tuple[int, ...]] = None
    vertex: Optional[int] = None
    matching: Tuple[Edge, ...] = ()
    backend: str = ""
    checked_vertices: Tuple[int, ...] = field(default=())

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "cis": self.cis,
            "checked_vertices": list(self.checked_vertices),
            "backend": self.backend,
        }
        if self.bull is not None:
            data["bull"] = list(self.bull)
        if self.vertex is not None:
            data["vertex"] = self.vertex
            data["matching"] = [list(e) for e in self.matching]
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CisLineVerdict":
        bull = data.get("bull")
        return cls(
            bool(data["cis"]),
            bull=tuple(bull) if bull is not None else None,
            vertex=data.get("vertex"),
            matching=tuple((int(u), int(v)) for u, v in data.get("matching", [])),
            backend=data.get("backend", ""),
            checked_vertices=tuple(data.get("checked_vertices", [])),
        )


def is_cis_line_root(
    h: Graph,
    backend: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> CisLineVerdict:
    """Полиномиальная проверка: L(h) - CIS граф."""
    limits = limits or DEFAULT_LIMITS
    bull = find_bull_subgraph(h)
    if bull is not None:
        return CisLineVerdict(False, bull=bull)
    checked = []
    used = backend or limits.matching_backend
    for x in range(h.n):
        degree = h.degree(x)
        if degree <= 1:
            continue
        if degree == 2 and h.is_clique(h.adj[x]):
            continue
        checked.append(x)
        sub, weights, vertices = neighborhood_graph(h, x)
        result = max_weight_matching(sub, weights, backend=backend, limits=limits)
        used = result.backend
        if result.weight == degree:
            matching = tuple(sorted((vertices[u], vertices[v]) for u, v in result.edges))
            logger.debug("вершина %d: паросочетание %s покрывает N(x)", x, matching)
            return CisLineVerdict(False, vertex=x, matching=matching, backend=used,
                                  checked_vertices=tuple(checked))
    return CisLineVerdict(True, backend=used, checked_vertices=tuple(checked))


def _is_bull(h: Graph, bull: Sequence[int]) -> bool:
    if len(bull) != 5 or len(set(bull)) != 5 or not all(0 <= v < h.n for v in bull):
        return False
    x, y, z, d, e = bull
    return (h.has_edge(x, y) and h.has_edge(y, z) and h.has_edge(x, z)
            and h.has_edge(x, d) and h.has_edge(y, e))


def _covers_neighborhood(h: Graph, x: int, matching: Sequence[Edge]) -> bool:
    """Паросочетание из не меньше чем двух рёбер H(x), покрывающее N(x)."""
    if len(matching) < 2:
        return False
    used = 0
    for u, v in matching:
        if x in (u, v) or not h.has_edge(u, v):
            return False
        if not (h.adj[x] >> u & 1 or h.adj[x] >> v & 1):
            return False
        edge = (1 << u) | (1 << v)
        if used & edge:
            return False
        used |= edge
    return h.adj[x] & ~used == 0


def verify_cis_line_verdict(h: Graph, verdict: CisLineVerdict, limits: Optional[Limits] = None) -> bool:
    """
    Перепроверка вердикта для L(h). Отказ проверяется по быку или по
    паросочетанию в H(x); положительный ответ пересчитывается другим
    backend и, если L(h) помещается в 64 вершины, прямой проверкой CIS.
    """
    if verdict.bull is not None:
        return not verdict.cis and _is_bull(h, verdict.bull)
    if verdict.vertex is not None:
        return (not verdict.cis and 0 <= verdict.vertex < h.n
                and _covers_neighborhood(h, verdict.vertex, verdict.matching))
    if not verdict.cis:
        return False
    other = "exhaustive" if verdict.backend == "blossom" else "blossom"
    if not is_cis_line_root(h, backend=other, limits=limits).cis:
        return False
    if 0 < h.edge_count() <= MAX_VERTICES:
        return is_cis(line_graph(h), limits=limits).holds
    return True


def maximal_matchings(h: Graph) -> List[Tuple[Edge, ...]]:
    """Все максимальные по включению паросочетания (перебор)."""
    edges = h.edges()
    found: List[Tuple[Edge, ...]] = []

    def extend(index: int, used: int, chosen: List[Edge]) -> None:
        if index == len(edges):
            if all(used >> u & 1 or used >> v & 1 for u, v in edges):
                found.append(tuple(chosen))
            return
        u, v = edges[index]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append((u, v))
            extend(index + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()
        extend(index + 1, used, chosen)

    extend(0, 0, [])
    return found


def check_condition_vii(h: Graph) -> bool:
    """
    Оракул: нет быка, и для любого максимального паросочетания M и любой
    непокрытой вершины x окрестность x лежит в одном ребре M.
    """
    if find_bull_subgraph(h) is not None:
        return False
    for matching in maximal_matchings(h):
        covered = mask_of(w for e in matching for w in e)
        for x in bits_of(h.full & ~covered):
            if not h.adj[x]:
                continue
            if not any((h.adj[x] & ~mask_of(e)) == 0 for e in matching):
                return False
    return True


@dataclass(frozen=True)
class CisLineGraphReport:
    """Ответ для рёберного графа g: корень, вердикт по корню и прямая проверка."""

    root: RootResult
    verdict: Optional[CisLineVerdict]
    brute_force_cis: Optional[bool]


def is_cis_line_graph(g: Graph, limits: Optional[Limits] = None) -> CisLineGraphReport:
    """Восстанавливает корень g и применяет к нему критерий; сверяет с прямой проверкой CIS."""
    root = root_graph(g)
    if not root.is_line_graph:
        return CisLineGraphReport(root, None, None)
    verdict = is_cis_line_root(root.root, limits=limits)
    direct = is_cis(g, limits=limits).holds
    if direct != verdict.cis:
        raise InternalVerificationError(
            f"критерий по корню ({verdict.cis}) расходится с прямой проверкой CIS ({direct})"
        )
    return CisLineGraphReport(root, verdict, direct)
